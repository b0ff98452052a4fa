"""Shared fixtures, hypothesis strategies and brute-force oracles.

The oracles here deliberately avoid the library's algorithms: connectivity by
set closure over the raw edge list, biconnectivity by the removal definition,
cliques by subset enumeration.  Tests compare the fast code paths against
these.
"""

from __future__ import annotations

import string
from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from raagsplit import SimplicialGraph, parse_graph

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def star():
    """Three-leaved star: the F3 x Z fixture."""
    return parse_graph("c l1\nc l2\nc l3")


@pytest.fixture
def two_triangles():
    """Two triangles abc and def joined by the bridge cd."""
    return parse_graph("a b\na c\nb c\nc d\nd e\nd f\ne f")


@pytest.fixture
def triangle():
    return parse_graph("a b\nb c\na c")


@pytest.fixture
def square():
    return parse_graph("a b\nb c\nc d\na d")


@pytest.fixture
def path3():
    return parse_graph("a b\nb c")


# ---------------------------------------------------------------- strategies


@st.composite
def graphs(draw, min_vertices=1, max_vertices=7, connected=False):
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    names = list(string.ascii_lowercase[:n])
    pairs = list(combinations(names, 2))
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, picks) if keep]
    if connected and n > 1:
        # thread a random spanning tree through so connectivity is guaranteed
        order = draw(st.permutations(names))
        attach = [draw(st.integers(min_value=0, max_value=i - 1)) for i in range(1, n)]
        edges = edges + [(order[i], order[j]) for i, j in zip(range(1, n), attach)]
    return SimplicialGraph(names, edges)


# ------------------------------------------------------------------- oracles


def oracle_components(vertices, edges):
    """Connected pieces by naive closure over the edge list."""
    remaining = set(vertices)
    comps = []
    while remaining:
        comp = {min(remaining)}
        while True:
            grown = set(comp)
            for u, v in edges:
                if u in comp:
                    grown.add(v)
                if v in comp:
                    grown.add(u)
            if grown == comp:
                break
            comp = grown
        comps.append(tuple(sorted(comp)))
        remaining -= comp
    return sorted(comps)


def oracle_is_connected(g: SimplicialGraph) -> bool:
    return len(oracle_components(g.vertices, g.edges)) == 1


def oracle_cut_vertices(g: SimplicialGraph):
    """Removal definition: deleting the vertex increases the component count."""
    base = len(oracle_components(g.vertices, g.edges))
    cuts = []
    for v in g.vertices:
        rest = [x for x in g.vertices if x != v]
        rest_edges = [e for e in g.edges if v not in e]
        if rest and len(oracle_components(rest, rest_edges)) > base:
            cuts.append(v)
    return tuple(sorted(cuts))


def oracle_is_biconnected(g: SimplicialGraph) -> bool:
    if len(g.vertices) < 2:
        return False
    return oracle_is_connected(g) and not oracle_cut_vertices(g)


def oracle_clique_counts(g: SimplicialGraph):
    edge_set = {frozenset(e) for e in g.edges}
    counts = []
    for k in range(len(g.vertices) + 1):
        c = sum(
            1
            for sub in combinations(g.vertices, k)
            if all(frozenset(p) in edge_set for p in combinations(sub, 2))
        )
        counts.append(c)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def oracle_bfs_distance(g: SimplicialGraph, start, goal, avoid=None):
    """Plain level-by-level distance, or None when unreachable."""
    if start == goal:
        return 0
    frontier = {start}
    seen = {start, avoid} if avoid else {start}
    dist = 0
    while frontier:
        dist += 1
        nxt = set()
        for x in frontier:
            for y in g.neighbors(x):
                if y in seen:
                    continue
                if y == goal:
                    return dist
                seen.add(y)
                nxt.add(y)
        frontier = nxt
    return None


def oracle_hamiltonian_accepts(g: SimplicialGraph, seq) -> bool:
    """Direct adjacency reading of the embedded-cycle definition."""
    seq = list(seq)
    if sorted(seq) != sorted(g.vertices) or len(seq) < 3:
        return False
    edge_set = {frozenset(e) for e in g.edges}
    return all(frozenset((seq[i], seq[(i + 1) % len(seq)])) in edge_set for i in range(len(seq)))
