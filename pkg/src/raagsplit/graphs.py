"""Finite simplicial graphs: parsing, induced subgraphs, paths, cycles, cliques.

Vertices are identified by their names (tokens over ``[A-Za-z0-9_]``) and all
tie-breaking is lexicographic over names, so every operation here is
deterministic and byte-reproducible.  Graphs are immutable after construction
and safe to share between threads.
"""

from __future__ import annotations

import re
from collections import deque
from itertools import combinations
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Domain error: an operation was applied outside its contract."""


class ParseError(GraphError):
    """Malformed edge-list input; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class CapacityError(GraphError):
    """Input exceeds the size this desk-scale tool is willing to handle."""


_TOKEN_RE = re.compile(r"[A-Za-z0-9_]+\Z")
_valid_tokens: set[str] = set()

CLIQUE_VERTEX_CAP = 64


def _check_token(name: str) -> str:
    if name not in _valid_tokens:
        if not isinstance(name, str) or not _TOKEN_RE.match(name):
            raise GraphError(f"invalid vertex name {name!r}")
        _valid_tokens.add(name)
    return name


class SimplicialGraph:
    """A finite simple graph with named vertices.

    ``vertices`` keeps declaration order (duplicates merged); ``edges`` is the
    canonical sorted tuple of sorted pairs.  Neighbor lists are pre-sorted so
    breadth-first traversals expand lexicographically.
    """

    __slots__ = ("vertices", "edges", "_adj")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[Sequence[str]] = ()):
        seen: dict[str, None] = {}
        for name in vertices:
            seen.setdefault(_check_token(name), None)
        adj: dict[str, set[str]] = {v: set() for v in seen}
        edge_set: set[tuple[str, str]] = set()
        for pair in edges:
            try:
                u, v = pair
            except ValueError:
                raise GraphError(f"edge {pair!r} is not a vertex pair") from None
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            if u not in adj or v not in adj:
                missing = u if u not in adj else v
                raise GraphError(f"edge endpoint {missing!r} is not a declared vertex")
            edge_set.add((u, v) if u < v else (v, u))
            adj[u].add(v)
            adj[v].add(u)
        self.vertices: tuple[str, ...] = tuple(seen)
        self.edges: tuple[tuple[str, str], ...] = tuple(sorted(edge_set))
        self._adj: dict[str, tuple[str, ...]] = {v: tuple(sorted(ns)) for v, ns in adj.items()}

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[str]], isolated: Iterable[str] = ()) -> "SimplicialGraph":
        """Build a graph whose vertex order is first appearance in ``edges``."""
        order: dict[str, None] = {}
        pairs = []
        for pair in edges:
            u, v = pair
            order.setdefault(u, None)
            order.setdefault(v, None)
            pairs.append((u, v))
        for v in isolated:
            order.setdefault(v, None)
        return cls(order, pairs)

    def neighbors(self, v: str) -> tuple[str, ...]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"vertex {v!r} not in graph") from None

    def has_edge(self, u: str, v: str) -> bool:
        return u in self._adj and v in self._adj[u]

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def __contains__(self, v: str) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"SimplicialGraph(vertices={list(self.vertices)!r}, edges={[list(e) for e in self.edges]!r})"


def parse_graph(text: str) -> SimplicialGraph:
    """Parse the line-oriented edge-list format.

    Each nonempty, non-comment line declares either one isolated vertex or one
    edge (two whitespace-separated tokens, endpoints implicitly declared).
    Lines starting with ``#`` are comments.  Duplicate declarations merge.

    >>> g = parse_graph("a b\\nb c")
    >>> g.vertices, g.edges
    (('a', 'b', 'c'), (('a', 'b'), ('b', 'c')))
    """
    order: dict[str, None] = {}
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        for tok in tokens:
            if not _TOKEN_RE.match(tok):
                raise ParseError(f"malformed token {tok!r}", lineno)
        if len(tokens) == 1:
            order.setdefault(tokens[0], None)
        elif len(tokens) == 2:
            u, v = tokens
            if u == v:
                raise ParseError(f"self-loop declared at {u!r}", lineno)
            order.setdefault(u, None)
            order.setdefault(v, None)
            pairs.append((u, v))
        else:
            raise ParseError(f"expected 1 or 2 tokens, got {len(tokens)}", lineno)
    return SimplicialGraph(order, pairs)


def induced_subgraph(g: SimplicialGraph, members: Iterable[str]) -> SimplicialGraph:
    """Subgraph on ``members`` with every edge of ``g`` between them."""
    keep = set(members)
    for v in keep:
        if v not in g:
            raise GraphError(f"vertex {v!r} not in host graph")
    if len(keep) == len(g.vertices):
        return g
    verts = [v for v in g.vertices if v in keep]
    edges = [e for e in g.edges if e[0] in keep and e[1] in keep]
    return SimplicialGraph(verts, edges)


def connected_components(g: SimplicialGraph) -> list[tuple[str, ...]]:
    """Maximal connected pieces, each sorted, ordered by least member."""
    seen: set[str] = set()
    comps: list[tuple[str, ...]] = []
    for start in sorted(g.vertices):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


def _bfs_parents(g: SimplicialGraph, start: str, avoid: Optional[str] = None) -> dict[str, Optional[str]]:
    """Breadth-first parents from ``start`` in g minus ``avoid``.

    Neighbors expand in lexicographic order, so the parent chain of any reached
    vertex spells the lexicographically least shortest path from ``start``.
    """
    parents: dict[str, Optional[str]] = {start: None}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y == avoid or y in parents:
                continue
            parents[y] = x
            queue.append(y)
    return parents


def shortest_path_avoiding(g: SimplicialGraph, u: str, w: str, v: str) -> Optional[list[str]]:
    """Shortest u-w path in g minus v, or None if removal of v separates them.

    Among all shortest paths the lexicographically least vertex sequence is
    returned.
    """
    for x in (u, w, v):
        if x not in g:
            raise GraphError(f"vertex {x!r} not in graph")
    if len({u, w, v}) != 3:
        raise GraphError("u, w, v must be three distinct vertices")
    parents = _bfs_parents(g, u, avoid=v)
    if w not in parents:
        return None
    path = [w]
    while parents[path[-1]] is not None:
        path.append(parents[path[-1]])  # type: ignore[arg-type]
    path.reverse()
    return path


def verify_hamiltonian_cycle(g: SimplicialGraph, cycle: Sequence[str]) -> bool:
    """True iff ``cycle`` visits every vertex of g exactly once along edges.

    Invalid witnesses (wrong length, repeats, foreign vertices, missing edges)
    return False; this never raises.
    """
    seq = list(cycle)
    if len(seq) < 3 or len(seq) != len(g.vertices):
        return False
    if len(set(seq)) != len(seq):
        return False
    if any(x not in g for x in seq):
        return False
    for a, b in zip(seq, seq[1:] + seq[:1]):
        if b not in g.neighbors(a):
            return False
    return True


def clique_counts(g: SimplicialGraph) -> list[int]:
    """Number of complete induced subgraphs by size; entry 0 is the empty clique.

    Counts every clique once by extending in increasing vertex order over
    bitmask candidate sets.

    >>> clique_counts(SimplicialGraph("abc", [("a", "b"), ("a", "c"), ("b", "c")]))
    [1, 3, 3, 1]
    """
    n = len(g.vertices)
    if n > CLIQUE_VERTEX_CAP:
        raise CapacityError(f"clique enumeration capped at {CLIQUE_VERTEX_CAP} vertices, got {n}")
    order = sorted(g.vertices)
    index = {v: i for i, v in enumerate(order)}
    nbr = [0] * n
    for u, v in g.edges:
        i, j = index[u], index[v]
        nbr[i] |= 1 << j
        nbr[j] |= 1 << i
    counts = [0] * (n + 1)

    def grow(candidates: int, size: int) -> None:
        counts[size] += 1
        while candidates:
            low = candidates & -candidates
            candidates ^= low
            grow(nbr[low.bit_length() - 1] & candidates, size + 1)

    grow((1 << n) - 1, 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def euler_characteristic(g: SimplicialGraph) -> int:
    """Alternating clique sum: the Euler characteristic of A(g)'s cube complex."""
    return sum(c if k % 2 == 0 else -c for k, c in enumerate(clique_counts(g)))


def two_edge_segments(g: SimplicialGraph) -> list[tuple[str, str, str]]:
    """All paths u-v-w with u < w, sorted; the unordered two-edge segments of g."""
    segs = []
    for v in g.vertices:
        for u, w in combinations(g.neighbors(v), 2):
            segs.append((u, v, w))
    return sorted(segs)
