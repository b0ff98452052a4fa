"""Presentations of decomposed groups and exact abelianization checks.

A presentation stores relators as freely reduced words of (generator index,
exponent) letters with exponents +-1.  Abelianization goes through an exact
integer Smith normal form, so torsion is certified absent rather than sampled.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import cut_vertices
from .graphs import GraphError, SimplicialGraph, euler_characteristic, induced_subgraph
from .jsj import GoGEdge, GraphOfGroups, RaagGroup

Word = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]


def free_reduce(word: Word) -> Word:
    """Cancel adjacent inverse letters until none remain."""
    out: list[tuple[int, int]] = []
    for gen, exp in word:
        if out and out[-1][0] == gen and out[-1][1] == -exp:
            out.pop()
        else:
            out.append((gen, exp))
    return tuple(out)


def _commutator(i: int, j: int) -> Word:
    return ((i, 1), (j, 1), (i, -1), (j, -1))


def raag_presentation(g: SimplicialGraph) -> Presentation:
    """Generators are the vertices; one commutator relator per edge."""
    index = {v: i for i, v in enumerate(g.vertices)}
    relators = tuple(_commutator(index[u], index[v]) for u, v in g.edges)
    return Presentation(generators=g.vertices, relators=relators)


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _spanning_tree(gog: GraphOfGroups) -> set[str]:
    """Breadth-first spanning tree (edge ids) from the least vertex id."""
    ids = sorted(v.id for v in gog.vertices)
    adj: dict[str, list[tuple[str, GoGEdge]]] = {vid: [] for vid in ids}
    for e in gog.edges:
        if e.is_loop:
            continue
        a, b = e.ends
        adj[a].append((b, e))
        adj[b].append((a, e))
    for vid in adj:
        adj[vid].sort(key=lambda item: (item[0], item[1].id))
    root = ids[0]
    seen = {root}
    tree: set[str] = set()
    queue = [root]
    while queue:
        x = queue.pop(0)
        for y, e in adj[x]:
            if y not in seen:
                seen.add(y)
                tree.add(e.id)
                queue.append(y)
    if len(seen) != len(ids):
        raise GraphError("graph of groups has a disconnected base graph")
    return tree


def emit_presentation(gog: GraphOfGroups) -> Presentation:
    """Fundamental group presentation of a graph of groups.

    Vertex-group generator copies identified along spanning-tree edges are
    merged eagerly into one symbol named by the underlying source-graph
    vertex, so a decomposition of A(g) presents itself on g's own vertex
    names.  Non-tree edges contribute their stable letter and a conjugation
    relator; tree identifications then reduce to nothing.
    """
    tree = _spanning_tree(gog)
    uf = _UnionFind()
    for v in gog.vertices:
        for x in v.group.generators():
            uf.find((v.id, x))
    for e in gog.edges:
        if e.id in tree:
            uf.union((e.ends[0], e.inclusions[0]), (e.ends[1], e.inclusions[1]))

    class_name: dict = {}
    for v in gog.vertices:
        for x in v.group.generators():
            root = uf.find((v.id, x))
            prior = class_name.get(root)
            if prior is not None and prior != x:
                raise GraphError(f"merged generators disagree on a name: {prior!r} vs {x!r}")
            class_name[root] = x

    generators: list[str] = []
    index: dict = {}
    by_name: dict[str, int] = {}

    def symbol(vid: str, x: str) -> int:
        root = uf.find((vid, x))
        if root not in index:
            name = class_name[root]
            if name in by_name:
                raise GraphError(f"generator name {name!r} is carried by two distinct symbols")
            index[root] = len(generators)
            by_name[name] = index[root]
            generators.append(name)
        return index[root]

    for v in gog.vertices:
        for x in v.group.generators():
            symbol(v.id, x)

    relators: list[Word] = []
    for v in gog.vertices:
        if isinstance(v.group, RaagGroup):
            span = set(v.group.vertices)
            for a, b in gog.source.edges:
                if a in span and b in span:
                    relators.append(_commutator(symbol(v.id, a), symbol(v.id, b)))
    for e in gog.edges:
        img0 = symbol(e.ends[0], e.inclusions[0])
        img1 = symbol(e.ends[1], e.inclusions[1])
        if e.id in tree:
            word = free_reduce(((img0, 1), (img1, -1)))
        else:
            if e.stable_letter is None:
                raise GraphError(f"non-tree edge {e.id} has no stable letter")
            if e.stable_letter in by_name:
                raise GraphError(f"stable letter {e.stable_letter!r} collides with a generator")
            t = len(generators)
            by_name[e.stable_letter] = t
            generators.append(e.stable_letter)
            word = free_reduce(((t, 1), (img0, 1), (t, -1), (img1, -1)))
        if word:
            relators.append(word)
    return Presentation(generators=tuple(generators), relators=tuple(relators))


def smith_normal_form(matrix: list[list[int]]) -> list[int]:
    """Nonzero elementary divisors d1 | d2 | ... of an integer matrix.

    Exact arbitrary-precision row and column reduction; the empty list means
    rank zero.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if any(len(row) != cols for row in matrix):
        raise GraphError("matrix is not rectangular")
    a = [[int(x) for x in row] for row in matrix]
    divisors: list[int] = []
    t = 0
    while t < rows and t < cols:
        # move a least-magnitude nonzero entry of the trailing block to (t, t)
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
                        break
            if dirty:
                continue
            # row and column are clear; force divisibility of the rest
            for i in range(t + 1, rows):
                bad = next((j for j in range(t + 1, cols) if a[i][j] % a[t][t]), None)
                if bad is not None:
                    a[t] = [x + y for x, y in zip(a[t], a[i])]
                    dirty = True
                    break
            if not dirty:
                break
        divisors.append(a[t][t])
        t += 1
    return divisors


def abelianization(p: Presentation) -> tuple[int, list[int]]:
    """Free rank and torsion of the abelianized presentation."""
    n = len(p.generators)
    matrix = []
    for word in p.relators:
        row = [0] * n
        for gen, exp in word:
            row[gen] += exp
        matrix.append(row)
    divisors = smith_normal_form(matrix) if matrix else []
    return n - len(divisors), [d for d in divisors if d > 1]


def _descriptor_euler(g: SimplicialGraph, group) -> int:
    if isinstance(group, RaagGroup):
        return euler_characteristic(induced_subgraph(g, group.vertices))
    return 0  # cyclic groups have Euler characteristic zero


def check_euler(g: SimplicialGraph, gog: GraphOfGroups) -> bool:
    """Euler characteristic of g equals the vertex-group sum of the decomposition.

    Edge groups are all infinite cyclic and contribute zero.
    """
    total = sum(_descriptor_euler(g, v.group) for v in gog.vertices)
    return euler_characteristic(g) == total


def check_coverage(g: SimplicialGraph, gog: GraphOfGroups) -> bool:
    """Every source vertex is accounted for and edge groups sit on cut vertices."""
    covered: set[str] = set()
    for v in gog.vertices:
        if isinstance(v.group, RaagGroup):
            covered.update(v.group.vertices)
        else:
            covered.add(v.group.generator)
    for e in gog.edges:
        if e.stable_letter is not None:
            covered.add(e.stable_letter)
    if covered != set(g.vertices):
        return False
    cuts = set(cut_vertices(g))
    return all(e.group.generator in cuts for e in gog.edges)
