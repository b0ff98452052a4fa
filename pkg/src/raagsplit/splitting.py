"""Free and infinite-cyclic splittings of right-angled Artin groups.

A(g) splits freely iff g is disconnected (two or more vertices), and for three
or more vertices A(g) splits over Z iff g fails to be biconnected.  Both
verdicts come with machine-checkable witnesses: an amalgam decomposition of the
defining graph over a single shared vertex when a splitting exists, and a cover
of the two-edge segments by induced subgraphs with Hamiltonian cycles when none
does.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .blocks import cut_vertices, is_biconnected
from .graphs import (
    GraphError,
    SimplicialGraph,
    _bfs_parents,
    connected_components,
    induced_subgraph,
    two_edge_segments,
    verify_hamiltonian_cycle,
)

Z_SPLIT_YES = "yes"
Z_SPLIT_NO = "no"
Z_SPLIT_HNN_SMALL_CASE = "hnn_small_case"


@dataclass(frozen=True)
class FreeSplitWitness:
    """A two-part vertex partition exhibiting a free product decomposition."""

    parts: tuple[tuple[str, ...], tuple[str, ...]]


@dataclass(frozen=True)
class ZSplitWitness:
    """Two proper induced subgraphs covering g and meeting in one vertex.

    Certifies A(g) = A(side1) * A(side2) amalgamated over the cyclic group on
    ``vertex``.
    """

    side1: tuple[str, ...]
    side2: tuple[str, ...]
    vertex: str


@dataclass(frozen=True)
class NonSplitCover:
    """Per two-edge segment: an induced subgraph and its Hamiltonian cycle.

    Keys are normalized segments (u, v, w) with u < w; values are the sorted
    span and the cycle witness starting at the segment's middle vertex.
    """

    entries: dict[tuple[str, str, str], tuple[tuple[str, ...], tuple[str, ...]]] = field(
        default_factory=dict
    )


@dataclass(frozen=True)
class SmallCaseWitness:
    """Verdict tag for one- and two-vertex graphs: "Z", "F2" or "Z^2"."""

    tag: str


Witness = Union[FreeSplitWitness, ZSplitWitness, NonSplitCover, SmallCaseWitness]


@dataclass(frozen=True)
class SplitReport:
    free_split: bool
    z_split: str  # one of Z_SPLIT_YES / Z_SPLIT_NO / Z_SPLIT_HNN_SMALL_CASE
    witness: Witness


def splits_freely(g: SimplicialGraph) -> tuple[bool, Optional[FreeSplitWitness]]:
    """Whether A(g) is a nontrivial free product, with a partition witness."""
    if len(g.vertices) < 2:
        raise GraphError("free splitting is characterized for two or more vertices")
    comps = connected_components(g)
    if len(comps) == 1:
        return False, None
    first = comps[0]
    rest = tuple(sorted(v for v in g.vertices if v not in set(first)))
    return True, FreeSplitWitness(parts=(first, rest))


def z_split_witness(g: SimplicialGraph) -> ZSplitWitness:
    """Amalgam witness for a non-biconnected graph on three or more vertices.

    Cut-vertex case: split off the least component of g minus the least cut
    vertex.  Disconnected case without cut vertices: pair the least component
    with the least outside vertex; if the outside is that single vertex the
    roles swap so both sides stay proper.
    """
    if len(g.vertices) < 3:
        raise GraphError("amalgam witnesses need at least three vertices")
    cuts = cut_vertices(g)
    allv = set(g.vertices)
    if cuts:
        v = cuts[0]
        comp = connected_components(induced_subgraph(g, allv - {v}))[0]
        side1 = tuple(sorted(set(comp) | {v}))
        side2 = tuple(sorted(allv - set(comp)))
        return ZSplitWitness(side1=side1, side2=side2, vertex=v)
    comps = connected_components(g)
    if len(comps) == 1:
        raise GraphError("graph is biconnected; no Z-splitting exists")
    first = comps[0]
    outside = sorted(allv - set(first))
    if len(outside) == 1:
        # complement is a single vertex; swap sides to keep both proper
        v = first[0]
        side1 = tuple(sorted(set(outside) | {v}))
        side2 = first
        return ZSplitWitness(side1=side1, side2=side2, vertex=v)
    v = outside[0]
    side1 = tuple(sorted(set(first) | {v}))
    side2 = tuple(outside)
    return ZSplitWitness(side1=side1, side2=side2, vertex=v)


def nonsplit_cover(g: SimplicialGraph) -> NonSplitCover:
    """Hamiltonian cover certifying that A(g) does not split over Z.

    For each two-edge segment u-v-w the shortest u-w path avoiding v closes up
    with the segment into a Hamiltonian cycle of the induced subgraph it spans;
    biconnectivity guarantees the path exists.
    """
    if len(g.vertices) < 3 or not is_biconnected(g):
        raise GraphError("Hamiltonian covers exist for biconnected graphs on >= 3 vertices")
    entries: dict[tuple[str, str, str], tuple[tuple[str, ...], tuple[str, ...]]] = {}
    for v in sorted(g.vertices):
        nv = g.neighbors(v)
        for i, u in enumerate(nv):
            if i + 1 == len(nv):
                break
            parents = _bfs_parents(g, u, avoid=v)
            for w in nv[i + 1 :]:
                path = [w]
                while parents[path[-1]] is not None:
                    path.append(parents[path[-1]])  # type: ignore[arg-type]
                path.reverse()
                delta = tuple(sorted({v, *path}))
                cycle = (v, *path)
                entries[(u, v, w)] = (delta, cycle)
    return NonSplitCover(entries=dict(sorted(entries.items())))


def cover_defects(g: SimplicialGraph, cover: NonSplitCover) -> list[str]:
    """All reasons ``cover`` fails to certify g; empty means the cover is valid."""
    defects = []
    segments = set(two_edge_segments(g))
    for seg in sorted(segments):
        if seg not in cover.entries:
            defects.append(f"missing segment {seg}")
    for seg, (delta, cycle) in sorted(cover.entries.items()):
        u, v, w = seg
        label = f"entry {seg}"
        if seg not in segments:
            defects.append(f"{label}: not a two-edge segment of the graph")
            continue
        if any(x not in g for x in delta):
            defects.append(f"{label}: span leaves the graph")
            continue
        if len(delta) < 3:
            defects.append(f"{label}: span has fewer than three vertices")
            continue
        if not {u, v, w} <= set(delta):
            defects.append(f"{label}: span does not contain the segment")
            continue
        if not verify_hamiltonian_cycle(induced_subgraph(g, delta), cycle):
            defects.append(f"{label}: cycle is not Hamiltonian in the span")
    return defects


def verify_cover(g: SimplicialGraph, cover: NonSplitCover) -> bool:
    """True iff every two-edge segment is covered and every cycle checks out."""
    return not cover_defects(g, cover)


def splits_over_z(g: SimplicialGraph) -> SplitReport:
    """Full verdict on splittings of A(g) over the infinite cyclic group.

    One- and two-vertex graphs are handled directly (Z does not split; F2 and
    Z^2 split as HNN extensions over Z).  For three or more vertices the
    verdict is the failure of biconnectivity, witnessed by an amalgam or a
    Hamiltonian cover.
    """
    n = len(g.vertices)
    if n == 0:
        raise GraphError("splitting verdicts need a nonempty graph")
    if n == 1:
        return SplitReport(free_split=False, z_split=Z_SPLIT_NO, witness=SmallCaseWitness("Z"))
    disconnected = len(connected_components(g)) > 1
    if n == 2:
        tag = "F2" if disconnected else "Z^2"
        return SplitReport(
            free_split=disconnected, z_split=Z_SPLIT_HNN_SMALL_CASE, witness=SmallCaseWitness(tag)
        )
    if is_biconnected(g):
        return SplitReport(free_split=False, z_split=Z_SPLIT_NO, witness=nonsplit_cover(g))
    return SplitReport(
        free_split=disconnected, z_split=Z_SPLIT_YES, witness=z_split_witness(g)
    )
