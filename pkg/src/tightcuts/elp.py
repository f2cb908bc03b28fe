"""Barriers, 2-separations, the cuts they induce, and ELP sets.

A barrier is a vertex set whose removal leaves exactly |B| odd components;
each odd component's boundary is a barrier-cut.  A 2-separation is a
2-vertex set whose removal disconnects the graph into all-even components;
grouping the components and adding either separation vertex gives the
2-separation cuts.  ELP(C) collects the non-trivial cuts of both kinds that
sit compatibly with a given non-trivial tight cut C.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import (BadCertificate, EmptySet, GraphMismatch, GraphTooLarge, NotTight,
                     TrivialCut)
from .graphcore import (Cut, MultiGraph, graph_memo, is_laminar, make_cut,
                        removed_components)
from .matching import _require_matching_covered, is_tight

_BARRIER_ENUM_LIMIT = 20


@dataclass(frozen=True)
class Barrier:
    vertices: frozenset
    odd_components: tuple  # the components of G - B witnessing o(G-B) = |B|
    maximal: Optional[bool] = None  # set by enumerate_nontrivial_barriers

    @property
    def is_trivial(self) -> bool:
        return len(self.vertices) == 1


@dataclass(frozen=True)
class TwoSeparation:
    pair: frozenset
    components: tuple  # all components of G - pair, each of even order

    def __repr__(self):
        return f"TwoSeparation({sorted(self.pair)!r})"


@dataclass(frozen=True)
class BarrierCutWitness:
    barrier: Barrier
    component: frozenset  # the odd component whose boundary is the cut


@dataclass(frozen=True)
class TwoSeparationCutWitness:
    separation: TwoSeparation
    group: tuple  # the components on the shore side
    attach_vertex: object  # the separation vertex joined to the group


@dataclass(frozen=True)
class ElpCut:
    cut: Cut
    kind: str  # "barrier-cut" | "two-separation-cut"
    certificate: object


def is_barrier(g: MultiGraph, vertices: Iterable) -> bool:
    """True iff removing the set leaves exactly that many odd components."""
    b = frozenset(vertices)
    if not b:
        raise EmptySet("a barrier is nonempty")
    return removed_components(g, b).odd_count == len(b)


def _barrier_value(g: MultiGraph, b: frozenset, maximal=None) -> Barrier:
    report = removed_components(g, b)
    return Barrier(b, report.components, maximal)


def enumerate_nontrivial_barriers(g: MultiGraph) -> list:
    """All barriers of size >= 2 of a matching covered graph.

    In a matching covered graph a non-trivial barrier induces no edges, so the
    walk extends independent sets only; each candidate is then checked
    directly.  Exponential in principle; hard-capped by vertex count.
    """
    if g.n > _BARRIER_ENUM_LIMIT:
        raise GraphTooLarge(f"barrier enumeration is capped at {_BARRIER_ENUM_LIMIT} vertices")
    _require_matching_covered(g)

    def compute():
        order = g.order
        idx = g.index
        adj = g.adj_masks
        found = []

        def extend(current, current_mask, start):
            if len(current) >= 2 and removed_components(g, current).odd_count == len(current):
                found.append(frozenset(current))
            for k in range(start, g.n):
                if adj[k] & current_mask:
                    continue  # keep the candidate independent
                current.append(order[k])
                extend(current, current_mask | (1 << k), k + 1)
                current.pop()

        extend([], 0, 0)
        out = []
        for b in found:
            maximal = not any(other > b for other in found)
            out.append(_barrier_value(g, b, maximal))
        out.sort(key=lambda bar: sorted(bar.vertices))
        return tuple(out)

    return list(graph_memo(g, "nontrivial_barriers", compute))


def barrier_cuts(g: MultiGraph) -> list:
    """Every cut bounding an odd component of a non-trivial barrier, deduplicated."""

    def compute():
        out = []
        seen = set()
        for barrier in enumerate_nontrivial_barriers(g):
            for comp in barrier.odd_components:
                if len(comp) % 2 == 0:
                    continue
                cut = make_cut(g, comp)
                if cut.shore_pair in seen:
                    continue
                seen.add(cut.shore_pair)
                out.append(ElpCut(cut, "barrier-cut", BarrierCutWitness(barrier, comp)))
        return tuple(out)

    return list(graph_memo(g, "barrier_cuts", compute))


def is_barrier_cut(g: MultiGraph, shore: Iterable) -> Optional[Barrier]:
    """A barrier having one side of the cut as an odd component, if any exists.

    If G[X] is to be a component of G - B then N(X) <= B <= complement(X), so
    the search extends N(X) by subsets of the remaining far-side vertices,
    smallest extension first.
    """
    cut = make_cut(g, shore)
    _require_matching_covered(g)

    def compute():
        for side in sorted(cut.shore_pair, key=lambda s: s != cut.shore):
            if len(side) % 2 == 0:
                continue
            comps = removed_components(g, g.vertices - side).components
            if len(comps) != 1:
                continue  # the side itself must be connected
            nbhd = frozenset().union(*(g.adjacency[v] for v in side)) - side
            far = g.vertices - side
            pool = sorted(far - nbhd)
            for size in range(len(pool) + 1):
                for extra in combinations(pool, size):
                    b = nbhd | frozenset(extra)
                    if not b:
                        continue
                    if removed_components(g, b).odd_count == len(b):
                        return _barrier_value(g, b)
        return None

    return graph_memo(g, ("barrier_cut", cut.shore_pair), compute)


def two_separations(g: MultiGraph) -> list:
    """All 2-vertex sets whose removal leaves >= 2 components, all even."""
    _require_matching_covered(g)

    def compute():
        out = []
        order = g.order
        for a, b in combinations(order, 2):
            report = removed_components(g, (a, b))
            if len(report.components) >= 2 and report.odd_count == 0:
                out.append(TwoSeparation(frozenset((a, b)), report.components))
        return tuple(out)

    return list(graph_memo(g, "two_separations", compute))


def two_separation_cuts(g: MultiGraph, sep: TwoSeparation) -> list:
    """Cuts from grouping the components of G - {u, v} and attaching u or v.

    Every bipartition of the components into two nonempty groups gives two
    shores (group plus either separation vertex); deduplicated by shore pair.
    """
    comps = sep.components
    u, v = sorted(sep.pair)
    out = []
    seen = set()
    # fix component 0 on the group side so each unordered bipartition comes up once
    rest = comps[1:]
    for pick in range(1 << len(rest)):
        group = [comps[0]] + [c for k, c in enumerate(rest) if (pick >> k) & 1]
        if len(group) == len(comps):
            continue  # the other group would be empty
        base = frozenset().union(*group)
        for attach in (u, v):
            cut = make_cut(g, base | {attach})
            if cut.shore_pair in seen:
                continue
            seen.add(cut.shore_pair)
            out.append(ElpCut(cut, "two-separation-cut",
                              TwoSeparationCutWitness(sep, tuple(group), attach)))
    return out


def all_two_separation_cuts(g: MultiGraph) -> list:
    """Deduplicated 2-separation cuts over every 2-separation of the graph."""

    def compute():
        out = []
        seen = set()
        for sep in two_separations(g):
            for elp in two_separation_cuts(g, sep):
                if elp.cut.shore_pair in seen:
                    continue
                seen.add(elp.cut.shore_pair)
                out.append(elp)
        return tuple(out)

    return list(graph_memo(g, "all_two_separation_cuts", compute))


def elp_set(g: MultiGraph, cut: Cut) -> list:
    """Members of ELP(C): sheltered non-trivial barrier-cuts plus laminar
    non-trivial 2-separation cuts, one per shore pair (C itself may qualify)."""
    if cut.graph != g:
        raise GraphMismatch("cut belongs to a different graph")
    if cut.is_trivial:
        raise TrivialCut("ELP sets are defined for non-trivial cuts")
    verdict = is_tight(g, cut.shore)
    if not verdict.tight:
        raise NotTight("ELP sets are defined for tight cuts", verdict.witness)

    def compute():
        out = []
        seen = set()
        for elp in barrier_cuts(g):
            b = elp.certificate.barrier.vertices
            if not (b <= cut.shore or b <= cut.complement):
                continue  # barrier must be sheltered by C
            if elp.cut.is_trivial or elp.cut.shore_pair in seen:
                continue
            assert is_laminar(elp.cut, cut), "sheltered barrier-cut must be laminar"
            seen.add(elp.cut.shore_pair)
            out.append(elp)
        for elp in all_two_separation_cuts(g):
            if elp.cut.is_trivial or elp.cut.shore_pair in seen:
                continue
            if not is_laminar(elp.cut, cut):
                continue
            seen.add(elp.cut.shore_pair)
            out.append(elp)
        return tuple(out)

    return list(graph_memo(g, ("elp_set", cut.shore_pair), compute))


def lift_from_contraction(g: MultiGraph, h: MultiGraph, xbar, u2, s_h: Iterable) -> frozenset:
    """Transport a barrier or 2-separation of a shore-contraction back up.

    h must be g with the far shore contracted to xbar, the cut associated
    with a separation pair whose far member is u2.  The lifted set is s_h
    itself when xbar is not involved, else s_h with xbar swapped for u2;
    the result is re-validated on g and must keep its kind.
    """
    s = frozenset(s_h)
    if not s <= h.vertices:
        raise BadCertificate("set is not inside the contracted graph")
    report_h = removed_components(h, s)
    if report_h.odd_count == len(s):
        kind = "barrier"
    elif len(report_h.components) >= 2 and report_h.odd_count == 0:
        kind = "two-separation"
    else:
        raise BadCertificate("set is neither a barrier nor a 2-separation of the contraction")
    lifted = s if xbar not in s else (s - {xbar}) | {u2}
    report_g = removed_components(g, lifted)
    if kind == "barrier":
        ok = report_g.odd_count == len(lifted)
    else:
        ok = len(report_g.components) >= 2 and report_g.odd_count == 0
    if not ok:
        raise BadCertificate(f"lifted set fails to be a {kind} of the host graph")
    return lifted
