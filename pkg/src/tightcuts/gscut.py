"""Generalized-separation cuts: recognition, certificates, classification.

A cut's associated family collects every 2-separation meeting its shore in
exactly one vertex.  The cut is a GS-cut when the family is nonempty, covers
the cut's edges, hangs together in a chain (consecutive members sharing one
vertex), and satisfies two component/shore compatibility conditions.  An
essential GS-cut is one that becomes a GS-cut after contracting a disjoint
family of sheltered non-trivial barriers, each contracted vertex landing in
an associated 2-separation.  Classification tries the barrier route first and
the essential route second; both produce re-validatable certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .corpus import edge_splice
from .elp import (Barrier, TwoSeparation, enumerate_nontrivial_barriers, is_barrier,
                  two_separations)
from .errors import (BadCertificate, BadSplice, NotMatchingCovered, NotTight,
                     SearchBudgetExceeded, TrivialCut)
from .graphcore import (Cut, MultiGraph, _check_shore, contract, graph_memo, make_cut,
                        removed_components)
from .matching import _require_matching_covered, is_tight

DEFAULT_MAX_BARRIER_FAMILY = 4
DEFAULT_SEARCH_BUDGET = 20000


def associated_family(g: MultiGraph, shore: Iterable) -> list:
    """The 2-separations meeting the shore in exactly one vertex."""
    s = _check_shore(g, shore)
    return [sep for sep in two_separations(g) if len(sep.pair & s) == 1]


@dataclass(frozen=True)
class GSCertificate:
    shore: frozenset
    family: tuple  # TwoSeparation values, deterministic order
    chain_witnesses: tuple  # ((i, j, path-as-index-tuple), ...) for i < j
    end_separations: tuple  # indices into family

    def family_pairs(self):
        return [sorted(sep.pair) for sep in self.family]


@dataclass(frozen=True)
class EndSeparation:
    separation: TwoSeparation
    clean_components: tuple  # components Y with no other family member inside Y + F


@dataclass(frozen=True)
class EssentialGSCertificate:
    shore: frozenset
    barriers: tuple  # Barrier values, pairwise disjoint, sheltered
    regions: tuple  # frozensets contracted for each barrier, same order
    contracted_ids: tuple  # replacement vertex ids, same order
    contracted_graph: MultiGraph
    shore_image: frozenset
    inner_certificate: GSCertificate
    b_assignments: tuple  # ((b_id, TwoSeparation of the contraction), ...)


@dataclass(frozen=True)
class TightCutClassification:
    cut: Cut
    verdict: str  # "barrier-cut" | "essential-gs-cut" | "unclassified"
    barrier: Optional[Barrier] = None
    essential: Optional[EssentialGSCertificate] = None
    transcript: tuple = ()


def _family_chain(family: list) -> Optional[dict]:
    """BFS paths in the member-intersection graph, or None if disconnected."""
    k = len(family)
    adjacent = {i: [] for i in range(k)}
    for i, j in combinations(range(k), 2):
        if len(family[i].pair & family[j].pair) == 1:
            adjacent[i].append(j)
            adjacent[j].append(i)
    paths = {}
    for start in range(k):
        prev = {start: None}
        queue = [start]
        while queue:
            cur = queue.pop(0)
            for nxt in adjacent[cur]:
                if nxt not in prev:
                    prev[nxt] = cur
                    queue.append(nxt)
        if len(prev) != k:
            return None
        for goal in range(start + 1, k):
            path = [goal]
            while path[-1] != start:
                path.append(prev[path[-1]])
            paths[(start, goal)] = tuple(reversed(path))
    return paths


def _shore_of(vset: frozenset, x: frozenset, xbar: frozenset) -> Optional[frozenset]:
    """Which shore wholly contains the set, if either does."""
    if vset <= x:
        return x
    if vset <= xbar:
        return xbar
    return None


def _condition_pair_ok(g: MultiGraph, x: frozenset, f: TwoSeparation, f2: TwoSeparation) -> bool:
    """Component/shore compatibility for an adjacent ordered family pair.

    For nested components Y of G-F and Y' of G-F2, the leftover induced piece
    between them must have its odd components on the shore away from the
    common vertex and each even component on a single shore.
    """
    common = f.pair & f2.pair
    assert len(common) == 1
    (w,) = common
    xbar = g.vertices - x
    w_shore = x if w in x else xbar
    opposite = xbar if w_shore is x else x
    for y in f.components:
        for y2 in f2.components:
            if not (y < y2):
                continue
            between = y2 - (y | f.pair)
            if not between:
                continue  # empty leftover imposes nothing
            for comp in removed_components(g, g.vertices - between).components:
                if len(comp) % 2 == 1:
                    if not comp <= opposite:
                        return False
                else:
                    if _shore_of(comp, x, xbar) is None:
                        return False
    return True


def _condition_tail_ok(g: MultiGraph, x: frozenset, family: list) -> bool:
    """Components seeing no other family member must sit inside one shore."""
    xbar = g.vertices - x
    members = [sep.pair for sep in family]
    for f in family:
        closure_others = [p for p in members if p != f.pair]
        for y in f.components:
            hull = y | f.pair
            if any(p <= hull for p in closure_others):
                continue
            if _shore_of(y, x, xbar) is None:
                return False
    return True


def _edge_coverage_ok(g: MultiGraph, x: frozenset, family: list) -> bool:
    touched = frozenset().union(*(sep.pair for sep in family)) if family else frozenset()
    for u, v in ((g.edges[i]) for i in make_cut(g, x).edge_indices):
        if u not in touched and v not in touched:
            return False
    return True


def end_2_separations(g: MultiGraph, family: list) -> list:
    """Family members whose intersections with all others sit in one vertex.

    Each comes with the components Y whose hull Y + F contains no other
    member — the side the chain does not continue into.
    """
    out = []
    pairs = [sep.pair for sep in family]
    for i, sep in enumerate(family):
        others = [p for j, p in enumerate(pairs) if j != i]
        if others:
            ok = any(all(p & sep.pair <= {w} for p in others) for w in sep.pair)
        else:
            ok = True  # a lone member is vacuously an end
        if not ok:
            continue
        clean = tuple(y for y in sep.components
                      if not any(p <= (y | sep.pair) for p in others))
        out.append(EndSeparation(sep, clean))
    return out


def is_gs_cut(g: MultiGraph, shore: Iterable) -> Optional[GSCertificate]:
    """Full definitional check; returns a certificate or None."""
    x = _check_shore(g, shore)
    _require_matching_covered(g)

    def compute():
        family = associated_family(g, x)
        if not family:
            return None
        if not _edge_coverage_ok(g, x, family):
            return None
        chain = _family_chain(family)
        if chain is None:
            return None
        for f, f2 in combinations(family, 2):
            if len(f.pair & f2.pair) != 1:
                continue
            if not _condition_pair_ok(g, x, f, f2):
                return None
            if not _condition_pair_ok(g, x, f2, f):
                return None
        if not _condition_tail_ok(g, x, family):
            return None
        fam = tuple(family)
        ends = end_2_separations(g, family)
        end_idx = tuple(i for i, sep in enumerate(family)
                        if any(e.separation == sep for e in ends))
        witnesses = tuple((i, j, chain[(i, j)]) for (i, j) in sorted(chain))
        return GSCertificate(x, fam, witnesses, end_idx)

    return graph_memo(g, ("gs", frozenset((x, g.vertices - x))), compute)


# -- essential GS-cuts -----------------------------------------------------


def _barrier_region(g: MultiGraph, barrier: Barrier, x: frozenset) -> Optional[frozenset]:
    """Everything on the barrier's side of the graph: the complement of the
    component of G - B holding the far shore (None if that shore is split)."""
    b = barrier.vertices
    far = (g.vertices - x) if b <= x else x
    holder = None
    for comp in removed_components(g, b).components:
        if comp & far:
            if holder is not None:
                return None
            holder = comp
    if holder is None or not far <= holder:
        return None
    return g.vertices - holder


def is_essential_gs_cut(g: MultiGraph, shore: Iterable,
                        max_family_size: int = DEFAULT_MAX_BARRIER_FAMILY,
                        budget: int = DEFAULT_SEARCH_BUDGET,
                        _transcript: Optional[list] = None) -> Optional[EssentialGSCertificate]:
    """Search for a disjoint sheltered barrier family whose contraction
    yields a GS-cut with every replacement vertex in an associated separation.

    The empty family is tried first (a GS-cut is already essential); then
    families by size and lexicographic order.  Deterministic.
    """
    x = _check_shore(g, shore)
    _require_matching_covered(g)
    transcript = _transcript if _transcript is not None else []

    direct = is_gs_cut(g, x)
    if direct is not None:
        return EssentialGSCertificate(
            shore=x, barriers=(), regions=(), contracted_ids=(),
            contracted_graph=g, shore_image=x, inner_certificate=direct,
            b_assignments=())
    transcript.append("empty barrier family: not a GS-cut as-is"
                      if associated_family(g, x) else
                      "empty barrier family: associated family is empty")

    xbar = g.vertices - x
    sheltered = [b for b in enumerate_nontrivial_barriers(g)
                 if b.vertices <= x or b.vertices <= xbar]
    if not sheltered:
        transcript.append("no sheltered non-trivial barriers to contract")
        return None

    examined = 0
    for size in range(1, max_family_size + 1):
        for combo in combinations(sheltered, size):
            examined += 1
            if examined > budget:
                raise SearchBudgetExceeded(
                    f"examined {examined - 1} barrier families without an answer",
                    transcript)
            if any(a.vertices & b.vertices for a, b in combinations(combo, 2)):
                continue
            ordered = sorted(combo, key=lambda bar: sorted(bar.vertices))
            regions = []
            for bar in ordered:
                region = _barrier_region(g, bar, x)
                if region is None:
                    transcript.append(
                        f"family {[sorted(b.vertices) for b in ordered]}: far shore split "
                        f"by barrier {sorted(bar.vertices)}")
                    regions = None
                    break
                regions.append(region)
            if regions is None:
                continue
            if any(r1 & r2 for r1, r2 in combinations(regions, 2)):
                transcript.append(
                    f"family {[sorted(b.vertices) for b in ordered]}: regions overlap")
                continue
            current = g
            b_ids = []
            ximg = set(x)
            ok = True
            for bar, region in zip(ordered, regions):
                new_id = max(current.vertices) + 1
                current = contract(current, region, new_id=new_id)
                b_ids.append(new_id)
                if bar.vertices <= x:
                    ximg -= region
                    ximg.add(new_id)
            ximg = frozenset(ximg)
            try:
                inner = is_gs_cut(current, ximg)
            except NotMatchingCovered:
                transcript.append(
                    f"family {[sorted(b.vertices) for b in ordered]}: contraction "
                    "is not matching covered")
                continue
            if inner is None:
                continue
            covered = frozenset().union(*(sep.pair for sep in inner.family))
            if not all(b in covered for b in b_ids):
                transcript.append(
                    f"family {[sorted(b.vertices) for b in ordered]}: a replacement "
                    "vertex lies in no associated 2-separation")
                continue
            assignments = []
            for b in b_ids:
                for sep in inner.family:
                    if b in sep.pair:
                        assignments.append((b, sep))
                        break
            return EssentialGSCertificate(
                shore=x, barriers=tuple(ordered), regions=tuple(regions),
                contracted_ids=tuple(b_ids), contracted_graph=current,
                shore_image=ximg, inner_certificate=inner,
                b_assignments=tuple(assignments))
    transcript.append(
        f"exhausted {examined} barrier families up to size {max_family_size}")
    return None


def classify_tight_cut(g: MultiGraph, shore: Iterable,
                       max_family_size: int = DEFAULT_MAX_BARRIER_FAMILY,
                       budget: int = DEFAULT_SEARCH_BUDGET) -> TightCutClassification:
    """The main dichotomy: barrier-cut first, essential GS-cut second."""
    from .elp import is_barrier_cut

    cut = make_cut(g, shore)
    _require_matching_covered(g)
    if cut.is_trivial:
        raise TrivialCut("classification applies to non-trivial cuts")
    verdict = is_tight(g, cut.shore)
    if not verdict.tight:
        raise NotTight("classification applies to tight cuts", verdict.witness)

    def compute():
        barrier = is_barrier_cut(g, cut.shore)
        if barrier is not None:
            return TightCutClassification(cut, "barrier-cut", barrier=barrier)
        transcript = ["no barrier has either side of the cut as an odd component"]
        essential = is_essential_gs_cut(g, cut.shore, max_family_size, budget,
                                        _transcript=transcript)
        if essential is not None:
            return TightCutClassification(cut, "essential-gs-cut", essential=essential,
                                          transcript=tuple(transcript))
        return TightCutClassification(cut, "unclassified", transcript=tuple(transcript))

    return graph_memo(g, ("classify", cut.shore_pair, max_family_size, budget), compute)


def check_splice_tightness(g1: MultiGraph, g2: MultiGraph, x, y,
                           shore1: Iterable, shore2: Iterable) -> tuple:
    """Tightness of the two side cuts and of their union across a splice.

    Returns (tight in side one, tight in side two, tight in the spliced
    graph); the third coordinate should always equal the conjunction of the
    first two.
    """
    spliced = edge_splice(g1, g2, x, y)
    x1, x2 = frozenset(shore1), frozenset(shore2)
    for g, s in ((g1, x1), (g2, x2)):
        if not s <= g.vertices:
            raise BadSplice("each shore must live in its own side graph")
        if len(s) % 2 == 0:
            raise BadSplice("side shores must be odd")
        if x not in s or y in s:
            raise BadSplice("each side shore must contain x and avoid y")
    t1 = is_tight(g1, x1).tight
    t2 = is_tight(g2, x2).tight
    t3 = is_tight(spliced, x1 | x2).tight
    return (t1, t2, t3)


# -- JSON certificates -----------------------------------------------------


def _ids(vs) -> list:
    return sorted(vs)


def gs_certificate_to_json_obj(cert: GSCertificate) -> dict:
    return {
        "kind": "gs",
        "shore": _ids(cert.shore),
        "family": [_ids(sep.pair) for sep in cert.family],
        "chain_witnesses": [[i, j, list(path)] for i, j, path in cert.chain_witnesses],
        "end_separations": list(cert.end_separations),
    }


def essential_certificate_to_json_obj(cert: EssentialGSCertificate) -> dict:
    return {
        "kind": "essential-gs",
        "shore": _ids(cert.shore),
        "barriers": [_ids(b.vertices) for b in cert.barriers],
        "regions": [_ids(r) for r in cert.regions],
        "contracted_ids": list(cert.contracted_ids),
        "shore_image": _ids(cert.shore_image),
        "inner": gs_certificate_to_json_obj(cert.inner_certificate),
        "assignments": {str(b): _ids(sep.pair) for b, sep in cert.b_assignments},
    }


def barrier_cut_certificate_to_json_obj(barrier: Barrier, shore) -> dict:
    return {
        "kind": "barrier-cut",
        "shore": _ids(shore),
        "barrier": _ids(barrier.vertices),
    }


def two_separation_cut_certificate_to_json_obj(witness, shore) -> dict:
    return {
        "kind": "two-separation-cut",
        "shore": _ids(shore),
        "pair": _ids(witness.separation.pair),
        "group": [_ids(c) for c in witness.group],
        "attach": witness.attach_vertex,
    }


def validate_certificate_json_obj(g: MultiGraph, obj: dict) -> bool:
    """Re-validate any serialized certificate against the graph from scratch.

    Raises BadCertificate with a reason on failure; returns True on success.
    """
    kind = obj.get("kind")
    if kind == "barrier-cut":
        shore = frozenset(obj["shore"])
        b = frozenset(obj["barrier"])
        if not is_barrier(g, b):
            raise BadCertificate("recorded set is not a barrier")
        comps = removed_components(g, b).components
        if shore not in comps or len(shore) % 2 == 0:
            raise BadCertificate("shore is not an odd component of the barrier removal")
        return True
    if kind == "two-separation-cut":
        pair = frozenset(obj["pair"])
        report = removed_components(g, pair)
        if report.odd_count or len(report.components) < 2:
            raise BadCertificate("recorded pair is not a 2-separation")
        group = [frozenset(c) for c in obj["group"]]
        for c in group:
            if c not in report.components:
                raise BadCertificate("group member is not a component of the removal")
        if len(group) >= len(report.components):
            raise BadCertificate("group must leave some component out")
        attach = obj["attach"]
        if attach not in pair:
            raise BadCertificate("attach vertex is outside the separation pair")
        shore = frozenset().union(*group) | {attach}
        if shore != frozenset(obj["shore"]):
            raise BadCertificate("shore does not match group plus attach vertex")
        return True
    if kind == "gs":
        shore = frozenset(obj["shore"])
        fresh = is_gs_cut(g, shore)
        if fresh is None:
            raise BadCertificate("shore is not a GS-cut on re-check")
        if [sorted(p) for p in obj["family"]] != fresh.family_pairs():
            raise BadCertificate("recorded family differs from the associated family")
        pairs = [frozenset(p) for p in obj["family"]]
        for i, j, path in obj["chain_witnesses"]:
            if path[0] != i or path[-1] != j:
                raise BadCertificate("chain witness endpoints are wrong")
            for a, b in zip(path, path[1:]):
                if len(pairs[a] & pairs[b]) != 1:
                    raise BadCertificate("chain witness has a bad link")
        return True
    if kind == "essential-gs":
        shore = frozenset(obj["shore"])
        xbar = g.vertices - shore
        barriers = [frozenset(b) for b in obj["barriers"]]
        regions = [frozenset(r) for r in obj["regions"]]
        ids = list(obj["contracted_ids"])
        if len(barriers) != len(regions) or len(regions) != len(ids):
            raise BadCertificate("barrier/region/id lists disagree in length")
        for a, b in combinations(range(len(barriers)), 2):
            if barriers[a] & barriers[b] or regions[a] & regions[b]:
                raise BadCertificate("barriers or regions overlap")
        current = g
        ximg = set(shore)
        for b, region, new_id in zip(barriers, regions, ids):
            if len(b) < 2 or not (b <= shore or b <= xbar):
                raise BadCertificate("barrier is trivial or not sheltered")
            if not is_barrier(g, b):
                raise BadCertificate("recorded set is not a barrier")
            if _barrier_region(g, Barrier(b, ()), shore) != region:
                raise BadCertificate("region does not match the barrier's side")
            current = contract(current, region, new_id=new_id)
            if b <= shore:
                ximg -= region
                ximg.add(new_id)
        if frozenset(ximg) != frozenset(obj["shore_image"]):
            raise BadCertificate("shore image does not match the contraction")
        inner = dict(obj["inner"])
        if frozenset(inner.get("shore", ())) != frozenset(ximg):
            raise BadCertificate("inner certificate names a different shore")
        validate_certificate_json_obj(current, inner)
        family = [frozenset(p) for p in inner["family"]]
        for b in ids:
            assigned = frozenset(obj["assignments"][str(b)])
            if assigned not in family:
                raise BadCertificate("assignment is not in the inner family")
            if b not in assigned:
                raise BadCertificate("replacement vertex missing from its assignment")
        return True
    raise BadCertificate(f"unknown certificate kind {kind!r}")
