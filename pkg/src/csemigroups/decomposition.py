"""Irreducible decompositions of C-semigroups.

An oversemigroup keeping a chosen gap h is grown by repeatedly adjoining a
special gap different from h: adjoining a special gap preserves both the
semigroup law (h' + s in S and 2h' in S) and the finite-gap property, and
strictly shrinks the gap set, so the loop terminates with a single special
gap, i.e. an irreducible oversemigroup. A subcover of the special gaps then
yields the decomposition, whose size is bounded below by the number of
cone-maximal gaps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import invariants, lattice, semigroup
from .errors import InternalInconsistency, NoGaps, NotOversemigroup
from .lattice import Point, total_degree, vadd, vscale
from .semigroup import CSemigroupModel

_EXHAUSTIVE_COVER_LIMIT = 12


@dataclass(frozen=True)
class DecompositionResult:
    components: tuple[CSemigroupModel, ...]
    cover_map: dict[Point, int]
    lower_bound: int


def decomposition_lower_bound(model: CSemigroupModel) -> int:
    model.require_complete()
    if not model.gaps:
        return 0
    return len(invariants.cone_maximal_gaps(model))


def _state_special_gaps(cone, gapset: frozenset, dim: int) -> tuple[Point, ...]:
    """Special gaps of the C-semigroup with the given finite gap set.

    Testing h + s for semigroup elements s of degree up to the largest gap
    degree is exact: any larger s pushes h + s past every gap.
    """
    if not gapset:
        return ()
    max_deg = max(total_degree(g) for g in gapset)
    elements = [p for p in semigroup._cone_points_up_to_degree(cone, dim, max_deg)
                if any(p) and p not in gapset]
    out = []
    for h in sorted(gapset):
        if vscale(2, h) in gapset:
            continue
        if all(vadd(h, s) not in gapset for s in elements):
            out.append(h)
    return tuple(out)


def _grow_irreducible(model: CSemigroupModel, protected: Point) -> frozenset:
    """Gap set of an irreducible oversemigroup in which `protected` stays a gap."""
    gaps = frozenset(model.gaps)
    while True:
        sgaps = _state_special_gaps(model.cone, gaps, model.dim)
        if len(sgaps) == 1:
            return gaps
        pick = min(g for g in sgaps if g != protected)
        gaps = gaps - {pick}


def decompose(model: CSemigroupModel) -> DecompositionResult:
    """Express the model as an intersection of irreducible C-semigroups over
    the same cone, one per special gap, minimized by subcover selection."""
    model.require_complete()
    if not model.gaps:
        raise NoGaps("a gap-free semigroup has no decomposition to compute")

    sg_all = invariants.special_gaps(model)
    gapsets = []
    for h in sg_all:
        gs = _grow_irreducible(model, h)
        if gs not in gapsets:
            gapsets.append(gs)

    kernels = [frozenset(h for h in sg_all if h in gs) for gs in gapsets]
    target = frozenset(sg_all)
    chosen = _min_cover(kernels, target)
    chosen_gapsets = sorted((tuple(sorted(gapsets[i])) for i in chosen))

    components = tuple(semigroup.from_gap_set(model.cone, gs) for gs in chosen_gapsets)
    for comp in components:
        if len(invariants.special_gaps(comp)) != 1:
            raise InternalInconsistency("component is not irreducible")

    union = set()
    for comp in components:
        union.update(comp.gaps)
    if union != set(model.gaps):
        raise InternalInconsistency(
            "intersection of the components differs from the semigroup")

    cover_map = {}
    for h in sg_all:
        cover_map[h] = next(i for i, comp in enumerate(components) if h in set(comp.gaps))

    bound = decomposition_lower_bound(model)
    if len(components) < bound:
        raise InternalInconsistency(
            f"{len(components)} components violate the lower bound {bound}")
    return DecompositionResult(components=components, cover_map=cover_map,
                               lower_bound=bound)


def _min_cover(kernels, target):
    """Indices of kernels covering target: exhaustive when the target is
    small, greedy otherwise."""
    idx = range(len(kernels))
    if len(target) <= _EXHAUSTIVE_COVER_LIMIT:
        for size in range(1, len(kernels) + 1):
            for combo in itertools.combinations(idx, size):
                if frozenset().union(*(kernels[i] for i in combo)) >= target:
                    return list(combo)
        raise InternalInconsistency("the component kernels fail to cover the special gaps")
    chosen = []
    remaining = set(target)
    while remaining:
        best = max(idx, key=lambda i: (len(kernels[i] & remaining), -i))
        if not kernels[best] & remaining:
            raise InternalInconsistency("the component kernels fail to cover the special gaps")
        chosen.append(best)
        remaining -= kernels[best]
    return sorted(set(chosen))


def verify_decomposition(model: CSemigroupModel, components) -> tuple[bool, dict]:
    """Check a claimed decomposition three ways: direct gap-set union, special
    gaps covered one by one, and union of the component kernels. The three
    answers must agree; the diagnostics name any uncovered special gap."""
    model.require_complete()
    comps = list(components)
    for comp in comps:
        comp.require_complete()
        if comp.cone.rays != model.cone.rays:
            raise NotOversemigroup("component lives over a different integer cone")
        stray = [g for g in comp.gaps if not g in set(model.gaps)]
        if stray:
            raise NotOversemigroup(
                f"component misses the semigroup elements {sorted(stray)}")

    gaps_s = set(model.gaps)
    sg_s = set(invariants.special_gaps(model)) if model.gaps else set()

    union_gaps = set()
    for comp in comps:
        union_gaps.update(comp.gaps)
    cond_direct = union_gaps == gaps_s

    uncovered = sorted(h for h in sg_s
                       if not any(h in set(comp.gaps) for comp in comps))
    cond_pointwise = not uncovered

    kernels = [sg_s & set(comp.gaps) for comp in comps]
    cond_kernels = frozenset().union(*kernels) == sg_s if kernels else not sg_s

    if not (cond_direct == cond_pointwise == cond_kernels):
        raise InternalInconsistency(
            f"equivalent decomposition criteria disagree: "
            f"{cond_direct}, {cond_pointwise}, {cond_kernels}")
    return cond_direct, {"uncovered_special_gaps": uncovered}
