"""Gap-side invariants and classification predicates.

Everything here consumes a built model. Where a theorem provides two or three
equivalent descriptions of a predicate, all of them are evaluated and any
disagreement raises InternalInconsistency: the equivalences double as
executable cross-checks of the implementation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import lattice, semigroup
from .errors import (
    InternalInconsistency,
    NoGaps,
    NotAnExtremalRay,
)
from .lattice import Point, total_degree, vadd, vsub
from .semigroup import CSemigroupModel


def _require_gaps(model: CSemigroupModel):
    model.require_complete()
    if not model.gaps:
        raise NoGaps("the semigroup equals its integer cone")


def pseudo_frobenius(model: CSemigroupModel) -> tuple[Point, ...]:
    """Gaps h with h + s in S for every nonzero s; testing the minimal
    generators suffices because every element is a sum of them."""
    _require_gaps(model)
    return tuple(sorted(
        h for h in model.gaps
        if all(model.contains(vadd(h, g)) for g in model.min_generators)))


def special_gaps(model: CSemigroupModel) -> tuple[Point, ...]:
    """Pseudo-Frobenius elements whose double lands back in S; exactly the
    gaps whose adjunction keeps a semigroup."""
    return tuple(h for h in pseudo_frobenius(model)
                 if model.contains(lattice.vscale(2, h)))


def frobenius_allowable(model: CSemigroupModel) -> tuple[Point, ...]:
    """Maximal gaps under the componentwise order: the gaps realized as the
    maximum gap by some relaxed monomial order."""
    _require_gaps(model)
    return lattice.maximals(model.gaps, lattice.natural_order())


def cone_maximal_gaps(model: CSemigroupModel) -> tuple[Point, ...]:
    _require_gaps(model)
    return lattice.maximals(model.gaps, lattice.cone_order(model.cone))


def cone_frobenius(model: CSemigroupModel) -> Point | None:
    """The maximum gap under the cone order, when it exists."""
    mx = cone_maximal_gaps(model)
    return mx[0] if len(mx) == 1 else None


@dataclass(frozen=True)
class Conductor:
    """The ideal {x in S : x + C subseteq S} as a membership predicate, with
    its finite complement S minus the ideal when the gap set is finite."""

    model: CSemigroupModel
    max_gaps: tuple[Point, ...] | None
    complement: tuple[Point, ...] | None

    def __contains__(self, p) -> bool:
        p = tuple(int(x) for x in p)
        if not self.model.contains(p):
            return False
        if self.max_gaps is not None:
            order = lattice.cone_order(self.model.cone)
            return not any(order.leq(p, f) for f in self.max_gaps)
        return all(self.model.contains(vadd(p, f)) for f in self.model.class_table)


def conductor(model: CSemigroupModel) -> Conductor:
    """Membership predicate plus, for finite gap sets, the complement.

    For a finite gap set the predicate is "no cone-maximal gap dominates";
    in general x + C subseteq S is equivalent to x + f in S for every
    parallelepiped residue f, because S absorbs the ray elements.
    """
    if not model.gaps_complete:
        return Conductor(model=model, max_gaps=None, complement=None)
    if not model.gaps:
        return Conductor(model=model, max_gaps=(), complement=())
    mx = cone_maximal_gaps(model)
    cone = model.cone
    comp = set()
    for f in mx:
        for p in itertools.product(*(range(x + 1) for x in f)):
            if model.contains(p) and cone.contains(vsub(f, p)):
                comp.add(p)
    return Conductor(model=model, max_gaps=mx, complement=tuple(sorted(comp)))


def type_of(model: CSemigroupModel) -> int:
    """|PF(S)|, cross-validated against the count of maximal Apery elements
    over one minimal generator."""
    pf = pseudo_frobenius(model)
    g = model.min_generators[0]
    maximal = semigroup.apery_maximals(model, g)
    if len(maximal) != len(pf):
        raise InternalInconsistency(
            f"|PF| = {len(pf)} but |Maximals Ap(S, {g})| = {len(maximal)}")
    return len(pf)


def reduced_type(model: CSemigroupModel, ray: Point) -> int:
    """|conductor n Maximals Ap(S, n_i)| for a minimal extremal ray element."""
    ray = tuple(int(x) for x in ray)
    if ray not in model.extremal_rays:
        raise NotAnExtremalRay(f"{ray} is not one of {model.extremal_rays}")
    _require_gaps(model)
    cond = conductor(model)
    maximal = semigroup.apery_maximals(model, ray)
    return sum(1 for m in maximal if m in cond)


@dataclass(frozen=True)
class InvariantReport:
    pseudo_frobenius: tuple[Point, ...]
    special_gaps: tuple[Point, ...]
    frobenius_allowable: tuple[Point, ...]
    cone_maximal_gaps: tuple[Point, ...]
    cone_frobenius: Point | None
    conductor_complement: tuple[Point, ...]
    type: int | None
    reduced_type: dict[Point, int]
    tau: int
    symmetric: bool
    almost_symmetric: bool
    quasi_irreducible: bool
    quasi_symmetric: bool
    irreducible: bool
    minimal_reduced_type: bool
    maximal_reduced_type: bool
    trivial: bool = False


def _trivial_report(model) -> InvariantReport:
    return InvariantReport(
        pseudo_frobenius=(), special_gaps=(), frobenius_allowable=(),
        cone_maximal_gaps=(), cone_frobenius=None, conductor_complement=(),
        type=None, reduced_type={}, tau=0,
        symmetric=False, almost_symmetric=False, quasi_irreducible=False,
        quasi_symmetric=False, irreducible=False,
        minimal_reduced_type=False, maximal_reduced_type=False,
        trivial=True)


def classify(model: CSemigroupModel) -> InvariantReport:
    """Full invariant report; every flag with an equivalent characterization
    is computed both ways and compared."""
    model.require_complete()
    if not model.gaps:
        return _trivial_report(model)

    pf = pseudo_frobenius(model)
    sg_ = special_gaps(model)
    fa = frobenius_allowable(model)
    mx = cone_maximal_gaps(model)
    fc = mx[0] if len(mx) == 1 else None
    cond = conductor(model)
    t = type_of(model)
    tau = len(mx)
    red = {n: reduced_type(model, n) for n in model.extremal_rays}
    cone_leq = lattice.cone_order(model.cone).leq

    pf_set, sg_set, mx_set = set(pf), set(sg_), set(mx)
    gaps = model.gaps

    symmetric = fc is not None and pf == (fc,)
    almost = fc is not None and all(
        vsub(fc, f) in pf_set for f in pf if f != fc)

    qi_1 = mx_set == sg_set
    qi_2 = all(f in mx_set or lattice.vscale(2, f) in mx_set for f in pf)
    qi_3 = all(
        lattice.vscale(2, h) in mx_set
        or any(model.contains(vsub(f, h)) for f in mx)
        for h in gaps)
    if not (qi_1 == qi_2 == qi_3):
        raise InternalInconsistency(
            f"quasi-irreducible conditions disagree: {qi_1}, {qi_2}, {qi_3}")

    qs_direct = mx_set == pf_set
    qs_char = all(
        any(model.contains(vsub(f, h)) for f in mx)
        for h in gaps)
    if qs_direct != qs_char:
        raise InternalInconsistency(
            f"quasi-symmetric conditions disagree: {qs_direct} vs {qs_char}")

    minimal_direct = all(v == 1 for v in red.values())
    minimal_char = fc is not None and all(
        cone_leq(f, vsub(fc, n))
        for f in pf if f != fc
        for n in model.extremal_rays)
    if minimal_direct != minimal_char:
        raise InternalInconsistency(
            f"minimal reduced type: count says {minimal_direct}, "
            f"characterization says {minimal_char}")

    maximal_direct = all(v == t for v in red.values())
    maximal_char = all(
        not cone_leq(vadd(f, n), big)
        for f in pf for n in model.extremal_rays for big in mx)
    if maximal_direct != maximal_char:
        raise InternalInconsistency(
            f"maximal reduced type: count says {maximal_direct}, "
            f"characterization says {maximal_char}")

    return InvariantReport(
        pseudo_frobenius=pf,
        special_gaps=sg_,
        frobenius_allowable=fa,
        cone_maximal_gaps=mx,
        cone_frobenius=fc,
        conductor_complement=cond.complement,
        type=t,
        reduced_type=red,
        tau=tau,
        symmetric=symmetric,
        almost_symmetric=almost,
        quasi_irreducible=qi_1,
        quasi_symmetric=qs_direct,
        irreducible=len(sg_) == 1,
        minimal_reduced_type=minimal_direct,
        maximal_reduced_type=maximal_direct,
    )
