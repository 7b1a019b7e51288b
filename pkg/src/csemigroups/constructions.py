"""Families and constructions with closed-form invariants.

Every closed form is evaluated twice, once from its formula and once from the
built model, and the two must agree exactly; a silent discrepancy would make
the family worthless as test material, so disagreement raises.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import ceil, gcd

from . import invariants, lattice, semigroup
from .errors import (
    InternalInconsistency,
    InvalidExtensionData,
    InvalidGluingData,
    InvalidParameter,
    NotAnAntichain,
    NotFullCone,
)
from .lattice import Point, vadd, vsub
from .numerical import NumericalSemigroup, numerical_semigroup
from .semigroup import CSemigroupModel


# ---------------------------------------------------------------------------
# Gluing of numerical semigroups.


@dataclass(frozen=True)
class GluingResult:
    semigroup: NumericalSemigroup
    pseudo_frobenius: tuple[int, ...]
    type: int
    frobenius: int


def glue(s1: NumericalSemigroup, s2: NumericalSemigroup, lam: int, mu: int) -> GluingResult:
    """<lam * gens(S1), mu * gens(S2)> with mu a non-generator of S1, lam a
    non-generator of S2 and gcd(lam, mu) = 1.

    Pseudo-Frobenius elements, type and Frobenius number are produced by the
    product formulas and checked against direct computation.
    """
    if mu <= 0 or not s1.contains(mu):
        raise InvalidGluingData(f"mu = {mu} is not a nonzero element of the first semigroup")
    if mu in s1.min_generators:
        raise InvalidGluingData(f"mu = {mu} is a minimal generator of the first semigroup")
    if lam <= 0 or not s2.contains(lam):
        raise InvalidGluingData(f"lam = {lam} is not a nonzero element of the second semigroup")
    if lam in s2.min_generators:
        raise InvalidGluingData(f"lam = {lam} is a minimal generator of the second semigroup")
    if gcd(lam, mu) != 1:
        raise InvalidGluingData(f"gcd(lam, mu) = gcd({lam}, {mu}) != 1")

    glued = numerical_semigroup(
        [lam * g for g in s1.min_generators] + [mu * g for g in s2.min_generators])

    pf_formula = tuple(sorted(
        lam * f + mu * g + lam * mu
        for f in s1.pseudo_frobenius() for g in s2.pseudo_frobenius()))
    type_formula = s1.type() * s2.type()
    frob_formula = lam * s1.frobenius + mu * s2.frobenius + lam * mu

    pf_direct = glued.pseudo_frobenius()
    if pf_formula != pf_direct:
        raise InternalInconsistency(
            f"gluing PF formula {pf_formula} != direct {pf_direct}")
    if type_formula != glued.type() or frob_formula != glued.frobenius:
        raise InternalInconsistency("gluing type/Frobenius formulas disagree with direct values")
    return GluingResult(semigroup=glued, pseudo_frobenius=pf_formula,
                        type=type_formula, frobenius=frob_formula)


def nice_extension(s: NumericalSemigroup, coeffs, p: int) -> NumericalSemigroup:
    """<p n_1, ..., p n_e, n> with n = sum(a_j n_j), p <= sum(a_j),
    gcd(p, n) = 1; the reduced type is preserved and asserted."""
    coeffs = [int(c) for c in coeffs]
    gens = s.min_generators
    if len(coeffs) != len(gens) or any(c < 0 for c in coeffs):
        raise InvalidExtensionData("need one nonnegative coefficient per minimal generator")
    n_new = sum(c * g for c, g in zip(coeffs, gens))
    if n_new in gens or n_new == 0:
        raise InvalidExtensionData(f"{n_new} is not an element outside the minimal generators")
    if not (2 <= p <= sum(coeffs)):
        raise InvalidExtensionData(f"need 2 <= p <= {sum(coeffs)}, got p = {p}")
    if gcd(p, n_new) != 1:
        raise InvalidExtensionData(f"gcd(p, {n_new}) = {gcd(p, n_new)} != 1")
    extended = numerical_semigroup([p * g for g in gens] + [n_new])
    if extended.reduced_type() != s.reduced_type():
        raise InternalInconsistency(
            f"nice extension changed the reduced type: {s.reduced_type()} -> "
            f"{extended.reduced_type()}")
    return extended


# ---------------------------------------------------------------------------
# Bresinsky's four-generated family with unbounded type.


def bresinsky_generators(h: int) -> tuple[int, int, int, int]:
    return (2 * h * (2 * h + 1), (2 * h - 1) * (2 * h + 1),
            2 * h * (2 * h + 1) + (2 * h - 1), (2 * h - 1) * 2 * h)


def bresinsky_pf_formula(h: int) -> tuple[int, ...]:
    base = (2 * h - 1) ** 3 + 4 * h * (h - 2)
    first = [base + k * (2 * h - 1) + 1 for k in range(0, 2 * h - 2)]
    second = [base + 2 * h * (2 * k + 1) + 2 for k in range(0, 2 * h - 1)]
    return tuple(sorted(first + second))


def bresinsky_frobenius_formula(h: int) -> int:
    return (2 * h - 1) ** 3 + 4 * h * (h - 2) + 2 * h * (4 * h - 3) + 2


def bresinsky(h: int) -> NumericalSemigroup:
    """The 4-generated numerical semigroup whose type 4h-3 and reduced type h
    grow without bound at fixed embedding dimension."""
    if h < 2:
        raise InvalidParameter("the family needs h >= 2")
    ns = numerical_semigroup(bresinsky_generators(h))
    pf = ns.pseudo_frobenius()
    formula = bresinsky_pf_formula(h)
    if pf != formula:
        raise InternalInconsistency(f"PF formula {formula} != computed {pf}")
    if ns.frobenius != bresinsky_frobenius_formula(h):
        raise InternalInconsistency("Frobenius formula disagrees with computed value")
    if len(pf) != 4 * h - 3:
        raise InternalInconsistency(f"expected type {4 * h - 3}, computed {len(pf)}")
    if ns.reduced_type() != h:
        raise InternalInconsistency(
            f"expected reduced type {h}, computed {ns.reduced_type()}")
    return ns


# ---------------------------------------------------------------------------
# Graded generalized numerical semigroups.


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def t_graded(t: NumericalSemigroup, d: int) -> CSemigroupModel:
    """Points of N^d whose coordinate sum lies in the numerical semigroup t;
    gaps, pseudo-Frobenius elements and conductor all come in closed form and
    are checked against the model."""
    if d < 2:
        raise InvalidParameter("the grading needs d >= 2")
    if not t.gaps:
        raise InvalidParameter("a gap-free grading semigroup gives all of N^d")
    gaps = [x for h in t.gaps for x in _compositions(h, d)]
    model = semigroup.from_gap_set(lattice.orthant(d).rays, gaps)

    report = invariants.classify(model)
    pf_closed = tuple(sorted(
        x for f in t.pseudo_frobenius() for x in _compositions(f, d)))
    if report.pseudo_frobenius != pf_closed:
        raise InternalInconsistency("graded PF closed form disagrees with the model")
    fa_closed = tuple(sorted(_compositions(t.frobenius, d)))
    if report.frobenius_allowable != fa_closed:
        raise InternalInconsistency("graded FA closed form disagrees with the model")

    cond = invariants.conductor(model)
    for x in itertools.product(range(t.frobenius + 3), repeat=d):
        if (x in cond) != (sum(x) > t.frobenius):
            raise InternalInconsistency(f"graded conductor closed form fails at {x}")

    expected_rays = tuple(sorted(
        tuple(t.multiplicity if i == j else 0 for j in range(d)) for i in range(d)))
    if model.extremal_rays != expected_rays:
        raise InternalInconsistency("graded extremal rays are not m(T) * e_i")

    if report.maximal_reduced_type != t.has_maximal_reduced_type():
        raise InternalInconsistency("maximal reduced type does not transfer to the grading")
    if report.minimal_reduced_type:
        raise InternalInconsistency("a graded model can never have minimal reduced type")
    return model


# ---------------------------------------------------------------------------
# Thickening along a new axis.


def _embed(y: Point, axis: int, value: int) -> Point:
    return y[: axis - 1] + (value,) + y[axis - 1:]


def thicken(model: CSemigroupModel, k: int, axis: int) -> CSemigroupModel:
    """S u (e_i + S) u ... u (k e_i + S) u ((k+1) e_i + N^{d+1}): the gap set
    is k+1 stacked copies of the old one, pseudo-Frobenius elements shift by
    k e_i and the conductor is the stated union; all three are checked."""
    model.require_complete()
    if not model.cone.is_orthant():
        raise NotFullCone("thickening is defined for full-orthant models")
    d = model.dim
    if k < 0:
        raise InvalidParameter("k must be nonnegative")
    if not 1 <= axis <= d + 1:
        raise InvalidParameter(f"axis must be in 1..{d + 1}")

    new_gaps = [_embed(h, axis, j) for h in model.gaps for j in range(k + 1)]
    built = semigroup.from_gap_set(lattice.orthant(d + 1).rays, new_gaps)

    if model.gaps:
        pf_old = invariants.pseudo_frobenius(model)
        pf_new = invariants.pseudo_frobenius(built)
        shifted = tuple(sorted(_embed(f, axis, k) for f in pf_old))
        if pf_new != shifted:
            raise InternalInconsistency(
                f"thickening PF closed form {shifted} disagrees with {pf_new}")

        cond_old = invariants.conductor(model)
        cond_new = invariants.conductor(built)
        lim = [max(g[i] for g in model.gaps) + 2 for i in range(d)]
        lim.insert(axis - 1, k + 2)
        for x in itertools.product(*(range(m + 1) for m in lim)):
            drop = x[: axis - 1] + x[axis:]
            closed = x[axis - 1] >= k + 1 or drop in cond_old
            if (x in cond_new) != closed:
                raise InternalInconsistency(f"thickening conductor closed form fails at {x}")

        rep_old = invariants.classify(model)
        rep_new = invariants.classify(built)
        if rep_new.maximal_reduced_type != rep_old.maximal_reduced_type:
            raise InternalInconsistency("maximal reduced type does not transfer to the thickening")
        if rep_new.minimal_reduced_type != (len(pf_old) == 1):
            raise InternalInconsistency(
                "thickening has minimal reduced type exactly when |PF| = 1")
    return built


# ---------------------------------------------------------------------------
# The S(a, r) family: fixed embedding dimension, unbounded type.


def s_family_generators(a: int, r: int, d: int) -> list[Point]:
    def e(i):
        return tuple(1 if j == i else 0 for j in range(d))

    gens = [e(i) for i in range(d - 1)]
    gens += [lattice.vscale(a + j, e(d - 1)) for j in range(r + 1)]
    gens += [vadd(e(i), e(d - 1)) for i in range(d - 1)]
    return gens


def s_family_pf_points(a: int, r: int, d: int) -> list[Point]:
    """The witnesses (a - k r - 2) e_i + ((k+1) a - 1) e_d for k <= p - 2."""
    p = ceil((a - 1) / r)
    out = []
    for k in range(0, p - 1):
        for i in range(d - 1):
            pt = [0] * d
            pt[i] = a - k * r - 2
            pt[d - 1] += (k + 1) * a - 1
            out.append(tuple(pt))
    return out


def s_family(a: int, r: int, d: int) -> CSemigroupModel:
    """Generalized numerical semigroup with embedding dimension 2d + r - 1
    and type at least (d-1) * (ceil((a-1)/r) - 1)."""
    if r < 1 or a <= r + 1 or d < 2:
        raise InvalidParameter("need r >= 1, a > r + 1 and d >= 2")
    gens = s_family_generators(a, r, d)
    model = semigroup.from_generators(gens, search_bound=4 * (a + r) * d)

    if set(model.min_generators) != set(gens):
        raise InternalInconsistency("the defining generators are not the minimal ones")
    if len(model.min_generators) != 2 * d + r - 1:
        raise InternalInconsistency("embedding dimension is not 2d + r - 1")

    pf = set(invariants.pseudo_frobenius(model))
    fa = set(invariants.frobenius_allowable(model))
    for pt in s_family_pf_points(a, r, d):
        if pt not in pf or pt not in fa:
            raise InternalInconsistency(f"witness point {pt} is not in PF and FA")
    p = ceil((a - 1) / r)
    if len(pf) < (d - 1) * (p - 1):
        raise InternalInconsistency("type fell below the guaranteed bound")
    return model


# ---------------------------------------------------------------------------
# Antichain semigroups: prescribed cone-maximal gaps.


def antichain_semigroup(cone: lattice.RationalCone, points) -> CSemigroupModel:
    """Remove the down-set of a cone-order antichain from C; the cone-maximal
    gaps of the result are exactly the antichain."""
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise InvalidParameter("the antichain must be nonempty")
    order = lattice.cone_order(cone)
    for a in pts:
        if not any(a):
            raise InvalidParameter("0 cannot belong to the antichain")
        if not all(x >= 0 for x in a) or not cone.contains(a):
            raise InvalidParameter(f"{a} lies outside the cone")
    for a, b in itertools.combinations(pts, 2):
        if order.leq(a, b) or order.leq(b, a):
            raise NotAnAntichain(f"{a} and {b} are comparable", witness=(a, b))

    gaps = set()
    for a in pts:
        for x in itertools.product(*(range(v + 1) for v in a)):
            if any(x) and cone.contains(x) and cone.contains(vsub(a, x)):
                gaps.add(x)
    model = semigroup.from_gap_set(cone, sorted(gaps))
    if invariants.cone_maximal_gaps(model) != tuple(pts):
        raise InternalInconsistency("cone-maximal gaps of the model differ from the antichain")
    return model
