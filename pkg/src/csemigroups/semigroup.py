"""Validated models of affine semigroups whose gaps live in a simplicial cone.

The central data structure organizes the integer cone C = cone(S) n N^d by
residue classes of Z^d modulo the lattice L spanned by the minimal extremal
ray elements E = {n_1, ..., n_d}. Inside one class the cone points form a
translated copy of N^d (positions), membership in S is upward closed along
positions, and everything of interest is finite position data:

  * the minimal S-positions of a class are exactly its Apery elements
    with respect to E;
  * the class gap set is finite iff every axis of the class eventually
    enters S, and then it sits inside the box below those entry thresholds;
  * x + C is contained in S iff x + f is in S for every residue f, which
    decides conductor membership with |det E| lookups.

Inputs whose gap set is infinite (the axis threshold test fails) still build
into a usable model, marked gaps_complete=False: membership, Apery sets and
conductor membership stay exact, while operations that need the full finite
gap set refuse with IncompleteGapSet. For d = 2 the infinite case is decided
exactly by a ray feasibility oracle; in higher dimension such inputs raise
GapBoundExceeded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import lattice
from .errors import (
    DimensionMismatch,
    GapBoundExceeded,
    IncompleteGapSet,
    InternalInconsistency,
    InvalidParameter,
    NoGaps,
    NonSimplicialCone,
    NotASemigroup,
    NotInSemigroup,
    ZeroShift,
)
from .lattice import Point, RationalCone, dot, total_degree, vadd, vsub

_INF = None  # axis threshold marker for "never enters S"

DEFAULT_SEARCH_BOUND = 100


@dataclass(frozen=True)
class GeneratorsPresentation:
    generators: tuple[Point, ...]
    search_bound: int = DEFAULT_SEARCH_BOUND


@dataclass(frozen=True)
class GapSetPresentation:
    cone: RationalCone
    gaps: tuple[Point, ...]


@dataclass
class _ClassData:
    residue: Point
    hit: bool
    complete: bool
    minimal_positions: tuple[Point, ...] = ()
    minimal_points: tuple[Point, ...] = ()
    gap_positions: tuple[Point, ...] | None = None


@dataclass(eq=False)
class CSemigroupModel:
    """Computed model; treat as immutable after build."""

    dim: int
    cone: RationalCone
    extremal_rays: tuple[Point, ...]
    ray_multipliers: tuple[int, ...]
    min_generators: tuple[Point, ...]
    gaps: tuple[Point, ...] | None
    gaps_complete: bool
    conductor_certificate: Point | None
    class_table: dict[Point, tuple[Point, ...]]
    _classes: dict[Point, _ClassData] = field(repr=False)
    _pos_rows: tuple[Point, ...] = field(repr=False)
    _pos_det: int = field(repr=False)

    # -- class coordinates ------------------------------------------------

    def decompose_point(self, p: Point):
        """(residue, position) of p inside C n N^d, or None when p is outside."""
        if len(p) != self.dim:
            raise DimensionMismatch(f"point of dim {len(p)}, model of dim {self.dim}")
        if not all(x >= 0 for x in p):
            return None
        if not self.cone.contains(p):
            return None
        nums = [dot(r, p) for r in self._pos_rows]
        assert all(n >= 0 for n in nums)
        pos = tuple(n // self._pos_det for n in nums)
        residue = vsub(p, _combine(self.extremal_rays, pos))
        return residue, pos

    def contains(self, p: Point) -> bool:
        dec = self.decompose_point(tuple(p))
        if dec is None:
            return False
        residue, pos = dec
        cls = self._classes[residue]
        if not cls.hit:
            return False
        return any(_leq_pos(u, pos) for u in cls.minimal_positions)

    def point_at(self, residue: Point, pos: Point) -> Point:
        return vadd(residue, _combine(self.extremal_rays, pos))

    @property
    def max_gap_degree(self) -> int:
        self.require_complete()
        return max((total_degree(g) for g in self.gaps), default=0)

    def require_complete(self):
        if not self.gaps_complete:
            raise IncompleteGapSet(
                "the gap set is infinite; this operation needs a C-semigroup")

    def has_gaps(self) -> bool:
        return not self.gaps_complete or bool(self.gaps)

    def elements_up_to_degree(self, bound: int) -> list[Point]:
        """All S-elements of total degree <= bound, sorted."""
        out = [p for p in _cone_points_up_to_degree(self.cone, self.dim, bound)
               if self.contains(p)]
        return out


def _combine(rays, coeffs) -> Point:
    d = len(rays[0])
    return tuple(sum(c * r[k] for c, r in zip(coeffs, rays)) for k in range(d))


def _leq_pos(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _cone_points_up_to_degree(cone, dim, bound):
    for p in itertools.product(range(bound + 1), repeat=dim):
        if sum(p) <= bound and cone.contains(p):
            yield p


# ---------------------------------------------------------------------------
# Build.


def build(presentation) -> CSemigroupModel:
    if isinstance(presentation, GeneratorsPresentation):
        return _build_from_generators(
            [tuple(int(x) for x in g) for g in presentation.generators],
            presentation.search_bound)
    if isinstance(presentation, GapSetPresentation):
        return _build_from_gap_set(
            presentation.cone,
            [tuple(int(x) for x in g) for g in presentation.gaps])
    raise InvalidParameter(f"unknown presentation {presentation!r}")


def from_generators(generators, search_bound=DEFAULT_SEARCH_BOUND) -> CSemigroupModel:
    return build(GeneratorsPresentation(tuple(tuple(g) for g in generators), search_bound))


def from_gap_set(cone_or_rays, gaps) -> CSemigroupModel:
    cone = cone_or_rays
    if not isinstance(cone, RationalCone):
        cone = lattice.cone_from_rays(cone_or_rays)
    return build(GapSetPresentation(cone, tuple(tuple(g) for g in gaps)))


def _position_solver(rays_e):
    """Integer rows R and positive determinant D with coefficients (R.x)/D."""
    d = len(rays_e)
    det = lattice.det_int(list(rays_e))
    if det == 0:
        raise NonSimplicialCone("extremal ray elements are linearly dependent")
    rows = []
    for i in range(d):
        e_i = tuple(1 if k == i else 0 for k in range(d))
        cols = [tuple(rays_e[j][k] for j in range(d)) for k in range(d)]
        sol = lattice._solve(cols, e_i)
        rows.append(tuple(int(x * det) for x in sol))
    if det < 0:
        det = -det
        rows = [tuple(-x for x in r) for r in rows]
    return tuple(rows), det


def _minimal_ray_elements(cone, is_member, max_mult):
    """n_i = least multiple of each primitive ray that lies in S."""
    out = []
    mults = []
    for b in cone.rays:
        k = 1
        while k <= max_mult:
            if is_member(lattice.vscale(k, b)):
                out.append(lattice.vscale(k, b))
                mults.append(k)
                break
            k += 1
        else:
            raise InternalInconsistency(f"no semigroup element found on ray {b}")
    return tuple(out), tuple(mults)


def _class_closure(par_points, pos_rows, pos_det, rays_e, generators):
    """Residues reachable by sums of generators, with a witness element each."""
    index = {p: i for i, p in enumerate(par_points)}

    def residue_of(p):
        nums = [dot(r, p) for r in pos_rows]
        pos = tuple(n // pos_det for n in nums)
        return vsub(p, _combine(rays_e, pos))

    zero = tuple(0 for _ in rays_e[0])
    witness = {zero: zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for w in frontier:
            for g in generators:
                p = vadd(w, g)
                r = residue_of(p)
                assert r in index
                if r not in witness:
                    witness[r] = p
                    nxt.append(p)
        frontier = nxt
    return witness


def _grid_class(residue, thresholds, rays_e, is_member, point_of, search_bound):
    """Finite-gap class: classify the whole box below the axis thresholds."""
    d = len(thresholds)
    box = itertools.product(*(range(t + 1) for t in thresholds))
    members = {}
    for pos in box:
        members[pos] = is_member(point_of(residue, pos))
    gap_positions = sorted(p for p, m in members.items() if not m)
    for gp in gap_positions:
        if total_degree(point_of(residue, gp)) > search_bound:
            raise GapBoundExceeded(
                f"gap {point_of(residue, gp)} exceeds the search bound {search_bound}")
    minimal = []
    for pos, m in members.items():
        if not m:
            continue
        if all(pos[i] == 0 or not members.get(tuple(pos[k] - (k == i) for k in range(d)), True)
               for i in range(d)):
            minimal.append(pos)
    return _ClassData(
        residue=residue,
        hit=True,
        complete=True,
        minimal_positions=tuple(sorted(minimal)),
        gap_positions=tuple(gap_positions),
    )


class _RayOracle:
    """Exact decision of min{k >= 0 : base + k * n_i in S} for d = 2.

    Splits the generators into the multiples of ray i and the rest. The
    complementary facet functional is constant along the ray, bounds the
    usable off-ray combinations to a finite reachable set, and leaves a
    one-dimensional numerical membership question on the ray itself.
    """

    def __init__(self, cone, rays_e, ray_multipliers, generators):
        self.cone = cone
        self.rays_e = rays_e
        self.mult = ray_multipliers
        self.generators = generators
        self._per_axis = {}

    def _setup(self, i):
        cached = self._per_axis.get(i)
        if cached is not None:
            return cached
        other = 1 - i
        pi = self.cone.facets[other]
        ray = self.cone.rays[i]
        on_ray, off_ray = [], []
        for g in self.generators:
            if dot(pi, g) == 0:
                on_ray.append(g)
            else:
                off_ray.append(g)
        coord = next(k for k in range(len(ray)) if ray[k] != 0)
        on_mults = sorted(g[coord] // ray[coord] for g in on_ray)
        delta = 0
        for m in on_mults:
            delta = gcd(delta, m)
        from .numerical import numerical_semigroup

        scaled = numerical_semigroup([m // delta for m in on_mults])
        data = (pi, ray, coord, off_ray, on_mults, delta, scaled)
        self._per_axis[i] = data
        return data

    def threshold(self, base: Point, i: int):
        pi, ray, coord, off_ray, on_mults, delta, scaled = self._setup(i)
        budget = dot(pi, base)
        assert budget >= 0
        # Reachable off-ray sums; each off-ray generator strictly increases
        # the complementary facet value, so the search is finite.
        zero = tuple(0 for _ in base)
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for u in frontier:
                for g in off_ray:
                    v = vadd(u, g)
                    if v not in seen and dot(pi, v) <= budget:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt

        # n_i = mult[i] * ray; on-ray part must absorb base - u exactly.
        step = self.mult[i] // delta
        best = _INF
        for u in seen:
            if dot(pi, u) != budget:
                continue
            diff = vsub(base, u)
            t = diff[coord] // ray[coord]
            if lattice.vscale(t, ray) != diff:
                continue
            if t % delta:
                continue
            tp = t // delta
            k = 0 if tp >= 0 else (-tp + step - 1) // step
            while True:
                val = tp + k * step
                if val >= 0 and scaled.contains(val):
                    break
                k += 1
            if best is _INF or k < best:
                best = k
        return best


def _staircase_class(residue, witness_pos, oracle, rays_e):
    """Minimal S-positions of a d = 2 class whose gap ideal is infinite."""
    n1, n2 = rays_e

    def row_threshold(j):
        return oracle.threshold(vadd(residue, lattice.vscale(j, n2)), 0)

    def col_threshold(a):
        return oracle.threshold(vadd(residue, lattice.vscale(a, n1)), 1)

    minimal = []
    prev = _INF
    j = 0
    guard = 0
    while True:
        guard += 1
        if guard > 100000:
            raise InternalInconsistency("staircase scan did not terminate")
        r = row_threshold(j)
        if r is _INF:
            assert prev is _INF, "row thresholds must be nonincreasing"
            assert j <= witness_pos[1], "witness row must have a finite threshold"
            j += 1
            continue
        if prev is _INF or r < prev:
            minimal.append((r, j))
            if r == 0:
                break
            prev = r
            j += 1
            continue
        assert r == prev, "row thresholds must be nonincreasing"
        cols = [col_threshold(a) for a in range(prev)]
        finite = [c for c in cols if c is not _INF]
        if not finite:
            break
        assert all(c > j for c in finite)
        j = min(finite)
    return _ClassData(
        residue=residue,
        hit=True,
        complete=False,
        minimal_positions=tuple(sorted(minimal)),
        gap_positions=None,
    )


def _build_from_generators(generators, search_bound) -> CSemigroupModel:
    if not generators:
        raise InvalidParameter("need at least one generator")
    d = len(generators[0])
    if any(len(g) != d for g in generators):
        raise DimensionMismatch("generators of mixed dimensions")
    if any(any(x < 0 for x in g) for g in generators):
        raise InvalidParameter("generators must lie in N^d")
    generators = sorted({g for g in generators if any(g)})
    if not generators:
        raise InvalidParameter("need a nonzero generator")

    dirs = lattice.extremal_ray_directions(generators)
    if len(dirs) != d:
        raise NonSimplicialCone(
            f"cone of the generators has {len(dirs)} extremal rays in dimension {d}")
    cone = lattice.cone_from_rays(dirs)
    if len(cone.rays) != d:
        raise NonSimplicialCone("generated cone is not simplicial")

    memo: dict[Point, bool] = {}
    zero = tuple(0 for _ in range(d))

    def member(p: Point) -> bool:
        if p == zero:
            return True
        known = memo.get(p)
        if known is not None:
            return known
        memo[p] = False
        for g in generators:
            q = vsub(p, g)
            if all(x >= 0 for x in q) and cone.contains(q) and member(q):
                memo[p] = True
                break
        return memo[p]

    max_mult = max(total_degree(g) for g in generators) + 1
    rays_e, multipliers = _minimal_ray_elements(cone, member, max_mult)
    pos_rows, pos_det = _position_solver(rays_e)
    par = lattice.parallelepiped_lattice_points(list(rays_e))
    witness = _class_closure(par, pos_rows, pos_det, rays_e, generators)

    def point_of(residue, pos):
        return vadd(residue, _combine(rays_e, pos))

    def pos_of(p):
        nums = [dot(r, p) for r in pos_rows]
        return tuple(n // pos_det for n in nums)

    oracle = _RayOracle(cone, rays_e, multipliers, generators) if d == 2 else None
    classes: dict[Point, _ClassData] = {}
    for f in par:
        if f not in witness:
            classes[f] = _ClassData(residue=f, hit=False, complete=False,
                                    minimal_positions=(), gap_positions=None)
            continue
        thresholds = []
        for i in range(d):
            k = 0
            t = _INF
            while total_degree(point_of(f, tuple(k if j == i else 0 for j in range(d)))) <= search_bound:
                if member(point_of(f, tuple(k if j == i else 0 for j in range(d)))):
                    t = k
                    break
                k += 1
            thresholds.append(t)
        if all(t is not _INF for t in thresholds):
            classes[f] = _grid_class(f, thresholds, rays_e, member, point_of, search_bound)
            continue
        if d != 2:
            raise GapBoundExceeded(
                f"class of {f}: no semigroup element found on an axis within "
                f"degree {search_bound} (increase the bound, or the input is "
                f"not a C-semigroup)")
        exact = [oracle.threshold(f, i) if thresholds[i] is _INF else thresholds[i]
                 for i in range(2)]
        if all(t is not _INF for t in exact):
            raise GapBoundExceeded(
                f"class of {f} has gaps beyond total degree {search_bound}")
        w_pos = pos_of(vsub(witness[f], f))
        classes[f] = _staircase_class(f, w_pos, oracle, rays_e)

    return _finish_model(d, cone, rays_e, multipliers, classes, par,
                         pos_rows, pos_det, member,
                         candidate_min_gens=generators)


def _build_from_gap_set(cone: RationalCone, gaps) -> CSemigroupModel:
    d = cone.dim
    if len(cone.rays) != d:
        raise NonSimplicialCone(
            "gap-set models need a full-dimensional simplicial cone")
    if any(any(x < 0 for x in r) for r in cone.rays):
        raise InvalidParameter("cone rays must lie in N^d")
    gapset = set()
    for g in gaps:
        if len(g) != d:
            raise DimensionMismatch(f"gap {g} has wrong dimension")
        if not all(x >= 0 for x in g) or not cone.contains(g):
            raise InvalidParameter(f"gap {g} lies outside the cone")
        if not any(g):
            raise InvalidParameter("0 cannot be a gap")
        gapset.add(tuple(g))

    def member(p: Point) -> bool:
        return (all(x >= 0 for x in p) and cone.contains(p) and p not in gapset)

    # Closure: no gap may split into two nonzero semigroup elements.
    for g in sorted(gapset):
        for a in itertools.product(*(range(x + 1) for x in g)):
            if not any(a) or a == g:
                continue
            b = vsub(g, a)
            if cone.contains(a) and cone.contains(b) and a not in gapset and b not in gapset:
                raise NotASemigroup(
                    f"gap {g} = {a} + {b} with both parts in the complement",
                    witness=(g, a, b))

    max_gap_deg = max((total_degree(g) for g in gapset), default=0)
    rays_e, multipliers = _minimal_ray_elements(cone, member, max_gap_deg + 2)
    pos_rows, pos_det = _position_solver(rays_e)
    par = lattice.parallelepiped_lattice_points(list(rays_e))

    def pos_of(p):
        nums = [dot(r, p) for r in pos_rows]
        return tuple(n // pos_det for n in nums)

    def point_of(residue, pos):
        return vadd(residue, _combine(rays_e, pos))

    gap_positions_by_class: dict[Point, list[Point]] = {f: [] for f in par}
    for g in gapset:
        dec_nums = [dot(r, g) for r in pos_rows]
        pos = tuple(n // pos_det for n in dec_nums)
        residue = vsub(g, _combine(rays_e, pos))
        gap_positions_by_class[residue].append(pos)

    classes: dict[Point, _ClassData] = {}
    d_ = d
    for f in par:
        gp = sorted(gap_positions_by_class[f])
        if not gp:
            classes[f] = _ClassData(residue=f, hit=True, complete=True,
                                    minimal_positions=(tuple(0 for _ in range(d_)),),
                                    gap_positions=())
            continue
        gpset = set(gp)
        corner = tuple(max(p[i] for p in gp) + 1 for i in range(d_))
        minimal = []
        for pos in itertools.product(*(range(c + 1) for c in corner)):
            if pos in gpset:
                continue
            if all(pos[i] == 0 or tuple(pos[k] - (k == i) for k in range(d_)) in gpset
                   for i in range(d_)):
                minimal.append(pos)
        classes[f] = _ClassData(residue=f, hit=True, complete=True,
                                minimal_positions=tuple(sorted(minimal)),
                                gap_positions=tuple(gp))

    return _finish_model(d, cone, rays_e, multipliers, classes, par,
                         pos_rows, pos_det, member,
                         candidate_min_gens=None)


def _finish_model(d, cone, rays_e, multipliers, classes, par,
                  pos_rows, pos_det, member, candidate_min_gens) -> CSemigroupModel:
    all_hit = all(c.hit for c in classes.values())
    complete = all_hit and all(c.complete for c in classes.values())

    for c in classes.values():
        c.minimal_points = tuple(sorted(
            vadd(c.residue, _combine(rays_e, p)) for p in c.minimal_positions))

    gaps = None
    if complete:
        pts = []
        for c in classes.values():
            for pos in c.gap_positions:
                pts.append(vadd(c.residue, _combine(rays_e, pos)))
        gaps = tuple(sorted(pts))

    certificate = None
    if all_hit:
        top = 0
        for c in classes.values():
            for pos in c.minimal_positions:
                top = max(top, max(pos, default=0))
        k = top + 1
        certificate = _combine(rays_e, tuple(k for _ in range(d)))

    model = CSemigroupModel(
        dim=d,
        cone=cone,
        extremal_rays=rays_e,
        ray_multipliers=multipliers,
        min_generators=(),
        gaps=gaps,
        gaps_complete=complete,
        conductor_certificate=certificate,
        class_table={c.residue: c.minimal_points for c in
                     sorted(classes.values(), key=lambda c: c.residue)},
        _classes=classes,
        _pos_rows=pos_rows,
        _pos_det=pos_det,
    )

    if certificate is not None:
        for f in par:
            if not model.contains(vadd(certificate, f)):
                raise InternalInconsistency(
                    f"conductor certificate {certificate} fails at residue {f}")

    model.min_generators = _minimal_generators(model, candidate_min_gens)
    return model


def _minimal_generators(model, candidates) -> tuple[Point, ...]:
    if candidates is None:
        candidates = _gap_set_generator_candidates(model)
    candidates = sorted({tuple(c) for c in candidates})
    if not candidates:
        return ()
    # x = a + b with a, b nonzero forces min(deg a, deg b) <= deg(x) / 2.
    half_bound = max(max(total_degree(x) for x in candidates) // 2, 1)
    small = [p for p in model.elements_up_to_degree(half_bound) if any(p)]
    out = []
    for x in candidates:
        if not model.contains(x) or not any(x):
            continue
        half = total_degree(x) // 2
        decomposable = False
        for a in small:
            if total_degree(a) > half:
                continue
            b = vsub(x, a)
            if any(v < 0 for v in b) or not any(b):
                continue
            if model.contains(b):
                decomposable = True
                break
        if not decomposable:
            out.append(x)
    return tuple(out)


def _gap_set_generator_candidates(model):
    bound = model.max_gap_degree + max(total_degree(n) for n in model.extremal_rays)
    cands = list(_cone_points_up_to_degree(model.cone, model.dim, bound))
    cands.extend(model.class_table.keys())
    cands.extend(model.extremal_rays)
    return cands


# ---------------------------------------------------------------------------
# Apery sets.


@dataclass(frozen=True)
class AperySet:
    base: tuple[Point, ...]
    elements: tuple[Point, ...]
    maximal_elements: tuple[Point, ...]


def apery_set(model: CSemigroupModel) -> AperySet:
    """Ap(S, E): semigroup elements s with s - n_i outside S for every minimal
    extremal ray element; always finite, one batch per residue class."""
    elements = sorted(p for pts in model.class_table.values() for p in pts)
    order = lattice.semigroup_order(model)
    maximal = lattice.maximals(elements, order)
    return AperySet(base=model.extremal_rays, elements=tuple(elements),
                    maximal_elements=maximal)


def apery_maximals(model: CSemigroupModel, x: Point) -> tuple[Point, ...]:
    """Maximal elements of Ap(S, x) under the semigroup order.

    Candidates are gap translates h + x; the result is checked against the
    pseudo-Frobenius identity Maximals Ap(S, x) = PF(S) + x.
    """
    x = tuple(int(v) for v in x)
    if not any(x):
        raise ZeroShift("the Apery shift must be nonzero")
    if not model.contains(x):
        raise NotInSemigroup(f"{x} is not in the semigroup")
    model.require_complete()
    if not model.gaps:
        raise NoGaps("gap-free semigroup: Ap(S, x) has no maximal structure here")

    out = []
    for h in model.gaps:
        m = vadd(h, x)
        if not model.contains(m):
            continue
        if all(model.contains(vsub(vadd(m, g), x)) for g in model.min_generators):
            out.append(m)
    out = tuple(sorted(out))

    pf = tuple(sorted(
        h for h in model.gaps
        if all(model.contains(vadd(h, g)) for g in model.min_generators)))
    expected = tuple(sorted(vadd(h, x) for h in pf))
    if out != expected:
        raise InternalInconsistency(
            f"Maximals Ap(S, {x}) = {out} but PF(S) + {x} = {expected}")
    return out
