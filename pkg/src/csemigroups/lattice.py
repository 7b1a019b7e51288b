"""Exact lattice geometry: integer points, partial orders, simplicial rational cones.

Points are plain tuples of Python ints, so every computation is arbitrary
precision. Cones are stored with both generators (primitive rays) and a dual
description (integer facet normals); membership is "all facet inner products
nonnegative", which for the supported cone shapes is exactly membership in the
rational span of the rays with nonnegative coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    DimensionMismatch,
    NonPointedCone,
    NonSimplicialCone,
    SingularRays,
)

Point = tuple[int, ...]


def vadd(a: Point, b: Point) -> Point:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Point, b: Point) -> Point:
    return tuple(x - y for x, y in zip(a, b))


def vscale(k: int, v: Point) -> Point:
    return tuple(k * x for x in v)


def dot(a: Point, b: Point) -> int:
    return sum(x * y for x, y in zip(a, b))


def total_degree(p: Point) -> int:
    return sum(p)


def is_nonneg(p: Point) -> bool:
    return all(x >= 0 for x in p)


def primitive(v: Point) -> Point:
    """Divide an integer vector by the gcd of its entries (0 stays 0)."""
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


# ---------------------------------------------------------------------------
# Small exact linear algebra over Fraction.


def _solve(matrix_cols: list[Point], rhs) -> list[Fraction] | None:
    """Solve sum_j x_j * col_j = rhs exactly; None if inconsistent.

    Columns may be fewer than the dimension (overdetermined system); the
    returned solution, when it exists, is the unique one on the column span.
    """
    rows = len(rhs)
    cols = len(matrix_cols)
    a = [[Fraction(matrix_cols[j][i]) for j in range(cols)] + [Fraction(rhs[i])]
         for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if a[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = a[i][cols]
    # Non-pivot columns stay 0; verify in case of linear dependence.
    for i in range(rows):
        s = sum(x[j] * matrix_cols[j][i] for j in range(cols))
        if s != rhs[i]:
            return None
    return x


def _rank(vectors: list[Point]) -> int:
    if not vectors:
        return 0
    rows = [[Fraction(x) for x in v] for v in vectors]
    n = len(rows[0])
    rank = 0
    for c in range(n):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][c]
        rows[rank] = [x / pv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def det_int(cols: list[Point]) -> int:
    """Determinant of the integer matrix with the given columns."""
    n = len(cols)
    if any(len(c) != n for c in cols):
        raise DimensionMismatch("determinant needs a square matrix")
    a = [[Fraction(cols[j][i]) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    assert det.denominator == 1
    return int(det)


def _nonneg_combination(vectors: list[Point], target: Point) -> bool:
    """Exact test: is target a nonnegative rational combination of vectors?

    By Caratheodory it suffices to scan linearly independent subsets of size
    at most dim, solving each square-ish system exactly.
    """
    from itertools import combinations

    if all(x == 0 for x in target):
        return True
    d = len(target)
    idx = range(len(vectors))
    for size in range(1, min(d, len(vectors)) + 1):
        for subset in combinations(idx, size):
            sol = _solve([vectors[j] for j in subset], target)
            if sol is not None and all(x >= 0 for x in sol):
                return True
    return False


def extremal_ray_directions(vectors: list[Point]) -> list[Point]:
    """Primitive directions among `vectors` not expressible as nonnegative
    combinations of the remaining directions."""
    dirs = []
    for v in vectors:
        p = primitive(v)
        if p not in dirs:
            dirs.append(p)
    out = []
    for i, v in enumerate(dirs):
        others = [w for j, w in enumerate(dirs) if j != i]
        if not others or not _nonneg_combination(others, v):
            out.append(v)
    return sorted(out)


# ---------------------------------------------------------------------------
# Cones.


@dataclass(frozen=True)
class RationalCone:
    """Pointed rational cone with primitive ray generators and integer inward
    facet normals; a point lies in the cone iff every normal is nonnegative
    on it."""

    dim: int
    rays: tuple[Point, ...]
    facets: tuple[Point, ...]

    def contains(self, p: Point) -> bool:
        if len(p) != self.dim:
            raise DimensionMismatch(f"point of dim {len(p)} vs cone of dim {self.dim}")
        return all(dot(f, p) >= 0 for f in self.facets)

    def is_orthant(self) -> bool:
        basis = {tuple(1 if i == j else 0 for j in range(self.dim)) for i in range(self.dim)}
        return set(self.rays) == basis


def cone_from_rays(rays) -> RationalCone:
    """Build the dual (facet) description of the cone spanned by `rays`.

    Supports pointed cones whose extremal rays are linearly independent
    (t <= d). For t = d the facet normals are the sign-corrected rows of the
    adjugate of the ray matrix, scaled primitive; for t < d the span equations
    are added as opposite inequality pairs.
    """
    rays = [tuple(int(x) for x in r) for r in rays]
    if not rays:
        raise DimensionMismatch("need at least one ray")
    d = len(rays[0])
    if any(len(r) != d for r in rays):
        raise DimensionMismatch("rays of mixed dimensions")
    if any(all(x == 0 for x in r) for r in rays):
        raise NonPointedCone("zero vector is not a ray")

    prim = []
    for r in rays:
        p = primitive(r)
        if p not in prim:
            prim.append(p)
    for r in prim:
        if _nonneg_combination([v for v in prim if v != r], tuple(-x for x in r)):
            raise NonPointedCone(f"cone contains the line through {r}")
    ext = extremal_ray_directions(prim)
    t = len(ext)
    if t > d or _rank(ext) < t:
        raise NonSimplicialCone(
            f"{t} extremal rays in dimension {d}; only simplicial (and lower"
            f" dimensional independent) cones are supported")

    if t == d:
        det = det_int(ext)
        if det == 0:
            raise NonSimplicialCone("extremal rays are linearly dependent")
        facets = []
        for i in range(d):
            # Row i of the inverse, cleared of denominators.
            e_i = tuple(1 if k == i else 0 for k in range(d))
            sol_cols = [tuple(ext[j][k] for j in range(d)) for k in range(d)]
            # Solve row * M = e_i, i.e. M^T * row^T = e_i.
            row = _solve(sol_cols, e_i)
            assert row is not None
            den = 1
            for x in row:
                den = den * x.denominator // gcd(den, x.denominator)
            facets.append(primitive(tuple(int(x * den) for x in row)))
        return RationalCone(dim=d, rays=tuple(ext), facets=tuple(facets))

    # t < d: coefficient functionals on the span plus span equalities.
    facets: list[Point] = []
    for i in range(t):
        # Functional returning the i-th coordinate w.r.t. the ray basis, as a
        # rational row of the pseudo-inverse (G^{-1} R^T with G the Gram matrix).
        gram_cols = [tuple(dot(ext[j], ext[k]) for j in range(t)) for k in range(t)]
        e_i = tuple(1 if k == i else 0 for k in range(t))
        w = _solve(gram_cols, e_i)
        assert w is not None
        row = [sum(w[j] * Fraction(ext[j][k]) for j in range(t)) for k in range(d)]
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        facets.append(primitive(tuple(int(x * den) for x in row)))
    # Integer kernel of the transpose: vectors orthogonal to every ray.
    kernel = _integer_orthogonal_complement(ext)
    for k in kernel:
        facets.append(k)
        facets.append(tuple(-x for x in k))
    return RationalCone(dim=d, rays=tuple(ext), facets=tuple(facets))


def _integer_orthogonal_complement(vectors: list[Point]) -> list[Point]:
    """Primitive integer basis of {x : v . x = 0 for all v}."""
    d = len(vectors[0])
    rows = [[Fraction(x) for x in v] for v in vectors]
    pivots: list[int] = []
    r = 0
    for c in range(d):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(d) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * d
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        den = 1
        for x in vec:
            den = den * x.denominator // gcd(den, x.denominator)
        basis.append(primitive(tuple(int(x * den) for x in vec)))
    return basis


def cone_contains(cone: RationalCone, p: Point) -> bool:
    return cone.contains(tuple(p))


def orthant(d: int) -> RationalCone:
    rays = [tuple(1 if i == j else 0 for j in range(d)) for i in range(d)]
    return cone_from_rays(rays)


# ---------------------------------------------------------------------------
# Partial orders.


@dataclass(frozen=True)
class PartialOrder:
    """One of the three orders x <= y iff y - x lies in L, for L = N^d,
    L = cone intersect N^d, or L = S."""

    kind: str
    cone: RationalCone | None = None
    model: object | None = None

    def leq(self, a: Point, b: Point) -> bool:
        if len(a) != len(b):
            raise DimensionMismatch("points of different dimensions")
        diff = vsub(b, a)
        if self.kind == "natural":
            return is_nonneg(diff)
        if self.kind == "cone":
            return is_nonneg(diff) and self.cone.contains(diff)
        return self.model.contains(diff)


def natural_order() -> PartialOrder:
    return PartialOrder(kind="natural")


def cone_order(cone: RationalCone) -> PartialOrder:
    return PartialOrder(kind="cone", cone=cone)


def semigroup_order(model) -> PartialOrder:
    return PartialOrder(kind="semigroup", model=model)


def leq(order: PartialOrder, a: Point, b: Point) -> bool:
    return order.leq(tuple(a), tuple(b))


def maximals(points, order: PartialOrder) -> tuple[Point, ...]:
    """Elements of `points` not strictly below another element; sorted."""
    pts = sorted({tuple(p) for p in points})
    out = []
    for p in pts:
        if not any(q != p and order.leq(p, q) for q in pts):
            out.append(p)
    return tuple(out)


# ---------------------------------------------------------------------------
# Fundamental domain enumeration.


def parallelepiped_lattice_points(rays) -> tuple[Point, ...]:
    """All integer points in the half-open cell {sum l_i r_i : 0 <= l_i < 1};
    there are exactly |det| of them."""
    rays = [tuple(int(x) for x in r) for r in rays]
    d = len(rays[0])
    if len(rays) != d or any(len(r) != d for r in rays):
        raise SingularRays("need d linearly independent vectors in dimension d")
    det = det_int(rays)
    if det == 0:
        raise SingularRays("vectors are linearly dependent")

    corners = []
    for mask in range(1 << d):
        c = tuple(sum(rays[i][k] for i in range(d) if mask >> i & 1) for k in range(d))
        corners.append(c)
    lo = [min(c[k] for c in corners) for k in range(d)]
    hi = [max(c[k] for c in corners) for k in range(d)]

    found = []

    def scan(prefix):
        k = len(prefix)
        if k == d:
            sol = _solve(rays, prefix)
            if sol is not None and all(0 <= x < 1 for x in sol):
                found.append(tuple(prefix))
            return
        for v in range(lo[k], hi[k] + 1):
            scan(prefix + [v])

    scan([])
    assert len(found) == abs(det)
    return tuple(sorted(found))
