"""Slow, independent reference computations used to cross-check the fast paths.

Nothing here shares arithmetic with the main modules: membership is a plain
memoized subtraction search, cone membership is a direct nonnegative rational
feasibility scan over ray subsets, and pseudo-Frobenius elements come from the
literal definition applied inside a finite box.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import BoxTooSmall, OutOfBox


def _as_point(x):
    if isinstance(x, int):
        return (x,)
    return tuple(int(v) for v in x)


@dataclass(frozen=True)
class BoundedBox:
    """Axis-aligned search region: per-coordinate limits plus a total-degree cap."""

    limits: tuple[int, ...]
    degree_cap: int

    def contains(self, p) -> bool:
        return (
            len(p) == len(self.limits)
            and all(0 <= x <= m for x, m in zip(p, self.limits))
            and sum(p) <= self.degree_cap
        )

    def on_boundary(self, p) -> bool:
        return any(x == m for x, m in zip(p, self.limits)) or sum(p) == self.degree_cap


def box_for(limits, degree_cap=None) -> BoundedBox:
    limits = _as_point(limits)
    if degree_cap is None:
        degree_cap = sum(limits)
    return BoundedBox(limits=limits, degree_cap=degree_cap)


def oracle_membership(generators, p, box: BoundedBox) -> bool:
    """Is p a nonnegative integer combination of the generators?

    Complete memoized search; the only pruning keeps coordinates nonnegative,
    which loses nothing because partial sums of a representation stay in N^d.
    """
    gens = [_as_point(g) for g in generators]
    p = _as_point(p)
    if not box.contains(p):
        raise OutOfBox(f"{p} outside the search box")
    memo: dict[tuple, bool] = {}

    def rec(q):
        if all(x == 0 for x in q):
            return True
        hit = memo.get(q)
        if hit is not None:
            return hit
        memo[q] = False
        for g in gens:
            r = tuple(a - b for a, b in zip(q, g))
            if all(x >= 0 for x in r) and rec(r):
                memo[q] = True
                break
        return memo[q]

    return rec(p)


def _int_det(cols):
    n = len(cols)
    if n == 1:
        return cols[0][0]
    if n == 2:
        return cols[0][0] * cols[1][1] - cols[1][0] * cols[0][1]
    total = 0
    sign = 1
    for i in range(n):
        minor = [tuple(c[r] for r in range(n) if r != i) for c in cols[1:]]
        total += sign * cols[0][i] * _int_det(minor)
        sign = -sign
    return total


def in_rational_cone(vectors, p) -> bool:
    """Is p in the rational cone spanned by `vectors`?

    Feasibility scan over subsets: when the vectors span R^d it suffices to
    test the nonsingular d-subsets by Cramer's rule in pure integers; for
    lower-dimensional spans the small subsets are solved exactly over
    Fraction.
    """
    dirs = []
    for v in vectors:
        q = _primitive(_as_point(v))
        if q not in dirs:
            dirs.append(q)
    p = _as_point(p)
    if all(x == 0 for x in p):
        return True
    d = len(p)
    spanning = False
    if len(dirs) >= d:
        for sub in itertools.combinations(dirs, d):
            det = _int_det(sub)
            if det == 0:
                continue
            spanning = True
            sgn = 1 if det > 0 else -1
            ok = True
            for i in range(d):
                replaced = sub[:i] + (p,) + sub[i + 1:]
                if sgn * _int_det(replaced) < 0:
                    ok = False
                    break
            if ok:
                return True
    if spanning:
        return False
    for size in range(1, d + 1):
        for sub in itertools.combinations(dirs, size):
            sol = _gauss_solve(sub, p)
            if sol is not None and all(c >= 0 for c in sol):
                return True
    return False


def _primitive(v):
    from math import gcd

    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def _gauss_solve(cols, rhs):
    rows = len(rhs)
    n = len(cols)
    a = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(rhs[i])] for i in range(rows)]
    piv = []
    r = 0
    for c in range(n):
        k = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if k is None:
            continue
        a[r], a[k] = a[k], a[r]
        a[r] = [x / a[r][c] for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv.append(c)
        r += 1
    sol = [Fraction(0)] * n
    for i, c in enumerate(piv):
        sol[c] = a[i][n]
    for i in range(rows):
        if sum(sol[j] * cols[j][i] for j in range(n)) != rhs[i]:
            return None
    return sol


def semigroup_points_in_box(generators, box: BoundedBox) -> set:
    """All semigroup elements inside the box, grown from 0 by adding generators."""
    gens = [_as_point(g) for g in generators]
    zero = tuple(0 for _ in box.limits)
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(a + b for a, b in zip(p, g))
                if q not in seen and box.contains(q):
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def oracle_gaps(generators, box: BoundedBox) -> tuple:
    """Gaps inside the box: cone points (rational feasibility) missing from the
    semigroup. Raises BoxTooSmall when a gap touches the boundary, since then
    the enumeration cannot be certified complete."""
    gens = [_as_point(g) for g in generators]
    members = semigroup_points_in_box(gens, box)
    gaps = []
    for p in _box_points(box):
        if p in members or all(x == 0 for x in p):
            continue
        if in_rational_cone(gens, p):
            gaps.append(p)
    for g in gaps:
        if box.on_boundary(g):
            raise BoxTooSmall(f"gap {g} touches the box boundary")
    return tuple(sorted(gaps))


def _box_points(box: BoundedBox):
    ranges = [range(0, m + 1) for m in box.limits]
    for p in itertools.product(*ranges):
        if sum(p) <= box.degree_cap:
            yield p


def oracle_pf(generators, box: BoundedBox) -> tuple:
    """Pseudo-Frobenius elements by the definition, applied inside the box.

    Every gap plus every generator must stay inside the box, otherwise the
    literal check would be vacuous at the boundary (BoxTooSmall).
    """
    gens = [_as_point(g) for g in generators]
    members = semigroup_points_in_box(gens, box)
    gaps = oracle_gaps(gens, box)
    for g in gaps:
        for h in gens:
            q = tuple(a + b for a, b in zip(g, h))
            if not box.contains(q):
                raise BoxTooSmall(f"gap {g} plus generator {h} leaves the box")
    nonzero_members = [m for m in members if any(m)]
    pf = []
    for g in gaps:
        ok = True
        for s in nonzero_members:
            q = tuple(a + b for a, b in zip(g, s))
            if not box.contains(q):
                continue
            if q not in members and in_rational_cone(gens, q):
                ok = False
                break
        if ok:
            pf.append(g)
    return tuple(sorted(pf))
