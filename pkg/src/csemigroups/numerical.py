"""Numerical semigroups (d = 1) with the classical residue-class machinery.

The Apery set with respect to the multiplicity m is computed as shortest
paths on Z/mZ with the generators as edge weights; everything else (Frobenius
number, gaps, membership, pseudo-Frobenius elements, type, reduced type)
falls out of it in closed form.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import gcd

from .errors import InvalidParameter


@dataclass(frozen=True)
class NumericalSemigroup:
    min_generators: tuple[int, ...]
    multiplicity: int
    frobenius: int
    gaps: tuple[int, ...]
    apery_mod_m: tuple[int, ...] = field(repr=False)

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        return n >= self.apery_mod_m[n % self.multiplicity]

    def apery_set(self, x: int | None = None) -> tuple[int, ...]:
        """Ap(S, x): elements s with s - x not in S. Defaults to x = m."""
        if x is None:
            return tuple(sorted(self.apery_mod_m))
        if x <= 0 or not self.contains(x):
            raise InvalidParameter(f"{x} is not a nonzero element of the semigroup")
        out = [s for s in range(0, self.frobenius + x + 1)
               if self.contains(s) and not self.contains(s - x)]
        return tuple(out)

    def pseudo_frobenius(self) -> tuple[int, ...]:
        """PF(S); the gap-free semigroup N gets the customary {-1}."""
        if not self.gaps:
            return (-1,)
        pf = [h for h in self.gaps
              if all(self.contains(h + g) for g in self.min_generators)]
        return tuple(pf)

    def type(self) -> int:
        return len(self.pseudo_frobenius())

    def reduced_type(self) -> int:
        """|H(S) intersect [F - m + 1, F]|, which is 1 for N."""
        if not self.gaps:
            return 1
        lo = self.frobenius - self.multiplicity + 1
        return sum(1 for h in self.gaps if h >= lo)

    def has_maximal_reduced_type(self) -> bool:
        return self.reduced_type() == self.type()

    def to_model(self):
        from . import semigroup

        cone = _line_cone()
        pres = semigroup.GapSetPresentation(cone=cone, gaps=tuple((g,) for g in self.gaps))
        return semigroup.build(pres)


def _line_cone():
    from .lattice import cone_from_rays

    return cone_from_rays([(1,)])


def numerical_semigroup(generators) -> NumericalSemigroup:
    gens = sorted({int(g) for g in generators})
    if not gens or gens[0] <= 0:
        raise InvalidParameter("generators must be positive integers")
    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        raise InvalidParameter(f"generators have gcd {g} != 1, the gap set would be infinite")

    m = gens[0]
    apery = _apery_by_dijkstra(gens, m)
    frob = max(apery) - m
    gaps = tuple(n for n in range(1, frob + 1) if n < apery[n % m])

    def member(n):
        return n >= 0 and n >= apery[n % m]

    minimal = tuple(a for a in gens
                    if not any(a > b and member(a - b) and a - b != 0 for b in gens))
    return NumericalSemigroup(
        min_generators=minimal,
        multiplicity=m,
        frobenius=frob,
        gaps=gaps,
        apery_mod_m=tuple(apery),
    )


def _apery_by_dijkstra(gens, m):
    """Least semigroup element in each residue class mod m."""
    dist = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if dist[r] is not None and d > dist[r]:
            continue
        for g in gens:
            nd = d + g
            nr = nd % m
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    assert all(d is not None for d in dist)
    return dist


def from_gaps(gaps) -> NumericalSemigroup:
    """Numerical semigroup with exactly the given (finite, closed) gap set."""
    gaps = sorted({int(g) for g in gaps})
    if gaps and gaps[0] <= 0:
        raise InvalidParameter("gaps must be positive")
    frob = gaps[-1] if gaps else -1
    gapset = set(gaps)
    elements = [n for n in range(1, 2 * frob + 4) if n not in gapset]
    gens = []
    for n in elements:
        if not any(a in elements and n - a in elements and n - a > 0
                   for a in elements if a < n):
            gens.append(n)
    ns = numerical_semigroup(gens)
    if set(ns.gaps) != gapset:
        raise InvalidParameter(f"gap set {gaps} is not closed under the semigroup law")
    return ns
