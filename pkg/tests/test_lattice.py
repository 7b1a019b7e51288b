import random

import pytest

from csemigroups import lattice, oracle
from csemigroups.errors import DimensionMismatch, NonPointedCone, SingularRays
from csemigroups.lattice import (
    cone_from_rays,
    cone_order,
    det_int,
    leq,
    maximals,
    natural_order,
    orthant,
    parallelepiped_lattice_points,
    semigroup_order,
)


def test_orthant_facets():
    c = cone_from_rays([(1, 0), (0, 1)])
    assert set(c.facets) == {(1, 0), (0, 1)}
    assert c.contains((5, 7))
    assert c.contains((0, 0))
    assert not c.contains((-1, 3))


def test_slanted_cone_facets_and_membership():
    c = cone_from_rays([(1, 2), (3, 1)])
    assert set(c.facets) == {(2, -1), (-1, 3)}
    assert c.contains((1, 1))
    assert not c.contains((4, 0))
    assert not c.contains((0, 1))


def test_three_dim_cone_membership():
    c = cone_from_rays([(1, 0, 0), (2, 1, 2), (0, 1, 0)])
    assert c.contains((8, 4, 7))
    assert not c.contains((1, 0, 1))


def test_redundant_rays_are_dropped():
    c = cone_from_rays([(1, 0), (1, 1), (0, 1), (2, 3)])
    assert c.rays == ((0, 1), (1, 0))


def test_rays_are_normalized_primitive():
    c = cone_from_rays([(2, 4), (6, 2)])
    assert c.rays == ((1, 2), (3, 1))


def test_non_pointed_cone_rejected():
    with pytest.raises(NonPointedCone):
        cone_from_rays([(1, 1), (-1, -1)])
    with pytest.raises(NonPointedCone):
        cone_from_rays([(1, 1), (-1, 1), (0, -1)])


def test_mixed_dimensions_rejected():
    with pytest.raises(DimensionMismatch):
        cone_from_rays([(1, 0), (0, 1, 0)])


def test_lower_dimensional_cone_membership():
    c = cone_from_rays([(1, 1)])
    assert c.contains((3, 3))
    assert not c.contains((2, 3))
    assert not c.contains((-1, -1))


def test_cone_membership_matches_rational_feasibility():
    rng = random.Random(20240811)
    ray_sets = [
        [(1, 0), (0, 1)],
        [(1, 2), (3, 1)],
        [(2, 1), (1, 3)],
        [(1, 0, 0), (2, 1, 2), (0, 1, 0)],
    ]
    for rays in ray_sets:
        c = cone_from_rays(rays)
        d = c.dim
        for _ in range(1000):
            p = tuple(rng.randint(0, 9) for _ in range(d))
            assert c.contains(p) == oracle.in_rational_cone(rays, p)


def test_order_implications_on_random_pairs(slanted_model):
    rng = random.Random(7)
    cone = slanted_model.cone
    sem = semigroup_order(slanted_model)
    con = cone_order(cone)
    for _ in range(300):
        a = tuple(rng.randint(0, 8) for _ in range(2))
        b = tuple(rng.randint(0, 8) for _ in range(2))
        if sem.leq(a, b):
            assert con.leq(a, b)


def test_cone_order_implies_natural_on_orthant():
    rng = random.Random(8)
    con = cone_order(orthant(2))
    nat = natural_order()
    for _ in range(300):
        a = tuple(rng.randint(0, 8) for _ in range(2))
        b = tuple(rng.randint(0, 8) for _ in range(2))
        if con.leq(a, b):
            assert nat.leq(a, b)


def test_natural_order_examples():
    nat = natural_order()
    assert leq(nat, (1, 2), (2, 2))
    assert not leq(nat, (1, 2), (2, 1))


def test_semigroup_order_reflexive(slanted_model):
    sem = semigroup_order(slanted_model)
    for a in [(0, 0), (2, 4), (5, 5)]:
        assert sem.leq(a, a)


def test_cone_order_example():
    con = cone_order(cone_from_rays([(1, 2), (3, 1)]))
    assert con.leq((1, 1), (3, 3))


def test_maximals_is_antichain_and_idempotent():
    rng = random.Random(9)
    order = natural_order()
    pts = [tuple(rng.randint(0, 6) for _ in range(2)) for _ in range(40)]
    mx = maximals(pts, order)
    assert maximals(mx, order) == mx
    for a in mx:
        for b in mx:
            assert a == b or not order.leq(a, b)


def test_maximals_singleton():
    assert maximals([(3, 1)], natural_order()) == ((3, 1),)


def test_maximals_of_slanted_gaps_under_cone_order(slanted_model):
    order = cone_order(slanted_model.cone)
    mx = maximals(slanted_model.gaps, order)
    assert mx == ((2, 3), (3, 1), (3, 2), (3, 3))


def test_maximals_of_slanted_gaps_under_natural_order(slanted_model):
    assert maximals(slanted_model.gaps, natural_order()) == ((3, 3),)


def test_parallelepiped_unit_cell():
    assert parallelepiped_lattice_points([(1, 0), (0, 1)]) == ((0, 0),)


def test_parallelepiped_axis_aligned():
    pts = parallelepiped_lattice_points([(2, 0), (0, 3)])
    assert len(pts) == 6
    assert set(pts) == {(x, y) for x in range(2) for y in range(3)}


def test_parallelepiped_slanted():
    pts = parallelepiped_lattice_points([(1, 2), (3, 1)])
    assert len(pts) == 5


def test_parallelepiped_count_equals_determinant():
    rng = random.Random(123)
    produced = 0
    while produced < 30:
        d = rng.choice([2, 3])
        rays = [tuple(rng.randint(-5, 5) for _ in range(d)) for _ in range(d)]
        det = det_int(rays)
        if det == 0:
            continue
        produced += 1
        assert len(parallelepiped_lattice_points(rays)) == abs(det)


def test_parallelepiped_singular_rejected():
    with pytest.raises(SingularRays):
        parallelepiped_lattice_points([(1, 2), (2, 4)])
