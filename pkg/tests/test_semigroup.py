import itertools
import random

import pytest

from csemigroups import lattice, oracle, semigroup
from csemigroups.errors import (
    GapBoundExceeded,
    IncompleteGapSet,
    NoGaps,
    NonSimplicialCone,
    NotASemigroup,
    NotInSemigroup,
    ZeroShift,
)
from csemigroups.semigroup import apery_maximals, apery_set, from_gap_set, from_generators
from conftest import (
    CM13_GENERATORS,
    CONE3D_GAPS,
    CONE3D_GENERATORS,
    SLANTED_GAPS,
    SLANTED_RAYS,
    STRIP_GENERATORS,
    random_antichain_model,
)


# -- building from generators ----------------------------------------------

def test_cone3d_gap_set(cone3d_model):
    assert cone3d_model.gaps_complete
    assert cone3d_model.gaps == tuple(sorted(CONE3D_GAPS))


def test_cone3d_minimal_generators(cone3d_model):
    assert set(cone3d_model.min_generators) == set(CONE3D_GENERATORS)


def test_cone3d_extremal_ray_elements(cone3d_model):
    assert set(cone3d_model.extremal_rays) == {(2, 0, 0), (0, 1, 0), (4, 2, 4)}


def test_cone3d_membership(cone3d_model):
    assert cone3d_model.contains((6, 3, 6))
    assert not cone3d_model.contains((8, 4, 7))
    assert cone3d_model.contains((0, 0, 0))
    assert not cone3d_model.contains((1, 0, 1))  # outside the cone


def test_strip_model_is_incomplete(strip_model):
    assert not strip_model.gaps_complete
    assert strip_model.gaps is None
    assert strip_model.extremal_rays == ((0, 4), (2, 0))
    # all odd points on the x-axis are gaps, so no finite search could end
    assert not strip_model.contains((5, 0))
    assert strip_model.contains((3, 4))


def test_strip_conductor_certificate(strip_model):
    c = strip_model.conductor_certificate
    assert c is not None
    for f in strip_model.class_table:
        assert strip_model.contains(lattice.vadd(c, f))


def test_incomplete_model_refuses_gap_operations(strip_model):
    with pytest.raises(IncompleteGapSet):
        strip_model.require_complete()
    with pytest.raises(IncompleteGapSet):
        apery_maximals(strip_model, (2, 0))


def test_generator_gap_bound_exceeded():
    # the x-axis of the class of (1,0,0) never enters S, and the exact ray
    # analysis is only available in dimension 2
    with pytest.raises(GapBoundExceeded):
        from_generators([(2, 0, 0), (0, 4, 0), (1, 1, 0), (1, 2, 0), (0, 0, 1)], 40)


def test_unhit_classes_build_incomplete():
    # no odd first coordinate is ever reached: whole residue classes are gaps
    m = from_generators([(2, 0, 0), (0, 1, 0), (0, 0, 1)], 40)
    assert not m.gaps_complete
    assert not m.contains((1, 0, 0))
    assert m.conductor_certificate is None


def test_non_simplicial_generators_rejected():
    square_pyramid = [(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1)]
    with pytest.raises(NonSimplicialCone):
        from_generators(square_pyramid)
    with pytest.raises(NonSimplicialCone):
        from_generators([(1, 0)])  # single ray in N^2


def test_gap_free_build():
    m = from_generators([(1, 0), (0, 1)])
    assert m.gaps == ()
    assert m.gaps_complete
    assert apery_set(m).elements == ((0, 0),)


# -- building from gap sets -------------------------------------------------

def test_slanted_round_trip(slanted_model):
    assert slanted_model.gaps == tuple(sorted(SLANTED_GAPS))
    rebuilt = from_gap_set(slanted_model.cone, slanted_model.gaps)
    assert rebuilt.gaps == slanted_model.gaps


def test_slanted_membership(slanted_model):
    assert slanted_model.contains((4, 4))
    assert not slanted_model.contains((1, 1))
    assert slanted_model.contains((0, 0))


def test_slanted_extremal_elements(slanted_model):
    assert slanted_model.extremal_rays == ((2, 4), (6, 2))


def test_closure_violation_witness():
    with pytest.raises(NotASemigroup) as info:
        from_gap_set([(1,)], [(2,)])
    g, a, b = info.value.witness
    assert g == (2,) and lattice.vadd(a, b) == g


def test_closure_violation_in_dimension_two():
    with pytest.raises(NotASemigroup):
        from_gap_set([(1, 0), (0, 1)], [(2, 2)])


def test_model_closure_invariant(slanted_model, gns41_model):
    for model in (slanted_model, gns41_model):
        gapset = set(model.gaps)
        for g in model.gaps:
            for a in itertools.product(*(range(x + 1) for x in g)):
                b = lattice.vsub(g, a)
                if not any(a) or not any(b):
                    continue
                if model.cone.contains(a) and model.cone.contains(b):
                    assert a in gapset or b in gapset


# -- Apery sets --------------------------------------------------------------

def test_strip_apery_set(strip_model):
    ap = apery_set(strip_model)
    assert ap.elements == tuple(sorted(
        [(0, 0), (1, 2), (1, 1), (2, 2), (3, 3), (2, 3), (3, 4), (4, 5)]))
    assert ap.maximal_elements == ((4, 5),)
    assert ap.base == strip_model.extremal_rays


def test_cm13_apery_set():
    model = from_generators(CM13_GENERATORS, 60)
    ap = apery_set(model)
    expected = set(CM13_GENERATORS) - {(3, 0), (0, 4)} | {(0, 0)}
    assert set(ap.elements) == expected
    assert len(ap.elements) == 12


def test_apery_contains_zero_and_covers_classes(cone3d_model, slanted_model, gns41_model):
    for model in (cone3d_model, slanted_model, gns41_model):
        ap = apery_set(model)
        assert (0,) * model.dim in ap.elements
        det = abs(lattice.det_int(list(model.extremal_rays)))
        assert len(ap.elements) >= det
        assert all(pts for pts in model.class_table.values())


def test_apery_maximals_equal_pf_shift(cone3d_model, slanted_model, gns4_model):
    from csemigroups.invariants import pseudo_frobenius

    for model in (cone3d_model, slanted_model, gns4_model):
        pf = pseudo_frobenius(model)
        for g in model.min_generators:
            shifted = tuple(sorted(lattice.vadd(h, g) for h in pf))
            assert apery_maximals(model, g) == shifted


def test_apery_maximals_numerical_example():
    m = from_generators([(2,), (3,)])
    assert apery_maximals(m, (2,)) == ((3,),)


def test_apery_maximals_three_dim(cone3d_model):
    assert apery_maximals(cone3d_model, (0, 1, 0)) == (
        (2, 3, 1), (2, 4, 2), (4, 2, 2), (8, 5, 7))


def test_apery_maximals_preconditions(cone3d_model):
    with pytest.raises(ZeroShift):
        apery_maximals(cone3d_model, (0, 0, 0))
    with pytest.raises(NotInSemigroup):
        apery_maximals(cone3d_model, (1, 0, 0))


def test_apery_maximals_gap_free():
    m = from_generators([(1, 0), (0, 1)])
    with pytest.raises(NoGaps):
        apery_maximals(m, (1, 0))


# -- membership against the oracle -------------------------------------------

def test_membership_matches_oracle_on_random_models():
    rng = random.Random(20240601)
    degree = 25
    for dim in (2, 2, 2, 3, 3):
        model = random_antichain_model(rng, dim=dim, max_coord=4, max_gaps=40)
        gens = model.min_generators
        box = oracle.box_for(tuple(degree for _ in range(dim)), degree)
        members = oracle.semigroup_points_in_box(gens, box)
        for p in itertools.product(range(degree + 1), repeat=dim):
            if sum(p) > degree:
                continue
            assert model.contains(p) == (p in members), p


def test_membership_matches_oracle_spot_checks(cone3d_model):
    rng = random.Random(5)
    box = oracle.box_for((18, 12, 16), 46)
    for _ in range(40):
        p = (rng.randint(0, 12), rng.randint(0, 8), rng.randint(0, 10))
        if not box.contains(p):
            continue
        assert cone3d_model.contains(p) == oracle.oracle_membership(
            CONE3D_GENERATORS, p, box)


def test_class_table_lists_minimal_elements(slanted_model):
    for residue, points in slanted_model.class_table.items():
        for p in points:
            assert slanted_model.contains(p)
            for n in slanted_model.extremal_rays:
                assert not slanted_model.contains(lattice.vsub(p, n))
