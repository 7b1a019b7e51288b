import random

import pytest

from csemigroups import invariants as inv
from csemigroups import lattice, semigroup
from csemigroups.errors import IncompleteGapSet, NoGaps, NotAnExtremalRay
from csemigroups.lattice import vadd, vscale, vsub
from csemigroups.semigroup import from_gap_set, from_generators
from conftest import CONE3D_PF, SLANTED_GAPS, random_antichain_model


# -- pseudo-Frobenius, special gaps, Frobenius allowable ---------------------

def test_cone3d_pf(cone3d_model):
    assert inv.pseudo_frobenius(cone3d_model) == tuple(sorted(CONE3D_PF))


def test_slanted_pf_is_whole_gap_set(slanted_model):
    assert inv.pseudo_frobenius(slanted_model) == tuple(sorted(SLANTED_GAPS))


def test_gns4_pf(gns4_model):
    assert inv.pseudo_frobenius(gns4_model) == ((1, 0), (1, 1), (2, 1))


def test_slanted_special_gaps(slanted_model):
    expected = tuple(sorted(set(SLANTED_GAPS) - {(1, 1)}))
    assert inv.special_gaps(slanted_model) == expected


def test_cone3d_special_gaps_equal_pf(cone3d_model):
    assert inv.special_gaps(cone3d_model) == inv.pseudo_frobenius(cone3d_model)


def test_special_gaps_numerical_345():
    model = from_generators([(3,), (4,), (5,)])
    assert inv.pseudo_frobenius(model) == ((1,), (2,))
    assert inv.special_gaps(model) == ((2,),)


def test_cone3d_frobenius_allowable(cone3d_model):
    assert inv.frobenius_allowable(cone3d_model) == ((8, 4, 7),)


def test_slanted_frobenius_allowable(slanted_model):
    assert inv.frobenius_allowable(slanted_model) == ((3, 3),)


def test_sharp_remark_frobenius_allowable():
    model = from_gap_set([(1, 0), (0, 1)], [(0, 1), (1, 0), (1, 2), (2, 1)])
    assert inv.frobenius_allowable(model) == ((1, 2), (2, 1))
    assert inv.special_gaps(model) == ((1, 2), (2, 1))


# -- conductor ----------------------------------------------------------------

def test_conductor_complement_gns4(gns4_model):
    cond = inv.conductor(gns4_model)
    assert cond.complement == ((0, 0), (2, 0))
    assert (3, 0) in cond and (0, 2) in cond
    assert (2, 0) not in cond and (1, 1) not in cond


def test_conductor_numerical_two_three():
    model = from_generators([(2,), (3,)])
    cond = inv.conductor(model)
    assert cond.complement == ((0,),)
    assert (2,) in cond and (0,) not in cond


def test_conductor_gap_free():
    model = from_generators([(1, 0), (0, 1)])
    cond = inv.conductor(model)
    assert cond.complement == ()
    assert (0, 0) in cond


def test_conductor_on_incomplete_model(strip_model):
    cond = inv.conductor(strip_model)
    assert cond.complement is None
    assert (3, 2) in cond
    assert (2, 0) not in cond


def test_conductor_residue_criterion_agrees(cone3d_model, slanted_model, gns41_model):
    # "no maximal gap dominates" versus "every residue translate lands in S"
    rng = random.Random(41)
    for model in (cone3d_model, slanted_model, gns41_model):
        cond = inv.conductor(model)
        for _ in range(200):
            p = tuple(rng.randint(0, 10) for _ in range(model.dim))
            residue_route = model.contains(p) and all(
                model.contains(vadd(p, f)) for f in model.class_table)
            assert (p in cond) == residue_route, p


# -- type and reduced type ----------------------------------------------------

def test_type_cone3d(cone3d_model):
    assert inv.type_of(cone3d_model) == 4


def test_type_bresinsky_h2_model():
    from csemigroups.numerical import numerical_semigroup

    model = numerical_semigroup([12, 15, 20, 23]).to_model()
    assert inv.type_of(model) == 5
    assert inv.reduced_type(model, (12,)) == 2


def test_type_symmetric_two_three():
    model = from_generators([(2,), (3,)])
    assert inv.type_of(model) == 1


def test_reduced_type_gns41(gns41_model):
    assert inv.reduced_type(gns41_model, (0, 3)) == 1
    assert inv.reduced_type(gns41_model, (3, 0)) == 1


def test_reduced_type_gns4(gns4_model):
    for ray in gns4_model.extremal_rays:
        assert inv.reduced_type(gns4_model, ray) == 3


def test_reduced_type_requires_extremal_ray(gns4_model):
    with pytest.raises(NotAnExtremalRay):
        inv.reduced_type(gns4_model, (1, 1))


def test_reduced_type_bounds_on_random_models():
    rng = random.Random(99)
    for _ in range(25):
        model = random_antichain_model(rng)
        t = inv.type_of(model)
        for ray in model.extremal_rays:
            s = inv.reduced_type(model, ray)
            assert 1 <= s <= t


# -- classification -----------------------------------------------------------

def test_classify_cone3d(cone3d_model):
    rep = inv.classify(cone3d_model)
    assert rep.quasi_symmetric and rep.quasi_irreducible
    assert not rep.symmetric
    assert rep.tau == 4 and rep.type == 4
    assert rep.cone_frobenius is None


def test_classify_slanted(slanted_model):
    rep = inv.classify(slanted_model)
    assert not rep.quasi_irreducible
    assert not rep.quasi_symmetric
    assert rep.tau == 4 and rep.type == 8


def test_classify_gns41(gns41_model):
    rep = inv.classify(gns41_model)
    assert rep.almost_symmetric and not rep.symmetric
    assert rep.minimal_reduced_type and not rep.maximal_reduced_type
    assert rep.cone_frobenius == (8, 8)
    assert rep.pseudo_frobenius == ((4, 4), (8, 8))


def test_classify_gns4(gns4_model):
    rep = inv.classify(gns4_model)
    assert rep.maximal_reduced_type and rep.almost_symmetric
    assert rep.cone_frobenius == (2, 1)
    assert rep.reduced_type == {(0, 2): 3, (2, 0): 3}


def test_classify_symmetric_numerical():
    model = from_generators([(2,), (3,)])
    rep = inv.classify(model)
    assert rep.symmetric and rep.almost_symmetric
    assert rep.irreducible
    assert rep.minimal_reduced_type


def test_classify_trivial_for_gap_free():
    model = from_generators([(1, 0), (0, 1)])
    rep = inv.classify(model)
    assert rep.trivial
    assert rep.type is None
    assert not rep.symmetric


def test_classify_incomplete_raises(strip_model):
    with pytest.raises(IncompleteGapSet):
        inv.classify(strip_model)


def test_no_gaps_errors():
    model = from_generators([(1, 0), (0, 1)])
    with pytest.raises(NoGaps):
        inv.pseudo_frobenius(model)
    with pytest.raises(NoGaps):
        inv.reduced_type(model, (1, 0))


# -- theorem-level properties ------------------------------------------------

def _containment_chain(rep):
    fa, mx = set(rep.frobenius_allowable), set(rep.cone_maximal_gaps)
    sg, pf = set(rep.special_gaps), set(rep.pseudo_frobenius)
    return fa <= mx <= sg <= pf


def test_containment_chain_on_goldens(cone3d_model, slanted_model, gns41_model, gns4_model):
    for model in (cone3d_model, slanted_model, gns41_model, gns4_model):
        assert _containment_chain(inv.classify(model))


def test_containment_chain_on_random_models():
    rng = random.Random(2719)
    for _ in range(40):
        model = random_antichain_model(rng)
        rep = inv.classify(model)
        assert _containment_chain(rep)
        assert rep.tau <= rep.type
        if rep.quasi_irreducible:
            assert rep.type <= 2 * rep.tau
        if rep.symmetric:
            assert rep.minimal_reduced_type


def test_quasi_irreducible_conditions_probed_directly(cone3d_model):
    # condition (iii) spelled out, independently of classify's internal check
    rep = inv.classify(cone3d_model)
    mx = set(rep.cone_maximal_gaps)
    for h in cone3d_model.gaps:
        assert (vscale(2, h) in mx
                or any(cone3d_model.contains(vsub(f, h)) for f in mx))


def test_minimal_reduced_type_characterization(gns41_model):
    rep = inv.classify(gns41_model)
    fc = rep.cone_frobenius
    order = lattice.cone_order(gns41_model.cone)
    for f in rep.pseudo_frobenius:
        if f == fc:
            continue
        for n in gns41_model.extremal_rays:
            assert order.leq(f, vsub(fc, n))


def test_almost_symmetric_minimal_rt_ray_sums(gns41_model):
    # on an almost symmetric model of minimal reduced type, pairwise ray sums
    # stay under the top gap
    rep = inv.classify(gns41_model)
    assert rep.almost_symmetric and rep.minimal_reduced_type
    order = lattice.cone_order(gns41_model.cone)
    rays = gns41_model.extremal_rays
    for a in rays:
        for b in rays:
            assert order.leq(vadd(a, b), rep.cone_frobenius)


def test_quasi_irreducible_max_rt_half_pf_condition():
    rng = random.Random(1234)
    order_cache = {}
    checked = 0
    models = []
    for _ in range(60):
        models.append(random_antichain_model(rng))
    for model in models:
        rep = inv.classify(model)
        if not rep.quasi_irreducible:
            continue
        checked += 1
        order = lattice.cone_order(model.cone)
        pf = set(rep.pseudo_frobenius)
        mx = rep.cone_maximal_gaps
        condition = True
        for f in mx:
            if any(x % 2 for x in f):
                continue
            half = tuple(x // 2 for x in f)
            if half not in pf:
                continue
            for n in model.extremal_rays:
                if any(order.leq(vadd(half, n), big) for big in mx):
                    condition = False
        assert condition == rep.maximal_reduced_type
    assert checked >= 5


def test_apery_identity_on_random_models():
    rng = random.Random(5150)
    for _ in range(15):
        model = random_antichain_model(rng)
        pf = inv.pseudo_frobenius(model)
        for g in model.min_generators[:4]:
            expected = tuple(sorted(vadd(h, g) for h in pf))
            assert semigroup.apery_maximals(model, g) == expected
