import pytest

from csemigroups import invariants
from csemigroups.errors import InvalidParameter
from csemigroups.numerical import from_gaps, numerical_semigroup


def test_bresinsky_h2_values():
    ns = numerical_semigroup([12, 15, 20, 23])
    assert ns.min_generators == (12, 15, 20, 23)
    assert ns.frobenius == 49
    assert ns.multiplicity == 12
    assert ns.pseudo_frobenius() == (28, 31, 33, 41, 49)
    assert ns.type() == 5
    assert ns.reduced_type() == 2


def test_five_six_seven():
    ns = numerical_semigroup([5, 6, 7])
    assert ns.gaps == (1, 2, 3, 4, 8, 9)
    assert ns.pseudo_frobenius() == (8, 9)
    assert ns.reduced_type() == 2
    assert ns.has_maximal_reduced_type()


def test_whole_line_conventions():
    n = numerical_semigroup([1])
    assert n.gaps == ()
    assert n.frobenius == -1
    assert n.pseudo_frobenius() == (-1,)
    assert n.type() == 1
    assert n.reduced_type() == 1


def test_membership():
    ns = numerical_semigroup([5, 7, 8])
    members = [n for n in range(15) if ns.contains(n)]
    assert members == [0, 5, 7, 8, 10, 12, 13, 14]
    assert not ns.contains(-3)


def test_non_minimal_generators_filtered():
    ns = numerical_semigroup([4, 6, 10, 13])
    assert ns.min_generators == (4, 6, 13)


def test_gcd_not_one_rejected():
    with pytest.raises(InvalidParameter):
        numerical_semigroup([4, 6])


def test_from_gaps_roundtrip():
    ns = from_gaps([1, 2, 3, 4, 6, 9, 11])
    assert ns.min_generators == (5, 7, 8)
    with pytest.raises(InvalidParameter):
        from_gaps([2])  # 2 = 1 + 1 forces 1 to be a gap as well


def test_apery_set_of_multiplicity():
    ns = numerical_semigroup([3, 4, 5])
    assert ns.apery_set() == (0, 4, 5)
    assert ns.apery_set(4) == (0, 3, 5, 6)
    with pytest.raises(InvalidParameter):
        ns.apery_set(2)


@pytest.mark.parametrize("gens", [[2, 3], [3, 4, 5], [5, 7, 8], [4, 6, 9], [5, 6, 7]])
def test_reduced_type_agrees_with_model(gens):
    ns = numerical_semigroup(gens)
    model = ns.to_model()
    ray = (ns.multiplicity,)
    assert invariants.reduced_type(model, ray) == ns.reduced_type()
    assert invariants.type_of(model) == ns.type()
    assert invariants.pseudo_frobenius(model) == tuple((f,) for f in ns.pseudo_frobenius())


def test_model_bridge_gaps():
    ns = numerical_semigroup([5, 7, 8])
    model = ns.to_model()
    assert model.gaps == tuple((g,) for g in ns.gaps)
    assert model.extremal_rays == ((5,),)
