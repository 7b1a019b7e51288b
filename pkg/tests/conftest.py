import random

import pytest

from csemigroups import constructions, lattice, semigroup

# Generators of the three-dimensional cone example used throughout.
CONE3D_GENERATORS = [
    (2, 0, 0), (4, 2, 4), (0, 1, 0), (3, 0, 0), (6, 3, 6), (3, 1, 1),
    (4, 1, 1), (3, 1, 2), (1, 1, 0), (3, 2, 3), (1, 2, 1),
]
CONE3D_GAPS = [
    (1, 0, 0), (1, 1, 1), (2, 1, 1), (2, 1, 2), (2, 2, 1), (2, 2, 2),
    (2, 3, 2), (4, 1, 2), (4, 2, 3), (5, 2, 4), (5, 3, 5), (8, 4, 7),
]
CONE3D_PF = [(2, 2, 1), (2, 3, 2), (4, 1, 2), (8, 4, 7)]

SLANTED_RAYS = [(1, 2), (3, 1)]
SLANTED_GAPS = [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)]

GNS41_GAPS = [
    (0, 1), (0, 2), (0, 4), (0, 5), (0, 7), (0, 8),
    (1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8),
    (2, 0), (2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8),
    (3, 1), (3, 2), (3, 4), (3, 5), (3, 7), (3, 8),
    (4, 0), (4, 1), (4, 2), (4, 3), (4, 4), (5, 2), (5, 5), (5, 8),
    (8, 2), (8, 5), (8, 8),
]

GNS4_GAPS = [(0, 1), (1, 0), (1, 1), (2, 1)]

STRIP_GENERATORS = [(0, 4), (2, 0), (1, 1), (1, 2)]
CM13_GENERATORS = [
    (3, 0), (0, 4), (1, 6), (2, 6), (2, 8), (2, 9), (3, 6), (3, 7),
    (4, 3), (4, 4), (4, 5), (5, 3), (6, 5),
]


@pytest.fixture(scope="session")
def cone3d_model():
    return semigroup.from_generators(CONE3D_GENERATORS)


@pytest.fixture(scope="session")
def slanted_model():
    return semigroup.from_gap_set(SLANTED_RAYS, SLANTED_GAPS)


@pytest.fixture(scope="session")
def gns41_model():
    return semigroup.from_gap_set([(1, 0), (0, 1)], GNS41_GAPS)


@pytest.fixture(scope="session")
def gns4_model():
    return semigroup.from_gap_set([(1, 0), (0, 1)], GNS4_GAPS)


@pytest.fixture(scope="session")
def strip_model():
    return semigroup.from_generators(STRIP_GENERATORS, 60)


def random_antichain_model(rng: random.Random, dim=2, max_coord=4, max_points=4,
                           max_gaps=30):
    """Random generalized numerical semigroup built from a random antichain;
    resamples until the gap count stays manageable."""
    cone = lattice.orthant(dim)
    order = lattice.natural_order()
    while True:
        pts = {tuple(rng.randint(0, max_coord) for _ in range(dim))
               for _ in range(rng.randint(1, max_points))}
        pts = {p for p in pts if any(p)}
        if not pts:
            continue
        antichain = lattice.maximals(pts, order)
        model = constructions.antichain_semigroup(cone, antichain)
        if model.gaps and len(model.gaps) <= max_gaps:
            return model


def random_numerical_generators(rng: random.Random, count=3, limit=30):
    """Random generator list with gcd 1 and all entries at most `limit`."""
    from math import gcd

    while True:
        gens = sorted({rng.randint(2, limit) for _ in range(count)})
        g = 0
        for x in gens:
            g = gcd(g, x)
        if g == 1 and gens:
            return gens
