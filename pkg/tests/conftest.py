import random

import pytest

from pseudoalg import liealg

CATALOG = ("abelian1", "abelian2", "abelian3", "solv2", "heis3", "sl2")


@pytest.fixture
def rng():
    return random.Random(20260801)


@pytest.fixture(params=CATALOG)
def catalog_algebra(request):
    return liealg.algebra_by_name(request.param)


def random_helt(alg, deg, rng, terms=3):
    from fractions import Fraction
    from pseudoalg.pbw import HElt, multiindices_up_to
    mis = multiindices_up_to(alg.dim, deg)
    out = {}
    for _ in range(terms):
        I = rng.choice(mis)
        out[I] = out.get(I, 0) + Fraction(rng.randint(-3, 3))
    return HElt(alg, out)


def random_melt(module, deg, rng, terms=2):
    from fractions import Fraction
    from pseudoalg.pbw import multiindices_up_to
    from pseudoalg.tensor import MElt
    mis = multiindices_up_to(module.alg.dim, deg)
    m = MElt.zero(module)
    for _ in range(terms):
        m._bump(rng.choice(mis), rng.choice(module.gens), Fraction(rng.randint(-2, 2)))
    return m
