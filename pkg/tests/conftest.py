import random

import pytest

from liesc.domains import GF, RATIONALS
from liesc.linear import Subspace


def random_value(domain, rng):
    if domain.kind == "prime":
        return rng.randrange(domain.p)
    from fractions import Fraction
    return Fraction(rng.randint(-6, 6), rng.randint(1, 5))


def random_vector(domain, n, rng):
    return tuple(random_value(domain, rng) for _ in range(n))


def random_subspace(domain, n, rng, max_gens=None):
    k = rng.randint(0, max_gens if max_gens is not None else n)
    return Subspace.from_rows(domain, n, [random_vector(domain, n, rng) for _ in range(k)])


@pytest.fixture
def rng():
    return random.Random(20240817)


@pytest.fixture(params=[GF(2), GF(3), GF(5), RATIONALS], ids=lambda d: str(d))
def any_domain(request):
    return request.param
