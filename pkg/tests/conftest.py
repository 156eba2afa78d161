from itertools import combinations

import numpy as np
import pytest
from hypothesis import strategies as st

from mqattack.boolpoly import BooleanPolynomial, BooleanSystem
from mqattack.lift import IntPolynomial
from mqattack.macaulay import exponents_upto


def quad_monomials(n):
    return [0] + [1 << i for i in range(n)] + [(1 << i) | (1 << j) for i, j in combinations(range(n), 2)]


def random_bool_system(rng, n, r, max_terms=3):
    monos = quad_monomials(n)
    polys = []
    for _ in range(r):
        t = min(int(rng.integers(1, max_terms + 1)), len(monos))
        f = BooleanPolynomial.from_monomials(rng.choice(monos, size=t, replace=False).tolist())
        if f:
            polys.append(f)
    return BooleanSystem(tuple(f"x{i + 1}" for i in range(n)), tuple(polys))


def random_int_poly(rng, n, max_deg=2, max_terms=4, coef=3):
    exps = exponents_upto(n, max_deg)
    terms = []
    for k in rng.choice(len(exps), size=int(rng.integers(1, max_terms + 1))):
        c = int(rng.integers(-coef, coef + 1)) or 1
        terms.append((tuple((i, int(x)) for i, x in enumerate(exps[k]) if x), c))
    return IntPolynomial(terms)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# hypothesis strategies

def bool_polys(n, max_terms=6):
    return st.lists(st.integers(0, (1 << n) - 1), max_size=max_terms).map(BooleanPolynomial.from_monomials)


def int_polys(n, max_exp=2, max_terms=4):
    mono = st.lists(st.integers(0, max_exp), min_size=n, max_size=n).map(
        lambda e: tuple((i, x) for i, x in enumerate(e) if x))
    return st.lists(st.tuples(mono, st.integers(-4, 4)), min_size=1, max_size=max_terms).map(IntPolynomial)
