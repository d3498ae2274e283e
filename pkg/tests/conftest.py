from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from orbihrr.arith import Cyclotomic
from orbihrr.groups import s3_standard_rep, sign_rep, symmetric_group, trivial_rep

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

ORDERS = (1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 30, 60)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def cyclotomics(draw, orders=ORDERS):
    n = draw(st.sampled_from(orders))
    terms = draw(st.dictionaries(st.integers(0, n - 1), rationals, max_size=4))
    return Cyclotomic.from_exponents(n, terms)


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def s3_pool(s3):
    return {"trivial": trivial_rep(s3), "sign": sign_rep(s3), "std": s3_standard_rep(s3)}
