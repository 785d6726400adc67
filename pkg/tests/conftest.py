import random

import pytest

from exalg.fields import RATIONALS, gf


@pytest.fixture
def q():
    return RATIONALS


@pytest.fixture
def f7():
    return gf(7)


@pytest.fixture
def f101():
    return gf(101)


@pytest.fixture(params=["q", "gf:101"], ids=["rationals", "gf101"])
def any_field(request):
    return RATIONALS if request.param == "q" else gf(101)


@pytest.fixture
def rng():
    return random.Random(0xE0A1)
