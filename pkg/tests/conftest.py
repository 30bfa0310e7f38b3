import random

import pytest
from hypothesis import settings

from cycpoly.fixtures import random_binary_matroid

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")


@pytest.fixture
def rng():
    return random.Random(12345)


def binary_matroid_strategy(max_elements=8, max_nullity=4):
    from hypothesis import strategies as st

    return st.integers(0, 2**32 - 1).map(
        lambda s: random_binary_matroid(random.Random(s), max_elements, max_nullity)
    )
