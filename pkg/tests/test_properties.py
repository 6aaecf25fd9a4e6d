import random

import pytest
from hypothesis import given, settings, strategies as st

from properties import PROPERTIES

FRAMES = ["powers", "twisted", "plane", "vars"]


@pytest.mark.parametrize("name", list(PROPERTIES))
@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), which=st.sampled_from(FRAMES))
def test_property(frames, name, seed, which):
    assert PROPERTIES[name](frames[which], random.Random(seed))
