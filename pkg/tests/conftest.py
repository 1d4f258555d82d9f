import numpy as np
import pytest
from hypothesis import strategies as st

from vecpack import Instance

# weights drawn from a mix of continuous values, exact grid points and ties
_weight = st.one_of(
    st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
    st.sampled_from([0.0, 0.1, 0.2, 0.25, 0.3, 0.4, 0.5, 0.6, 0.7, 0.9, 1.0]),
)


@st.composite
def instances(draw, max_n=40, dims=2, rho_cap=1.0):
    n = draw(st.integers(min_value=0, max_value=max_n))
    scale = draw(st.sampled_from([0.1, 0.3, 0.5, 0.7, 0.9, rho_cap]))
    scale = min(scale, rho_cap)
    rows = draw(st.lists(st.tuples(*[_weight] * dims), min_size=n, max_size=n))
    w = np.array(rows, dtype=float).reshape(n, dims) * scale
    return Instance(w)


@pytest.fixture
def trace4():
    return Instance([(0.6, 0.2), (0.2, 0.6), (0.6, 0.2), (0.2, 0.6)])
