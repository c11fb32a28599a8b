"""Monotone cubic interpolation kernel against scipy's reference."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.interpolate import PchipInterpolator

from nozflow.interp import hermite_eval, pchip_interp, pchip_slopes


@given(st.integers(0, 2**32 - 1), st.integers(4, 60), st.booleans())
@settings(max_examples=80, deadline=None)
def test_matches_scipy_pchip(seed, n, monotone):
    rng = np.random.default_rng(seed)
    y = np.cumsum(rng.normal(size=n))
    if monotone:
        y = np.sort(y)
    dx = float(rng.uniform(0.1, 2.0))
    xq = rng.uniform(0.0, (n - 1) * dx, 37)
    ours = pchip_interp(y, dx, xq)
    ref = PchipInterpolator(np.arange(n) * dx, y)(xq)
    np.testing.assert_allclose(ours, ref, rtol=1e-12, atol=1e-12)


@given(st.integers(0, 2**32 - 1), st.integers(4, 80))
@settings(max_examples=80, deadline=None)
def test_monotone_data_gives_monotone_values(seed, n):
    rng = np.random.default_rng(seed)
    y = np.sort(rng.normal(size=n))
    xq = np.sort(rng.uniform(0.0, n - 1.0, 64))
    v = pchip_interp(y, 1.0, xq)
    assert np.all(np.diff(v) >= -1e-14)


def test_exact_on_linear_data():
    y = 3.0 + 0.7 * np.arange(11)
    xq = np.linspace(0.0, 10.0, 57)
    np.testing.assert_allclose(pchip_interp(y, 1.0, xq), 3.0 + 0.7 * xq, rtol=1e-15)


def test_constant_data_is_fixed_point():
    y = np.full(9, 2.5)
    xq = np.linspace(0.0, 8.0, 33)
    assert np.all(pchip_interp(y, 1.0, xq) == 2.5)


def test_range_bounded():
    rng = np.random.default_rng(7)
    y = rng.normal(size=25)
    xq = rng.uniform(0, 24, 2000)
    v = pchip_interp(y, 1.0, xq)
    assert v.min() >= y.min() - 1e-12 and v.max() <= y.max() + 1e-12


def test_queries_clipped_to_domain():
    y = np.array([0.0, 1.0, 4.0, 9.0])
    m = pchip_slopes(y, 1.0)
    v = hermite_eval(y, m, 1.0, np.array([-5.0, 50.0]))
    assert v[0] == y[0] and v[1] == pytest.approx(y[-1], abs=1e-12)
