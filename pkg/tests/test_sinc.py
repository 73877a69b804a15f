"""Tests for the sinc basis and cardinal sums."""

import math

import mpmath as mp
import pytest
from hypothesis import given, strategies as st

from desinc.sinc import SincGrid, cardinal_sum, sinc_basis


def test_basis_at_own_node_is_exactly_one():
    assert sinc_basis(0, 1.0, 0.0) == 1.0
    assert sinc_basis(7, 0.3, 7 * 0.3) == 1.0


def test_basis_at_other_nodes_is_exactly_zero():
    # x = 2*h with k = 3: integer offset, exact zero of sin
    assert sinc_basis(3, 0.5, 1.0) == 0.0
    assert sinc_basis(-2, 0.25, 0.75) == 0.0


def test_basis_closed_form_between_nodes():
    # sin(pi/2)/(pi/2) = 2/pi
    assert sinc_basis(0, 1.0, 0.5) == pytest.approx(2.0 / math.pi, rel=1e-15)


def test_basis_near_node_series_branch():
    # within the series branch u^2/6 is below half an ulp of 1, so the
    # correctly rounded result is exactly 1.0; verify against 40-digit sinc
    mp.mp.dps = 40
    for x in (1e-9, 3e-9, -2e-9):
        value = sinc_basis(0, 1.0, x)
        u = mp.pi * mp.mpf(x)
        exact = mp.sin(u) / u
        assert value == pytest.approx(float(exact), abs=1e-15)
        assert abs(value) <= 1.0


def test_basis_domain_errors():
    with pytest.raises(ValueError):
        sinc_basis(0, 0.0, 1.0)
    with pytest.raises(ValueError):
        sinc_basis(0, -1.0, 1.0)
    with pytest.raises(ValueError):
        sinc_basis(0, 1.0, math.inf)
    with pytest.raises(ValueError):
        sinc_basis(0, 1.0, math.nan)


@given(
    k=st.integers(min_value=-500, max_value=500),
    h=st.floats(min_value=1e-3, max_value=1e3),
    x=st.floats(min_value=-1e5, max_value=1e5),
)
def test_basis_bounded_by_one(k, h, x):
    assert abs(sinc_basis(k, h, x)) <= 1.0


def test_basis_shift_invariance():
    for k in (-5, -1, 0, 2, 9):
        for h in (0.1, 0.5, 1.0, 2.7):
            for x in (-3.3, -0.2, 0.4, 1.9, 12.1):
                assert abs(sinc_basis(k, h, x) - sinc_basis(0, h, x - k * h)) <= 1e-15


def test_grid_validation():
    with pytest.raises(ValueError):
        SincGrid(h=0.0, m=1, n=1)
    with pytest.raises(ValueError):
        SincGrid(h=1.0, m=-1, n=1)
    grid = SincGrid(h=0.5, m=3, n=2)
    assert grid.size == 6
    assert list(grid.indices()) == [-3, -2, -1, 0, 1, 2]


def test_cardinal_sum_of_zeros_is_zero():
    grid = SincGrid(h=0.7, m=4, n=4)
    samples = {k: 0.0 for k in grid.indices()}
    for x in (-2.0, 0.31, 5.5):
        assert cardinal_sum(samples, grid, x) == 0.0


def test_cardinal_sum_reproduces_nodes_bitwise_on_exact_mesh():
    # h = 1 and h = 0.25 are exact in binary, so (x - k*h)/h is integral
    for h in (1.0, 0.25):
        grid = SincGrid(h=h, m=3, n=3)
        samples = {k: math.sin(k + 0.1) for k in grid.indices()}
        for j in grid.indices():
            assert cardinal_sum(samples, grid, j * h) == samples[j]


def test_cardinal_sum_reproduces_nodes_to_relative_tolerance():
    # h = 0.1 is inexact; off-node sinc terms are rounding-level but nonzero
    grid = SincGrid(h=0.1, m=5, n=5)
    samples = {k: 1.0 / (1.0 + (k * 0.1) ** 2) for k in grid.indices()}
    for j in grid.indices():
        value = cardinal_sum(samples, grid, j * 0.1)
        assert value == pytest.approx(samples[j], rel=1e-13)


def test_cardinal_sum_matches_term_by_term_oracle():
    # Independent oracle: plain term-by-term sum at 40 significant digits.
    grid = SincGrid(h=1.0, m=2, n=2)
    samples = {-2: 1.0, -1: 2.0, 0: 3.0, 1: 2.0, 2: 1.0}
    x = 0.25
    mp.mp.dps = 40
    oracle = mp.mpf(0)
    for k in grid.indices():
        u = mp.pi * (mp.mpf(x) - k)
        oracle += samples[k] * mp.sin(u) / u
    # frozen from the oracle: 2.912451829092352650402375...
    assert float(oracle) == pytest.approx(2.9124518290923527, rel=1e-15)
    assert cardinal_sum(samples, grid, x) == pytest.approx(float(oracle), rel=1e-15)


def test_cardinal_sum_accepts_sequence_and_mapping():
    grid = SincGrid(h=0.5, m=2, n=1)
    mapping = {-2: 0.3, -1: -1.2, 0: 0.9, 1: 2.2}
    sequence = [0.3, -1.2, 0.9, 2.2]
    for x in (-0.8, 0.2, 1.4):
        assert cardinal_sum(mapping, grid, x) == cardinal_sum(sequence, grid, x)


def test_cardinal_sum_missing_sample_is_error():
    grid = SincGrid(h=0.5, m=2, n=1)
    with pytest.raises(ValueError, match="missing sample"):
        cardinal_sum({-2: 1.0, -1: 1.0, 1: 1.0}, grid, 0.3)
    with pytest.raises(ValueError, match="expected 4 samples"):
        cardinal_sum([1.0, 2.0, 3.0], grid, 0.3)
