import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cauchy_gabor import (
    GaborLattice,
    LatticeIndex,
    OverflowGuardError,
    ParameterError,
    normalize_lattice,
    tf_shift_eval,
    window_eval,
)
from cauchy_gabor.lattice import band_index, shifted_sine

pos = st.floats(0.05, 3.0)


@st.composite
def lattices(draw, max_w=0.5):
    alpha = draw(st.floats(0.3, 3.0))
    density = draw(st.floats(0.15, 1.0))
    w = draw(st.floats(0.01, max_w))
    return GaborLattice(alpha, density / alpha, w)


def test_window_examples():
    assert window_eval(0.0, 1.0) == pytest.approx(1j, abs=1e-15)
    assert window_eval(1.0, 1.0) == pytest.approx(0.5 + 0.5j, abs=1e-15)


@given(st.floats(-50, 50), pos)
def test_window_symmetry_and_modulus(t, w):
    assert window_eval(-t, w) == pytest.approx(-np.conj(window_eval(t, w)), rel=1e-14, abs=1e-300)
    assert abs(window_eval(t, w)) == pytest.approx(1 / math.hypot(t, w), rel=1e-14)


def test_window_finite_on_dense_grid():
    t = np.linspace(-100, 100, 200001)
    assert np.all(np.isfinite(window_eval(t, 1e-3)))


@pytest.mark.parametrize("t, w", [(math.inf, 1.0), (math.nan, 1.0), (0.0, 0.0), (0.0, -1.0)])
def test_window_rejects_bad_input(t, w):
    with pytest.raises(ParameterError):
        window_eval(t, w)


def test_tf_shift_reference_value():
    lat = GaborLattice(1.0, 0.5, 1.0)
    mp = mpmath.exp(2j * mpmath.pi * mpmath.mpf("0.5")) / (1 - 1 - 1j)
    val = tf_shift_eval(1.0, LatticeIndex(1, 1), lat)
    assert val == pytest.approx(complex(mp), abs=1e-15)
    assert val == pytest.approx(-1j, abs=1e-15)


@given(lattices(), st.integers(-5, 5), st.integers(-5, 5))
def test_tf_shift_at_pole_centre(lat, m, n):
    t = lat.alpha * m
    expected = np.exp(2j * np.pi * lat.beta * n * t) * 1j / lat.w
    assert tf_shift_eval(t, (m, n), lat) == pytest.approx(expected, rel=1e-12)


@given(lattices(), st.floats(-20, 20))
def test_tf_shift_identity_index(lat, t):
    assert tf_shift_eval(t, (0, 0), lat) == window_eval(t, lat.w)


@given(lattices(), st.integers(-8, 8), st.integers(-8, 8))
def test_tf_shift_modulus(lat, m, n):
    t = np.linspace(-15, 15, 301)
    got = np.abs(tf_shift_eval(t, (m, n), lat))
    np.testing.assert_allclose(got, np.abs(window_eval(t - lat.alpha * m, lat.w)), rtol=1e-13)


def test_normalize_examples():
    norm, scale = normalize_lattice(GaborLattice(0.5, 2.0, 1.0))
    assert (norm.alpha, norm.beta, norm.w, scale) == (1.0, 1.0, 2.0, 2.0)
    norm, scale = normalize_lattice(GaborLattice(0.7, 1.0, 0.3))
    assert (norm.alpha, norm.beta, norm.w, scale) == (0.7, 1.0, 0.3, 1.0)


@given(lattices())
def test_normalize_preserves_products_and_is_idempotent(lat):
    norm, scale = normalize_lattice(lat)
    assert norm.alpha == lat.alpha * lat.beta
    assert norm.w == lat.beta * lat.w
    assert scale == lat.beta
    again, s2 = normalize_lattice(norm)
    assert again == norm and s2 == 1.0


@pytest.mark.parametrize(
    "args",
    [(0.0, 1.0, 0.1), (1.0, -1.0, 0.1), (1.0, 1.0, 0.0), (1.0, 1.5, 0.1), (True, 1.0, 0.1), (math.inf, 0.5, 0.1), ("1", 1.0, 0.1)],
)
def test_invalid_lattices(args):
    with pytest.raises(ParameterError):
        GaborLattice(*args)


def test_critical_density_allowed():
    lat = GaborLattice(1.0, 1.0, 0.1)
    assert lat.is_critical and lat.band == 1
    assert GaborLattice(3.0, 1 / 3, 0.1).is_critical


def test_overflow_guard():
    with pytest.raises(OverflowGuardError):
        GaborLattice(0.01, 1.0, 2.0)
    with pytest.raises(OverflowGuardError):
        GaborLattice(1.0, 0.01, 120.0)  # 2 pi w beta ceil(1/(alpha beta)) = 754
    GaborLattice(1.0, 1.0, 100.0)  # 2 pi w = 628 < 700


@pytest.mark.parametrize("density, n", [(1.0, 1), (0.7, 1), (0.5, 2), (0.45, 2), (1 / 3, 3), (0.3, 3), (0.25, 4), (0.22, 4)])
def test_band_index(density, n):
    assert band_index(density) == n


def test_numpy_scalars_accepted():
    lat = GaborLattice(np.float64(1.0), np.int64(1), np.float32(0.5))
    assert isinstance(lat.alpha, float) and lat.beta == 1.0


@given(lattices(), st.floats(-10, 10), st.floats(-1, 1))
def test_shifted_sine_matches_complex_sine(lat, x, y):
    z = x + 1j * y
    expected = np.sin(np.pi * (z + 1j * lat.w) / lat.alpha)
    assert shifted_sine(z, lat, +1) == pytest.approx(expected, rel=1e-12, abs=1e-12)


@given(lattices(), st.floats(-10, 10))
def test_shifted_sine_bounded_below_on_real_line(lat, t):
    assert abs(shifted_sine(t, lat, -1)) >= math.sinh(math.pi * lat.w / lat.alpha) * (1 - 1e-12)
