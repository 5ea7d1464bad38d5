"""Brute-force frame machinery: inner products, coefficient tables, truncated sums."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from ..closed_form.dual import dual_window
from ..lattice import GaborLattice, LatticeIndex
from ..signal import SampledSignal


class TruncationWarning(UserWarning):
    """The sampled signal is not negligible at the edge of its grid."""


# |f| at the grid edges relative to max|f| above which quadrature is flagged.
EDGE_TOL = 1e-4


def edge_ratio(f: SampledSignal, fraction: float = 0.02) -> float:
    v = np.abs(f.values)
    peak = v.max()
    if peak == 0:
        return 0.0
    width = max(1, int(fraction * v.size))
    return float(max(v[:width].max(), v[-width:].max()) / peak)


def _warn_if_truncated(f: SampledSignal, tol: float) -> bool:
    ratio = edge_ratio(f)
    if ratio > tol:
        warnings.warn(f"signal edge/peak ratio {ratio:.2e} exceeds {tol:.0e}", TruncationWarning, stacklevel=3)
        return True
    return False


def quadrature_inner_product(f: SampledSignal, idx: LatticeIndex, lat: GaborLattice, edge_tol: float = EDGE_TOL) -> complex:
    """Trapezoidal int f(t) conj(g_{m,n}(t)) dt on the grid of ``f``."""
    _warn_if_truncated(f, edge_tol)
    m, n = idx
    t = f.t
    conj_g = np.exp(-2j * np.pi * lat.beta * n * t) / (t - lat.alpha * m + 1j * lat.w)
    return complex(np.sum(f.values * conj_g) * f.dt)


def residue_coefficient(h_k, k: int, idx: LatticeIndex, lat: GaborLattice) -> complex:
    """<f_k, g_{m,n}> from the pole of g_{m,n} at alpha m - i w.

    f_k(t) = e^{2 pi i k t} h_k(t) with h_k of spectrum in [0, 1]; the lattice
    must have beta = 1.  Closing the contour in the lower half-plane (k < n)
    picks up the pole with a clockwise orientation, hence the factor -2 pi i.
    """
    if lat.beta != 1:
        raise ValueError("the residue formula needs beta = 1; normalize the lattice first")
    m, n = idx
    if k >= n:
        return 0j
    a, w = lat.alpha, lat.w
    z = a * m - 1j * w
    val = np.exp(-2j * np.pi * n * a * m) * complex(h_k(z)) * np.exp(2j * np.pi * k * a * m) * np.exp(2 * np.pi * w * (k - n))
    return complex(-2j * np.pi * val)


@dataclass(frozen=True, eq=False)
class FrameCoefficientTable:
    """c[m + M, n + N] = <f, g_{m,n}> (no 1/(2 pi i) factor)."""

    M: int
    N: int
    c: np.ndarray

    def __post_init__(self):
        if self.c.shape != (2 * self.M + 1, 2 * self.N + 1):
            raise ValueError("coefficient table has the wrong shape")
        if not np.all(np.isfinite(self.c)):
            raise ValueError("coefficients must be finite")

    def __getitem__(self, idx) -> complex:
        m, n = idx
        return complex(self.c[m + self.M, n + self.N])

    @property
    def energy(self) -> float:
        return float(np.sum(np.abs(self.c) ** 2))


def _indices(M: int, N: int):
    if M < 0 or N < 0:
        raise ValueError("truncation radii must be nonnegative")
    return np.arange(-M, M + 1), np.arange(-N, N + 1)


def _analysis(values, t, dt, window_rows, lat, N):
    """sum_t values * conj(window_m(t)) e^{-2 pi i beta n t} dt, as a matrix product."""
    n = np.arange(-N, N + 1)
    modulation = np.exp(-2j * np.pi * lat.beta * np.outer(t, n))
    return (values[None, :] * np.conj(window_rows)) @ modulation * dt


def _synthesis(c, t, window_rows, lat, N):
    """sum_{m,n} c[m,n] e^{2 pi i beta n t} window_m(t)."""
    n = np.arange(-N, N + 1)
    modulation = np.exp(2j * np.pi * lat.beta * np.outer(t, n))
    return np.sum(window_rows.T * (modulation @ c.T), axis=1)


def _cauchy_rows(t, lat, M):
    m = np.arange(-M, M + 1)
    return 1 / (t[None, :] - lat.alpha * m[:, None] - 1j * lat.w)


def _dual_rows(t, lat, M):
    m = np.arange(-M, M + 1)
    return dual_window(t[None, :] - lat.alpha * m[:, None], lat)


def frame_coefficients(f: SampledSignal, lat: GaborLattice, M: int, N: int, edge_tol: float = EDGE_TOL) -> FrameCoefficientTable:
    _indices(M, N)
    _warn_if_truncated(f, edge_tol)
    t = f.t
    return FrameCoefficientTable(M, N, _analysis(f.values, t, f.dt, _cauchy_rows(t, lat, M), lat, N))


def discrete_frame_operator(f: SampledSignal, lat: GaborLattice, M: int, N: int, edge_tol: float = EDGE_TOL) -> SampledSignal:
    """Truncated sum over |m| <= M, |n| <= N of <f, g_{m,n}> g_{m,n}."""
    _indices(M, N)
    _warn_if_truncated(f, edge_tol)
    t = f.t
    rows = _cauchy_rows(t, lat, M)
    c = _analysis(f.values, t, f.dt, rows, lat, N)
    return f.with_values(_synthesis(c, t, rows, lat, N))


def reconstruct(f: SampledSignal, lat: GaborLattice, M: int, N: int, dual_first: bool = False, edge_tol: float = EDGE_TOL) -> SampledSignal:
    """Truncated sum <f, g_{m,n}> gamma_{m,n}, or <f, gamma_{m,n}> g_{m,n} with ``dual_first``."""
    _indices(M, N)
    _warn_if_truncated(f, edge_tol)
    t = f.t
    g_rows = _cauchy_rows(t, lat, M)
    d_rows = _dual_rows(t, lat, M)
    analysis, synthesis = (d_rows, g_rows) if dual_first else (g_rows, d_rows)
    c = _analysis(f.values, t, f.dt, analysis, lat, N)
    return f.with_values(_synthesis(c, t, synthesis, lat, N))
