"""Numerical dual window from the Fourier profile, by piecewise Gauss-Legendre."""

from __future__ import annotations

import numpy as np

from ..closed_form.multiplier import dual_fourier_profile
from ..lattice import GaborLattice, shifted_sine
from ..signal import SampledSignal


def profile_breakpoints(lat: GaborLattice) -> np.ndarray:
    """Jump locations of the dual profile inside [-1/(2 alpha), 1/(2 alpha)], ends included."""
    half = 1 / (2 * lat.alpha)
    reach = int(np.ceil(2 * half / lat.beta)) + 1
    m = np.arange(-reach, reach + 1)
    cand = np.concatenate([-half + lat.beta * m, half + lat.beta * m])
    tol = 1e-12 * half
    inner = cand[(cand > -half + tol) & (cand < half - tol)]
    pts = np.sort(np.concatenate([[-half, half], inner]))
    keep = np.concatenate([[True], np.diff(pts) > tol])
    return pts[keep]


def dual_window_oracle(t_grid, lat: GaborLattice, nodes: int = 64) -> SampledSignal | np.ndarray:
    """(alpha/pi) sin(pi (t + i w)/alpha) int profile(xi) e^{2 pi i t xi} d xi.

    A uniform ``SampledSignal`` grid returns a ``SampledSignal``; any other
    array of times returns an array.
    """
    grid = t_grid if isinstance(t_grid, SampledSignal) else None
    t = grid.t if grid is not None else np.asarray(t_grid, dtype=float)
    x, wts = np.polynomial.legendre.leggauss(nodes)
    edges = profile_breakpoints(lat)
    acc = np.zeros(t.shape, dtype=complex)
    for lo, hi in zip(edges[:-1], edges[1:]):
        xi = 0.5 * (hi - lo) * x + 0.5 * (hi + lo)
        weights = dual_fourier_profile(xi, lat) * wts * 0.5 * (hi - lo)
        acc += np.exp(2j * np.pi * np.multiply.outer(t, xi)) @ weights
    out = lat.alpha / np.pi * shifted_sine(t, lat, +1) * acc
    return grid.with_values(out) if grid is not None else out
