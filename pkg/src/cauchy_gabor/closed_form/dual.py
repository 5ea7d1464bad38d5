"""Canonical dual window gamma = S^{-1} g in closed form.

On [-1/(2a), 1/(2a)] the Fourier profile pi e^{2 pi w xi}/h_hat(xi) is a sum of
exponentials over two families of intervals: a family J where h_hat has the
larger number of active terms, and a complementary family I.  Integrating each
family gives a geometric sum in Z = e^{2 pi beta (w + i t)} times a sinc.

Coefficients are written as ratios of bounded quantities (negative exponents
only) so nothing overflows once the lattice passes its guard.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..lattice import BAND_TOL, GaborLattice, ParameterError, band_index, shifted_sine


@dataclass(frozen=True)
class DualWindowParams:
    """Branch data for 1/(n+1) <= alpha*beta <= 1/n.

    ``epsilon`` = 1/alpha - beta is used by the n = 1 branch, ``lam`` =
    1/(2 alpha) - k beta by even n = 2k and ``delta`` = (k+1) beta - 1/(2 alpha)
    by odd n = 2k+1.  The unused one of lam/delta is None.
    """

    n: int
    k: int
    epsilon: float
    lam: float | None = None
    delta: float | None = None

    @property
    def branch(self) -> str:
        if self.n == 1:
            return "n=1"
        return "even" if self.n % 2 == 0 else "odd"


def dual_window_params(lat: GaborLattice, n: int | None = None) -> DualWindowParams:
    """Derive branch parameters; ``n`` may force the adjacent branch on a boundary."""
    d = lat.density
    if n is None:
        n = band_index(d)
    elif n < 1 or not (1 / (n + 1) - BAND_TOL <= d <= 1 / n + BAND_TOL):
        raise ParameterError(f"alpha*beta = {d:.12g} is outside the band of n = {n}")
    b = lat.beta
    half = 0.5 / lat.alpha
    eps = 1 / lat.alpha - b
    clip = lambda x, hi: min(max(x, 0.0), hi)  # noqa: E731  rounding at band edges
    if n % 2 == 0:
        k = n // 2
        return DualWindowParams(n, k, eps, lam=clip(half - k * b, 0.5 * b))
    k = (n - 1) // 2
    if n == 1:
        eps = clip(eps, b)
    return DualWindowParams(n, k, eps, delta=clip((k + 1) * b - half, 0.5 * b))


def _sinc(width: float, z):
    # sin(pi width z) / (pi z), finite at z = 0
    return width * np.sinc(width * z)


def _geometric(zinv, lo: int, count: int):
    # sum_{j=lo}^{lo+count-1} Z^j written as Z^{lo+count-1} (1 - Z^{-count}) / (1 - Z^{-1})
    return zinv ** (-(lo + count - 1)) * (1 - zinv**count) / (1 - zinv)


def _weight_sum(q: float, lo: int, count: int) -> float:
    # sum_{m=lo}^{lo+count-1} e^{4 pi beta w m} with q = e^{-4 pi beta w}
    return q ** (-(lo + count - 1)) * (-math.expm1(count * math.log(q))) / (-math.expm1(math.log(q)))


def _even_odd(t, lat: GaborLattice, p: DualWindowParams):
    b, w = lat.beta, lat.w
    z = np.asarray(t, dtype=complex) + 1j * w
    zinv = np.exp(-2j * np.pi * b * (z - 2j * w))  # 1/Z = e^{-2 pi beta (w + i t)}
    q = math.exp(-4 * math.pi * b * w)
    k = p.k
    if p.n % 2 == 0:
        # J: 2k+1 intervals [-lam, lam] + m beta, m = -k..k
        # I: 2k intervals [lam, beta - lam] + m beta, m = -k..k-1, where
        #    h_hat has the terms m' = -k+1..k
        half_j = p.lam
        j_lo, j_cnt = -k, 2 * k + 1
        i_lo, i_cnt = -k, 2 * k
        i_weight = _weight_sum(q, -k, 2 * k)  # sum_{m'=-k+1}^{k} e^{-4 pi b w m'}
    else:
        # J: [-delta, delta] + m beta, m = -k..k
        # I: [delta, beta - delta] + m beta, m = -k-1..k, h_hat terms m' = -k..k+1
        half_j = p.delta
        j_lo, j_cnt = -k, 2 * k + 1
        i_lo, i_cnt = -k - 1, 2 * k + 2
        i_weight = _weight_sum(q, -k - 1, 2 * k + 2)
    j_weight = _weight_sum(q, -k, 2 * k + 1)
    j_part = _geometric(zinv, j_lo, j_cnt) / j_weight * _sinc(2 * half_j, z)
    shift = np.exp(1j * np.pi * b * z)  # centre of [h, beta - h]
    i_part = _geometric(zinv, i_lo, i_cnt) / i_weight * shift * _sinc(b - 2 * half_j, z)
    return j_part + i_part


def _first_band(t, lat: GaborLattice, p: DualWindowParams):
    b, w = lat.beta, lat.w
    eps = p.epsilon
    tt = np.asarray(t, dtype=complex)
    z = tt + 1j * w
    e = math.exp(-4 * math.pi * w * b)
    # e^{pi w b - pi i b t}/(1 + e^{4 pi w b}) + e^{-pi w b + pi i b t}/(1 + e^{-4 pi w b})
    side = (np.exp(-np.pi * b * (3 * w + 1j * tt)) + np.exp(-np.pi * b * (w - 1j * tt))) / (1 + e)
    return _sinc(b - eps, z) + side * _sinc(eps, z)


def dual_window(t, lat: GaborLattice, n: int | None = None):
    """gamma(t) for real (or complex) t.

    Dispatches on n = floor(1/(alpha beta)); on an exact boundary 1/(alpha beta)
    in N the larger n is used unless ``n`` forces the neighbouring branch.
    """
    p = dual_window_params(lat, n)
    bracket = _first_band(t, lat, p) if p.n == 1 else _even_odd(t, lat, p)
    out = lat.alpha / np.pi * shifted_sine(t, lat, +1) * bracket
    return complex(out) if np.ndim(out) == 0 else out


def first_band_cosine_form(t, lat: GaborLattice):
    """The n = 1 side factor written as cos(pi beta (t - i w)) / cosh(2 pi w beta)."""
    b, w = lat.beta, lat.w
    tt = np.asarray(t, dtype=complex)
    return np.cos(np.pi * b * (tt - 1j * w)) / np.cosh(2 * np.pi * w * b)


def first_band_exponential_form(t, lat: GaborLattice):
    """The n = 1 side factor as a sum of two exponentials."""
    b, w = lat.beta, lat.w
    tt = np.asarray(t, dtype=complex)
    return np.exp(np.pi * w * b - 1j * np.pi * b * tt) / (1 + np.exp(4 * np.pi * w * b)) + np.exp(
        -np.pi * w * b + 1j * np.pi * b * tt
    ) / (1 + np.exp(-4 * np.pi * w * b))
