"""Frame operator S and its inverse via the Fourier-multiplier sandwich.

    S f      = (pi/alpha) / sin(pi (x - i w)/alpha) * ( f / sin(pi (t + i w)/alpha) * h )
    S^{-1} f = (alpha/pi) sin(pi (t + i w)/alpha) * ( f sin(pi (x - i w)/alpha) * h~ )

Convolution with h (resp. h~) is multiplication by h_hat (resp. 1/h_hat) in the
Fourier domain, carried out with an FFT on the sampling grid.  The grid is
treated as one period; ``pad`` zero-extends it first to push periodic images
further away.
"""

from __future__ import annotations

import numpy as np

from ..lattice import DiscretizationError, GaborLattice, shifted_sine
from ..signal import SampledSignal
from .multiplier import MultiplierProfile, build_multiplier


def check_grid(f: SampledSignal, lat: GaborLattice) -> None:
    """Spacing <= alpha/16 and sampling rate >= 4 (1/alpha + n beta)."""
    dt = f.dt
    need = 4 * (1 / lat.alpha + lat.band * lat.beta)
    if dt > lat.alpha / 16 * (1 + 1e-12):
        raise DiscretizationError(f"dt = {dt:.4g} exceeds alpha/16 = {lat.alpha / 16:.4g}")
    if 1 / dt < need * (1 - 1e-12):
        raise DiscretizationError(f"sampling rate 1/dt = {1 / dt:.4g} below {need:.4g}")


def _padded(f: SampledSignal, pad: int):
    if pad < 1:
        raise ValueError("pad must be >= 1")
    n = len(f)
    total = n * pad
    start = (total - n) // 2
    values = np.zeros(total, dtype=complex)
    values[start : start + n] = f.values
    t = f.t0 - start * f.dt + f.dt * np.arange(total)
    return t, values, start


def _sandwich(f: SampledSignal, lat: GaborLattice, inverse: bool, pad: int, profile):
    check_grid(f, lat)
    profile = profile or build_multiplier(lat)
    t, values, start = _padded(f, pad)
    xi = np.fft.fftfreq(t.size, f.dt)
    mult = profile.grid_values(xi)
    plus = shifted_sine(t, lat, +1)
    minus = shifted_sine(t, lat, -1)
    if inverse:
        spec = np.fft.fft(values * minus) / mult
        out = lat.alpha / np.pi * plus * np.fft.ifft(spec)
    else:
        spec = np.fft.fft(values / plus) * mult
        out = np.pi / lat.alpha / minus * np.fft.ifft(spec)
    return f.with_values(out[start : start + len(f)])


def frame_operator_apply(
    f: SampledSignal, lat: GaborLattice, pad: int = 1, profile: MultiplierProfile | None = None
) -> SampledSignal:
    return _sandwich(f, lat, False, pad, profile)


def inverse_frame_operator_apply(
    f: SampledSignal, lat: GaborLattice, pad: int = 1, profile: MultiplierProfile | None = None
) -> SampledSignal:
    return _sandwich(f, lat, True, pad, profile)
