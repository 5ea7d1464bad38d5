"""Closed-form Zak transform of the Cauchy window."""

from __future__ import annotations

import numpy as np

from ..lattice import GaborLattice


def zak_cauchy(t, omega, lat: GaborLattice):
    """Z_alpha g(t, omega) for g(t) = 1/(t - i w).

        Z = (-2 pi i / alpha) e^{2 pi i t omega} e^{2 pi omega w} / (1 - e^{2 pi i t/alpha} e^{2 pi w/alpha})

    The expression is valid for omega in [0, 1/alpha); omega is reduced into
    that cell first, which makes the result 1/alpha-periodic in omega.  At
    omega = 0 (mod 1/alpha) the value is the right-hand limit; a symmetric
    partial sum of the defining series converges to the midpoint of the jump
    there instead.
    """
    a, w = lat.alpha, lat.w
    t = np.asarray(t, dtype=float)
    omega = np.asarray(omega, dtype=float)
    om = omega - np.floor(omega * a) / a
    # Numerator and denominator divided by e^{2 pi w / alpha} to stay bounded.
    num = np.exp(2j * np.pi * t * om) * np.exp(2 * np.pi * w * (om - 1 / a))
    den = np.exp(-2 * np.pi * w / a) - np.exp(2j * np.pi * t / a)
    out = (-2j * np.pi / a) * num / den
    return complex(out) if out.ndim == 0 else out
