"""Lattice parameters, the Cauchy window and its time-frequency shifts."""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

# Largest exponent we allow any closed form to exponentiate (exp(709) ~ DBL_MAX).
EXPONENT_LIMIT = 700.0

# Relative tolerance used to recognise 1/(alpha*beta) as an exact integer.
BAND_TOL = 1e-9


class ParameterError(ValueError):
    """Invalid lattice or window parameters."""


class OverflowGuardError(ParameterError):
    """Parameters would push a closed form past double-precision range."""


class DiscretizationError(ValueError):
    """A sampling grid is too coarse for the requested operator."""


class LatticeIndex(NamedTuple):
    m: int  # time index
    n: int  # frequency index


def band_index(density: float) -> int:
    """Return n with 1/(n+1) <= density <= 1/n.

    When 1/density is an integer (up to rounding) the larger n is returned.
    """
    x = 1.0 / density
    r = round(x)
    if r >= 1 and abs(x - r) <= BAND_TOL * x:
        return int(r)
    return int(math.floor(x))


@dataclass(frozen=True)
class GaborLattice:
    """Lattice alpha*Z x beta*Z together with the window pole parameter w."""

    alpha: float
    beta: float
    w: float

    def __post_init__(self):
        for name in ("alpha", "beta", "w"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, numbers.Real) or not math.isfinite(v) or v <= 0:
                raise ParameterError(f"{name} must be a positive finite number, got {v!r}")
            object.__setattr__(self, name, float(v))
        if self.density > 1.0 + BAND_TOL:
            raise ParameterError(
                f"alpha*beta = {self.density:.6g} > 1: the Gabor system is not a frame"
            )
        exponent = 2 * math.pi * self.w * max(1 / self.alpha, self.beta * math.ceil(1 / self.density - BAND_TOL))
        if exponent > EXPONENT_LIMIT:
            raise OverflowGuardError(
                f"exponent 2*pi*w*max(1/alpha, beta*ceil(1/(alpha*beta))) = {exponent:.1f} "
                f"exceeds {EXPONENT_LIMIT}"
            )

    @property
    def density(self) -> float:
        return self.alpha * self.beta

    @property
    def band(self) -> int:
        return band_index(self.density)

    @property
    def is_critical(self) -> bool:
        return abs(self.density - 1.0) <= BAND_TOL

    def as_dict(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "w": self.w}


def _check_w(w: float) -> None:
    if not (np.isfinite(w) and w > 0):
        raise ParameterError(f"w must be positive and finite, got {w!r}")


def window_eval(t, w: float):
    """Cauchy window 1/(t - i w).

    Accepts scalars or arrays; returns a Python complex for scalar input.
    """
    _check_w(w)
    t = np.asarray(t)
    if not np.all(np.isfinite(t)):
        raise ParameterError("t must be finite")
    out = 1.0 / (t - 1j * w)
    return complex(out) if out.ndim == 0 else out


def tf_shift_eval(t, idx: LatticeIndex, lat: GaborLattice):
    """Evaluate g_{m,n}(t) = exp(2 pi i beta n t) / (t - alpha m - i w)."""
    m, n = idx
    t = np.asarray(t)
    if not np.all(np.isfinite(t)):
        raise ParameterError("t must be finite")
    out = np.exp(2j * np.pi * lat.beta * n * t) / (t - lat.alpha * m - 1j * lat.w)
    return complex(out) if out.ndim == 0 else out


def normalize_lattice(lat: GaborLattice) -> tuple[GaborLattice, float]:
    """Map (alpha, beta, w) to (alpha*beta, 1, beta*w).

    Frame bounds scale as A(alpha, beta; w) = beta * A(alpha*beta, 1; beta*w),
    so the returned scale factor is beta.
    """
    return GaborLattice(lat.alpha * lat.beta, 1.0, lat.beta * lat.w), lat.beta


def shifted_sine(t, lat: GaborLattice, sign: int = 1):
    """sin(pi (t + sign*i w) / alpha) for real or complex t.

    Uses sin(x + iy) = sin x cosh y + i cos x sinh y.  On the real line
    |sin(x + iy)|^2 = sin^2 x + sinh^2 y >= sinh^2(pi w / alpha) > 0.
    """
    z = np.asarray(t, dtype=complex) / lat.alpha * np.pi
    x = z.real
    y = z.imag + sign * np.pi * lat.w / lat.alpha
    out = np.sin(x) * np.cosh(y) + 1j * np.cos(x) * np.sinh(y)
    return complex(out) if out.ndim == 0 else out
