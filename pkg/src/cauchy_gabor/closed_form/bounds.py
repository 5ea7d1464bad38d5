"""Frame-bound closed forms: critical hyperbola, general estimates, Toeplitz symbol."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..lattice import EXPONENT_LIMIT, GaborLattice, OverflowGuardError, ParameterError


def _guard(exponent: float) -> None:
    if exponent > EXPONENT_LIMIT:
        raise OverflowGuardError(f"exponent {exponent:.1f} exceeds {EXPONENT_LIMIT}")


def _pair(alpha: float, x: float) -> tuple[float, float]:
    # (4 pi^2/alpha) (1/(e^x + 1))^2 and (4 pi^2/alpha) (e^x/(e^x - 1))^2, x = 2 pi (.) w
    c = 4 * math.pi**2 / alpha
    lower = c / (math.exp(x) + 1) ** 2
    upper = c / (-math.expm1(-x)) ** 2
    return lower, upper


def critical_frame_bounds(alpha: float, w: float) -> tuple[float, float]:
    """Optimal (A, B) on the critical hyperbola beta = 1/alpha."""
    if not (alpha > 0 and w > 0):
        raise ParameterError("alpha and w must be positive")
    x = 2 * math.pi * w / alpha
    _guard(x)
    return _pair(alpha, x)


def frame_bound_estimates(lat: GaborLattice) -> tuple[float, float]:
    """Lower estimate for A and upper estimate for B valid for every alpha*beta <= 1."""
    x = 2 * math.pi * lat.beta * lat.w
    _guard(x)
    return _pair(lat.alpha, x)


def toeplitz_symbol(theta, w: float):
    """s(theta) = e^{-2 pi i theta} / (e^{2 pi w} - e^{-2 pi i theta}), theta in [0, 1]."""
    if not w > 0:
        raise ParameterError("w must be positive")
    _guard(2 * math.pi * w)
    e = np.exp(-2j * np.pi * np.asarray(theta, dtype=float))
    out = e / (math.exp(2 * math.pi * w) - e)
    return complex(out) if out.ndim == 0 else out


def toeplitz_symbol_extrema(w: float) -> tuple[float, float]:
    """(min |s|, max |s|) = (1/(e^{2 pi w} + 1), 1/(e^{2 pi w} - 1))."""
    if not w > 0:
        raise ParameterError("w must be positive")
    _guard(2 * math.pi * w)
    x = 2 * math.pi * w
    return 1 / (math.exp(x) + 1), 1 / math.expm1(x)


@dataclass(frozen=True)
class BoundsReport:
    """Frame-bound information for one lattice.

    ``a_bracket``/``b_bracket`` hold the (lower, upper) estimates obtained from
    the extrema of the multiplier; ``critical`` is only set when alpha*beta = 1.
    """

    lattice: GaborLattice
    a_lower: float
    b_upper: float
    a_bracket: tuple[float, float]
    b_bracket: tuple[float, float]
    critical: tuple[float, float] | None = None
    empirical: tuple[float, float] | None = field(default=None, compare=False)

    def as_dict(self) -> dict:
        out = {
            "A_lower": self.a_lower,
            "B_upper": self.b_upper,
            "A_bracket": list(self.a_bracket),
            "B_bracket": list(self.b_bracket),
            "critical": None if self.critical is None else {"A": self.critical[0], "B": self.critical[1]},
        }
        if self.empirical is not None:
            out["empirical"] = {"A": self.empirical[0], "B": self.empirical[1]}
        return out
