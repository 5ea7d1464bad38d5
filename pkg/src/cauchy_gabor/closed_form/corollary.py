"""Frame-bound brackets from the extrema of h_hat."""

from __future__ import annotations

import math

from ..lattice import GaborLattice
from .bounds import BoundsReport, _guard, critical_frame_bounds, frame_bound_estimates
from .multiplier import h_hat_extrema


def corollary_bounds(lat: GaborLattice) -> BoundsReport:
    """Brackets (4 pi/a) ext|h_hat| / (e^{pi w/a} +- e^{-pi w/a})^2 for A (inf) and B (sup).

    Written as (pi/a) ext / cosh^2 and (pi/a) ext / sinh^2 of pi w / a.
    """
    a, w = lat.alpha, lat.w
    _guard(2 * math.pi * w / a)
    lo, hi = h_hat_extrema(lat)
    y = math.pi * w / a
    c = math.pi / a
    a_bracket = (c * lo / math.cosh(y) ** 2, c * lo / math.sinh(y) ** 2)
    b_bracket = (c * hi / math.cosh(y) ** 2, c * hi / math.sinh(y) ** 2)
    a_low, b_up = frame_bound_estimates(lat)
    critical = critical_frame_bounds(a, w) if lat.is_critical else None
    return BoundsReport(lat, a_low, b_up, a_bracket, b_bracket, critical)
