from .bounds import (
    BoundsReport,
    critical_frame_bounds,
    frame_bound_estimates,
    toeplitz_symbol,
    toeplitz_symbol_extrema,
)
from .corollary import corollary_bounds
from .dual import DualWindowParams, dual_window, dual_window_params
from .multiplier import MultiplierProfile, build_multiplier, dual_fourier_profile, h_hat, h_hat_extrema
from .operator import check_grid, frame_operator_apply, inverse_frame_operator_apply
from .zak import zak_cauchy

__all__ = [
    "BoundsReport",
    "DualWindowParams",
    "MultiplierProfile",
    "build_multiplier",
    "check_grid",
    "corollary_bounds",
    "critical_frame_bounds",
    "dual_fourier_profile",
    "dual_window",
    "dual_window_params",
    "frame_bound_estimates",
    "frame_operator_apply",
    "h_hat",
    "h_hat_extrema",
    "inverse_frame_operator_apply",
    "toeplitz_symbol",
    "toeplitz_symbol_extrema",
    "zak_cauchy",
]
