from .dual import dual_window_oracle, profile_breakpoints
from .frames import (
    FrameCoefficientTable,
    TruncationWarning,
    discrete_frame_operator,
    frame_coefficients,
    quadrature_inner_product,
    reconstruct,
    residue_coefficient,
)
from .report import Check, VerificationReport
from .signals import PWTestSignal, pw_test_signal
from .spectral import EmpiricalBounds, PowerIterationResult, empirical_frame_bounds, power_iteration, spectral_grid
from .zak import zak_series

__all__ = [
    "Check",
    "EmpiricalBounds",
    "FrameCoefficientTable",
    "PWTestSignal",
    "PowerIterationResult",
    "TruncationWarning",
    "VerificationReport",
    "discrete_frame_operator",
    "dual_window_oracle",
    "empirical_frame_bounds",
    "frame_coefficients",
    "power_iteration",
    "profile_breakpoints",
    "pw_test_signal",
    "quadrature_inner_product",
    "reconstruct",
    "residue_coefficient",
    "spectral_grid",
    "zak_series",
]
