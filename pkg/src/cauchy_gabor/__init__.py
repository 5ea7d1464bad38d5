"""Closed-form Gabor frame machinery for the Cauchy window 1/(t - i w)."""

from .closed_form import *  # noqa: F401,F403
from .closed_form import __all__ as _closed_all
from .lattice import (
    DiscretizationError,
    GaborLattice,
    LatticeIndex,
    OverflowGuardError,
    ParameterError,
    normalize_lattice,
    tf_shift_eval,
    window_eval,
)
from .signal import SampledSignal, desk_grid

__version__ = "0.1.0"

__all__ = [
    *_closed_all,
    "DiscretizationError",
    "GaborLattice",
    "LatticeIndex",
    "OverflowGuardError",
    "ParameterError",
    "SampledSignal",
    "desk_grid",
    "normalize_lattice",
    "tf_shift_eval",
    "window_eval",
]
