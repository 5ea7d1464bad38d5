"""Empirical frame bounds: Rayleigh quotients and power iteration."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..closed_form.multiplier import build_multiplier
from ..closed_form.operator import frame_operator_apply, inverse_frame_operator_apply
from ..lattice import GaborLattice
from ..signal import SampledSignal, desk_grid
from .frames import frame_coefficients
from .signals import pw_test_signal

MAX_ITER = 200
REL_TOL = 1e-9


@dataclass(frozen=True)
class PowerIterationResult:
    eigenvalue: float
    iterations: int
    converged: bool
    last_change: float


def power_iteration(apply, x0: np.ndarray, max_iter: int = MAX_ITER, tol: float = REL_TOL) -> PowerIterationResult:
    """Largest eigenvalue of a positive operator, via Rayleigh quotients of iterates."""
    x = np.asarray(x0, dtype=complex)
    x = x / np.linalg.norm(x)
    lam = 0.0
    change = np.inf
    for it in range(1, max_iter + 1):
        y = apply(x)
        new = float(np.real(np.vdot(x, y)))
        change = abs(new - lam) / abs(new) if new else np.inf
        lam = new
        norm = np.linalg.norm(y)
        if norm == 0:
            return PowerIterationResult(0.0, it, True, 0.0)
        x = y / norm
        if change < tol:
            return PowerIterationResult(lam, it, True, change)
    return PowerIterationResult(lam, max_iter, False, change)


def spectral_grid(lat: GaborLattice, periods: int = 256, per_alpha: int = 16) -> tuple[float, float, int]:
    """Periodic grid spanning ``periods`` multiples of alpha, with spacing alpha/per_alpha.

    The sine factors of the multiplier sandwich are alpha-periodic, so on this
    grid the discretized S is Hermitian positive definite.
    """
    band = lat.band
    need = 4 * (1 / lat.alpha + band * lat.beta)
    per = per_alpha
    while per / lat.alpha < need:
        per *= 2
    n = periods * per
    dt = lat.alpha / per
    return -n // 2 * dt, dt, n


@dataclass(frozen=True)
class EmpiricalBounds:
    A: float
    B: float
    trial_A: float
    trial_B: float
    power_A: PowerIterationResult
    power_B: PowerIterationResult

    def as_dict(self) -> dict:
        return {
            "A_emp": self.A,
            "B_emp": self.B,
            "trial_A": self.trial_A,
            "trial_B": self.trial_B,
            "power_B": vars(self.power_B),
            "power_A_inverse": vars(self.power_A),
        }


def empirical_frame_bounds(
    lat: GaborLattice,
    trials: int = 5,
    M: int = 50,
    N: int = 50,
    seed: int = 42,
    grid: tuple[float, float, int] | None = None,
) -> EmpiricalBounds:
    """Extremal Rayleigh quotients sum|c|^2/||f||^2 refined by power iteration.

    Trial signals are random band-limited signals in bands around zero.  The
    refinement runs power iteration on the multiplier-route S (for B) and S^{-1}
    (for A = 1/lambda_max) on a periodic grid.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    quotients = []
    for j in range(trials):
        k = int(rng.integers(-2, 2))
        _, f = pw_test_signal(k, int(rng.integers(2**31)), grid)
        quotients.append(frame_coefficients(f, lat, M, N).energy / f.norm() ** 2)

    t0, dt, n = spectral_grid(lat)
    profile = build_multiplier(lat)
    base = SampledSignal(t0, dt, np.zeros(n))
    x0 = rng.normal(size=n) + 1j * rng.normal(size=n)

    def forward(x):
        return frame_operator_apply(base.with_values(x), lat, profile=profile).values

    def inverse(x):
        return inverse_frame_operator_apply(base.with_values(x), lat, profile=profile).values

    top = power_iteration(forward, x0)
    inv_top = power_iteration(inverse, x0)
    A = min(min(quotients), 1 / inv_top.eigenvalue)
    B = max(max(quotients), top.eigenvalue)
    return EmpiricalBounds(A, B, min(quotients), max(quotients), inv_top, top)
