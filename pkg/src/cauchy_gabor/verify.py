"""End-to-end verification of the closed forms against the oracle."""

from __future__ import annotations

import warnings

import numpy as np

from .closed_form import corollary_bounds, dual_window, frame_operator_apply
from .lattice import GaborLattice
from .oracle import (
    Check,
    TruncationWarning,
    VerificationReport,
    discrete_frame_operator,
    dual_window_oracle,
    empirical_frame_bounds,
    pw_test_signal,
    reconstruct,
)
from .signal import SampledSignal, desk_grid, relative_error

DEFAULT_TOLERANCES = {
    "dual_vs_oracle": 1e-8,
    "S_route_equivalence": 1e-4,
    "S_gamma_equals_g": 1e-6,
    "reconstruction": 1e-3,
    "bound_sandwich": 0.02,
    "gamma_hat_support": 1e-4,
}
# Truncated-sum route for S(gamma) = g.
SUM_ROUTE_TOL = 1e-3
DUAL_SPAN = (-10.0, 10.0, 2001)
# Zero-padding factor for the multiplier route when it is compared with the
# truncated sums: S spreads copies of f to all shifts j/beta, and without
# padding the FFT folds the copies beyond the grid back onto it.
COMPARE_PAD = 16
SIGNALS = 5


def max_relative_error(approx, exact) -> float:
    """max |approx - exact| / max |exact|."""
    approx, exact = np.asarray(approx), np.asarray(exact)
    return float(np.max(np.abs(approx - exact)) / np.max(np.abs(exact)))


def check_dual_vs_oracle(lat: GaborLattice, tol: float) -> Check:
    t = np.linspace(*DUAL_SPAN)
    err = max_relative_error(dual_window(t, lat), dual_window_oracle(t, lat))
    return Check("dual_vs_oracle", err, tol, {"tmin": DUAL_SPAN[0], "tmax": DUAL_SPAN[1], "points": DUAL_SPAN[2]})


def _signals(seed: int, grid):
    return [pw_test_signal(0, seed + j, grid)[1] for j in range(SIGNALS)]


def check_route_equivalence(lat: GaborLattice, M: int, N: int, seed: int, tol: float, grid=None) -> Check:
    errs = []
    for f in _signals(seed, grid):
        diff = frame_operator_apply(f, lat, pad=COMPARE_PAD).values - discrete_frame_operator(f, lat, M, N).values
        errs.append(float(np.linalg.norm(diff) / np.linalg.norm(f.values)))
    return Check("S_route_equivalence", max(errs), tol, {"M": M, "N": N, "seed": seed, "signals": SIGNALS, "pad": COMPARE_PAD}, {"per_signal": errs})


def sampled_dual(lat: GaborLattice, grid=None) -> SampledSignal:
    t0, dt, n = grid if grid is not None else desk_grid()
    return SampledSignal.from_function(lambda t: dual_window(t, lat), t0, dt, n)


def check_gamma_to_g(lat: GaborLattice, M: int, N: int, tol: float, grid=None) -> Check:
    """S gamma against g on the grid interior, multiplier route; the truncated sum goes in ``detail``."""
    gam = sampled_dual(lat, grid)
    g = gam.with_values(1 / (gam.t - 1j * lat.w))
    mask = gam.interior()
    err = relative_error(frame_operator_apply(gam, lat, pad=COMPARE_PAD), g, mask)
    summed = relative_error(discrete_frame_operator(gam, lat, M, N), g, mask)
    return Check(
        "S_gamma_equals_g",
        err,
        tol,
        {"M": M, "N": N, "interior_fraction": 0.5, "pad": COMPARE_PAD},
        {"sum_route_error": summed, "sum_route_tolerance": SUM_ROUTE_TOL, "sum_route_passed": bool(summed <= SUM_ROUTE_TOL)},
    )


def check_reconstruction(lat: GaborLattice, M: int, N: int, seed: int, tol: float, grid=None) -> Check:
    errs = {"gamma_synthesis": [], "g_synthesis": []}
    for f in _signals(seed, grid):
        errs["gamma_synthesis"].append(relative_error(reconstruct(f, lat, M, N), f))
        errs["g_synthesis"].append(relative_error(reconstruct(f, lat, M, N, dual_first=True), f))
    worst = max(max(v) for v in errs.values())
    return Check("reconstruction", worst, tol, {"M": M, "N": N, "seed": seed, "signals": SIGNALS}, errs)


def check_bound_sandwich(lat: GaborLattice, M: int, N: int, seed: int, tol: float, grid=None) -> Check:
    """Relative violation of A_lower <= A_emp and B_emp <= B_upper; at density 1 also the distance to the exact bounds."""
    report = corollary_bounds(lat)
    emp = empirical_frame_bounds(lat, trials=SIGNALS, M=M, N=N, seed=seed, grid=grid)
    parts = [report.a_lower / emp.A - 1, emp.B / report.b_upper - 1, 0.0]
    detail = {**report.as_dict(), "empirical": emp.as_dict()}
    if report.critical is not None:
        a_c, b_c = report.critical
        parts += [abs(emp.A / a_c - 1), abs(emp.B / b_c - 1)]
    return Check("bound_sandwich", max(parts), tol, {"M": M, "N": N, "seed": seed, "trials": SIGNALS}, detail)


def out_of_band_fraction(values: np.ndarray, dt: float, cutoff: float) -> float:
    spec = np.abs(np.fft.fft(values)) ** 2
    xi = np.fft.fftfreq(values.size, dt)
    return float(spec[np.abs(xi) > cutoff].sum() / spec.sum())


def check_gamma_hat_support(lat: GaborLattice, tol: float, grid=None) -> Check:
    gam = sampled_dual(lat, grid)
    err = out_of_band_fraction(gam.values, gam.dt, 1 / lat.alpha)
    return Check("gamma_hat_support", err, tol, {"t0": gam.t0, "dt": gam.dt, "samples": len(gam)})


def run_verification(
    lat: GaborLattice,
    M: int = 50,
    N: int = 50,
    seed: int = 42,
    tolerances: dict | None = None,
) -> VerificationReport:
    tol = {**DEFAULT_TOLERANCES, **(tolerances or {})}
    t0, dt, n = desk_grid()
    report = VerificationReport(
        {**lat.as_dict(), "M": M, "N": N, "seed": seed, "grid": {"t0": t0, "dt": dt, "samples": n}, "tolerances": tol}
    )
    with warnings.catch_warnings():
        # desk-grid edge warnings are expected and already part of the error budget
        warnings.simplefilter("ignore", TruncationWarning)
        report.add(check_dual_vs_oracle(lat, tol["dual_vs_oracle"]))
        report.add(check_route_equivalence(lat, M, N, seed, tol["S_route_equivalence"]))
        report.add(check_gamma_to_g(lat, M, N, tol["S_gamma_equals_g"]))
        report.add(check_reconstruction(lat, M, N, seed, tol["reconstruction"]))
        report.add(check_bound_sandwich(lat, M, N, seed, tol["bound_sandwich"]))
        report.add(check_gamma_hat_support(lat, tol["gamma_hat_support"]))
    return report
