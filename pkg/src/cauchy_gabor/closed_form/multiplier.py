"""The beta-periodic multiplier h_hat and the Fourier profile of the dual window.

    h_hat(xi) = pi * sum_m chi_{[-1/(2 alpha), 1/(2 alpha)) + beta m}(xi) * e^{4 pi w (xi - beta m)}

Characteristic functions are taken half-open, so h_hat is defined at every
point; at a breakpoint it takes its right-hand limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..lattice import GaborLattice

# Points closer than this (relative to beta) to a breakpoint are snapped onto it.
SNAP_TOL = 1e-9


def h_hat(xi, lat: GaborLattice):
    """Direct evaluation of the finite sum over {m : xi - beta m in [-1/(2a), 1/(2a))}."""
    xi = np.asarray(xi, dtype=float)
    half = 0.5 / lat.alpha
    b = lat.beta
    m0 = np.ceil((xi - half) / b) - 1
    total = np.zeros(xi.shape)
    for j in range(lat.band + 3):
        d = xi - b * (m0 + j)
        total += np.where((d >= -half) & (d < half), np.exp(4 * np.pi * lat.w * np.clip(d, -half, half)), 0.0)
    out = np.pi * total
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True, eq=False)
class MultiplierProfile:
    """Piecewise description of h_hat over the cell [-beta/2, beta/2).

    On piece i, i.e. for xi in [edges[i], edges[i+1]), h_hat(xi) = coefficients[i] * e^{4 pi w xi}.
    ``edges[0]`` is the cell's left end; the remaining edges are the jump points
    of h_hat (the images of +-1/(2 alpha) modulo beta).
    """

    lattice: GaborLattice
    edges: np.ndarray
    coefficients: np.ndarray

    @property
    def cell(self) -> tuple[float, float]:
        return -0.5 * self.lattice.beta, 0.5 * self.lattice.beta

    @property
    def breakpoints(self) -> np.ndarray:
        """Jump points of h_hat inside one period."""
        return np.array([e for e in self.edges if self._is_jump(e)])

    def _is_jump(self, x: float) -> bool:
        b = self.lattice.beta
        half = 0.5 / self.lattice.alpha
        return any(abs(_wrap(x - s, b)) <= SNAP_TOL * b for s in (-half, half))

    def _locate(self, xi, side: str):
        b = self.lattice.beta
        lo = self.cell[0]
        xi = np.asarray(xi, dtype=float)
        x = lo + np.mod(xi - lo, b)
        # snap onto edges so that exact breakpoints are recognised
        full = np.append(self.edges, lo + b)
        nearest = np.argmin(np.abs(x[..., None] - full), axis=-1)
        close = np.abs(x - full[nearest]) <= SNAP_TOL * b
        x = np.where(close, full[nearest], x)
        x = np.where(x >= lo + b, x - b, x)
        idx = np.searchsorted(self.edges, x, side="right") - 1
        if side == "left":
            at_edge = close & (x == self.edges[np.clip(idx, 0, None)])
            wrap = at_edge & (idx == 0)
            idx = np.where(at_edge, idx - 1, idx)
            x = np.where(wrap, x + b, x)
            idx = np.where(idx < 0, len(self.edges) - 1, idx)
        return idx, x

    def evaluate(self, xi, side: str = "right"):
        """h_hat(xi); ``side`` selects the one-sided limit at breakpoints."""
        idx, x = self._locate(xi, side)
        out = self.coefficients[idx] * np.exp(4 * np.pi * self.lattice.w * x)
        return float(out) if np.ndim(out) == 0 else out

    __call__ = evaluate

    def grid_values(self, xi):
        """Average of the one-sided limits (equals h_hat away from breakpoints).

        This is the value a periodised (Poisson-summed) multiplier sees at a jump.
        """
        return 0.5 * (self.evaluate(xi, "left") + self.evaluate(xi, "right"))

    def pieces(self):
        """Yield (left, right, coefficient) for each piece of the cell."""
        right_edges = np.append(self.edges[1:], self.cell[1])
        yield from zip(self.edges, right_edges, self.coefficients)


def _wrap(x: float, period: float) -> float:
    return (x + 0.5 * period) % period - 0.5 * period


def build_multiplier(lat: GaborLattice) -> MultiplierProfile:
    b = lat.beta
    half = 0.5 / lat.alpha
    lo = -0.5 * b
    pts = [lo]
    for s in (-half, half):
        p = lo + (s - lo) % b
        if abs(p - (lo + b)) <= SNAP_TOL * b:
            p = lo
        pts.append(p)
    edges = []
    for p in sorted(pts):
        if not edges or p - edges[-1] > SNAP_TOL * b:
            edges.append(p)
    edges = np.array(edges)
    rights = np.append(edges[1:], lo + b)
    coeffs = []
    for left, right in zip(edges, rights):
        mid = 0.5 * (left + right)
        ms = [m for m in range(-lat.band - 2, lat.band + 3) if -half <= mid - b * m < half]
        coeffs.append(math.pi * sum(math.exp(-4 * math.pi * lat.w * b * m) for m in ms))
    return MultiplierProfile(lat, edges, np.array(coeffs))


def h_hat_extrema(lat: GaborLattice, profile: MultiplierProfile | None = None) -> tuple[float, float]:
    """(inf, sup) of h_hat.

    Every piece is C e^{4 pi w xi}, strictly increasing, so the infimum is the
    smallest left-end value and the supremum the largest right-end limit.
    """
    profile = profile or build_multiplier(lat)
    w = lat.w
    lefts = [c * math.exp(4 * math.pi * w * l) for l, r, c in profile.pieces()]
    rights = [c * math.exp(4 * math.pi * w * r) for l, r, c in profile.pieces()]
    return min(lefts), max(rights)


def dual_fourier_profile(xi, lat: GaborLattice):
    """pi e^{2 pi w xi} / h_hat(xi) on [-1/(2 alpha), 1/(2 alpha)], zero elsewhere."""
    xi = np.asarray(xi, dtype=float)
    half = 0.5 / lat.alpha
    inside = np.abs(xi) <= half
    xs = np.where(inside, xi, 0.0)
    out = np.where(inside, np.pi * np.exp(2 * np.pi * lat.w * xs) / h_hat(xs, lat), 0.0)
    return float(out) if out.ndim == 0 else out
