"""Uniformly sampled complex signals."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Standard desk grid: 64 time units centred at 0, 2**14 samples.
DESK_SPAN = 64.0
DESK_SAMPLES = 2**14


@dataclass(frozen=True, eq=False)
class SampledSignal:
    """Samples ``values[j] = f(t0 + j*dt)``."""

    t0: float
    dt: float
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        if not (np.isfinite(self.dt) and self.dt > 0):
            raise ValueError(f"dt must be positive, got {self.dt!r}")
        if values.ndim != 1 or values.size < 2:
            raise ValueError("values must be a 1-d sequence of length >= 2")
        if not np.all(np.isfinite(values)):
            raise ValueError("values must be finite")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "t0", float(self.t0))
        object.__setattr__(self, "dt", float(self.dt))

    @classmethod
    def from_function(cls, func, t0: float, dt: float, n: int) -> "SampledSignal":
        t = t0 + dt * np.arange(n)
        return cls(t0, dt, func(t))

    @property
    def t(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.values.size)

    @property
    def span(self) -> float:
        return self.dt * self.values.size

    def __len__(self) -> int:
        return self.values.size

    def with_values(self, values) -> "SampledSignal":
        return SampledSignal(self.t0, self.dt, values)

    def inner(self, other: "SampledSignal") -> complex:
        """Trapezoidal <self, other> = sum self * conj(other) * dt."""
        _check_same_grid(self, other)
        return complex(np.vdot(other.values, self.values) * self.dt)

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2) * self.dt))

    def interior(self, fraction: float = 0.5) -> np.ndarray:
        """Boolean mask of the central ``fraction`` of the grid."""
        t = self.t
        centre = self.t0 + 0.5 * self.dt * (self.values.size - 1)
        return np.abs(t - centre) <= 0.5 * fraction * self.span


def _check_same_grid(a: SampledSignal, b: SampledSignal) -> None:
    if len(a) != len(b) or not np.isclose(a.dt, b.dt, rtol=1e-12) or not np.isclose(a.t0, b.t0, rtol=1e-12, atol=1e-12 * a.dt):
        raise ValueError("signals live on different grids")


def desk_grid(span: float = DESK_SPAN, samples: int = DESK_SAMPLES) -> tuple[float, float, int]:
    """(t0, dt, n) of a grid of ``samples`` points covering [-span/2, span/2)."""
    dt = span / samples
    return -span / 2, dt, samples


def relative_error(approx, exact, mask=None) -> float:
    """||approx - exact|| / ||exact|| over an optional mask."""
    a = np.asarray(getattr(approx, "values", approx))
    e = np.asarray(getattr(exact, "values", exact))
    if mask is not None:
        a, e = a[mask], e[mask]
    return float(np.linalg.norm(a - e) / np.linalg.norm(e))
