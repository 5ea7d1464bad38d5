"""Band-limited test signals with smooth compactly supported spectra.

A signal of band k has spectrum inside [k, k+1]:

    f_k(t) = int_k^{k+1} F(xi) e^{2 pi i xi t} d xi = e^{2 pi i k t} h_k(t),

where F is a finite sum of bumps psi((xi - k - c)/r) with
psi(x) = exp(1 - 1/(1 - x^2)) on |x| < 1.  Both f_k and h_k extend to entire
functions and are evaluated at complex points by Gauss-Legendre quadrature
over each bump.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..signal import SampledSignal, desk_grid

_CHUNK = 2048


def bump(x):
    """C-infinity bump supported on (-1, 1), peak value 1 at 0."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    inside = np.abs(x) < 1
    out[inside] = np.exp(1 - 1 / (1 - x[inside] ** 2))
    return out


@dataclass(frozen=True)
class Bump:
    centre: float  # offset inside the unit band
    radius: float
    amplitude: complex


@dataclass(frozen=True)
class PWTestSignal:
    band: int
    bumps: tuple[Bump, ...]

    def spectrum(self, xi):
        xi = np.asarray(xi, dtype=float)
        out = np.zeros(xi.shape, dtype=complex)
        for b in self.bumps:
            out += b.amplitude * bump((xi - self.band - b.centre) / b.radius)
        return out

    def _nodes(self, z, nodes):
        if nodes is None:
            reach = float(np.max(np.abs(np.real(z)), initial=0.0))
            nodes = 256 + int(4 * reach)
        return np.polynomial.legendre.leggauss(nodes)

    def h(self, z, nodes: int | None = None):
        """h_k(z): the signal with its carrier e^{2 pi i k z} removed."""
        z = np.asarray(z, dtype=complex)
        x, wts = self._nodes(z, nodes)
        psi = bump(x) * wts
        flat = z.ravel()
        out = np.zeros(flat.shape, dtype=complex)
        for b in self.bumps:
            xi = b.centre + b.radius * x
            weights = b.amplitude * b.radius * psi
            for s in range(0, flat.size, _CHUNK):
                zz = flat[s : s + _CHUNK]
                out[s : s + _CHUNK] += np.exp(2j * np.pi * np.outer(zz, xi)) @ weights
        return out.reshape(z.shape)

    def __call__(self, z, nodes: int | None = None):
        z = np.asarray(z, dtype=complex)
        return np.exp(2j * np.pi * self.band * z) * self.h(z, nodes)

    def energy(self, nodes: int = 512) -> float:
        """Spectral energy int |F|^2, split at the bump edges."""
        edges = sorted({self.band + b.centre + s * b.radius for b in self.bumps for s in (-1, 1)})
        x, wts = np.polynomial.legendre.leggauss(nodes)
        total = 0.0
        for lo, hi in zip(edges[:-1], edges[1:]):
            xi = 0.5 * (hi - lo) * x + 0.5 * (hi + lo)
            total += 0.5 * (hi - lo) * float(np.sum(wts * np.abs(self.spectrum(xi)) ** 2))
        return total

    def sample(self, t0: float, dt: float, n: int) -> SampledSignal:
        return SampledSignal.from_function(self, t0, dt, n)


def pw_test_signal(k: int, seed: int, grid: tuple[float, float, int] | None = None):
    """Random unit-energy band-k signal and its samples on ``grid`` (desk grid by default)."""
    rng = np.random.default_rng(seed)
    count = int(rng.integers(2, 4))
    centres = rng.uniform(0.4, 0.6, count)
    radii = np.minimum(centres, 1 - centres) * rng.uniform(0.8, 0.99, count)
    amps = rng.normal(size=count) + 1j * rng.normal(size=count)
    raw = PWTestSignal(k, tuple(Bump(float(c), float(r), complex(a)) for c, r, a in zip(centres, radii, amps)))
    scale = 1 / np.sqrt(raw.energy())
    sig = PWTestSignal(k, tuple(Bump(b.centre, b.radius, b.amplitude * scale) for b in raw.bumps))
    t0, dt, n = grid if grid is not None else desk_grid()
    return sig, sig.sample(t0, dt, n)
