"""Symmetric partial sums of the Zak series of the Cauchy window."""

from __future__ import annotations

import numpy as np

from ..lattice import GaborLattice

_CHUNK = 4096


def zak_series(t, omega, lat: GaborLattice, K: int):
    """sum_{|k| <= K} g(t - alpha k) e^{2 pi i alpha k omega}, principal-value ordering."""
    t, omega = np.broadcast_arrays(np.asarray(t, dtype=float), np.asarray(omega, dtype=float))
    flat_t, flat_o = t.ravel(), omega.ravel()
    out = np.zeros(flat_t.shape, dtype=complex)
    a, w = lat.alpha, lat.w
    for s in range(-K, K + 1, _CHUNK):
        k = np.arange(s, min(s + _CHUNK, K + 1))
        terms = np.exp(2j * np.pi * a * np.outer(flat_o, k)) / (flat_t[:, None] - a * k[None, :] - 1j * w)
        out += terms.sum(axis=1)
    return out.reshape(t.shape)
