"""Toeplitz matrices ``(phi_{i-j})`` and their determinants."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .series import LaurentSeries
from .symbol import SymbolSpec, phi_coeffs


@dataclass(frozen=True)
class Determinant:
    """A determinant with its logarithm kept alongside the raw value.

    ``value == exp(logabs) * phase`` up to rounding; the log form survives when
    the raw value over- or underflows.
    """

    value: complex
    logabs: float
    phase: complex

    def __complex__(self):
        return complex(self.value)


def build(phi: LaurentSeries, n: int) -> np.ndarray:
    """The ``n x n`` matrix with entry ``(i, j) = phi_{i-j}``."""
    if n < 1:
        raise ValueError("n must be positive")
    if not phi.covers(-(n - 1), n - 1):
        raise ValueError(f"phi window [{phi.lo}, {phi.hi}] does not cover the "
                         f"required range [{-(n - 1)}, {n - 1}]")
    col = np.array([phi[k] for k in range(n)], dtype=complex)
    row = np.array([phi[-k] for k in range(n)], dtype=complex)
    return scipy.linalg.toeplitz(col, row)


def det(m: np.ndarray) -> Determinant:
    """Determinant by LU with partial pivoting."""
    if m.shape[0] == 0:
        return Determinant(1 + 0j, 0.0, 1 + 0j)
    phase, logabs = np.linalg.slogdet(m)
    phase = complex(phase)
    if not np.isfinite(logabs):
        value = 0j
    else:
        with np.errstate(over="ignore"):
            value = phase * complex(np.exp(logabs))
    return Determinant(value, float(logabs), phase)


def toeplitz_det(s: SymbolSpec, n: int, phi: LaurentSeries | None = None) -> Determinant:
    """``D_n(exp V)`` for the symbol ``s``."""
    if phi is None:
        phi = phi_coeffs(s)
    if not phi.covers(-(n - 1), n - 1):
        # coefficients beyond the computed support are below roundoff
        phi = phi.window(min(phi.lo, -(n - 1)), max(phi.hi, n - 1))
    return det(build(phi, n))
