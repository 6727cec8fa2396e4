"""The correlation kernel ``K(i, j)`` of a symbol, by coefficient series or quadrature.

With ``E = exp(V*)`` and ``F = exp(-V*)``,

    K(i, j) = sum_{l >= 1} E_{i+l} F_{-(j+l)},

which is the expansion of ``exp(V*(zeta) - V*(eta)) / (zeta/eta - 1)`` in
powers of ``eta/zeta``.  The same quantity is a double contour integral over
the torus ``|zeta| = 1/|eta| = rho``, evaluated here with a 2-D FFT.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .series import LaurentSeries, QuadratureError, full_exp, grid_size
from .symbol import SymbolSpec, v_star

#: log of the largest |exp(V*)| tolerated on a quadrature circle
LOG_OVERFLOW_CAP = math.log(1e100)
DEFAULT_RHO = 2.0
SERIES_TAIL = 1e-17
# terms still this large (relative to the largest) where the data ends
DIVERGENCE_EDGE = 1e-8


class DivergenceError(ArithmeticError):
    """Kernel series terms fail to decay; the symbol is outside its domain."""


@dataclass
class KernelSource:
    """Evaluates blocks of a kernel and carries a decay model.

    ``block_fn(rows, cols)`` returns the matrix ``K(rows[a], cols[b])``.
    The decay model is ``|K(i, j)| <= C rho**-(i+j)``; ``C`` is fitted on
    demand by :meth:`fit_decay`.
    """

    method: str
    block_fn: Callable[[np.ndarray, np.ndarray], np.ndarray]
    rho: float
    C: float | None = None
    symbol: SymbolSpec | None = field(default=None, repr=False)

    def entry(self, i: int, j: int) -> complex:
        return complex(self.block_fn(np.array([i]), np.array([j]))[0, 0])

    def __call__(self, i, j):
        return self.entry(i, j)

    def block(self, n: int, M: int) -> np.ndarray:
        if M <= 0:
            return np.zeros((0, 0), dtype=complex)
        idx = np.arange(n, n + M)
        return self.block_fn(idx, idx)

    def fit_decay(self, size: int = 10) -> float:
        k = np.arange(size)
        scaled = np.abs(self.block(0, size)) * float(self.rho) ** (k[:, None] + k[None, :])
        self.C = float(scaled.max())
        return self.C

    def decay_ratio(self, size: int = 20) -> float:
        """``max |K(i,j)| rho**(i+j) / C`` over a ``size x size`` block (<= 1 when valid)."""
        if self.C is None:
            self.fit_decay()
        if self.C == 0:
            return 0.0 if not np.any(self.block(0, size)) else math.inf
        k = np.arange(size)
        scaled = np.abs(self.block(0, size)) * float(self.rho) ** (k[:, None] + k[None, :])
        return float(scaled.max() / self.C)


def ef_coeffs(s: SymbolSpec, cutoff: int | None = None):
    """Coefficients of ``E = exp(V*(zeta))`` and ``F = exp(-V*(eta))``.

    ``F_{-m}`` (the coefficient of ``eta**-m``) is ``F[-m]``.  Without a cutoff
    the full significant support is returned.
    """
    vs = v_star(s).laurent()
    window = None if cutoff is None else (-cutoff, cutoff)
    return full_exp(vs, window), full_exp(-vs, window)


def _series_block(E: LaurentSeries, F: LaurentSeries):
    """Vectorized ``K(rows, cols)`` from the coefficient arrays of E and F."""
    def block_fn(rows, cols):
        rows, cols = np.asarray(rows), np.asarray(cols)
        out = np.zeros((len(rows), len(cols)), dtype=complex)
        if not len(E) or not len(F) or not len(rows) or not len(cols):
            return out
        # terms vanish once i + l > E.hi or -(j + l) < F.lo
        L = max(0, max(E.hi - rows.min(), -F.lo - cols.min()))
        if L == 0:
            return out
        l = np.arange(1, L + 1)
        ei = rows[:, None] + l[None, :] - E.lo
        fj = -(cols[:, None] + l[None, :]) - F.lo
        Ec = np.concatenate([E.coeffs, [0]])
        Fc = np.concatenate([F.coeffs, [0]])
        ei = np.where((ei >= 0) & (ei < len(E)), ei, len(E))
        fj = np.where((fj >= 0) & (fj < len(F)), fj, len(F))
        return Ec[ei] @ Fc[fj].T
    return block_fn


def select_radius(s: SymbolSpec, rho0: float | None = None) -> float:
    """Torus radius for the contour route.

    Starts from ``sqrt(r)`` (or 2 for Laurent polynomials) and moves toward 1
    until ``|exp(V*)|`` on ``|zeta| = rho`` and ``|exp(-V*)|`` on
    ``|eta| = 1/rho`` stay below 1e100.
    """
    if rho0 is None:
        rho0 = DEFAULT_RHO if s.entire else math.sqrt(s.r)
    vs = v_star(s).laurent()
    w = np.exp(2j * np.pi * np.arange(256) / 256)
    rho = rho0
    for _ in range(200):
        big = max(np.max(vs(rho * w).real), np.max((-vs(w / rho)).real))
        if big <= LOG_OVERFLOW_CAP:
            return float(rho)
        rho = 1 + (rho - 1) / 2
    raise QuadratureError(rho, "no admissible radius")


def quadrature_grid_size(s: SymbolSpec, rho: float, width: int) -> int:
    """Power-of-two grid with aliased terms damped below ~e**-40."""
    margin = math.log(rho) if s.entire else min(math.log(rho), math.log(s.r / rho))
    return grid_size(max(width, int(math.ceil(40 / margin / 4))))


def _check_radius(s: SymbolSpec, rho: float):
    if not (1 < rho < s.r):
        raise ValueError(f"radius rho={rho} must satisfy 1 < rho < r={s.r}")


def quadrature_table(s: SymbolSpec, rho: float, N: int) -> np.ndarray:
    """``T[i mod N, j mod N] ~ K(i, j)`` from the N x N torus trapezoid rule.

    Valid for ``0 <= i, j < N/4``; the caller chooses ``N`` accordingly.
    """
    _check_radius(s, rho)
    if s.is_zero:
        return np.zeros((N, N), dtype=complex)
    vs = v_star(s).laurent()
    w = np.exp(2j * np.pi * np.arange(N) / N)
    zeta, eta = rho * w, w / rho
    with np.errstate(over="ignore", invalid="ignore"):
        ez = np.exp(vs(zeta))
        fe = np.exp(-vs(eta))
        G = ez[:, None] * fe[None, :] / (zeta[:, None] - eta[None, :])
    if not np.all(np.isfinite(G)):
        raise QuadratureError(rho)
    # sum_p zeta_p**-i -> forward FFT over p; sum_q eta_q**(j+1) -> inverse FFT over q
    T = np.fft.ifft(np.fft.fft(G, axis=0), axis=1) / N
    k = np.arange(N)
    T = T * float(rho) ** (-k.astype(float))[:, None]
    # column m holds j + 1 = m
    T = np.roll(T, -1, axis=1) * float(rho) ** (-(k.astype(float) + 1))[None, :]
    return T


def kernel_entry_series(s: SymbolSpec, i: int, j: int, L: int = 1, E=None, F=None) -> complex:
    """``sum_{l=1}^{L} E_{i+l} F_{-(j+l)}`` with ``L`` extended until the terms die out."""
    if L < 1:
        raise ValueError("L must be >= 1")
    if E is None or F is None:
        E, F = ef_coeffs(s)
    cutoff = max(len(E), len(F), 1)
    lag = max(4, 2 * max(list(s.vplus) + list(s.vminus) + [1]))
    l_max = 10 * cutoff + lag
    # last l for which both factors are still inside their windows
    l_data = min(E.hi - i, -F.lo - j)
    total = 0j
    quiet = 0
    peak = 0.0
    recent = []
    for l in range(1, l_max + 1):
        term = E[i + l] * F[-(j + l)]
        total += term
        peak = max(peak, abs(term))
        if l <= l_data:
            recent = (recent + [abs(term)])[-lag:]
        quiet = quiet + 1 if abs(term) < SERIES_TAIL * (abs(total) + 1e-300) else 0
        if l >= L and quiet >= lag:
            if l > l_data >= lag and min(recent) > DIVERGENCE_EDGE * peak:
                break
            return complex(total)
    raise DivergenceError(f"kernel series for ({i}, {j}) does not decay within "
                          f"{l_max} terms; coefficients are still significant at "
                          "the edge of their window")


def kernel_entry_quadrature(s: SymbolSpec, i: int, j: int, rho: float | None = None,
                            N: int | None = None) -> complex:
    """``K(i, j)`` by the double trapezoid rule on ``|zeta| = 1/|eta| = rho``."""
    if rho is None:
        rho = select_radius(s)
    _check_radius(s, rho)
    if N is None:
        N = quadrature_grid_size(s, rho, max(i, j) + 2)
    T = quadrature_table(s, rho, N)
    return complex(T[i % N, j % N])


def series_kernel(s: SymbolSpec) -> KernelSource:
    """Kernel source backed by the coefficient series."""
    E, F = ef_coeffs(s)
    rho = DEFAULT_RHO if s.is_zero else select_radius(s)
    return KernelSource("series", _series_block(E, F), rho, symbol=s)


def quadrature_kernel(s: SymbolSpec, rho: float | None = None, N: int | None = None) -> KernelSource:
    """Kernel source backed by the torus quadrature; grids are cached per size."""
    if rho is None:
        rho = select_radius(s)
    _check_radius(s, rho)
    tables = {}

    def block_fn(rows, cols):
        rows, cols = np.asarray(rows), np.asarray(cols)
        need = int(max(rows.max(initial=0), cols.max(initial=0))) + 2
        size = N if N is not None else quadrature_grid_size(s, rho, need)
        while size < 4 * need:
            size *= 2
        if size not in tables:
            tables[size] = quadrature_table(s, rho, size)
        T = tables[size]
        return T[np.ix_(rows % size, cols % size)]

    return KernelSource("quadrature", block_fn, rho, symbol=s)


def kernel_block(src: KernelSource, n: int, M: int) -> np.ndarray:
    """``K(n + a, n + b)`` for ``0 <= a, b < M``."""
    return src.block(n, M)
