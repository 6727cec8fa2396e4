"""``det(1 - K)`` on ``l2({n, n+1, ...})``: finite sections and the minor expansion."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .kernels import KernelSource
from .toeplitz import det as lu_det

MAX_SECTION = 4096
MAX_SERIES_ORDER = 4


@dataclass(frozen=True)
class FredholmResult:
    value: complex
    M: int
    tail_bound: float
    converged: bool
    history: tuple = field(default=(), compare=False)


def tail_estimate(src: KernelSource, n: int, M: int) -> float:
    """``C * sum rho**-(i+j)`` over index pairs ``>= n`` outside the ``M``-section."""
    if src.C is None:
        src.fit_decay()
    q = 1.0 / float(src.rho)
    s_n = q ** n / (1 - q)
    s_nm = q ** (n + M) / (1 - q)
    # s_n**2 - (s_n - s_nm)**2 without the cancellation
    return src.C * s_nm * (2 * s_n - s_nm)


def section_det(src: KernelSource, n: int, M: int) -> complex:
    K = src.block(n, M)
    return lu_det(np.eye(M) - K).value


def det_truncated(src: KernelSource, n: int, rel_tol: float = 1e-12) -> FredholmResult:
    """Section determinants ``det(I - K_M)`` with ``M = 8, 16, ...`` until stable.

    Converged means the last doubling moved the value by less than
    ``rel_tol * |value|`` and the decay-model tail estimate is below
    ``rel_tol``.
    """
    if not rel_tol > 0:
        raise ValueError("rel_tol must be positive")
    prev = section_det(src, n, 4)
    history = [(4, prev)]
    M = 8
    while M <= MAX_SECTION:
        val = section_det(src, n, M)
        history.append((M, val))
        tail = tail_estimate(src, n, M)
        if abs(val - prev) <= rel_tol * abs(val) and tail < rel_tol:
            return FredholmResult(val, M, tail, True, tuple(history))
        prev = val
        M *= 2
    M //= 2
    return FredholmResult(prev, M, tail_estimate(src, n, M), False, tuple(history))


def det_series(src: KernelSource, n: int, m_max: int = 3, l_max: int | None = None) -> complex:
    """Inclusion-exclusion sum of principal minors over ``n <= l_1 < ... < l_m <= l_max``."""
    if m_max > MAX_SERIES_ORDER:
        raise ValueError(f"m_max={m_max} exceeds {MAX_SERIES_ORDER}")
    if l_max is None:
        l_max = n + 20
    K = src.block(n, l_max - n + 1)
    total = 1 + 0j
    idx = range(K.shape[0])
    for m in range(1, m_max + 1):
        s = 0j
        for sub in itertools.combinations(idx, m):
            s += np.linalg.det(K[np.ix_(sub, sub)])
        total += (-1) ** m * s
    return complex(total)


def rank_one_kernel(a: complex) -> KernelSource:
    """Test kernel ``K(i, j) = a**(i+j+2)`` with ``det(1-K) = 1 - a**(2n+2)/(1-a**2)``."""
    a = complex(a)
    if not abs(a) < 1:
        raise ValueError("|a| < 1 required")

    def block_fn(rows, cols):
        return np.power(a, np.add.outer(np.asarray(rows), np.asarray(cols)) + 2)
    src = KernelSource("closed-form", block_fn, 1 / abs(a) if a else math.inf)
    src.C = abs(a) ** 2
    return src
