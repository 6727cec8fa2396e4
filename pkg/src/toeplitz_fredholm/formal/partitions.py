"""Partitions, the point sets ``S(lambda)`` and Schur functions in graded variables."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..series import LaurentSeries, onesided_exp
from .graded import GradedPoly
from .linalg import gp_det


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts."""

    parts: tuple = ()

    def __post_init__(self):
        p = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
            raise ValueError(f"not a partition: {p}")
        object.__setattr__(self, "parts", p)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def first(self) -> int:
        return self.parts[0] if self.parts else 0

    def point_set_head(self) -> tuple:
        """``lambda_i - i`` for ``i <= length``; the rest of ``S`` is ``{-i : i > length}``."""
        return tuple(p - i for i, p in enumerate(self.parts, start=1))

    def contains(self, x: int) -> bool:
        """Membership of ``x`` in ``S(lambda) = {lambda_i - i : i >= 1}``."""
        return x <= -(self.length + 1) or x in self.point_set_head()

    def avoids_from(self, n: int) -> bool:
        """``S(lambda)`` has no point ``>= n`` (equivalently ``lambda_1 <= n``)."""
        return self.first - 1 < n


def partitions_of(m: int, max_part: int | None = None):
    """Partitions of ``m`` in reverse lexicographic order."""
    if max_part is None:
        max_part = m
    if m == 0:
        yield Partition(())
        return
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions_of(m - first, first):
            yield Partition((first,) + rest.parts)


def partitions_up_to(size: int):
    for m in range(size + 1):
        yield from partitions_of(m)


def t_to_v(k: int, sign: str, d: int) -> GradedPoly:
    """Power-sum variable ``t_k = (-1)**(k+1) v_k``."""
    return GradedPoly.var(k, sign, d) * (-1) ** (k + 1)


@lru_cache(maxsize=None)
def complete_homogeneous(sign: str, d: int) -> tuple:
    """``h_0, ..., h_d`` from ``sum_k h_k w**k = exp(sum_k t_k w**k)``."""
    c = np.array([GradedPoly(d)] + [t_to_v(k, sign, d) for k in range(1, d + 1)], dtype=object)
    e = onesided_exp(LaurentSeries(0, c), d)
    return tuple(x if isinstance(x, GradedPoly) else GradedPoly.const(x, d) for x in e.coeffs)


def schur_poly(lam: Partition, sign: str, d: int) -> GradedPoly:
    """``s_lambda(t^sign)`` by Jacobi-Trudi ``det(h_{lambda_i - i + j})``."""
    if lam.size > d:
        return GradedPoly(d)
    h = complete_homogeneous(sign, d)
    zero = GradedPoly(d)
    ell = lam.length
    mat = [[h[lam.parts[i] - i + j] if 0 <= lam.parts[i] - i + j <= d else zero
            for j in range(ell)] for i in range(ell)]
    return gp_det(mat, d)
