"""Division-free determinants over graded polynomials."""
from __future__ import annotations

from .graded import GradedPoly


def gp_det(mat, d: int) -> GradedPoly:
    """Laplace expansion along rows, memoized over the remaining column sets.

    Costs ``O(n 2**n)`` products and never divides, so it stays exact under
    truncation.
    """
    n = len(mat)
    if n == 0:
        return GradedPoly.const(1, d)
    memo = {}

    def minor(row: int, cols: int) -> GradedPoly:
        if row == n:
            return GradedPoly.const(1, d)
        if cols in memo:
            return memo[cols]
        total = GradedPoly(d)
        sign = 1
        for c in range(n):
            if cols >> c & 1:
                a = mat[row][c]
                if not a.is_zero():
                    rest = minor(row + 1, cols & ~(1 << c))
                    if not rest.is_zero():
                        term = a * rest
                        total = total + term if sign > 0 else total - term
                sign = -sign
        memo[cols] = total
        return total

    return minor(0, (1 << n) - 1)
