"""Toeplitz determinants against Z det(1 - K) for the three classical symbols.

For each symbol the left side D_n is an n x n LU determinant, and the right
side is a finite-section Fredholm determinant of the kernel on {n, n+1, ...},
computed with the kernel from each of the three available routes.
"""
from toeplitz_fredholm import preset
from toeplitz_fredholm.identity import METHODS, verify

SYMBOLS = [
    ("bessel", dict(theta=1.0)),
    ("charlier", dict(kappa=2.0, theta=0.5)),
    ("hypergeometric", dict(z=2.0, zprime=3.0, xi=0.4)),
]

for name, params in SYMBOLS:
    s = preset(name, **params)
    print(f"\n{name} {params}")
    print(f"{'n':>3} {'method':>12} {'D_n':>22} {'Z det(1-K)':>22} {'rel err':>9} {'M':>4}")
    for row in verify(s, range(1, 9), METHODS):
        print(f"{row.n:>3} {row.method:>12} {row.lhs.real:>22.16g} {row.rhs.real:>22.16g} "
              f"{row.rel_err:>9.1e} {row.fredholm.M:>4}")
