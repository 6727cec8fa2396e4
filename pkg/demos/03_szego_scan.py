"""D_n approaching the Szego constant Z.

The gap |D_n - Z| is the Fredholm correction Z (det(1-K) - 1) on {n, ...}; for
these symbols it shrinks faster than geometrically, until it reaches roundoff.
"""
from toeplitz_fredholm import preset, szego_constant
from toeplitz_fredholm.identity import szego_scan

for name, params in [("bessel", dict(theta=1.0)),
                     ("charlier", dict(kappa=2.0, theta=0.5)),
                     ("hypergeometric", dict(z=2.0, zprime=3.0, xi=0.4))]:
    s = preset(name, **params)
    print(f"\n{name} {params}: Z = {szego_constant(s).real:.16g}")
    for row in szego_scan(s, range(1, 16)):
        print(f"  n={row.n:>2}  D_n={row.D.real:.16g}  gap={row.gap:.2e}  ratio={row.ratio:.3f}")
