"""Three ways to the same kernel, and which reading of the closed forms holds.

The coefficient series and the torus quadrature work for any symbol; the
closed forms (Bessel, confluent and Gauss hypergeometric) only for the
three families.  Where the printed formulas admit two readings, the generic
routes decide between them.
"""
import numpy as np

from toeplitz_fredholm import preset
from toeplitz_fredholm.kernels import quadrature_kernel, series_kernel
from toeplitz_fredholm.special import closed_form_kernel, formula_readings

for name, params in [("bessel", dict(theta=1.0)),
                     ("charlier", dict(kappa=2.0, theta=0.5)),
                     ("hypergeometric", dict(z=0.8, zprime=1 + 1j, xi=0.5))]:
    s = preset(name, **params)
    a = series_kernel(s).block(0, 21)
    b = quadrature_kernel(s).block(0, 21)
    c = closed_form_kernel(s).block(0, 21)
    print(f"\n{name} {params}")
    print(f"  K(0,0) = {a[0, 0]:.15g}   K(1,3) = {a[1, 3]:.15g}")
    print(f"  series vs quadrature   {np.abs(a - b).max():.1e}")
    print(f"  series vs closed form  {np.abs(a - c).max():.1e}")
    if name != "bessel":
        r = formula_readings(s)
        for reading, dev in r["deviation"].items():
            print(f"  reading {reading!r:>28}: deviation {dev:.1e}")
        print(f"  selected: {r['selected']}")

# (i - j) K(i, j) is a sum of two products f(i) g(j): its rank is 2
s = preset("hypergeometric", z=3.0, zprime=2.0, xi=0.4)
idx = np.arange(10)
sv = np.linalg.svd((idx[:, None] - idx[None, :]) * closed_form_kernel(s).block(0, 10), compute_uv=False)
print("\nsingular values of (i-j)K, 10x10 block:", " ".join(f"{x:.1e}" for x in sv[:5]))
