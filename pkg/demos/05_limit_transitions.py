"""Both three-parameter families degenerate to the discrete Bessel kernel.

Hypergeometric with xi = theta/k, z = z' = k tends to Bessel(theta) entrywise.
Charlier with kappa = k, theta_C = theta/sqrt(k) tends to it only after the
diagonal similarity K(i, j) -> k**((j-i)/2) K(i, j), which leaves det(1 - K)
unchanged.
"""
import math

import numpy as np

from toeplitz_fredholm.special import bessel_kernel_block, charlier_kernel_block, hypergeom_kernel_block

theta = 1.0
idx = np.arange(3)
KB = bessel_kernel_block(idx, idx, theta)
gauge = (idx[None, :] - idx[:, None]) / 2
print(f"{'k':>6} {'charlier (raw)':>16} {'charlier (gauged)':>18} {'hypergeometric':>16}")
for k in (10, 100, 1000, 10000):
    Kc = charlier_kernel_block(idx, idx, k, theta / math.sqrt(k))
    Kh = hypergeom_kernel_block(idx, idx, k, k, theta / k)
    print(f"{k:>6} {np.abs(Kc - KB).max():>16.2e} {np.abs(float(k) ** gauge * Kc - KB).max():>18.2e} "
          f"{np.abs(Kh - KB).max():>16.2e}")
