"""Toeplitz determinants of ``exp(V)`` symbols and their Fredholm-determinant form.

``D_n(phi) = Z det(1 - K)`` on ``l2({n, n+1, ...})`` is checked numerically,
with the kernel built three ways (coefficient series, torus quadrature,
closed forms in Bessel/hypergeometric functions), and exactly, in a truncated
graded polynomial algebra over the rationals.
"""
from .fredholm import FredholmResult, det_series, det_truncated
from .identity import locality_residuals, perturb_locally, szego_scan, verify
from .kernels import (
    KernelSource,
    ef_coeffs,
    kernel_block,
    kernel_entry_quadrature,
    kernel_entry_series,
    quadrature_kernel,
    series_kernel,
)
from .series import (
    LaurentSeries,
    coeff_extract_quadrature,
    full_exp,
    laurent_mul,
    onesided_exp,
)
from .special import (
    bessel_j,
    bessel_kernel,
    charlier_kernel,
    closed_form_kernel,
    hyp1f1,
    hyp2f1,
    hypergeom_kernel,
    pochhammer,
)
from .symbol import SymbolSpec, phi_coeffs, preset, szego_constant, v_star
from .toeplitz import build as toeplitz_matrix
from .toeplitz import det as toeplitz_matrix_det
from .toeplitz import toeplitz_det

__version__ = "0.1.0"
