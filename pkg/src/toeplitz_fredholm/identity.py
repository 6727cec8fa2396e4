"""Numeric checks of ``D_n(phi) = Z det(1 - K)`` and related properties."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .fredholm import FredholmResult, det_truncated
from .kernels import KernelSource, quadrature_kernel, series_kernel
from .series import coeff_extract_quadrature
from .special import closed_form_kernel
from .symbol import SymbolSpec, phi_coeffs, symbol_from_laurent, szego_constant
from .toeplitz import toeplitz_det

METHODS = ("series", "quadrature", "closed-form")


def make_kernel(s: SymbolSpec, method: str) -> KernelSource:
    if method == "series":
        return series_kernel(s)
    if method == "quadrature":
        return quadrature_kernel(s)
    if method == "closed-form":
        return closed_form_kernel(s)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


@dataclass(frozen=True)
class IdentityRow:
    n: int
    method: str
    lhs: complex
    Z: complex
    fredholm: FredholmResult
    rhs: complex
    rel_err: float


def verify(s: SymbolSpec, ns, methods=("series",), rel_tol: float = 1e-10,
           fredholm_tol: float | None = None):
    """Rows comparing ``D_n`` with ``Z det(1 - K)`` for every ``n`` and method."""
    if fredholm_tol is None:
        fredholm_tol = min(rel_tol, 1e-12)
    phi = phi_coeffs(s)
    Z = szego_constant(s)
    sources = {m: make_kernel(s, m) for m in methods}
    rows = []
    for n in ns:
        lhs = toeplitz_det(s, n, phi).value
        for m in methods:
            fr = det_truncated(sources[m], n, fredholm_tol)
            rhs = Z * fr.value
            err = abs(lhs - rhs) / abs(lhs) if lhs != 0 else abs(rhs)
            rows.append(IdentityRow(n, m, lhs, Z, fr, rhs, float(err)))
    return rows


@dataclass(frozen=True)
class SzegoRow:
    n: int
    D: complex
    gap: float
    ratio: float


def szego_scan(s: SymbolSpec, ns):
    """``|D_n - Z|`` along ``ns`` and the ratio of successive gaps."""
    phi = phi_coeffs(s)
    Z = szego_constant(s)
    rows = []
    prev = None
    for n in ns:
        D = toeplitz_det(s, n, phi).value
        gap = abs(D - Z)
        ratio = gap / prev if prev else math.nan
        rows.append(SzegoRow(n, D, gap, ratio))
        prev = gap
    return rows


def perturb_locally(s: SymbolSpec, n: int, eps: complex | None = None,
                    radius: float | None = None, N: int = 2048):
    """Symbol for ``phi + eps zeta**n``, returned as ``(spec, c)`` with
    ``phi + eps zeta**n = exp(c) exp(V_spec)``.

    ``V_spec`` is ``V + log(1 + eps zeta**n exp(-V)) - c``, with its Laurent
    coefficients taken on the unit circle.  ``eps`` defaults to a size with
    ``|eps exp(-V)| <= 1/4`` on the unit circle.  ``radius`` is the annulus
    kept for the new symbol; by default the largest ``R <= r`` on which
    ``|eps zeta**n exp(-V)| <= 1/2``.
    """
    v = s.laurent()
    circle = np.exp(2j * np.pi * np.arange(512) / 512)
    if eps is None:
        eps = 0.25 / np.abs(np.exp(-v(circle))).max()

    def g(zeta):
        return eps * zeta ** n * np.exp(-v(zeta))

    if radius is None:
        w = circle
        radius = 1.0
        cap = s.r if not s.entire else 4.0
        for R in np.linspace(1.0, cap, 200)[1:]:
            if R >= cap or max(np.abs(g(R * w)).max(), np.abs(g(w / R)).max()) > 0.5:
                break
            radius = float(R)
    if np.abs(g(circle)).max() >= 1 or radius <= 1:
        raise ValueError("perturbation too large for a principal logarithm")
    k_max = N // 8 - 1
    delta = coeff_extract_quadrature(lambda z: np.log1p(g(z)), 1.0, (-k_max, k_max), N)
    spec, c0 = symbol_from_laurent(v + delta, radius)
    return spec, c0


def locality_residuals(s: SymbolSpec, n: int, eps: complex | None = None,
                       method: str = "series"):
    """Relative changes of both sides at ``n`` after a perturbation at ``|k| >= n``.

    The identity is applied to the rescaled symbol, using
    ``D_n(exp(c) psi) = exp(n c) D_n(psi)``.
    """
    base = verify(s, [n], (method,))[0]
    s2, c0 = perturb_locally(s, n, eps)
    scale = cmath.exp(n * c0)
    lhs2 = scale * toeplitz_det(s2, n).value
    fr = det_truncated(make_kernel(s2, method), n, 1e-13)
    rhs2 = scale * szego_constant(s2) * fr.value
    return abs(lhs2 - base.lhs) / abs(base.lhs), abs(rhs2 - base.rhs) / abs(base.rhs)
