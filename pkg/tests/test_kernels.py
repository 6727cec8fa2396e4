import mpmath
import numpy as np
import pytest

from toeplitz_fredholm.kernels import (
    DivergenceError,
    ef_coeffs,
    kernel_block,
    kernel_entry_quadrature,
    kernel_entry_series,
    quadrature_kernel,
    select_radius,
    series_kernel,
)
from toeplitz_fredholm.special import bessel_j, closed_form_kernel, hypergeom_kernel
from toeplitz_fredholm.series import LaurentSeries
from toeplitz_fredholm.symbol import SymbolSpec, preset


def test_ef_bessel():
    theta = 0.8
    E, F = ef_coeffs(preset("bessel", theta=theta), 12)
    for k in range(-12, 13):
        assert abs(E[k] - bessel_j(k, 2 * theta)) <= 1e-15
    for m in range(13):
        assert abs(F[-m] - bessel_j(m, 2 * theta)) <= 1e-15


def test_ef_zero():
    E, F = ef_coeffs(SymbolSpec(), 3)
    assert E.to_dict() == {0: 1} and F.to_dict() == {0: 1}


def test_zero_symbol_kernel():
    s = SymbolSpec()
    assert kernel_entry_series(s, 2, 1) == 0
    assert kernel_entry_quadrature(s, 0, 0, rho=1.5) == 0
    assert not np.any(kernel_block(series_kernel(s), 3, 4))


def test_series_examples():
    s = preset("bessel", theta=1.0)
    J = [bessel_j(k, 2.0) for k in range(4)]
    assert kernel_entry_series(s, 0, 0) == pytest.approx((1 - J[0] ** 2) / 2, rel=1e-14)
    assert kernel_entry_series(s, 0, 1) == pytest.approx(-(J[0] * J[2] - J[1] * J[1]), rel=1e-14)


def test_series_divergence_reported():
    # coefficients that never decay, as for a symbol with a zero on the circle
    E = LaurentSeries(0, np.ones(200, dtype=complex))
    F = LaurentSeries(-199, np.ones(200, dtype=complex))
    with pytest.raises(DivergenceError):
        kernel_entry_series(SymbolSpec(), 0, 0, E=E, F=F)


def test_quadrature_examples():
    s = preset("bessel", theta=1.0)
    assert abs(kernel_entry_quadrature(s, 2, 3, rho=2.0, N=128) - kernel_entry_series(s, 2, 3)) <= 1e-12
    h = preset("hypergeometric", z=1, zprime=1, xi=0.4)
    q = kernel_entry_quadrature(h, 0, 0, rho=1.5)
    assert abs(q - kernel_entry_series(h, 0, 0)) <= 1e-11
    assert abs(q - hypergeom_kernel(0, 0, 1, 1, 0.4)) <= 1e-11


def test_quadrature_radius_guard():
    s = preset("charlier", kappa=2.0, theta=0.5)
    with pytest.raises(ValueError):
        kernel_entry_quadrature(s, 0, 0, rho=2.5)
    with pytest.raises(ValueError):
        kernel_entry_quadrature(s, 0, 0, rho=1.0)


def test_radius_selection():
    assert select_radius(preset("bessel", theta=1.0)) == 2.0
    assert select_radius(preset("hypergeometric", z=2, zprime=3, xi=0.25)) == pytest.approx(2.0)
    assert 1 < select_radius(preset("bessel", theta=200.0)) < 2


def test_block_shapes_and_symmetry():
    src = series_kernel(preset("bessel", theta=1.0))
    assert kernel_block(src, 0, 0).shape == (0, 0)
    K = kernel_block(src, 0, 3)
    assert np.allclose(K, K.T, rtol=0, atol=1e-16)
    assert kernel_block(src, 2, 3)[0, 1] == src(2, 3)


def test_deterministic(preset_symbol):
    src = quadrature_kernel(preset_symbol)
    assert np.array_equal(src.block(1, 6), src.block(1, 6))


def test_series_quadrature_agree(preset_symbol):
    a = series_kernel(preset_symbol).block(0, 21)
    b = quadrature_kernel(preset_symbol).block(0, 21)
    assert np.abs(a - b).max() <= 1e-11


def test_decay_fit(preset_symbol):
    src = series_kernel(preset_symbol)
    src.fit_decay(10)
    assert src.decay_ratio(20) <= 1


def _closed_form_mp(name, p, i, j):
    """Off-diagonal closed form with ``j`` allowed to be real (mpmath)."""
    fac = lambda m: mpmath.gamma(m + 1)
    if name == "bessel":
        th = mpmath.mpf(p["theta"].real)
        J = lambda nu: mpmath.besselj(nu, 2 * th)
        return th * (J(i) * J(j + 1) - J(i + 1) * J(j)) / (i - j)
    if name == "charlier":
        k, th = mpmath.mpf(p["kappa"].real), mpmath.mpf(p["theta"].real)
        t2 = th ** 2
        a = lambda m: mpmath.hyp1f1(-k, m + 1, t2) / fac(m)
        b = lambda m: mpmath.hyp1f1(1 - k, m + 2, t2) / fac(m + 1)
        return (th ** (i + j + 2) * mpmath.rf(k, i + 1) * mpmath.exp(-t2)
                * (a(i) * b(j) - b(i) * a(j)) / (i - j))
    z, zp, xi = (mpmath.mpf(p[q].real) for q in ("z", "zprime", "xi"))
    x = xi ** 2 / (xi ** 2 - 1)
    f0 = lambda m: mpmath.hyp2f1(-z, -zp, m + 1, x)
    f1 = lambda m: mpmath.hyp2f1(1 - z, 1 - zp, m + 2, x)
    pref = (mpmath.rf(z, i + 1) * mpmath.rf(zp, j + 1) / (fac(i) * fac(j))
            * xi ** (i + j + 2) * (1 - xi ** 2) ** (z + zp - 1) / (i - j))
    return pref * (f0(i) * f1(j) / (j + 1) - f1(i) / (i + 1) * f0(j))


def test_diagonal_consistency(preset_symbol):
    name, params = preset_symbol.preset
    series = series_kernel(preset_symbol)
    quad = quadrature_kernel(preset_symbol)
    closed = closed_form_kernel(preset_symbol)
    mpmath.mp.dps = 30
    try:
        for i in range(0, 8):
            d = series(i, i)
            assert abs(d - quad(i, i)) <= 1e-9 * max(1, abs(d))
            assert abs(closed(i, i) - d) <= 1e-12
            # symmetric difference quotient around j = i; O(h**2) error
            h = mpmath.mpf("1e-6")
            limit = (_closed_form_mp(name, params, i, i + h) + _closed_form_mp(name, params, i, i - h)) / 2
            assert abs(complex(limit) - d) <= 1e-9 * max(1, abs(d))
    finally:
        mpmath.mp.dps = 15
