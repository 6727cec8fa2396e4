"""Bessel and hypergeometric functions and the closed-form kernels built from them.

Three symbol families have kernels in classical functions:

* ``exp(theta (zeta + 1/zeta))``            discrete Bessel kernel
* ``(1 + theta zeta)**kappa exp(theta/zeta)``   Charlier-type kernel (1F1)
* ``(1 + xi zeta)**z (1 + xi/zeta)**z'``     hypergeometric kernel (2F1)

Off-diagonal entries use the integrable form ``(i - j) K(i, j) = f(i) g(j) -
g(i) f(j)``; diagonal entries are sums ``sum_{m > i} E_m F_{-m}`` of the
single-contour coefficients, never derivatives in the order.
"""
from __future__ import annotations

import cmath
import math

import numpy as np

from .kernels import KernelSource, select_radius
from .symbol import DomainError, SymbolSpec

SERIES_TOL = 1e-16
MAX_TERMS = 100_000


def _is_nonpositive_int(c) -> bool:
    c = complex(c)
    return c.imag == 0 and c.real <= 0 and c.real == int(c.real)


def pochhammer(a, k: int) -> complex:
    """Rising factorial ``a (a+1) ... (a+k-1)``; ``(a)_0 = 1``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out = 1 + 0j
    for m in range(k):
        out *= a + m
    return out


def rising_over_factorial(a, m: int) -> complex:
    """``(a)_m / m!`` as a running product (no factorial overflow)."""
    out = 1 + 0j
    for k in range(m):
        out *= (a + k) / (k + 1)
    return out


def power_over_factorial(x, m: int) -> complex:
    """``x**m / m!`` as a running product; underflows quietly to 0."""
    out = 1 + 0j
    for k in range(m):
        out *= x / (k + 1)
    return out


def _hyper_series(num, den, x):
    x = complex(x)
    num = [complex(a) for a in num]
    den = [complex(c) for c in den]
    scale = max([abs(p) for p in num + den] + [1.0])
    term = 1 + 0j
    total = 1 + 0j
    for k in range(MAX_TERMS):
        ratio = x / (k + 1)
        for a in num:
            ratio *= a + k
        for c in den:
            ratio /= c + k
        if ratio == 0:
            return total
        term *= ratio
        total += term
        # past the hump the terms fall off like |ratio|**k
        q = abs(ratio)
        if k > scale and q < 1 and abs(term) / (1 - q) <= SERIES_TOL * abs(total):
            return total
    raise ArithmeticError("hypergeometric series did not converge")


def hyp1f1(a, c, x) -> complex:
    """Confluent hypergeometric ``1F1(a; c; x) = sum (a)_k x**k / ((c)_k k!)``."""
    if _is_nonpositive_int(c):
        raise ValueError(f"1F1 undefined for c = {c}")
    return _hyper_series([a], [c], x)


def hyp2f1(a, b, c, x) -> complex:
    """Gauss hypergeometric ``2F1(a, b; c; x)`` by its power series.

    For ``|x| >= 0.8`` the series is taken at ``x/(x-1)`` after the Pfaff
    transformation ``F(a,b;c;x) = (1-x)**-a F(a, c-b; c; x/(x-1))``.
    """
    if _is_nonpositive_int(c):
        raise ValueError(f"2F1 undefined for c = {c}")
    x = complex(x)
    if _is_nonpositive_int(a) or _is_nonpositive_int(b):
        return _hyper_series([a, b], [c], x)
    if abs(x) >= 0.8:
        y = x / (x - 1)
        if abs(y) < abs(x) and abs(y) < 1:
            return (1 - x) ** (-a) * _hyper_series([a, c - b], [c], y)
    if abs(x) >= 1:
        raise ValueError(f"2F1 series does not converge at x = {x}")
    return _hyper_series([a, b], [c], x)


def _bessel_power_series(nmax: int, x: complex) -> np.ndarray:
    out = np.zeros(nmax + 1, dtype=complex)
    q = -x * x / 4
    lead = 1 + 0j  # (x/2)**n / n!
    for n in range(nmax + 1):
        if n:
            lead *= x / 2 / n
        term, total = lead, lead
        for m in range(1, 200):
            term *= q / (m * (m + n))
            total += term
            if abs(term) <= 1e-17 * abs(total):
                break
        out[n] = total
    return out


def _bessel_miller(nmax: int, x: complex) -> np.ndarray:
    big = max(nmax, abs(x))
    start = 2 * ((int(big) + 20 + int(math.sqrt(40 * big))) // 2)
    out = np.zeros(nmax + 1, dtype=complex)
    j_next, j_cur = 0j, 1e-30 + 0j
    norm = 0j
    for k in range(start, 0, -1):
        j_prev = 2 * k / x * j_cur - j_next
        j_next, j_cur = j_cur, j_prev
        # j_cur now holds J_{k-1} up to scale
        if k - 1 <= nmax:
            out[k - 1] = j_cur
        if (k - 1) % 2 == 0 and k - 1 > 0:
            norm += 2 * j_cur
        if abs(j_cur) > 1e250:
            j_cur, j_next, norm = j_cur * 1e-250, j_next * 1e-250, norm * 1e-250
            out *= 1e-250
    norm += j_cur
    return out / norm


def bessel_j_array(nmax: int, x) -> np.ndarray:
    """``[J_0(x), ..., J_nmax(x)]`` for integer orders.

    Power series for ``|x| <= 1``, otherwise Miller's downward recurrence
    normalized by ``J_0 + 2 sum_k J_{2k} = 1``.
    """
    x = complex(x)
    if x == 0:
        out = np.zeros(nmax + 1, dtype=complex)
        out[0] = 1
        return out
    if abs(x) <= 1:
        return _bessel_power_series(nmax, x)
    return _bessel_miller(nmax, x)


def bessel_j(n: int, x) -> complex:
    """Bessel function ``J_n(x)`` of integer order ``n >= 0``."""
    if n < 0:
        return (-1) ** n * bessel_j(-n, x)
    return complex(bessel_j_array(n, x)[n])


# single-contour coefficient integrals

def charlier_e_coeff(m: int, alpha, theta) -> complex:
    """``[zeta**m] (1 - theta zeta)**-alpha exp(-theta/zeta)`` for ``m >= 0``.

    Equals ``theta**m (alpha)_m / m! exp(-theta**2) 1F1(1-alpha; m+1; theta**2)``.
    """
    t2 = theta * theta
    return (theta ** m * rising_over_factorial(alpha, m)
            * cmath.exp(-t2) * hyp1f1(1 - alpha, m + 1, t2))


def charlier_f_coeff(m: int, beta, theta) -> complex:
    """``[eta**-m] (1 - theta eta)**beta exp(theta/eta)`` for ``m >= 0``.

    Equals ``theta**m / m! 1F1(-beta; m+1; theta**2)``.
    """
    return power_over_factorial(theta, m) * hyp1f1(-beta, m + 1, theta * theta)


def gauss_e_coeff(m: int, alpha, alpha2, xi) -> complex:
    """``[zeta**m] (1 - xi zeta)**-alpha (1 - xi/zeta)**alpha2`` for ``m >= 0``.

    Equals ``(alpha)_m / m! xi**m (1-xi**2)**alpha2 2F1(1-alpha, -alpha2; m+1; xi**2/(xi**2-1))``.
    """
    x = xi * xi / (xi * xi - 1)
    return (rising_over_factorial(alpha, m) * xi ** m
            * (1 - xi * xi) ** alpha2 * hyp2f1(1 - alpha, -alpha2, m + 1, x))


def gauss_f_coeff(m: int, beta, beta2, xi) -> complex:
    """``[eta**-m] (1 - xi eta)**beta (1 - xi/eta)**-beta2`` for ``m >= 0``.

    Equals ``(beta2)_m / m! xi**m (1-xi**2)**beta 2F1(-beta, 1-beta2; m+1; xi**2/(xi**2-1))``.
    """
    x = xi * xi / (xi * xi - 1)
    return (rising_over_factorial(beta2, m) * xi ** m
            * (1 - xi * xi) ** beta * hyp2f1(-beta, 1 - beta2, m + 1, x))


def _diagonal(rows, products):
    """``K(i, i) = sum_{m > i} p_m`` with ``p_m`` generated until negligible."""
    top = int(max(rows))
    p = [0j]
    m = 0
    quiet = 0
    while True:
        m += 1
        p.append(products(m))
        if m > top + 1:
            tail = abs(sum(p[top + 1:]))
            quiet = quiet + 1 if abs(p[-1]) <= 1e-17 * tail + 1e-300 else 0
            if quiet >= 4:
                break
        if m > MAX_TERMS:
            raise ArithmeticError("diagonal series did not converge")
    suffix = np.cumsum(np.array(p[::-1]))[::-1]
    # suffix[i + 1] = sum_{m >= i + 1} p_m
    return {int(i): complex(suffix[i + 1]) for i in rows}


def _assemble(rows, cols, off, diag):
    rows, cols = np.asarray(rows), np.asarray(cols)
    out = np.zeros((len(rows), len(cols)), dtype=complex)
    d = None
    for a, i in enumerate(rows):
        for b, j in enumerate(cols):
            if i != j:
                out[a, b] = off(int(i), int(j))
            else:
                if d is None:
                    d = diag(sorted({int(r) for r in rows if r in set(cols.tolist())}))
                out[a, b] = d[int(i)]
    return out


def bessel_kernel_block(rows, cols, theta) -> np.ndarray:
    """``theta (J_i J_{j+1} - J_{i+1} J_j) / (i - j)`` at argument ``2 theta``."""
    rows, cols = np.asarray(rows), np.asarray(cols)
    top = int(max(rows.max(initial=0), cols.max(initial=0)))
    x = 2 * complex(theta)
    J = bessel_j_array(top + 2, x)

    def off(i, j):
        return theta * (J[i] * J[j + 1] - J[i + 1] * J[j]) / (i - j)

    def diag(idx):
        cache = {}

        def sq(m):
            if m not in cache:
                nonlocal J
                if m >= len(J):
                    J = bessel_j_array(2 * m, x)
                cache[m] = J[m] * J[m]
            return cache[m]
        return _diagonal(idx, sq)

    return _assemble(rows, cols, off, diag)


def charlier_kernel_block(rows, cols, kappa, theta, theta_weight: bool = True) -> np.ndarray:
    """Charlier-type kernel of ``(1 + theta zeta)**kappa exp(theta/zeta)``.

    ``(i-j) K = theta**(i+j+2) (kappa)_{i+1} e**-theta**2 [a_i b_j - b_i a_j]`` with
    ``a_i = 1F1(-kappa; i+1; theta**2)/i!`` and
    ``b_i = 1F1(1-kappa; i+2; theta**2)/(i+1)!``.  ``theta_weight=False`` drops
    the ``theta**(i+j+2)`` factor (only useful for comparing against that
    reading of the formula).
    """
    kappa, theta = complex(kappa), complex(theta)
    if not abs(theta) < 1:
        raise DomainError("charlier kernel requires |theta| < 1")
    t2 = theta * theta
    damp = cmath.exp(-t2)
    a, b = {}, {}

    # w_i = theta**(i+1) (kappa)_{i+1} / i!,  u_i = theta**(i+1) / i!
    def ab(i):
        if i not in a:
            w = kappa * theta * rising_over_factorial(kappa + 1, i) * theta ** i
            u = theta * power_over_factorial(theta, i)
            phi0 = hyp1f1(-kappa, i + 1, t2)
            phi1 = hyp1f1(1 - kappa, i + 2, t2)
            a[i] = (w * phi0, w * phi1 / (i + 1))
            b[i] = (u * phi0, u * phi1 / (i + 1))
        return a[i], b[i]

    def off(i, j):
        (wa, wb), _ = ab(i)
        _, (ua, ub) = ab(j)
        val = damp * (wa * ub - wb * ua) / (i - j)
        return val if theta_weight else val / theta ** (i + j + 2)

    def diag(idx):
        return _diagonal(idx, lambda m: charlier_e_coeff(m, kappa, theta)
                         * charlier_f_coeff(m, kappa, theta))

    return _assemble(rows, cols, off, diag)


def hypergeom_kernel_block(rows, cols, z, zprime, xi, last_denominator: str = "i+1") -> np.ndarray:
    """Hypergeometric kernel of ``(1 + xi zeta)**z (1 + xi/zeta)**z'``.

    With ``x = xi**2/(xi**2-1)`` and ``P = (z)_{i+1} (z')_{j+1} / (i! j!)
    xi**(i+j+2) (1-xi**2)**(z+z'-1)``::

        (i-j) K = P [F(-z,-z';i+1;x) F(1-z,1-z';j+2;x)/(j+1)
                     - F(1-z,1-z';i+2;x)/(i+1) F(-z,-z';j+1;x)]

    ``last_denominator="i+2"`` swaps the ``1/(i+1)`` for ``1/(i+2)``; that
    variant does not reproduce the kernel and exists for comparison only.
    """
    z, zp, xi = complex(z), complex(zprime), complex(xi)
    if not abs(xi) < 1:
        raise DomainError("hypergeometric kernel requires |xi| < 1")
    if last_denominator not in ("i+1", "i+2"):
        raise ValueError("last_denominator must be 'i+1' or 'i+2'")
    shift = 1 if last_denominator == "i+1" else 2
    x = xi * xi / (xi * xi - 1)
    prefactor_base = (1 - xi * xi) ** (z + zp - 1)
    f0, f1, g = {}, {}, {}

    def ff(i):
        if i not in f0:
            f0[i] = hyp2f1(-z, -zp, i + 1, x)
            f1[i] = hyp2f1(1 - z, 1 - zp, i + 2, x)
            # xi**(i+1) (z)_{i+1} / i!  and the same with z'
            g[i] = (z * xi * rising_over_factorial(z + 1, i) * xi ** i,
                    zp * xi * rising_over_factorial(zp + 1, i) * xi ** i)
        return f0[i], f1[i]

    def off(i, j):
        a_i, b_i = ff(i)
        a_j, b_j = ff(j)
        pref = g[i][0] * g[j][1] * prefactor_base / (i - j)
        return pref * (a_i * b_j / (j + 1) - b_i / (i + shift) * a_j)

    def diag(idx):
        return _diagonal(idx, lambda m: gauss_e_coeff(m, z, zp, xi) * gauss_f_coeff(m, z, zp, xi))

    return _assemble(rows, cols, off, diag)


def bessel_kernel(i: int, j: int, theta) -> complex:
    return complex(bessel_kernel_block([i], [j], theta)[0, 0])


def charlier_kernel(i: int, j: int, kappa, theta) -> complex:
    return complex(charlier_kernel_block([i], [j], kappa, theta)[0, 0])


def hypergeom_kernel(i: int, j: int, z, zprime, xi) -> complex:
    return complex(hypergeom_kernel_block([i], [j], z, zprime, xi)[0, 0])


def closed_form_block_fn(name: str, params: dict):
    if name == "bessel":
        return lambda r, c: bessel_kernel_block(r, c, params["theta"])
    if name == "charlier":
        return lambda r, c: charlier_kernel_block(r, c, params["kappa"], params["theta"])
    if name == "hypergeometric":
        return lambda r, c: hypergeom_kernel_block(r, c, params["z"], params["zprime"], params["xi"])
    raise ValueError(f"no closed-form kernel for {name!r}")


def closed_form_kernel(s: SymbolSpec) -> KernelSource:
    """Kernel source for a preset symbol, from its closed form."""
    if s.preset is None:
        raise ValueError("closed-form kernels exist only for preset symbols")
    name, params = s.preset
    return KernelSource("closed-form", closed_form_block_fn(name, params), select_radius(s), symbol=s)


def formula_readings(s: SymbolSpec, size: int = 8) -> dict:
    """Max deviation from the series kernel of each reading of the closed form.

    For the hypergeometric family the two readings differ in the last
    denominator (``i+1`` or ``i+2``); for the Charlier family in whether the
    ``theta**(i+j+2)`` weight is present.  Returns ``{reading: deviation}``
    plus the name of the reading that matches.
    """
    from .kernels import series_kernel

    if s.preset is None:
        return {}
    name, p = s.preset
    idx = np.arange(size)
    ref = series_kernel(s).block(0, size)
    if name == "hypergeometric":
        dev = {r: float(np.abs(hypergeom_kernel_block(idx, idx, p["z"], p["zprime"], p["xi"], r)
                               - ref).max()) for r in ("i+1", "i+2")}
    elif name == "charlier":
        dev = {label: float(np.abs(charlier_kernel_block(idx, idx, p["kappa"], p["theta"], w)
                                   - ref).max())
               for label, w in (("with theta**(i+j+2)", True), ("without theta**(i+j+2)", False))}
    else:
        dev = {"standard": float(np.abs(bessel_kernel_block(idx, idx, p["theta"]) - ref).max())}
    return {"deviation": dev, "selected": min(dev, key=dev.get)}
