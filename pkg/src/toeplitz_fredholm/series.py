"""Laurent and one-sided power series on finite index windows.

A :class:`LaurentSeries` stores the coefficients of ``zeta**lo`` through
``zeta**hi`` in a contiguous array.  Indices outside the window are read as
exact zeros.  Coefficient arrays are complex in floating mode; an ``object``
array (holding :class:`fractions.Fraction` or graded polynomials) selects the
exact mode, where nothing is rounded.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: relative magnitude below which trailing coefficients count as negligible
TOL_COEFF = 1e-16
MAX_CUTOFF = 1 << 14


class QuadratureError(ArithmeticError):
    """Raised when the integrand cannot be evaluated on the requested circle."""

    def __init__(self, radius, msg="non-finite integrand values"):
        super().__init__(f"{msg} on |zeta| = {radius!r}")
        self.radius = radius


@dataclass(frozen=True)
class LaurentSeries:
    """Coefficients ``coeffs[m]`` of ``zeta**(lo + m)``."""

    lo: int
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs)
        if c.dtype != object:
            c = c.astype(complex)
        if c.ndim != 1:
            raise ValueError("coefficient array must be one-dimensional")
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "lo", int(self.lo))

    @classmethod
    def from_dict(cls, d, exact=False):
        """Build from a mapping ``index -> coefficient``."""
        if not d:
            return cls.zero(exact)
        lo, hi = min(d), max(d)
        if exact:
            c = np.array([0] * (hi - lo + 1), dtype=object)
        else:
            c = np.zeros(hi - lo + 1, dtype=complex)
        for k, v in d.items():
            c[k - lo] = v
        return cls(lo, c)

    @classmethod
    def zero(cls, exact=False):
        return cls(0, np.array([], dtype=object if exact else complex))

    @classmethod
    def one(cls, exact=False):
        return cls(0, np.array([1], dtype=object if exact else complex))

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    @property
    def exact(self) -> bool:
        return self.coeffs.dtype == object

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int):
        if self.lo <= k <= self.hi:
            return self.coeffs[k - self.lo]
        return 0 if self.exact else 0j

    def covers(self, lo: int, hi: int) -> bool:
        return len(self.coeffs) > 0 and self.lo <= lo and hi <= self.hi

    def window(self, lo: int, hi: int) -> "LaurentSeries":
        """Restrict (or zero-pad) to ``[lo, hi]``."""
        if hi < lo:
            return LaurentSeries.zero(self.exact)
        out = np.array([self[k] for k in range(lo, hi + 1)],
                       dtype=object if self.exact else complex)
        return LaurentSeries(lo, out)

    def to_dict(self):
        return {self.lo + m: c for m, c in enumerate(self.coeffs) if c != 0}

    def positive_part(self) -> "LaurentSeries":
        return self.window(max(1, self.lo), self.hi)

    def negative_part(self) -> "LaurentSeries":
        return self.window(self.lo, min(-1, self.hi))

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not len(other):
            return self
        if not len(self):
            return other
        lo, hi = min(self.lo, other.lo), max(self.hi, other.hi)
        a, b = self.window(lo, hi), other.window(lo, hi)
        return LaurentSeries(lo, a.coeffs + b.coeffs)

    def __neg__(self):
        return LaurentSeries(self.lo, -self.coeffs)

    def scale(self, c) -> "LaurentSeries":
        return LaurentSeries(self.lo, self.coeffs * c)

    def dilate(self, a) -> "LaurentSeries":
        """Coefficients of ``f(a*zeta)``: ``c_k -> a**k c_k``."""
        k = np.arange(self.lo, self.hi + 1)
        return LaurentSeries(self.lo, self.coeffs * np.power(complex(a), k))

    def __call__(self, zeta):
        """Evaluate the (finite) series at points ``zeta``."""
        zeta = np.asarray(zeta, dtype=complex)
        out = np.zeros_like(zeta)
        if not len(self.coeffs):
            return out
        pos = self.window(max(0, self.lo), self.hi)
        neg = self.window(self.lo, min(-1, self.hi))
        if len(pos):
            out += np.polynomial.polynomial.polyval(zeta, pos.window(0, pos.hi).coeffs)
        if len(neg):
            # coefficients of w = 1/zeta, starting at w**1
            c = np.concatenate([[0], neg.coeffs[::-1]])
            out += np.polynomial.polynomial.polyval(1 / zeta, c)
        return out


def laurent_mul(a: LaurentSeries, b: LaurentSeries, window=None) -> LaurentSeries:
    """Product of two finite series, optionally restricted to ``window=(lo, hi)``."""
    exact = a.exact or b.exact
    if not len(a) or not len(b):
        prod = LaurentSeries.zero(exact)
    else:
        prod = LaurentSeries(a.lo + b.lo, np.convolve(a.coeffs, b.coeffs))
    if window is None:
        return prod
    return prod.window(*window)


def _sidedness(a: LaurentSeries) -> int:
    nz = [k for k, c in a.to_dict().items()]
    if not nz:
        return 0
    if min(nz) >= 1:
        return 1
    if max(nz) <= -1:
        return -1
    raise ValueError("onesided_exp needs a strictly one-sided series; "
                     "split it and multiply the exponentials")


def onesided_exp(a: LaurentSeries, cutoff: int) -> LaurentSeries:
    """Coefficients of ``exp(a)`` on ``0..cutoff`` (or ``-cutoff..0``).

    Uses ``b_0 = 1`` and ``m b_m = sum_k k a_k b_{m-k}``, which only needs
    ring operations and division by integers, so exact coefficient types stay
    exact.
    """
    side = _sidedness(a)
    exact = a.exact
    if side == 0:
        return LaurentSeries.one(exact)
    # work with the positive-index image w = zeta**side
    deg = a.hi if side > 0 else -a.lo
    ak = [a[side * k] for k in range(deg + 1)]
    if exact:
        b = [0] * (cutoff + 1)
        b[0] = 1
        for m in range(1, cutoff + 1):
            s = 0
            for k in range(1, min(m, deg) + 1):
                if ak[k] != 0 and b[m - k] != 0:
                    s = s + (k * ak[k]) * b[m - k]
            b[m] = s / m if s != 0 else 0
        b = np.array(b, dtype=object)
    else:
        kak = np.arange(deg + 1) * np.asarray(ak, dtype=complex)
        b = np.zeros(cutoff + 1, dtype=complex)
        b[0] = 1.0
        for m in range(1, cutoff + 1):
            kmax = min(m, deg)
            b[m] = np.dot(kak[1:kmax + 1], b[m - 1::-1][:kmax]) / m
    if side > 0:
        return LaurentSeries(0, b)
    return LaurentSeries(-cutoff, b[::-1].copy())


def _negligible_tail(c: np.ndarray, lag: int, tol: float) -> bool:
    mags = np.abs(c)
    top = mags.max()
    if top == 0:
        return True
    return mags[-lag:].max() <= tol * top


def auto_exp(a: LaurentSeries, tol: float = TOL_COEFF) -> LaurentSeries:
    """One-sided exponential with the cutoff grown until the tail is negligible."""
    side = _sidedness(a)
    if side == 0:
        return LaurentSeries.one(a.exact)
    deg = a.hi if side > 0 else -a.lo
    lag = max(4, 2 * deg)
    cutoff = max(16, 2 * lag)
    while cutoff <= MAX_CUTOFF:
        e = onesided_exp(a, cutoff)
        c = e.coeffs if side > 0 else e.coeffs[::-1]
        if _negligible_tail(c, lag, tol):
            keep = np.nonzero(np.abs(c) > 1e-3 * tol * np.abs(c).max())[0]
            last = int(keep[-1])
            return e.window(0, last) if side > 0 else e.window(-last, 0)
        cutoff *= 2
    raise ArithmeticError("exponential coefficients do not decay; "
                          "the series is outside its convergence domain")


def full_exp(a: LaurentSeries, window=None, tol: float = TOL_COEFF) -> LaurentSeries:
    """Coefficients of ``exp(a)`` for a two-sided finite series ``a``.

    The positive and negative parts are exponentiated separately (cutoffs
    chosen by coefficient decay) and multiplied.  Without ``window`` the whole
    product support is returned.
    """
    if a[0] != 0:
        raise ValueError("full_exp expects a series without constant term")
    pos = auto_exp(a.positive_part(), tol)
    neg = auto_exp(a.negative_part(), tol)
    return laurent_mul(pos, neg, window)


def grid_size(width: int, minimum: int = 64) -> int:
    """Smallest power of two ``>= max(minimum, 4 * width)``."""
    target = max(minimum, 4 * width)
    return 1 << int(np.ceil(np.log2(target)))


def coeff_extract_quadrature(f, radius: float, k_range, N: int | None = None) -> LaurentSeries:
    """Laurent coefficients ``(1/2 pi i) \\oint f(z) z**(-k-1) dz`` on ``|z| = radius``.

    The N-point trapezoid rule on the circle is an FFT; it is exact for
    band-limited integrands up to aliasing of indices ``k +- N``.
    """
    lo, hi = k_range
    if N is None:
        N = grid_size(hi - lo)
    # width counts the span hi - lo, so [0, 4] fits on 16 points
    if N & (N - 1) or N < 4 * (hi - lo):
        raise ValueError("N must be a power of two and at least 4 * (hi - lo)")
    zeta = radius * np.exp(2j * np.pi * np.arange(N) / N)
    with np.errstate(over="ignore", invalid="ignore"):
        vals = np.asarray(f(zeta), dtype=complex)
    if not np.all(np.isfinite(vals)):
        raise QuadratureError(radius)
    c = np.fft.fft(vals) / N
    k = np.arange(lo, hi + 1)
    return LaurentSeries(lo, c[k % N] * float(radius) ** (-k.astype(float)))
