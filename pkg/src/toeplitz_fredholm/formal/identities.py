"""Exact identities in the graded algebra, checked at a truncation degree ``d``.

All Laurent series here have graded-polynomial coefficients, and the
coefficient of ``zeta**k`` has degree ``>= |k|``, so only indices ``|k| <= d``
survive truncation.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ..series import LaurentSeries, laurent_mul, onesided_exp
from .graded import GradedPoly, gp_exp
from .linalg import gp_det
from .partitions import partitions_up_to, schur_poly

REPORT_SCHEMA = 1


@dataclass
class ExactReport:
    """Outcome of one exact check; ``difference`` is lhs - rhs (zero on success)."""

    check: str
    params: dict
    difference: GradedPoly
    lhs: GradedPoly | None = field(default=None, repr=False)
    rhs: GradedPoly | None = field(default=None, repr=False)

    @property
    def passed(self) -> bool:
        return self.difference.is_zero()

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_json(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "difference_terms": [
                {"monomial": GradedPoly.monomial_str(m), "coeff": str(c)}
                for m, c in self.difference.sorted_terms()
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


# formal Laurent series: dict index -> GradedPoly

def _as_series(coeffs: dict, d: int) -> LaurentSeries:
    if not coeffs:
        return LaurentSeries(0, np.array([GradedPoly(d)], dtype=object))
    lo, hi = min(coeffs), max(coeffs)
    arr = np.array([coeffs.get(k, GradedPoly(d)) for k in range(lo, hi + 1)], dtype=object)
    return LaurentSeries(lo, arr)


def _as_dict(s: LaurentSeries, d: int) -> dict:
    out = {}
    for m, c in enumerate(s.coeffs):
        k = s.lo + m
        if abs(k) > d:
            continue
        if not isinstance(c, GradedPoly):
            c = GradedPoly.const(c, d)
        if not c.is_zero():
            out[k] = c
    return out


def formal_exp(coeffs: dict, d: int) -> dict:
    """``exp`` of a formal Laurent series without constant term, as ``index -> coefficient``."""
    if 0 in coeffs and not coeffs[0].is_zero():
        raise ValueError("constant term must vanish")
    pos = {k: c for k, c in coeffs.items() if k > 0}
    neg = {k: c for k, c in coeffs.items() if k < 0}
    ep = onesided_exp(_as_series(pos, d), d) if pos else LaurentSeries.one(True)
    en = onesided_exp(_as_series(neg, d), d) if neg else LaurentSeries.one(True)
    return _as_dict(laurent_mul(ep, en), d)


def formal_mul(a: dict, b: dict, d: int) -> dict:
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            if abs(i + j) > d:
                continue
            p = x * y
            if not p.is_zero():
                out[i + j] = out[i + j] + p if i + j in out else p
    return {k: v for k, v in out.items() if not v.is_zero()}


def formal_v(d: int) -> dict:
    """``V(zeta)``: ``v_k^+`` at ``zeta**k`` and ``v_k^-`` at ``zeta**-k``."""
    out = {}
    for k in range(1, d + 1):
        out[k] = GradedPoly.var(k, "+", d)
        out[-k] = GradedPoly.var(k, "-", d)
    return out


def formal_v_star(d: int) -> dict:
    """``V*(zeta) = V^-(-zeta) - V^+(-zeta)``."""
    out = {}
    for k in range(1, d + 1):
        out[k] = GradedPoly.var(k, "+", d) * (-(-1) ** k)
        out[-k] = GradedPoly.var(k, "-", d) * ((-1) ** k)
    return out


@lru_cache(maxsize=None)
def _phi(d: int) -> dict:
    return formal_exp(formal_v(d), d)


@lru_cache(maxsize=None)
def _ef(d: int):
    vs = formal_v_star(d)
    return formal_exp(vs, d), formal_exp({k: -c for k, c in vs.items()}, d)


def exact_phi_coeff(k: int, d: int) -> GradedPoly:
    """``[zeta**k] exp(V(zeta))``, of degree ``>= |k|``."""
    c = _phi(d).get(k, GradedPoly(d))
    assert c.min_degree() >= abs(k)
    return c


def szego_poly(d: int) -> GradedPoly:
    """``Z = exp(sum_k k v_k^+ v_k^-)``."""
    s = GradedPoly(d)
    for k in range(1, d + 1):
        s = s + GradedPoly.var(k, "+", d) * GradedPoly.var(k, "-", d) * k
    return gp_exp(s)


def exact_kernel_entry(i: int, j: int, d: int) -> GradedPoly:
    """``K(i, j) = sum_{l >= 1} [zeta**(i+l)] exp(V*) [eta**-(j+l)] exp(-V*)``."""
    E, F = _ef(d)
    zero = GradedPoly(d)
    total = GradedPoly(d)
    # both factors vanish once |i+l| + |j+l| > d
    for l in range(1, 2 * d + abs(i) + abs(j) + 2):
        a, b = E.get(i + l, zero), F.get(-(j + l), zero)
        if not a.is_zero() and not b.is_zero():
            total = total + a * b
    if i >= 0 and j >= 0:
        assert total.min_degree() >= i + j + 2
    return total


def exact_toeplitz_det(n: int, d: int) -> GradedPoly:
    """``det(phi_{i-j})_{n x n}`` in the graded algebra."""
    mat = [[exact_phi_coeff(i - j, d) for j in range(n)] for i in range(n)]
    return gp_det(mat, d)


def admissible_sets(n: int, d: int):
    """Index sets ``n <= l_1 < ... < l_m`` with ``sum (2 l_a + 2) <= d``.

    Every other set contributes a minor of degree ``> d``.
    """
    top = (d - 2) // 2
    pool = range(n, top + 1)
    for m in range(1, len(pool) + 1):
        found = False
        for sub in itertools.combinations(pool, m):
            if sum(2 * l + 2 for l in sub) <= d:
                found = True
                yield sub
        if not found:
            return


def kernel_minor(points, d: int) -> GradedPoly:
    mat = [[exact_kernel_entry(x, y, d) for y in points] for x in points]
    return gp_det(mat, d)


def exact_fredholm(n: int, d: int) -> GradedPoly:
    """``sum_m (-1)**m sum_{n <= l_1 < ... < l_m} det K(l_a, l_b)`` at truncation ``d``."""
    total = GradedPoly.const(1, d)
    for sub in admissible_sets(n, d):
        minor = kernel_minor(sub, d)
        total = total + minor if len(sub) % 2 == 0 else total - minor
    return total


def exact_verify(n: int, d: int) -> ExactReport:
    """``D_n = Z det(1 - K)`` on ``l2({n, ...})`` as an identity of truncated series."""
    lhs = exact_toeplitz_det(n, d)
    rhs = szego_poly(d) * exact_fredholm(n, d)
    return ExactReport("toeplitz_fredholm", {"n": n, "d": d}, lhs - rhs, lhs, rhs)


def schur_pair_sum(d: int, keep) -> GradedPoly:
    """``sum s_lambda(t^+) s_lambda(t^-)`` over ``|lambda| <= d/2`` with ``keep(lambda)``."""
    total = GradedPoly(d)
    for lam in partitions_up_to(d // 2):
        if keep(lam):
            total = total + schur_poly(lam, "+", d) * schur_poly(lam, "-", d)
    return total


def gessel_check(n: int, d: int) -> ExactReport:
    """Column-bounded Schur sum (``lambda_1 <= n``) against ``D_n``."""
    lhs = schur_pair_sum(d, lambda lam: lam.first <= n)
    rhs = exact_toeplitz_det(n, d)
    return ExactReport("gessel", {"n": n, "d": d}, lhs - rhs, lhs, rhs)


def correlation_check(X, d: int) -> ExactReport:
    """``sum_{X subset S(lambda)} s_lambda s_lambda = Z det[K(x, y)]_{x, y in X}``."""
    X = tuple(sorted(set(int(x) for x in X)))
    lhs = schur_pair_sum(d, lambda lam: all(lam.contains(x) for x in X))
    rhs = szego_poly(d) * kernel_minor(X, d)
    return ExactReport("correlation", {"X": list(X), "d": d}, lhs - rhs, lhs, rhs)


def inclusion_exclusion_check(n: int, d: int) -> ExactReport:
    """Partitions with ``S(lambda)`` avoiding ``{n, n+1, ...}`` against ``Z det(1-K)``."""
    lhs = schur_pair_sum(d, lambda lam: lam.avoids_from(n))
    rhs = szego_poly(d) * exact_fredholm(n, d)
    return ExactReport("inclusion_exclusion", {"n": n, "d": d}, lhs - rhs, lhs, rhs)


def szego_check(n: int, d: int) -> ExactReport:
    """``D_n = Z`` exactly once ``2n + 2 > d``."""
    lhs = exact_toeplitz_det(n, d)
    rhs = szego_poly(d)
    return ExactReport("szego", {"n": n, "d": d}, lhs - rhs, lhs, rhs)


def local_perturbation(n: int, d: int, u: GradedPoly | None = None):
    """Images of the ``v`` variables after ``phi -> phi + u zeta**n``.

    Returns ``(images, c)`` where ``images[(k, s)]`` are the coefficients of
    the new ``V`` and ``c`` is its constant term, so that
    ``phi + u zeta**n = exp(c) exp(V_new)``.  ``u`` defaults to ``v_n^+``.
    """
    if u is None:
        u = GradedPoly.var(n, "+", d)
    neg_v = {k: -c for k, c in formal_v(d).items()}
    g = formal_mul({n: u}, formal_exp(neg_v, d), d)
    # log(1 + g) = sum_m (-1)**(m+1) g**m / m; g has degree >= n
    log = {}
    power = {0: GradedPoly.const(1, d)}
    for m in range(1, d // max(n, 1) + 2):
        power = formal_mul(power, g, d)
        if not power:
            break
        for k, c in power.items():
            term = c * (-1) ** (m + 1) / m
            log[k] = log[k] + term if k in log else term
    new_v = formal_v(d)
    for k, c in log.items():
        new_v[k] = new_v[k] + c if k in new_v else c
    c0 = new_v.pop(0, GradedPoly(d))
    images = {}
    for k in range(1, d + 1):
        images[(k, "+")] = new_v.get(k, GradedPoly(d))
        images[(k, "-")] = new_v.get(-k, GradedPoly(d))
        assert images[(k, "+")].min_degree() >= k and images[(k, "-")].min_degree() >= k
    return images, c0


def locality_check(n: int, d: int):
    """Both sides of the identity are unchanged by a perturbation living at ``|k| >= n``.

    Returns two reports, one for ``D_n`` and one for ``Z det(1 - K)``.
    """
    images, c0 = local_perturbation(n, d)
    rescale = gp_exp(c0 * n)
    lhs0 = exact_toeplitz_det(n, d)
    rhs0 = szego_poly(d) * exact_fredholm(n, d)
    lhs1 = rescale * lhs0.substitute(images)
    rhs1 = rescale * rhs0.substitute(images)
    params = {"n": n, "d": d}
    return (ExactReport("locality_toeplitz", params, lhs1 - lhs0, lhs1, lhs0),
            ExactReport("locality_fredholm", params, rhs1 - rhs0, rhs1, rhs0))
