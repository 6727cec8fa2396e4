"""Truncated polynomials in ``v_k^+, v_k^-`` with exact rational coefficients.

The grading is ``deg v_k^{+-} = k``; a :class:`GradedPoly` with truncation
degree ``d`` keeps only monomials of degree ``<= d``.  Monomials are dense
exponent tuples ``(e_1^+, e_1^-, e_2^+, e_2^-, ..., e_d^+, e_d^-)``; variables
with ``k > d`` cannot appear below the truncation and are never stored.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

SIGNS = {"+": 0, "-": 1}


@lru_cache(maxsize=None)
def _weights(d: int) -> tuple:
    return tuple(k for k in range(1, d + 1) for _ in (0, 1))


def _degree(mono: tuple) -> int:
    return sum(w * e for w, e in zip(_weights(len(mono) // 2), mono))


class GradedPoly:
    """Element of the graded algebra truncated at degree ``d``."""

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms=None):
        if d < 0:
            raise ValueError("truncation degree must be >= 0")
        self.d = d
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                if c != 0 and _degree(mono) <= d:
                    self.terms[mono] = Fraction(c)

    # constructors

    @classmethod
    def const(cls, c, d: int) -> "GradedPoly":
        return cls(d, {(0,) * (2 * d): c})

    @classmethod
    def var(cls, k: int, sign: str, d: int) -> "GradedPoly":
        """The variable ``v_k^sign``; zero when ``k > d``."""
        if k < 1:
            raise ValueError("variables are indexed by k >= 1")
        if k > d:
            return cls(d)
        mono = [0] * (2 * d)
        mono[2 * (k - 1) + SIGNS[sign]] = 1
        return cls(d, {tuple(mono): 1})

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def min_degree(self) -> float:
        """Smallest degree of a stored term (``inf`` for zero)."""
        return min((_degree(m) for m in self.terms), default=float("inf"))

    def constant(self) -> Fraction:
        return self.terms.get((0,) * (2 * self.d), Fraction(0))

    def homogeneous(self, deg: int) -> "GradedPoly":
        return GradedPoly(self.d, {m: c for m, c in self.terms.items() if _degree(m) == deg})

    def by_degree(self):
        groups = defaultdict(list)
        for m, c in self.terms.items():
            groups[_degree(m)].append((m, c))
        return groups

    # arithmetic

    def _coerce(self, other) -> "GradedPoly":
        if isinstance(other, GradedPoly):
            if other.d != self.d:
                raise ValueError(f"truncation degrees differ: {self.d} vs {other.d}")
            return other
        if isinstance(other, (int, Rational)):
            return GradedPoly.const(other, self.d)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        res = GradedPoly(self.d)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = GradedPoly(self.d)
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                return GradedPoly(self.d)
            res = GradedPoly(self.d)
            res.terms = {m: c * other for m, c in self.terms.items()}
            return res
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self.d
        out = defaultdict(Fraction)
        mine, theirs = self.by_degree(), other.by_degree()
        for d1, terms1 in mine.items():
            for d2, terms2 in theirs.items():
                if d1 + d2 > d:
                    continue
                for m1, c1 in terms1:
                    for m2, c2 in terms2:
                        out[tuple(a + b for a, b in zip(m1, m2))] += c1 * c2
        res = GradedPoly(d)
        res.terms = {m: c for m, c in out.items() if c}
        return res

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Rational)) or other == 0:
            raise TypeError("division only by nonzero rationals")
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, e: int):
        out = GradedPoly.const(1, self.d)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = GradedPoly.const(other, self.d)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.d == other.d and self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def truncate(self, d: int) -> "GradedPoly":
        """Re-truncate at a lower degree ``d <= self.d``."""
        if d > self.d:
            raise ValueError("can only lower the truncation degree")
        return GradedPoly(d, {m[: 2 * d]: c for m, c in self.terms.items()
                              if _degree(m) <= d})

    # evaluation

    def evaluate(self, vplus=None, vminus=None) -> complex:
        """Substitute numbers ``vplus[k]``, ``vminus[k]`` (missing ones are 0)."""
        vplus, vminus = vplus or {}, vminus or {}
        vals = []
        for k in range(1, self.d + 1):
            vals.append(complex(vplus.get(k, 0)))
            vals.append(complex(vminus.get(k, 0)))
        total = 0j
        for m, c in self.terms.items():
            p = complex(c)
            for v, e in zip(vals, m):
                if e:
                    p *= v ** e
            total += p
        return total

    def substitute(self, images) -> "GradedPoly":
        """Replace ``v_k^s`` by ``images[(k, s)]`` (graded, min degree >= k).

        Variables missing from ``images`` are left alone.
        """
        d = self.d
        slots = []
        for k in range(1, d + 1):
            for s in "+-":
                slots.append(images.get((k, s), GradedPoly.var(k, s, d)))
        powers = {}

        def power(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = slots[i] if e == 1 else power(i, e - 1) * slots[i]
            return powers[key]

        out = GradedPoly(d)
        for m, c in self.terms.items():
            p = GradedPoly.const(c, d)
            for i, e in enumerate(m):
                if e:
                    p = p * power(i, e)
            out = out + p
        return out

    # display

    @staticmethod
    def monomial_str(mono: tuple) -> str:
        parts = []
        for i, e in enumerate(mono):
            if e:
                name = f"v{i // 2 + 1}{'+-'[i % 2]}"
                parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) or "1"

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: (_degree(mc[0]), mc[0]))

    def __repr__(self):
        if not self.terms:
            return f"GradedPoly(d={self.d}, 0)"
        body = " + ".join(f"{c}*{self.monomial_str(m)}" for m, c in self.sorted_terms())
        return f"GradedPoly(d={self.d}, {body})"


def gp_mul(a: GradedPoly, b: GradedPoly) -> GradedPoly:
    return a * b


def gp_exp(a: GradedPoly) -> GradedPoly:
    """``sum_m a**m / m!``, finite because ``a`` has no constant term."""
    if a.constant() != 0:
        raise ValueError("gp_exp needs an argument with zero constant term")
    out = GradedPoly.const(1, a.d)
    term = GradedPoly.const(1, a.d)
    for m in range(1, a.d + 1):
        term = term * a / m
        if term.is_zero():
            break
        out = out + term
    return out
