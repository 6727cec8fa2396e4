"""Symbols ``phi = exp(V)`` given by the Laurent coefficients of ``V``."""
from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field


from .series import LaurentSeries, full_exp

#: log-series coefficients smaller than this are dropped from presets
LOG_TRUNCATION = 1e-18

PRESETS = ("bessel", "charlier", "hypergeometric")


class DomainError(ValueError):
    """Parameters outside the region where the symbol is analytic near |zeta|=1."""


@dataclass(frozen=True)
class SymbolSpec:
    """``V(zeta) = sum_k vplus[k] zeta**k + sum_k vminus[k] zeta**-k`` (k >= 1).

    ``r`` is the outer radius of an annulus ``1/r < |zeta| < r`` on which the
    series converges; ``math.inf`` marks a Laurent polynomial.  ``preset``
    remembers ``(name, params)`` for symbols built by :func:`preset`.
    """

    vplus: dict = field(default_factory=dict)
    vminus: dict = field(default_factory=dict)
    r: float = math.inf
    preset: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        for name in ("vplus", "vminus"):
            d = {int(k): complex(v) for k, v in getattr(self, name).items() if v != 0}
            if any(k < 1 for k in d):
                raise ValueError(f"{name} indices must be >= 1 (V has no constant term)")
            object.__setattr__(self, name, dict(sorted(d.items())))
        if not self.r > 1:
            raise ValueError("annulus radius r must exceed 1")

    @property
    def entire(self) -> bool:
        return math.isinf(self.r)

    @property
    def is_zero(self) -> bool:
        return not self.vplus and not self.vminus

    def laurent(self) -> LaurentSeries:
        d = dict(self.vplus)
        d.update({-k: v for k, v in self.vminus.items()})
        return LaurentSeries.from_dict(d)

    def __call__(self, zeta):
        return self.laurent()(zeta)

    def to_json(self) -> dict:
        def pairs(d):
            return [[k, v.real, v.imag] for k, v in d.items()]
        return {"vplus": pairs(self.vplus), "vminus": pairs(self.vminus),
                "r": "entire" if self.entire else self.r}


def v_star(s: SymbolSpec) -> SymbolSpec:
    """``V*(zeta) = V^-(-zeta) - V^+(-zeta)``.

    The coefficient of ``zeta**k`` becomes ``-(-1)**k v_k^+`` and that of
    ``zeta**-k`` becomes ``(-1)**k v_k^-``.  Applying it twice gives back ``s``.
    """
    vp = {k: -((-1) ** k) * v for k, v in s.vplus.items()}
    vm = {k: ((-1) ** k) * v for k, v in s.vminus.items()}
    return SymbolSpec(vp, vm, s.r)


def phi_coeffs(s: SymbolSpec, window=None) -> LaurentSeries:
    """Fourier coefficients ``phi_k = [zeta**k] exp(V(zeta))``."""
    return full_exp(s.laurent(), window)


def szego_constant(s: SymbolSpec) -> complex:
    """``Z = exp(sum_k k v_k^+ v_k^-)``."""
    return cmath.exp(sum(k * v * s.vminus[k] for k, v in s.vplus.items() if k in s.vminus))


def log1p_coeffs(c, x) -> dict:
    """Coefficients ``c (-1)**(k+1) x**k / k`` of ``c log(1 + x w)``, truncated."""
    c, x = complex(c), complex(x)
    out = {}
    if c == 0 or x == 0:
        return out
    k = 1
    while True:
        v = c * (-1) ** (k + 1) * x ** k / k
        if abs(v) < LOG_TRUNCATION:
            return out
        out[k] = v
        k += 1


def preset(name: str, **params) -> SymbolSpec:
    """Symbols with closed-form kernels.

    ``bessel(theta)``
        ``exp(theta (zeta + 1/zeta))``
    ``charlier(kappa, theta)``
        ``(1 + theta zeta)**kappa exp(theta / zeta)``, needs ``|theta| < 1``
    ``hypergeometric(z, zprime, xi)``
        ``(1 + xi zeta)**z (1 + xi / zeta)**zprime``, needs ``|xi| < 1``
    """
    if name == "bessel":
        theta = complex(params["theta"])
        if theta == 0:
            raise DomainError("bessel preset requires theta != 0")
        return SymbolSpec({1: theta}, {1: theta}, math.inf, ("bessel", {"theta": theta}))
    if name == "charlier":
        kappa, theta = complex(params["kappa"]), complex(params["theta"])
        if not abs(theta) < 1:
            raise DomainError("charlier preset requires |theta| < 1")
        vp = log1p_coeffs(kappa, theta)
        r = math.inf if not vp else 1 / abs(theta)
        return SymbolSpec(vp, {1: theta}, r, ("charlier", {"kappa": kappa, "theta": theta}))
    if name == "hypergeometric":
        z, zp, xi = complex(params["z"]), complex(params["zprime"]), complex(params["xi"])
        if not abs(xi) < 1:
            raise DomainError("hypergeometric preset requires |xi| < 1")
        vp, vm = log1p_coeffs(z, xi), log1p_coeffs(zp, xi)
        r = math.inf if not (vp or vm) else 1 / abs(xi)
        return SymbolSpec(vp, vm, r, ("hypergeometric", {"z": z, "zprime": zp, "xi": xi}))
    raise ValueError(f"unknown preset {name!r}; expected one of {PRESETS}")


def _num(v):
    if isinstance(v, (list, tuple)):
        return complex(v[0], v[1])
    return complex(v) if isinstance(v, complex) else v


def symbol_from_json(obj) -> SymbolSpec:
    """Parse either the coefficient form or the ``{"preset": ...}`` shorthand."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if "preset" in obj:
        params = {k: _num(v) for k, v in obj.items() if k != "preset"}
        return preset(obj["preset"], **params)
    def parse(rows):
        return {int(row[0]): complex(row[1], row[2] if len(row) > 2 else 0.0) for row in rows}
    r = obj.get("r", "entire")
    r = math.inf if r == "entire" else float(r)
    return SymbolSpec(parse(obj.get("vplus", [])), parse(obj.get("vminus", [])), r)


def symbol_from_laurent(v: LaurentSeries, r: float = math.inf, tol: float = LOG_TRUNCATION):
    """Split a Laurent series for ``V`` into a symbol and its constant term.

    Returns ``(spec, c0)`` with ``V = c0 + V_spec``; coefficients below ``tol``
    are dropped.
    """
    d = {k: c for k, c in v.to_dict().items() if abs(c) >= tol}
    c0 = complex(d.pop(0, 0))
    vp = {k: c for k, c in d.items() if k > 0}
    vm = {-k: c for k, c in d.items() if k < 0}
    return SymbolSpec(vp, vm, r), c0
