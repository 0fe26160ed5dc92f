"""Dual numbers, order-2 jets, and dual 4-vectors.

A dual number a + eps*a' has eps*eps == 0, which makes multiplication carry
first derivatives.  A :class:`Jet2` carries value, first and second
derivative through the same elementary operations, so a curve evaluated on
jets yields exact derivatives with no finite differencing.

The derivative slot of every operation here is written with the identical
expression shape in Dual and Jet2 (same operands, same order), so evaluating
one expression both ways produces bit-identical first derivatives.  Tests
rely on that equality being exact, not approximate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import DomainError
from .lorentz import Vec4, cross4, euclid_dot, lorentz_dot

__all__ = [
    "Dual",
    "Jet2",
    "DualVec4",
    "DualVectorAlgebra",
    "dual_arith",
    "dual_vector_algebra",
    "UNIT_SPHERE_TOL",
]

UNIT_SPHERE_TOL = 1e-9


@dataclass(frozen=True)
class Dual:
    """a + eps*a' with eps nilpotent of order two."""

    re: float
    eps: float

    def __post_init__(self):
        object.__setattr__(self, "re", float(self.re))
        object.__setattr__(self, "eps", float(self.eps))

    def __add__(self, other: "Dual") -> "Dual":
        return Dual(self.re + other.re, self.eps + other.eps)

    def __sub__(self, other: "Dual") -> "Dual":
        return Dual(self.re - other.re, self.eps - other.eps)

    def __neg__(self) -> "Dual":
        return Dual(-self.re, -self.eps)

    def __mul__(self, other: "Dual") -> "Dual":
        return Dual(self.re * other.re,
                    self.eps * other.re + self.re * other.eps)

    def __truediv__(self, other: "Dual") -> "Dual":
        if other.re == 0.0:
            raise DomainError("division by a dual number with zero real part")
        q = self.re / other.re
        return Dual(q, (self.eps - q * other.eps) / other.re)


@dataclass(frozen=True)
class Jet2:
    """Truncated Taylor data (f, f', f'') of a scalar function at a point."""

    f: float
    d1: float
    d2: float

    def __post_init__(self):
        object.__setattr__(self, "f", float(self.f))
        object.__setattr__(self, "d1", float(self.d1))
        object.__setattr__(self, "d2", float(self.d2))

    @staticmethod
    def constant(c: float) -> "Jet2":
        return Jet2(c, 0.0, 0.0)

    @staticmethod
    def variable(t: float) -> "Jet2":
        return Jet2(t, 1.0, 0.0)

    def __add__(self, other: "Jet2") -> "Jet2":
        return Jet2(self.f + other.f, self.d1 + other.d1, self.d2 + other.d2)

    def __sub__(self, other: "Jet2") -> "Jet2":
        return Jet2(self.f - other.f, self.d1 - other.d1, self.d2 - other.d2)

    def __neg__(self) -> "Jet2":
        return Jet2(-self.f, -self.d1, -self.d2)

    def __mul__(self, other: "Jet2") -> "Jet2":
        return Jet2(self.f * other.f,
                    self.d1 * other.f + self.f * other.d1,
                    self.d2 * other.f + 2.0 * self.d1 * other.d1 + self.f * other.d2)

    def __truediv__(self, other: "Jet2") -> "Jet2":
        if other.f == 0.0:
            raise DomainError("division by a jet with zero value")
        q = self.f / other.f
        d1 = (self.d1 - q * other.d1) / other.f
        d2 = (self.d2 - 2.0 * d1 * other.d1 - q * other.d2) / other.f
        return Jet2(q, d1, d2)


def _safe_pow(base: float, expo: float, integral: bool) -> float:
    # Restricted real power: rejects the combinations whose real value or
    # derivative does not exist.
    if expo == 0.0:
        return 1.0
    if base == 0.0 and expo < 0.0:
        raise DomainError("zero raised to a negative power")
    if base < 0.0 and not integral:
        raise DomainError("negative base with a non-integer exponent")
    return base ** expo


def jet_pow(x: Jet2, p: Fraction) -> Jet2:
    """x**p for a literal rational exponent, with exact derivative slots."""
    p = Fraction(p)
    if p == 0:
        return Jet2(1.0, 0.0, 0.0)
    if p == 1:
        return x
    pf = float(p)
    integral = p.denominator == 1
    value = _safe_pow(x.f, pf, integral)
    u1 = _safe_pow(x.f, pf - 1.0, integral)
    d1 = pf * u1 * x.d1
    coeff2 = pf * (pf - 1.0)
    if coeff2 == 0.0:
        d2 = pf * u1 * x.d2
    else:
        u2 = _safe_pow(x.f, pf - 2.0, integral)
        d2 = coeff2 * u2 * (x.d1 * x.d1) + pf * u1 * x.d2
    return Jet2(value, d1, d2)


def dual_pow(x: Dual, p: Fraction) -> Dual:
    """x**p on dual numbers; eps slot matches jet_pow's d1 bit-for-bit."""
    p = Fraction(p)
    if p == 0:
        return Dual(1.0, 0.0)
    if p == 1:
        return x
    pf = float(p)
    integral = p.denominator == 1
    value = _safe_pow(x.re, pf, integral)
    u1 = _safe_pow(x.re, pf - 1.0, integral)
    return Dual(value, pf * u1 * x.eps)


def _jet_sqrt(x: Jet2) -> Jet2:
    if x.f < 0.0:
        raise DomainError("sqrt of a negative value")
    u = math.sqrt(x.f)
    if u == 0.0:
        if x.d1 == 0.0 and x.d2 == 0.0:
            return Jet2(0.0, 0.0, 0.0)
        raise DomainError("sqrt derivative is singular at zero")
    d1 = x.d1 / (2.0 * u)
    # x''/(2u) - x'^2/(4u^3) rewritten via d1 so u^3 never underflows alone
    d2 = (0.5 * x.d2 - d1 * d1) / u
    return Jet2(u, d1, d2)


def _dual_sqrt(x: Dual) -> Dual:
    if x.re < 0.0:
        raise DomainError("sqrt of a negative value")
    u = math.sqrt(x.re)
    if u == 0.0:
        if x.eps == 0.0:
            return Dual(0.0, 0.0)
        raise DomainError("sqrt derivative is singular at zero")
    return Dual(u, x.eps / (2.0 * u))


def _jet_exp(x: Jet2) -> Jet2:
    u = math.exp(x.f)
    return Jet2(u, u * x.d1, u * x.d2 + u * (x.d1 * x.d1))


def _dual_exp(x: Dual) -> Dual:
    u = math.exp(x.re)
    return Dual(u, u * x.eps)


def _jet_sin(x: Jet2) -> Jet2:
    s = math.sin(x.f)
    c = math.cos(x.f)
    return Jet2(s, c * x.d1, c * x.d2 - s * (x.d1 * x.d1))


def _dual_sin(x: Dual) -> Dual:
    s = math.sin(x.re)
    c = math.cos(x.re)
    return Dual(s, c * x.eps)


def _jet_cos(x: Jet2) -> Jet2:
    s = math.sin(x.f)
    c = math.cos(x.f)
    return Jet2(c, -(s * x.d1), -(s * x.d2) - c * (x.d1 * x.d1))


def _dual_cos(x: Dual) -> Dual:
    s = math.sin(x.re)
    c = math.cos(x.re)
    return Dual(c, -(s * x.eps))


def _jet_sinh(x: Jet2) -> Jet2:
    s = math.sinh(x.f)
    c = math.cosh(x.f)
    return Jet2(s, c * x.d1, c * x.d2 + s * (x.d1 * x.d1))


def _dual_sinh(x: Dual) -> Dual:
    s = math.sinh(x.re)
    c = math.cosh(x.re)
    return Dual(s, c * x.eps)


def _jet_cosh(x: Jet2) -> Jet2:
    s = math.sinh(x.f)
    c = math.cosh(x.f)
    return Jet2(c, s * x.d1, s * x.d2 + c * (x.d1 * x.d1))


def _dual_cosh(x: Dual) -> Dual:
    s = math.sinh(x.re)
    c = math.cosh(x.re)
    return Dual(c, s * x.eps)


JET_FUNCTIONS: dict[str, Callable[[Jet2], Jet2]] = {
    "sqrt": _jet_sqrt,
    "exp": _jet_exp,
    "sin": _jet_sin,
    "cos": _jet_cos,
    "sinh": _jet_sinh,
    "cosh": _jet_cosh,
}

DUAL_FUNCTIONS: dict[str, Callable[[Dual], Dual]] = {
    "sqrt": _dual_sqrt,
    "exp": _dual_exp,
    "sin": _dual_sin,
    "cos": _dual_cos,
    "sinh": _dual_sinh,
    "cosh": _dual_cosh,
}


def dual_arith(a: Dual, b: Dual) -> tuple[Dual, Dual]:
    """Sum and product of two dual numbers, as one bundle."""
    return a + b, a * b


@dataclass(frozen=True)
class DualVec4:
    """Dual 4-vector a + eps*a' (a pair of Vec4)."""

    re: Vec4
    eps: Vec4


@dataclass(frozen=True)
class DualVectorAlgebra:
    """Products of a pair of dual vectors: scalar, ternary cross, norm."""

    dot: Dual
    cross: DualVec4
    norm_a: Dual
    is_unit: bool


def _inner(mode: str):
    if mode == "lorentz":
        return lorentz_dot
    if mode == "euclid":
        return euclid_dot
    raise ValueError(f"unknown norm mode {mode!r}")


def dual_vector_algebra(a: DualVec4, b: DualVec4, i_vec: Vec4,
                        mode: str = "lorentz") -> DualVectorAlgebra:
    """Scalar product, ternary cross with axis i_vec, and norm of `a`.

    The eps slot of each product follows the nilpotency rule: cross terms
    re*eps + eps*re, never eps*eps.  `mode` selects the scalar product used
    for the dot and the norm ("lorentz" default, "euclid" alternative); the
    ternary cross is always the Lorentzian one.

    The unit test is against the pair (|norm real part|, eps part) == (1, 0)
    with tolerance 1e-9; the absolute value admits timelike unit vectors in
    lorentz mode.
    """
    inner = _inner(mode)
    dot = Dual(inner(a.re, b.re), inner(a.re, b.eps) + inner(a.eps, b.re))
    cross = DualVec4(
        cross4(a.re, b.re, i_vec),
        cross4(a.re, b.eps, i_vec) + cross4(a.eps, b.re, i_vec),
    )
    q = inner(a.re, a.re)
    norm_a = Dual(q, 2.0 * inner(a.re, a.eps))
    is_unit = abs(abs(norm_a.re) - 1.0) <= UNIT_SPHERE_TOL and \
        abs(norm_a.eps) <= UNIT_SPHERE_TOL
    return DualVectorAlgebra(dot, cross, norm_a, is_unit)
