"""Linear forms on the Lie algebra and reduction modulo the ideal they generate."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Literal, Sequence

from .polynomial import Polynomial, as_rational

PivotRule = Literal["first", "last"]


@dataclass(frozen=True)
class LinearForm:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Sequence):
        object.__setattr__(self, "coeffs", tuple(as_rational(c) for c in coeffs))
        if not self.coeffs:
            raise ValueError("a linear form needs at least one coefficient")

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def pivot(self, rule: PivotRule = "first") -> int:
        nonzero = [i for i, c in enumerate(self.coeffs) if c]
        if not nonzero:
            raise ValueError("the zero form has no pivot")
        if rule == "first":
            return nonzero[0]
        if rule == "last":
            return nonzero[-1]
        raise ValueError(f"unknown pivot rule {rule!r}")

    def as_polynomial(self) -> Polynomial:
        return Polynomial.linear(self.coeffs)

    def scale(self, c) -> "LinearForm":
        c = as_rational(c)
        return LinearForm([c * a for a in self.coeffs])

    def is_primitive(self) -> bool:
        """Integer entries, gcd 1, first nonzero entry positive."""
        if self.is_zero() or any(c.denominator != 1 for c in self.coeffs):
            return False
        g = 0
        for c in self.coeffs:
            g = gcd(g, int(c))
        return g == 1 and self.coeffs[self.pivot()] > 0

    def primitive(self) -> tuple["LinearForm", Fraction]:
        """Return ``(p, s)`` with ``p`` primitive and ``self == s * p``."""
        if self.is_zero():
            raise ValueError("the zero form has no primitive representative")
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for i in ints:
            g = gcd(g, i)
        sign = 1 if ints[self.pivot()] > 0 else -1
        prim = LinearForm([sign * i // g for i in ints])
        return prim, Fraction(sign * g, den)


def reduce_mod_linear(f: Polynomial, alpha: LinearForm, pivot: PivotRule = "first") -> Polynomial:
    """Image of ``f`` in S/(alpha), written without the pivot variable.

    Solves ``alpha = 0`` for the pivot variable and substitutes. The result is
    zero exactly when ``alpha`` divides ``f``.
    """
    if alpha.nvars != f.nvars:
        raise ValueError(f"form has {alpha.nvars} coefficients, polynomial has {f.nvars} variables")
    j = alpha.pivot(pivot)
    a_j = alpha.coeffs[j]
    image = Polynomial.linear(
        [Fraction(0) if i == j else -c / a_j for i, c in enumerate(alpha.coeffs)]
    )
    return f.substitute(j, image)
