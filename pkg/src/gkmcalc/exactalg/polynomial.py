"""
Multivariate polynomials with exact rational coefficients.

Elements of the symmetric algebra S(g*) of a rank-n torus are stored as
dense exponent tuples mapped to nonzero :class:`fractions.Fraction`
coefficients. Every polynomial remembers its ambient variable count and
arithmetic between polynomials of different ambient counts is refused.

Canonical term order is graded lexicographic, largest first, so that
``x`` precedes ``y`` and ``x**2`` precedes ``x*y``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping, Sequence, Union

Scalar = Union[int, Fraction]
Exponents = tuple[int, ...]

DEFAULT_NAMES = ("x", "y", "z", "w", "u", "v")


def default_variable_names(n: int) -> tuple[str, ...]:
    if n <= len(DEFAULT_NAMES):
        return DEFAULT_NAMES[:n]
    return tuple(f"x{i + 1}" for i in range(n))


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: they would silently introduce rounding.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_RE.fullmatch(value.strip()):
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d*[1-9]\d*)?")


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def grlex_key(exps: Exponents) -> tuple:
    return (sum(exps), exps)


def monomials_of_degree(n: int, k: int) -> list[Exponents]:
    """All exponent vectors of length ``n`` and total degree ``k``, grlex descending."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    out = []
    for combo in combinations_with_replacement(range(n), k):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    out.sort(key=grlex_key, reverse=True)
    return out


class Polynomial:
    """Immutable polynomial in ``nvars`` variables over the rationals."""

    __slots__ = ("_nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], Scalar] | None = None):
        if not isinstance(nvars, int) or nvars < 1:
            raise ValueError("a polynomial needs at least one ambient variable")
        clean: dict[Exponents, Fraction] = {}
        for exps, coef in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(
                    f"exponent vector {exps} has length {len(exps)}, expected {nvars}"
                )
            if any((not isinstance(e, int)) or e < 0 for e in exps):
                raise ValueError(f"exponents must be nonnegative integers: {exps}")
            c = clean.get(exps, Fraction(0)) + as_rational(coef)
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        self._nvars = nvars
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponents, Fraction]) -> "Polynomial":
        # trusted path: terms already canonical
        p = cls.__new__(cls)
        p._nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise IndexError(f"variable index {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coef: Scalar = 1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): coef})

    @classmethod
    def linear(cls, coeffs: Sequence[Scalar]) -> "Polynomial":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            exps = [0] * n
            exps[i] = 1
            terms[tuple(exps)] = c
        return cls(n, terms)

    # inspection

    @property
    def nvars(self) -> int:
        return self._nvars

    def terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in canonical (grlex descending) order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def __iter__(self) -> Iterator[tuple[Exponents, Fraction]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, k: int | None = None) -> bool:
        degs = {sum(e) for e in self._terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return k is None or degs == {k}

    def homogeneous_component(self, k: int) -> "Polynomial":
        return Polynomial._raw(
            self._nvars, {e: c for e, c in self._terms.items() if sum(e) == k}
        )

    def degrees_present(self) -> list[int]:
        return sorted({sum(e) for e in self._terms})

    # arithmetic

    def _check(self, other: "Polynomial") -> None:
        if other._nvars != self._nvars:
            raise ValueError(
                f"ambient variable counts differ: {self._nvars} vs {other._nvars}"
            )

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(self._nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Polynomial._raw(self._nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c: Scalar) -> "Polynomial":
        c = as_rational(c)
        if not c:
            return Polynomial.zero(self._nvars)
        return Polynomial._raw(self._nvars, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Polynomial._raw(self._nvars, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        result = Polynomial.one(self._nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # substitution

    def substitute(self, index: int, g: "Polynomial") -> "Polynomial":
        """Replace variable ``index`` by ``g`` and expand."""
        if not 0 <= index < self._nvars:
            raise IndexError(f"variable index {index} out of range for {self._nvars} variables")
        self._check(g)
        powers = {0: Polynomial.one(self._nvars)}
        result = Polynomial.zero(self._nvars)
        for exps, c in self._terms.items():
            e = exps[index]
            if e not in powers:
                powers[e] = g ** e
            rest = list(exps)
            rest[index] = 0
            result = result + Polynomial._raw(self._nvars, {tuple(rest): c}) * powers[e]
        return result

    def compose(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Ring homomorphism sending variable i to ``images[i]``.

        The images may live in a different ambient ring, which is where the
        result lands.
        """
        if len(images) != self._nvars:
            raise ValueError(f"need {self._nvars} images, got {len(images)}")
        target = images[0].nvars
        if any(im.nvars != target for im in images):
            raise ValueError("images must share one ambient ring")
        cache: dict[tuple[int, int], Polynomial] = {}
        result = Polynomial.zero(target)
        for exps, c in self._terms.items():
            term = Polynomial.constant(target, c)
            for i, e in enumerate(exps):
                if e:
                    if (i, e) not in cache:
                        cache[(i, e)] = images[i] ** e
                    term = term * cache[(i, e)]
            result = result + term
        return result

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self._nvars:
            raise ValueError("point has wrong length")
        vals = [as_rational(v) for v in point]
        total = Fraction(0)
        for exps, c in self._terms.items():
            t = c
            for v, e in zip(vals, exps):
                t *= v ** e
            total += t
        return total

    # comparison and display

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._nvars == other._nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == Polynomial.constant(self._nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def format(self, names: Sequence[str] | None = None) -> str:
        names = tuple(names) if names is not None else default_variable_names(self._nvars)
        if len(names) != self._nvars:
            raise ValueError("wrong number of variable names")
        if not self._terms:
            return "0"
        pieces = []
        for exps, c in self.terms():
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self._nvars}, {self.format()!r})"


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_polynomial(text: str, names: Sequence[str]) -> Polynomial:
    """Parse an expanded polynomial such as ``"x^2 - 3/2*x*y + 4"``.

    Only sums of terms are accepted; a term is a product of rational
    constants and powers of the named variables. No parentheses.
    """
    names = tuple(names)
    index = {name: i for i, name in enumerate(names)}
    n = len(names)
    src = text.strip()
    if not src:
        raise ValueError("empty polynomial")
    result = Polynomial.zero(n)
    pos = 0
    first = True
    while pos < len(src):
        m = _TERM_RE.match(src, pos)
        if not m or (m.group(1) is None and not first):
            raise ValueError(f"cannot parse polynomial {text!r} near position {pos}")
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2).strip()
        pos = m.end()
        coef = Fraction(sign)
        exps = [0] * n
        if not body:
            raise ValueError(f"empty term in {text!r}")
        for factor in body.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if _RATIONAL_RE.fullmatch(factor):
                coef *= Fraction(factor)
                continue
            base, _, power = factor.partition("^")
            base = base.strip()
            if base not in index:
                raise ValueError(f"unknown variable {base!r} in {text!r}")
            e = int(power) if power else 1
            if e < 0:
                raise ValueError("negative exponents are not polynomial")
            exps[index[base]] += e
        result = result + Polynomial(n, {tuple(exps): coef})
        first = False
    return result


def iter_monomial_polys(n: int, k: int) -> Iterable[Polynomial]:
    for exps in monomials_of_degree(n, k):
        yield Polynomial.monomial(exps)
