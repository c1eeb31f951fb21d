"""Independent reference computations built on sympy and plain integer series."""

from __future__ import annotations

from math import comb

import sympy

from gkmcalc.model import FourStratum


def series_expansion(numerator, rank, terms):
    """Coefficients of numerator(s) / (1 - s)**rank by convolution with binomials."""
    inverse = [comb(rank - 1 + k, k) for k in range(terms)]
    out = []
    for k in range(terms):
        out.append(sum(numerator[j] * inverse[k - j] for j in range(min(k, len(numerator) - 1) + 1)))
    return out


def sympy_vars(space):
    return sympy.symbols(" ".join(space.variables) + " _pad")[: space.rank]


def to_sympy(poly, xs):
    expr = sympy.Integer(0)
    for exps, c in poly.terms():
        term = sympy.Rational(c.numerator, c.denominator)
        for x, e in zip(xs, exps):
            term *= x**e
        expr += term
    return expr


def form_expr(form, xs):
    return sum(sympy.Rational(c.numerator, c.denominator) * x for c, x in zip(form.coeffs, xs))


def divides(divisor, expr, xs):
    _, r = sympy.reduced(sympy.expand(expr), [sympy.expand(divisor)], *xs)
    return sympy.expand(r) == 0


def image_dimension(space, k):
    """dim of the degree-k piece via generic symbolic classes and sympy division."""
    xs = sympy_vars(space)
    monos = sorted(
        sympy.itermonomials(xs, k, k), key=sympy.default_sort_key
    ) if k > 0 else [sympy.Integer(1)]
    unknowns = []
    f = {}
    for p in space.fixed_points:
        cs = sympy.symbols(f"c_{p}_0:{len(monos)}")
        unknowns.extend(cs)
        f[p] = sum(c * m for c, m in zip(cs, monos))
    equations = []

    def remainder_coeffs(expr, divisor):
        _, r = sympy.reduced(sympy.expand(expr), [sympy.expand(divisor)], *xs)
        r = sympy.expand(r)
        if r == 0:
            return []
        return sympy.Poly(r, *xs).coeffs()

    for s in space.strata:
        alpha = form_expr(s.direction, xs)
        pts = s.points
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                equations += remainder_coeffs(f[pts[i]] - f[pts[j]], alpha)
        if isinstance(s, FourStratum):
            total = 0
            for p, (c1, c2) in zip(pts, s.multipliers):
                w1 = sympy.Rational(c1.numerator, c1.denominator) * alpha
                w2 = sympy.Rational(c2.numerator, c2.denominator) * alpha
                total += f[p] / (w1 * w2)
            numerator = sympy.expand(sympy.cancel(total * alpha**2))
            equations += remainder_coeffs(numerator, alpha**2)
    if not equations:
        return len(unknowns)
    mat, _ = sympy.linear_eq_to_matrix(equations, unknowns)
    return len(unknowns) - mat.rank()
