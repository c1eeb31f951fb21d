"""
Linear constraints cutting out the degree-k piece of equivariant cohomology.

Unknowns are the coefficients of a homogeneous degree-k polynomial at every
fixed point. Two families of homogeneous linear conditions are imposed:

congruence
    On every stratum with direction ``a``, the polynomials at its fixed points
    agree modulo ``a``. Only the pairs ``(first, j)`` are emitted; the others
    follow by linearity.
abbv
    On every four-dimensional stratum, ``sum_i f_i / (c1_i c2_i a**2)`` must
    be a polynomial, i.e. ``a**2`` divides ``g = sum_i f_i / (c1_i c2_i)``.
    After a change of variables making ``a`` the first coordinate ``u1``,
    this says that the coefficients of ``g`` on monomials of ``u1``-degree
    0 or 1 vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .exactalg import (
    LinearForm,
    Polynomial,
    RationalMatrix,
    format_rational,
    inverse,
    monomials_of_degree,
    primitive_integer_vector,
    reduce_mod_linear,
)
from .exactalg.linear_form import PivotRule
from .model import FourStratum, GkmSpace, Stratum


@dataclass(frozen=True)
class CoefficientLayout:
    """Column coordinates on the direct sum of degree-k pieces, one per fixed point."""

    degree: int
    nvars: int
    points: tuple[str, ...]
    monomials: tuple[tuple[int, ...], ...]

    @classmethod
    def for_space(cls, space: GkmSpace, k: int) -> "CoefficientLayout":
        if k < 0:
            raise ValueError("degree must be nonnegative")
        return cls(k, space.rank, space.fixed_points, tuple(monomials_of_degree(space.rank, k)))

    @property
    def block(self) -> int:
        return len(self.monomials)

    @property
    def ncols(self) -> int:
        return len(self.points) * self.block

    def column(self, point_index: int, monomial_index: int) -> int:
        return point_index * self.block + monomial_index

    def columns_of(self, point_index: int) -> range:
        return range(point_index * self.block, (point_index + 1) * self.block)

    def column_labels(self, names) -> list[str]:
        labels = []
        for p in self.points:
            for m in self.monomials:
                labels.append(f"{p}:{Polynomial.monomial(m).format(names)}")
        return labels

    def polynomials(self, vector) -> list[Polynomial]:
        """Split a coefficient vector into one polynomial per fixed point."""
        out = []
        for i in range(len(self.points)):
            terms = {m: vector[self.column(i, j)] for j, m in enumerate(self.monomials)}
            out.append(Polynomial(self.nvars, terms))
        return out

    def vector(self, polys) -> tuple[Fraction, ...]:
        v = []
        for f in polys:
            if not f.is_homogeneous(self.degree):
                raise ValueError(f"{f} is not homogeneous of degree {self.degree}")
            v.extend(f.coefficient(m) for m in self.monomials)
        return tuple(v)


@dataclass(frozen=True)
class RowProvenance:
    stratum: int
    family: str  # "congruence" or "abbv"
    detail: str

    def to_dict(self) -> dict:
        return {"stratum": self.stratum, "family": self.family, "detail": self.detail}

    def __str__(self) -> str:
        return f"stratum {self.stratum} {self.family} {self.detail}"


@dataclass(frozen=True)
class ConstraintSystem:
    layout: CoefficientLayout
    matrix: RationalMatrix
    provenance: tuple[RowProvenance, ...]

    def __post_init__(self):
        if self.matrix.ncols != self.layout.ncols:
            raise ValueError("matrix does not match layout")
        if len(self.provenance) != self.matrix.nrows:
            raise ValueError("one provenance record per row is required")

    def deduplicated(self) -> "ConstraintSystem":
        """Drop rows that are rational multiples of an earlier row."""
        seen = set()
        rows, prov = [], []
        for r, p in zip(self.matrix.rows, self.provenance):
            key = _projective_key(r)
            if key in seen:
                continue
            seen.add(key)
            rows.append(r)
            prov.append(p)
        return ConstraintSystem(self.layout, RationalMatrix(tuple(rows), self.matrix.ncols), tuple(prov))


def _projective_key(row) -> tuple:
    if not any(row):
        return ()
    ints = primitive_integer_vector(row)
    lead = next(x for x in ints if x)
    return tuple(x if lead > 0 else -x for x in ints)


def adapted_change_of_variables(alpha: LinearForm, pivot: PivotRule = "first") -> RationalMatrix:
    """Invertible ``T`` with new coordinates ``u = T x`` and ``u1 = alpha(x)``.

    Row 0 of ``T`` is ``alpha``; the remaining rows are the unit vectors of
    the non-pivot coordinates in their original order.
    """
    if alpha.is_zero():
        raise ValueError("cannot adapt coordinates to the zero form")
    n = alpha.nvars
    j = alpha.pivot(pivot)
    rows = [alpha.coeffs]
    for i in range(n):
        if i != j:
            rows.append(tuple(Fraction(int(i == c)) for c in range(n)))
    return RationalMatrix(tuple(rows), n)


def _linear_images(m: RationalMatrix) -> list[Polynomial]:
    # variable i  ->  sum_j m[i, j] * variable j
    return [Polynomial.linear(row) for row in m.rows]


def to_adapted(f: Polynomial, t: RationalMatrix) -> Polynomial:
    """Rewrite ``f(x)`` as a polynomial in ``u = T x``."""
    return f.compose(_linear_images(inverse(t)))


def from_adapted(g: Polynomial, t: RationalMatrix) -> Polynomial:
    return g.compose(_linear_images(t))


def _fmt_mono(exps, names) -> str:
    return Polynomial.monomial(exps).format(names)


def congruence_rows(
    space: GkmSpace,
    stratum_index: int,
    layout: CoefficientLayout,
    pivot: PivotRule = "first",
    all_pairs: bool = False,
) -> list[tuple[tuple[Fraction, ...], RowProvenance]]:
    stratum = space.strata[stratum_index]
    alpha = stratum.direction
    j = alpha.pivot(pivot)
    quotient = [m for m in monomials_of_degree(space.rank, layout.degree) if m[j] == 0]
    # reduction of each basis monomial, as coefficients on the quotient monomials
    reduced = [reduce_mod_linear(Polynomial.monomial(m), alpha, pivot) for m in layout.monomials]
    idx = [space.index_of(p) for p in stratum.points]
    if all_pairs:
        pairs = list(combinations(range(len(idx)), 2))
    else:
        pairs = [(0, b) for b in range(1, len(idx))]

    rows = []
    for a, b in pairs:
        pa, pb = idx[a], idx[b]
        for q in quotient:
            row = [Fraction(0)] * layout.ncols
            for mi, red in enumerate(reduced):
                c = red.coefficient(q)
                if c:
                    row[layout.column(pa, mi)] += c
                    row[layout.column(pb, mi)] -= c
            detail = f"{stratum.points[a]}~{stratum.points[b]} mod {_fmt_form(alpha, space.variables)} [{_fmt_mono(q, space.variables)}]"
            rows.append((tuple(row), RowProvenance(stratum_index, "congruence", detail)))
    return rows


def abbv_rows(
    space: GkmSpace,
    stratum_index: int,
    layout: CoefficientLayout,
    pivot: PivotRule = "first",
) -> list[tuple[tuple[Fraction, ...], RowProvenance]]:
    stratum = space.strata[stratum_index]
    if not isinstance(stratum, FourStratum):
        raise TypeError("ABBV rows exist only for four-dimensional strata")
    t = adapted_change_of_variables(stratum.direction, pivot)
    images = _linear_images(inverse(t))
    adapted = [Polynomial.monomial(m).compose(images) for m in layout.monomials]
    weights = stratum.localization_weights()
    idx = [space.index_of(p) for p in stratum.points]
    targets = [m for m in monomials_of_degree(space.rank, layout.degree) if m[0] <= 1]
    u_names = tuple(f"u{i + 1}" for i in range(space.rank))

    rows = []
    for q in targets:
        row = [Fraction(0)] * layout.ncols
        for w, pi in zip(weights, idx):
            for mi, poly in enumerate(adapted):
                c = poly.coefficient(q)
                if c:
                    row[layout.column(pi, mi)] += w * c
        detail = f"residue mod ({_fmt_form(stratum.direction, space.variables)})^2 [{_fmt_mono(q, u_names)}]"
        rows.append((tuple(row), RowProvenance(stratum_index, "abbv", detail)))
    return rows


def _fmt_form(alpha: LinearForm, names) -> str:
    return alpha.as_polynomial().format(names)


def constraint_matrix(
    space: GkmSpace,
    k: int,
    pivot: PivotRule = "first",
    all_pairs: bool = False,
) -> ConstraintSystem:
    """All congruence and ABBV rows for polynomial degree ``k``.

    Rows appear stratum by stratum; within a four-dimensional stratum the
    congruence rows precede the ABBV rows. ``pivot`` and ``all_pairs`` select
    the cross-check constructions; the default is the primary one.
    """
    layout = CoefficientLayout.for_space(space, k)
    collected = []
    for i, s in enumerate(space.strata):
        collected.extend(congruence_rows(space, i, layout, pivot, all_pairs))
        if isinstance(s, FourStratum):
            collected.extend(abbv_rows(space, i, layout, pivot))
    matrix = RationalMatrix(tuple(r for r, _ in collected), layout.ncols)
    return ConstraintSystem(layout, matrix, tuple(p for _, p in collected))


def iter_violations(system: ConstraintSystem, vector) -> Iterator[tuple[RowProvenance, Fraction]]:
    for row, prov in zip(system.matrix.rows, system.provenance):
        val = sum((a * b for a, b in zip(row, vector)), Fraction(0))
        if val:
            yield prov, val


def export_matrix(system: ConstraintSystem, names) -> str:
    """Plain-text export: header comments, then per row a provenance comment and the row."""
    lay = system.layout
    out = [
        "# gkmcalc constraint matrix",
        f"# cohomological-degree {2 * lay.degree} polynomial-degree {lay.degree}",
        f"# rows {system.matrix.nrows} columns {system.matrix.ncols}",
        "# columns " + " ".join(lay.column_labels(names)),
    ]
    for i, (row, prov) in enumerate(zip(system.matrix.rows, system.provenance)):
        out.append(f"# row {i}: stratum {prov.stratum} {prov.family} {prov.detail}")
        out.append(" ".join(format_rational(x) for x in row))
    return "\n".join(out) + "\n"


def parse_exported_matrix(text: str) -> RationalMatrix:
    """Read back the numeric rows of :func:`export_matrix` output."""
    ncols = None
    rows = []
    for line in text.splitlines():
        if line.startswith("# rows"):
            ncols = int(line.split()[-1])
        elif line and not line.startswith("#"):
            rows.append(tuple(Fraction(tok) for tok in line.split()))
    if ncols is None:
        raise ValueError("missing '# rows ... columns N' header")
    return RationalMatrix(tuple(rows), ncols)
