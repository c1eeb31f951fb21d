"""
Graded solution spaces, Hilbert data and ring operations.

A class is a tuple of polynomials indexed by the fixed points. The degree-k
piece of equivariant cohomology is the nullspace of
:func:`~gkmcalc.constraints.constraint_matrix`; products are pointwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

from .constraints import (
    ConstraintSystem,
    RowProvenance,
    adapted_change_of_variables,
    constraint_matrix,
    from_adapted,
    iter_violations,
    to_adapted,
)
from .errors import ClassError, CongruenceError, InconsistencyError
from .exactalg import (
    Polynomial,
    RationalMatrix,
    nullspace_basis,
    parse_polynomial,
    primitive_integer_vector,
    reduce_mod_linear,
    solve,
)
from .exactalg.linear_form import PivotRule
from .model import FourStratum, GkmSpace


@dataclass(frozen=True)
class CohomologyClass:
    """Polynomials at the fixed points, all homogeneous of polynomial degree ``degree``.

    The cohomological degree is ``2 * degree``.
    """

    space: GkmSpace
    values: tuple[Polynomial, ...]
    degree: int

    def __post_init__(self):
        if len(self.values) != len(self.space.fixed_points):
            raise ClassError(
                f"{len(self.values)} values for {len(self.space.fixed_points)} fixed points"
            )
        for p, f in zip(self.space.fixed_points, self.values):
            if f.nvars != self.space.rank:
                raise ClassError(f"value at {p} lives in {f.nvars} variables, not {self.space.rank}")
            if not f.is_homogeneous(self.degree):
                raise ClassError(f"value at {p} is not homogeneous of degree {self.degree}")

    @classmethod
    def from_values(
        cls,
        space: GkmSpace,
        values: Mapping[str, Polynomial] | Sequence[Polynomial],
        degree: int | None = None,
    ) -> "CohomologyClass":
        """Build a class, inferring the degree from the nonzero entries.

        ``values`` may be a sequence in fixed-point order or a mapping from
        point ids; a mapping must name every fixed point and nothing else.
        """
        if isinstance(values, Mapping):
            unknown = sorted(set(values) - set(space.fixed_points))
            if unknown:
                raise ClassError(f"unknown fixed points {unknown}")
            missing = [p for p in space.fixed_points if p not in values]
            if missing:
                raise ClassError(f"no value given for fixed points {missing}")
            values = [values[p] for p in space.fixed_points]
        values = tuple(values)
        degs = set()
        for f in values:
            if not f.is_homogeneous():
                raise ClassError(f"{f} is not homogeneous")
            if f:
                degs.add(f.degree())
        if len(degs) > 1:
            raise ClassError(f"values have different degrees {sorted(degs)}")
        if degs:
            inferred = degs.pop()
            if degree is not None and degree != inferred:
                raise ClassError(f"values have degree {inferred}, expected {degree}")
            degree = inferred
        elif degree is None:
            degree = 0
        return cls(space, values, degree)

    @classmethod
    def parse(cls, space: GkmSpace, values: Mapping[str, str], degree: int | None = None):
        """Build a class from polynomial strings in the space's variable names."""
        polys = {}
        for p, text in values.items():
            try:
                polys[p] = parse_polynomial(text, space.variables)
            except ValueError as exc:
                raise ClassError(f"value at {p}: {exc}") from None
        return cls.from_values(space, polys, degree)

    @classmethod
    def constant(cls, space: GkmSpace, c=1) -> "CohomologyClass":
        return cls(space, tuple(Polynomial.constant(space.rank, c) for _ in space.fixed_points), 0)

    def __getitem__(self, point: str) -> Polynomial:
        return self.values[self.space.index_of(point)]

    def is_zero(self) -> bool:
        return not any(self.values)

    def __mul__(self, other: "CohomologyClass") -> "CohomologyClass":
        if other.space != self.space:
            raise ClassError("classes over different spaces")
        return CohomologyClass(
            self.space, tuple(a * b for a, b in zip(self.values, other.values)),
            self.degree + other.degree,
        )

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        if other.space != self.space or other.degree != self.degree:
            raise ClassError("can only add classes of one degree over one space")
        return CohomologyClass(
            self.space, tuple(a + b for a, b in zip(self.values, other.values)), self.degree
        )

    def scale(self, c) -> "CohomologyClass":
        return CohomologyClass(self.space, tuple(f.scale(c) for f in self.values), self.degree)

    def as_strings(self) -> dict[str, str]:
        names = self.space.variables
        return {p: f.format(names) for p, f in zip(self.space.fixed_points, self.values)}

    def __str__(self) -> str:
        return "(" + ", ".join(self.as_strings().values()) + ")"


@dataclass(frozen=True)
class GradedBasis:
    degree: int
    classes: tuple[CohomologyClass, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, i: int) -> CohomologyClass:
        return self.classes[i]


@dataclass(frozen=True)
class HilbertData:
    max_degree: int
    equivariant: tuple[int, ...]  # h_k, polynomial degree k
    betti: tuple[int, ...]  # q_k after multiplying by (1 - t^2)^n
    consistent: bool

    @property
    def betti_vector(self) -> tuple[int, ...]:
        """The q-sequence with trailing zeros removed."""
        q = list(self.betti)
        while q and q[-1] == 0:
            q.pop()
        return tuple(q)

    def to_dict(self) -> dict:
        return {
            "max_degree": 2 * self.max_degree,
            "equivariant_dimensions": list(self.equivariant),
            "betti": list(self.betti),
            "consistent": self.consistent,
        }


@dataclass(frozen=True)
class Violation:
    provenance: RowProvenance
    value: Fraction


@dataclass(frozen=True)
class MembershipReport:
    member: bool
    degree: int
    violations: tuple[Violation, ...]

    def families(self) -> set[str]:
        return {v.provenance.family for v in self.violations}


@dataclass(frozen=True)
class Residue:
    """Outcome of localizing a class on one four-dimensional stratum.

    Exactly one of ``quotient`` (the polynomial ``sum f_i/(w1_i w2_i)``) and
    ``remainder`` (the part of the weighted numerator not divisible by the
    squared direction) is set.
    """

    quotient: Polynomial | None
    remainder: Polynomial | None

    @property
    def ok(self) -> bool:
        return self.quotient is not None


@lru_cache(maxsize=256)
def _system(space: GkmSpace, k: int, pivot: PivotRule, all_pairs: bool) -> ConstraintSystem:
    return constraint_matrix(space, k, pivot, all_pairs)


def _integral(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in primitive_integer_vector(v))


@lru_cache(maxsize=256)
def _basis_vectors(space: GkmSpace, k: int) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(_integral(v) for v in nullspace_basis(_system(space, k, "first", False).matrix))


def solve_degree(space: GkmSpace, k: int) -> GradedBasis:
    """Basis of the degree-k piece (cohomological degree ``2k``).

    Each basis class is the rref free-variable solution scaled to coprime
    integer coefficients.
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    layout = _system(space, k, "first", False).layout
    classes = tuple(
        CohomologyClass(space, tuple(layout.polynomials(v)), k) for v in _basis_vectors(space, k)
    )
    return GradedBasis(k, classes)


def nullity(space: GkmSpace, k: int, pivot: PivotRule = "first", all_pairs: bool = False) -> int:
    system = _system(space, k, pivot, all_pairs)
    return len(nullspace_basis(system.matrix))


def betti_from_series(h: Sequence[int], rank: int) -> tuple[int, ...]:
    """Coefficients of ``(sum h_k s^k) * (1 - s)^rank``, truncated to ``len(h)``."""
    factor = [(-1) ** j * comb(rank, j) for j in range(rank + 1)]
    return tuple(
        sum(factor[j] * h[k - j] for j in range(min(k, rank) + 1)) for k in range(len(h))
    )


def hilbert(space: GkmSpace, max_degree: int) -> HilbertData:
    """Equivariant dimensions h_0..h_K and the Betti candidates they imply.

    ``max_degree`` is the polynomial degree K. The Betti candidates assume
    equivariant formality; negative values clear the ``consistent`` flag.
    """
    if max_degree < 0:
        raise ValueError("max degree must be nonnegative")
    h = tuple(len(_basis_vectors(space, k)) for k in range(max_degree + 1))
    q = betti_from_series(h, space.rank)
    return HilbertData(max_degree, h, q, all(x >= 0 for x in q))


def _check_space(space: GkmSpace, c: CohomologyClass) -> None:
    if c.space != space:
        raise ClassError("class belongs to a different space")


def check_class(space: GkmSpace, c: CohomologyClass) -> MembershipReport:
    """Evaluate every constraint row of degree ``c.degree`` on ``c``."""
    _check_space(space, c)
    system = _system(space, c.degree, "first", False)
    vec = system.layout.vector(c.values)
    viol = tuple(Violation(p, v) for p, v in iter_violations(system, vec))
    return MembershipReport(not viol, c.degree, viol)


def is_member(space: GkmSpace, values: Sequence[Polynomial]) -> bool:
    """Membership for classes that need not be homogeneous.

    The constraints are homogeneous, so a class lies in the image exactly
    when each of its homogeneous components does.
    """
    values = tuple(values)
    degrees = sorted({d for f in values for d in f.degrees_present()})
    for d in degrees:
        comp = CohomologyClass(space, tuple(f.homogeneous_component(d) for f in values), d)
        if not check_class(space, comp).member:
            return False
    return True


def localization_residue(c: CohomologyClass, stratum: FourStratum) -> Residue:
    """``sum_i f_i / (w1_i w2_i)`` over the fixed points of a four-dimensional stratum.

    Raises :class:`CongruenceError` when the values on the stratum are not
    congruent modulo its direction.
    """
    space = c.space
    alpha = stratum.direction
    vals = [c[p] for p in stratum.points]
    for p, f in zip(stratum.points[1:], vals[1:]):
        if reduce_mod_linear(vals[0] - f, alpha):
            raise CongruenceError(
                f"values at {stratum.points[0]} and {p} differ modulo the stratum direction"
            )
    g = Polynomial.zero(space.rank)
    for w, f in zip(stratum.localization_weights(), vals):
        g = g + f.scale(w)
    t = adapted_change_of_variables(alpha)
    g_u = to_adapted(g, t)
    low = {e: v for e, v in g_u.terms() if e[0] < 2}
    if low:
        return Residue(None, from_adapted(Polynomial(space.rank, low), t))
    shifted = {(e[0] - 2,) + e[1:]: v for e, v in g_u.terms()}
    return Residue(from_adapted(Polynomial(space.rank, shifted), t), None)


def coordinates(space: GkmSpace, c: CohomologyClass) -> tuple[Fraction, ...]:
    """Coordinates of a member class in the :func:`solve_degree` basis."""
    report = check_class(space, c)
    if not report.member:
        raise ClassError("class is not in the image; it has no basis coordinates")
    basis = _basis_vectors(space, c.degree)
    layout = _system(space, c.degree, "first", False).layout
    target = layout.vector(c.values)
    if not basis:
        return ()
    cols = RationalMatrix(tuple(basis), layout.ncols).transpose()
    x = solve(cols, target)
    if x is None:
        raise InconsistencyError("member class is not spanned by the computed basis")
    return x


def multiply_classes(
    space: GkmSpace, a: CohomologyClass, b: CohomologyClass
) -> tuple[CohomologyClass, tuple[Fraction, ...]]:
    """Pointwise product and its coordinates in the basis of degree ``a.degree + b.degree``.

    The image is a subalgebra, so a product that fails membership means the
    input or the implementation is broken; that raises :class:`InconsistencyError`.
    """
    _check_space(space, a)
    _check_space(space, b)
    prod = a * b
    report = check_class(space, prod)
    if not report.member:
        rows = ", ".join(str(v.provenance) for v in report.violations)
        raise InconsistencyError(f"product of members violates {rows}")
    return prod, coordinates(space, prod)
