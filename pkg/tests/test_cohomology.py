from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
import sympy

from gkmcalc.cohomology import (
    CohomologyClass,
    betti_from_series,
    check_class,
    coordinates,
    hilbert,
    is_member,
    localization_residue,
    multiply_classes,
    nullity,
    solve_degree,
)
from gkmcalc.corpus import CORPUS
from gkmcalc.errors import ClassError, CongruenceError, InconsistencyError
from gkmcalc.exactalg import Polynomial, parse_polynomial

from oracles import form_expr, image_dimension, series_expansion, sympy_vars, to_sympy


def cls(space, *texts, degree=None):
    return CohomologyClass.parse(space, dict(zip(space.fixed_points, texts)), degree)


# series oracle sanity: the expansions the expectations come from

@pytest.mark.parametrize("numerator,rank,expected", [
    ([1, 1, 1], 1, [1, 2, 3, 3, 3, 3]),
    ([1, 1, 1, 1], 2, [1, 3, 6, 10, 14, 18]),
    ([1, 2, 1], 1, [1, 3, 4, 4, 4, 4]),
    ([1, 1], 1, [1, 2, 2, 2, 2, 2]),
    ([1, 1], 2, [1, 3, 5, 7, 9, 11]),
])
def test_series_oracle(numerator, rank, expected):
    assert series_expansion(numerator, rank, 6) == expected


def test_betti_from_series_inverts_oracle():
    for numerator, rank in [([1, 1, 1], 1), ([1, 1, 1, 1], 2), ([1, 3, 1], 3)]:
        h = series_expansion(numerator, rank, 8)
        q = betti_from_series(h, rank)
        assert list(q) == numerator + [0] * (8 - len(numerator))


# solve_degree

@pytest.mark.parametrize("name,k,expected", [
    ("s2_s1", 1, 2),
    ("cp2_s1", 2, 3),
    ("su3_reduced", 1, 3),
])
def test_solve_degree_examples(spaces, name, k, expected):
    assert len(solve_degree(spaces[name], k)) == expected


@pytest.mark.parametrize("k", range(4))
def test_dimension_matches_sympy_oracle(spaces, corpus_name, k):
    space = spaces[corpus_name]
    assert len(solve_degree(space, k)) == image_dimension(space, k)


def test_basis_members_and_integral(spaces, corpus_name):
    space = spaces[corpus_name]
    for k in range(4):
        for c in solve_degree(space, k):
            assert check_class(space, c).member
            assert not c.is_zero()
            for f in c.values:
                assert all(v.denominator == 1 for _, v in f.terms())


def test_basis_deterministic(spaces):
    a = solve_degree(spaces["cp3_t2"], 2)
    b = solve_degree(spaces["cp3_t2"], 2)
    assert [x.values for x in a] == [x.values for x in b]


# hilbert

@pytest.mark.parametrize("name,h,q", [
    ("cp2_s1", (1, 2, 3, 3, 3, 3), (1, 1, 1, 0, 0, 0)),
    ("cp3_t2", (1, 3, 6, 10, 14, 18), (1, 1, 1, 1, 0, 0)),
    ("su3_reduced", (1, 3, 4, 4, 4, 4), (1, 2, 1, 0, 0, 0)),
])
def test_hilbert_examples(spaces, name, h, q):
    data = hilbert(spaces[name], 5)
    assert data.equivariant == h
    assert data.betti == q
    assert data.consistent


def test_hilbert_matches_corpus(spaces, corpus_name):
    entry = CORPUS[corpus_name]
    data = hilbert(spaces[corpus_name], 5)
    assert data.equivariant == entry.expected_hilbert
    assert data.betti_vector == entry.expected_betti
    assert data.betti_vector == data.betti_vector[::-1]


def test_hilbert_prediction_from_betti(spaces, corpus_name):
    space = spaces[corpus_name]
    data = hilbert(space, 6)
    predicted = series_expansion(list(data.betti_vector), space.rank, 7)
    assert list(data.equivariant) == predicted


def test_point_and_negative_betti():
    from gkmcalc.model import GkmSpace, TorusContext
    point = GkmSpace(TorusContext(2), ("a",), ())
    data = hilbert(point, 3)
    assert data.equivariant == (1, 2, 3, 4)
    assert data.betti == (1, 0, 0, 0) and data.consistent
    assert betti_from_series((1, 1, 0), 1) == (1, 0, -1)


def test_unrealizable_input_flagged():
    # rank-3 combinatorics that no equivariantly formal space has: q_4 < 0
    from gkmcalc.exactalg import LinearForm
    from gkmcalc.model import FourStratum, GkmSpace, TorusContext, TwoSphereStratum, validate
    cp2 = tuple((Fraction(a), Fraction(b)) for a, b in [(1, 2), (-1, 1), (-2, -1)])
    strata = (
        TwoSphereStratum(("p1", "p0"), LinearForm([1, -1, 0])),
        TwoSphereStratum(("p0", "p2"), LinearForm([1, 1, 1])),
        TwoSphereStratum(("p0", "p3"), LinearForm([1, 1, 1])),
        FourStratum(("p2", "p1", "p3"), LinearForm([1, 0, 1]), cp2),
    )
    space = validate(GkmSpace(TorusContext(3), ("p0", "p1", "p2", "p3"), strata)).space
    data = hilbert(space, 4)
    assert list(data.equivariant) == [image_dimension(space, k) for k in range(5)]
    assert data.betti[4] < 0
    assert not data.consistent


# check_class

def test_check_examples(spaces):
    cp2 = spaces["cp2_s1"]
    assert check_class(cp2, cls(cp2, "0", "x", "2*x")).member
    rep = check_class(cp2, cls(cp2, "0", "x", "3*x"))
    assert not rep.member
    assert rep.families() == {"abbv"}


def test_constant_member(spaces, corpus_name):
    space = spaces[corpus_name]
    assert check_class(space, CohomologyClass.constant(space, 7)).member


def test_congruence_violation_reported(spaces):
    cp3 = spaces["cp3_t2"]
    rep = check_class(cp3, cls(cp3, "x", "x", "x", "0"))
    assert not rep.member
    assert "congruence" in rep.families()
    assert {v.provenance.stratum for v in rep.violations} <= {1, 2, 3}


def test_class_degree_mismatch(spaces):
    cp2 = spaces["cp2_s1"]
    with pytest.raises(ClassError):
        cls(cp2, "x", "x^2", "0")
    with pytest.raises(ClassError):
        CohomologyClass.parse(cp2, {"p1": "x", "p2": "x"})
    with pytest.raises(ClassError):
        CohomologyClass.parse(cp2, {"p1": "x", "p2": "x", "p3": "x", "p9": "x"})


def test_homogeneous_components(spaces, corpus_name):
    space = spaces[corpus_name]
    b0 = solve_degree(space, 0)
    b2 = solve_degree(space, 2)
    mixed = [f + g for f, g in zip(b0[0].values, b2[-1].values)]
    assert is_member(space, mixed)
    # break the constant component only; every corpus space is connected
    broken = list(mixed)
    broken[0] = broken[0] + Fraction(1, 3)
    assert not is_member(space, broken)
    assert check_class(
        space, CohomologyClass(space, tuple(f.homogeneous_component(2) for f in broken), 2)
    ).member


# localization_residue

def test_residue_examples(spaces):
    cp2 = spaces["cp2_s1"]
    s = cp2.strata[0]
    assert localization_residue(cls(cp2, "x", "x", "x"), s).quotient.is_zero()
    r = localization_residue(cls(cp2, "0", "x^2", "4*x^2"), s)
    assert r.quotient == Polynomial.one(1)
    bad = localization_residue(cls(cp2, "0", "x", "3*x"), s)
    assert not bad.ok and bad.remainder == parse_polynomial("1/2*x", ["x"])
    su3 = spaces["su3_reduced"]
    assert localization_residue(CohomologyClass.constant(su3), su3.strata[0]).quotient.is_zero()


def test_residue_requires_congruence(spaces):
    cp3 = spaces["cp3_t2"]
    with pytest.raises(CongruenceError):
        localization_residue(cls(cp3, "y", "0", "0", "0"), cp3.strata[0])


@pytest.mark.parametrize("k", [2, 3])
def test_residue_matches_sympy_rational_function(spaces, corpus_name, k):
    # oracle: sum f_i / (w1 w2) with sympy.cancel
    space = spaces[corpus_name]
    xs = sympy_vars(space)
    for idx, stratum in space.four_strata():
        alpha = form_expr(stratum.direction, xs)
        for c in solve_degree(space, k):
            total = 0
            for p, (c1, c2) in zip(stratum.points, stratum.multipliers):
                w = sympy.Rational(c1.numerator, c1.denominator) * sympy.Rational(c2.numerator, c2.denominator)
                total += to_sympy(c[p], xs) / (w * alpha**2)
            expected = sympy.expand(sympy.cancel(total))
            got = localization_residue(c, stratum)
            assert got.ok
            assert sympy.expand(to_sympy(got.quotient, xs) - expected) == 0


# multiply_classes

def test_multiply_examples(spaces):
    cp2 = spaces["cp2_s1"]
    one = CohomologyClass.constant(cp2)
    a = cls(cp2, "0", "x", "2*x")
    prod, _ = multiply_classes(cp2, one, a)
    assert prod.values == a.values
    basis = solve_degree(cp2, 1)
    if any(b.values == a.values for b in basis):
        coords = coordinates(cp2, a)
        assert sorted(coords) == [0] * (len(basis) - 1) + [1]
    sq, coords = multiply_classes(cp2, a, a)
    assert sq.values == cls(cp2, "0", "x^2", "4*x^2").values
    assert check_class(cp2, sq).member
    recombined = sum((b.scale(x) for b, x in zip(solve_degree(cp2, 2), coords)),
                     CohomologyClass.from_values(cp2, [Polynomial.zero(1)] * 3, 2))
    assert recombined.values == sq.values
    const, coords = multiply_classes(cp2, one.scale(2), one.scale(3))
    assert const.degree == 0 and coords == (Fraction(6),)


def test_basis_coordinates_are_unit_vectors(spaces, corpus_name):
    space = spaces[corpus_name]
    basis = solve_degree(space, 2)
    for i, c in enumerate(basis):
        coords = coordinates(space, c)
        assert coords == tuple(Fraction(int(i == j)) for j in range(len(basis)))


def test_multiply_detects_non_member(spaces):
    cp2 = spaces["cp2_s1"]
    with pytest.raises(InconsistencyError):
        multiply_classes(cp2, CohomologyClass.constant(cp2), cls(cp2, "0", "x", "3*x"))


def test_closure_up_to_degree_four(spaces, corpus_name):
    space = spaces[corpus_name]
    bases = [solve_degree(space, k) for k in range(5)]
    for i in range(5):
        for j in range(i, 5 - i):
            for a in bases[i]:
                for b in bases[j]:
                    prod, _ = multiply_classes(space, a, b)
                    assert check_class(space, prod).member


def test_degree_zero_is_constants(spaces, corpus_name):
    basis = solve_degree(spaces[corpus_name], 0)
    assert len(basis) == 1
    assert len(set(basis[0].values)) == 1


@pytest.mark.parametrize("k", range(6))
def test_oracle_constructions_agree(spaces, corpus_name, k):
    space = spaces[corpus_name]
    primary = nullity(space, k)
    assert nullity(space, k, pivot="last") == primary
    assert nullity(space, k, all_pairs=True) == primary


def test_concurrent_degrees(spaces):
    space = spaces["cp3_t2"]
    with ThreadPoolExecutor(4) as pool:
        dims = list(pool.map(lambda k: len(solve_degree(space, k)), range(8)))
    assert dims == series_expansion([1, 1, 1, 1], 2, 8)
