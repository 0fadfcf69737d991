import random
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qparikh import FactoredRational, IntPoly, PolyMatrix, minor_det, reciprocal, series_expand, unitriangular_inverse
from qparikh import polynomials as P
from qparikh.errors import DegreeExceeded, NonExactDivision, NotUnitriangular
from qparikh.properties import det_by_permutations, random_unitriangular

from conftest import matrix, poly, polys

Q = P.Q


def test_canonical_form_and_degree():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly().degree == -1 and IntPoly([0, 0]) == IntPoly()
    assert IntPoly([0, 0, 3]).valuation == 2
    assert IntPoly([5]) == 5


def test_string_form():
    assert str(poly("1+q^3+q^5+q^6")) == "q^6+q^5+q^3+1"
    assert str(IntPoly([0, -1, 2])) == "2q^2-q"
    assert str(IntPoly()) == "0"


@given(polys(bound=1000))
def test_parse_inverts_str(p):
    assert IntPoly.parse(str(p)) == p


@given(polys())
def test_json_round_trip(p):
    assert IntPoly.from_json(p.to_json()) == p


def test_parse_rejects_garbage():
    for bad in ["q^", "2x", "q^2q", "++q"]:
        with pytest.raises(ValueError):
            IntPoly.parse(bad)


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == IntPoly()


@pytest.mark.parametrize("seed", range(20))
def test_kronecker_matches_schoolbook(seed):
    rng = random.Random(seed)
    n, m = rng.randint(1, 300), rng.randint(1, 300)
    scale = 10 ** rng.randint(0, 40)
    a = [rng.randint(-scale, scale) for _ in range(n)]
    b = [rng.randint(-scale, scale) for _ in range(m)]
    assert P._kronecker(a, b) == P._schoolbook(a, b)


def test_kronecker_with_zero_factor():
    assert P._kronecker([0], [10**30, -1]) == [0, 0]


def test_large_products_use_exact_integers():
    p = IntPoly([10**40] * 100)
    assert (p * p)[99] == 100 * 10**80


def test_reciprocal():
    assert reciprocal(poly("q^2+q"), 4) == poly("q^3+q^2")
    assert reciprocal(IntPoly(), 3) == IntPoly()
    with pytest.raises(DegreeExceeded):
        reciprocal(poly("q^5"), 4)


@given(polys(), st.integers(0, 5))
def test_reciprocal_is_an_involution(p, extra):
    d = max(p.degree, 0) + extra
    assert reciprocal(reciprocal(p, d), d) == p


def test_dilate_and_shift():
    assert poly("q^2+1").dilate(3) == poly("q^6+1")
    assert poly("q^2+3").dilate(0) == 4
    assert poly("q+1").shift(2) == poly("q^3+q^2")
    assert poly("q^3").shift(-3) == 1
    with pytest.raises(NonExactDivision):
        poly("q+1").shift(-1)


def test_exact_division():
    a, b = poly("q^2+q+1"), poly("q-1")
    assert (a * b).exact_div(b) == a
    with pytest.raises(NonExactDivision):
        a.exact_div(poly("q+1"))
    assert (poly("1-q^8")).div_one_minus(4) == poly("1+q^4")


def test_cyclotomic_polynomials():
    assert P.cyclotomic(1) == poly("q-1")
    assert P.cyclotomic(4) == poly("q^2+1")
    assert P.cyclotomic(6) == poly("q^2-q+1")
    # 1 - q^n = -prod_{d | n} Phi_d
    prod = IntPoly([1])
    for d in (1, 2, 3, 4, 6, 12):
        prod = prod * P.cyclotomic(d)
    assert prod == -P.one_minus_q_pow(12)


def test_series_expand_examples():
    r = FactoredRational(poly("q^2+q"), {4: 1})
    assert series_expand(r, 9).as_poly() == poly("q+q^2+q^5+q^6+q^9")
    assert list(series_expand(FactoredRational(1, {2: 1}), 5)) == [1, 0, 1, 0, 1, 0]
    assert list(series_expand(FactoredRational(1, {1: 2}), 4)) == [1, 2, 3, 4, 5]


@given(polys(max_deg=6), st.lists(st.integers(1, 5), max_size=3))
def test_series_times_denominator_recovers_numerator(num, exps):
    r = FactoredRational(num, Counter(exps))
    order = 30
    s = series_expand(r, order).as_poly()
    back = (s * r.denominator_poly()).truncate(order)
    assert back == num.truncate(order)


def test_factored_rational_arithmetic():
    a = FactoredRational(poly("q"), {2: 1})
    b = FactoredRational(1, {4: 1})
    total = a + b
    assert total == FactoredRational(poly("q") * poly("1+q^2") + 1, {4: 1})
    assert (a - a).is_zero()
    assert FactoredRational(poly("1-q^4"), {4: 1}).cancel().to_poly() == 1
    with pytest.raises(NonExactDivision):
        FactoredRational(poly("q"), {2: 1}).to_poly()


def test_reduced_denominator_uses_cyclotomic_factors():
    r = FactoredRational(poly("q^6+2q^5+q^4"), {4: 1, 8: 1})
    num, den = r.reduced_denominator()
    assert num == poly("q^4")
    assert den == poly("q^10-2q^9+3q^8-4q^7+4q^6-4q^5+4q^4-4q^3+3q^2-2q+1")


def test_unitriangular_inverse_examples():
    m = matrix("1 & q // 0 & 1")
    assert unitriangular_inverse(m) == matrix("1 & -q // 0 & 1")
    m = matrix("1 & q & q^3 // 0 & 1 & q^2 // 0 & 0 & 1")
    assert unitriangular_inverse(m) == matrix("1 & -q & 0 // 0 & 1 & -q^2 // 0 & 0 & 1")
    with pytest.raises(NotUnitriangular):
        unitriangular_inverse(matrix("2 & 0 // 0 & 1"))


@pytest.mark.parametrize("seed", range(10))
def test_unitriangular_inverse_random(seed):
    rng = random.Random(seed)
    m = random_unitriangular(rng, rng.randint(1, 8), 5)
    inv = unitriangular_inverse(m)
    eye = PolyMatrix.identity(m.n)
    assert m @ inv == eye and inv @ m == eye


@pytest.mark.parametrize("seed", range(10))
def test_minor_det_matches_leibniz(seed):
    rng = random.Random(seed)
    n = 5
    m = PolyMatrix([[IntPoly([rng.randint(-3, 3) for _ in range(3)]) for _ in range(n)] for _ in range(n)])
    for size in (1, 2, 3, 5):
        rows = sorted(rng.sample(range(n), size))
        cols = sorted(rng.sample(range(n), size))
        assert minor_det(m, rows, cols) == det_by_permutations(m, rows, cols)


def test_matrix_helpers():
    m = matrix("1 & q // 0 & 1")
    assert P.hadamard(m, m) == matrix("1 & q^2 // 0 & 1")
    assert P.antitranspose(matrix("1 & q // 0 & 2")) == matrix("2 & q // 0 & 1")
    assert PolyMatrix.checkerboard(2) == matrix("1 & -1 // -1 & 1")
    assert PolyMatrix.from_json(m.to_json()) == m
    assert m.dilate(3) == matrix("1 & q^3 // 0 & 1")


def test_recurrence_types():
    rec = P.IntRecurrence((1, 1))
    assert rec.holds_on([0, 1, 1, 2, 3, 5, 8])
    assert not rec.holds_on([0, 1, 1, 2, 4])
    assert str(rec) == "c(n) = 1*c(n-1) +1*c(n-2)"
    prec = P.Recurrence((Q, IntPoly()))
    assert prec.holds_on([IntPoly([1]), Q, Q * Q])
