import pytest
from hypothesis import given, settings

from qparikh import (
    binomial,
    closed_form_eval,
    coefficient_recurrence,
    growth_fit,
    make_stream,
    periodic_closed_form,
    qbinom,
    recurrence_integer,
    recurrence_polynomial,
    series_coefficients,
    vanishing_residues,
    word_power,
)
from qparikh.errors import AllZeroClass, LetterAbsent
from qparikh.series import (
    admissible_tuples,
    elementary_sums,
    h_matrix,
    limit_rational,
    limit_series,
    pow_matrix,
    residue_cutoff,
)
from qparikh.words import parse_word

from conftest import AB, matrix, poly, words_over

U, Z = parse_word("0110"), parse_word("01")


def test_series_coefficients_periodic():
    s = series_coefficients(make_stream("periodic", U), Z, 12)
    assert s.as_poly() == poly("q^3+2q^4+q^5+q^7+2q^8+q^9+2q^{11}+4q^{12}")
    assert len(s) == 13


def test_series_stabilize():
    x = make_stream("thue-morse")
    z = parse_word("010")
    short = series_coefficients(x, z, 30)
    longer = qbinom(x.prefix(80), z).truncate(30)
    assert short.as_poly() == longer


def test_series_needs_nonempty_z():
    with pytest.raises(ValueError):
        series_coefficients(make_stream("thue-morse"), "", 5)


def test_h_and_pow_matrices():
    assert h_matrix(Z, U, 0) == matrix("1 & q^3+1 & q^5+q^4 // 0 & 1 & q^2+q // 0 & 0 & 1")
    assert pow_matrix(Z, 2) == matrix("1 & q^2 & q^4 // 0 & 1 & q^2 // 0 & 0 & 1")


def test_closed_form_example_terms():
    cf = periodic_closed_form(U, Z)
    assert cf.exponents == (1, 2)
    assert [t.numerator for t, _ in cf.terms] == [poly("q^5+q^4+q^2+q"), poly("-q^9-q^8-q^2-q")]
    assert all(dict(t.denominator) == {4: 1} for t, _ in cf.terms)


@settings(max_examples=40)
@given(words_over(AB, 1, 4), words_over(AB, 1, 3))
def test_closed_form_evaluates_to_powers(u, z):
    cf = periodic_closed_form(u, z)
    for n in range(6):
        assert closed_form_eval(cf, n) == qbinom(word_power(u, n), z)


@settings(max_examples=40)
@given(words_over(AB, 1, 4), words_over(AB, 1, 3))
def test_limit_matches_direct_series(u, z):
    cf = periodic_closed_form(u, z)
    direct = series_coefficients(make_stream("periodic", u), z, 50)
    assert limit_series(cf, 50) == direct


@settings(max_examples=30)
@given(words_over(AB, 1, 4), words_over(AB, 1, 3))
def test_recurrences_hold(u, z):
    cf = periodic_closed_form(u, z)
    rec = recurrence_polynomial(cf)
    seq = [qbinom(word_power(u, n), z) for n in range(rec.order + 5)]
    assert rec.holds_on(seq)
    irec, terms = recurrence_integer(u, z)
    assert irec.holds_on(terms)
    crec = coefficient_recurrence(cf)
    assert crec.holds_on(list(limit_series(cf, 150)))


def test_elementary_sums_example():
    assert elementary_sums(periodic_closed_form(U, Z)) == [poly("q^4+q^8"), poly("-q^12")]


def test_recurrence_example():
    rec = recurrence_polynomial(periodic_closed_form(U, Z))
    assert rec.coefficients == (poly("1+q^4+q^8"), poly("-q^4-q^8-q^12"), poly("q^12"))
    irec, terms = recurrence_integer(U, Z)
    assert irec.coefficients == (3, -3, 1)
    assert terms == [0, 2, 8, 18, 32, 50, 72, 98, 128, 162, 200]


def test_limit_rational_example():
    num, den = limit_rational(periodic_closed_form(U, Z)).reduced_denominator()
    assert num == poly("q^4")
    assert den == poly("q^10-2q^9+3q^8-4q^7+4q^6-4q^5+4q^4-4q^3+3q^2-2q+1")


def test_vanishing_residue_example():
    assert vanishing_residues(U, Z) == {2}
    assert sorted(admissible_tuples(U, Z)) == [(1, 0), (1, 3), (2, 0), (2, 3)]


@settings(max_examples=30)
@given(words_over(AB, 1, 5), words_over(AB, 1, 3))
def test_residue_dichotomy(u, z):
    if not z.alphabet() <= u.alphabet():
        with pytest.raises(LetterAbsent):
            vanishing_residues(u, z)
        return
    vanish = vanishing_residues(u, z)
    L = len(u)
    cut = residue_cutoff(u, z)
    order = cut + 15 * L + 30
    coeffs = series_coefficients(make_stream("periodic", u), z, order)
    for n in range(cut, order + 1):
        assert (n % L in vanish) == (coeffs[n] == 0)


def test_growth_fit_example():
    for r in (0, 1, 3):
        assert abs(growth_fit(U, Z, r, 400) - 1.0) <= 0.15
    with pytest.raises(AllZeroClass):
        growth_fit(U, Z, 2, 400)
    with pytest.raises(ValueError):
        growth_fit(U, Z, 0, 64)


def test_growth_fit_longer_pattern():
    # |z| = 3 on a period of length 3: coefficients grow like n^2
    u, z = parse_word("abb"), parse_word("abb")
    vanish = vanishing_residues(u, z)
    for r in set(range(3)) - vanish:
        assert abs(growth_fit(u, z, r, 300) - 2.0) <= 0.15


def test_thue_morse_first_coefficients():
    s = series_coefficients(make_stream("thue-morse"), "00", 9)
    assert s.as_poly() == poly("q^2+q^4+q^5+q^7+2q^8+q^9")


def test_absent_letter_gives_zero_series_and_terms():
    assert not series_coefficients(make_stream("periodic", "a"), "b", 10).as_poly()
    cf = periodic_closed_form(parse_word("aa"), parse_word("ab"))
    assert cf.terms == ()
    assert closed_form_eval(cf, 4) == 0
    _, terms = recurrence_integer(parse_word("aa"), parse_word("ab"))
    assert set(terms) == {0}


def test_closed_form_small_cases():
    cf = periodic_closed_form(U, Z)
    assert closed_form_eval(cf, 0) == 0
    assert closed_form_eval(cf, 1) == qbinom(U, Z) == poly("q^4+q^3")
    assert closed_form_eval(cf, 3) == qbinom("011001100110", Z)
    single = periodic_closed_form(U, parse_word("1"))
    assert single.exponents == (1,) and single.terms[0][0] == qbinom(U, "1")


def test_single_term_recurrence_is_geometric():
    cf = periodic_closed_form(parse_word("ab"), parse_word("b"))
    rec = recurrence_polynomial(cf)
    assert rec.coefficients == (poly("1+q^2"), poly("-q^2"))
    assert coefficient_recurrence(cf).coefficients == (0, 1)


def test_integer_recurrence_for_ab():
    rec, terms = recurrence_integer(parse_word("ab"), parse_word("ab"))
    assert terms == [binomial(word_power("ab", n), "ab") for n in range(len(terms))]
    assert terms[:5] == [0, 1, 3, 6, 10]
    assert rec.holds_on(terms)


def test_coefficient_recurrence_against_direct_series():
    rec = coefficient_recurrence(periodic_closed_form(U, Z))
    assert rec.holds_on(list(series_coefficients(make_stream("periodic", U), Z, 60)))


def test_pow_matrix_examples():
    assert pow_matrix(Z, 0) == matrix("1 & 1 & 1 // 0 & 1 & 1 // 0 & 0 & 1")
    assert pow_matrix(Z, 3) == matrix("1 & q^3 & q^6 // 0 & 1 & q^3 // 0 & 0 & 1")


def test_single_letter_residues_and_flat_growth():
    assert vanishing_residues(parse_word("a"), parse_word("a")) == frozenset()
    z = parse_word("0")
    vanish = vanishing_residues(U, z)
    assert vanish == {1, 2}
    for r in set(range(4)) - vanish:
        assert abs(growth_fit(U, z, r, 400)) <= 0.15
