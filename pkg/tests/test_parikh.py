import pytest
from hypothesis import given
from hypothesis import strategies as st

from qparikh import (
    PolyMatrix,
    atomic_matrix,
    cancellation_identity,
    cauchy_dual,
    cauchy_minor,
    minor_det,
    parikh_inverse_closed,
    parikh_inverse_reversal,
    parikh_matrix,
    parikh_matrix_closed,
    qbinom,
    reverse_duality_check,
    unitriangular_inverse,
)
from qparikh.errors import AdjacentRepeatedLetter, EmptyInducingWord
from qparikh.parikh import (
    decode_second_diagonal,
    first_relation,
    parikh_inverse,
    parikh_matrix_by_product,
    three_letter_relation,
)
from qparikh.words import letter, parse_word

from conftest import AB, ABC, DIGITS, admissible_words, matrix, poly, words_over


def test_atomic_matrix():
    m = atomic_matrix("12231", letter(2), 3)
    assert m[1, 2] == poly("q^3") and m[2, 3] == poly("q^3")
    assert m[0, 1] == 0


def test_single_letter_classic_case():
    assert parikh_matrix("ab", "ab") == matrix("1 & q & q // 0 & 1 & 1 // 0 & 0 & 1")


@given(admissible_words(DIGITS, 1, 5) | words_over(DIGITS, 1, 5), words_over(DIGITS, max_size=8))
def test_three_constructions_agree(z, w):
    m = parikh_matrix(z, w)
    assert m == parikh_matrix_closed(z, w)
    assert m == parikh_matrix_by_product(z, w)
    assert m.is_unitriangular()


@given(words_over(DIGITS[:3], 1, 4), words_over(DIGITS[:3], max_size=5), words_over(DIGITS[:3], max_size=5))
def test_concatenation_splits_the_product(z, u, v):
    # P_z(uv) = P_z(u) with its r-th diagonal multiplied by q^(r|v|), times P_z(v)
    pu = parikh_matrix(z, u)
    shifted = PolyMatrix([[pu[i, j].shift((j - i) * len(v)) for j in range(pu.n)] for i in range(pu.n)])
    assert parikh_matrix(z, u + v) == shifted @ parikh_matrix(z, v)


@given(admissible_words(DIGITS[:3], 1, 5), words_over(DIGITS[:3], max_size=8))
def test_inverse_formulas(z, u):
    p = parikh_matrix(z, u)
    inv = parikh_inverse_closed(z, u)
    eye = PolyMatrix.identity(p.n)
    assert inv @ p == eye and p @ inv == eye
    assert inv == parikh_inverse_reversal(z, u) == unitriangular_inverse(p)


def test_inverse_requires_distinct_neighbours():
    with pytest.raises(AdjacentRepeatedLetter) as err:
        parikh_inverse_closed("1223", "12")
    assert err.value.position == 2
    p = parikh_matrix("1223", "1223")
    assert parikh_inverse("1223", "1223") @ p == PolyMatrix.identity(5)


@given(words_over(DIGITS[:3], 1, 5), words_over(DIGITS[:3], max_size=8))
def test_reverse_duality(z, u):
    assert reverse_duality_check(z, u)


@given(words_over(DIGITS[:3], 1, 5), st.data())
def test_second_diagonal_decodes_the_word(z, data):
    w = data.draw(words_over(sorted(z.alphabet()), max_size=10))
    assert decode_second_diagonal(z, parikh_matrix(z, w)) == w


@given(admissible_words(DIGITS, 1, 5), words_over(DIGITS, max_size=8))
def test_cancellation_identity(z, u):
    assert not cancellation_identity(z, u)


def test_cancellation_needs_admissible_word():
    with pytest.raises(AdjacentRepeatedLetter):
        cancellation_identity("11", "1")


@given(words_over(ABC, max_size=8))
def test_two_and_three_letter_relations(u):
    a, b, c = ABC
    lhs, rhs = first_relation(u, a, b)
    assert lhs == rhs
    for x, y, zz in [(a, b, c), (a, b, a), (c, b, a)]:
        lhs, rhs = three_letter_relation(u, x, y, zz)
        assert lhs == rhs


def test_cauchy_minor_example():
    assert cauchy_minor("ababba", "b", "b", "a") == poly("q^{13}+q^{12}+q^{10}")


@given(words_over(AB, max_size=8), words_over(AB, max_size=3), words_over(AB, max_size=3), words_over(AB, max_size=3))
def test_cauchy_minor_is_a_minor_and_nonnegative(u, v, w, x):
    value = cauchy_minor(u, v, w, x)
    assert value.is_nonnegative()
    if v and w and x:
        p = parikh_matrix(v + w + x, u)
        i, j = len(v), len(v) + len(w)
        assert value == minor_det(p, [0, i], [j, p.n - 1])


@given(*(words_over(AB, max_size=4) for _ in range(4)))
def test_cauchy_dual_nonnegative(x, y, zz, w):
    assert cauchy_dual(x, y, zz, w).is_nonnegative()


@pytest.mark.parametrize("z,u", [("ab", "abba"), ("aba", "babab"), ("abab", "aabb"), ("1213", "3121")])
def test_all_minors_nonnegative(z, u):
    p = parikh_matrix(parse_word(z), parse_word(u))
    for size in range(1, p.n + 1):
        for _, _, det in p.minors(size):
            assert det.is_nonnegative()


def test_entries_are_shifted_qbinomials():
    z, w = parse_word("12231"), parse_word("1212312")
    p = parikh_matrix(z, w)
    assert p[0, 3] == qbinom(w, z[0:3]).shift(3)


def test_empty_inducing_word():
    with pytest.raises(EmptyInducingWord):
        parikh_matrix("", "1")


def test_canonical_matrix_is_induced_by_increasing_word():
    from qparikh import canonical_matrix, egecioglu_matrix

    w = parse_word("2131")
    assert canonical_matrix(3, w) == parikh_matrix("123", w)
    assert egecioglu_matrix is canonical_matrix
