import pytest
from hypothesis import settings
from hypothesis import strategies as st

from qparikh import IntPoly, PolyMatrix, Word, letter
from qparikh.words import Letter

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

A, B, C = Letter(1, "a"), Letter(2, "b"), Letter(3, "c")


def poly(text: str) -> IntPoly:
    return IntPoly.parse(text)


def matrix(text: str) -> PolyMatrix:
    """Rows separated by '//' or newlines, cells by '&'."""
    rows = [r for r in text.replace("//", "\n").splitlines() if r.strip()]
    return PolyMatrix([[IntPoly.parse(c.strip()) for c in r.split("&")] for r in rows])


def words_over(alphabet, min_size=0, max_size=8):
    return st.lists(st.sampled_from(alphabet), min_size=min_size, max_size=max_size).map(
        lambda xs: Word(tuple(xs))
    )


def admissible_words(alphabet, min_size=1, max_size=5):
    """Words with no two equal neighbours."""
    return words_over(alphabet, min_size, max_size).filter(
        lambda w: all(w[i] != w[i + 1] for i in range(len(w) - 1))
    )


def polys(max_deg=12, bound=20):
    return st.lists(st.integers(-bound, bound), max_size=max_deg + 1).map(IntPoly)


AB = [A, B]
ABC = [A, B, C]
DIGITS = [letter(i) for i in range(1, 5)]


@pytest.fixture
def ab():
    return AB
