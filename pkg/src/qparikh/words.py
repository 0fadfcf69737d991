"""Letters, finite words, left-infinite streams and morphisms.

Words are stored left to right.  The brute-force :func:`occurrences`
enumerator lives here because every oracle in the package is built on it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple

from .errors import EmptyPeriod, ErasingMorphism, UnknownCharacter

# Numeric letters display as 0-9 then A-Z (ids 0..35); lowercase a-z are a
# separate family with ids 1..26.
_NUMERIC_DISPLAY = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"


class Letter(NamedTuple):
    id: int
    display: str

    def __str__(self):
        return self.display


def letter(n: int) -> Letter:
    """The numeric letter with id ``n`` (``letter(3)`` displays as ``'3'``)."""
    if not 0 <= n < len(_NUMERIC_DISPLAY):
        raise ValueError(f"numeric letter id {n} out of range 0..35")
    return Letter(n, _NUMERIC_DISPLAY[n])


def _canonical_letter(ch: str) -> Letter | None:
    if "a" <= ch <= "z":
        return Letter(ord(ch) - ord("a") + 1, ch)
    idx = _NUMERIC_DISPLAY.find(ch)
    if idx >= 0 and ch:
        return Letter(idx, ch)
    return None


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index])
        return self.letters[index]

    def __add__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def __mul__(self, n: int) -> Word:
        return word_power(self, n)

    def __str__(self):
        return "".join(a.display for a in self.letters)

    def __repr__(self):
        return f"Word({str(self)!r})"

    def reversed(self) -> Word:
        return Word(self.letters[::-1])

    def alphabet(self) -> frozenset[Letter]:
        return frozenset(self.letters)

    def count(self, a: Letter) -> int:
        return self.letters.count(a)

    @classmethod
    def from_ids(cls, ids: Iterable[int]) -> Word:
        return cls(tuple(letter(i) for i in ids))


EMPTY = Word()


def parse_word(text: str, alphabet: Iterable[Letter] | None = None) -> Word:
    """Parse ``text`` into a :class:`Word`.

    Without an alphabet, digits and ``A``-``Z`` map to numeric letters and
    ``a``-``z`` to the lowercase family.  With an alphabet, each character
    must be the display of one of its letters.
    """
    if alphabet is not None:
        table = {a.display: a for a in alphabet}
        lookup = table.get
    else:
        lookup = _canonical_letter
    out = []
    for pos, ch in enumerate(text):
        a = lookup(ch)
        if a is None:
            raise UnknownCharacter(pos, ch)
        out.append(a)
    return Word(tuple(out))


def as_word(w) -> Word:
    """Accept a Word or a string; convenience for the public API."""
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return parse_word(w)
    return Word(tuple(w))


def reverse_word(u: Word) -> Word:
    return as_word(u).reversed()


def word_power(u: Word, n: int) -> Word:
    if n < 0:
        raise ValueError("word power needs n >= 0")
    return Word(as_word(u).letters * n)


def canonical_word(k: int) -> Word:
    """The word 12...k of pairwise distinct numeric letters."""
    return Word.from_ids(range(1, k + 1))


@dataclass(frozen=True)
class LeftInfiniteWord:
    """A stream ``... x_2 x_1 x_0``; ``letter_at(i)`` is x_i, counted from the right."""

    letter_at: Callable[[int], Letter] = field(compare=False)
    kind: str = "custom"
    period: Word | None = None

    def prefix(self, n: int) -> Word:
        """The length-``n`` prefix x_{n-1} ... x_0 as an ordinary word."""
        return Word(tuple(self.letter_at(i) for i in range(n - 1, -1, -1)))

    def __str__(self):
        if self.kind == "periodic":
            return f"periodic:{self.period}"
        return self.kind


def _thue_morse_letter(i: int) -> Letter:
    return letter(i.bit_count() & 1) if hasattr(i, "bit_count") else letter(bin(i).count("1") & 1)


def make_stream(kind: str, parameter=None) -> LeftInfiniteWord:
    """Build a left-infinite word.

    ``kind`` is ``"periodic"`` (parameter: the period word), ``"thue_morse"``
    or ``"custom"`` (parameter: a callable ``i -> Letter``).
    """
    kind = kind.replace("-", "_")
    if kind == "periodic":
        u = as_word(parameter)
        if not u:
            raise EmptyPeriod()
        n = len(u)
        letters = u.letters
        return LeftInfiniteWord(lambda i: letters[n - 1 - i % n], "periodic", u)
    if kind == "thue_morse":
        return LeftInfiniteWord(_thue_morse_letter, "thue-morse")
    if kind == "custom":
        if not callable(parameter):
            raise ValueError("custom stream needs a callable letter_at")
        return LeftInfiniteWord(parameter, "custom")
    raise ValueError(f"unknown stream kind {kind!r}")


def parse_stream(text: str) -> LeftInfiniteWord:
    """``periodic:<word>`` or ``thue-morse``."""
    if text in ("thue-morse", "thue_morse"):
        return make_stream("thue_morse")
    if text.startswith("periodic:"):
        return make_stream("periodic", parse_word(text[len("periodic:"):]))
    raise ValueError(f"unknown stream {text!r}; expected periodic:<word> or thue-morse")


@dataclass(frozen=True)
class Morphism:
    images: Mapping[Letter, Word]

    def __post_init__(self):
        images = {a: as_word(w) for a, w in dict(self.images).items()}
        for a, w in images.items():
            if not w:
                raise ErasingMorphism(a)
        object.__setattr__(self, "images", images)

    def __call__(self, w: Word) -> Word:
        return self.apply(w)

    def __hash__(self):
        return hash(tuple(sorted(self.images.items())))

    def apply(self, w: Word) -> Word:
        out: list[Letter] = []
        for a in as_word(w):
            out.extend(self.images[a].letters)
        return Word(tuple(out))

    def image(self, a: Letter) -> Word:
        return self.images[a]

    @property
    def uniform(self) -> int | None:
        """r when every image has length r, else None."""
        lengths = {len(w) for w in self.images.values()}
        return lengths.pop() if len(lengths) == 1 else None

    def __str__(self):
        return ", ".join(f"{a}->{w}" for a, w in sorted(self.images.items()))


def occurrences(u: Word, v: Word) -> list[tuple[int, ...]]:
    """All index tuples i_1 < ... < i_k (0-based) with u[i_m] == v[m].

    Depth-first over per-letter position lists; meant as an oracle, the
    output itself can be exponential in |v|.
    """
    u, v = as_word(u), as_word(v)
    k = len(v)
    if k == 0:
        return [()]
    positions: dict[Letter, list[int]] = {}
    for i, a in enumerate(u):
        positions.setdefault(a, []).append(i)
    n = len(u)
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def extend(m: int, start: int):
        if m == k:
            out.append(tuple(chosen))
            return
        # leave room for the remaining k - m - 1 letters
        limit = n - (k - m - 1)
        for p in positions.get(v[m], ()):
            if p < start:
                continue
            if p >= limit:
                break
            chosen.append(p)
            extend(m + 1, p + 1)
            chosen.pop()

    extend(0, 0)
    return out


def binomial(u: Word, v: Word) -> int:
    """Classical binomial coefficient of words, by the standard counting DP."""
    u, v = as_word(u), as_word(v)
    counts = [1] + [0] * len(v)
    for a in u:
        for k in range(len(v), 0, -1):
            if v[k - 1] == a:
                counts[k] += counts[k - 1]
    return counts[len(v)]
