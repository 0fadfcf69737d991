"""q-binomial coefficients of words.

The DP reads u left to right and keeps one coefficient list per prefix of
v, applying the q-Pascal step

    <ua, vb> = q^{|vb|} <u, vb> + [a == b] <u, v>

in place.  :func:`qbinom_oracle` sums q^alpha over explicit occurrences and
shares no code with the DP.
"""
from __future__ import annotations

import os

from .errors import TooManyOccurrences
from .polynomials import IntPoly, reciprocal
from .words import Morphism, Word, as_word, binomial, occurrences

DEFAULT_MAX_ORACLE = 10**6


def max_oracle() -> int:
    """Enumeration guard for the oracle; QPARIKH_MAX_ORACLE overrides it."""
    return int(os.environ.get("QPARIKH_MAX_ORACLE", DEFAULT_MAX_ORACLE))


def _shift_add(target: list[int], shift: int, src: list[int] | None, cap: int | None) -> list[int]:
    """Return q^shift * target + src as a fresh list, truncated at degree cap."""
    length = len(target) + shift if target else 0
    if src:
        length = max(length, len(src))
    if cap is not None:
        length = min(length, cap + 1)
    out = [0] * length
    if target:
        for i, c in enumerate(target[: max(0, length - shift)]):
            out[i + shift] = c
    if src:
        for i, c in enumerate(src[:length]):
            out[i] += c
    return out


def qbinom_prefixes(u: Word, v: Word, max_degree: int | None = None) -> list[IntPoly]:
    """[<u, v[:k]> for k = 0..|v|], optionally truncated above ``max_degree``."""
    u, v = as_word(u), as_word(v)
    k = len(v)
    table: list[list[int]] = [[1]] + [[] for _ in range(k)]
    vl = v.letters
    for a in u:
        for m in range(k, 0, -1):
            src = table[m - 1] if vl[m - 1] == a else None
            if table[m] or src:
                table[m] = _shift_add(table[m], m, src, max_degree)
    if max_degree is not None and max_degree < 0:
        return [IntPoly() for _ in table]
    return [IntPoly(c) for c in table]


def qbinom(u: Word, v: Word, max_degree: int | None = None) -> IntPoly:
    """The q-binomial coefficient <u choose v>.

    >>> str(qbinom("abaaba", "ba"))
    'q^6+q^5+q^3+1'
    """
    return qbinom_prefixes(u, v, max_degree)[-1]


def occurrence_exponent(n: int, positions: tuple[int, ...]) -> int:
    """alpha of one occurrence: letters right of each selected one, not themselves selected."""
    k = len(positions)
    return sum((n - 1 - i) - (k - m) for m, i in enumerate(positions, 1))


def qbinom_oracle(u: Word, v: Word) -> IntPoly:
    """<u choose v> as the sum of q^alpha over every occurrence of v in u."""
    u, v = as_word(u), as_word(v)
    limit = max_oracle()
    count = binomial(u, v)
    if count > limit:
        raise TooManyOccurrences(count, limit)
    coeffs: dict[int, int] = {}
    n = len(u)
    for occ in occurrences(u, v):
        a = occurrence_exponent(n, occ)
        coeffs[a] = coeffs.get(a, 0) + 1
    if not coeffs:
        return IntPoly()
    return IntPoly([coeffs.get(i, 0) for i in range(max(coeffs) + 1)])


def qbinom_reversed(u: Word, v: Word) -> IntPoly:
    """q^{|v|(|u|-|v|)} <u choose v>(1/q), which equals <rev(u) choose rev(v)>."""
    u, v = as_word(u), as_word(v)
    if len(v) > len(u):
        return IntPoly()
    return reciprocal(qbinom(u, v), len(v) * (len(u) - len(v)))


def _compositions(word: Word):
    """Every split of a nonempty word into consecutive nonempty blocks."""
    n = len(word)
    for mask in range(1 << (n - 1)):
        blocks, start = [], 0
        for cut in range(1, n):
            if mask >> (cut - 1) & 1:
                blocks.append(word[start:cut])
                start = cut
        blocks.append(word[start:])
        yield blocks


def morphic_qbinom(phi: Morphism, w: Word, u: Word) -> IntPoly:
    """<phi(w) choose u> from the images of single letters.

    Sums, over factorizations u = u_1...u_l into nonempty blocks and over
    letters a_1 < ... < a_l picked in w, the product of <phi(a_i), u_i>
    times q to the power sum_i |u_i| (|phi(suffix of w after a_i)| - |u_{i+1}...u_l|).
    An r-uniform phi reads suffix image lengths as r times letter counts.
    """
    w, u = as_word(w), as_word(u)
    if not isinstance(phi, Morphism):
        phi = Morphism(phi)
    if not u:
        return IntPoly([1])
    n = len(w)
    r = phi.uniform
    if r is not None:
        tail = [r * (n - 1 - p) for p in range(n)]
    else:
        tail = [0] * n
        acc = 0
        for p in range(n - 1, -1, -1):
            tail[p] = acc
            acc += len(phi.image(w[p]))
    # block-level q-binomials depend only on (letter, block); cache them
    cache: dict = {}

    def block(a, piece: Word) -> IntPoly:
        key = (a, piece.letters)
        if key not in cache:
            cache[key] = qbinom(phi.image(a), piece)
        return cache[key]

    total = IntPoly()
    for blocks in _compositions(u):
        total = total + _place_blocks(w, blocks, tail, block)
    return total


def _place_blocks(w: Word, blocks: list[Word], tail: list[int], block) -> IntPoly:
    """Sum over increasing positions p_1 < ... < p_l of w carrying the blocks."""
    l = len(blocks)
    right = [0] * (l + 1)
    for i in range(l - 1, -1, -1):
        right[i] = right[i + 1] + len(blocks[i])
    n = len(w)
    # suffix DP: f[i][p] = contribution of blocks i.. placed at positions >= p
    nxt = [IntPoly([1])] * (n + 1)
    for i in range(l - 1, -1, -1):
        cur = [IntPoly()] * (n + 1)
        size = len(blocks[i])
        for p in range(n - 1, -1, -1):
            acc = cur[p + 1]
            rest = nxt[p + 1]
            if rest:
                b = block(w[p], blocks[i])
                if b:
                    acc = acc + (b * rest).shift(size * (tail[p] - right[i + 1]))
            cur[p] = acc
        nxt = cur
    return nxt[0]
