"""q-Parikh matrices induced by a word z.

Matrices are (|z|+1)-dimensional and 0-indexed here; docstrings use the
1-based positions of the mathematical statements.  Letters of w that do
not occur in z act as the identity.
"""
from __future__ import annotations

from .errors import AdjacentRepeatedLetter, EmptyInducingWord
from .polynomials import ONE, ZERO, IntPoly, PolyMatrix, antitranspose, hadamard, q_pow, reciprocal
from .qbinomial import qbinom, qbinom_prefixes
from .words import Letter, Word, as_word, canonical_word


def tri(r: int) -> int:
    """r(r+1)/2, with tri(-1) = 0."""
    return r * (r + 1) // 2


def check_no_adjacent_repeats(z: Word) -> None:
    for i in range(len(z) - 1):
        if z[i] == z[i + 1]:
            raise AdjacentRepeatedLetter(i + 1)


def has_adjacent_repeats(z: Word) -> bool:
    return any(z[i] == z[i + 1] for i in range(len(z) - 1))


def atomic_matrix(z: Word, d: Letter, j: int) -> PolyMatrix:
    """M_{d,j}: identity plus q^j at (i, i+1) for every i with z_i = d."""
    z = as_word(z)
    n = len(z) + 1
    rows = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    for i, a in enumerate(z):
        if a == d:
            rows[i][i + 1] = q_pow(j)
    return PolyMatrix(rows)


def parikh_matrix(z: Word, w: Word) -> PolyMatrix:
    """P_z(w) = M_{w[0], n-1} ... M_{w[n-1], 0} for w of length n.

    Built right to left: left-multiplying by M_{d,j} adds q^j times row
    i+1 to row i wherever z_i = d.  Rows are updated in increasing order so
    each reads its successor before that one changes.
    """
    z, w = as_word(z), as_word(w)
    if not z:
        raise EmptyInducingWord()
    n = len(z) + 1
    rows = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    where: dict[Letter, list[int]] = {}
    for i, a in enumerate(z):
        where.setdefault(a, []).append(i)
    m = len(w)
    for pos in range(m - 1, -1, -1):
        j = m - 1 - pos
        for i in where.get(w[pos], ()):
            below = rows[i + 1]
            rows[i] = [x + y.shift(j) if y else x for x, y in zip(rows[i], below)]
    return PolyMatrix(rows)


def parikh_matrix_by_product(z: Word, w: Word) -> PolyMatrix:
    """Literal product of atomic matrices; slow, kept as a cross-check."""
    z, w = as_word(z), as_word(w)
    if not z:
        raise EmptyInducingWord()
    m = len(w)
    result = PolyMatrix.identity(len(z) + 1)
    for pos, d in enumerate(w):
        result = result @ atomic_matrix(z, d, m - 1 - pos)
    return result


def parikh_matrix_closed(z: Word, w: Word) -> PolyMatrix:
    """Entry (i, i+r) = q^{s(r-1)} <w choose z_i ... z_{i+r-1}>, straight from q-binomials."""
    z, w = as_word(z), as_word(w)
    if not z:
        raise EmptyInducingWord()
    n = len(z) + 1
    rows = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    for i in range(len(z)):
        prefixes = qbinom_prefixes(w, z[i:])
        for r in range(1, len(z) - i + 1):
            rows[i][i + r] = prefixes[r].shift(tri(r - 1))
    return PolyMatrix(rows)


def canonical_matrix(k: int, w: Word) -> PolyMatrix:
    """E_k(w): the q-Parikh matrix induced by 12...k."""
    return parikh_matrix(canonical_word(k), w)


egecioglu_matrix = canonical_matrix


def parikh_inverse_closed(z: Word, u: Word) -> PolyMatrix:
    """Inverse of P_z(u) from the matrix of the reversed word.

    N_{i,j} = (-1)^{i+j} q^{(j-i)(|u|-1)} M_{i,j}(1/q) with M = P_z(rev u);
    needs z without equal adjacent letters.
    """
    z, u = as_word(z), as_word(u)
    if not z:
        raise EmptyInducingWord()
    check_no_adjacent_repeats(z)
    n = len(z) + 1
    if not u:
        return PolyMatrix.identity(n)
    m = parikh_matrix(z, u.reversed())
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = ONE
        for j in range(i + 1, n):
            entry = reciprocal(m[i, j], (j - i) * (len(u) - 1))
            rows[i][j] = entry if (i + j) % 2 == 0 else -entry
    return PolyMatrix(rows)


def parikh_inverse_reversal(z: Word, u: Word) -> PolyMatrix:
    """Inverse of P_z(u) as checkerboard signs times the antitranspose of P_{rev z}(u)."""
    z, u = as_word(z), as_word(u)
    if not z:
        raise EmptyInducingWord()
    check_no_adjacent_repeats(z)
    r = parikh_matrix(z.reversed(), u)
    return hadamard(PolyMatrix.checkerboard(r.n), antitranspose(r))


def parikh_inverse(z: Word, u: Word) -> PolyMatrix:
    """Closed-form inverse when z allows it, exact back-substitution otherwise."""
    from .polynomials import unitriangular_inverse

    z = as_word(z)
    if has_adjacent_repeats(z):
        return unitriangular_inverse(parikh_matrix(z, u))
    return parikh_inverse_closed(z, u)


def reverse_duality_check(z: Word, u: Word) -> bool:
    """[P_z(rev u)]_{i,j} == q^{(j-i)(|u|-1)} [P_{rev z}(u)]_{l+2-j, l+2-i}(1/q) for all i <= j."""
    z, u = as_word(z), as_word(u)
    if not z:
        raise EmptyInducingWord()
    if not u:
        return True
    left = parikh_matrix(z, u.reversed())
    right = parikh_matrix(z.reversed(), u)
    n = left.n
    for i in range(n):
        for j in range(i, n):
            mirrored = right[n - 1 - j, n - 1 - i]
            window = (j - i) * (len(u) - 1)
            if mirrored.degree > window or left[i, j] != reciprocal(mirrored, window):
                return False
    return True


def decode_second_diagonal(z: Word, p: PolyMatrix) -> Word:
    """Recover w from P_z(w): q^j in the entry of letter d puts d at index j from the right.

    Only letters occurring in z can be recovered.
    """
    z = as_word(z)
    placed: dict[int, Letter] = {}
    seen = set()
    for i, d in enumerate(z):
        if d in seen:
            continue
        seen.add(d)
        for j, c in enumerate(p[i, i + 1].coeffs):
            if c:
                placed[j] = d
    if not placed:
        return Word()
    length = max(placed) + 1
    if len(placed) != length:
        raise ValueError("second diagonal does not describe a word over the alphabet of z")
    return Word(tuple(placed[j] for j in range(length - 1, -1, -1)))


def cancellation_identity(z: Word, u: Word) -> IntPoly:
    """sum over z = xy of (-1)^{|y|} q^{s(|x|-1)+s(|y|-1)} <u,x><u,rev y>; always zero."""
    z, u = as_word(z), as_word(u)
    if not z:
        raise EmptyInducingWord()
    check_no_adjacent_repeats(z)
    n = len(z)
    forward = qbinom_prefixes(u, z)
    backward = qbinom_prefixes(u, z.reversed())
    total = ZERO
    for i in range(n + 1):
        y_len = n - i
        term = (forward[i] * backward[y_len]).shift(tri(i - 1) + tri(y_len - 1))
        total = total - term if y_len % 2 else total + term
    return total


def first_relation(u: Word, a: Letter, b: Letter) -> tuple[IntPoly, IntPoly]:
    """Both sides of q(<u,ab> + <u,ba>) = <u,a><u,b> for letters a != b."""
    u = as_word(u)
    ab, ba = Word((a, b)), Word((b, a))
    lhs = (qbinom(u, ab) + qbinom(u, ba)).shift(1)
    rhs = qbinom(u, Word((a,))) * qbinom(u, Word((b,)))
    return lhs, rhs


def three_letter_relation(u: Word, a: Letter, b: Letter, c: Letter) -> tuple[IntPoly, IntPoly]:
    """Both sides of <u,a><u,cb> + q^2<u,abc> = <u,c><u,ab> + q^2<u,cba>, for a != b != c."""
    u = as_word(u)

    def qb(*letters):
        return qbinom(u, Word(letters))

    lhs = qb(a) * qb(c, b) + qb(a, b, c).shift(2)
    rhs = qb(c) * qb(a, b) + qb(c, b, a).shift(2)
    return lhs, rhs


def cauchy_minor(u: Word, v: Word, w: Word, x: Word) -> IntPoly:
    """The 2x2 minor of P_{vwx}(u) on rows (v, w) and columns ending after w and x."""
    u, v, w, x = map(as_word, (u, v, w, x))
    vw, wx, vwx = v + w, w + x, v + w + x
    first = (qbinom(u, vw) * qbinom(u, wx)).shift(tri(len(vw) - 1) + tri(len(wx) - 1))
    second = (qbinom(u, w) * qbinom(u, vwx)).shift(tri(len(w) - 1) + tri(len(vwx) - 1))
    return first - second


def cauchy_dual(x: Word, y: Word, z: Word, w: Word) -> IntPoly:
    """<xy,w><yz,w> - <xyz,w><y,w>."""
    x, y, z, w = map(as_word, (x, y, z, w))
    return qbinom(x + y, w) * qbinom(y + z, w) - qbinom(x + y + z, w) * qbinom(y, w)
