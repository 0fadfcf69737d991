"""Reduction of P_z to the canonical matrix E_{|z|} through the position morphism.

sigma_z sends a letter to the increasing word of positions (1-based) where
it occurs in z.  When every letter of z occurs r times and z has no equal
adjacent letters,

    C(q^{r-1}) . E_{|z|}(sigma_z(u)) = Z . P_z(u)(q^r)

entrywise, and likewise for the inverses.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import AdjacentRepeatedLetter, EmptyInducingWord, HypothesisViolated, NonMonomialEntry
from .parikh import canonical_matrix, parikh_inverse_closed, parikh_matrix, tri
from .polynomials import ONE, ZERO, PolyMatrix, hadamard, q_pow
from .qbinomial import qbinom
from .words import Morphism, Word, as_word, canonical_word, letter


def sigma_z(z: Word) -> Morphism:
    """Letter a -> word of the positions j with z_j = a."""
    z = as_word(z)
    if not z:
        raise EmptyInducingWord()
    images: dict = {}
    for j, a in enumerate(z, 1):
        images.setdefault(a, []).append(letter(j))
    return Morphism({a: Word(tuple(ps)) for a, ps in images.items()})


def position_word(i: int, j: int) -> Word:
    """The word i (i+1) ... j of numeric letters."""
    return Word.from_ids(range(i, j + 1))


def zc_matrices(z: Word) -> tuple[PolyMatrix, PolyMatrix]:
    """Z with Z_{i,j+1} = <sigma_z(z_i..z_j) choose i..j>, C with C_{i,j+1} = q^{s(j-i)}."""
    z = as_word(z)
    if not z:
        raise EmptyInducingWord()
    for i in range(len(z) - 1):
        if z[i] == z[i + 1]:
            raise AdjacentRepeatedLetter(i + 1)
    sigma = sigma_z(z)
    n = len(z) + 1
    zr = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    cr = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    for i in range(1, len(z) + 1):
        for j in range(i, len(z) + 1):
            entry = qbinom(sigma(z[i - 1:j]), position_word(i, j))
            if not entry.is_monomial():
                raise NonMonomialEntry(f"Z entry ({i},{j + 1}) is {entry}, not a monomial")
            zr[i - 1][j] = entry
            cr[i - 1][j] = q_pow(tri(j - i))
    return PolyMatrix(zr), PolyMatrix(cr)


def uniform_multiplicity(z: Word) -> int:
    """r such that every letter of z occurs exactly r times and there are no equal neighbours."""
    z = as_word(z)
    if not z:
        raise HypothesisViolated("z is empty")
    counts = Counter(z)
    if len(set(counts.values())) != 1:
        detail = ", ".join(f"{a}:{m}" for a, m in sorted(counts.items()))
        raise HypothesisViolated(f"letters of z do not occur equally often ({detail})")
    for i in range(len(z) - 1):
        if z[i] == z[i + 1]:
            raise HypothesisViolated(f"z has equal adjacent letters at positions {i + 1} and {i + 2}")
    return next(iter(counts.values()))


def _check_alphabet(z: Word, u: Word) -> None:
    missing = u.alphabet() - z.alphabet()
    if missing:
        raise HypothesisViolated(f"u uses letters absent from z: {''.join(sorted(map(str, missing)))}")


@dataclass(frozen=True)
class CanonicalReduction:
    r: int
    sigma: Morphism
    Z: PolyMatrix
    C: PolyMatrix
    E: PolyMatrix
    P: PolyMatrix
    direct_holds: bool
    inverse_holds: bool

    @property
    def holds(self) -> bool:
        return self.direct_holds and self.inverse_holds


def canonical_reduction(z: Word, u: Word) -> CanonicalReduction:
    """Compute both sides of the two Hadamard identities."""
    z, u = as_word(z), as_word(u)
    r = uniform_multiplicity(z)
    _check_alphabet(z, u)
    sigma = sigma_z(z)
    Z, C = zc_matrices(z)
    image = sigma(u)
    k = len(z)
    E = canonical_matrix(k, image)
    P = parikh_matrix(z, u)
    c_scaled = C.dilate(r - 1)
    direct = hadamard(c_scaled, E) == hadamard(Z, P.dilate(r))
    e_inv = parikh_inverse_closed(canonical_word(k), image)
    p_inv = parikh_inverse_closed(z, u).dilate(r)
    inverse = hadamard(c_scaled, e_inv) == hadamard(Z, p_inv)
    return CanonicalReduction(r, sigma, Z, C, E, P, direct, inverse)


def check_canonical_reduction(z: Word, u: Word) -> bool:
    return canonical_reduction(z, u).holds


def extra_property_check(z: Word, u: Word, i: int, j: int) -> bool:
    """Both factorizations of <sigma_z(u) choose i..j> (and its reversal) for 1 <= i <= j <= |z|."""
    z, u = as_word(z), as_word(u)
    r = uniform_multiplicity(z)
    _check_alphabet(z, u)
    if not 1 <= i <= j <= len(z):
        raise HypothesisViolated(f"need 1 <= i <= j <= {len(z)}, got ({i}, {j})")
    sigma = sigma_z(z)
    block = z[i - 1:j]
    pattern = position_word(i, j)
    lhs1 = qbinom(sigma(u), pattern)
    rhs1 = qbinom(sigma(block), pattern) * qbinom(u, block).dilate(r)
    lhs2 = qbinom(sigma(u).reversed(), pattern)
    rhs2 = qbinom(sigma(block).reversed(), pattern.reversed()) * qbinom(u.reversed(), block).dilate(r)
    return lhs1 == rhs1 and lhs2 == rhs2
