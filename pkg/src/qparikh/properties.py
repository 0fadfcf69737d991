"""Seeded randomized property checks behind ``qparikh verify``.

Each check draws its own inputs from a ``random.Random`` and returns
``None`` on success or a string describing the first counterexample.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Callable

from . import parikh, polynomials, qbinomial, series, words
from .morphism_reduction import check_canonical_reduction, extra_property_check
from .polynomials import IntPoly, PolyMatrix
from .words import Morphism, Word, letter

AB = [words.Letter(1, "a"), words.Letter(2, "b")]
ABC = AB + [words.Letter(3, "c")]
DIGITS = [letter(i) for i in range(1, 5)]


def random_word(rng: random.Random, alphabet, max_len: int, min_len: int = 0) -> Word:
    return Word(tuple(rng.choice(alphabet) for _ in range(rng.randint(min_len, max_len))))


def random_admissible(rng: random.Random, alphabet, max_len: int, min_len: int = 1) -> Word:
    """Random word without equal adjacent letters."""
    n = rng.randint(min_len, max_len)
    out = []
    for _ in range(n):
        out.append(rng.choice([a for a in alphabet if not out or a != out[-1]]))
    return Word(tuple(out))


def random_poly(rng: random.Random, max_deg: int, bound: int = 5) -> IntPoly:
    return IntPoly([rng.randint(-bound, bound) for _ in range(rng.randint(0, max_deg + 1))])


def random_unitriangular(rng: random.Random, n: int, max_deg: int) -> PolyMatrix:
    return PolyMatrix(
        [[1 if i == j else (random_poly(rng, max_deg) if j > i else 0) for j in range(n)] for i in range(n)]
    )


def det_by_permutations(m: PolyMatrix, rows, cols) -> IntPoly:
    """Leibniz formula; the independent oracle for minor_det."""
    k = len(rows)
    total = IntPoly()
    for perm in permutations(range(k)):
        inversions = sum(1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b])
        term = IntPoly([1])
        for a in range(k):
            term = term * m[rows[a], cols[perm[a]]]
        total = total + term if inversions % 2 == 0 else total - term
    return total


# individual checks ---------------------------------------------------------

def check_occurrence_count(rng, trials=500):
    for _ in range(trials):
        u, v = random_word(rng, ABC, 12), random_word(rng, ABC, 4)
        if len(words.occurrences(u, v)) != words.binomial(u, v):
            return f"occurrence count mismatch for u={u}, v={v}"


def check_oracle(rng, trials=500):
    for _ in range(trials):
        u, v = random_word(rng, ABC, 10), random_word(rng, ABC, 4)
        p = qbinomial.qbinom(u, v)
        if p != qbinomial.qbinom_oracle(u, v):
            return f"DP and oracle disagree for u={u}, v={v}"
        if p.at_one() != words.binomial(u, v):
            return f"q=1 value wrong for u={u}, v={v}"
        if len(v) <= len(u) and p.degree > len(v) * (len(u) - len(v)):
            return f"degree bound fails for u={u}, v={v}"


def check_reversal(rng, trials=300):
    for _ in range(trials):
        u, v = random_word(rng, ABC, 10), random_word(rng, ABC, 4)
        if qbinomial.qbinom_reversed(u, v) != qbinomial.qbinom(u.reversed(), v.reversed()):
            return f"reversal identity fails for u={u}, v={v}"


def check_prepend(rng, trials=300):
    for _ in range(trials):
        w = random_word(rng, ABC, 8)
        vp = random_word(rng, ABC, min(3, len(w)))
        d = rng.choice(ABC)
        dw, dv = Word((d,)) + w, Word((d,)) + vp
        rhs = qbinomial.qbinom(w, dv) + qbinomial.qbinom(w, vp).shift(len(w) - len(vp))
        if qbinomial.qbinom(dw, dv) != rhs:
            return f"prepend recurrence fails for d={d}, w={w}, v'={vp}"


def check_morphic(rng, trials=150):
    for _ in range(trials):
        phi = Morphism({a: random_word(rng, AB, 3, 1) for a in AB})
        w, u = random_word(rng, AB, 5), random_word(rng, AB, 3)
        if qbinomial.morphic_qbinom(phi, w, u) != qbinomial.qbinom(phi(w), u):
            return f"morphic formula fails for phi=({phi}), w={w}, u={u}"


def check_parikh_closed(rng, trials=100):
    for _ in range(trials):
        z, w = random_word(rng, DIGITS, 6, 1), random_word(rng, DIGITS, 8)
        if parikh.parikh_matrix(z, w) != parikh.parikh_matrix_closed(z, w):
            return f"product and closed form differ for z={z}, w={w}"


def check_inverses(rng, trials=80):
    for _ in range(trials):
        z, u = random_admissible(rng, DIGITS[:3], 5), random_word(rng, DIGITS[:3], 7)
        p = parikh.parikh_matrix(z, u)
        closed = parikh.parikh_inverse_closed(z, u)
        if closed @ p != PolyMatrix.identity(p.n) or p @ closed != PolyMatrix.identity(p.n):
            return f"closed inverse is not an inverse for z={z}, u={u}"
        if closed != parikh.parikh_inverse_reversal(z, u):
            return f"closed and reversal inverses differ for z={z}, u={u}"
        if closed != polynomials.unitriangular_inverse(p):
            return f"closed inverse differs from back-substitution for z={z}, u={u}"


def check_duality(rng, trials=100):
    for _ in range(trials):
        z, u = random_word(rng, DIGITS[:3], 5, 1), random_word(rng, DIGITS[:3], 7)
        if not parikh.reverse_duality_check(z, u):
            return f"reverse duality fails for z={z}, u={u}"


def check_cancellation(rng, trials=500):
    for _ in range(trials):
        z, u = random_admissible(rng, DIGITS[:3], 5), random_word(rng, DIGITS[:3], 8)
        if parikh.cancellation_identity(z, u):
            return f"cancellation identity nonzero for z={z}, u={u}"


def check_minors(rng, trials=20):
    for _ in range(trials):
        z, u = random_word(rng, AB, 4, 2), random_word(rng, AB, 6)
        p = parikh.parikh_matrix(z, u)
        for size in range(1, min(4, p.n) + 1):
            for rows, cols, det in p.minors(size):
                if not det.is_nonnegative():
                    return f"negative coefficient in minor {rows}x{cols} of P_{z}({u})"


def check_cauchy(rng, trials=500):
    for _ in range(trials):
        u = random_word(rng, AB, 7)
        v, w, x = (random_word(rng, AB, 2) for _ in range(3))
        if not parikh.cauchy_minor(u, v, w, x).is_nonnegative():
            return f"cauchy minor negative for u={u}, v={v}, w={w}, x={x}"
        a, b, c = (random_word(rng, AB, 3) for _ in range(3))
        ww = random_word(rng, AB, 3)
        if not parikh.cauchy_dual(a, b, c, ww).is_nonnegative():
            return f"cauchy dual negative for x={a}, y={b}, z={c}, w={ww}"


def check_injectivity(rng, trials=100):
    for _ in range(trials):
        z = random_word(rng, DIGITS[:3], 5, 1)
        w = random_word(rng, sorted(z.alphabet()), 8)
        if parikh.decode_second_diagonal(z, parikh.parikh_matrix(z, w)) != w:
            return f"second diagonal does not decode back for z={z}, w={w}"


def check_stabilization(rng, trials=60):
    for _ in range(trials):
        u = random_word(rng, AB, 4, 1)
        z = random_word(rng, AB, 3, 1)
        x = words.make_stream("periodic", u)
        order = 20
        a = qbinomial.qbinom(x.prefix(order + len(z)), z).truncate(order)
        b = qbinomial.qbinom(x.prefix(order + len(z) + 7), z).truncate(order)
        if a != b:
            return f"coefficients not stable for u={u}, z={z}"


def check_closed_form(rng, trials=40):
    for _ in range(trials):
        u, z = random_word(rng, AB, 4, 1), random_word(rng, AB, 3, 1)
        cf = series.periodic_closed_form(u, z)
        seq = [qbinomial.qbinom(words.word_power(u, n), z) for n in range(7)]
        if [series.closed_form_eval(cf, n) for n in range(7)] != seq:
            return f"closed form evaluation wrong for u={u}, z={z}"
        rec = series.recurrence_polynomial(cf)
        if not rec.holds_on(seq + [qbinomial.qbinom(words.word_power(u, n), z) for n in range(7, rec.order + 5)]):
            return f"polynomial recurrence fails for u={u}, z={z}"
        irec, terms = series.recurrence_integer(u, z)
        if not irec.holds_on(terms):
            return f"integer recurrence fails for u={u}, z={z}"
        lim = series.limit_series(cf, 40)
        direct = series.series_coefficients(words.make_stream("periodic", u), z, 40)
        if lim != direct:
            return f"limit rational disagrees with prefix series for u={u}, z={z}"
        crec = series.coefficient_recurrence(cf)
        if not crec.holds_on(list(series.limit_series(cf, 120))):
            return f"coefficient recurrence fails for u={u}, z={z}"


def check_residues(rng, trials=40):
    for _ in range(trials):
        u = random_word(rng, AB, 5, 1)
        z = random_word(rng, sorted(u.alphabet()), 3, 1)
        vanish = series.vanishing_residues(u, z)
        L = len(u)
        cut = series.residue_cutoff(u, z)
        order = cut + 20 * L + 40
        coeffs = series.series_coefficients(words.make_stream("periodic", u), z, order)
        for n in range(cut, order + 1):
            if (n % L in vanish) != (coeffs[n] == 0):
                return f"residue dichotomy fails at n={n} for u={u}, z={z}"


def check_reduction(rng, trials=20):
    base = [letter(1), letter(2)]
    for _ in range(trials):
        # words of length 4 over {1,2}, each letter twice, no equal neighbours
        z = Word(tuple(rng.choice([(base[0], base[1]) * 2, (base[1], base[0]) * 2])))
        u = random_word(rng, base, 6)
        if not check_canonical_reduction(z, u):
            return f"canonical reduction fails for z={z}, u={u}"
        for i in range(1, len(z) + 1):
            for j in range(i, len(z) + 1):
                if not extra_property_check(z, u, i, j):
                    return f"factorization fails at ({i},{j}) for z={z}, u={u}"


def check_kernels(rng, trials=100):
    for _ in range(trials):
        a = random_poly(rng, 80, 10**rng.randint(1, 30)).coeffs or (0,)
        b = random_poly(rng, 80, 10**rng.randint(1, 30)).coeffs or (0,)
        if IntPoly(polynomials._kronecker(a, b)) != IntPoly(polynomials._schoolbook(a, b)):
            return f"Kronecker product disagrees with schoolbook on degrees {len(a) - 1}, {len(b) - 1}"
        a = IntPoly(a)
        d = a.degree + rng.randint(0, 5)
        if a and polynomials.reciprocal(polynomials.reciprocal(a, d), d) != a:
            return f"reciprocal is not an involution on {a}"
    for _ in range(20):
        m = random_unitriangular(rng, rng.randint(1, 7), 6)
        inv = polynomials.unitriangular_inverse(m)
        eye = PolyMatrix.identity(m.n)
        if m @ inv != eye or inv @ m != eye:
            return "unitriangular inverse fails"
    for _ in range(10):
        m = PolyMatrix([[random_poly(rng, 3) for _ in range(4)] for _ in range(4)])
        if polynomials.minor_det(m, range(4), range(4)) != det_by_permutations(m, range(4), range(4)):
            return "Laplace determinant disagrees with Leibniz formula"


@dataclass(frozen=True)
class Property:
    name: str
    check: Callable


PROPERTIES = [
    Property("occurrence-count", check_occurrence_count),
    Property("qbinom-oracle", check_oracle),
    Property("qbinom-reversal", check_reversal),
    Property("prepend-recurrence", check_prepend),
    Property("morphic-formula", check_morphic),
    Property("parikh-closed-form", check_parikh_closed),
    Property("parikh-inverses", check_inverses),
    Property("reverse-duality", check_duality),
    Property("cancellation-identity", check_cancellation),
    Property("minor-nonnegativity", check_minors),
    Property("cauchy-nonnegativity", check_cauchy),
    Property("second-diagonal-injectivity", check_injectivity),
    Property("series-stabilization", check_stabilization),
    Property("periodic-closed-form", check_closed_form),
    Property("vanishing-residues", check_residues),
    Property("canonical-reduction", check_reduction),
    Property("polynomial-kernels", check_kernels),
]


def run_all(seed: int = 0, names=None) -> list[tuple[str, str | None]]:
    """Run the checks in a fixed order; each gets a generator seeded from (seed, name)."""
    results = []
    for prop in PROPERTIES:
        if names and prop.name not in names:
            continue
        rng = random.Random(f"{seed}:{prop.name}")
        try:
            failure = prop.check(rng)
        except Exception as err:  # a crash is a failed property, reported not raised
            failure = f"{type(err).__name__}: {err}"
        results.append((prop.name, failure))
    return results
