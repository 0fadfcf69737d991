"""Limit series of prefix q-binomials and the periodic case in closed form.

For a left-infinite word x the coefficient of q^r in <p_n choose z> is
frozen once n >= r + |z| - 1, which defines the series s_{x,z}.  For
x = ...uuu the polynomials <u^n choose z> are finite sums of geometric
partial sums in q^{c|u|}; :func:`periodic_closed_form` builds that sum,
from which the polynomial recurrence, the rational limit and its
coefficient recurrence follow.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import AllZeroClass, LetterAbsent, NonExactDivision
from .parikh import parikh_matrix, tri
from .polynomials import (
    ONE,
    ZERO,
    FactoredRational,
    IntPoly,
    IntRecurrence,
    PolyMatrix,
    Recurrence,
    TruncatedSeries,
    hadamard,
    one_minus_q_pow,
    q_pow,
    series_expand,
)
from .qbinomial import qbinom
from .words import LeftInfiniteWord, Word, as_word, binomial, make_stream, word_power


def series_coefficients(x: LeftInfiniteWord, z: Word, order: int) -> TruncatedSeries:
    """c_0..c_order of s_{x,z}, read off <p_{order+|z|} choose z>."""
    z = as_word(z)
    if not z:
        raise ValueError("z must be nonempty")
    prefix = x.prefix(order + len(z))
    return TruncatedSeries.from_poly(qbinom(prefix, z, max_degree=order), order)


def pow_matrix(z: Word, k: int) -> PolyMatrix:
    """Unitriangular matrix with q^{(j-i)k} above the diagonal."""
    n = len(as_word(z)) + 1
    return PolyMatrix([[q_pow((j - i) * k) if j >= i else ZERO for j in range(n)] for i in range(n)])


def h_matrix(z: Word, u: Word, k: int) -> PolyMatrix:
    """H_{z,k}(u) = P_z(u) (entrywise) Pow_z(k)."""
    return hadamard(parikh_matrix(z, u), pow_matrix(z, k))


@dataclass(frozen=True)
class ClosedForm:
    """<u^n choose z> = q^{-prefactor} * sum_k R_k (1 - q^{c_k n |u|}) / (1 - q^{c_k |u|}).

    ``terms`` holds (R_k, c_k) with c_k in units of |u|, distinct and sorted.
    """

    terms: tuple[tuple[FactoredRational, int], ...]
    prefactor_exponent: int
    period_length: int

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        L = self.period_length
        parts = [f"[{R}] * (1-q^({c * L}n))/(1-q^{c * L})" for R, c in self.terms]
        body = "\n  + ".join(parts)
        if self.prefactor_exponent:
            return f"q^-{self.prefactor_exponent} * (\n    {body})"
        return body

    def to_json(self) -> dict:
        return {
            "prefactor_exponent": self.prefactor_exponent,
            "period_length": self.period_length,
            "terms": [{"R": R.to_json(), "c": c} for R, c in self.terms],
        }


def _consolidate(terms) -> list[tuple[FactoredRational, int]]:
    by_c: dict[int, FactoredRational] = {}
    for R, c in terms:
        by_c[c] = by_c[c] + R if c in by_c else R
    out = []
    for c in sorted(by_c):
        R = by_c[c].cancel()
        if not R.is_zero():
            out.append((R, c))
    return out


def periodic_closed_form(u: Word, z: Word) -> ClosedForm:
    """Closed form of n -> <u^n choose z>, following the last column of P_z(u^n).

    With p_{n,j} the entry j rows above the bottom of that column,
    p_{n+1,j} = p_{n,j} + sum_k h_{j,k} q^{kn|u|} p_{n,j-k} where h are the
    entries of P_z(u).  Summing each geometric factor against the terms of
    p_{n,j-k} yields new terms with c = k and c = k + c'.
    """
    u, z = as_word(u), as_word(z)
    if not u or not z:
        raise ValueError("u and z must be nonempty")
    L = len(u)
    ell = len(z)
    P = parikh_matrix(z, u)
    # levels[j] = terms of p_{n,j}; p_{n,0} = 1 is handled separately
    levels: list[list[tuple[FactoredRational, int]]] = [[]]
    for j in range(1, ell + 1):
        row = ell - j
        new = []
        for k in range(1, j + 1):
            h = P[row, row + k]
            if not h:
                continue
            if k == j:
                new.append((FactoredRational(h), k))
                continue
            for R, c in levels[j - k]:
                t = (R * h).divide_one_minus(c * L)
                new.append((t, k))
                new.append((-t, k + c))
        levels.append(_consolidate(new))
    return ClosedForm(tuple(levels[ell]), tri(ell - 1), L)


def _geometric(c: int, L: int, n: int) -> IntPoly:
    """(1 - q^{cnL}) / (1 - q^{cL}) = sum_{i<n} q^{icL}."""
    out = [0] * (c * L * (n - 1) + 1) if n > 0 else []
    for i in range(n):
        out[i * c * L] = 1
    return IntPoly(out)


def closed_form_eval(cf: ClosedForm, n: int) -> IntPoly:
    """The exact polynomial <u^n choose z> from a closed form."""
    if n < 0:
        raise ValueError("n must be >= 0")
    total = FactoredRational(ZERO)
    for R, c in cf.terms:
        total = total + R * _geometric(c, cf.period_length, n)
    try:
        return total.to_poly().shift(-cf.prefactor_exponent)
    except NonExactDivision as err:
        raise NonExactDivision(f"closed form does not evaluate to a polynomial at n={n}: {err}") from None


def limit_rational(cf: ClosedForm) -> FactoredRational:
    """sum_k R_k / (1 - q^{c_k |u|}): the limit series times q^{prefactor}."""
    total = FactoredRational(ZERO)
    for R, c in cf.terms:
        total = total + R.divide_one_minus(c * cf.period_length)
    return total.cancel()


def limit_series(cf: ClosedForm, order: int) -> TruncatedSeries:
    """c_0..c_order of s_{u^omega, z} from the closed form."""
    s = series_expand(limit_rational(cf), order + cf.prefactor_exponent)
    return s.shift_down(cf.prefactor_exponent)


def _char_poly(roots: list[IntPoly]) -> list[IntPoly]:
    """Coefficients (leading first) of prod_j (X - root_j) over Z[q]."""
    poly = [ONE]
    for a in roots:
        nxt = poly + [ZERO]
        for i, c in enumerate(poly):
            nxt[i + 1] = nxt[i + 1] - c * a
        poly = nxt
    return poly


def recurrence_polynomial(cf: ClosedForm) -> Recurrence:
    """Order s+1 recurrence over Z[q] satisfied by n -> <u^n choose z>.

    The sequence mixes the constant 1 with q^{c_j |u| n} for the s distinct
    exponents, so its characteristic polynomial is (X - 1) prod_j (X - q^{c_j|u|}).
    """
    exps = [c * cf.period_length for c in cf.exponents]
    if len(set(exps)) != len(exps):
        raise ValueError("closed form is not consolidated")
    char = _char_poly([ONE] + [q_pow(e) for e in exps])
    # X^{s+1} - sum r_k X^{s+1-k}
    return Recurrence(tuple(-c for c in char[1:]))


def elementary_sums(cf: ClosedForm) -> list[IntPoly]:
    """D_1..D_s: signed elementary symmetric sums of q^{c_j |u|}, with D_k = (-1)^{k-1} e_k."""
    char = _char_poly([q_pow(c * cf.period_length) for c in cf.exponents])
    return [-c for c in char[1:]]


def recurrence_integer(u: Word, z: Word) -> tuple[IntRecurrence, list[int]]:
    """The q = 1 recurrence for n -> (u^n choose z) and its first terms."""
    u, z = as_word(u), as_word(z)
    rec = recurrence_polynomial(periodic_closed_form(u, z)).at_one()
    count = max(rec.order + 4, 11)
    terms = [binomial(word_power(u, n), z) for n in range(count)]
    return rec, terms


def coefficient_recurrence(cf: ClosedForm) -> IntRecurrence:
    """Constant-coefficient recurrence of the limit series coefficients.

    The limit rational is reduced to lowest terms over cyclotomic factors;
    the reduced denominator d_0 + d_1 q + ... (d_0 = 1) gives
    c_n = -sum_i d_i c_{n-i}, valid once n exceeds the numerator degree.
    """
    num, den = limit_rational(cf).reduced_denominator()
    coeffs = tuple(-d for d in den.coeffs[1:])
    # index shift from dividing by q^{prefactor}
    start = max(len(coeffs), num.degree + 1 - cf.prefactor_exponent, 0)
    return IntRecurrence(coeffs, start)


def vanishing_residues(u: Word, z: Word) -> frozenset[int]:
    """Residues r mod |u| whose series coefficients c_{r + i|u|} are eventually zero.

    A class survives iff r = sum_j t_j - l(l-1)/2 (mod |u|) for some choice of
    t_j = number of letters after an occurrence of z_j in u.
    """
    u, z = as_word(u), as_word(z)
    L = len(u)
    reachable = {0}
    for a in z:
        ts = {L - 1 - p for p, b in enumerate(u) if b == a}
        if not ts:
            raise LetterAbsent(a)
        reachable = {(s + t) % L for s in reachable for t in ts}
    ell = len(z)
    admissible = {(s - ell * (ell - 1) // 2) % L for s in reachable}
    return frozenset(set(range(L)) - admissible)


def admissible_tuples(u: Word, z: Word):
    """Every tuple (t_1, ..., t_l), t_j counted for z_j taken right to left."""
    u, z = as_word(u), as_word(z)
    L = len(u)
    choices = [[L - 1 - p for p, b in enumerate(u) if b == a] for a in reversed(z)]
    return list(product(*choices))


def residue_cutoff(u: Word, z: Word) -> int:
    """n >= l * max t + (|u|-1) l(l-1)/2 past which the residue dichotomy is claimed."""
    u, z = as_word(u), as_word(z)
    ell = len(z)
    t = max(max(tup) for tup in admissible_tuples(u, z))
    return ell * t + (len(u) - 1) * ell * (ell - 1) // 2


def growth_fit(u: Word, z: Word, residue: int, order: int, tail_fraction: float = 0.5) -> float:
    """Least-squares slope of log c_n against log n along n = residue (mod |u|).

    Only the last ``tail_fraction`` of the class is fitted, so the estimate
    reflects the asymptotic exponent rather than low-order terms.
    """
    u, z = as_word(u), as_word(z)
    L = len(u)
    residue %= L
    coeffs = series_coefficients(make_stream("periodic", u), z, order)
    idx = list(range(residue, order + 1, L))
    if len(idx) < 40:
        raise ValueError(f"only {len(idx)} samples on the class; need order >= {residue + 39 * L}")
    tail = idx[int(len(idx) * (1 - tail_fraction)):]
    pts = [(n, coeffs[n]) for n in tail if n > 0 and coeffs[n] > 0]
    if not pts:
        raise AllZeroClass(residue, L)
    if len(pts) < 2 or len({c for _, c in pts}) == 1:
        return 0.0
    x = np.log([n for n, _ in pts])
    y = np.log([c for _, c in pts])
    slope = np.polyfit(x, y, 1)[0]
    return float(slope) if math.isfinite(slope) else float("nan")
