"""Exact polynomial kernels over Z[q].

IntPoly is the universal value type: dense, ascending, arbitrary-precision
coefficients.  Around it sit truncated series, rational functions whose
denominators are products of (1 - q^e), square polynomial matrices and
linear recurrences.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest
from typing import Iterable, Sequence

from .errors import DegreeExceeded, DimensionMismatch, NonExactDivision, NotUnitriangular

# Below this length (of the shorter operand) schoolbook beats packing.
KRONECKER_THRESHOLD = 48


def _trim(c: list[int]) -> tuple[int, ...]:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _schoolbook(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if not bj:
            continue
        for i, ai in enumerate(a):
            if ai:
                out[i + j] += ai * bj
    return out


def _pack(c: Sequence[int], width: int) -> int:
    return int.from_bytes(b"".join(x.to_bytes(width, "little") for x in c), "little")


def _kronecker(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Multiply via a single big-integer product (Kronecker substitution).

    Signed coefficients are packed as positive minus negative parts; the
    product is decoded after adding a bias of 2^(k-1) to every digit.
    """
    ma, mb = max(map(abs, a)), max(map(abs, b))
    # digits must hold both the inputs and every output coefficient
    bound = max(ma * mb * min(len(a), len(b)), ma, mb)
    width = (bound.bit_length() + 2 + 7) // 8
    bits = 8 * width

    def signed_pack(c):
        return _pack([x if x > 0 else 0 for x in c], width) - _pack([-x if x < 0 else 0 for x in c], width)

    n = len(a) + len(b) - 1
    half = 1 << (bits - 1)
    bias = _pack([half] * n, width)
    total = signed_pack(a) * signed_pack(b) + bias
    raw = total.to_bytes(width * n, "little")
    return [int.from_bytes(raw[i * width:(i + 1) * width], "little") - half for i in range(n)]


def mul_coeffs(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if min(len(a), len(b)) < KRONECKER_THRESHOLD:
        return _schoolbook(a, b)
    return _kronecker(a, b)


class IntPoly:
    """Polynomial in q with integer coefficients, stored ascending and trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim([int(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # construction ---------------------------------------------------------
    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls([c])

    @classmethod
    def coerce(cls, x) -> IntPoly:
        if isinstance(x, IntPoly):
            return x
        if isinstance(x, int):
            return cls([x])
        raise TypeError(f"cannot interpret {x!r} as a polynomial")

    _TERM = re.compile(r"([+-]?)\s*(\d*)\s*(\*?\s*q(?:\^\{?(\d+)\}?)?)?")

    @classmethod
    def parse(cls, text: str) -> IntPoly:
        """Inverse of ``str``: accepts e.g. ``"q^6+q^5+q^3+1"``, ``"-2q^{12}+q"``."""
        s = text.replace(" ", "").replace("−", "-")
        if s in ("", "0"):
            return cls()
        coeffs: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
            sign = -1 if m.group(1) == "-" else 1
            if pos > 0 and not m.group(1):
                raise ValueError(f"missing operator in {text!r} at offset {pos}")
            c = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                e = int(m.group(4)) if m.group(4) else 1
            else:
                e = 0
            coeffs[e] = coeffs.get(e, 0) + sign * c
            pos = m.end()
        top = max(coeffs)
        return cls([coeffs.get(i, 0) for i in range(top + 1)])

    # basic queries --------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient; -1 for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def is_monomial(self) -> bool:
        return sum(1 for c in self.coeffs if c) == 1 and self.coeffs[-1] == 1

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def at_one(self) -> int:
        return sum(self.coeffs)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = IntPoly.coerce(other)
        return IntPoly([a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)])

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-IntPoly.coerce(other))

    def __rsub__(self, other):
        return IntPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        other = IntPoly.coerce(other)
        return IntPoly(mul_coeffs(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result, base = IntPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> IntPoly:
        """Multiply by q^k; negative k divides and requires the low terms to vanish."""
        if not self.coeffs or k == 0:
            return self
        if k > 0:
            return IntPoly([0] * k + list(self.coeffs))
        if any(self.coeffs[:-k]):
            raise NonExactDivision(f"{self} is not divisible by q^{-k}")
        return IntPoly(self.coeffs[-k:])

    def truncate(self, n: int) -> IntPoly:
        """Drop every term of degree above n."""
        return IntPoly(self.coeffs[: n + 1]) if n >= 0 else IntPoly()

    def dilate(self, r: int) -> IntPoly:
        """Substitute q -> q^r by spreading coefficient indices; r = 0 evaluates at 1."""
        if r == 0:
            return IntPoly([self.at_one()])
        if r == 1 or not self.coeffs:
            return self
        out = [0] * (r * (len(self.coeffs) - 1) + 1)
        out[::r] = self.coeffs
        return IntPoly(out)

    def reciprocal(self, d: int) -> IntPoly:
        return reciprocal(self, d)

    def divmod(self, divisor: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Euclidean division; the divisor's leading coefficient must divide every step."""
        divisor = IntPoly.coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.coeffs[-1]
        if len(rem) - 1 < dd:
            return IntPoly(), self
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            if c % lead:
                raise NonExactDivision(f"leading coefficient {lead} does not divide {c}")
            t = c // lead
            quot[i - dd] = t
            base = i - dd
            for j, dj in enumerate(divisor.coeffs):
                rem[base + j] -= t * dj
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, divisor) -> IntPoly:
        try:
            quot, rem = self.divmod(IntPoly.coerce(divisor))
        except NonExactDivision:
            raise NonExactDivision(f"{self} is not divisible by {divisor}") from None
        if rem:
            raise NonExactDivision(f"{self} is not divisible by {divisor}")
        return quot

    def div_one_minus(self, e: int) -> IntPoly:
        """Exact quotient by (1 - q^e), by synthetic division from the bottom."""
        c = self.coeffs
        n = len(c)
        if not n:
            return self
        q = [0] * n
        for i in range(n):
            q[i] = c[i] + (q[i - e] if i >= e else 0)
        # the quotient has degree n - 1 - e; anything above means a remainder
        if n - 1 < e or any(q[n - e:]):
            raise NonExactDivision(f"{self} is not divisible by 1-q^{e}")
        return IntPoly(q[: n - e])

    def divisible_by_one_minus(self, e: int) -> bool:
        try:
            self.div_one_minus(e)
        except NonExactDivision:
            return False
        return True

    # rendering ------------------------------------------------------------
    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if a == 1 else f"{a}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        return out + "".join(s + b for s, b in parts[1:])

    def __repr__(self):
        return f"IntPoly({str(self)!r})"

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj) -> IntPoly:
        return cls(obj["coeffs"])


ZERO = IntPoly()
ONE = IntPoly([1])
Q = IntPoly([0, 1])


def q_pow(k: int) -> IntPoly:
    return IntPoly.monomial(k)


def one_minus_q_pow(e: int) -> IntPoly:
    """The factor 1 - q^e."""
    c = [0] * (e + 1)
    c[0] += 1
    c[e] -= 1
    return IntPoly(c)


def reciprocal(p: IntPoly, d: int) -> IntPoly:
    """q^d * P(1/q): reflect the coefficient list inside the window [0, d]."""
    p = IntPoly.coerce(p)
    if p.degree > d:
        raise DegreeExceeded(p.degree, d)
    if not p:
        return p
    c = list(p.coeffs) + [0] * (d + 1 - len(p.coeffs))
    return IntPoly(c[::-1])


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, from q^d - 1 = prod over divisors."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    p = -one_minus_q_pow(d)
    for e in range(1, d):
        if d % e == 0:
            p = p.exact_div(cyclotomic(e))
    return p


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of q^0..q^order of a formal power series."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        if len(c) < self.order + 1:
            c = c + (0,) * (self.order + 1 - len(c))
        object.__setattr__(self, "coeffs", c[: self.order + 1])

    @classmethod
    def from_poly(cls, p: IntPoly, order: int) -> TruncatedSeries:
        return cls(order, p.coeffs[: order + 1])

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def as_poly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def shift_down(self, k: int) -> TruncatedSeries:
        """Divide by q^k; the first k coefficients must be zero."""
        if any(self.coeffs[:k]):
            raise NonExactDivision(f"series not divisible by q^{k}")
        return TruncatedSeries(self.order - k, self.coeffs[k:])

    def __str__(self):
        body = str(self.as_poly())
        return f"{body}+O(q^{self.order + 1})" if body != "0" else f"O(q^{self.order + 1})"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": list(self.coeffs)}


class FactoredRational:
    """numerator / prod (1 - q^e)^m, with the denominator kept as exponent multiplicities."""

    __slots__ = ("numerator", "denominator")
    __hash__ = None

    def __init__(self, numerator, denominator: Iterable[int] | dict | None = None):
        self.numerator = IntPoly.coerce(numerator)
        if denominator is None:
            den = Counter()
        elif isinstance(denominator, dict):
            den = Counter({e: m for e, m in denominator.items() if m})
        else:
            den = Counter(denominator)
        if any(e < 1 for e in den):
            raise ValueError("denominator exponents must be >= 1")
        self.denominator = den

    @classmethod
    def coerce(cls, x) -> FactoredRational:
        return x if isinstance(x, FactoredRational) else cls(x)

    def denominator_poly(self) -> IntPoly:
        p = ONE
        for e, m in sorted(self.denominator.items()):
            p = p * one_minus_q_pow(e) ** m
        return p

    def is_zero(self) -> bool:
        return not self.numerator

    def _lift(self, den: Counter) -> IntPoly:
        num = self.numerator
        for e, m in den.items():
            extra = m - self.denominator.get(e, 0)
            if extra:
                num = num * one_minus_q_pow(e) ** extra
        return num

    def __add__(self, other):
        other = FactoredRational.coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        den = self.denominator | other.denominator
        return FactoredRational(self._lift(den) + other._lift(den), den)

    __radd__ = __add__

    def __neg__(self):
        return FactoredRational(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-FactoredRational.coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, IntPoly)):
            return FactoredRational(self.numerator * other, self.denominator)
        return FactoredRational(self.numerator * other.numerator, self.denominator + other.denominator)

    __rmul__ = __mul__

    def divide_one_minus(self, e: int, m: int = 1) -> FactoredRational:
        """Divide by (1 - q^e)^m."""
        den = Counter(self.denominator)
        den[e] += m
        return FactoredRational(self.numerator, den)

    def cancel(self) -> FactoredRational:
        """Strike (1 - q^e) factors that divide the numerator exactly."""
        num = self.numerator
        den = Counter(self.denominator)
        if not num:
            return FactoredRational(num)
        for e in sorted(den, reverse=True):
            while den[e] and num.divisible_by_one_minus(e):
                num = num.div_one_minus(e)
                den[e] -= 1
        return FactoredRational(num, +den)

    def __eq__(self, other):
        if isinstance(other, (int, IntPoly)):
            other = FactoredRational(other)
        if not isinstance(other, FactoredRational):
            return NotImplemented
        den = self.denominator | other.denominator
        return self._lift(den) == other._lift(den)

    def to_poly(self) -> IntPoly:
        """The value as a polynomial; NonExactDivision if it is not one."""
        num = self.numerator
        for e, m in self.denominator.items():
            for _ in range(m):
                num = num.div_one_minus(e)
        return num

    def series(self, order: int) -> TruncatedSeries:
        return series_expand(self, order)

    def reduced(self) -> tuple[IntPoly, Counter]:
        """Lowest terms as (numerator, {d: multiplicity of the cyclotomic factor Phi_d}).

        The denominator's irreducible factors are exactly the cyclotomic
        polynomials Phi_d with d | e, so trial division by those is a full gcd.
        """
        phis: Counter = Counter()
        sign = 1
        for e, m in self.denominator.items():
            # 1 - q^e = -prod_{d | e} Phi_d
            if m % 2:
                sign = -sign
            for d in range(1, e + 1):
                if e % d == 0:
                    phis[d] += m
        num = self.numerator * sign
        for d in sorted(phis):
            phi = cyclotomic(d)
            while phis[d] and num:
                quot, rem = num.divmod(phi)
                if rem:
                    break
                num = quot
                phis[d] -= 1
        return num, +phis

    def reduced_denominator(self) -> tuple[IntPoly, IntPoly]:
        """(numerator, denominator) in lowest terms, denominator with constant term 1."""
        num, phis = self.reduced()
        den = ONE
        for d, m in sorted(phis.items()):
            den = den * cyclotomic(d) ** m
        if den.coeffs[0] < 0:
            num, den = -num, -den
        return num, den

    def __str__(self):
        if not self.denominator:
            return str(self.numerator)
        parts = []
        for e, m in sorted(self.denominator.items()):
            f = f"(1-q^{e})" if e > 1 else "(1-q)"
            parts.append(f + (f"^{m}" if m > 1 else ""))
        return f"({self.numerator})/({''.join(parts)})"

    def __repr__(self):
        return f"FactoredRational({self})"

    def to_json(self) -> dict:
        return {
            "numerator": self.numerator.to_json(),
            "denominator": [[e, m] for e, m in sorted(self.denominator.items())],
        }


def series_expand(r: FactoredRational, order: int) -> TruncatedSeries:
    """First order+1 coefficients of a FactoredRational as a power series.

    Each factor 1/(1 - q^e) is a strided running sum, so no division happens.
    """
    r = FactoredRational.coerce(r)
    c = list(r.numerator.coeffs[: order + 1]) + [0] * max(0, order + 1 - len(r.numerator))
    for e, m in r.denominator.items():
        for _ in range(m):
            for i in range(e, order + 1):
                c[i] += c[i - e]
    return TruncatedSeries(order, c)


class PolyMatrix:
    """Square matrix with IntPoly entries; indices are 0-based."""

    __slots__ = ("rows",)
    __hash__ = None

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(IntPoly.coerce(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("PolyMatrix must be square with dimension >= 1")
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> PolyMatrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> PolyMatrix:
        return cls([[ZERO] * n for _ in range(n)])

    @classmethod
    def checkerboard(cls, n: int) -> PolyMatrix:
        """The sign pattern ((-1)^(i+j))."""
        return cls([[1 if (i + j) % 2 == 0 else -1 for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij) -> IntPoly:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.n != other.n:
            raise DimensionMismatch(f"cannot multiply {self.n}x{self.n} by {other.n}x{other.n}")
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = ZERO
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return PolyMatrix(out)

    def map(self, f) -> PolyMatrix:
        return PolyMatrix([[f(x) for x in row] for row in self.rows])

    def dilate(self, r: int) -> PolyMatrix:
        return self.map(lambda p: p.dilate(r))

    def is_unitriangular(self) -> bool:
        n = self.n
        return all(
            self.rows[i][j] == (1 if i == j else 0) for i in range(n) for j in range(i + 1)
        )

    def minors(self, size: int):
        """Yield (rows, cols, determinant) for every size x size selection."""
        from itertools import combinations

        idx = range(self.n)
        for rows in combinations(idx, size):
            for cols in combinations(idx, size):
                yield rows, cols, minor_det(self, rows, cols)

    def __str__(self):
        cells = [[str(x) for x in row] for row in self.rows]
        widths = [max(len(cells[i][j]) for i in range(self.n)) for j in range(self.n)]
        return "\n".join(
            "[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]" for row in cells
        )

    def __repr__(self):
        return f"PolyMatrix({[[str(x) for x in row] for row in self.rows]})"

    def to_json(self) -> list:
        return [[x.to_json() for x in row] for row in self.rows]

    @classmethod
    def from_json(cls, obj) -> PolyMatrix:
        return cls([[IntPoly.from_json(x) for x in row] for row in obj])


def hadamard(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.n != b.n:
        raise DimensionMismatch(f"Hadamard product of {a.n}x{a.n} and {b.n}x{b.n}")
    return PolyMatrix([[x * y for x, y in zip(ra, rb)] for ra, rb in zip(a.rows, b.rows)])


def antitranspose(a: PolyMatrix) -> PolyMatrix:
    """Mirror along the antidiagonal: result[i][j] = a[n-1-j][n-1-i]."""
    n = a.n
    return PolyMatrix([[a.rows[n - 1 - j][n - 1 - i] for j in range(n)] for i in range(n)])


def unitriangular_inverse(m: PolyMatrix) -> PolyMatrix:
    """Exact inverse of a unitriangular matrix by back-substitution."""
    if not m.is_unitriangular():
        raise NotUnitriangular("matrix is not unitriangular")
    n = m.n
    inv = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    rows = m.rows
    for j in range(n):
        for i in range(j - 1, -1, -1):
            acc = ZERO
            for k in range(i + 1, j + 1):
                if rows[i][k] and inv[k][j]:
                    acc = acc + rows[i][k] * inv[k][j]
            inv[i][j] = -acc
    return PolyMatrix(inv)


def minor_det(a: PolyMatrix, rows: Sequence[int], cols: Sequence[int]) -> IntPoly:
    """Determinant of the submatrix on ``rows`` x ``cols``.

    Laplace expansion along successive rows, memoised on the set of columns
    still available (2^k states, fine for k <= 8).
    """
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols):
        raise DimensionMismatch("minor needs as many rows as columns")
    n = a.n
    if any(not 0 <= i < n for i in rows + cols):
        raise DimensionMismatch("minor index out of range")
    k = len(rows)
    if k == 0:
        return ONE
    memo: dict[int, IntPoly] = {}

    def det(depth: int, mask: int) -> IntPoly:
        if depth == k:
            return ONE
        if mask in memo:
            return memo[mask]
        acc = ZERO
        sign = 1
        for t in range(k):
            if mask >> t & 1:
                continue
            entry = a.rows[rows[depth]][cols[t]]
            if entry:
                term = entry * det(depth + 1, mask | (1 << t))
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[mask] = acc
        return acc

    return det(0, 0)


@dataclass(frozen=True)
class Recurrence:
    """p_{n+s} = sum_{k=1..s} r_k * p_{n+s-k} with r_k in Z[q]."""

    coefficients: tuple[IntPoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(IntPoly.coerce(c) for c in self.coefficients))

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def holds_on(self, seq: Sequence[IntPoly]) -> bool:
        s = self.order
        return all(
            sum((r * seq[n - k] for k, r in enumerate(self.coefficients, 1)), ZERO) == seq[n]
            for n in range(s, len(seq))
        )

    def at_one(self) -> IntRecurrence:
        return IntRecurrence(tuple(c.at_one() for c in self.coefficients))

    def __str__(self):
        s = self.order
        terms = []
        for k, r in enumerate(self.coefficients, 1):
            if not r:
                continue
            lag = s - k
            idx = f"p(n+{lag})" if lag else "p(n)"
            terms.append(f"({r})*{idx}")
        return f"p(n+{s}) = " + (" + ".join(terms) if terms else "0")

    def to_json(self) -> dict:
        return {"order": self.order, "coefficients": [c.to_json() for c in self.coefficients]}


@dataclass(frozen=True)
class IntRecurrence:
    """c_n = sum_{k=1..s} a_k * c_{n-k} with integer a_k, valid for n >= start."""

    coefficients: tuple[int, ...]
    start: int = 0

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def holds_on(self, seq: Sequence[int], start: int | None = None) -> bool:
        lo = max(self.order, self.start if start is None else start)
        return all(
            sum(a * seq[n - k] for k, a in enumerate(self.coefficients, 1)) == seq[n]
            for n in range(lo, len(seq))
        )

    def __str__(self):
        terms = []
        for k, a in enumerate(self.coefficients, 1):
            if a:
                terms.append(f"{a:+d}*c(n-{k})")
        body = " ".join(terms) if terms else "0"
        return f"c(n) = {body.lstrip('+')}"

    def to_json(self) -> dict:
        return {"order": self.order, "coefficients": list(self.coefficients), "start": self.start}


