"""
Polynomial identities and nonnegative minors
============================================

Multiplying a q-Parikh matrix by its inverse and reading off one entry
gives an identity between q-binomials of u against prefixes and reversed
suffixes of z.
"""
import random

from qparikh import cancellation_identity, cauchy_dual, cauchy_minor, parikh_matrix
from qparikh.parikh import first_relation, three_letter_relation
from qparikh.properties import random_word
from qparikh.words import parse_word

u = parse_word("abbacab")
a, b, c = parse_word("abc")

lhs, rhs = first_relation(u, a, b)
print(f"q(<u,ab> + <u,ba>) = {lhs}")
print(f"<u,a><u,b>         = {rhs}")

lhs, rhs = three_letter_relation(u, a, b, c)
print(f"three-letter relation: {lhs}  ==  {rhs}")

# The general alternating sum, for a z without equal neighbours, vanishes.
print("alternating sum for z = abcab:", cancellation_identity(parse_word("abcab"), u))

# Minors of q-Parikh matrices have nonnegative coefficients; the 2x2 one
# below is the q-analogue of a Cauchy inequality.
print("\ncauchy minor (ababba; b, b, a) =", cauchy_minor("ababba", "b", "b", "a"))

rng = random.Random(0)
ab = list(parse_word("ab"))
worst = min(
    min(cauchy_dual(*(random_word(rng, ab, 4) for _ in range(4))).coeffs or (0,)) for _ in range(300)
)
print("smallest coefficient over 300 random dual minors:", worst)

m = parikh_matrix("abab", "aabbab")
sizes = {k: sum(1 for _ in m.minors(k)) for k in range(1, m.n + 1)}
assert all(det.is_nonnegative() for k in sizes for _, _, det in m.minors(k))
print("all minors of P_abab(aabbab) are nonnegative:", sizes)
