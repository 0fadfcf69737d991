"""
q-binomial coefficients of words
================================

Every occurrence of v as a scattered subword of u contributes q^alpha,
alpha counting the unselected letters to the right of each selected one.
"""
from qparikh import binomial, occurrences, qbinom, qbinom_oracle, qbinom_reversed
from qparikh.qbinomial import occurrence_exponent

u, v = "abaaba", "ba"

# The four occurrences of "ba" in "abaaba" and what each contributes.
for occ in occurrences(u, v):
    marked = "".join(c.upper() if i in occ else c for i, c in enumerate(u))
    print(f"{marked}  ->  q^{occurrence_exponent(len(u), occ)}")

p = qbinom(u, v)
print(f"<{u} choose {v}> = {p}")
print(f"at q = 1 it counts the occurrences: {p.at_one()} == {binomial(u, v)}")

# The dynamic program and the brute-force sum never share code; they agree.
assert p == qbinom_oracle(u, v)

# Reading both words backwards mirrors the coefficient list inside the
# window |v|(|u|-|v|).
print(f"<{u[::-1]} choose {v[::-1]}> = {qbinom(u[::-1], v[::-1])} = {qbinom_reversed(u, v)}")

# On a one-letter alphabet the Gaussian binomials come back.
for n in range(1, 6):
    print(f"[{n} choose 2]_q = {qbinom('a' * n, 'aa')}")
