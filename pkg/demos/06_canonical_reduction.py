"""
Reduction to the canonical matrix
=================================

When every letter of z occurs r times and no two neighbours agree, the
position morphism sigma_z turns P_z(u) into the matrix induced by 12...|z|,
up to monomial factors collected in Z and C.
"""
import itertools

from qparikh import check_canonical_reduction, sigma_z
from qparikh.morphism_reduction import canonical_reduction
from qparikh.polynomials import hadamard
from qparikh.words import parse_word

z, u = parse_word("121323"), parse_word("1121323")
sigma = sigma_z(z)
print("sigma_z:", sigma)
print("sigma_z(u) =", sigma(u))

red = canonical_reduction(z, u)
print(f"r = {red.r}\nZ =\n{red.Z}\nC =\n{red.C}")

# C(q^(r-1)) . E = Z . P(q^r), entry by entry.
left = hadamard(red.C.dilate(red.r - 1), red.E)
right = hadamard(red.Z, red.P.dilate(red.r))
print("\nboth sides of the direct identity:")
print(left)
assert left == right
print("inverse identity holds:", red.inverse_holds)

# The same on a smaller input, for every word of length 3.
small = parse_word("1212")
words = ["".join(t) for t in itertools.product("12", repeat=3)]
print("z = 1212:", all(check_canonical_reduction(small, parse_word(w)) for w in words))
