"""
q-Parikh matrices induced by a word
===================================

P_z(w) is a product of atomic unitriangular matrices, one per letter of w.
Above the diagonal it stores shifted q-binomials of w against the factors
of z, so the three constructions below coincide.
"""
from qparikh import (
    PolyMatrix,
    parikh_inverse_closed,
    parikh_inverse_reversal,
    parikh_matrix,
    parikh_matrix_closed,
    reverse_duality_check,
    unitriangular_inverse,
)
from qparikh.parikh import decode_second_diagonal, parikh_matrix_by_product
from qparikh.words import parse_word

z, w = parse_word("12231"), parse_word("1212312")
m = parikh_matrix(z, w)
print(f"P_{z}({w}) =")
print(m)
assert m == parikh_matrix_closed(z, w) == parikh_matrix_by_product(z, w)

# The second diagonal remembers where every letter sits, so w can be read back.
print("decoded from the second diagonal:", decode_second_diagonal(z, m))

# Inverses.  When z has no equal neighbours the inverse is the matrix of the
# reversed word with reflected entries and alternating signs.
z, u = parse_word("123"), parse_word("23112311")
inv = parikh_inverse_closed(z, u)
print(f"\nP_{z}({u})^-1 =")
print(inv)
assert inv == parikh_inverse_reversal(z, u) == unitriangular_inverse(parikh_matrix(z, u))
assert inv @ parikh_matrix(z, u) == PolyMatrix.identity(4)
print("reverse duality holds:", reverse_duality_check(z, u))
