"""
Limit series of a left-infinite word
====================================

Prefixes of a left-infinite word grow to the left, and the low-degree
coefficients of <prefix choose z> freeze.  For Thue-Morse and z = 00 the
first coefficients are small integers, printed here as a digit string.
"""
import numpy as np

from qparikh import make_stream, qbinom, series_coefficients

tm = make_stream("thue-morse")
print("rightmost 32 letters:", tm.prefix(32))

s = series_coefficients(tm, "00", 55)
print("c_0..c_55:", "".join(map(str, s)))

# Stabilization: a longer prefix only adds higher powers of q.
longer = qbinom(tm.prefix(200), "00").truncate(55)
assert longer == s.as_poly()

# The coefficients keep growing, but slowly.
c = np.array(list(series_coefficients(tm, "00", 2000)))
for lo, hi in [(0, 250), (250, 500), (500, 1000), (1000, 2000)]:
    print(f"n in [{lo}, {hi}): max c_n = {c[lo:hi].max()}")
