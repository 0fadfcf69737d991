"""
Powers of a word: closed form, recurrences, vanishing classes
=============================================================

For u = 0110 and z = 01 the polynomials <u^n choose z> are sums of
geometric partial sums in q^4 and q^8.  Everything else follows from
that closed form.
"""
from qparikh import (
    closed_form_eval,
    coefficient_recurrence,
    growth_fit,
    make_stream,
    periodic_closed_form,
    qbinom,
    recurrence_integer,
    recurrence_polynomial,
    series_coefficients,
    vanishing_residues,
    word_power,
)
from qparikh.series import limit_rational, limit_series
from qparikh.words import parse_word

u, z = parse_word("0110"), parse_word("01")
cf = periodic_closed_form(u, z)
print(cf)
for n in range(4):
    assert closed_form_eval(cf, n) == qbinom(word_power(u, n), z)
    print(f"n={n}: {closed_form_eval(cf, n)}")

print("\nrecurrence over Z[q]:", recurrence_polynomial(cf))
rec, terms = recurrence_integer(u, z)
print("at q = 1:", rec, "| terms", terms)

# Dropping q^(4n) and q^(8n) leaves a rational function: the limit series.
num, den = limit_rational(cf).reduced_denominator()
print(f"\nlimit * q = ({num}) / ({den})")
print("limit series:", limit_series(cf, 21))
crec = coefficient_recurrence(cf)
print("its coefficients satisfy", crec)

# Class 2 mod 4 is empty; the other classes grow linearly (|z| - 1 = 1).
print("\nvanishing residues mod 4:", set(vanishing_residues(u, z)))
c = series_coefficients(make_stream("periodic", u), z, 40)
for r in range(4):
    print(f"  r={r}: {[c[n] for n in range(r, 41, 4)]}")
for r in (0, 1, 3):
    print(f"  growth exponent on class {r}: {growth_fit(u, z, r, 400):.3f}")
