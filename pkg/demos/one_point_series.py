"""
One-point generating series
===========================

Walks the three exact series tables: the untwisted one-point table, its
cyclic-twisted refinement, and the initial-value series their difference
defines.  All coefficients are exact rationals.
"""

from fractions import Fraction

from hhodge import (
    extract_line_initial,
    hodge_onepoint,
    hurwitz_hodge_onepoint,
    initial_onepoint,
)

ORDER = 12

# the untwisted table: row t^{2g} is a polynomial of degree g in z
hodge = hodge_onepoint(ORDER)
print("untwisted one-point table")
for g in range(4):
    print(f"  t^{2*g}: {hodge.coeff(2 * g)!r}")

# the twisted table for a few cyclic orders; its constant term is 1/N
for N in (2, 3, 5):
    twisted = hurwitz_hodge_onepoint(N, ORDER)
    print(f"N={N}: constant {twisted.coeff(0).coeff(0)}, t^2 z^1 {twisted.coeff(2, 1)}")

# the initial-value series is the twisted table minus 1/N of the untwisted
# one; the difference identity is exact at every order
for N in (2, 3):
    direct = initial_onepoint(N, ORDER)
    diff = hurwitz_hodge_onepoint(N, ORDER) - hodge.scale(Fraction(1, N))
    assert direct == diff
    print(f"N={N}: difference identity holds to order {ORDER}")

# the genus-g line initial value is the z^1 coefficient of the t^{2g} row
for N, g in [(2, 1), (3, 1), (2, 2)]:
    print(f"initial value N={N}, g={g}: {extract_line_initial(N, g)}")
