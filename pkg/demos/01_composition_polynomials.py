"""
Composition polynomials by integration and by recursion
=======================================================

g_I(q) is an iterated integral over q <= t_1 <= ... <= t_r <= 1. We compute
it symbolically, compare with the recursion, and reduce it to P_I.
"""

from qcomp import Composition, compositions_of, g_integral, g_recursive, reduced_P
from qcomp.polynomials import check_ad_recursion, p_at_zero
from qcomp.qpoly import QPoly

q = QPoly.q()

# A single part: the integral of t^(n-1) from q to 1.
print("g_(3)   =", g_integral(Composition(3)))

# Two parts: the inner integral runs from q to t_2.
I = Composition(1, 3)
print("g_(1,3) =", g_integral(I))
print("same by recursion:", g_integral(I) == g_recursive(I))

# Dividing n! g_I by (1-q)^r leaves integer coefficients.
print("P_(1,3) =", reduced_P(I))

#############################################################################
# The full table for n = 4, with the constant term n!/(i_1 (i_1+i_2) ...).

for I in compositions_of(4):
    P = reduced_P(I)
    print(f"{str(I):>8}: {P.render():<18} P(0)={P(0)}  expected {p_at_zero(I)}")

#############################################################################
# The recursion relating P_I, P_{I^1} and P_{(i_2,...,i_r)} holds exactly.

for n in range(2, 9):
    print(n, check_ad_recursion(n).lines())
