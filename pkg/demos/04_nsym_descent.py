"""
The (1-q)-transform in the Psi basis and in the descent algebra
===============================================================

The coefficients of S_n((1-q)A) on products of power sums are exactly the
composition polynomials. Mapping Psi_n to the Dynkin element turns
S_n((1-q)A) into an iterated q-bracket of letters.
"""

from qcomp import compositions_of, g_integral
from qcomp.descent import check_dynkin_identities, dynkin, psi_to_perm, q_dynkin
from qcomp.nsym import S_1mq_psi, check_qbracket_identity, coefficient

e = S_1mq_psi(4)
for I in compositions_of(4):
    c = coefficient(e, I)
    print(f"{str(I):>8}: 24*coeff = {(24 * c).render():<28} equals g_I: {c == g_integral(I)}")

#############################################################################
# The q-bracket form of S_n((1-q)A).

for n in range(1, 6):
    print(check_qbracket_identity(n).lines())

#############################################################################
# Permutation images.

print("dynkin(3) =", dynkin(3))
print("q_dynkin(3) =", q_dynkin(3))
print("image of S_3((1-q)A) =", psi_to_perm(S_1mq_psi(3)))
for n in range(1, 6):
    print(check_dynkin_identities(n).lines())
