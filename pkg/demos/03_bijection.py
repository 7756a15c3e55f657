"""
Walking through the bijection for I = (2,1,1)
=============================================

Both sides of the recursion are weighted sets. phi1 and phi2 send
E1 + E2 onto E1 + E3 while keeping track of sinv.
"""

from qcomp import Composition
from qcomp.bijection import E1Element, E2Element, phi1, phi2, phi_inverse, trace_rows, verify_bijection
from qcomp.permutitions import parse_permutition as P

I = Composition(3, 2, 3)
img = phi1(E1Element(P("361|74|258"), 3), I)
print("phi1:", img, " back:", phi_inverse(img, I))
img = phi2(E2Element(P("26371|458")), I)
print("phi2:", img, " back:", phi_inverse(img, I))

#############################################################################
# Every mapping for (2,1,1): first E1, then E2.

for row in trace_rows(Composition(2, 1, 1)):
    print(row)

rep = verify_bijection(Composition(2, 1, 1))
print("\n".join(rep.lines()))
print("weighted sums:", rep.info["lhs"], "=", rep.info["rhs"])
