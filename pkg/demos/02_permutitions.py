"""
Permutitions and special inversions
===================================

A permutition is a set of lists partitioning {1..n}. Ordering its blocks by
last letter gives a segmented permutation and the shape c(pi).
"""

from qcomp import Composition, canonicalize, enumerate_permutitions, enumerate_shape, reduced_P, sinv_polynomial

pi = canonicalize([(5, 3), (4, 6, 1, 2), (9, 7, 8)])
print(pi, "shape", pi.shape(), "sinv", pi.sinv())

#############################################################################
# The twelve permutitions of shape (1,3) and their statistics.

for p in enumerate_shape(Composition(1, 3)):
    print(p, p.sinv())
print("generating polynomial:", sinv_polynomial(Composition(1, 3)))
print("reduced polynomial:    ", reduced_P(Composition(1, 3)))

#############################################################################
# Counting all permutitions gives the start of A000262.

print([sum(1 for _ in enumerate_permutitions(n)) for n in range(8)])
