"""
Cutting and gluing vertices
===========================

Gluing three vertices of a genus g - 1 map at darts a1 < a2 < a3 gives a
genus g map in which the three darts are intertwined; cutting there undoes it.
"""

from math import comb

from fourmaps import RootedMap, closedform, oracle
from fourmaps.bijection import cut_with_triple, glue_with_triple, intertwined_triples, trisections

# %%
# A star with three leaves.  Glue the three leaves into one vertex.
star = RootedMap.from_alpha(6, [1, 0, 3, 2, 5, 4])
print(star.vertices(), "genus", star.genus())

up, image = glue_with_triple(star, (0, 2, 4))
print(up.vertices(), "genus", up.genus(), "triple now", image)
print("intertwined triples of the result:", intertwined_triples(up))

# %%
# Cutting at the image triple returns the star and the original triple.
print(cut_with_triple(up, image))

# %%
# Counting: maps of genus g with a marked trisection versus maps of genus
# g - 1 with two marked leaves and a subdivided edge.
g = 1
for k in (1, 2, 3):
    n, s = closedform.params14(g, k)
    marked = sum(len(trisections(m)) for m in oracle.enumerate_rooted(oracle.SearchSpec.one_four(g, k)))
    rhs = n * comb(s + 2, s) * oracle.count_rooted14(g - 1, k - 1)
    print(f"k={k}: 2g * eps = {marked}, n * C(s+2, 2) * eps_prev = {rhs}")
