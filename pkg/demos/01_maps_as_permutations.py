"""
One-face maps as permutations
=============================

A rooted one-face map on 2n darts is just its edge involution; the face is
the standard cycle and the vertices are the cycles of sigma = alpha . gamma.
"""

from fourmaps import RootedMap, trisections

# %%
# The genus-2 map with edges (1,10)(2,12)(3,5)(4,7)(6,8)(9,11), 0-based.
m = RootedMap.from_pairs(12, [(0, 9), (1, 11), (2, 4), (3, 6), (5, 7), (8, 10)])
print(m)
print("vertices:", m.vertices())
print("degrees: ", m.degree_profile())
print("genus:   ", m.genus())

# %%
# Euler's relation n - k = 2g - 1 for a single face.
print(m.edges - len(m.vertices()), "==", 2 * m.genus() - 1)

# %%
# Trisections: darts h whose sigma-image is smaller but not the vertex minimum.
# There are always exactly 2g of them.
print("trisections:", trisections(m))

# %%
# Re-rooting along the face conjugates alpha by a rotation and keeps every
# structural quantity.
for j in (1, 5):
    r = m.rotate(j)
    print(j, r.alpha, r.genus(), r.degree_profile())

# %%
# The JSON file format read by ``fourmaps map info``.
print(m.to_json())
