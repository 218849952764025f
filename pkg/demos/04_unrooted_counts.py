"""
Unrooted counts through orbifolds
=================================

Burnside's lemma over rotations of period L in {1, 2, 4}: each admissible
orbifold signature contributes (epimorphisms) x (rooted quotient maps),
and the total is divided by the 8g - 4 darts.
"""

from fourmaps import closedform, oracle, orbifold

# %%
g = 3
for L in (1, 2, 4):
    for sig in orbifold.signatures_for(g, L):
        print(sig, "epi0 =", orbifold.epi0(sig), "share =", orbifold.contribution(sig))
print("total:", orbifold.eps4_unrooted(g))

# %%
# Same number from the period-2 and period-4 sums.
print((closedform.eps4_rooted(g) + orbifold.f2(g) + orbifold.f4(g)) / (8 * g - 4))

# %%
# And from brute force: average number of rotations fixing a rooted map.
print(oracle.count_unrooted_burnside(oracle.SearchSpec.four_regular(g)))

# %%
# The counts grow fast but stay exact integers.
for g in (10, 20, 30):
    print(g, orbifold.eps4_unrooted(g))
