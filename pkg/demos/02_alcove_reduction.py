"""Folding weights into the level-k alcove of the affine Weyl group."""
# %%
from affine_hecke import RootDatum
from affine_hecke.affine_weyl import AffineWeight, enumerate_level_k_dominants, reduce_affine_weight, reduce_to_dominant

a1, a2 = RootDatum.simple("A1"), RootDatum.simple("A2")

# %% In A1 the level-k alcove has floor(k/2) + 1 coroot-lattice points
for k in range(1, 6):
    print(k, enumerate_level_k_dominants(a1, k))

# %% Each reduction comes with the word that performs it
for lam in [(3,), (-5,), (8,)]:
    print(lam, "->", reduce_to_dominant(a1, lam, 2))

# %% Tracking the energy coordinate as well
w = AffineWeight(2, (4, -3), 0)
print(w, "->", reduce_affine_weight(a2, w))
print("A2 level 3:", enumerate_level_k_dominants(a2, 3))
