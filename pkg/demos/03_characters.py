"""Integrable characters two ways, then expanded in affine orbit sums."""
# %%
from affine_hecke import RootDatum
from affine_hecke.affine_weyl import AffineWeight
from affine_hecke.char_ring import (
    character_matrix,
    expand_in_orbit_sums,
    freudenthal_character,
    is_unitriangular,
    weyl_kac_character,
)

a1 = RootDatum.simple("A1")
basic = AffineWeight(1, (0,), 0)

# %% The zero-weight string of the basic representation counts partitions
wk = weyl_kac_character(a1, basic, 8)
print([int(wk[((0,), n)]) for n in range(8)])
print("Freudenthal agrees:", wk.agrees_with(freudenthal_character(a1, basic, 8)))

# %% Orbit-sum coefficients
for w, c in expand_in_orbit_sums(a1, wk).items():
    print(w, c)

# %% Characters against orbit sums form a unitriangular matrix
labels, rows = character_matrix(a1, 2, 0, 5)
for hw in labels:
    print(hw.lam, hw.n, "|", "  ".join(str(int(rows[hw].get(mu, 0))) for mu in labels))
print("unitriangular:", is_unitriangular(a1, labels, rows))
