"""Heisenberg double cosets and the theta function of the rank-1 lattice."""
# %%
from affine_hecke import HeisenbergGroup, IntegerBilinearForm
from affine_hecke.heisenberg import DoubleCosetLabel, HeisenbergElement
from affine_hecke.serialize import format_hecke, format_series
from affine_hecke.torus_hecke import convolve, delta, from_theta_series, to_theta_series

group = HeisenbergGroup(IntegerBilinearForm(((-1,),)))
q = group.q
print("Q =", q.gram)

# %% Group law and normal forms
g = HeisenbergElement(1, (3,), (1,), 1)
print("g * g^-1 =", group.multiply(g, group.inverse(g)))
print("left normal form:", group.left_normal_form(g))
print("double coset label:", group.double_coset_normal_form(g))

# %% A level-1 delta function becomes the Jacobi theta series
d = delta(DoubleCosetLabel(1, 0, (0,)), 6)
theta = to_theta_series(d, q)
print(format_series(theta))

# %% Convolution is multiplication of theta series
sq = convolve(d, d, q)
print(format_hecke(sq))
print("reads back:", from_theta_series(to_theta_series(sq, q), q).agrees_with(sq))
