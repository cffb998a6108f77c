import pytest
from hypothesis import given, settings, strategies as st

from affine_hecke.errors import SemigroupError
from affine_hecke.heisenberg import DoubleCosetLabel, HeisenbergElement as E, HeisenbergGroup
from affine_hecke.lattice_forms import IntegerBilinearForm

G1 = HeisenbergGroup(IntegerBilinearForm(((-1,),)))
G2 = HeisenbergGroup(IntegerBilinearForm(((-1, 0), (-1, -1))))


def el(a, lam, mu, k):
    return E(a, (lam,), (mu,), k)


def test_multiply():
    assert G1.multiply(el(0, 2, 0, 0), el(3, 1, 1, 1)) == el(1, 3, 1, 1)
    # every twist term has a zero argument here, so only mu picks up k1 * lam2
    assert G1.multiply(el(0, 0, 0, 1), el(0, 1, 0, 0)) == el(0, 1, 1, 1)


def test_inverse():
    assert G1.inverse(el(1, 3, 1, 1)) == el(-1, -3, 2, -1)
    assert G1.inverse(el(5, 0, 2, 0)) == el(-5, 0, -2, 0)


def test_left_normal_form():
    assert G1.left_normal_form(el(1, 3, 1, 1)) == (el(4, 0, 1, 1), (-3,))
    assert G1.left_normal_form(el(7, 0, 2, 3))[0] == el(7, 0, 2, 3)
    assert G1.left_normal_form(el(0, 2, 5, 0))[0] == el(10, 0, 5, 0)


def test_double_coset_labels():
    assert G1.double_coset_normal_form(el(0, 0, 1, 1)) == DoubleCosetLabel(1, -1, (0,))
    assert G1.double_coset_normal_form(el(5, 0, 0, 2)) == DoubleCosetLabel(2, 5, (0,))
    assert G1.double_coset_normal_form(el(0, 0, 3, 2)) == DoubleCosetLabel(2, -4, (1,))
    # level 0: classified by a alone
    assert G1.double_coset_normal_form(el(4, 9, 0, 0)) == DoubleCosetLabel(0, 4, (0,))


@pytest.mark.parametrize("g", [el(0, 0, 1, 0), el(0, 0, 0, -1)])
def test_label_outside_semigroup(g):
    with pytest.raises(SemigroupError, match="outside positive semigroup"):
        G1.double_coset_normal_form(g)


def test_semigroup_membership():
    assert G1.in_positive_semigroup(el(5, 3, 0, 0))
    assert not G1.in_positive_semigroup(el(0, 1, 1, 0))
    assert G1.in_positive_semigroup(el(-7, 0, 4, 2))


def test_left_coset_reps():
    reps = G1.left_coset_reps(DoubleCosetLabel(1, 0, (0,)), 4)
    assert sorted((g.a, g.mu[0]) for g in reps) == [(0, 0), (1, -1), (1, 1), (4, -2), (4, 2)]
    assert [(g.a, g.mu) for g in G1.left_coset_reps(DoubleCosetLabel(1, 0, (0,)), 0)] == [(0, (0,))]
    # mu = 1 and mu = -1 have the same degree at level 2
    reps = G1.left_coset_reps(DoubleCosetLabel(2, -4, (1,)), -3)
    assert [(g.a, g.mu) for g in reps] == [(-4, (-1,)), (-4, (1,))]
    assert G1.left_coset_reps(DoubleCosetLabel(0, 3, (0,)), -100) == [el(3, 0, 0, 0)]


def test_reps_share_the_label():
    label = DoubleCosetLabel(2, 1, (1, 0))
    for g in G2.left_coset_reps(label, 6):
        assert G2.double_coset_normal_form(g) == label
    assert G2.minimal_degree(label) <= label.a


def test_subgroup_closed():
    x, y = G2.subgroup_element((1, -2)), G2.subgroup_element((3, 4))
    assert G2.multiply(x, y) == G2.subgroup_element((4, 2))
    assert G2.inverse(x) == G2.subgroup_element((-1, 2))


vec2 = st.tuples(st.integers(-5, 5), st.integers(-5, 5))
elem2 = st.builds(E, st.integers(-9, 9), vec2, vec2, st.integers(-3, 3))


@settings(max_examples=200, deadline=None)
@given(elem2, elem2, elem2)
def test_associativity_and_inverse(x, y, z):
    assert G2.multiply(G2.multiply(x, y), z) == G2.multiply(x, G2.multiply(y, z))
    assert G2.multiply(x, G2.inverse(x)) == G2.identity


@settings(max_examples=200, deadline=None)
@given(st.builds(E, st.integers(-9, 9), vec2, vec2, st.integers(1, 3)), vec2, vec2)
def test_label_is_a_double_coset_invariant(g, l1, l2):
    sandwich = G2.multiply(G2.multiply(G2.subgroup_element(l1), g), G2.subgroup_element(l2))
    assert G2.double_coset_normal_form(sandwich) == G2.double_coset_normal_form(g)
