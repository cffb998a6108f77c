from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from affine_hecke.errors import ConfigError, DefinitenessError
from affine_hecke.lattice_forms import (
    EvenSymmetricForm,
    IntegerBilinearForm,
    b_from_q,
    derive_q,
    e_map,
    enumerate_sublevel,
    eval_b,
    eval_q,
    is_negative_definite,
    leading_minors,
    minimum_value,
    sublevel_value,
)

Q1 = EvenSymmetricForm(((-2,),))
Q2 = EvenSymmetricForm(((-2, -1), (-1, -2)))


@pytest.mark.parametrize("b, q", [
    (((-1,),), ((-2,),)),
    (((0, 1), (0, 0)), ((0, 1), (1, 0))),
    (((-1, 0), (-1, -1)), ((-2, -1), (-1, -2))),
])
def test_derive_q(b, q):
    assert derive_q(IntegerBilinearForm(b)).gram == q


def test_pairings():
    assert eval_b(IntegerBilinearForm(((-1,),)), (2,), (1,)) == -2
    assert eval_q(Q1, (3,), (-1,)) == 6
    assert eval_q(Q2, (1, 0), (0, 1)) == -1
    with pytest.raises(ConfigError):
        eval_q(Q2, (1,), (0, 1))


def test_e_map():
    assert e_map(Q1, (1,)) == (-2,)
    assert e_map(Q2, (0, 0)) == (0, 0)
    assert e_map(Q2, (1, 0)) == (-2, -1)


def test_definiteness():
    assert is_negative_definite(Q1)
    assert not is_negative_definite(EvenSymmetricForm(((2,),)))
    assert is_negative_definite(Q2)
    assert leading_minors(Q2.gram) == [-2, 3]
    assert not is_negative_definite(EvenSymmetricForm(((0, 1), (1, 0))))


def test_rejects_odd_or_asymmetric():
    with pytest.raises(ConfigError, match="not even"):
        EvenSymmetricForm(((-1,),))
    with pytest.raises(ConfigError, match="not symmetric"):
        EvenSymmetricForm(((-2, 1), (0, -2)))


def test_b_from_q_roundtrip():
    for q in (Q1, Q2, EvenSymmetricForm(((-4, 2, 0), (2, -4, 2), (0, 2, -2)))):
        assert derive_q(b_from_q(q)).gram == q.gram


def test_enumeration_examples():
    assert enumerate_sublevel(Q1, 1, (0,), 4) == [((0,), 0), ((-1,), 1), ((1,), 1), ((-2,), 4), ((2,), 4)]
    assert enumerate_sublevel(Q1, 1, (0,), 0) == [((0,), 0)]
    assert enumerate_sublevel(Q1, 2, (-2,), 3) == [((-1,), 0), ((0,), 0)]


def test_enumeration_requires_definite_form():
    with pytest.raises(DefinitenessError, match="enumeration requires definite form"):
        enumerate_sublevel(EvenSymmetricForm(((2,),)), 1, (0,), 3)


def test_rational_shift():
    hits = enumerate_sublevel(Q1, 2, (Fraction(-1, 2),), 2)
    assert hits == sorted(hits, key=lambda p: (p[1], p[0]))
    assert all(v <= 2 for _, v in hits)
    assert minimum_value(Q1, 1, (0,)) == 0


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([Q1, Q2, EvenSymmetricForm(((-4, 2), (2, -2)))]),
       st.integers(1, 3), st.lists(st.integers(-6, 6), min_size=2, max_size=2), st.integers(-3, 8))
def test_enumeration_matches_scan(q, k, shift, bound):
    shift = tuple(shift[: q.rank])
    got = enumerate_sublevel(q, k, shift, bound)
    # -Q/2 has smallest eigenvalue >= 0.38 on these forms; with |shift| <= 6*sqrt(2) and bound <= 8
    # every hit has |nu| < 23.2
    scan = [(nu, sublevel_value(q, k, shift, nu)) for nu in product(range(-24, 25), repeat=q.rank)]
    want = sorted([(nu, v) for nu, v in scan if v <= bound], key=lambda p: (p[1], p[0]))
    assert got == want
