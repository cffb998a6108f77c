import random

import pytest

from affine_hecke.affine_weyl import RootDatum
from affine_hecke.errors import DefinitenessError, InvarianceError, UnsupportedDatumError
from affine_hecke.heisenberg import DoubleCosetLabel as L, HeisenbergGroup
from affine_hecke.lattice_forms import EvenSymmetricForm, IntegerBilinearForm
from affine_hecke.serialize import format_hecke, format_series
from affine_hecke.series import GradedSeries, mul
from affine_hecke.torus_hecke import (
    HeckeElement,
    PrincipalSeriesElement,
    act_on_principal_series,
    act_oracle,
    convolve,
    convolve_oracle,
    delta,
    drift_floor,
    from_theta_series,
    to_theta_series,
    unit,
)

G1 = HeisenbergGroup(IntegerBilinearForm(((-1,),)))
G2 = HeisenbergGroup(IntegerBilinearForm(((-1, 0), (-1, -1))))
Q1, Q2 = G1.q, G2.q


def terms(s):
    return {(lam[0], n): int(c) for (lam, n), c in s.coeffs.items()}


def test_delta_elements():
    assert delta(L(1, 0, (0,)), 5).coeffs == {(0, (0,)): 1}
    assert delta(L(0, 3, (0,)), 5).k == 0
    assert delta(L(2, -4, (1,)), 5).coeffs == {(-4, (1,)): 1}


def test_theta_series_examples():
    assert terms(to_theta_series(delta(L(1, 0, (0,)), 5), Q1)) == {(0, 0): 1, (1, 1): 1, (-1, 1): 1, (2, 4): 1, (-2, 4): 1}
    assert terms(to_theta_series(delta(L(0, 3, (0,)), 5), Q1)) == {(0, 3): 1}
    assert terms(to_theta_series(delta(L(1, -1, (0,)), 4), Q1)) == {(0, -1): 1, (1, 0): 1, (-1, 0): 1, (2, 3): 1, (-2, 3): 1}


def test_drift_floor():
    assert drift_floor(Q1, 1) == drift_floor(Q1, 2) == 0
    assert drift_floor(Q2, 2) == -1
    # a label at the truncation can still reach one degree lower in rank 2
    s = to_theta_series(delta(L(2, 0, (1, 1)), 3), Q2)
    assert s.trunc == 2 and s.n_min == -1


def test_roundtrip():
    for h in (delta(L(1, 0, (0,)), 6), delta(L(0, 3, (0,)), 6), delta(L(2, 1, (1, 0)), 6)):
        q = Q1 if h.rank == 1 else Q2
        assert from_theta_series(to_theta_series(h, q), q).agrees_with(h)


def test_from_theta_rejects_non_invariant():
    bad = GradedSeries(1, 1, 4, {((0,), 0): 1, ((1,), 1): 1})
    with pytest.raises(InvarianceError, match="not in the image of the Hecke algebra"):
        from_theta_series(bad, Q1)


def test_definite_form_required():
    with pytest.raises(DefinitenessError):
        to_theta_series(delta(L(1, 0, (0,)), 4), EvenSymmetricForm(((2,),)))


def test_square_of_theta():
    d = delta(L(1, 0, (0,)), 4)
    want = "level 2 | 1 v^0 x^[0] + 2 v^1 x^[1] + 2 v^2 x^[0] (certified to v^4)"
    assert format_hecke(convolve(d, d, Q1)) == want
    assert format_hecke(convolve_oracle(d, d, 4, G1)) == want


def test_theta_squared_reads_back():
    d = delta(L(1, 0, (0,)), 4)
    theta = to_theta_series(d, Q1)
    h = from_theta_series(mul(theta, theta), Q1)
    assert h.coeffs == {(0, (0,)): 1, (1, (1,)): 2, (2, (0,)): 2}


def test_unit_and_shift():
    d = delta(L(1, 0, (0,)), 8)
    assert convolve(unit(1, 8), d, Q1).agrees_with(d)
    assert convolve_oracle(unit(1, 8), d, 8, G1).agrees_with(d)
    shifted = convolve(delta(L(0, 3, (0,)), 8), d, Q1)
    assert shifted.coeffs == d.shift(3).coeffs
    assert convolve_oracle(delta(L(0, 1, (0,)), 8), delta(L(0, 2, (0,)), 8), 8, G1).coeffs == {(3, (0,)): 1}


def test_oracle_certifies_its_window():
    d1, d2 = delta(L(1, 0, (0,)), 20), delta(L(2, 1, (1,)), 20)
    assert convolve_oracle(d1, d2, 7, G1).trunc == 7
    # a short input truncation limits what the oracle can claim
    assert convolve_oracle(delta(L(1, 0, (0,)), 3), d2, 7, G1).trunc == 3 + G1.minimal_degree(L(2, 1, (1,)))


def test_rank_two_routes_agree():
    rng = random.Random(5)
    for _ in range(6):
        k1, k2 = rng.choice([(1, 1), (1, 2), (2, 1)])
        h1 = delta(L(k1, rng.randint(-1, 1), tuple(rng.randrange(k1) for _ in range(2))), 9)
        h2 = delta(L(k2, rng.randint(-1, 1), tuple(rng.randrange(k2) for _ in range(2))), 9)
        assert convolve_oracle(h1, h2, 6, G2).agrees_with(convolve(h1, h2, Q2))


def test_hecke_element_validation():
    with pytest.raises(Exception, match="not in"):
        HeckeElement(2, 1, 5, {(0, (2,)): 1})


def test_principal_series():
    f = PrincipalSeriesElement.point_mass(0, (0,), 0, 6)
    assert act_on_principal_series(unit(1, 6), f, Q1).agrees_with(f)
    shifted = act_on_principal_series(delta(L(0, 1, (0,)), 6), f, Q1)
    assert shifted.coeffs == {(0, (0,), 1): 1}
    image = act_on_principal_series(delta(L(1, 0, (0,)), 6), f, Q1)
    assert image.coeffs == {(1, (nu,), nu * nu): 1 for nu in range(-2, 3)}
    assert image.agrees_with(act_oracle(delta(L(1, 0, (0,)), 6), f, 6, G1))


def test_principal_series_needs_torus():
    with pytest.raises(UnsupportedDatumError, match="torus only"):
        act_on_principal_series(unit(1, 4), PrincipalSeriesElement(1, 4), Q1, RootDatum.simple("A1"))


def test_serialisation_is_stable():
    d = delta(L(2, 1, (1, 0)), 5)
    assert format_series(to_theta_series(d, Q2)) == format_series(to_theta_series(d, Q2))
