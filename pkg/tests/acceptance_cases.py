"""Shared computations for the acceptance suite and the golden-file generator."""
from functools import lru_cache

from affine_hecke.affine_weyl import AffineWeight, RootDatum, enumerate_level_k_dominants
from affine_hecke.char_ring import freudenthal_character, weyl_kac_character
from affine_hecke.heisenberg import DoubleCosetLabel, HeisenbergGroup
from affine_hecke.lattice_forms import IntegerBilinearForm
from affine_hecke.serialize import format_hecke, format_series
from affine_hecke.series import mul
from affine_hecke.torus_hecke import box, convolve_oracle, delta, to_theta_series

TORUS_FORMS = {
    "rank1": (((-1,),), 12),
    "rank2": (((-1, 0), (-1, -1)), 8),
}
LEVEL_PAIRS = [(1, 1), (1, 2), (2, 2)]
CHAR_TRUNC = 7  # energies n <= 6


def _label_text(lbl):
    return f"{lbl.k},{lbl.a},{','.join(map(str, lbl.mu_bar))}"


@lru_cache(maxsize=None)
def satake_cases(name):
    """Every delta pair of the criterion: (line for the golden file, theta(oracle) == theta product)."""
    b, window = TORUS_FORMS[name]
    group = HeisenbergGroup(IntegerBilinearForm(b))
    q, r = group.q, group.rank
    out = []
    for k1, k2 in LEVEL_PAIRS:
        for a1 in range(-2, 3):
            for m1 in box(k1, r):
                for a2 in range(-2, 3):
                    for m2 in box(k2, r):
                        l1, l2 = DoubleCosetLabel(k1, a1, m1), DoubleCosetLabel(k2, a2, m2)
                        # a delta is known exactly, so any truncation above the window is honest
                        h1, h2 = delta(l1, window + 4), delta(l2, window + 4)
                        h = convolve_oracle(h1, h2, window, group)
                        ok = to_theta_series(h, q).agrees_with(mul(to_theta_series(h1, q), to_theta_series(h2, q)))
                        out.append((f"{_label_text(l1)} * {_label_text(l2)} = {format_hecke(h)}", ok))
    return tuple(out)


@lru_cache(maxsize=None)
def character_cases():
    """(highest weight, line, weyl_kac == freudenthal, weyl_kac series) for A1 levels 1 and 2."""
    rd = RootDatum.simple("A1")
    out = []
    for k in (1, 2):
        for lam in enumerate_level_k_dominants(rd, k):
            hw = AffineWeight(k, lam, 0)
            wk = weyl_kac_character(rd, hw, CHAR_TRUNC)
            fr = freudenthal_character(rd, hw, CHAR_TRUNC)
            out.append((hw, f"{k},{','.join(map(str, lam))},0 -> {format_series(wk)}", wk == fr, wk))
    return tuple(out)


def golden_text(kind):
    if kind == "criterion1":
        return "".join(f"{name}: {line}\n" for name in TORUS_FORMS for line, _ in satake_cases(name))
    if kind == "criterion5":
        return "".join(f"{line}\n" for _, line, _, _ in character_cases())
    raise KeyError(kind)


GOLDEN = ("criterion1", "criterion5")
