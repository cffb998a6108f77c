"""Randomised property suites behind ``affine-hecke verify``.

Every suite takes a ``random.Random`` and a case count and returns a list of
(name, ok, detail) rows.  Output depends only on the seed.
"""
import random
from typing import Callable, Dict, List, Tuple

from .affine_weyl import (
    AffineWeight,
    RootDatum,
    affine_orbit,
    apply_word,
    enumerate_level_k_dominants,
    monomial_translate,
    reduce_to_dominant,
)
from .char_ring import (
    check_invariance,
    expand_in_orbit_sums,
    freudenthal_character,
    orbit_sum,
    reconstruct,
    weyl_kac_character,
)
from .heisenberg import DoubleCosetLabel, HeisenbergElement, HeisenbergGroup
from .lattice_forms import IntegerBilinearForm, derive_q, is_negative_definite
from .series import GradedSeries, mul
from .torus_hecke import convolve_oracle, delta, from_theta_series, to_theta_series

Row = Tuple[str, bool, str]


def random_definite_b(rng: random.Random, rank: int) -> IntegerBilinearForm:
    """A random integer b with b + b^T negative definite."""
    while True:
        rows = [[rng.randint(-2, 1) for _ in range(rank)] for _ in range(rank)]
        for i in range(rank):
            rows[i][i] = -rng.randint(1, 2)
        b = IntegerBilinearForm(tuple(tuple(r) for r in rows))
        if is_negative_definite(derive_q(b)):
            return b


def random_element(rng, rank, spread=4, k=None) -> HeisenbergElement:
    vec = lambda: tuple(rng.randint(-spread, spread) for _ in range(rank))
    return HeisenbergElement(rng.randint(-spread, spread), vec(), vec(), rng.randint(-3, 3) if k is None else k)


def random_positive(rng, group, spread=4):
    if rng.random() < 0.2:
        return HeisenbergElement(rng.randint(-spread, spread), tuple(rng.randint(-spread, spread)
                                                                     for _ in range(group.rank)),
                                 (0,) * group.rank, 0)
    return random_element(rng, group.rank, spread, k=rng.randint(1, 3))


def _count(name, cases, check) -> Row:
    for i in range(cases):
        detail = check(i)
        if detail:
            return name, False, f"case {i}: {detail}"
    return name, True, f"{cases} cases"


def suite_group(rng: random.Random, cases: int, group: HeisenbergGroup) -> List[Row]:
    groups = [group] + [HeisenbergGroup(random_definite_b(rng, r)) for r in (1, 2, 3)]
    rows = []

    def assoc(i):
        g = groups[i % len(groups)]
        x, y, z = (random_element(rng, g.rank) for _ in range(3))
        if g.multiply(g.multiply(x, y), z) != g.multiply(x, g.multiply(y, z)):
            return f"({x}, {y}, {z})"

    def inverse(i):
        g = groups[i % len(groups)]
        x = random_element(rng, g.rank)
        if g.multiply(x, g.inverse(x)) != g.identity or g.multiply(g.inverse(x), x) != g.identity:
            return f"{x}"

    def normal_form(i):
        g = groups[i % len(groups)]
        x = random_positive(rng, g)
        l1 = g.subgroup_element(tuple(rng.randint(-4, 4) for _ in range(g.rank)))
        l2 = g.subgroup_element(tuple(rng.randint(-4, 4) for _ in range(g.rank)))
        if g.double_coset_normal_form(g.multiply(g.multiply(l1, x), l2)) != g.double_coset_normal_form(x):
            return f"{x}"

    def closure(i):
        g = groups[i % len(groups)]
        x, y = random_positive(rng, g), random_positive(rng, g)
        if not g.in_positive_semigroup(g.multiply(x, y)):
            return f"({x}, {y})"

    rows.append(_count("group.associativity", cases, assoc))
    rows.append(_count("group.inverse", cases, inverse))
    rows.append(_count("group.double_coset_normal_form_invariance", cases, normal_form))
    rows.append(_count("group.semigroup_closure", cases, closure))
    return rows


def _random_delta(rng, k, rank, trunc):
    mu = tuple(rng.randrange(k) for _ in range(rank)) if k else (0,) * rank
    return delta(DoubleCosetLabel(k, rng.randint(-2, 2), mu), trunc)


def suite_hecke(rng: random.Random, cases: int, group: HeisenbergGroup, window: int = 8) -> List[Row]:
    q = group.q
    rank = group.rank
    heavy = max(1, min(cases, 12))
    rows = []

    def satake(i):
        k1, k2 = rng.choice([(1, 1), (1, 2), (2, 1), (0, 1)])
        h1, h2 = _random_delta(rng, k1, rank, window), _random_delta(rng, k2, rank, window)
        h = convolve_oracle(h1, h2, window, group)
        lhs, rhs = to_theta_series(h, q), mul(to_theta_series(h1, q), to_theta_series(h2, q))
        if not lhs.agrees_with(rhs):
            return f"{h1} * {h2}"

    def commutative(i):
        h1, h2 = _random_delta(rng, rng.randint(1, 2), rank, window), _random_delta(rng, 1, rank, window)
        a, b = convolve_oracle(h1, h2, window, group), convolve_oracle(h2, h1, window, group)
        if not a.agrees_with(b):
            return f"{h1}, {h2}"

    def roundtrip(i):
        h = _random_delta(rng, rng.randint(0, 2), rank, window)
        back = from_theta_series(to_theta_series(h, q), q)
        if not back.agrees_with(h):
            return f"{h}"

    def unit(i):
        h = _random_delta(rng, rng.randint(1, 2), rank, window)
        e = delta(DoubleCosetLabel(0, 0, (0,) * rank), window)
        if not convolve_oracle(e, h, window, group).agrees_with(h):
            return f"{h}"

    rows.append(_count("hecke.theta_is_homomorphism", heavy, satake))
    rows.append(_count("hecke.commutativity", heavy, commutative))
    rows.append(_count("hecke.unit", heavy, unit))
    rows.append(_count("hecke.theta_roundtrip", cases, roundtrip))
    return rows


def _random_word(rng, rd, k, length):
    gens = [f"s{i + 1}" for i in range(rd.semisimple_rank)] + (["s0"] if k else [])
    word = []
    for _ in range(length):
        if k and rng.random() < 0.25:
            nu = tuple(rng.randint(-2, 2) for _ in range(rd.rank))
            word.append("t[" + ",".join(map(str, nu)) + "]")
        else:
            word.append(rng.choice(gens))
    return word


def suite_weyl(rng: random.Random, cases: int, data: List[RootDatum]) -> List[Row]:
    rows = []

    def constant(i):
        rd = data[i % len(data)]
        k = rng.randint(0, 4)
        lam = tuple(rng.randint(-15, 15) for _ in range(rd.rank))
        moved = apply_word(rd, lam, k, _random_word(rng, rd, k, rng.randint(1, 8)))
        if reduce_to_dominant(rd, moved, k)[0] != reduce_to_dominant(rd, lam, k)[0]:
            return f"{rd} lam={lam} k={k}"

    def lands(i):
        rd = data[i % len(data)]
        k = rng.randint(1, 4)
        lam = tuple(rng.randint(-30, 30) for _ in range(rd.rank))
        rep, word = reduce_to_dominant(rd, lam, k)
        if apply_word(rd, lam, k, word) != rep or not rd.is_dominant(rep, k):
            return f"{rd} lam={lam} k={k}"

    def cocycle(i):
        rd = data[i % len(data)]
        w = AffineWeight(rng.randint(0, 3), tuple(rng.randint(-5, 5) for _ in range(rd.rank)), rng.randint(-5, 5))
        n1 = tuple(rng.randint(-3, 3) for _ in range(rd.rank))
        n2 = tuple(rng.randint(-3, 3) for _ in range(rd.rank))
        both = monomial_translate(rd, w, tuple(a + b for a, b in zip(n1, n2)))
        if monomial_translate(rd, monomial_translate(rd, w, n1), n2) != both:
            return f"{w} {n1} {n2}"

    def closed(i):
        rd = data[i % len(data)]
        k = rng.randint(1, 3)
        lam = rng.choice(enumerate_level_k_dominants(rd, k)) if rd.has_roots else tuple(
            rng.randrange(k) for _ in range(rd.rank))
        orbit = affine_orbit(rd, AffineWeight(k, lam, 0), 6)
        keys = set(orbit)
        for w in orbit:
            for j in range(rd.semisimple_rank):
                if AffineWeight(w.k, rd.simple_reflect(j, w.lam), w.n) not in keys:
                    return f"{rd} {w}"

    rows.append(_count("weyl.reduction_constant_on_orbits", cases, constant))
    rows.append(_count("weyl.reduction_lands_in_alcove", cases, lands))
    rows.append(_count("weyl.translation_cocycle", cases, cocycle))
    rows.append(_count("weyl.orbit_closed_under_W", max(1, min(cases, 30)), closed))
    rows.append(("weyl.Q_invariant", all(not rd.check_invariance() for rd in data), f"{len(data)} data"))
    counts = [len(enumerate_level_k_dominants(RootDatum.simple("A1"), k)) for k in range(1, 5)]
    rows.append(("weyl.A1_alcove_sizes", counts == [k // 2 + 1 for k in range(1, 5)], f"{counts}"))
    return rows


def _random_series(rng, rank, k=1, trunc=5):
    coeffs = {}
    for _ in range(rng.randint(1, 5)):
        coeffs[(tuple(rng.randint(-2, 2) for _ in range(rank)), rng.randint(0, trunc - 1))] = rng.randint(-3, 3)
    return GradedSeries(k, rank, trunc, coeffs, n_min=0)


def suite_char(rng: random.Random, cases: int, rd: RootDatum) -> List[Row]:
    rows = []
    a1 = rd if rd.has_roots and rd.simply_laced and len(rd.components) == 1 and not rd.central_rank \
        else RootDatum.simple("A1")
    trunc = 6
    agree = True
    detail = []
    for k in (1, 2):
        for lam in enumerate_level_k_dominants(a1, k):
            w = AffineWeight(k, lam, 0)
            wk = weyl_kac_character(a1, w, trunc)
            if wk != freudenthal_character(a1, w, trunc) or not check_invariance(a1, wk)[0]:
                agree = False
                detail.append(str(tuple(w)))
    rows.append(("char.weyl_kac_equals_freudenthal", agree, ", ".join(detail) or f"{a1.cartan_type} levels 1-2"))

    def invariant(i):
        k = rng.randint(1, 3)
        lam = rng.choice(enumerate_level_k_dominants(a1, k))
        s = orbit_sum(a1, AffineWeight(k, lam, rng.randint(-2, 2)), 6)
        if not check_invariance(a1, s)[0]:
            return f"{s}"

    def assoc(i):
        r = rng.randint(1, 2)
        x, y, z = (_random_series(rng, r) for _ in range(3))
        if not mul(mul(x, y), z).agrees_with(mul(x, mul(y, z))) or not mul(x, y).agrees_with(mul(y, x)):
            return f"{x}, {y}, {z}"

    def expand(i):
        k = rng.randint(1, 2)
        lam = rng.choice(enumerate_level_k_dominants(a1, k))
        s = mul(orbit_sum(a1, AffineWeight(k, lam, 0), 6), orbit_sum(a1, AffineWeight(1, (0,) * a1.rank, 0), 6))
        if not reconstruct(a1, expand_in_orbit_sums(a1, s), s.k, s.trunc).agrees_with(s):
            return f"{s}"

    rows.append(_count("char.orbit_sums_invariant", max(1, min(cases, 30)), invariant))
    rows.append(_count("char.mul_associative_commutative", cases, assoc))
    rows.append(_count("char.expansion_reconstructs", max(1, min(cases, 10)), expand))
    return rows


def run_suites(names, seed: int, cases: int, config) -> List[Row]:
    rd = config.root_datum
    weyl_data = [RootDatum.simple("A1"), RootDatum.simple("A2")]
    if rd.has_roots and all(repr(rd) != repr(x) for x in weyl_data):
        weyl_data.append(rd)
    torus_group = config.group if not rd.has_roots else HeisenbergGroup(IntegerBilinearForm(((-1,),)))
    order: Dict[str, Callable[[random.Random], List[Row]]] = {
        "group": lambda r: suite_group(r, cases, config.group),
        "hecke": lambda r: suite_hecke(r, cases, torus_group),
        "weyl": lambda r: suite_weyl(r, cases, weyl_data),
        "char": lambda r: suite_char(r, cases, rd),
    }
    rows = []
    for name in names:
        # one stream per suite, so a suite's report does not depend on which others ran
        rows.extend(order[name](random.Random(f"{seed}:{name}")))
    return rows


def format_report(rows: List[Row]) -> str:
    lines = [f"{'PASS' if ok else 'FAIL'} {name} ({detail})" for name, ok, detail in rows]
    passed = sum(ok for _, ok, _ in rows)
    lines.append(f"summary: {passed}/{len(rows)} passed")
    return "\n".join(lines)


__all__ = ["run_suites", "format_report", "suite_group", "suite_hecke", "suite_weyl", "suite_char"]
