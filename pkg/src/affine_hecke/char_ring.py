"""Truncated characters of level-k representations of the dual affine algebra.

Weights are triples (k, lam, n) and a character is a GradedSeries whose key
(lam, n) stands for the monomial x^lam v^n.  The energy n grows downwards in
the weight diagram: translations push n to +infinity, the imaginary root is
delta = (0, 0, -1) and the affine simple roots are (0, alpha_i^vee, 0) and
(0, -theta^vee, -1).  With this sign every irreducible character has its
highest weight at the lowest v-degree, so truncating in v is certifiable.

The invariant form on weights is (w|w') = -Q(lam, lam') - k n' - k' n.
"""
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Tuple

from .affine_weyl import AffineWeight, RootDatum, affine_orbit, reduce_affine_weight
from .errors import GradingError, InvarianceError, UnsupportedDatumError
from .lattice_forms import e_map, enumerate_sublevel, minimum_value
from .series import GradedSeries, add, mul, scale, sub, translation_check

__all__ = [
    "GradedSeries", "add", "scale", "sub", "mul", "orbit_sum", "check_invariance", "weyl_kac_character",
    "freudenthal_character", "expand_in_orbit_sums", "dominance_leq", "character_matrix", "is_unitriangular",
    "reconstruct",
]


def _pair_q(q, x, y):
    r = len(x)
    return sum(Fraction(x[i]) * q.gram[i][j] * y[j] for i in range(r) for j in range(r))


def form(q, w1, w2):
    """(w1|w2) for weights given as (k, lam, n) with possibly rational entries."""
    k1, l1, n1 = w1
    k2, l2, n2 = w2
    return -_pair_q(q, l1, l2) - k1 * Fraction(n2) - k2 * Fraction(n1)


def _as_weight(w) -> AffineWeight:
    k, lam, n = w
    return AffineWeight(int(k), tuple(lam), int(n))


def orbit_sum(rd: RootDatum, w, trunc: int) -> GradedSeries:
    """The sum of x^lam v^n over the W x kL orbit of w, for n < trunc."""
    w = _as_weight(w)
    if w.k < 0 or (w.k == 0 and any(w.lam)):
        raise GradingError("char_ring", "orbit sums exist only for k >= 1, or k = 0 with lam = 0")
    orbit = affine_orbit(rd, w, trunc)
    if w.k == 0:
        n_min = w.n
    else:
        finite = rd.weyl_orbit(w.lam) if rd.has_roots else [w.lam]
        n_min = w.n + min(minimum_value(rd.q, w.k, e_map(rd.q, lam)) for lam in finite)
    return GradedSeries(w.k, rd.rank, trunc, {(x.lam, x.n): 1 for x in orbit}, n_min=min(n_min, trunc))


def check_invariance(rd: RootDatum, s: GradedSeries) -> Tuple[bool, int]:
    """(ok, window): exact symmetry under the simple reflections and under the generator translations
    wherever both monomials lie below the truncation; ``window`` bounds what the translations certified."""
    if s.k == 0:
        if any(any(lam) for lam, _ in s.coeffs):
            return False, s.trunc
    if rd.has_roots:
        for (lam, n), c in s.coeffs.items():
            for i in range(rd.semisimple_rank):
                if s.coeffs.get((rd.simple_reflect(i, lam), n), 0) != c:
                    return False, s.trunc
    if s.k == 0:
        return True, s.trunc
    return translation_check(rd.q, s)


def _require_character_datum(rd: RootDatum, hw: AffineWeight):
    if not rd.has_roots:
        raise UnsupportedDatumError("char_ring", "characters need a semisimple datum")
    if not rd.simply_laced:
        raise UnsupportedDatumError("char_ring", "twisted dual not supported")
    if rd.central_rank or len(rd.components) != 1:
        raise UnsupportedDatumError("char_ring", "characters implemented for simple types without central directions")
    if hw.k < 1:
        raise GradingError("char_ring", f"highest weight must have level >= 1, got {hw.k}")
    if not rd.is_dominant(hw.lam, hw.k):
        raise GradingError("char_ring", f"{tuple(hw)} is not dominant of level {hw.k}")


def rho_hat(rd: RootDatum, energy=0):
    """(h^vee, rho, energy): pairs to 1 with every affine simple coroot.  Any energy works."""
    return (rd.dual_coxeter, rd.rho, energy)


def _finite_roots(rd):
    pos = [tuple(c) for c in rd.positive_coroots]
    return pos, pos + [tuple(-x for x in c) for c in pos]


def _divide_by_root(poly: Dict, beta) -> Dict:
    """Exact quotient of a Laurent polynomial by (1 - x^-beta); raises if it does not divide."""
    i = next(t for t, b in enumerate(beta) if b)
    lines = defaultdict(dict)
    for lam, c in poly.items():
        t = lam[i] // beta[i]
        base = tuple(x - t * b for x, b in zip(lam, beta))
        lines[base][t] = c
    out = {}
    for base, row in lines.items():
        lo, hi = min(row), max(row)
        acc = Fraction(0)
        for t in range(hi, lo - 1, -1):
            acc += row.get(t, 0)
            if acc:
                out[tuple(x + t * b for x, b in zip(base, beta))] = acc
        if acc:
            raise ArithmeticError("Weyl numerator slice is not divisible by the denominator")
    return out


def _inverse_denominator(rd: RootDatum, depth: int) -> GradedSeries:
    """prod over m >= 1 of (1 - v^m)^-r prod over roots beta of (1 - x^beta v^m)^-1, below v^depth."""
    r = rd.rank
    zero = (0,) * r
    result = GradedSeries(0, r, depth, {(zero, 0): 1})
    _, roots = _finite_roots(rd)
    for m in range(1, depth):
        factors = [zero] * rd.semisimple_rank + roots
        for beta in factors:
            geo = {}
            j = 0
            while j * m < depth:
                geo[(tuple(j * b for b in beta), j * m)] = 1
                j += 1
            result = mul(result, GradedSeries(0, r, depth, geo))
    return result


def weyl_kac_character(rd: RootDatum, hw, trunc: int) -> GradedSeries:
    """Character of the integrable irreducible with highest weight hw, below v^trunc.

    Numerator: sum over w in W and nu in L of sign(w) x^(w t_nu(hw + rho) - rho), the
    translations enumerated exhaustively at level k + h^vee.  Each v-degree slice is
    divided exactly by prod over alpha > 0 of (1 - x^-alpha), then multiplied by
    the inverse of the v-dependent part of the denominator.
    """
    hw = _as_weight(hw)
    _require_character_datum(rd, hw)
    k, lam, n0 = hw
    q = rd.q
    h = rd.dual_coxeter
    rho = rd.rho
    shifted = tuple(Fraction(x) + p for x, p in zip(lam, rho))
    level = k + h
    numerator = defaultdict(lambda: defaultdict(Fraction))
    if trunc > n0:
        for nu, val in enumerate_sublevel(q, level, e_map(q, shifted), trunc - 1 - n0):
            mu = tuple(x + level * y for x, y in zip(shifted, nu))
            for mat, sign in rd.weyl_group:
                image = tuple(sum(mat[i][j] * mu[j] for j in range(rd.rank)) - rho[i] for i in range(rd.rank))
                numerator[n0 + val][tuple(int(x) for x in image)] += sign
    pos, _ = _finite_roots(rd)
    body = {}
    for n, poly in numerator.items():
        poly = {key: c for key, c in poly.items() if c}
        for beta in pos:
            poly = _divide_by_root(poly, beta)
        for key, c in poly.items():
            body[(key, n)] = c
    depth = max(trunc - n0, 0)
    core = GradedSeries(k, rd.rank, trunc, body, n_min=min(n0, trunc))
    return mul(core, _inverse_denominator(rd, depth)) if depth else core


def _positive_affine_roots(rd: RootDatum, max_m: int):
    """(root, multiplicity) with root = (0, beta, -m); energies m up to max_m."""
    pos, roots = _finite_roots(rd)
    zero = (0,) * rd.rank
    out = [((0, beta, 0), 1) for beta in pos]
    for m in range(1, max_m + 1):
        out.append(((0, zero, -m), rd.semisimple_rank))
        out.extend(((0, beta, -m), 1) for beta in roots)
    return out


def freudenthal_character(rd: RootDatum, hw, trunc: int, rho_energy=0) -> GradedSeries:
    """Same character via the Freudenthal multiplicity recursion.

    Weights are processed by increasing energy and, within one energy, by
    decreasing height, so every term on the right is already known.
    """
    hw = _as_weight(hw)
    _require_character_datum(rd, hw)
    k, lam0, n0 = hw
    q = rd.q
    rh = rho_hat(rd, rho_energy)
    h, rho = rd.dual_coxeter, rd.rho
    top = form(q, _add_w(hw, rh), _add_w(hw, rh))
    roots = _positive_affine_roots(rd, max(trunc - n0 - 1, 0))
    mult: Dict[Tuple, Fraction] = {}

    def inside(lam, n):
        # |mu + rho_hat|^2 <= |hw + rho_hat|^2 holds for every weight
        x = _add_w((k, lam, n), rh)
        return form(q, x, x) <= top

    for n in range(n0, trunc):
        bound = top + 2 * (k + h) * (n + rho_energy) + _pair_q(q, rho, rho)
        cands = [tuple(nu) for nu, _ in enumerate_sublevel(q, 2, e_map(q, tuple(2 * p for p in rho)), bound)]
        cands.sort(key=lambda lam: (-sum(lam), lam))
        for lam in cands:
            mu = (k, lam, n)
            if (lam, n) == (tuple(lam0), n0):
                mult[(lam, n)] = Fraction(1)
                continue
            lhs = top - form(q, _add_w(mu, rh), _add_w(mu, rh))
            rhs = Fraction(0)
            for alpha, m_alpha in roots:
                _, beta, e = alpha
                sq = form(q, alpha, alpha)
                j = 1
                while True:
                    lam_j = tuple(x + j * b for x, b in zip(lam, beta))
                    n_j = n + j * e
                    if n_j < n0 or not inside(lam_j, n_j):
                        break
                    c = mult.get((lam_j, n_j))
                    if c:
                        rhs += m_alpha * (form(q, mu, alpha) + j * sq) * c
                    j += 1
            rhs *= 2
            if lhs == 0:
                if rhs != 0:
                    raise ArithmeticError(f"Freudenthal recursion is singular at {mu}")
                continue
            value = rhs / lhs
            if value.denominator != 1 or value < 0:
                raise ArithmeticError(f"non-integral multiplicity {value} at {mu}")
            if value:
                mult[(lam, n)] = value
    return GradedSeries(k, rd.rank, trunc, mult, n_min=min(n0, trunc))


def _add_w(w, v):
    return (w[0] + v[0], tuple(Fraction(a) + b for a, b in zip(w[1], v[1])), Fraction(w[2]) + v[2])


def expand_in_orbit_sums(rd: RootDatum, s: GradedSeries) -> Dict[AffineWeight, Fraction]:
    """Coefficients c with s = sum c[w] orbit_sum(w) below the truncation.

    Orbits are peeled off in order of increasing energy.  Each is named by its
    reduced representative (see reduce_affine_weight).  A non-invariant input
    is detected when peeling would create terms at an energy already done.
    """
    if s.k < 0:
        raise InvarianceError("char_ring", "series not invariant within window (negative level)")
    residual = dict(s.coeffs)
    out = {}
    for n in range(s.n_min, s.trunc):
        while True:
            here = sorted(lam for (lam, m), c in residual.items() if m == n and c)
            if not here:
                break
            lam = here[0]
            c = residual[(lam, n)]
            if s.k == 0 and any(lam):
                raise InvarianceError("char_ring", "series not invariant within window")
            rep = reduce_affine_weight(rd, AffineWeight(s.k, lam, n)) if s.k else AffineWeight(0, lam, n)
            out[rep] = out.get(rep, Fraction(0)) + c
            for (l2, n2), _ in orbit_sum(rd, rep, s.trunc).coeffs.items():
                if n2 < n:
                    raise InvarianceError("char_ring", "series not invariant within window")
                v = residual.get((l2, n2), Fraction(0)) - c
                if v:
                    residual[(l2, n2)] = v
                else:
                    residual.pop((l2, n2), None)
    return {w: c for w, c in sorted(out.items(), key=lambda kv: (kv[0].n, kv[0].lam)) if c}


def reconstruct(rd: RootDatum, coeffs, k: int, trunc: int) -> GradedSeries:
    total = GradedSeries(k, rd.rank, trunc)
    for w, c in coeffs.items():
        total = add(total, scale(orbit_sum(rd, w, trunc), c))
    return total


def _dual_highest_coroots(rd: RootDatum):
    out = []
    for members in rd.components:
        inside = [c for c in rd.positive_coroots if all(c[t] == 0 for t in range(rd.semisimple_rank)
                                                        if t not in members)]
        out.append((members, max(inside, key=lambda c: (sum(c), c))))
    return out


def dominance_leq(rd: RootDatum, w1, w2) -> bool:
    """w1 <= w2: w2 - w1 lies in the nonnegative rational cone of the affine simple roots.

    In (lam, n) coordinates the generators are (alpha_i^vee, 0) and, for each
    simple factor, (-theta^vee, -1).  For a torus the cone is spanned by (0, -1).
    """
    w1, w2 = _as_weight(w1), _as_weight(w2)
    if w1.k != w2.k:
        raise GradingError("char_ring", f"dominance compares equal levels, got {w1.k} and {w2.k}")
    dl = [b - a for a, b in zip(w1.lam, w2.lam)]
    budget = Fraction(w1.n - w2.n)  # total weight on the affine generators
    if budget < 0 or any(dl[rd.semisimple_rank:]):
        return False
    need = Fraction(0)
    for members, thv in _dual_highest_coroots(rd) if rd.has_roots else []:
        # c_i = dl_i + c0 * thv_i >= 0 forces c0 >= max(-dl_i / thv_i)
        need += max([Fraction(0)] + [Fraction(-dl[i], thv[i]) for i in members])
    return need <= budget


def character_matrix(rd: RootDatum, k: int, n_lo: int, trunc: int, character=None):
    """Expansion of the irreducible characters over orbit sums for all (k, lam, n), lam in the alcove,
    n_lo <= n < trunc.  Returns (labels, rows) with rows[hw] = {mu: coefficient}."""
    from .affine_weyl import enumerate_level_k_dominants

    character = character or weyl_kac_character
    labels = [AffineWeight(k, lam, n) for n in range(n_lo, trunc) for lam in enumerate_level_k_dominants(rd, k)]
    base = {lam: character(rd, AffineWeight(k, lam, 0), trunc - n_lo) for lam in enumerate_level_k_dominants(rd, k)}
    rows = {}
    for hw in labels:
        s = base[hw.lam].shift(hw.n).truncate(trunc)
        rows[hw] = expand_in_orbit_sums(rd, s)
    return labels, rows


def is_unitriangular(rd: RootDatum, labels: List[AffineWeight], rows) -> bool:
    """Diagonal entries 1, off-diagonal support strictly dominance-below, and square on ``labels``."""
    index = set(labels)
    for hw in labels:
        row = rows[hw]
        if row.get(hw) != 1:
            return False
        for mu, c in row.items():
            if mu == hw:
                continue
            if mu not in index or not dominance_leq(rd, mu, hw):
                return False
    # a linear extension of dominance orders the matrix as upper triangular
    order = sorted(labels, key=lambda w: (w.n, -sum(w.lam), w.lam))
    pos = {w: i for i, w in enumerate(order)}
    return all(pos[mu] >= pos[hw] for hw in labels for mu in rows[hw])
