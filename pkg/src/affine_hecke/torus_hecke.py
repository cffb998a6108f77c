"""Hecke algebra of the Heisenberg semigroup relative to G0, and its theta-series model.

A Hecke element of level k is a function on double cosets, stored by label
(a, mu_bar) with mu_bar in the box [0, k)^r and known for a < trunc.  Two
convolution routes are provided:

* ``convolve``: push both factors to theta series, multiply, read back;
* ``convolve_oracle``: count coset representatives with group arithmetic only.

Their agreement is the torus Satake/theta isomorphism.
"""
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Tuple

from .errors import DefinitenessError, GradingError, InvarianceError, UnsupportedDatumError
from .heisenberg import DoubleCosetLabel, HeisenbergElement, HeisenbergGroup
from .lattice_forms import EvenSymmetricForm, e_map, enumerate_sublevel, is_negative_definite, minimum_value
from .series import GradedSeries, mul, translation_check

HeckeKey = Tuple[int, Tuple[int, ...]]


def box(k, rank):
    """The fundamental domain {0, ..., k-1}^r for L / kL (just the origin when k = 0)."""
    if k == 0:
        return [(0,) * rank]
    return list(product(range(k), repeat=rank))


class HeckeElement:
    __slots__ = ("k", "rank", "trunc", "coeffs")

    def __init__(self, k, rank, trunc, coeffs: Dict[HeckeKey, object] = None):
        self.k = k
        self.rank = rank
        self.trunc = trunc
        self.coeffs = {}
        for (a, mu), c in (coeffs or {}).items():
            mu = tuple(mu)
            if k == 0 and any(mu):
                raise GradingError("torus_hecke", "level-0 Hecke keys must have mu_bar = 0")
            if k > 0 and any(not 0 <= m < k for m in mu):
                raise GradingError("torus_hecke", f"mu_bar={mu} is not in [0, {k})^{rank}")
            if a < trunc and c != 0:
                self.coeffs[(a, mu)] = Fraction(c)

    def items(self):
        return sorted(self.coeffs.items())

    @property
    def a0(self):
        """Lowest stored degree (the truncation when nothing is stored)."""
        return min((a for a, _ in self.coeffs), default=self.trunc)

    def labels(self):
        return [(DoubleCosetLabel(self.k, a, mu), c) for (a, mu), c in self.items()]

    def truncate(self, trunc):
        return HeckeElement(self.k, self.rank, min(trunc, self.trunc), self.coeffs)

    def shift(self, a):
        return HeckeElement(self.k, self.rank, self.trunc + a, {(b + a, mu): c for (b, mu), c in self.coeffs.items()})

    def agrees_with(self, other, window=None):
        w = min(self.trunc, other.trunc)
        if window is not None:
            w = min(w, window)
        return self.k == other.k and self.truncate(w).coeffs == other.truncate(w).coeffs

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return (self.k, self.trunc, self.coeffs) == (other.k, other.trunc, other.coeffs)

    def __add__(self, other):
        if self.k != other.k:
            raise GradingError("torus_hecke", "cannot add Hecke elements of different levels")
        out = defaultdict(Fraction)
        for key, c in list(self.coeffs.items()) + list(other.coeffs.items()):
            out[key] += c
        return HeckeElement(self.k, self.rank, min(self.trunc, other.trunc), out)

    def __rmul__(self, c):
        return HeckeElement(self.k, self.rank, self.trunc, {key: c * x for key, x in self.coeffs.items()})

    def __repr__(self):
        from .serialize import format_hecke
        return f"HeckeElement({format_hecke(self)})"


def delta(label: DoubleCosetLabel, trunc: int) -> HeckeElement:
    return HeckeElement(label.k, len(label.mu_bar), trunc, {(label.a, tuple(label.mu_bar)): 1})


def unit(rank, trunc) -> HeckeElement:
    return delta(DoubleCosetLabel(0, 0, (0,) * rank), trunc)


def _require_definite(q, module="torus_hecke"):
    if not is_negative_definite(q):
        raise DefinitenessError(module, "Q must be negative definite (theta support is not bounded below otherwise)")


@lru_cache(maxsize=None)
def drift_floor(q: EvenSymmetricForm, k: int) -> int:
    """min over mu_bar in the box and all nu of -Q(mu_bar, nu) - k Q(nu, nu)/2.

    This is <= 0 and measures how far below its label degree a double coset
    can reach; truncations lose this much when moving to theta series.
    """
    if k == 0:
        return 0
    return min(minimum_value(q, k, e_map(q, mu)) for mu in box(k, q.rank))


def theta_trunc(h: HeckeElement, q) -> int:
    return h.trunc + drift_floor(q, h.k)


def to_theta_series(h: HeckeElement, q: EvenSymmetricForm) -> GradedSeries:
    """F = sum f(a, mu) v^a x^mu over the whole lattice, each label spread along its orbit.

    The result is certified below h.trunc + drift_floor(q, k): unknown labels
    with a >= h.trunc cannot reach lower than that.
    """
    _require_definite(q)
    trunc = theta_trunc(h, q)
    if h.k == 0:
        return GradedSeries(0, h.rank, trunc, {((0,) * h.rank, a): c for (a, _), c in h.coeffs.items()})
    out = {}
    for (a, mu), c in h.coeffs.items():
        for nu, val in enumerate_sublevel(q, h.k, e_map(q, mu), trunc - 1 - a):
            out[(tuple(m + h.k * v for m, v in zip(mu, nu)), a + val)] = c
    return GradedSeries(h.k, h.rank, trunc, out)


def from_theta_series(s: GradedSeries, q: EvenSymmetricForm) -> HeckeElement:
    """Read the coefficients at lam in the fundamental box; rejects non-invariant input."""
    _require_definite(q)
    if s.k < 0:
        raise InvarianceError("torus_hecke", "series is not in the image of the Hecke algebra (negative level)")
    if s.k == 0:
        if any(any(lam) for lam, _ in s.coeffs):
            raise InvarianceError("torus_hecke", "series is not in the image of the Hecke algebra")
        return HeckeElement(0, s.rank, s.trunc, {(n, lam): c for (lam, n), c in s.coeffs.items()})
    ok, _ = translation_check(q, s)
    if not ok:
        raise InvarianceError("torus_hecke", "series is not in the image of the Hecke algebra")
    coeffs = {(n, lam): c for (lam, n), c in s.coeffs.items() if all(0 <= x < s.k for x in lam)}
    return HeckeElement(s.k, s.rank, s.trunc, coeffs)


def convolve(h1: HeckeElement, h2: HeckeElement, q: EvenSymmetricForm) -> HeckeElement:
    """Product in the theta model."""
    return from_theta_series(mul(to_theta_series(h1, q), to_theta_series(h2, q)), q)


def _label_floor(group, h):
    """Certified lower bound for the degrees of all coset representatives of h."""
    return min((group.minimal_degree(lbl) for lbl, _ in h.labels()), default=theta_trunc(h, group.q))


def oracle_truncation(group: HeisenbergGroup, h1, h2, window):
    m1, m2 = _label_floor(group, h1), _label_floor(group, h2)
    t1, t2 = theta_trunc(h1, group.q), theta_trunc(h2, group.q)
    return min(window, t1 + m2, t2 + m1), m1, m2


def convolve_oracle(h1: HeckeElement, h2: HeckeElement, window: int, group: HeisenbergGroup) -> HeckeElement:
    """Convolution by counting: coefficient at z = sum over x in X / G0 of h1(X) h2(x^-1 z).

    Targets z run over the labels of level k1 + k2 with degree below the
    certified truncation, which is returned as the result's ``trunc``.  Only
    group multiplication, inversion and double-coset normal forms are used.
    """
    _require_definite(group.q)
    cert, m1, m2 = oracle_truncation(group, h1, h2, window)
    level = h1.k + h2.k
    rank = group.rank
    xs = []
    for lbl, c in h1.labels():
        for x in group.left_coset_reps(lbl, cert - 1 - m2):
            xs.append((group.inverse(x), c))
    out = defaultdict(Fraction)
    for c_deg in range(m1 + m2, cert):
        for rho in box(level, rank):
            z = group.representative(DoubleCosetLabel(level, c_deg, rho))
            total = Fraction(0)
            for x_inv, c in xs:
                w = group.multiply(x_inv, z)
                if not group.in_positive_semigroup(w):
                    continue
                lbl = group.double_coset_normal_form(w)
                coeff = h2.coeffs.get((lbl.a, lbl.mu_bar))
                if coeff:
                    total += c * coeff
            if total:
                out[(c_deg, rho)] = total
    return HeckeElement(level, rank, cert, out)


class PrincipalSeriesElement:
    """Function on the affine weight lattice Z x L x Z, keys (k, lam, n), known for n < trunc."""

    __slots__ = ("rank", "trunc", "coeffs")

    def __init__(self, rank, trunc, coeffs=None):
        self.rank = rank
        self.trunc = trunc
        self.coeffs = {(k, tuple(lam), n): Fraction(c) for (k, lam, n), c in (coeffs or {}).items()
                       if n < trunc and c != 0}

    @classmethod
    def point_mass(cls, k, lam, n, trunc):
        return cls(len(lam), trunc, {(k, tuple(lam), n): 1})

    @property
    def n_min(self):
        return min((n for _, _, n in self.coeffs), default=self.trunc)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (kv[0][0], kv[0][2], kv[0][1]))

    def truncate(self, trunc):
        return PrincipalSeriesElement(self.rank, min(trunc, self.trunc), self.coeffs)

    def agrees_with(self, other, window=None):
        w = min(self.trunc, other.trunc)
        if window is not None:
            w = min(w, window)
        return self.truncate(w).coeffs == other.truncate(w).coeffs

    def __eq__(self, other):
        if not isinstance(other, PrincipalSeriesElement):
            return NotImplemented
        return (self.trunc, self.coeffs) == (other.trunc, other.coeffs)

    def __repr__(self):
        terms = " + ".join(f"{c} [{k},{list(lam)},{n}]" for (k, lam, n), c in self.items())
        return f"PrincipalSeriesElement({terms or '0'} | n < {self.trunc})"


def act_on_principal_series(h: HeckeElement, f: PrincipalSeriesElement, q: EvenSymmetricForm,
                            root_datum=None) -> PrincipalSeriesElement:
    """Hecke action on the torus principal series, realised as multiplication by the theta series of h.

    For a torus there are no roots, so no rho-shift is needed.
    """
    if root_datum is not None and root_datum.has_roots:
        raise UnsupportedDatumError("torus_hecke", "principal-series action implemented for torus only")
    theta = to_theta_series(h, q)
    trunc = min(theta.trunc + f.n_min, f.trunc + theta.n_min)
    out = defaultdict(Fraction)
    for (lam1, n1), c1 in theta.coeffs.items():
        for (k2, lam2, n2), c2 in f.coeffs.items():
            n = n1 + n2
            if n < trunc:
                out[(theta.k + k2, tuple(a + b for a, b in zip(lam1, lam2)), n)] += c1 * c2
    return PrincipalSeriesElement(h.rank, trunc, out)


def act_oracle(h: HeckeElement, f: PrincipalSeriesElement, window: int, group: HeisenbergGroup) -> PrincipalSeriesElement:
    """Direct coset computation of h(f)(z) = sum over (x, w) with x w = z of h(x) f(w).

    The G0-orbits on the principal series are represented by the elements
    (n, 0, lam, k) of the normal subgroup, identified with the weight (k, lam, n).
    x runs over coset representatives of each double coset of h.
    """
    _require_definite(group.q)
    m_h = _label_floor(group, h)
    cert = min(window, theta_trunc(h, group.q) + f.n_min, f.trunc + m_h)
    out = defaultdict(Fraction)
    for lbl, c in h.labels():
        for x in group.left_coset_reps(lbl, cert - 1 - f.n_min):
            for (k, lam, n), cf in f.coeffs.items():
                z, _ = group.left_normal_form(group.multiply(x, HeisenbergElement(n, (0,) * group.rank, lam, k)))
                if z.a < cert:
                    out[(z.k, z.mu, z.a)] += c * cf
    return PrincipalSeriesElement(group.rank, cert, out)
