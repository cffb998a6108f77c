"""Truncated level-k series: sparse maps (lam, n) -> rational for the monomial t^k x^lam v^n.

A series only claims to know its coefficients for n < trunc.  ``n_min`` is a
certified lower bound for the support of the untruncated object; products
use it to decide how far their own truncation can be trusted.
"""
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

from .errors import GradingError

Key = Tuple[Tuple[int, ...], int]


def _canon(coeffs, trunc):
    out = {}
    for (lam, n), c in coeffs.items():
        if n < trunc and c != 0:
            out[(tuple(lam), n)] = Fraction(c)
    return out


class GradedSeries:
    __slots__ = ("k", "rank", "trunc", "n_min", "coeffs")

    def __init__(self, k: int, rank: int, trunc: int, coeffs: Optional[Dict[Key, object]] = None,
                 n_min: Optional[int] = None):
        self.k = k
        self.rank = rank
        self.trunc = trunc
        self.coeffs = _canon(coeffs or {}, trunc)
        lowest = min((n for _, n in self.coeffs), default=None)
        if n_min is None:
            n_min = trunc if lowest is None else lowest
        elif lowest is not None and n_min > lowest:
            raise GradingError("char_ring", f"n_min={n_min} exceeds the lowest stored degree {lowest}")
        self.n_min = n_min

    @classmethod
    def monomial(cls, k, lam, n, trunc, coeff=1):
        return cls(k, len(lam), trunc, {(tuple(lam), n): coeff})

    def items(self):
        """Terms in canonical order: by n, then lexicographically by lam."""
        return sorted(self.coeffs.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def __getitem__(self, key):
        lam, n = key
        if n >= self.trunc:
            raise KeyError(f"degree {n} is beyond the truncation {self.trunc}")
        return self.coeffs.get((tuple(lam), n), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return (self.k, self.trunc, self.coeffs) == (other.k, other.trunc, other.coeffs)

    def __repr__(self):
        from .serialize import format_series
        return f"GradedSeries({format_series(self)})"

    def truncate(self, trunc):
        return GradedSeries(self.k, self.rank, min(trunc, self.trunc), self.coeffs, n_min=self.n_min)

    def agrees_with(self, other, window=None) -> bool:
        """Equality of coefficients below min(trunc, other.trunc, window)."""
        w = min(self.trunc, other.trunc)
        if window is not None:
            w = min(w, window)
        if self.k != other.k:
            return False
        return self.truncate(w).coeffs == other.truncate(w).coeffs

    def shift(self, a):
        """Multiply by v^a."""
        return GradedSeries(self.k, self.rank, self.trunc + a,
                            {(lam, n + a): c for (lam, n), c in self.coeffs.items()}, n_min=self.n_min + a)

    def by_degree(self):
        rows = defaultdict(dict)
        for (lam, n), c in self.coeffs.items():
            rows[n][lam] = c
        return rows


def add(s1: GradedSeries, s2: GradedSeries) -> GradedSeries:
    if s1.k != s2.k:
        raise GradingError("char_ring", "inhomogeneous sum not representable")
    trunc = min(s1.trunc, s2.trunc)
    out = defaultdict(Fraction)
    for key, c in s1.coeffs.items():
        out[key] += c
    for key, c in s2.coeffs.items():
        out[key] += c
    return GradedSeries(s1.k, s1.rank, trunc, out, n_min=min(s1.n_min, s2.n_min))


def scale(s: GradedSeries, c) -> GradedSeries:
    c = Fraction(c)
    return GradedSeries(s.k, s.rank, s.trunc, {key: c * x for key, x in s.coeffs.items()}, n_min=s.n_min)


def sub(s1, s2):
    return add(s1, scale(s2, -1))


def mul(s1: GradedSeries, s2: GradedSeries) -> GradedSeries:
    """Cauchy product; level k1 + k2, truncation min(N1 + n_min2, N2 + n_min1)."""
    if s1.rank != s2.rank:
        raise GradingError("char_ring", f"rank mismatch {s1.rank} vs {s2.rank}")
    trunc = min(s1.trunc + s2.n_min, s2.trunc + s1.n_min)
    out = defaultdict(Fraction)
    rows2 = s2.by_degree()
    for (l1, n1), c1 in s1.coeffs.items():
        for n2, row in rows2.items():
            n = n1 + n2
            if n >= trunc:
                continue
            for l2, c2 in row.items():
                out[(tuple(a + b for a, b in zip(l1, l2)), n)] += c1 * c2
    return GradedSeries(s1.k + s2.k, s1.rank, trunc, out, n_min=s1.n_min + s2.n_min)


def translate_key(q, k, lam, n, nu):
    """Image of the monomial (k, lam, n) under the lattice translation nu."""
    r = len(lam)
    return (tuple(lam[i] + k * nu[i] for i in range(r)),
            n - sum(nu[i] * q.gram[i][j] * lam[j] for i in range(r) for j in range(r)) - k * q.half_norm(nu))


def unit_vectors(rank) -> Iterable[Tuple[int, ...]]:
    for i in range(rank):
        for sign in (1, -1):
            yield tuple(sign if j == i else 0 for j in range(rank))


def translation_check(q, s: GradedSeries):
    """Compare s against its images under the generator translations +-e_i.

    Returns (ok, window).  A pair of monomials related by a generator is compared
    whenever both lie below the truncation.  ``window`` is the lowest degree of a
    stored term with an image beyond the truncation (``s.trunc`` if none), i.e.
    every stored term below it had its whole generator neighbourhood checked.
    """
    window = s.trunc
    for (lam, n), c in s.coeffs.items():
        for nu in unit_vectors(s.rank):
            lam2, n2 = translate_key(q, s.k, lam, n, nu)
            if n2 >= s.trunc:
                window = min(window, n)
                continue
            if s.coeffs.get((lam2, n2), 0) != c:
                return False, window
    return True, window
