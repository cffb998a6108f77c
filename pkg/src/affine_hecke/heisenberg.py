"""The twisted Heisenberg group Z x (L + L) x Z, its subgroup G0 and coset normal forms.

An element is a quadruple (a, lam, mu, k): central degree, two lattice
vectors and the loop-rotation power.  G0 is {(0, lam, 0, 0)}; the positive
semigroup is everything with k > 0 together with the level-0 elements whose
mu vanishes.
"""
from typing import NamedTuple, Tuple

from .errors import DefinitenessError, SemigroupError
from .lattice_forms import (
    EvenSymmetricForm,
    IntegerBilinearForm,
    Vector,
    derive_q,
    enumerate_sublevel,
    e_map,
    is_negative_definite,
)


class HeisenbergElement(NamedTuple):
    a: int
    lam: Vector
    mu: Vector
    k: int


class DoubleCosetLabel(NamedTuple):
    """Canonical name of a G0 double coset: level, v-degree and mu reduced into [0, k)^r."""

    k: int
    a: int
    mu_bar: Vector


def _add(x, y):
    return tuple(p + q for p, q in zip(x, y))


def _scale(c, x):
    return tuple(c * p for p in x)


def _pair(gram, x, y):
    return sum(x[i] * gram[i][j] * y[j] for i in range(len(x)) for j in range(len(y)))


def reduce_mod(mu, k):
    """Coordinatewise representative of mu modulo k in {0, ..., k-1}^r, and the nu with mu + k nu = rep."""
    nu = tuple(-(m // k) for m in mu)
    return tuple(m % k for m in mu), nu


class HeisenbergGroup:
    """Group law and coset combinatorics for a fixed bilinear form b."""

    def __init__(self, b: IntegerBilinearForm):
        self.b = b
        self.q: EvenSymmetricForm = derive_q(b)
        self.rank = b.rank
        self._g = b.gram

    def element(self, a, lam, mu, k) -> HeisenbergElement:
        return HeisenbergElement(int(a), tuple(lam), tuple(mu), int(k))

    @property
    def identity(self) -> HeisenbergElement:
        z = (0,) * self.rank
        return HeisenbergElement(0, z, z, 0)

    def multiply(self, g1: HeisenbergElement, g2: HeisenbergElement) -> HeisenbergElement:
        a1, l1, m1, k1 = g1
        a2, l2, m2, k2 = g2
        g = self._g
        a = a1 + a2 + _pair(g, l1, m2) - _pair(g, m1, l2) + k1 * _pair(g, l1, l2)
        return HeisenbergElement(a, _add(l1, l2), tuple(p + q + k1 * s for p, q, s in zip(m1, m2, l2)), k1 + k2)

    def inverse(self, g: HeisenbergElement) -> HeisenbergElement:
        a, lam, mu, k = g
        gr = self._g
        return HeisenbergElement(
            -a + _pair(gr, lam, mu) - _pair(gr, mu, lam),
            _scale(-1, lam),
            tuple(k * l - m for l, m in zip(lam, mu)),
            -k,
        )

    def subgroup_element(self, lam) -> HeisenbergElement:
        """(0, lam, 0, 0) in G0."""
        return HeisenbergElement(0, tuple(lam), (0,) * self.rank, 0)

    def in_positive_semigroup(self, g: HeisenbergElement) -> bool:
        return g.k > 0 or (g.k == 0 and not any(g.mu))

    def left_normal_form(self, g: HeisenbergElement) -> Tuple[HeisenbergElement, Vector]:
        """The unique element of G0 g with vanishing lam, and the witness -lam that produces it."""
        witness = _scale(-1, g.lam)
        return self.multiply(self.subgroup_element(witness), g), witness

    def double_coset_normal_form(self, g: HeisenbergElement) -> DoubleCosetLabel:
        if g.k < 0 or (g.k == 0 and any(g.mu)):
            raise SemigroupError("heisenberg", "element outside positive semigroup has no level-0 double-coset label")
        rep, _ = self.left_normal_form(g)
        if rep.k == 0:
            return DoubleCosetLabel(0, rep.a, (0,) * self.rank)
        mu_bar, nu = reduce_mod(rep.mu, rep.k)
        return DoubleCosetLabel(rep.k, self.coset_degree(rep.a, rep.mu, rep.k, nu), mu_bar)

    def coset_degree(self, a, mu, k, nu) -> int:
        """Degree of the representative (., 0, mu + k nu, k) sharing the double coset of (a, 0, mu, k)."""
        return a - _pair(self.q.gram, mu, nu) - k * self.q.half_norm(nu)

    def representative(self, label: DoubleCosetLabel) -> HeisenbergElement:
        return HeisenbergElement(label.a, (0,) * self.rank, tuple(label.mu_bar), label.k)

    def left_coset_reps(self, label: DoubleCosetLabel, bound: int) -> list:
        """Representatives (a_nu, 0, mu_bar + k nu, k) of the cosets in the double coset, with a_nu <= bound.

        These elements lie in the normal subgroup {(a, 0, mu, k)}, which meets every
        one-sided G0 coset exactly once, so they serve for cosets on either side.
        Sorted by (a_nu, mu).
        """
        if label.k == 0:
            return [self.representative(label)]
        if not is_negative_definite(self.q):
            raise DefinitenessError("heisenberg", "enumeration requires definite form")
        shift = e_map(self.q, label.mu_bar)
        reps = []
        for nu, val in enumerate_sublevel(self.q, label.k, shift, bound - label.a):
            mu = _add(label.mu_bar, _scale(label.k, nu))
            reps.append(HeisenbergElement(label.a + val, (0,) * self.rank, mu, label.k))
        reps.sort(key=lambda g: (g.a, g.mu))
        return reps

    def minimal_degree(self, label: DoubleCosetLabel) -> int:
        """Smallest a among the normal-subgroup representatives of the double coset."""
        return self.left_coset_reps(label, label.a)[0].a
