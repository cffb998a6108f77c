"""Integer lattices, bilinear forms and exact lattice-point enumeration.

Vectors are plain tuples of ints in the fixed configured basis.  Nothing
here uses floating point: definiteness is decided by leading principal
minors and enumeration bounds are exact rationals.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt, floor, ceil
from typing import Optional, Sequence, Tuple

from .errors import ConfigError, DefinitenessError

Vector = Tuple[int, ...]
Gram = Tuple[Tuple[int, ...], ...]


def _as_gram(rows) -> Gram:
    gram = tuple(tuple(int(x) for x in row) for row in rows)
    r = len(gram)
    if any(len(row) != r for row in gram):
        raise ConfigError([f"gram matrix must be square, got {[list(row) for row in gram]}"])
    return gram


def _check_dims(gram, *vectors):
    r = len(gram)
    for v in vectors:
        if len(v) != r:
            raise ConfigError([f"vector {tuple(v)} has length {len(v)}, lattice rank is {r}"])


def _pair(gram, x, y):
    return sum(x[i] * gram[i][j] * y[j] for i in range(len(x)) for j in range(len(y)))


@dataclass(frozen=True)
class IntegerBilinearForm:
    """A Z-valued bilinear form b, stored by its Gram matrix."""

    gram: Gram

    def __post_init__(self):
        object.__setattr__(self, "gram", _as_gram(self.gram))

    @property
    def rank(self):
        return len(self.gram)

    def __call__(self, x, y):
        return eval_b(self, x, y)


@dataclass(frozen=True)
class EvenSymmetricForm:
    """Symmetric integer form with even diagonal (so Q(x, x) is always even).

    ``source`` optionally records the bilinear form this was symmetrised from.
    """

    gram: Gram
    source: Optional[IntegerBilinearForm] = field(default=None, compare=False)

    def __post_init__(self):
        gram = _as_gram(self.gram)
        object.__setattr__(self, "gram", gram)
        problems = []
        r = len(gram)
        if any(gram[i][j] != gram[j][i] for i in range(r) for j in range(r)):
            problems.append(f"Q={[list(row) for row in gram]} is not symmetric")
        if any(gram[i][i] % 2 for i in range(r)):
            problems.append(f"Q={[list(row) for row in gram]} is not even (odd diagonal entry)")
        if problems:
            raise ConfigError(problems)

    @property
    def rank(self):
        return len(self.gram)

    def __call__(self, x, y):
        return eval_q(self, x, y)

    def half_norm(self, x):
        """Q(x, x) / 2, an integer because Q is even."""
        r = len(x)
        total = sum(self.gram[i][i] // 2 * x[i] * x[i] for i in range(r))
        total += sum(self.gram[i][j] * x[i] * x[j] for i in range(r) for j in range(i + 1, r))
        return total


def derive_q(b: IntegerBilinearForm) -> EvenSymmetricForm:
    g = b.gram
    r = len(g)
    return EvenSymmetricForm(tuple(tuple(g[i][j] + g[j][i] for j in range(r)) for i in range(r)), source=b)


def b_from_q(q: EvenSymmetricForm) -> IntegerBilinearForm:
    """The lower-triangular b with b + b^T = Q (half the diagonal, strict lower part of Q)."""
    g = q.gram
    r = len(g)
    rows = []
    for i in range(r):
        rows.append(tuple(g[i][i] // 2 if i == j else (g[i][j] if j < i else 0) for j in range(r)))
    return IntegerBilinearForm(tuple(rows))


def eval_b(b: IntegerBilinearForm, x: Sequence[int], y: Sequence[int]) -> int:
    _check_dims(b.gram, x, y)
    return _pair(b.gram, x, y)


def eval_q(q: EvenSymmetricForm, x: Sequence, y: Sequence):
    _check_dims(q.gram, x, y)
    return _pair(q.gram, x, y)


def e_map(q: EvenSymmetricForm, v: Sequence):
    """The covector Q(v, .) in the dual basis."""
    _check_dims(q.gram, v)
    r = len(v)
    return tuple(sum(v[i] * q.gram[i][j] for i in range(r)) for j in range(r))


def leading_minors(gram) -> list:
    return [determinant([row[: k + 1] for row in gram[: k + 1]]) for k in range(len(gram))]


def determinant(rows) -> Fraction:
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for j in range(c, n):
                    m[r][j] -= f * m[c][j]
    return det


def is_negative_definite(q: EvenSymmetricForm) -> bool:
    minors = leading_minors(q.gram)
    return all(m != 0 and (m < 0) == (i % 2 == 0) for i, m in enumerate(minors))


def is_nondegenerate(q: EvenSymmetricForm) -> bool:
    return determinant(q.gram) != 0


@lru_cache(maxsize=256)
def _ldl(gram: Gram, k: int):
    """Decompose P = -(k/2) Q as sum_i d_i (y_i + sum_{j>i} u_ij y_j)^2."""
    r = len(gram)
    p = [[Fraction(-k * gram[i][j], 2) for j in range(r)] for i in range(r)]
    d = [Fraction(0)] * r
    u = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        d[i] = p[i][i]
        for j in range(i + 1, r):
            u[i][j] = p[i][j] / d[i]
        for a in range(i + 1, r):
            for c in range(i + 1, r):
                p[a][c] -= d[i] * u[i][a] * u[i][c]
    pinv = _inverse([[Fraction(-k * gram[i][j], 2) for j in range(r)] for i in range(r)])
    return tuple(d), tuple(tuple(row) for row in u), tuple(tuple(row) for row in pinv)


def _inverse(m):
    n = len(m)
    a = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        pivot = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[pivot] = a[pivot], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def _integers_near(center: Fraction, radius_sq: Fraction):
    """All integers t with (t - center)^2 <= radius_sq."""
    if radius_sq < 0:
        return range(0)
    s = isqrt(floor(radius_sq))
    lo, hi = floor(center) - s - 1, ceil(center) + s + 1
    vals = [t for t in range(lo, hi + 1) if (t - center) ** 2 <= radius_sq]
    return range(vals[0], vals[-1] + 1) if vals else range(0)


def _normalize(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def sublevel_value(q: EvenSymmetricForm, k: int, shift: Sequence, nu: Sequence):
    """-shift(nu) - k Q(nu, nu)/2."""
    return _normalize(-sum(Fraction(s) * x for s, x in zip(shift, nu)) - k * q.half_norm(nu))


def enumerate_sublevel(q: EvenSymmetricForm, k: int, shift: Sequence, bound) -> list:
    """All nu with -shift(nu) - k Q(nu, nu)/2 <= bound, as sorted (nu, value) pairs.

    Q must be negative definite and k >= 1, so the value is a positive-definite
    quadratic plus a linear term and the set is finite.  Points are found by
    completing the square and bounding one coordinate at a time, last first;
    every bound is an exact rational, so nothing is missed.  ``shift`` may
    have rational entries.  Output is sorted by (value, nu).
    """
    if k < 1:
        raise DefinitenessError("lattice_forms", f"enumeration needs level k >= 1, got {k}")
    if not is_negative_definite(q):
        raise DefinitenessError("lattice_forms", "enumeration requires definite form")
    r = q.rank
    if len(shift) != r:
        raise ConfigError([f"shift {tuple(shift)} has length {len(shift)}, lattice rank is {r}"])
    shift = tuple(Fraction(s) for s in shift)
    d, u, pinv = _ldl(q.gram, k)
    # val(nu) = (nu - c)^T P (nu - c) - c^T P c  with  c = P^{-1} shift / 2
    c = [sum(pinv[i][j] * shift[j] for j in range(r)) / 2 for i in range(r)]
    ctpc = sum(c[i] * shift[i] for i in range(r)) / 2
    budget = Fraction(bound) + ctpc
    out = []
    y = [Fraction(0)] * r
    nu = [0] * r

    def descend(i, remaining):
        if i < 0:
            val = sublevel_value(q, k, shift, nu)
            if val <= bound:
                out.append((tuple(nu), val))
            return
        off = sum(u[i][j] * y[j] for j in range(i + 1, r))
        for t in _integers_near(c[i] - off, remaining / d[i]):
            nu[i] = t
            y[i] = t - c[i]
            descend(i - 1, remaining - d[i] * (y[i] + off) ** 2)
        nu[i] = 0
        y[i] = Fraction(0)

    descend(r - 1, budget)
    out.sort(key=lambda pair: (pair[1], pair[0]))
    return out


def minimum_value(q: EvenSymmetricForm, k: int, shift: Sequence):
    """min over nu of -shift(nu) - k Q(nu, nu)/2 (attained; nu = 0 gives 0)."""
    hits = enumerate_sublevel(q, k, shift, 0)
    return hits[0][1]
