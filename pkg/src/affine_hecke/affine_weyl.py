"""Finite root data, the groups W x kL acting on the coweight lattice, and alcove reduction.

The lattice is the coroot lattice of a simply connected group (basis: the
simple coroots), optionally extended by central directions on which every
root vanishes.  A torus is the case with no roots at all.  Simple roots are
covectors: ``simple_roots[j][i]`` is <alpha_j, alpha_i^vee> = a_ij with the
Cartan matrix in the convention a_ij = <alpha_i^vee, alpha_j>.
"""
import re
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import List, NamedTuple, Optional, Tuple

from .errors import ConfigError, GradingError, UnsupportedDatumError
from .lattice_forms import EvenSymmetricForm, Vector, _inverse, e_map, enumerate_sublevel, is_negative_definite
from .series import translate_key


class AffineWeight(NamedTuple):
    k: int
    lam: Vector
    n: int


def cartan_matrix(kind: str, n: int):
    """Cartan matrix of a simple type, Bourbaki numbering, a_ij = <alpha_i^vee, alpha_j>."""
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if kind in "ABCD":
        for i in range(n - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if kind == "B" and n >= 2:
            a[n - 1][n - 2] = -2
        elif kind == "C" and n >= 2:
            a[n - 2][n - 1] = -2
        elif kind == "D":
            if n < 4:
                raise ConfigError([f"type D{n} is not a simple type (need rank >= 4)"])
            a[n - 2][n - 1] = a[n - 1][n - 2] = 0
            a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif kind == "E":
        if n not in (6, 7, 8):
            raise ConfigError([f"type E{n} does not exist"])
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
        for i, j in edges:
            a[i][j] = a[j][i] = -1
    elif kind == "F":
        if n != 4:
            raise ConfigError([f"type F{n} does not exist"])
        a[0][1] = a[1][0] = a[2][3] = a[3][2] = -1
        a[1][2], a[2][1] = -1, -2
    elif kind == "G":
        if n != 2:
            raise ConfigError([f"type G{n} does not exist"])
        a[0][1], a[1][0] = -3, -1
    else:
        raise ConfigError([f"unknown Cartan type {kind}{n}"])
    return a


def parse_cartan_type(text: str):
    """'A2', 'A1xA1', 'B2+G2' -> block-diagonal Cartan matrix and the list of components."""
    parts = [p for p in re.split(r"[x+ ]+", text.strip()) if p]
    if not parts:
        raise ConfigError([f"empty Cartan type {text!r}"])
    blocks = []
    for p in parts:
        m = re.fullmatch(r"([A-G])(\d+)", p)
        if not m:
            raise ConfigError([f"cannot parse Cartan type component {p!r}"])
        blocks.append((m.group(1), int(m.group(2))))
    size = sum(n for _, n in blocks)
    a = [[0] * size for _ in range(size)]
    off = 0
    for kind, n in blocks:
        sub = cartan_matrix(kind, n)
        for i in range(n):
            for j in range(n):
                a[off + i][off + j] = sub[i][j]
        off += n
    return a, blocks


def symmetrizer(a):
    """Smallest positive integers d with a_ij d_j = a_ji d_i."""
    n = len(a)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if a[i][j] and d[j] is None:
                    d[j] = d[i] * Fraction(a[j][i], a[i][j])
                    stack.append(j)
    den = 1
    for x in d:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints]


def canonical_form(a, central_rank=0):
    """The minimal even negative-definite invariant form on the coroot lattice: Q_ij = -a_ij d_j."""
    if central_rank:
        raise ConfigError(["central directions need an explicit lattice form b"])
    d = symmetrizer(a)
    n = len(a)
    return EvenSymmetricForm(tuple(tuple(-a[i][j] * d[j] for j in range(n)) for i in range(n)))


def _matvec(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


def _matmul(x, y):
    n = len(x)
    return tuple(tuple(sum(x[i][t] * y[t][j] for t in range(n)) for j in range(n)) for i in range(n))


def _pairing(cov, v):
    return sum(c * x for c, x in zip(cov, v))


class RootDatum:
    """Root data on a lattice with a W-invariant even form Q."""

    def __init__(self, q: EvenSymmetricForm, cartan=None, cartan_type: Optional[str] = None,
                 central_rank: Optional[int] = None):
        self.q = q
        self.rank = q.rank
        self.cartan = [list(r) for r in cartan] if cartan else []
        self.cartan_type = cartan_type
        ss = len(self.cartan)
        # a torus is all central directions
        central_rank = self.rank - ss if central_rank is None else central_rank
        self.central_rank = central_rank
        if ss + central_rank != self.rank:
            raise ConfigError([f"lattice rank {self.rank} != semisimple rank {ss} + central rank {central_rank}"])
        self.semisimple_rank = ss
        self.simple_coroots = [tuple(int(i == j) for i in range(self.rank)) for j in range(ss)]
        self.simple_roots = [tuple(self.cartan[i][j] for i in range(ss)) + (0,) * central_rank for j in range(ss)]
        problems = self.check_invariance()
        if problems:
            raise ConfigError(problems)

    @classmethod
    def torus(cls, q: EvenSymmetricForm):
        return cls(q)

    @classmethod
    def simple(cls, cartan_type: str, q: Optional[EvenSymmetricForm] = None, central_rank: int = 0):
        a, _ = parse_cartan_type(cartan_type)
        if q is None:
            q = canonical_form(a, central_rank)
        return cls(q, a, cartan_type, central_rank)

    @property
    def kind(self):
        return "semisimple" if self.cartan else "torus"

    @property
    def has_roots(self):
        return bool(self.cartan)

    @property
    def simply_laced(self):
        return all(x in (0, -1) for i, row in enumerate(self.cartan) for j, x in enumerate(row) if i != j)

    def __repr__(self):
        return f"RootDatum({self.cartan_type or 'torus'}, rank={self.rank}, Q={[list(r) for r in self.q.gram]})"

    def reflection_matrix(self, i):
        alpha, cor = self.simple_roots[i], self.simple_coroots[i]
        r = self.rank
        return tuple(tuple(int(a == b) - cor[a] * alpha[b] for b in range(r)) for a in range(r))

    def check_invariance(self) -> List[str]:
        """Q(s_i x, s_i y) = Q(x, y) on basis pairs, and root/coroot pairings match the Cartan matrix."""
        problems = []
        g = self.q.gram
        r = self.rank
        for i in range(self.semisimple_rank):
            s = self.reflection_matrix(i)
            # columns of s are the images of basis vectors
            for x in range(r):
                for y in range(r):
                    sx = [s[t][x] for t in range(r)]
                    sy = [s[t][y] for t in range(r)]
                    if sum(sx[a] * g[a][b] * sy[b] for a in range(r) for b in range(r)) != g[x][y]:
                        problems.append(f"Q={[list(row) for row in g]} is not invariant under s{i + 1} "
                                        f"(basis pair e{x}, e{y})")
                        break
                else:
                    continue
                break
            for j in range(self.semisimple_rank):
                if _pairing(self.simple_roots[j], self.simple_coroots[i]) != self.cartan[i][j]:
                    problems.append(f"<alpha_{j + 1}, alpha_{i + 1}^vee> differs from the Cartan matrix")
        return problems

    def simple_reflect(self, i, lam) -> Vector:
        if not self.has_roots:
            raise UnsupportedDatumError("affine_weyl", "torus datum has no reflections")
        if not 0 <= i < self.semisimple_rank:
            raise UnsupportedDatumError("affine_weyl", f"no simple reflection with index {i}")
        p = _pairing(self.simple_roots[i], lam)
        return tuple(x - p * c for x, c in zip(lam, self.simple_coroots[i]))

    @cached_property
    def _root_system(self):
        """Positive roots as (coefficients over simple roots, covector, coroot), by reflection closure."""
        ss = self.semisimple_rank
        seen = {}
        frontier = []
        for i in range(ss):
            coeffs = tuple(int(t == i) for t in range(ss))
            item = (coeffs, self.simple_roots[i], self.simple_coroots[i])
            seen[coeffs] = item
            frontier.append(item)
        while frontier:
            nxt = []
            for coeffs, root, coroot in frontier:
                for j in range(ss):
                    p = sum(coeffs[t] * self.cartan[j][t] for t in range(ss))  # <alpha_j^vee, beta>
                    c2 = tuple(coeffs[t] - p * (t == j) for t in range(ss))
                    if c2 in seen:
                        continue
                    q_ = _pairing(root, self.simple_coroots[j])
                    cor_p = _pairing(self.simple_roots[j], coroot)
                    root2 = tuple(x - q_ * y for x, y in zip(root, self.simple_roots[j]))
                    coroot2 = tuple(x - cor_p * y for x, y in zip(coroot, self.simple_coroots[j]))
                    item = (c2, root2, coroot2)
                    seen[c2] = item
                    if all(c >= 0 for c in c2):
                        nxt.append(item)
            frontier = nxt
        return [v for c, v in sorted(seen.items()) if all(x >= 0 for x in c)]

    @property
    def positive_roots(self):
        return [root for _, root, _ in self._root_system]

    @property
    def positive_coroots(self):
        return [cor for _, _, cor in self._root_system]

    @cached_property
    def components(self):
        """Index ranges of the simple factors, found from the Dynkin diagram."""
        ss = self.semisimple_rank
        comp = [None] * ss
        out = []
        for start in range(ss):
            if comp[start] is not None:
                continue
            comp[start] = len(out)
            members, stack = [start], [start]
            while stack:
                i = stack.pop()
                for j in range(ss):
                    if self.cartan[i][j] and comp[j] is None:
                        comp[j] = len(out)
                        members.append(j)
                        stack.append(j)
            out.append(tuple(sorted(members)))
        return out

    @cached_property
    def _highest(self):
        if not self.has_roots:
            raise UnsupportedDatumError("affine_weyl", "torus datum has no highest root")
        out = []
        for members in self.components:
            inside = [item for item in self._root_system
                      if all(c == 0 for t, c in enumerate(item[0]) if t not in members)]
            out.append(max(inside, key=lambda item: (sum(item[0]), item[0])))
        return out

    @property
    def highest_roots(self):
        """(theta, theta^vee) for each simple factor, in the order of ``components``."""
        return [(root, coroot) for _, root, coroot in self._highest]

    @property
    def highest_root_coefficients(self):
        """theta of each factor written in the simple roots."""
        return [coeffs for coeffs, _, _ in self._highest]

    @property
    def highest_root(self):
        """(covector theta, coroot theta^vee) of the highest root of a simple type."""
        roots = self.highest_roots
        if len(roots) != 1:
            raise UnsupportedDatumError("affine_weyl", "highest root needs a simple (irreducible) type")
        return roots[0]

    @property
    def theta(self):
        return self.highest_root[0]

    @property
    def theta_coroot(self):
        return self.highest_root[1]

    @cached_property
    def highest_coroot(self):
        """Highest root of the dual root system, as a lattice vector."""
        return max(self.positive_coroots, key=lambda c: (sum(c[: self.semisimple_rank]), c))

    @cached_property
    def rho(self):
        """Half the sum of the positive coroots (a rational lattice vector)."""
        total = [Fraction(0)] * self.rank
        for c in self.positive_coroots:
            for i, x in enumerate(c):
                total[i] += x
        return tuple(t / 2 for t in total)

    @cached_property
    def dual_coxeter(self):
        """1 + <theta, rho>; for simply-laced data this is h^vee of the dual affine algebra too."""
        return 1 + int(_pairing(self.theta, self.rho))

    @cached_property
    def weyl_group(self):
        """All elements of W as (matrix, sign) pairs; the identity comes first."""
        r = self.rank
        ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
        gens = [self.reflection_matrix(i) for i in range(self.semisimple_rank)]
        seen = {ident: 1}
        frontier = [ident]
        while frontier:
            nxt = []
            for m in frontier:
                for s in gens:
                    m2 = _matmul(s, m)
                    if m2 not in seen:
                        seen[m2] = -seen[m]
                        nxt.append(m2)
            frontier = nxt
        return list(seen.items())

    def weyl_orbit(self, lam) -> List[Vector]:
        lam = tuple(lam)
        seen = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(self.semisimple_rank):
                    w = self.simple_reflect(i, v)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return sorted(seen)

    def is_dominant(self, lam, k=None) -> bool:
        if any(_pairing(a, lam) < 0 for a in self.simple_roots):
            return False
        if k is not None and self.has_roots and any(_pairing(th, lam) > k for th, _ in self.highest_roots):
            return False
        if k is not None and k > 0 and not self.has_roots:
            return all(0 <= x < k for x in lam)
        return True


def simple_reflect(rd: RootDatum, i: int, lam) -> Vector:
    return rd.simple_reflect(i, lam)


def apply_word(rd: RootDatum, lam, k, word) -> Vector:
    """Replay a transcript produced by reduce_to_dominant on a lattice vector."""
    return act_by_word(rd, AffineWeight(k, tuple(lam), 0), word).lam


def act_by_word(rd: RootDatum, w: AffineWeight, word) -> AffineWeight:
    """Replay a transcript on a full affine weight, tracking the energy n.

    s0 is the reflection in theta followed by translation by theta^vee.
    """
    k, lam, n = w.k, tuple(w.lam), w.n
    for g in word:
        if g == "s0" or g.startswith("s0_"):
            th, thv = rd.highest_roots[int(g[3:]) - 1 if g != "s0" else 0]
            p = _pairing(th, lam)
            lam = tuple(x - p * c for x, c in zip(lam, thv))
            lam, n = translate_key(rd.q, k, lam, n, thv)
        elif g.startswith("s"):
            lam = rd.simple_reflect(int(g[1:]) - 1, lam)
        elif g.startswith("t"):
            nu = tuple(int(x) for x in g[2:-1].split(","))
            lam, n = translate_key(rd.q, k, lam, n, nu)
        else:
            raise ValueError(f"unknown generator {g!r}")
    return AffineWeight(k, lam, n)


def reduce_affine_weight(rd: RootDatum, w: AffineWeight) -> AffineWeight:
    """The representative of w whose lattice part is reduce_to_dominant(w.lam), with its energy."""
    _, word = reduce_to_dominant(rd, w.lam, w.k)
    return act_by_word(rd, w, word)


def reduce_to_dominant(rd: RootDatum, lam, k: int) -> Tuple[Vector, List[str]]:
    """Fold lam into the level-k alcove by simple reflections (s1, s2, ...), the affine reflection s0
    about <theta, .> = k, and translations by k times a lattice vector (written t[nu]).

    For k = 0 only the finite Weyl group acts.  Coordinates on which no root
    depends (all of them, for a torus) are reduced into [0, k).
    """
    lam = tuple(lam)
    word = []
    if rd.has_roots:
        walls = rd.highest_roots if k >= 1 else []
        names = ["s0"] if len(walls) == 1 else [f"s0_{c + 1}" for c in range(len(walls))]
        while True:
            i = next((i for i, a in enumerate(rd.simple_roots) if _pairing(a, lam) < 0), None)
            if i is not None:
                lam = rd.simple_reflect(i, lam)
                word.append(f"s{i + 1}")
                continue
            hit = next((c for c, (th, _) in enumerate(walls) if _pairing(th, lam) > k), None)
            if hit is None:
                break
            th, thv = walls[hit]
            p = _pairing(th, lam)
            lam = tuple(x - (p - k) * c for x, c in zip(lam, thv))
            word.append(names[hit])
    free = range(rd.semisimple_rank, rd.rank)
    if k >= 1 and free:
        nu = tuple(0 if i < rd.semisimple_rank else -(lam[i] // k) for i in range(rd.rank))
        if any(nu):
            lam = tuple(x + k * y for x, y in zip(lam, nu))
            word.append("t[" + ",".join(str(x) for x in nu) + "]")
    return lam, word


def enumerate_level_k_dominants(rd: RootDatum, k: int, central_box: Optional[int] = None) -> List[Vector]:
    """Lambda_k^+ = {lam dominant, <theta, lam> <= k}; for a torus, the box [0, k)^r.

    Central directions are unconstrained by the roots, so there the set is
    infinite and ``central_box`` B restricts those coordinates to [-B, B].
    """
    from itertools import product
    from .torus_hecke import box

    if k < 1:
        raise GradingError("affine_weyl", f"level must be >= 1, got {k}")
    if not rd.has_roots:
        return box(k, rd.rank)
    if rd.central_rank and central_box is None:
        raise UnsupportedDatumError("affine_weyl", "Lambda_k^+ is infinite; supply a box")
    ss = rd.semisimple_rank
    # lam is determined by the pairings f_i = <alpha_i, lam>, f = A^T lam
    inv = _inverse([[Fraction(rd.cartan[j][i]) for j in range(ss)] for i in range(ss)])
    comp_of = {i: c for c, members in enumerate(rd.components) for i in members}
    thetas = rd.highest_root_coefficients
    out = []

    def rec(i, f, budgets):
        if i == ss:
            lam = [sum(inv[a][b] * f[b] for b in range(ss)) for a in range(ss)]
            if all(x.denominator == 1 for x in lam):
                out.append(tuple(int(x) for x in lam))
            return
        c = comp_of[i]
        w = thetas[c][i]
        for fi in range(budgets[c] // w + 1):
            nb = list(budgets)
            nb[c] -= fi * w
            rec(i + 1, f + [fi], nb)

    rec(0, [], [k] * len(thetas))
    if rd.central_rank:
        tails = list(product(range(-central_box, central_box + 1), repeat=rd.central_rank))
        out = [lam + t for lam in out for t in tails]
    return sorted(out)


def monomial_translate(rd: RootDatum, w: AffineWeight, nu) -> AffineWeight:
    lam, n = translate_key(rd.q, w.k, w.lam, w.n, tuple(nu))
    return AffineWeight(w.k, lam, n)


def weyl_act(rd: RootDatum, matrix, w: AffineWeight) -> AffineWeight:
    return AffineWeight(w.k, _matvec(matrix, w.lam), w.n)


def affine_orbit(rd: RootDatum, w: AffineWeight, trunc: int) -> List[AffineWeight]:
    """The orbit of w under W x kL, restricted to n < trunc, sorted by (n, lam).

    At level 0 the translations are dropped and the finite W-orbit is returned.
    """
    w = AffineWeight(w.k, tuple(w.lam), w.n)
    finite = rd.weyl_orbit(w.lam) if rd.has_roots else [w.lam]
    if w.k == 0:
        return sorted((AffineWeight(0, lam, w.n) for lam in finite), key=lambda x: (x.n, x.lam))
    if w.k < 0:
        raise GradingError("affine_weyl", "negative level has no bounded orbit")
    if not is_negative_definite(rd.q):
        from .errors import DefinitenessError
        raise DefinitenessError("affine_weyl", "orbit enumeration requires definite form")
    out = set()
    for lam in finite:
        for nu, val in enumerate_sublevel(rd.q, w.k, e_map(rd.q, lam), trunc - 1 - w.n):
            out.add(AffineWeight(w.k, tuple(x + w.k * y for x, y in zip(lam, nu)), w.n + val))
    return sorted(out, key=lambda x: (x.n, x.lam))
