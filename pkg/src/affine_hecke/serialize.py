"""Canonical text form shared by Hecke elements and graded series.

    level <k> | <c> v^<n> x^[<l1>,...,<lr>] + ... (certified to v^<N>)

Terms are sorted by (n, lex lam); rationals print as p/q in lowest terms and
integers without a denominator.  The same object always prints byte-identically.
"""
import re
from fractions import Fraction

_HEAD = re.compile(r"^level (-?\d+) \| (.*) \(certified to v\^(-?\d+)\)$")
_TERM = re.compile(r"^(-?\d+(?:/\d+)?) v\^(-?\d+) x\^\[(-?\d+(?:,-?\d+)*)?\]$")


def format_coeff(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_terms(k, trunc, terms) -> str:
    """``terms`` is an iterable of ((lam, n), coeff) already in canonical order."""
    body = " + ".join(f"{format_coeff(c)} v^{n} x^[{','.join(str(x) for x in lam)}]" for (lam, n), c in terms)
    return f"level {k} | {body or '0'} (certified to v^{trunc})"


def format_series(s) -> str:
    return format_terms(s.k, s.trunc, s.items())


def format_hecke(h) -> str:
    return format_terms(h.k, h.trunc, (((mu, a), c) for (a, mu), c in h.items()))


def parse_terms(text):
    """Inverse of format_terms: returns (k, trunc, {(lam, n): Fraction})."""
    m = _HEAD.match(text.strip())
    if not m:
        raise ValueError(f"not a canonical series: {text!r}")
    k, body, trunc = int(m.group(1)), m.group(2), int(m.group(3))
    coeffs = {}
    if body != "0":
        for piece in body.split(" + "):
            t = _TERM.match(piece)
            if not t:
                raise ValueError(f"bad term {piece!r}")
            lam = tuple(int(x) for x in t.group(3).split(",")) if t.group(3) else ()
            coeffs[(lam, int(t.group(2)))] = Fraction(t.group(1))
    return k, trunc, coeffs


def parse_series(text, rank=None):
    from .series import GradedSeries

    k, trunc, coeffs = parse_terms(text)
    if rank is None:
        rank = len(next(iter(coeffs))[0]) if coeffs else 0
    return GradedSeries(k, rank, trunc, coeffs)
