"""Command line front end: ``affine-hecke`` (or ``python3 -m affine_hecke``).

Exit codes: 0 success, 1 domain error (message prefixed by the module), 2 usage error.
The default truncation is the config's ``defaults.trunc`` unless the
environment variable AFFINE_HECKE_TRUNC is set; ``--trunc`` beats both.
"""
import argparse
import os
import sys

from .affine_weyl import AffineWeight, enumerate_level_k_dominants, reduce_to_dominant
from .char_ring import expand_in_orbit_sums, freudenthal_character, orbit_sum, weyl_kac_character
from .config import DEFAULT_TRUNC, load_config
from .errors import HeckeError
from .heisenberg import DoubleCosetLabel, HeisenbergElement
from .serialize import format_coeff, format_hecke, format_series
from .torus_hecke import convolve, convolve_oracle, delta, to_theta_series
from .verify import format_report, run_suites

TRUNC_ENV = "AFFINE_HECKE_TRUNC"
SUITES = ("group", "hecke", "weyl", "char")


class UsageError(Exception):
    pass


def _ints(text, what):
    try:
        return [int(x) for x in text.split(",")] if text.strip() else []
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}")


def parse_element(text, rank):
    """'a/l1,..,lr/m1,..,mr/k' -> HeisenbergElement."""
    parts = text.split("/")
    if len(parts) != 4:
        raise UsageError(f"group element must look like a/lam/mu/k, got {text!r}")
    a, k = _ints(parts[0], "a"), _ints(parts[3], "k")
    lam, mu = _ints(parts[1], "lam"), _ints(parts[2], "mu")
    if len(a) != 1 or len(k) != 1 or len(lam) != rank or len(mu) != rank:
        raise UsageError(f"group element {text!r} does not match lattice rank {rank}")
    return HeisenbergElement(a[0], tuple(lam), tuple(mu), k[0])


def format_element(g):
    return f"{g.a}/{','.join(map(str, g.lam))}/{','.join(map(str, g.mu))}/{g.k}"


def parse_label(text, rank):
    vals = _ints(text, "delta")
    if len(vals) != rank + 2:
        raise UsageError(f"--delta takes k,a,mu_1..mu_{rank}, got {text!r}")
    return DoubleCosetLabel(vals[0], vals[1], tuple(vals[2:]))


def parse_weight(text, rank):
    vals = _ints(text, "weight")
    if len(vals) != rank + 2:
        raise UsageError(f"weight takes k,lam_1..lam_{rank},n, got {text!r}")
    return AffineWeight(vals[0], tuple(vals[1:-1]), vals[-1])


def format_expansion(k, trunc, coeffs):
    body = " + ".join(f"{format_coeff(c)} v^{w.n} m^[{','.join(map(str, w.lam))}]" for w, c in coeffs.items())
    return f"level {k} | {body or '0'} (certified to v^{trunc})"


def default_trunc(config):
    env = os.environ.get(TRUNC_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{TRUNC_ENV} must be an integer, got {env!r}")
    return config.trunc if config else DEFAULT_TRUNC


def build_parser():
    p = argparse.ArgumentParser(prog="affine-hecke", description=__doc__.splitlines()[0])
    p.add_argument("--config", help="JSON config path or preset name (rank1_torus, rank2_torus, a1, a2); "
                                    "defaults to rank1_torus, or a1 for weyl/char")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", parents=[common], help="Heisenberg group arithmetic; elements are a/lam/mu/k")
    g.add_argument("op", choices=["mul", "inv", "nf"])
    g.add_argument("elements", nargs="+")

    h = sub.add_parser("hecke", parents=[common], help="torus Hecke algebra")
    h.add_argument("op", choices=["delta", "mul", "mul-oracle", "theta"])
    h.add_argument("--delta", action="append", required=True, metavar="k,a,mu..",
                   help="a delta function; repeat to multiply")
    h.add_argument("--trunc", type=int)
    h.add_argument("--window", type=int, help="oracle window (default: the truncation)")

    w = sub.add_parser("weyl", parents=[common], help="affine Weyl group")
    w.add_argument("op", choices=["reduce", "dominants"])
    w.add_argument("--level", type=int, required=True)
    w.add_argument("--weight", help="lattice vector, comma separated")
    w.add_argument("--box", type=int, help="bound for central directions")

    c = sub.add_parser("char", parents=[common], help="character ring")
    c.add_argument("op", choices=["orbit-sum", "irr", "freudenthal", "expand"])
    c.add_argument("weight", help="k,lam_1..lam_r,n")
    c.add_argument("--trunc", type=int)

    v = sub.add_parser("verify", parents=[common], help="run property suites")
    v.add_argument("suite", choices=("all",) + SUITES)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cases", type=int, default=100)
    return p


def run(args, out):
    cfg_name = args.config or ("a1" if args.command in ("weyl", "char") else "rank1_torus")
    config = load_config(cfg_name)
    rank = config.rank

    if args.command == "group":
        grp = config.group
        elems = [parse_element(e, rank) for e in args.elements]
        if args.op == "mul":
            acc = elems[0]
            for e in elems[1:]:
                acc = grp.multiply(acc, e)
            print(format_element(acc), file=out)
        elif args.op == "inv":
            for e in elems:
                print(format_element(grp.inverse(e)), file=out)
        else:
            for e in elems:
                rep, witness = grp.left_normal_form(e)
                lbl = grp.double_coset_normal_form(e)
                print(f"{format_element(rep)} witness [{','.join(map(str, witness))}] "
                      f"label {lbl.k},{lbl.a},{','.join(map(str, lbl.mu_bar))}", file=out)
        return 0

    if args.command == "hecke":
        trunc = args.trunc if args.trunc is not None else default_trunc(config)
        hs = [delta(parse_label(d, rank), trunc) for d in args.delta]
        if args.op == "delta":
            for x in hs:
                print(format_hecke(x), file=out)
        elif args.op == "theta":
            for x in hs:
                print(format_series(to_theta_series(x, config.q)), file=out)
        else:
            if len(hs) < 2:
                raise UsageError("mul needs at least two --delta arguments")
            window = args.window if args.window is not None else trunc
            acc = hs[0]
            for x in hs[1:]:
                acc = convolve(acc, x, config.q) if args.op == "mul" else convolve_oracle(acc, x, window, config.group)
            print(format_hecke(acc), file=out)
        return 0

    if args.command == "weyl":
        rd = config.root_datum
        if args.op == "reduce":
            if args.weight is None:
                raise UsageError("weyl reduce needs --weight")
            lam = tuple(_ints(args.weight, "weight"))
            if len(lam) != rank:
                raise UsageError(f"--weight must have {rank} entries")
            rep, word = reduce_to_dominant(rd, lam, args.level)
            print(f"{','.join(map(str, rep))}, word: {' '.join(word) or '(empty)'}", file=out)
        else:
            for lam in enumerate_level_k_dominants(rd, args.level, args.box):
                print(",".join(map(str, lam)), file=out)
        return 0

    if args.command == "char":
        rd = config.root_datum
        trunc = args.trunc if args.trunc is not None else default_trunc(config)
        w = parse_weight(args.weight, rank)
        if args.op == "orbit-sum":
            print(format_series(orbit_sum(rd, w, trunc)), file=out)
        elif args.op == "irr":
            print(format_series(weyl_kac_character(rd, w, trunc)), file=out)
        elif args.op == "freudenthal":
            print(format_series(freudenthal_character(rd, w, trunc)), file=out)
        else:
            print(format_expansion(w.k, trunc, expand_in_orbit_sums(rd, weyl_kac_character(rd, w, trunc))), file=out)
        return 0

    names = SUITES if args.suite == "all" else (args.suite,)
    rows = run_suites(names, args.seed, args.cases, config)
    print(format_report(rows), file=out)
    return 0 if all(ok for _, ok, _ in rows) else 1


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"affine-hecke: error: {exc}", file=sys.stderr)
        return 2
    except HeckeError as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
