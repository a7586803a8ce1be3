"""Command-line interface: ``betahole <command> ...``.

Exit codes: 0 success, 2 usage or domain error, 3 when a comparison is
ambiguous at the available precision.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__
from .bullet import bullet_fold
from .chains import Chain, chain_anchor, chain_word, enumerate_chains, interval_type, psi
from .critical import classify_beta, komornik_loreti, partition_table, tau, tau_compare_at, theta
from .errors import AmbiguousError, BetaHoleError, PrecisionError
from .extremal import max_lyndon, min_perron
from .numerics import BetaParam, RealInterval, parse_beta
from .words import EventuallyPeriodicSequence, farey_code, farey_word

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_AMBIGUOUS = 3


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _positive_frac(text: str) -> Fraction:
    x = _frac(text)
    if x <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return x


def _chain_list(c: Chain | None) -> list[int] | None:
    return list(c.vector) if c else None


def _interval_json(iv: RealInterval) -> list[str]:
    return [str(iv.lower), str(iv.upper)]


def _dec(x: Fraction, digits: int = 15) -> str:
    return f"{float(x):.{digits}g}"


def _emit_csv(rows, header, out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def _check_m(m: int) -> None:
    if m < 2:
        raise BetaHoleError("m must be ≥ 2", "range")


# --------------------------------------------------------------------------


def cmd_psi(args) -> int:
    if args.table is not None:
        if args.table < 1:
            raise BetaHoleError("table size must be ≥ 1", "range")
        _emit_csv([(n, psi(n)) for n in range(1, args.table + 1)], ["n", "psi"], sys.stdout)
        return EXIT_OK
    if args.m is None:
        raise BetaHoleError("give m or --table N", "usage")
    print(psi(args.m))
    return EXIT_OK


def cmd_chains(args) -> int:
    _check_m(args.m)
    chains = enumerate_chains(args.m)
    if args.json:
        data = [{"chain": list(c.vector), "word": chain_word(c), "anchor": chain_anchor(c),
                 "type": interval_type(c)} for c in chains]
        print(json.dumps(data, indent=2))
    else:
        for c in chains:
            print(f"({c})\t{chain_word(c)}\t({chain_anchor(c)})^inf")
    return EXIT_OK


def cmd_tau(args) -> int:
    _check_m(args.m)
    beta = parse_beta(args.beta, args.tol)
    cv = tau(args.m, beta, args.tol)
    itype = interval_type(cv.chain) if cv.chain else "first"
    if args.json:
        print(json.dumps({
            "m": args.m, "beta": str(beta), "value": _interval_json(cv.value),
            "value_approx": float(cv.value.mid), "expansion": cv.expansion.period,
            "provenance": cv.provenance, "chain": _chain_list(cv.chain), "interval_type": itype,
        }, indent=2))
    else:
        print(f"value      {cv.value}")
        print(f"expansion  {cv.expansion}")
        print(f"chain      {cv.label}")
        print(f"interval   {itype}")
    return EXIT_OK


def cmd_partition(args) -> int:
    _check_m(args.m)
    rows = partition_table(args.m, args.tol)
    if args.json:
        print(json.dumps([{
            "chain": list(r.chain.vector), "anchor": r.anchor, "left": _interval_json(r.left),
            "tau_word": r.tau_word, "interval_type": r.interval_type,
        } for r in rows], indent=2))
    elif args.csv:
        _emit_csv([(str(r.chain), r.anchor, _dec(r.left.lower, 17), _dec(r.left.upper, 17),
                    _dec(r.left.mid, 17), r.tau_word, r.interval_type) for r in rows],
                  ["chain", "anchor", "left_lo", "left_hi", "left_mid", "tau_word", "type"], sys.stdout)
    else:
        for r in rows:
            print(f"({r.chain})\t{r.interval_type}\t{r.left.fmt(12)}\t({r.anchor})^inf\t{r.tau_word}")
    return EXIT_OK


def cmd_sample(args) -> int:
    _check_m(args.m)
    lo, hi = args.lo, args.hi
    if args.steps < 1:
        raise BetaHoleError("steps must be ≥ 1", "range")
    if args.steps > 1 and lo >= hi:
        raise BetaHoleError("--from must be below --to", "range")
    if not (1 < lo and hi <= 2):
        raise BetaHoleError("beta out of range (1,2]", "range")
    out_rows = []
    n = args.steps
    for i in range(n):
        b = lo if n == 1 else lo + (hi - lo) * Fraction(i, n - 1)
        cv = tau(args.m, BetaParam.exact(b))
        v = cv.value.lower
        out_rows.append((_dec(b, 17), _dec(v, 17), _dec(v, 17), _dec(v, 17), cv.label, cv.expansion.period))
    header = ["beta", "tau_lo", "tau_hi", "tau_mid", "chain", "expansion"]
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            _emit_csv(out_rows, header, fh)
    else:
        _emit_csv(out_rows, header, sys.stdout)
    return EXIT_OK


def cmd_theta(args) -> int:
    _check_m(args.m)
    print(theta(args.m, EventuallyPeriodicSequence.parse(args.b)))
    return EXIT_OK


def cmd_extremal(args) -> int:
    print(f"max-lyndon {max_lyndon(args.m, args.k)}")
    print(f"min-perron {min_perron(args.m, args.k)}")
    return EXIT_OK


def cmd_farey(args) -> int:
    w = farey_word(_frac(args.r))
    print(w)
    if args.code:
        print(farey_code(w))
    return EXIT_OK


def cmd_bullet(args) -> int:
    print(bullet_fold(args.words))
    return EXIT_OK


def cmd_compare(args) -> int:
    _check_m(args.m)
    _check_m(args.n)
    beta = parse_beta(args.beta, args.tol)
    tm, tn = tau(args.m, beta), tau(args.n, beta)
    vec, val = tau_compare_at(args.m, args.n, beta)
    print(f"tau_{args.m} {tm.value}  {tm.label}")
    print(f"tau_{args.n} {tn.value}  {tn.label}")
    print(f"vector  {vec.name.lower() if vec is not None else 'n/a'}")
    print(f"value   {val.name.lower() if val is not None else 'undecided'}")
    return EXIT_OK


def cmd_kl(args) -> int:
    iv = komornik_loreti(args.tol)
    print(iv.fmt(12))
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="betahole",
                                description="Critical hole sizes for periodic orbits of beta-transformations.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--precision", type=int, default=None,
                   help="working precision in bits (default from BETAHOLE_PRECISION or 128)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("psi", help="number of admissible m-chains")
    s.add_argument("m", type=int, nargs="?")
    s.add_argument("--table", type=int, metavar="N", help="print psi(1..N) as CSV")
    s.set_defaults(func=cmd_psi)

    s = sub.add_parser("chains", help="list admissible m-chains with words and anchors")
    s.add_argument("m", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_chains)

    tol_default = Fraction(1, 10 ** 12)

    s = sub.add_parser("tau", help="critical value for period m at a base")
    s.add_argument("m", type=int)
    s.add_argument("--beta", required=True, help="p/q, word:<bits>, decimal[±r] or kl")
    s.add_argument("--tol", type=_positive_frac, default=tol_default)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_tau)

    s = sub.add_parser("partition", help="the m-partition of (1,2]")
    s.add_argument("m", type=int)
    s.add_argument("--tol", type=_positive_frac, default=tol_default)
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    s.set_defaults(func=cmd_partition)

    s = sub.add_parser("sample", help="critical value on a uniform grid of bases (CSV)")
    s.add_argument("m", type=int)
    s.add_argument("--from", dest="lo", type=_frac, default=Fraction(101, 100))
    s.add_argument("--to", dest="hi", type=_frac, default=Fraction(2))
    s.add_argument("--steps", type=int, default=2000)
    s.add_argument("--out", help="output file (default stdout)")
    s.set_defaults(func=cmd_sample)

    s = sub.add_parser("theta", help="symbolic critical value for a kneading sequence")
    s.add_argument("m", type=int)
    s.add_argument("--b", required=True, help="preperiod:period, e.g. :1 for 1^inf")
    s.set_defaults(func=cmd_theta)

    s = sub.add_parser("extremal", help="largest Lyndon and smallest Perron word with m letters, k ones")
    s.add_argument("m", type=int)
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_extremal)

    s = sub.add_parser("farey", help="Farey word of p/q")
    s.add_argument("r", metavar="p/q")
    s.add_argument("--code", action="store_true", help="also print the U0/U1 code")
    s.set_defaults(func=cmd_farey)

    s = sub.add_parser("bullet", help="fold the substitution operator over Lyndon words")
    s.add_argument("words", nargs="+")
    s.set_defaults(func=cmd_bullet)

    s = sub.add_parser("compare", help="compare the m- and n-critical values at a base")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--beta", required=True)
    s.add_argument("--tol", type=_positive_frac, default=tol_default)
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("kl", help="enclosure of the Komornik-Loreti constant")
    s.add_argument("--tol", type=_positive_frac, default=Fraction(1, 10 ** 9))
    s.set_defaults(func=cmd_kl)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.precision is not None:
        if args.precision < 8:
            parser.error("--precision must be at least 8")
        import os

        from .numerics import PRECISION_ENV
        os.environ[PRECISION_ENV] = str(args.precision)
    try:
        return args.func(args)
    except (AmbiguousError, PrecisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_AMBIGUOUS
    except BetaHoleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
