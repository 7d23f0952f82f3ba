"""Command-line front end.

    rencontres verify theorem1 --n 0..20 --l 0..25
    rencontres table rencontres --n-max 5
    rencontres oracle-compare --n-max 6

Verification output is JSON lines, tables are CSV. Exit status is 0 when
everything agrees, 1 when an identity instance fails and 2 on usage or
configuration errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import random
import sys
from typing import Sequence

from . import characters, identities, oracle
from .core import DEFAULT_ENGINE as ENGINE
from .core import IntPoly
from .reports import SweepSummary, VerificationReport

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

VERIFY_TAGS = {
    "easy": "easy",
    "theorem1": "theorem1",
    "lemma2": "lemma2_moment",
    "theorem2": "theorem2",
    "stirling": "stirling_expansion",
    "recursion": "recursion",
    "transform": "binomial_transform",
    "character-norm": "character_norm",
}

TABLE_KINDS = ("derangements", "bell", "stirling", "rencontres")


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``"a..b"`` (inclusive) or a single integer ``"a"``."""
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed range {text!r}; expected a..b") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def parse_poly(text: str) -> IntPoly:
    try:
        return IntPoly.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def random_pool(seed: int, size: int = 8, max_degree: int = 6, bound: int = 10) -> list[IntPoly]:
    rng = random.Random(seed)
    pool = []
    for _ in range(size):
        deg = rng.randint(0, max_degree)
        pool.append(IntPoly(tuple(rng.randint(-bound, bound) for _ in range(deg + 1))))
    return pool


def _emit_reports(reports: Sequence[VerificationReport], out) -> None:
    buf = io.StringIO()
    for r in reports:
        buf.write(r.to_json())
        buf.write("\n")
    out.write(buf.getvalue())


def cmd_verify(args, out) -> int:
    identity = VERIFY_TAGS[args.identity]
    names = identities.IDENTITIES[identity][0]
    ranges = {}
    for name in names:
        value = getattr(args, name, None)
        if value is None:
            raise UsageError(f"verify {args.identity} requires --{name}")
        ranges[name] = value
    unused = [f"--{p}" for p in ("n", "l", "t", "x", "k") if p not in names and getattr(args, p) is not None]
    if unused:
        raise UsageError(f"verify {args.identity} does not take {', '.join(unused)}")

    pool = None
    if identity == "theorem2":
        if args.poly and args.seed is not None:
            raise UsageError("--poly and --seed are mutually exclusive")
        if args.poly:
            pool = args.poly
        elif args.seed is not None:
            pool = random_pool(args.seed)
    elif args.poly or args.seed is not None or args.explore:
        raise UsageError("--poly, --seed and --explore only apply to theorem2")

    summary: SweepSummary = identities.sweep(identity, ranges, pool, ENGINE, exploratory=args.explore)
    _emit_reports(summary.reports, out)
    if args.explore:
        return EXIT_OK
    return EXIT_OK if summary.ok else EXIT_FAIL


def cmd_table(args, out) -> int:
    if args.n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if args.kind == "derangements":
        w.writerow(["n", "d"])
        w.writerows([n, ENGINE.derangement(n)] for n in range(args.n_max + 1))
    elif args.kind == "bell":
        w.writerow(["n", "bell"])
        w.writerows([n, ENGINE.bell(n)] for n in range(args.n_max + 1))
    elif args.kind == "stirling":
        w.writerow(["n", "m", "stirling2"])
        for n in range(args.n_max + 1):
            w.writerows([n, m, s] for m, s in enumerate(ENGINE.stirling_row(n)))
    else:
        w.writerow(["n", "k", "f"])
        for n in range(args.n_max + 1):
            w.writerows([n, k, f] for k, f in enumerate(ENGINE.rencontres_recursive(n).counts))
    out.write(buf.getvalue())
    return EXIT_OK


def oracle_compare(n_max: int) -> SweepSummary:
    """Oracle tallies against every analytic route, for n = 0..n_max."""
    if n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    cap = oracle.oracle_cap()
    if n_max > cap:
        raise UsageError(f"--n-max {n_max} exceeds oracle cap {cap} (set RENCONTRES_ORACLE_CAP)")
    summary = SweepSummary()
    add = summary.reports.append
    for n in range(n_max + 1):
        orow = oracle.rencontres_row_oracle(n)
        rrow = ENGINE.rencontres_recursive(n)
        for k in range(n + 1):
            add(VerificationReport("oracle_rencontres_closed", {"n": n, "k": k}, orow[k], ENGINE.rencontres_closed(n, k)))
            add(VerificationReport("oracle_rencontres_recursive", {"n": n, "k": k}, orow[k], rrow[k]))
        add(VerificationReport("oracle_derangement", {"n": n}, orow[0], ENGINE.derangement(n)))
        for g in identities.DEFAULT_POLY_POOL:
            params = {"n": n, **{f"a{i}": a for i, a in enumerate(g.coeffs)}}
            brute = oracle.weighted_sum_oracle(n, g)
            lhs5 = sum(g(k) * ENGINE.binomial(n, k) * ENGINE.derangement(n - k) for k in range(n + 1))
            add(VerificationReport("oracle_weighted_sum", params, brute, lhs5))
            if n >= g.degree:
                add(VerificationReport("oracle_theorem2", params, brute, identities.check_theorem2(n, g, ENGINE).rhs))
        order = ENGINE.factorial(n)
        for i, chi in enumerate(characters.NAMED_CHARACTERS):
            for j, phi in enumerate(characters.NAMED_CHARACTERS):
                if n < (chi.poly * phi.poly).degree:
                    continue
                brute = oracle.inner_product_oracle(n, chi, phi) * order
                analytic = characters.inner_product(n, chi, phi, ENGINE) * order
                # both scaled by n!, hence integral
                add(VerificationReport("oracle_inner_product", {"n": n, "chi": i, "phi": j}, int(brute), int(analytic)))
    return summary


def cmd_oracle_compare(args, out) -> int:
    summary = oracle_compare(args.n_max)
    _emit_reports(summary.reports, out)
    return EXIT_OK if summary.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rencontres", description="Exact derangement identity checks.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check an identity over parameter ranges (JSON lines)")
    v.add_argument("identity", choices=sorted(VERIFY_TAGS))
    for name in ("n", "l", "t", "x", "k"):
        v.add_argument(f"--{name}", type=parse_range, metavar="A..B",
                       help="inclusive range; use --%s=-1..5 for negative bounds" % name)
    v.add_argument("--poly", type=parse_poly, action="append", metavar="A0,A1,...",
                   help="polynomial coefficients, constant term first (repeatable)")
    v.add_argument("--seed", type=int, help="draw a pseudo-random polynomial pool for theorem2")
    v.add_argument("--explore", action="store_true",
                   help="theorem2: evaluate n < deg(g) too, report mismatches as data")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="emit a sequence table as CSV")
    t.add_argument("kind", choices=TABLE_KINDS)
    t.add_argument("--n-max", type=int, required=True)
    t.set_defaults(func=cmd_table)

    o = sub.add_parser("oracle-compare", help="compare brute-force enumeration with analytic values")
    o.add_argument("--n-max", type=int, required=True)
    o.set_defaults(func=cmd_oracle_compare)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"rencontres: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
