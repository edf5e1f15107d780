"""Command-line front end: ``lattice-eqtri <command> ...``.

Results go to stdout; progress and diagnostics go to stderr. Exit codes:
0 success, 1 verification mismatch, 2 invalid input, 3 internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Sequence

from . import analysis, counting, diophantine, oracle, parametrization, symmetry
from .errors import LatticeError, OracleLimitError

log = logging.getLogger("lattice_eqtri")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, ensure_ascii=False) + "\n")


def _emit_csv(header: Sequence[str], rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def contribution_record(c: counting.ClassContribution) -> dict:
    p = c.plane
    return {
        "t": c.t_side, "d": p.d, "a": p.a, "b": p.b, "c": p.c,
        "triangle": [list(v) for v in c.representative],
        "alpha": c.stats.alpha, "beta": c.stats.beta, "gamma": c.stats.gamma,
        "count": c.count,
    }


def cmd_count(args) -> int:
    print(counting.et(args.n, args.threads).total)
    return EXIT_OK


def cmd_breakdown(args) -> int:
    report = counting.et(args.n, args.threads)
    if args.format == "json":
        _emit_json({"n": report.n, "total": report.total,
                    "contributions": [contribution_record(c) for c in report.contributions]})
    elif args.format == "csv":
        _emit_csv(["t", "d", "a", "b", "c", "triangle", "t_box", "alpha", "beta", "gamma", "count"],
                  [[c.t_side, c.plane.d, c.plane.a, c.plane.b, c.plane.c,
                    " ".join(",".join(map(str, v)) for v in c.representative),
                    c.stats.t, c.stats.alpha, c.stats.beta, c.stats.gamma, c.count]
                   for c in report.contributions])
    else:
        for c in report.contributions:
            p = c.plane
            print(f"t={c.t_side} plane=({p.a},{p.b},{p.c};d={p.d}) T={list(map(list, c.representative))} "
                  f"box={c.stats.t} alpha={c.stats.alpha} beta={c.stats.beta} gamma={c.stats.gamma} "
                  f"count={c.count}")
        print(f"total {report.total}")
    return EXIT_OK


def cmd_table(args) -> int:
    if args.lo > args.hi:
        raise ValueError(f"--from {args.lo} is larger than --to {args.hi}")
    log.info("counting classes up to n = %d", args.hi)
    values = counting.et_table(args.lo, args.hi, args.threads, progress=True)
    if args.format == "json":
        _emit_json([{"n": n, "et": total} for n, total in values])
    elif args.format == "csv":
        _emit_csv(["n", "et"], values)
    else:
        for n, total in values:
            print(n, total)
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.method == "vectors":
        print(oracle.vector_pair_et(args.n))
    else:
        print(oracle.brute_force_et(args.n, args.oracle_limit))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.lo > args.hi:
        raise ValueError(f"--from {args.lo} is larger than --to {args.hi}")
    if args.hi > args.oracle_limit:
        raise OracleLimitError(f"--to {args.hi} exceeds the oracle limit {args.oracle_limit}")
    status = EXIT_OK
    for n, total in counting.et_table(args.lo, args.hi, args.threads):
        expected = oracle.brute_force_et(n, args.oracle_limit)
        verdict = "OK" if expected == total else "MISMATCH"
        if expected != total:
            status = EXIT_MISMATCH
        print(f"n={n} pipeline={total} oracle={expected} {verdict}")
    return status


def cmd_sides(args) -> int:
    print(" ".join(map(str, diophantine.admissible_side_classes(args.n))))
    return EXIT_OK


def cmd_solve3(args) -> int:
    for sol in diophantine.solve_plane_equation(args.d):
        print(sol.a, sol.b, sol.c)
    return EXIT_OK


def cmd_divisors(args) -> int:
    print(" ".join(map(str, diophantine.odd_square_divisors(args.t, loeschian_quotient=args.loeschian))))
    return EXIT_OK


def cmd_minimal(args) -> int:
    a, b, c = args.a, args.b, args.c
    total = a * a + b * b + c * c
    if total % 3 or diophantine.isqrt_exact(total // 3) is None:
        raise ValueError(f"({a}, {b}, {c}) does not solve a^2 + b^2 + c^2 = 3 d^2")
    plane = diophantine.primitive_plane(a, b, c, diophantine.isqrt_exact(total // 3))
    if plane.normal != (a, b, c):
        raise ValueError(f"({a}, {b}, {c}) is not a primitive sorted plane normal")
    for T in parametrization.minimal_triangles(args.t, plane, args.bound):
        print(" ".join(",".join(map(str, v)) for v in T))
    return EXIT_OK


def cmd_orbit(args) -> int:
    c = args.coords
    T = symmetry.canonicalize([c[0:3], c[3:6], c[6:9]])
    stats = symmetry.orbit_stats(T, check=True)
    print(f"t={stats.t} alpha={stats.alpha} beta={stats.beta} gamma={stats.gamma}")
    return EXIT_OK


def cmd_increments(args) -> int:
    rows = analysis.increments(args.hi, counting.enumerate_classes(args.hi, args.threads))
    if args.format == "json":
        _emit_json([r._asdict() for r in rows])
    else:
        _emit_csv(["n", "u", "v", "w", "s"], rows)
    bad = [r.n for r in rows if min(r.u, r.v, r.w, r.s) < 0]
    if bad:
        log.warning("negative increments at n = %s", bad)
    return EXIT_OK


def cmd_ratios(args) -> int:
    rows = analysis.ratios(counting.et_table(1, args.hi, args.threads))
    if args.format == "json":
        _emit_json([{"n": r.n, "a_n": r.a_n} for r in rows])
    else:
        _emit_csv(["n", "a_n"], [(r.n, f"{r.a_n:.12g}") for r in rows])
    log.info("last ratio a_%d = %.12g (not a limit estimate)", rows[-1].n, rows[-1].a_n)
    return EXIT_OK


def _command(sub, name: str, text: str) -> argparse.ArgumentParser:
    return sub.add_parser(name, help=text, description=text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lattice-eqtri",
                                     description="Count equilateral triangles with vertices in {0..n}^3.")
    parser.add_argument("--threads", type=nonnegative_int, default=None,
                        help=f"worker processes (0 = all CPUs; default ${counting.THREADS_ENV} or 1)")
    parser.add_argument("--oracle-limit", type=positive_int, default=oracle.DEFAULT_ORACLE_LIMIT,
                        help="largest n the brute-force oracle accepts")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt3 = dict(choices=["plain", "csv", "json"], default="plain")
    fmt2 = dict(choices=["csv", "json"], default="csv")

    p = _command(sub, "count", "ET(n) by summing the per-class count formula over all classes")
    p.add_argument("n", type=positive_int)
    p.set_defaults(func=cmd_count)

    p = _command(sub, "breakdown", "per-class contributions to ET(n): side class, plane, orbit statistics")
    p.add_argument("n", type=positive_int)
    p.add_argument("--format", **fmt3)
    p.set_defaults(func=cmd_breakdown)

    p = _command(sub, "table", "ET(n) over a range of n (the integer sequence A102698)")
    p.add_argument("--from", dest="lo", type=positive_int, default=1)
    p.add_argument("--to", dest="hi", type=positive_int, required=True)
    p.add_argument("--format", **fmt3)
    p.set_defaults(func=cmd_table)

    p = _command(sub, "oracle", "ET(n) by brute force, independent of the classification")
    p.add_argument("n", type=positive_int)
    p.add_argument("--method", choices=["points", "vectors"], default="points",
                   help="points: triple scan over distance buckets; vectors: edge-vector pairs (no limit)")
    p.set_defaults(func=cmd_oracle)

    p = _command(sub, "verify", "compare the class-based count with the brute-force oracle")
    p.add_argument("--from", dest="lo", type=positive_int, default=1)
    p.add_argument("--to", dest="hi", type=positive_int, required=True)
    p.set_defaults(func=cmd_verify)

    p = _command(sub, "sides", "admissible side classes t <= n^2 (Loeschian numbers, side sqrt(2t))")
    p.add_argument("n", type=positive_int)
    p.set_defaults(func=cmd_sides)

    p = _command(sub, "solve3", "primitive sorted solutions of a^2 + b^2 + c^2 = 3 d^2 (plane classes)")
    p.add_argument("d", type=positive_int)
    p.set_defaults(func=cmd_solve3)

    p = _command(sub, "divisors", "odd d with d^2 dividing t (plane parameters for a side class)")
    p.add_argument("t", type=positive_int)
    p.add_argument("--loeschian", action="store_true", help="keep only d whose cofactor t/d^2 is Loeschian")
    p.set_defaults(func=cmd_divisors)

    p = _command(sub, "minimal", "minimal triangle representatives of side class t in plane (a, b, c)")
    for name in ("t", "a", "b", "c", "bound"):
        p.add_argument(name, type=positive_int)
    p.set_defaults(func=cmd_minimal)

    p = _command(sub, "orbit", "orbit statistics (t, alpha, beta, gamma) of a triangle given as 9 integers")
    p.add_argument("coords", type=int, nargs=9, metavar="X")
    p.set_defaults(func=cmd_orbit)

    p = _command(sub, "increments", "per-size polynomial increments (u, v, w, s) of ET")
    p.add_argument("--to", dest="hi", type=positive_int, required=True)
    p.add_argument("--format", **fmt2)
    p.set_defaults(func=cmd_increments)

    p = _command(sub, "ratios", "growth ratios ln ET(n) / ln(n + 1)")
    p.add_argument("--to", dest="hi", type=positive_int, required=True)
    p.add_argument("--format", **fmt2)
    p.set_defaults(func=cmd_ratios)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not log.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(message)s"))
        log.addHandler(handler)
        log.setLevel(logging.INFO)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (LatticeError, OverflowError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
