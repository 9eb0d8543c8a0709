"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .excited import enumerate_excited
from .partitions import format_partition, parse_partition
from .spectra import GraphParams, eta, s_nk_size, spectrum, spectrum_to_json
from .tableaux import f_skew, f_straight
from .verify import SUITES, run_checks

DEFAULT_CAP_N = 8


class UsageError(Exception):
    pass


def _threads(value: str) -> int | None:
    if value == "max":
        return os.cpu_count() or 1
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'max', got {value!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"thread count must be positive, got {n}")
    return n


def _params(n: int, k: int) -> GraphParams:
    try:
        return GraphParams(n, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _partition(text: str):
    try:
        return parse_partition(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def render_spectrum(p: GraphParams, entries, fmt: str) -> str:
    if fmt == "json":
        return dump_json(spectrum_to_json(p, entries))
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["partition", "eigenvalue", "multiplicity"])
        for e in entries:
            writer.writerow([format_partition(e.lam), e.eigenvalue, e.multiplicity])
        return buf.getvalue()
    rows = [(format_partition(e.lam), str(e.eigenvalue), str(e.multiplicity)) for e in entries]
    header = ("partition", "eigenvalue", "multiplicity")
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(3)]
    lines = [f"F({p.n},{p.k}): degree {s_nk_size(p)}, {len(entries)} distinct characters"]
    lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    for r in rows:
        lines.append(f"{r[0].ljust(widths[0])}  {r[1].rjust(widths[1])}  {r[2].rjust(widths[2])}")
    return "\n".join(lines) + "\n"


def cmd_spectrum(args) -> int:
    p = _params(args.n, args.k)
    entries = spectrum(p, threads=args.threads)
    sys.stdout.write(render_spectrum(p, entries, args.format))
    return 0


def cmd_eta(args) -> int:
    lam = _partition(args.partition)
    p = _params(args.n, args.k)
    if lam.n != p.n:
        raise UsageError(f"partition {args.partition!r} has size {lam.n}, not n={p.n}")
    value = eta(lam, p)
    mult = f_straight(lam) ** 2
    if args.format == "json":
        sys.stdout.write(dump_json({
            "partition": list(lam.parts), "n": p.n, "k": p.k,
            "eigenvalue": str(value), "multiplicity": str(mult),
        }))
    else:
        sys.stdout.write(f"eigenvalue {value}\nmultiplicity {mult}\n")
    return 0


def cmd_excited(args) -> int:
    lam = _partition(args.partition)
    mu = _partition(args.inner)
    found = enumerate_excited(lam, mu)
    if args.format == "json":
        sys.stdout.write(dump_json({
            "lambda": list(lam.parts), "mu": list(mu.parts),
            "diagrams": [d.to_json() for d in found], "count": len(found),
        }))
    else:
        for d in found:
            sys.stdout.write(" ".join(f"({r},{c})" for r, c in d) + "\n")
        sys.stdout.write(f"count {len(found)}\n")
    return 0


def cmd_syt(args) -> int:
    lam = _partition(args.partition)
    if args.inner is None:
        sys.stdout.write(f"{f_straight(lam)}\n")
    else:
        sys.stdout.write(f"{f_skew(lam, _partition(args.inner))}\n")
    return 0


def cmd_verify(args) -> int:
    if args.n_max < 1:
        raise UsageError(f"n-max must be positive, got {args.n_max}")
    if args.n_max > args.cap_n:
        raise UsageError(f"n-max {args.n_max} exceeds cap {args.cap_n} (raise with --cap-n)")
    suites = [s.strip() for s in args.checks.split(",") if s.strip()] if args.checks else list(SUITES)
    unknown = [s for s in suites if s not in SUITES]
    if unknown or not suites:
        raise UsageError(f"unknown suites {unknown}; choose from {', '.join(SUITES)}")
    results = run_checks(args.n_max, args.k, suites)
    for r in results:
        sys.stdout.write(r.line() + "\n")
    failed = sum(not r.passed for r in results)
    sys.stdout.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fixgraph", description="Exact spectra of k-point fixing graphs on S_n.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, csv_ok: bool = False):
        group = p.add_mutually_exclusive_group()
        group.add_argument("--json", dest="format", action="store_const", const="json")
        if csv_ok:
            group.add_argument("--csv", dest="format", action="store_const", const="csv")
        p.set_defaults(format="table")

    p = sub.add_parser("spectrum", help="full spectrum of F(n,k)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--threads", type=_threads, default=None, help="worker count or 'max' (default: all)")
    add_format(p, csv_ok=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("eta", help="one eigenvalue of F(n,k)")
    p.add_argument("partition", help='e.g. "2,1" or "2^3,1"')
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    add_format(p)
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("excited", help="excited diagrams of lambda/mu")
    p.add_argument("partition")
    p.add_argument("inner")
    add_format(p)
    p.set_defaults(func=cmd_excited)

    p = sub.add_parser("syt", help="number of standard Young tableaux of lambda or lambda/mu")
    p.add_argument("partition")
    p.add_argument("inner", nargs="?")
    p.set_defaults(func=cmd_syt)

    p = sub.add_parser("verify", help="run the cross-validation suites")
    p.add_argument("n_max", type=int, metavar="n-max")
    p.add_argument("--k", type=int, default=None, help="restrict to one k")
    p.add_argument("--checks", default=None, help=f"comma list from: {','.join(SUITES)}")
    p.add_argument("--cap-n", type=int, default=DEFAULT_CAP_N, dest="cap_n")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(2, f"fixgraph {args.command}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
