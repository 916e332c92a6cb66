"""Command-line front door.

Subcommands: ``classify``, ``trajectory``, ``polyline`` for single values;
``verify {transitions|beta-chain|blocks|polyline|convergence}`` for range
sweeps; ``cycles search`` for exhaustive cycle-candidate enumeration;
``records {delay|glide}`` for record tables; ``tree`` for the backward
preimage tree.

Exit codes: 0 all checks pass, 1 usage or I/O error, 2 a verification found
a counterexample.  Reports go to standard output (or ``--out``) in the
format chosen by ``--format``; anything diagnostic goes to standard error.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import Counter as _Tally

from .core import DEFAULT_STEP_LIMIT, backward_tree, records_sweep, trajectory
from .cycles import CycleSolution, count_candidates, search_cycles
from .errors import CollatzLabError
from .polyline import class_from_polyline, to_polyline
from .report import FORMATS, Counterexample, VerificationReport, export_report
from .residues import classify
from .sweeps import (
    verify_beta_chains,
    verify_blocks,
    verify_convergence,
    verify_polylines,
    verify_transitions,
)

__all__ = ["build_parser", "run", "main"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports bad usage as an exception, not sys.exit(2);
    exit code 2 is reserved for found counterexamples."""

    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", metavar="PATH", default=None, help="write output to a file")
    p.add_argument("--format", choices=FORMATS, default="text", help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="collatz-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="mod-4 class of a value")
    p.add_argument("z", type=_positive)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("trajectory", help="iterate the map to 1")
    p.add_argument("--start", type=_positive, required=True)
    p.add_argument("--limit", type=_positive, default=DEFAULT_STEP_LIMIT)
    p.set_defaults(func=_cmd_trajectory)

    p = sub.add_parser("polyline", help="vertex-count coordinates of a value")
    p.add_argument("z", type=_positive)
    p.set_defaults(func=_cmd_polyline)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument(
        "what",
        choices=("transitions", "beta-chain", "blocks", "polyline", "convergence"),
    )
    p.add_argument("--max", type=_positive, required=True, dest="max_value")
    p.add_argument("--limit", type=_positive, default=DEFAULT_STEP_LIMIT)
    p.add_argument("--workers", type=_positive, default=None)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("cycles", help="cycle-candidate search")
    action = p.add_subparsers(dest="action", required=True)
    s = action.add_parser("search", help="enumerate cycle candidates exhaustively")
    s.add_argument("--n-max", type=_positive, required=True, dest="n_max")
    s.add_argument("--budget", type=_positive, required=True)
    _add_output_flags(s)
    s.set_defaults(func=_cmd_cycles_search)

    p = sub.add_parser("records", help="delay/glide record table")
    p.add_argument("kind", choices=("delay", "glide"))
    p.add_argument("--max", type=_positive, required=True, dest="max_value")
    p.add_argument("--limit", type=_positive, default=DEFAULT_STEP_LIMIT)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_records)

    p = sub.add_parser("tree", help="backward preimage tree from 1")
    p.add_argument("--depth", type=_nonneg, required=True)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_tree)

    return parser


def _write(data: bytes, out: str | None) -> None:
    if out is None:
        sys.stdout.write(data.decode())
    else:
        with open(out, "wb") as fh:
            fh.write(data)


def _cmd_classify(args) -> int:
    c = classify(args.z)
    print(f"{args.z} = {c.tag.symbol} (k={c.k})")
    return 0


def _cmd_trajectory(args) -> int:
    t = trajectory(args.start, step_limit=args.limit)
    print(" -> ".join(str(v) for v in t.values))
    print(f"steps: {t.steps}")
    return 0


def _cmd_polyline(args) -> int:
    p = to_polyline(args.z)
    print(f"{args.z} = (x={p.x}, s={p.s}) {class_from_polyline(p).symbol}")
    return 0


def _cmd_verify(args) -> int:
    what = args.what
    if what == "transitions":
        report = verify_transitions(args.max_value, args.workers)
    elif what == "beta-chain":
        report = verify_beta_chains(args.max_value, args.workers)
    elif what == "blocks":
        report = verify_blocks(args.max_value, args.workers)
    elif what == "polyline":
        report = verify_polylines(args.max_value, args.workers)
    else:
        report = verify_convergence(args.max_value, args.limit, args.workers)
    _write(export_report(report, args.format), args.out)
    return 0 if report.passed else 2


def _cycle_line(s: CycleSolution) -> str:
    m = ",".join(str(v) for v in s.candidate.m_seq)
    e = ",".join(str(v) for v in s.candidate.e_seq)
    ok = "ok" if s.simulated_ok else "unsimulated"
    return f"m=[{m}] e=[{e}] k0={s.k0} {ok}"


def _cmd_cycles_search(args) -> int:
    start = time.perf_counter()
    solutions = search_cycles(args.n_max, args.budget)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    lines = [_cycle_line(s) for s in solutions]
    # Anything beyond the trivial fixed point k0 = 0, or anything the real
    # map refuses to follow, would contradict the only-trivial-cycle claim.
    bad = [
        Counterexample(
            _cycle_line(s), "trivial cycle (k0=0, simulation valid)", f"k0={s.k0}"
        )
        for s in solutions
        if s.k0 != 0 or not s.simulated_ok
    ]
    report = VerificationReport(
        command="cycles search",
        checked=count_candidates(args.n_max, args.budget),
        counterexamples=bad,
        elapsed_ms=elapsed_ms,
        config={
            "n_max": str(args.n_max),
            "budget": str(args.budget),
            "solutions": "; ".join(lines) if lines else "none",
        },
    )
    data = export_report(report, args.format)
    if args.format == "text":
        listing = "".join(f"cycle: {line}\n" for line in lines)
        data = listing.encode() + data
    _write(data, args.out)
    return 0 if report.passed else 2


def _cmd_records(args) -> int:
    start = time.perf_counter()
    table = records_sweep(args.max_value, args.kind, args.limit)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    report = VerificationReport(
        command=f"records {args.kind}",
        checked=args.max_value - 1,
        counterexamples=[],
        elapsed_ms=elapsed_ms,
        config={
            "max": str(args.max_value),
            "limit": str(args.limit),
            "entries": " ".join(f"{n}:{v}" for n, v in table.entries),
        },
    )
    data = export_report(report, args.format)
    if args.format == "text":
        listing = "".join(f"{n} {v}\n" for n, v in table.entries)
        data = listing.encode() + data
    _write(data, args.out)
    return 0


def _cmd_tree(args) -> int:
    start = time.perf_counter()
    tree = backward_tree(args.depth)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    per_level = _Tally(node.depth for node in tree.nodes.values())
    report = VerificationReport(
        command="tree",
        checked=len(tree.nodes),
        counterexamples=[],
        elapsed_ms=elapsed_ms,
        config={
            "depth": str(args.depth),
            "nodes": str(len(tree.nodes)),
            "max_value": str(max(tree.nodes)),
        },
    )
    data = export_report(report, args.format)
    if args.format == "text":
        listing = "".join(
            f"level {d}: {per_level.get(d, 0)}\n" for d in range(args.depth + 1)
        )
        data = listing.encode() + data
    _write(data, args.out)
    return 0


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except CollatzLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
