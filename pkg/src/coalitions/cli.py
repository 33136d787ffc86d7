"""Command-line harness.

Subcommands: verify | solve | bounds | scan | catalog-subcubic | generate.
Graphs come in as graph6 lines (inline literal, file path, or ``-`` for
stdin); reports go out as JSON lines or CSV, optionally with a summary
figure rendered next to the delimited output.

Exit codes: 0 ok, 1 invalid/violation, 2 parse or parameter error,
3 guard exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Iterable, Iterator, Optional

from . import __version__
from .bounds import bound_report_dc, bound_report_tc, certify, conjectured_tc2, double_upper_formula
from .coalition import verify_partition
from .constructions import (
    CertifiedInstance,
    build_extremal_dc,
    build_extremal_tc,
    min_degree_partition,
)
from .domination import Mode, closed_tuple, open_total
from .errors import (
    CoalitionsError,
    ConstructionError,
    Graph6Error,
    GuardExceededError,
    InadmissibleModeError,
    NotConnectedError,
)
from .graph import Graph, degree_stats, generate, is_connected, mask_of, parse_family
from .graph6 import parse_graph6, write_graph6
from .solver import brute_force_oracle, solve_exact
from .universe import bounded_degree_graphs, universe

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_GUARD = 3

# scan checks: canonical name -> (bound name, proven?)
CHECKS = {
    "conjecture": ("conjectured_upper", False),
    "degree-mix": ("degree_mix_upper", True),
    "half-delta": ("half_delta_upper", True),
    "double-upper": ("double_half_delta_upper", True),
}
CHECK_ALIASES = {"thm35": "degree-mix", "thm38": "half-delta", "thm41": "double-upper"}


class CliError(Exception):
    # default code keeps the exception picklable across worker processes
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _mode_from_args(args) -> Mode:
    if getattr(args, "double", False):
        return closed_tuple(2)
    return open_total(args.k)


def _read_graph6_lines(source: str) -> Iterator[bytes]:
    if source == "-":
        for line in sys.stdin.buffer:
            if line.strip():
                yield line.strip()
    elif os.path.exists(source):
        with open(source, "rb") as fh:
            for line in fh:
                if line.strip():
                    yield line.strip()
    else:
        yield source.encode("ascii")


def _single_graph(source: str) -> Graph:
    for line in _read_graph6_lines(source):
        try:
            return parse_graph6(line)
        except Graph6Error as exc:
            raise CliError(f"graph6 parse error: {exc}", EXIT_PARSE)
    raise CliError("no graph6 record in input", EXIT_PARSE)


def _emit(obj: dict) -> None:
    json.dump(obj, sys.stdout, separators=(",", ":"))
    sys.stdout.write("\n")


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    g = _single_graph(args.input)
    try:
        raw = json.loads(args.blocks)
        blocks = [mask_of(map(int, blk)) for blk in raw]
    except (ValueError, TypeError) as exc:
        raise CliError(f"bad --blocks JSON: {exc}", EXIT_PARSE)
    mode = _mode_from_args(args)
    try:
        report = verify_partition(g, blocks, mode)
    except (InadmissibleModeError, NotConnectedError) as exc:
        raise CliError(str(exc), EXIT_PARSE)
    _emit(
        {
            "schemaVersion": SCHEMA_VERSION,
            "mode": mode.label(),
            **report.to_json(),
        }
    )
    return EXIT_OK if report.valid else EXIT_INVALID


# ---------------------------------------------------------------------------
# solve


def cmd_solve(args) -> int:
    g = _single_graph(args.input)
    mode = _mode_from_args(args)
    result = solve_exact(g, mode, force=args.force)
    payload = {"schemaVersion": SCHEMA_VERSION, "mode": mode.label(), **result.to_json()}
    if args.oracle:
        oracle = brute_force_oracle(g, mode)
        payload["oracle"] = oracle
        payload["oracleAgrees"] = oracle == result.value
    _emit(payload)
    if args.oracle and not payload["oracleAgrees"]:
        return EXIT_INVALID
    return EXIT_OK


# ---------------------------------------------------------------------------
# bounds


def cmd_bounds(args) -> int:
    g = _single_graph(args.input)
    mode = _mode_from_args(args)
    if mode.closed:
        report = bound_report_dc(g)
        witness = None
    else:
        report = bound_report_tc(g, mode.k, include_domatic=args.include_domatic)
        witness = len(min_degree_partition(g, mode.k))
    cert = certify(witness, report)
    delta, Delta, _ = degree_stats(g)
    _emit(
        {
            "schemaVersion": SCHEMA_VERSION,
            "mode": mode.label(),
            "n": g.n,
            "delta": delta,
            "Delta": Delta,
            "bounds": [e.to_json() for e in report],
            "certificate": cert.to_json(),
        }
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# scan


def _scan_one(line: bytes, check: str, force: bool) -> dict:
    record = {
        "graph6": line.decode("ascii", "replace"),
        "n": None,
        "delta": None,
        "Delta": None,
        "value": None,
        "bound": None,
        "verdict": None,
    }

    def skipped(reason: str) -> dict:
        record["verdict"] = f"Skipped({reason})"
        return record

    try:
        g = parse_graph6(line)
    except Graph6Error:
        return skipped("parse")
    delta, Delta, _ = degree_stats(g)
    record.update(n=g.n, delta=delta, Delta=Delta)

    if not is_connected(g):
        return skipped("disconnected")

    if check == "double-upper":
        mode = closed_tuple(2)
        if delta < 1:
            return skipped("degree")
        if Delta < 4 * ((delta + 1) // 2) - 3:
            return skipped("gate")
        bound = double_upper_formula(delta, Delta)
    else:
        mode = open_total(2)
        if delta < 2:
            return skipped("degree")
        if check == "half-delta" and Delta < 4 * (delta // 2) - 2:
            return skipped("gate")
        if check == "conjecture" or check == "half-delta":
            bound = conjectured_tc2(delta, Delta)
        else:  # degree-mix
            bound = max(Delta, (delta // 2) * (Delta - 4) + delta)
    record["bound"] = bound

    try:
        value = solve_exact(g, mode, force=force).value
    except GuardExceededError:
        return skipped("guard")
    record["value"] = value
    record["verdict"] = "Satisfies" if value <= bound else "Violates"
    return record


SCAN_FIELDS = ["graph6", "n", "delta", "Delta", "value", "bound", "verdict"]


def cmd_scan(args) -> int:
    check = CHECK_ALIASES.get(args.check, args.check)
    if check not in CHECKS:
        raise CliError(f"unknown --check {args.check!r}", EXIT_PARSE)
    _, proven = CHECKS[check]

    if args.universe:
        lines: Iterable[bytes] = (
            write_graph6(g)
            for g in universe(args.universe, min_degree=0, connected=False)
        )
    elif args.input:
        lines = _read_graph6_lines(args.input)
    else:
        lines = _read_graph6_lines("-")

    records = _map_records(lines, lambda line: _scan_one(line, check, args.force), args.jobs)

    counts = {"Satisfies": 0, "Violates": 0, "Skipped": 0}
    writer = None
    if args.csv:
        writer = csv.DictWriter(sys.stdout, fieldnames=SCAN_FIELDS)
        writer.writeheader()
    plot_rows = []
    for record in records:
        counts[record["verdict"].split("(")[0]] += 1
        if writer:
            writer.writerow(record)
        else:
            _emit(record)
        if args.plot and record["value"] is not None:
            plot_rows.append(record)

    summary = {
        "schemaVersion": SCHEMA_VERSION,
        "check": check,
        "proven": proven,
        "summary": counts,
    }
    if writer:
        sys.stdout.write(f"# summary: {json.dumps(summary, separators=(',', ':'))}\n")
    else:
        _emit(summary)
    if counts["Violates"] and not proven:
        print(
            f"note: {counts['Violates']} graph(s) exceed the conjectured bound; "
            "this is a research finding, not an error",
            file=sys.stderr,
        )

    if args.plot:
        _plot_scan(plot_rows, check, args.plot)
    return EXIT_INVALID if (proven and counts["Violates"]) else EXIT_OK


def _map_records(lines, fn, jobs: Optional[int]):
    if not jobs or jobs <= 1:
        return map(fn, lines)
    from concurrent.futures import ProcessPoolExecutor

    executor = ProcessPoolExecutor(max_workers=jobs)
    # executor.map preserves input order regardless of completion order
    return executor.map(fn, lines, chunksize=64)


# ---------------------------------------------------------------------------
# catalog-subcubic


def _catalog_one(line: bytes) -> dict:
    record = {"graph6": line.decode("ascii", "replace"), "n": None, "value": None, "verdict": None}
    try:
        g = parse_graph6(line)
    except Graph6Error:
        record["verdict"] = "Skipped(parse)"
        return record
    record["n"] = g.n
    delta, Delta, _ = degree_stats(g)
    if Delta > 3:
        record["verdict"] = "Skipped(not-subcubic)"
        return record
    if delta < 2:
        record["verdict"] = "Skipped(degree)"
        return record
    if not is_connected(g):
        record["verdict"] = "Skipped(disconnected)"
        return record
    value = solve_exact(g, open_total(2)).value
    if value not in (2, 3):
        # a subcubic value outside {2,3} contradicts a proven theorem
        raise CliError(
            f"subcubic graph {record['graph6']} got value {value}, outside {{2,3}}",
            EXIT_INVALID,
        )
    record["value"] = value
    record["verdict"] = "Classified"
    return record


CATALOG_FIELDS = ["graph6", "n", "value", "verdict"]


def cmd_catalog(args) -> int:
    if args.universe:
        lines: Iterable[bytes] = (
            write_graph6(g)
            for n in range(4, args.universe + 1)
            for g in bounded_degree_graphs(n, max_degree=3, min_degree=2)
        )
    elif args.input:
        lines = _read_graph6_lines(args.input)
    else:
        lines = _read_graph6_lines("-")

    records = _map_records(lines, _catalog_one, args.jobs)

    counts: dict[tuple[int, int], int] = {}
    writer = None
    if args.csv:
        writer = csv.DictWriter(sys.stdout, fieldnames=CATALOG_FIELDS)
        writer.writeheader()
    for record in records:
        if writer:
            writer.writerow(record)
        else:
            _emit(record)
        if record["value"] is not None:
            key = (record["n"], record["value"])
            counts[key] = counts.get(key, 0) + 1

    summary = {
        "schemaVersion": SCHEMA_VERSION,
        "summary": {f"n={n},value={v}": c for (n, v), c in sorted(counts.items())},
    }
    if writer:
        sys.stdout.write(f"# summary: {json.dumps(summary, separators=(',', ':'))}\n")
    else:
        _emit(summary)

    if args.plot:
        _plot_catalog(counts, args.plot)
    return EXIT_OK


# ---------------------------------------------------------------------------
# generate


def cmd_generate(args) -> int:
    instance: Optional[CertifiedInstance] = None
    try:
        if args.gdl:
            instance = build_extremal_tc(*args.gdl)
            g = instance.graph
        elif args.hrt:
            instance = build_extremal_dc(*args.hrt)
            g = instance.graph
        elif args.family:
            g = generate(parse_family(args.family))
        else:
            raise CliError("generate needs --gdl, --hrt, or --family", EXIT_PARSE)
    except ConstructionError as exc:
        raise CliError(str(exc), EXIT_PARSE)

    if args.with_partition:
        if instance is None:
            raise CliError("--with-partition requires --gdl or --hrt", EXIT_PARSE)
        _emit({"schemaVersion": SCHEMA_VERSION, **instance.to_json()})
    else:
        sys.stdout.write(write_graph6(g).decode("ascii") + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# figures


def _plot_scan(rows: list[dict], check: str, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4.5))
    colors = {"Satisfies": "tab:blue", "Violates": "tab:red"}
    for verdict, color in colors.items():
        xs = [r["bound"] for r in rows if r["verdict"] == verdict]
        ys = [r["value"] for r in rows if r["verdict"] == verdict]
        if xs:
            ax.scatter(xs, ys, s=12, alpha=0.4, color=color, label=verdict)
    lim = max((max(r["bound"], r["value"]) for r in rows), default=1) + 1
    ax.plot([0, lim], [0, lim], ls="--", lw=0.8, color="gray", label="value = bound")
    ax.set_xlabel(f"{check} bound")
    ax.set_ylabel("exact value")
    ax.set_title(f"scan --check {check} ({len(rows)} graphs)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _plot_catalog(counts: dict[tuple[int, int], int], path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    orders = sorted({n for n, _ in counts})
    twos = [counts.get((n, 2), 0) for n in orders]
    threes = [counts.get((n, 3), 0) for n in orders]
    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.bar(orders, twos, label="value 2", color="tab:orange")
    ax.bar(orders, threes, bottom=twos, label="value 3", color="tab:blue")
    ax.set_xlabel("order n")
    ax.set_ylabel("graphs")
    ax.set_title("subcubic classification")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coalitions",
        description="Exact, certified total k-coalition and double coalition computations.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mode_flags(p):
        p.add_argument("--k", type=int, default=2, help="open total-k semantics (default 2)")
        p.add_argument(
            "--double", action="store_true", help="closed double-domination semantics"
        )

    p = sub.add_parser("verify", help="verify a coalition partition")
    p.add_argument("input", help="graph6 line, file, or - for stdin")
    p.add_argument("--blocks", required=True, help="partition as JSON list of vertex lists")
    add_mode_flags(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("solve", help="exact coalition number with witness")
    p.add_argument("input")
    add_mode_flags(p)
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    p.add_argument("--force", action="store_true", help="override the search guard")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("bounds", help="evaluate all known bounds")
    p.add_argument("input")
    add_mode_flags(p)
    p.add_argument("--include-domatic", action="store_true")
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("scan", help="check a bound over a graph stream")
    p.add_argument("input", nargs="?", help="graph6 file or - (default stdin)")
    p.add_argument(
        "--check",
        required=True,
        help="conjecture | degree-mix | half-delta | double-upper (aliases: thm35, thm38, thm41)",
    )
    p.add_argument("--universe", type=int, metavar="N", help="built-in enumerator, all n <= N")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--json", action="store_true", help="JSON lines (default)")
    p.add_argument("--force", action="store_true")
    p.add_argument("--plot", metavar="FILE", help="render a value-vs-bound figure")
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("catalog-subcubic", help="classify subcubic graphs by TC_2 value")
    p.add_argument("input", nargs="?")
    p.add_argument("--universe", type=int, metavar="N", help="built-in enumerator, 4 <= n <= N")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--plot", metavar="FILE")
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("generate", help="emit a named family as graph6")
    p.add_argument("--gdl", nargs=2, type=int, metavar=("D", "L"))
    p.add_argument("--hrt", nargs=2, type=int, metavar=("R", "T"))
    p.add_argument("--family", help='e.g. "cycle(7)" or "join(complete(2),star(3))"')
    p.add_argument("--with-partition", action="store_true")
    p.set_defaults(fn=cmd_generate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (Graph6Error, ConstructionError, InadmissibleModeError, NotConnectedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CoalitionsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
