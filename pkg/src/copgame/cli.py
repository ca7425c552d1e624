"""Command-line interface.

Subcommands:

- ``check``: class flags (connectivity, diameter, forbidden patterns) per graph.
- ``cop-number``: exact cop number per graph, capped by ``--k-max``.
- ``verify``: dispatch a strategy per graph and referee it against the
  exactly optimal robber.
- ``sweep``: bound sweeps over a graph6 stream or the built-in enumeration.
- ``gen``: emit graph6 streams (exhaustive enumeration or seeded random
  2K2-free graphs).

Graphs stream one graph6 record per line on stdin or ``--input``; output is
one JSON record per line (``--pretty`` switches to a human table). Exit
codes: 0 success, 2 usage, 3 unreadable input/output or unparseable records
outside ``sweep``, 4 a sweep found violations.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import chain

from .errors import (
    BoundExceededError,
    BudgetError,
    CopGameError,
    GraphParseError,
    NotInClassError,
    UnsupportedSizeError,
)
from .graphs import parse_graph6, write_graph6
from .harness import (
    CONJ1,
    CONJ2,
    DIAM2,
    MK2,
    StrategyTrace,
    classify,
    enumerate_connected,
    random_2k2free,
    sweep_conjecture,
    sweep_mk2,
    verify_adversarial,
)
from .solver import cop_number
from .strategies import select_strategy


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read_records(path: str | None) -> list[str]:
    if path is None or path == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(path, "r", encoding="ascii") as fh:
            lines = fh.read().splitlines()
    return [ln.strip() for ln in lines if ln.strip()]


class _Out:
    def __init__(self, path: str | None):
        self._path = path
        self._fh = None

    def __enter__(self):
        self._fh = sys.stdout if self._path in (None, "-") else open(
            self._path, "w", encoding="ascii")
        return self._fh

    def __exit__(self, *exc):
        if self._fh is not sys.stdout and self._fh is not None:
            self._fh.close()
        return False


def _table(rows: list[dict], columns: list[str]) -> str:
    widths = {
        c: max(len(c), *(len(str(r.get(c, ""))) for r in rows)) if rows else len(c)
        for c in columns
    }
    lines = ["  ".join(c.ljust(widths[c]) for c in columns)]
    for r in rows:
        lines.append("  ".join(str(r.get(c, "")).ljust(widths[c]) for c in columns))
    return "\n".join(lines)


def _emit_records(records: list[dict], pretty: bool, columns: list[str], fh) -> None:
    if pretty:
        print(_table(records, columns), file=fh)
    else:
        for rec in records:
            print(_dumps(rec), file=fh)


def _cmd_check(args) -> int:
    records = []
    failed = False
    for raw in _read_records(args.input):
        try:
            g = parse_graph6(raw)
        except (GraphParseError, UnsupportedSizeError) as exc:
            records.append({"graph6": raw, "error": str(exc)})
            failed = True
            continue
        rec = {"graph6": write_graph6(g)}
        rec.update(classify(g))
        records.append(rec)
    with _Out(args.output) as fh:
        _emit_records(records, args.pretty, [
            "graph6", "n", "edges", "connected", "diameter", "2k2_free",
            "c3_free", "c4_free", "c5_free", "p5_free", "mk2_level", "error",
        ], fh)
    return 3 if failed else 0


def _cmd_cop_number(args) -> int:
    records = []
    failed = False
    for raw in _read_records(args.input):
        try:
            g = parse_graph6(raw)
        except (GraphParseError, UnsupportedSizeError) as exc:
            records.append({"graph6": raw, "error": str(exc)})
            failed = True
            continue
        rec = {"graph6": write_graph6(g), "n": g.n, "k_max": args.k_max}
        try:
            rec["cop_number"] = cop_number(g, args.k_max)
        except BoundExceededError:
            rec["cop_number"] = None
        except (BudgetError, CopGameError) as exc:
            rec["error"] = str(exc)
        records.append(rec)
    with _Out(args.output) as fh:
        _emit_records(records, args.pretty,
                      ["graph6", "n", "cop_number", "k_max", "error"], fh)
    return 3 if failed else 0


def _cmd_verify(args) -> int:
    records = []
    failed = False
    for raw in _read_records(args.input):
        try:
            g = parse_graph6(raw)
        except (GraphParseError, UnsupportedSizeError) as exc:
            records.append({"graph6": raw, "error": str(exc)})
            failed = True
            continue
        rec = {"graph6": write_graph6(g), "n": g.n}
        try:
            strat = select_strategy(g)
        except NotInClassError as exc:
            rec["error"] = f"out of class: {exc}"
            records.append(rec)
            continue
        rec["provenance"] = strat.provenance
        rec["k"] = strat.k
        rec["placement"] = list(strat.placement)
        out = verify_adversarial(g, strat, args.phase_cap)
        if isinstance(out, StrategyTrace):
            rec["captured"] = True
            rec["phases"] = out.cop_phases
        else:
            rec["captured"] = False
            rec["phases"] = None
        rec["branch"] = out.branch
        rec["play"] = out.to_json()
        records.append(rec)
    with _Out(args.output) as fh:
        _emit_records(records, args.pretty, [
            "graph6", "n", "provenance", "k", "captured", "phases", "branch", "error",
        ], fh)
    return 3 if failed else 0


def _cmd_sweep(args) -> int:
    if args.input is not None:
        entries: list = _read_records(args.input)
    else:
        entries = list(chain.from_iterable(
            enumerate_connected(n) for n in range(1, args.n_max + 1)))
    if args.mode == MK2:
        report = sweep_mk2(entries, args.m, args.phase_cap, args.jobs)
    else:
        report = sweep_conjecture(entries, args.mode, args.phase_cap, args.jobs)
    with _Out(args.output) as fh:
        if args.pretty:
            _emit_records(report.records, True, [
                "graph6", "n", "in_class", "cop_number", "bound_satisfied",
                "provenance", "capture_phases", "error",
            ], fh)
            print("", file=fh)
            for key in sorted(report.summary):
                print(f"{key}: {report.summary[key]}", file=fh)
        else:
            for rec in report.records:
                print(_dumps(rec), file=fh)
            print(_dumps({"summary": report.summary}), file=fh)
    return 4 if report.summary["violations"] else 0


def _cmd_gen(args) -> int:
    with _Out(args.output) as fh:
        if args.random:
            for i in range(args.count):
                g = random_2k2free(args.n_max, f"{args.seed}:{i}")
                print(write_graph6(g), file=fh)
        else:
            for n in range(1, args.n_max + 1):
                for g in enumerate_connected(n):
                    print(write_graph6(g), file=fh)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="copgame",
        description="Cops-and-robbers game engine: exact solving, certified "
                    "strategies, and bound sweeps on graph6 streams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, with_input=True):
        if with_input:
            p.add_argument("--input", metavar="PATH",
                           help="graph6 records, one per line (default stdin)")
        p.add_argument("--output", metavar="PATH",
                       help="write results here (default stdout)")

    p = sub.add_parser("check", help="class flags per graph")
    add_io(p)
    p.add_argument("--pretty", action="store_true", help="table instead of JSON lines")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("cop-number", help="exact cop number per graph")
    add_io(p)
    p.add_argument("--k-max", type=int, default=3, metavar="K",
                   help="largest cop count to try (default 3)")
    p.add_argument("--pretty", action="store_true", help="table instead of JSON lines")
    p.set_defaults(func=_cmd_cop_number)

    p = sub.add_parser("verify", help="play the dispatched strategy against "
                                      "the optimal robber")
    add_io(p)
    p.add_argument("--phase-cap", type=int, default=None, metavar="N",
                   help="cop-move limit before declaring escape (default n^2)")
    p.add_argument("--pretty", action="store_true", help="table instead of JSON lines")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="bound sweep over a graph stream or the "
                                     "built-in enumeration")
    p.add_argument("--mode", required=True, choices=[CONJ1, CONJ2, DIAM2, MK2])
    p.add_argument("--m", type=int, default=None,
                   help="matching size for --mode mk2 (bound 2m-1)")
    add_io(p)
    p.add_argument("--n-max", type=int, default=None, metavar="N",
                   help="sweep all connected graphs on 1..N vertices instead "
                        "of reading --input")
    p.add_argument("--phase-cap", type=int, default=None, metavar="N")
    p.add_argument("--jobs", type=int, default=1, metavar="J",
                   help="worker processes (default 1)")
    p.add_argument("--pretty", action="store_true", help="table instead of JSON lines")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("gen", help="emit graph6 streams")
    p.add_argument("--n-max", type=int, required=True, metavar="N",
                   help="enumerate connected graphs on 1..N vertices, or the "
                        "order of each --random draw")
    p.add_argument("--random", action="store_true",
                   help="seeded random connected 2K2-free graphs instead of "
                        "the enumeration")
    p.add_argument("--count", type=int, default=1, metavar="C",
                   help="number of random draws (default 1)")
    p.add_argument("--seed", type=int, default=None,
                   help="RNG seed; required with --random")
    add_io(p, with_input=False)
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "sweep":
        if args.mode == MK2 and (args.m is None or args.m < 2):
            parser.error("--mode mk2 requires --m >= 2")
        if (args.input is None) == (args.n_max is None):
            parser.error("sweep needs exactly one of --input or --n-max")
        if args.n_max is not None and not 1 <= args.n_max <= 8:
            parser.error("--n-max must be in 1..8")
    if args.command == "gen":
        if args.random and args.seed is None:
            parser.error("--random requires --seed (seeded runs only)")
        if not args.random and not 1 <= args.n_max <= 8:
            parser.error("--n-max must be in 1..8 when enumerating")
        if args.random and args.n_max < 1:
            parser.error("--n-max must be >= 1")
    try:
        return args.func(args)
    except OSError as exc:
        print(f"copgame: {exc}", file=sys.stderr)
        return 3


def cli_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    cli_entry()
