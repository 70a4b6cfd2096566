"""Command line entry point: ``run`` a scenario or a ``suite`` directory."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .errors import GateRefusal, MultitimeError
from .runner import EXIT_FAILED, EXIT_LOAD_ERROR, EXIT_OK, emit_report, golden_dir, load_scenario, run_scenario, run_suite


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multitime-lab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one scenario file")
    run.add_argument("--scenario", required=True, type=Path)
    run.add_argument("--out", default=None, help="report destination (default: stdout)")
    run.add_argument("--format", choices=("json", "csv"), default="json")
    run.add_argument("--allow-non-hermitian", action="store_true",
                     help="run unitary-formalism scenarios on non-Hermitian inputs")
    run.add_argument("--seed", type=int, default=None, help="override the scenario seed")

    suite = sub.add_parser("suite", help="run every *.json scenario in a directory")
    suite.add_argument("--dir", type=Path, default=None, help="scenario directory (default: shipped golden suite)")
    suite.add_argument("--jobs", type=int, default=1)
    suite.add_argument("--out", type=Path, default=None, help="write the aggregate JSON report list here")
    suite.add_argument("--allow-non-hermitian", action="store_true")
    suite.add_argument("--seed", type=int, default=None)
    return parser


def _cmd_run(args) -> int:
    try:
        scenario = load_scenario(args.scenario, args.allow_non_hermitian, args.seed)
    except GateRefusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_LOAD_ERROR
    except (MultitimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LOAD_ERROR
    report = run_scenario(scenario)
    try:
        emit_report(report, args.format, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LOAD_ERROR
    return EXIT_OK if report.overall_passed else EXIT_FAILED


def _cmd_suite(args) -> int:
    directory = args.dir if args.dir is not None else golden_dir()
    reports, status = run_suite(directory, args.jobs, args.allow_non_hermitian, args.seed)
    for r in reports:
        mark = "PASS" if r.overall_passed else "FAIL"
        print(f"{mark}  {r.scenario_name}  ({len(r.checks)} checks)")
        for c in r.checks:
            if not c.passed:
                print(f"      {c.name}: value={c.value!r} tol={c.tolerance!r} {c.detail}")
    if args.out is not None:
        args.out.write_text(json.dumps([r.to_dict() for r in reports], indent=2) + "\n")
    return status


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    return _cmd_suite(args)


if __name__ == "__main__":
    sys.exit(main())
