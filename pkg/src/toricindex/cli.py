"""Command line entry point: ``toricindex {check,invariants,tau,fixtures}``."""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from .harness import (
    EXIT_OK,
    EXIT_REJECT,
    ParseError,
    UnknownFixture,
    fixture_ids,
    load_fixtures,
    parse_polytope_file,
    run_batch,
    write_report,
)


def _tau_csv(batch) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("name", "rho", "tau", "certificate"))
    for e in batch.entries:
        if not e.rejected:
            r = e.report
            cert = ";".join("(" + ",".join(map(str, p)) + ")" for p in r.certificate.parts)
            writer.writerow((r.name, r.rho, r.tau, cert))
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricindex",
        description="Invariants and Mukai-type checks for smooth toric Fano varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("check", "full pipeline with conjecture verdicts"),
        ("invariants", "invariant report without verdicts"),
        ("tau", "total index and partition certificate only"),
        ("fixtures", "list built-in fixture ids"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("inputs", nargs="*", help="polytope files")
        p.add_argument("--fixture", action="append", default=[], metavar="ID",
                       help="built-in fixture or fixture group (repeatable)")
        p.add_argument("--format", choices=("plain", "structured"), default="plain",
                       help="input file format")
        p.add_argument("--report", choices=("csv", "json"), default="csv",
                       help="output report format")
        p.add_argument("--out", type=Path, help="write the report here instead of stdout")
        p.add_argument("--transpose", action="store_true",
                       help="input columns are vertices")
        p.add_argument("--oracle", action="store_true",
                       help="cross-check tau against the brute-force search")
        p.add_argument("--jobs", type=int, default=1, metavar="N")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "fixtures":
        print("\n".join(fixture_ids()))
        return EXIT_OK

    records = []
    try:
        for path in args.inputs:
            records.extend(parse_polytope_file(path, args.format, args.transpose))
        for fid in args.fixture:
            records.extend(load_fixtures(fid))
    except (OSError, ParseError, UnknownFixture) as exc:
        print(f"toricindex: {exc}", file=sys.stderr)
        return EXIT_REJECT

    batch = run_batch(records, oracle=args.oracle, jobs=args.jobs)
    if args.command == "tau" and args.report == "csv":
        text = _tau_csv(batch)
    else:
        text = write_report(batch, args.report, verdicts=args.command == "check")
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)

    for e in batch.entries:
        if e.rejected:
            print(f"reject {e.record.name}: {e.error_type}: {e.error}", file=sys.stderr)
        elif args.command == "check" and e.violation:
            detail = e.total_verdict.violation_detail or e.mukai_verdict.violation_detail
            print(f"VIOLATION {e.record.name}: {detail}", file=sys.stderr)
    s = batch.summary
    print(f"checked={s.checked} equality_cases={s.equality_cases} "
          f"violations={s.violations} rejects={s.rejects}", file=sys.stderr)
    if args.command == "check":
        return batch.exit_code
    return EXIT_REJECT if s.rejects else EXIT_OK
