"""nv-trace command line: instrument sources, run scripts under tracing.

Exit codes of `trace`: 0 script ran to completion, 2 script error,
3 timeout, 1 driver failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .driver import run_traced
from .instrument import InstrumentError, instrument_source

EXIT_OK = 0
EXIT_DRIVER_FAILURE = 1
EXIT_SCRIPT_ERROR = 2
EXIT_TIMEOUT = 3


def cmd_instrument(args) -> int:
    src = Path(args.source)
    try:
        text = instrument_source(src.read_text(encoding="utf-8"),
                                 args.module_id or str(src))
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DRIVER_FAILURE
    except InstrumentError as exc:
        loc = f" (line {exc.line})" if exc.line else ""
        print(f"error: {exc}{loc}", file=sys.stderr)
        return EXIT_DRIVER_FAILURE
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_trace(args) -> int:
    report = run_traced(args.script, timeout=args.timeout, trace_out=args.out,
                        instrument=args.instrument)
    # child stdout/stderr pass through; the report goes to stderr as one line
    print(json.dumps(report.to_dict()), file=sys.stderr)
    if report.error and report.exit_code is None and not report.timed_out:
        return EXIT_DRIVER_FAILURE
    if report.timed_out:
        return EXIT_TIMEOUT
    if report.exit_code != 0:
        return EXIT_SCRIPT_ERROR
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nv-trace", description="Record name/value assignment traces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("instrument", help="rewrite a source file to record assignments")
    p.add_argument("source")
    p.add_argument("-o", "--out", default=None, help="output path (stdout if omitted)")
    p.add_argument("--module-id", default=None, help="file label baked into records")

    p = sub.add_parser("trace", help="run a script, writing its trace")
    p.add_argument("script")
    p.add_argument("--out", required=True, help="trace output file")
    p.add_argument("--timeout", type=float, default=60.0)
    p.add_argument("--instrument", action="store_true",
                   help="instrument a plain script on the fly before running")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "instrument":
        return cmd_instrument(args)
    return cmd_trace(args)


if __name__ == "__main__":
    raise SystemExit(main())
