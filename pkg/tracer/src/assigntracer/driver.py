"""Batch driver: run an (instrumented) script in a child process and collect
its trace, surviving crashes and timeouts with the partial trace intact.
"""
from __future__ import annotations

import os
import subprocess
import sys
import tempfile
import time
from dataclasses import dataclass, field
from pathlib import Path

from .instrument import InstrumentError, instrument_source


@dataclass
class TraceRunReport:
    script: str
    exit_code: int | None
    records_written: int
    wall_time_s: float
    timed_out: bool
    error: str | None = None
    stdout: bytes | None = None
    stderr: bytes | None = None

    def to_dict(self) -> dict:
        return {
            "script": self.script,
            "exit_code": self.exit_code,
            "records_written": self.records_written,
            "wall_time_s": round(self.wall_time_s, 3),
            "timed_out": self.timed_out,
            "error": self.error,
        }


def _count_lines(path: Path) -> int:
    try:
        with open(path, "rb") as fh:
            return sum(1 for _ in fh)
    except OSError:
        return 0


def _child_env(trace_out: Path) -> dict:
    env = dict(os.environ)
    env["NV_TRACE_FILE"] = str(trace_out)
    # the instrumented prologue imports this package; make sure the child
    # finds it even when it is not installed into the child's interpreter
    pkg_root = str(Path(__file__).resolve().parent.parent)
    env["PYTHONPATH"] = pkg_root + os.pathsep + env.get("PYTHONPATH", "")
    return env


def run_traced(
    script_path: str | Path,
    timeout: float,
    trace_out: str | Path,
    instrument: bool = False,
    capture_output: bool = False,
    python: str = sys.executable,
) -> TraceRunReport:
    """Execute the script with its own directory as working directory.

    With instrument=True the script is instrumented into a temporary copy
    first (records still cite the original path).
    """
    script = Path(script_path).resolve()
    trace_out = Path(trace_out).resolve()
    start = time.monotonic()
    if not script.is_file():
        return TraceRunReport(script=str(script), exit_code=None, records_written=0,
                              wall_time_s=0.0, timed_out=False,
                              error=f"script not found: {script}")

    run_target = script
    temp_copy = None
    try:
        if instrument:
            try:
                text = instrument_source(script.read_text(encoding="utf-8"), str(script))
            except (InstrumentError, UnicodeDecodeError) as exc:
                return TraceRunReport(script=str(script), exit_code=None, records_written=0,
                                      wall_time_s=time.monotonic() - start, timed_out=False,
                                      error=f"instrumentation failed: {exc}")
            fd, temp_copy = tempfile.mkstemp(suffix=".py", prefix="nvtrace_")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(text)
            run_target = Path(temp_copy)

        timed_out = False
        exit_code: int | None = None
        error = None
        stdout = stderr = None
        try:
            proc = subprocess.run(
                [python, str(run_target)],
                cwd=str(script.parent),
                env=_child_env(trace_out),
                timeout=timeout,
                capture_output=capture_output,
            )
            exit_code = proc.returncode
            stdout, stderr = proc.stdout, proc.stderr
            if exit_code != 0:
                error = f"script exited with status {exit_code}"
        except subprocess.TimeoutExpired as exc:
            timed_out = True
            stdout, stderr = exc.stdout, exc.stderr
            error = f"timed out after {timeout}s"
        except OSError as exc:
            error = f"failed to launch: {exc}"

        return TraceRunReport(
            script=str(script),
            exit_code=exit_code,
            records_written=_count_lines(trace_out),
            wall_time_s=time.monotonic() - start,
            timed_out=timed_out,
            error=error,
            stdout=stdout,
            stderr=stderr,
        )
    finally:
        if temp_copy is not None:
            try:
                os.unlink(temp_copy)
            except OSError:
                pass
