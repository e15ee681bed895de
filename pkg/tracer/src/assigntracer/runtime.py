"""Runtime recording hook called from instrumented code.

One trace file per process, append-only, one JSON object per line, flushed
per record so crashes and timeouts keep everything written so far. The sink
is controlled by environment variables:

  NV_TRACE_FILE      output path; recording is a no-op when unset
  NV_TRACE_REPR_MAX  repr truncation limit (default 1000)
"""
from __future__ import annotations

import atexit
import json
import os
import threading

DEFAULT_REPR_MAX = 1000

_lock = threading.Lock()
_sink = None
_seq = 0
_dropped = 0
_disabled = False


def _open_sink():
    global _sink, _disabled
    if _sink is not None or _disabled:
        return _sink
    path = os.environ.get("NV_TRACE_FILE")
    if not path:
        _disabled = True
        return None
    try:
        # backslashreplace: a repr containing lone surrogates must not be
        # able to kill the traced program
        _sink = open(path, "a", encoding="utf-8", errors="backslashreplace")
        atexit.register(_close_sink)
    except OSError:
        _disabled = True
        return None
    return _sink


def _close_sink():
    global _sink
    if _sink is not None:
        try:
            _sink.flush()
            _sink.close()
        except OSError:
            pass
        _sink = None


def probe(value) -> dict:
    """The recorded properties of a value; every probe is defensive."""
    type_name = type(value).__name__
    try:
        text = repr(value)
    except Exception:
        text = f"<unprintable:{type_name}>"
    try:
        repr_max = int(os.environ.get("NV_TRACE_REPR_MAX", DEFAULT_REPR_MAX))
    except ValueError:
        repr_max = DEFAULT_REPR_MAX
    text = text[:repr_max]

    try:
        length = len(value)
        if not isinstance(length, int) or length < 0:
            length = None
    except Exception:
        length = None

    shape = None
    if length is not None:
        try:
            raw = getattr(value, "shape", None)
            if (isinstance(raw, tuple) and raw
                    and all(isinstance(d, int) and not isinstance(d, bool) and d >= 0 for d in raw)
                    and raw[0] == length):
                shape = list(raw)
        except Exception:
            shape = None

    try:
        bases = [c.__name__ for c in type(value).__mro__[1:] if c is not object]
    except Exception:
        bases = []

    return {"repr": text, "type": type_name, "bases": bases, "len": length, "shape": shape}


def record(name: str, value, file: str, line: int):
    """Append one trace record; always returns the value unchanged and never
    raises into the traced program."""
    global _seq, _dropped
    try:
        sink = _open_sink()
        if sink is None:
            return value
        fields = probe(value)
        with _lock:
            rec = {
                "name": name,
                "repr": fields["repr"],
                "type": fields["type"],
                "bases": fields["bases"],
                "len": fields["len"],
                "shape": fields["shape"],
                "file": file,
                "line": line,
                "seq": _seq,
            }
            try:
                sink.write(json.dumps(rec, ensure_ascii=False) + "\n")
                sink.flush()
                _seq += 1  # seq stays gap-free in the file
            except OSError:
                _dropped += 1
    except Exception:
        # tracing must never alter program behavior
        pass
    return value


def dropped_count() -> int:
    return _dropped
