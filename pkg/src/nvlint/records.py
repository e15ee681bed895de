"""Shared record types and the line-delimited wire formats of the pipeline."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable

CONSISTENT = "consistent"
INCONSISTENT = "inconsistent"

ORIGIN_OBSERVED = "observed"
ORIGIN_TYPE_GUIDED = "type_guided"
ORIGIN_RANDOM = "random"


class TraceFormatError(ValueError):
    """A trace line that does not conform to the trace record schema."""


@dataclass(frozen=True)
class NameValuePair:
    """One observed assignment: name, value string, type, length and shape.

    ``bases`` carries the value's recorded base-type names (method-resolution
    order) so types can be merged without a live interpreter; it is dropped
    from the cleaned-dataset wire format after merging.
    """

    name: str
    repr: str
    type: str
    length: int | None = None
    shape: tuple[int, ...] | None = None
    bases: tuple[str, ...] = ()
    file: str = ""
    line: int = 0
    seq: int = -1

    def with_type(self, new_type: str) -> "NameValuePair":
        return replace(self, type=new_type)

    def location(self) -> str:
        return f"{self.file}:{self.line}"

    def identity(self) -> tuple:
        """Stable sort/checksum key over the pair's observable fields."""
        return (self.name, self.repr, self.type, self.length if self.length is not None else -1,
                self.shape if self.shape is not None else (), self.file, self.line, self.seq)

    def to_json(self, include_bases: bool = False) -> str:
        rec = {
            "name": self.name,
            "repr": self.repr,
            "type": self.type,
            "len": self.length,
            "shape": list(self.shape) if self.shape is not None else None,
            "file": self.file,
            "line": self.line,
            "seq": self.seq,
        }
        if include_bases:
            rec["bases"] = list(self.bases)
        return json.dumps(rec, ensure_ascii=False)


@dataclass(frozen=True)
class LabeledExample:
    """A pair plus its consistency label and how the example was obtained."""

    pair: NameValuePair
    label: str
    origin: str

    def __post_init__(self) -> None:
        if self.label not in (CONSISTENT, INCONSISTENT):
            raise ValueError(f"bad label: {self.label!r}")
        if self.origin not in (ORIGIN_OBSERVED, ORIGIN_TYPE_GUIDED, ORIGIN_RANDOM):
            raise ValueError(f"bad origin: {self.origin!r}")
        if (self.origin == ORIGIN_OBSERVED) != (self.label == CONSISTENT):
            raise ValueError(f"origin {self.origin!r} inconsistent with label {self.label!r}")


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise TraceFormatError(msg)


def parse_trace_line(line: str) -> NameValuePair:
    """Validate one trace line against the trace schema and build a pair.

    Raises TraceFormatError on any deviation; absent len/shape are null.
    """
    try:
        rec = json.loads(line)
    except json.JSONDecodeError as exc:
        raise TraceFormatError(f"not JSON: {exc}") from None
    _require(isinstance(rec, dict), "line is not an object")

    name = rec.get("name")
    _require(isinstance(name, str) and len(name) > 0, "missing or empty name")
    value_repr = rec.get("repr")
    _require(isinstance(value_repr, str), "missing repr")
    type_name = rec.get("type")
    _require(isinstance(type_name, str) and len(type_name) > 0, "missing type")

    bases = rec.get("bases", [])
    if bases is None:
        bases = []
    _require(isinstance(bases, list) and all(isinstance(b, str) for b in bases), "bad bases")

    length = rec.get("len")
    if length is not None:
        _require(isinstance(length, int) and not isinstance(length, bool) and length >= 0, "bad len")

    shape = rec.get("shape")
    if shape is not None:
        _require(isinstance(shape, list) and all(isinstance(d, int) and not isinstance(d, bool) and d >= 0 for d in shape),
                 "bad shape")
        _require(length is not None, "shape present without len")
        _require(len(shape) > 0 and shape[0] == length, "shape[0] != len")

    file = rec.get("file")
    _require(isinstance(file, str), "missing file")
    line_no = rec.get("line")
    _require(isinstance(line_no, int) and not isinstance(line_no, bool) and line_no >= 1, "bad line")
    seq = rec.get("seq")
    _require(isinstance(seq, int) and not isinstance(seq, bool) and seq >= 0, "bad seq")

    return NameValuePair(
        name=name,
        repr=value_repr,
        type=type_name,
        length=length,
        shape=tuple(shape) if shape is not None else None,
        bases=tuple(bases),
        file=file,
        line=line_no,
        seq=seq,
    )


def pair_from_record(rec: dict) -> NameValuePair:
    """Build a pair from a cleaned-dataset record (post-merge, no bases)."""
    shape = rec.get("shape")
    return NameValuePair(
        name=rec["name"],
        repr=rec["repr"],
        type=rec["type"],
        length=rec.get("len"),
        shape=tuple(shape) if shape is not None else None,
        file=rec.get("file", ""),
        line=rec.get("line", 0),
        seq=rec.get("seq", -1),
    )


def write_pairs(path: str | Path, pairs: Iterable[NameValuePair]) -> int:
    n = 0
    with open(path, "w", encoding="utf-8") as fh:
        for pair in pairs:
            fh.write(pair.to_json() + "\n")
            n += 1
    return n


def read_pairs(path: str | Path) -> list[NameValuePair]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(pair_from_record(json.loads(line)))
    return out


def write_labeled(path: str | Path, examples: Iterable[LabeledExample], seed: int) -> int:
    n = 0
    with open(path, "w", encoding="utf-8") as fh:
        for ex in examples:
            rec = json.loads(ex.pair.to_json())
            rec["label"] = ex.label
            rec["origin"] = ex.origin
            rec["seed"] = seed
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")
            n += 1
    return n


def read_labeled(path: str | Path) -> list[LabeledExample]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            out.append(LabeledExample(pair=pair_from_record(rec), label=rec["label"], origin=rec["origin"]))
    return out


def pairs_checksum(pairs: Iterable[NameValuePair]) -> str:
    """Order-insensitive sha256 over pair identities (split/audit manifests)."""
    digest = hashlib.sha256()
    for key in sorted(p.identity() for p in pairs):
        digest.update(repr(key).encode("utf-8"))
    return digest.hexdigest()


def file_checksum(path: str | Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()
