"""Trace ingestion and dataset cleaning: type merging, name filtering, splits.

Pipeline order is load -> merge -> filter -> split -> frequencies; frequency
tables computed after merging therefore reflect merged type names.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .records import (
    NameValuePair,
    TraceFormatError,
    file_checksum,
    pairs_checksum,
    parse_trace_line,
    read_pairs,
    write_pairs,
)

# frozenset -> set is the one paper-cited merge that is not a base-class
# relationship; the dict aliases are redundant with recorded bases but kept
# so alias-only trace producers still merge.
DEFAULT_SUBCLASS_ALIASES: dict[str, str] = {
    "frozenset": "set",
    "defaultdict": "dict",
    "OrderedDict": "dict",
}

# bool subclasses int, but boolean/integer confusion is exactly a signal the
# detector should keep, so that merge is refused.
DEFAULT_MERGE_EXCLUSIONS: frozenset[tuple[str, str]] = frozenset({("bool", "int")})


@dataclass
class IngestReport:
    files_loaded: int = 0
    files_failed: list[tuple[str, str]] = field(default_factory=list)
    lines_total: int = 0
    lines_skipped: int = 0
    warnings: list[str] = field(default_factory=list)


@dataclass
class MergeReport:
    frequent: list[str] = field(default_factory=list)
    merges: Counter = field(default_factory=Counter)  # (from_type, to_type) -> count
    residual: Counter = field(default_factory=Counter)  # unmergeable infrequent types


@dataclass
class FilterReport:
    removed_short: int = 0
    removed_cryptic: int = 0


@dataclass
class TypeFrequencyTable:
    """Global and per-name type counts plus the ordered frequent-type list."""

    global_counts: dict[str, int]
    per_name: dict[str, dict[str, int]]
    frequent: list[str]


@dataclass
class DatasetSplit:
    train: list[NameValuePair]
    valid: list[NameValuePair]
    test: list[NameValuePair]
    seed: int


def load_traces(paths: list[str | Path]) -> tuple[list[NameValuePair], IngestReport]:
    """Read trace files in the given order; skip and count malformed lines."""
    report = IngestReport()
    pairs: list[NameValuePair] = []
    if not paths:
        report.warnings.append("no trace files given; dataset is empty")
        return pairs, report
    for path in paths:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                lines = fh.readlines()
        except OSError as exc:
            report.files_failed.append((str(path), str(exc)))
            continue
        file_pairs: list[NameValuePair] = []
        for line in lines:
            line = line.strip()
            if not line:
                continue
            report.lines_total += 1
            try:
                file_pairs.append(parse_trace_line(line))
            except TraceFormatError:
                report.lines_skipped += 1
        # the tracer writes seq strictly increasing; the stable sort is a
        # no-op then, and repairs ordering for hand-edited files
        file_pairs.sort(key=lambda p: p.seq)
        pairs.extend(file_pairs)
        report.files_loaded += 1
    return pairs, report


def frequent_types_of(pairs: list[NameValuePair], k: int) -> list[str]:
    """The k most frequent type names, ties broken lexicographically."""
    counts = Counter(p.type for p in pairs)
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return [t for t, _ in ranked[:k]]


def merge_target(
    pair: NameValuePair,
    frequent_set: set[str],
    aliases: dict[str, str],
    exclusions: frozenset[tuple[str, str]],
) -> str | None:
    """The frequent type this pair's type merges into, or None.

    Recorded bases are tried in MRO order before the alias table.
    """
    if pair.type in frequent_set:
        return None
    candidates = list(pair.bases)
    alias_target = aliases.get(pair.type)
    if alias_target is not None:
        candidates.append(alias_target)
    return next(
        (c for c in candidates if c in frequent_set and (pair.type, c) not in exclusions),
        None,
    )


def merge_types(
    pairs: list[NameValuePair],
    k: int = 10,
    subclass_aliases: dict[str, str] | None = None,
    exclusions: frozenset[tuple[str, str]] = DEFAULT_MERGE_EXCLUSIONS,
) -> tuple[list[NameValuePair], MergeReport]:
    """Replace infrequent types that relate to one of the k most frequent
    types (via recorded bases, MRO order, or the alias table) by that type.
    """
    aliases = DEFAULT_SUBCLASS_ALIASES if subclass_aliases is None else subclass_aliases
    frequent = frequent_types_of(pairs, k)
    return merge_against(pairs, frequent, aliases, exclusions)


def merge_against(
    pairs: list[NameValuePair],
    frequent: list[str],
    subclass_aliases: dict[str, str] | None = None,
    exclusions: frozenset[tuple[str, str]] = DEFAULT_MERGE_EXCLUSIONS,
) -> tuple[list[NameValuePair], MergeReport]:
    """Merge against a frozen frequent-type list (scoring-time path)."""
    aliases = DEFAULT_SUBCLASS_ALIASES if subclass_aliases is None else subclass_aliases
    frequent_set = set(frequent)
    report = MergeReport(frequent=list(frequent))
    merged: list[NameValuePair] = []
    for pair in pairs:
        if pair.type in frequent_set:
            merged.append(pair)
            continue
        target = merge_target(pair, frequent_set, aliases, exclusions)
        if target is None:
            report.residual[pair.type] += 1
            merged.append(pair)
        else:
            report.merges[(pair.type, target)] += 1
            merged.append(pair.with_type(target))
    return merged, report


def subtokens(name: str) -> list[str]:
    """Underscore-delimited subtokens (snake_case convention)."""
    return name.split("_")


def is_meaningless_name(name: str) -> bool:
    """True for names the cleaning stage discards: shorter than three
    characters, or multi-subtoken names whose every subtoken is shorter
    than three characters.
    """
    if len(name) < 3:
        return True
    toks = subtokens(name)
    if len(toks) >= 2 and all(len(t) < 3 for t in toks):
        return True
    return False


def filter_names(pairs: list[NameValuePair]) -> tuple[list[NameValuePair], FilterReport]:
    """Order-preserving removal of likely meaningless names."""
    report = FilterReport()
    kept: list[NameValuePair] = []
    for pair in pairs:
        if len(pair.name) < 3:
            report.removed_short += 1
        elif is_meaningless_name(pair.name):
            report.removed_cryptic += 1
        else:
            kept.append(pair)
    return kept, report


def split_dataset(
    pairs: list[NameValuePair],
    test_count: int,
    train_fraction: float = 0.8,
    seed: int = 0,
) -> DatasetSplit:
    """Carve out a uniform random held-out test set, then split the rest
    into train/valid by train_fraction. Deterministic given seed.
    """
    if test_count >= len(pairs):
        raise ValueError(f"test_count {test_count} must be < dataset size {len(pairs)}")
    if test_count < 0:
        raise ValueError("test_count must be non-negative")
    if not 0.0 < train_fraction < 1.0:
        raise ValueError("train_fraction must be in (0, 1)")
    rng = np.random.default_rng(seed)
    perm = rng.permutation(len(pairs))
    test_idx = perm[:test_count]
    rest = perm[test_count:]
    n_train = int(round(train_fraction * len(rest)))
    return DatasetSplit(
        train=[pairs[i] for i in rest[:n_train]],
        valid=[pairs[i] for i in rest[n_train:]],
        test=[pairs[i] for i in test_idx],
        seed=seed,
    )


def type_frequencies(pairs: list[NameValuePair], k: int = 10) -> TypeFrequencyTable:
    """Exact global and per-name type counts over the given pairs."""
    global_counts: Counter = Counter()
    per_name: dict[str, Counter] = {}
    for pair in pairs:
        global_counts[pair.type] += 1
        per_name.setdefault(pair.name, Counter())[pair.type] += 1
    ranked = sorted(global_counts.items(), key=lambda item: (-item[1], item[0]))
    return TypeFrequencyTable(
        global_counts=dict(global_counts),
        per_name={n: dict(c) for n, c in per_name.items()},
        frequent=[t for t, _ in ranked[:k]],
    )


def write_dataset(out_dir: str | Path, split: DatasetSplit, table: TypeFrequencyTable) -> dict:
    """Write the cleaned per-split datasets, frequency tables, and the split
    manifest (seed, counts, checksums). Returns the manifest dict.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    counts = {}
    checksums = {}
    for part in ("train", "valid", "test"):
        path = out / f"{part}.jsonl"
        counts[part] = write_pairs(path, getattr(split, part))
        checksums[part] = file_checksum(path)
    with open(out / "freq_global.jsonl", "w", encoding="utf-8") as fh:
        for t in sorted(table.global_counts, key=lambda t: (-table.global_counts[t], t)):
            fh.write(json.dumps({"type": t, "count": table.global_counts[t]}) + "\n")
    with open(out / "freq_by_name.jsonl", "w", encoding="utf-8") as fh:
        for name in sorted(table.per_name):
            fh.write(json.dumps({"name": name, "counts": dict(sorted(table.per_name[name].items()))},
                                ensure_ascii=False) + "\n")
    manifest = {
        "seed": split.seed,
        "counts": counts,
        "checksums": checksums,
        "frequent_types": table.frequent,
        "pairs_checksum": pairs_checksum(split.train + split.valid + split.test),
    }
    with open(out / "split_manifest.json", "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
    return manifest


def read_dataset(in_dir: str | Path) -> tuple[DatasetSplit, TypeFrequencyTable, dict]:
    """Load a dataset directory written by write_dataset."""
    src = Path(in_dir)
    with open(src / "split_manifest.json", "r", encoding="utf-8") as fh:
        manifest = json.load(fh)
    split = DatasetSplit(
        train=read_pairs(src / "train.jsonl"),
        valid=read_pairs(src / "valid.jsonl"),
        test=read_pairs(src / "test.jsonl"),
        seed=manifest["seed"],
    )
    global_counts = {}
    with open(src / "freq_global.jsonl", "r", encoding="utf-8") as fh:
        for line in fh:
            rec = json.loads(line)
            global_counts[rec["type"]] = rec["count"]
    per_name = {}
    with open(src / "freq_by_name.jsonl", "r", encoding="utf-8") as fh:
        for line in fh:
            rec = json.loads(line)
            per_name[rec["name"]] = rec["counts"]
    table = TypeFrequencyTable(global_counts=global_counts, per_name=per_name,
                               frequent=manifest["frequent_types"])
    return split, table, manifest
