"""Negative-example generation: type-guided sampling and the random baseline.

A negative keeps the original name and borrows value, type, length and shape
from another observed pair; the type-guided variant draws the donor type
among types never or rarely seen with the name, weighted by global type
frequency.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .corpus import DatasetSplit, TypeFrequencyTable, type_frequencies
from .records import (
    INCONSISTENT,
    CONSISTENT,
    ORIGIN_OBSERVED,
    ORIGIN_RANDOM,
    ORIGIN_TYPE_GUIDED,
    LabeledExample,
    NameValuePair,
)

DEFAULT_INFREQ_THRESHOLD = 0.03


@dataclass
class LabeledSplit:
    train: list[LabeledExample]
    valid: list[LabeledExample]
    test: list[LabeledExample]
    seed: int
    strategy: str


def weighted_choice(rng: np.random.Generator, items: list[str], weights: list[float]) -> str:
    """One draw from items with probability proportional to weights."""
    w = np.asarray(weights, dtype=np.float64)
    if len(items) == 0:
        raise ValueError("empty candidate list")
    total = w.sum()
    if total <= 0:
        raise ValueError("weights must have positive mass")
    return items[int(rng.choice(len(items), p=w / total))]


def index_by_type(pairs: list[NameValuePair]) -> dict[str, list[NameValuePair]]:
    by_type: dict[str, list[NameValuePair]] = {}
    for pair in pairs:
        by_type.setdefault(pair.type, []).append(pair)
    return by_type


def _threshold_fraction(threshold: float | str | Fraction) -> Fraction:
    # the 3% boundary is inclusive; going through the decimal repr keeps
    # shares of exactly 3.0% on the infrequent side of the comparison
    if isinstance(threshold, Fraction):
        return threshold
    return Fraction(repr(float(threshold)))


def infrequent_types(name_counts: dict[str, int], threshold: float | Fraction) -> set[str]:
    """Types whose share among this name's pairs is <= threshold."""
    total = sum(name_counts.values())
    if total == 0:
        return set()
    bound = _threshold_fraction(threshold)
    return {t for t, c in name_counts.items() if Fraction(c, total) <= bound}


def _borrow_value(pair: NameValuePair, donor: NameValuePair, origin: str) -> LabeledExample:
    negative = replace(
        pair,
        repr=donor.repr,
        type=donor.type,
        length=donor.length,
        shape=donor.shape,
        bases=donor.bases,
    )
    return LabeledExample(pair=negative, label=INCONSISTENT, origin=origin)


def generate_negative_typeguided(
    pair: NameValuePair,
    table: TypeFrequencyTable,
    by_type: dict[str, list[NameValuePair]],
    infreq_threshold: float | Fraction = DEFAULT_INFREQ_THRESHOLD,
    rng: np.random.Generator | None = None,
) -> LabeledExample:
    """Create one inconsistent example for the given pair.

    Candidate types are those never seen with the name plus those seen with
    share <= infreq_threshold; the draw is weighted by global type frequency
    and the value is picked uniformly among the donor type's pairs. A result
    identical to an observed positive is kept.
    """
    if rng is None:
        rng = np.random.default_rng()
    name_counts = table.per_name.get(pair.name, {})
    t_name = set(name_counts)
    t_infreq = infrequent_types(name_counts, infreq_threshold)
    t_all = set(table.global_counts)
    t_cand = sorted((t_all - t_name) | t_infreq)
    if not t_cand:
        # name seen frequently with every known type; fall back to its
        # least-frequent type so generation still terminates
        t_cand = [min(name_counts, key=lambda t: (name_counts[t], t))]
    target_type = weighted_choice(rng, t_cand, [table.global_counts[t] for t in t_cand])
    donors = by_type.get(target_type)
    if not donors:
        raise ValueError(f"no pairs of type {target_type!r} in the sampling dataset")
    donor = donors[int(rng.integers(len(donors)))]
    return _borrow_value(pair, donor, ORIGIN_TYPE_GUIDED)


def generate_negative_random(
    pair: NameValuePair,
    dataset: list[NameValuePair],
    rng: np.random.Generator | None = None,
) -> LabeledExample:
    """Baseline: borrow the value of a uniformly random other pair."""
    if len(dataset) < 2:
        raise ValueError("random negative generation needs at least two pairs")
    if rng is None:
        rng = np.random.default_rng()
    for _ in range(64):
        donor = dataset[int(rng.integers(len(dataset)))]
        if donor is not pair:
            return _borrow_value(pair, donor, ORIGIN_RANDOM)
    donor = next((d for d in dataset if d is not pair), None)
    if donor is None:
        raise ValueError("dataset contains no pair other than the input")
    return _borrow_value(pair, donor, ORIGIN_RANDOM)


def _substream(seed: int, split_idx: int, pair_idx: int) -> np.random.Generator:
    # one independent stream per positive keeps generation deterministic
    # under any parallelization of the outer loop
    return np.random.default_rng(np.random.SeedSequence(entropy=(seed, split_idx, pair_idx)))


def build_labeled_dataset(
    split: DatasetSplit,
    strategy: str,
    seed: int,
    d_source: str = "train",
    infreq_threshold: float | Fraction = DEFAULT_INFREQ_THRESHOLD,
) -> LabeledSplit:
    """Label every positive and generate exactly one negative per positive.

    d_source picks the dataset D that frequency tables and donor values are
    drawn from: "train" (default; no test-statistics leakage) or "all".
    """
    if strategy not in ("type_guided", "random"):
        raise ValueError(f"unknown strategy: {strategy!r}")
    if not (split.train or split.valid or split.test):
        raise ValueError("empty split")
    if d_source == "train":
        dataset = list(split.train)
    elif d_source == "all":
        dataset = split.train + split.valid + split.test
    else:
        raise ValueError(f"unknown d_source: {d_source!r}")
    if not dataset:
        raise ValueError("sampling dataset D is empty")
    table = type_frequencies(dataset, k=10)
    by_type = index_by_type(dataset)

    parts: dict[str, list[LabeledExample]] = {}
    for split_idx, part in enumerate(("train", "valid", "test")):
        out: list[LabeledExample] = []
        for i, pair in enumerate(getattr(split, part)):
            rng = _substream(seed, split_idx, i)
            out.append(LabeledExample(pair=pair, label=CONSISTENT, origin=ORIGIN_OBSERVED))
            if strategy == "type_guided":
                out.append(generate_negative_typeguided(pair, table, by_type, infreq_threshold, rng))
            else:
                out.append(generate_negative_random(pair, dataset, rng))
        parts[part] = out
    return LabeledSplit(train=parts["train"], valid=parts["valid"], test=parts["test"],
                        seed=seed, strategy=strategy)
