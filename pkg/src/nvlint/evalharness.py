"""Quantitative protocol at desk scale: precision/recall/F1 sweeps, the
per-component ablation, and the negative-strategy comparison.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, asdict
from pathlib import Path

import numpy as np

from .corpus import DatasetSplit
from .negsample import build_labeled_dataset
from .net import ModelBundle, TrainConfig, examples_to_batch, predict_scores, train_model
from .records import INCONSISTENT, LabeledExample, pairs_checksum

DEFAULT_THRESHOLDS = tuple(round(0.05 * i, 2) for i in range(1, 20))

# RQ-style ablation: each single component, the type+value combination, and
# the unmasked baseline
ABLATION_COMPONENTS = (
    (),
    ("name",),
    ("value_string",),
    ("type",),
    ("length",),
    ("shape",),
    ("type", "value_string"),
)


@dataclass(frozen=True)
class MetricsPoint:
    """Counts plus derived rates at one threshold; precision is absent (None)
    when no warnings were issued, rather than 0 or 1."""

    threshold: float
    precision: float | None
    recall: float | None
    f1: float | None
    tp: int
    fp: int
    fn: int
    tn: int


def prf_metrics(scores, labels, threshold: float) -> MetricsPoint:
    """Exact counting with the warning set = {score >= threshold}."""
    scores = np.asarray(scores, dtype=np.float64)
    labels = np.asarray(labels)
    if scores.shape != labels.shape or scores.size == 0:
        raise ValueError("scores and labels must be nonempty and congruent")
    truth = labels.astype(bool)
    warn = scores >= threshold
    tp = int(np.sum(warn & truth))
    fp = int(np.sum(warn & ~truth))
    fn = int(np.sum(~warn & truth))
    tn = int(np.sum(~warn & ~truth))
    precision = tp / (tp + fp) if (tp + fp) > 0 else None
    recall = tp / (tp + fn) if (tp + fn) > 0 else None
    if precision is None or recall is None:
        f1 = None
    elif precision + recall == 0:
        f1 = 0.0
    else:
        f1 = 2 * precision * recall / (precision + recall)
    return MetricsPoint(threshold=threshold, precision=precision, recall=recall,
                        f1=f1, tp=tp, fp=fp, fn=fn, tn=tn)


def threshold_sweep(scores, labels, thresholds=DEFAULT_THRESHOLDS) -> tuple[list[MetricsPoint], MetricsPoint]:
    """One point per threshold plus the best-F1 point (ties: lower threshold;
    points with undefined F1 never win unless all are undefined)."""
    points = [prf_metrics(scores, labels, t) for t in thresholds]
    best = max(points, key=lambda pt: (pt.f1 if pt.f1 is not None else -1.0, -pt.threshold))
    return points, best


def labels_of(examples: list[LabeledExample]) -> np.ndarray:
    return np.array([1.0 if ex.label == INCONSISTENT else 0.0 for ex in examples])


def _eval_examples(bundle: ModelBundle, examples: list[LabeledExample], embedding) -> np.ndarray:
    batch = examples_to_batch(examples, embedding, bundle.frequent_types, bundle.train_cfg.mask)
    return predict_scores(bundle.params, batch, bundle.model_cfg)


@dataclass
class AblationRun:
    mask: tuple[str, ...]
    history: list[dict]
    best_valid_f1: float | None


def run_ablation(
    base_cfg: TrainConfig,
    labeled_train: list[LabeledExample],
    labeled_valid: list[LabeledExample],
    embedding,
    frequent_types: list[str],
    components=ABLATION_COMPONENTS,
) -> dict[str, AblationRun]:
    """One full training per masked component set (same seed throughout),
    returning epoch-wise validation F1 curves keyed by mask label."""
    results: dict[str, AblationRun] = {}
    for comp in components:
        mask = frozenset(comp)
        label = "+".join(sorted(mask)) if mask else "all"
        cfg = TrainConfig(batch_size=base_cfg.batch_size, epochs=base_cfg.epochs,
                          lr=base_cfg.lr, dropout=base_cfg.dropout,
                          seed=base_cfg.seed, mask=mask)
        _, history = train_model(cfg, labeled_train, labeled_valid, embedding, frequent_types)
        f1s = [h["valid_f1"] for h in history if h["valid_f1"] is not None]
        results[label] = AblationRun(mask=tuple(sorted(mask)), history=history,
                                     best_valid_f1=max(f1s) if f1s else None)
    return results


@dataclass
class StrategyResult:
    strategy: str
    best: MetricsPoint
    points: list[MetricsPoint]
    history: list[dict]


@dataclass
class CompareReport:
    seed: int
    positives_checksum: str
    results: dict[str, StrategyResult]


def compare_neg_strategies(
    split: DatasetSplit,
    embedding,
    frequent_types: list[str],
    cfg: TrainConfig,
    seed: int,
    eval_split: str = "test",
) -> CompareReport:
    """Two full train/eval cycles over identical positives, differing only in
    how negatives are generated."""
    results: dict[str, StrategyResult] = {}
    for strategy in ("type_guided", "random"):
        labeled = build_labeled_dataset(split, strategy, seed)
        bundle, history = train_model(cfg, labeled.train, labeled.valid, embedding, frequent_types)
        eval_examples = getattr(labeled, eval_split)
        scores = _eval_examples(bundle, eval_examples, embedding)
        points, best = threshold_sweep(scores, labels_of(eval_examples))
        results[strategy] = StrategyResult(strategy=strategy, best=best,
                                           points=points, history=history)
    checksum = pairs_checksum(split.train + split.valid + split.test)
    return CompareReport(seed=seed, positives_checksum=checksum, results=results)


def write_metrics_jsonl(path: str | Path, points: list[MetricsPoint], meta: dict | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if meta:
            fh.write(json.dumps({"meta": meta}) + "\n")
        for pt in points:
            fh.write(json.dumps(asdict(pt)) + "\n")


def write_metrics_table(path: str | Path, points: list[MetricsPoint]) -> None:
    """Plot-ready tab-separated table: threshold, precision, recall, F1."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("threshold\tprecision\trecall\tf1\n")
        for pt in points:
            def cell(x):
                return "" if x is None else f"{x:.6f}"
            fh.write(f"{pt.threshold:.2f}\t{cell(pt.precision)}\t{cell(pt.recall)}\t{cell(pt.f1)}\n")
