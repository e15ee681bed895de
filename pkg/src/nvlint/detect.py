"""Scoring of unseen pairs, heuristic false-positive pruning, and the
ranked warning report.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from .corpus import merge_against
from .encoders import assemble_features
from .net import CachedEmbedding, ModelBundle, predict_scores, stack_bundles
from .records import NameValuePair

# terms often found in generic names; matched case-insensitively as substrings
GENERIC_TERMS = ("data", "value", "result", "temp", "tmp", "str", "sample")

SUPPRESS_GENERIC = "generic-term"
SUPPRESS_SHORT_SUBTOKEN = "short-subtoken"

DEFAULT_THRESHOLD = 0.5


@dataclass(frozen=True)
class ScoredPair:
    pair: NameValuePair
    score: float


@dataclass(frozen=True)
class Warning:
    pair: NameValuePair
    score: float
    rank: int
    suppressed_by: str | None = None

    @property
    def location(self) -> str:
        return self.pair.location()


def score_pairs(bundle: ModelBundle, embedding, pairs: list[NameValuePair],
                chunk: int = 512) -> list[ScoredPair]:
    """One deterministic score per pair, using the model's frozen frequent-type
    list and ablation mask."""
    bundle.require_embedding(embedding)
    if not pairs:
        return []
    cached = CachedEmbedding(embedding)
    bundles = [assemble_features(p, cached, bundle.frequent_types, bundle.train_cfg.mask)
               for p in pairs]
    batch = stack_bundles(bundles)
    scores = predict_scores(bundle.params, batch, bundle.model_cfg, chunk=chunk)
    return [ScoredPair(pair=p, score=float(s)) for p, s in zip(pairs, scores)]


def suppression_reason(name: str) -> str | None:
    """Why the heuristics would suppress a warning on this name, if at all.

    Rule 1: the lowercase name contains a generic term as a substring.
    Rule 2: some underscore-delimited subtoken is shorter than three chars.
    When both match, the generic-term rule is recorded.
    """
    lower = name.lower()
    if any(term in lower for term in GENERIC_TERMS):
        return SUPPRESS_GENERIC
    if any(len(tok) < 3 for tok in name.split("_")):
        return SUPPRESS_SHORT_SUBTOKEN
    return None


def apply_heuristic_filter(scored: list[ScoredPair]) -> tuple[list[ScoredPair], list[tuple[ScoredPair, str]]]:
    """Partition scored pairs into kept and (suppressed, reason). The rules
    never read the score."""
    kept: list[ScoredPair] = []
    suppressed: list[tuple[ScoredPair, str]] = []
    for sp in scored:
        reason = suppression_reason(sp.pair.name)
        if reason is None:
            kept.append(sp)
        else:
            suppressed.append((sp, reason))
    return kept, suppressed


def rank_warnings(kept: list[ScoredPair]) -> list[Warning]:
    """Descending score; ties broken by (file, line, name) for stable diffs."""
    ordered = sorted(kept, key=lambda sp: (-sp.score, sp.pair.file, sp.pair.line, sp.pair.name))
    return [Warning(pair=sp.pair, score=sp.score, rank=i + 1) for i, sp in enumerate(ordered)]


def detect_warnings(scored: list[ScoredPair],
                    threshold: float = DEFAULT_THRESHOLD) -> tuple[list[Warning], list[tuple[ScoredPair, str]]]:
    """Threshold first, then heuristics, then ranking."""
    above = [sp for sp in scored if sp.score >= threshold]
    kept, suppressed = apply_heuristic_filter(above)
    return rank_warnings(kept), suppressed


def merge_for_scoring(pairs: list[NameValuePair], frequent_types: list[str]) -> list[NameValuePair]:
    """Apply the training-time frequent-type list to freshly traced pairs so
    scoring sees the same feature space the model was trained in."""
    merged, _ = merge_against(pairs, frequent_types)
    return merged


def _truncate(s: str, n: int = 60) -> str:
    return s if len(s) <= n else s[: n - 3] + "..."


def emit_report(warnings: list[Warning], fmt: str = "human",
                dest: TextIO | str | Path | None = None) -> str:
    """Render warnings; "human" is one line per warning, "machine" is
    line-delimited JSON with a blank category field for manual triage."""
    if fmt not in ("human", "machine"):
        raise ValueError(f"unknown report format: {fmt!r}")
    lines = []
    for w in warnings:
        if fmt == "human":
            lines.append(f"{w.rank:>4}. p={w.score:.3f}  {w.pair.name} = {_truncate(w.pair.repr)}"
                         f"  [{w.pair.type}]  {w.location}")
        else:
            lines.append(json.dumps({
                "rank": w.rank,
                "score": w.score,
                "name": w.pair.name,
                "repr": w.pair.repr,
                "type": w.pair.type,
                "len": w.pair.length,
                "shape": list(w.pair.shape) if w.pair.shape is not None else None,
                "file": w.pair.file,
                "line": w.pair.line,
                "category": "",
            }, ensure_ascii=False))
    text = "\n".join(lines) + ("\n" if lines else "")
    if dest is None:
        return text
    if isinstance(dest, (str, Path)):
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        dest.write(text)
    return text
