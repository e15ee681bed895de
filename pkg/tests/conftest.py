"""Session fixtures for the desk-scale corpus: the full pipeline is expensive
(embedding + classifier training), so every stage is computed once and its
wall time recorded for the runtime budget assertions."""
from __future__ import annotations

import time
from pathlib import Path

import pytest

from nvlint.corpus import (
    filter_names,
    load_traces,
    merge_types,
    split_dataset,
    type_frequencies,
)
from nvlint.embedding import tokenize_corpus, train_subword_embedding
from nvlint.negsample import build_labeled_dataset
from nvlint.net import TrainConfig, train_model

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS_DIR = FIXTURES / "corpus"

DESK_SEED = 0
DESK_TEST_COUNT = 600
DESK_EMBED_EPOCHS = 15
DESK_TRAIN_EPOCHS = 15


@pytest.fixture(scope="session")
def desk_times():
    return {}


@pytest.fixture(scope="session")
def golden_trace_paths():
    paths = sorted((CORPUS_DIR / "traces").glob("*.jsonl"))
    assert len(paths) >= 200, "fixture corpus missing; run tests/fixtures/make_corpus.py"
    return paths


@pytest.fixture(scope="session")
def golden_prog_paths():
    return sorted((CORPUS_DIR / "progs").glob("*.py"))


@pytest.fixture(scope="session")
def desk_corpus(golden_trace_paths, desk_times):
    t0 = time.monotonic()
    pairs, ingest_report = load_traces(golden_trace_paths)
    merged, merge_report = merge_types(pairs, k=10)
    filtered, filter_report = filter_names(merged)
    desk_times["ingest"] = time.monotonic() - t0
    return {
        "raw": pairs,
        "merged": merged,
        "filtered": filtered,
        "ingest_report": ingest_report,
        "merge_report": merge_report,
        "filter_report": filter_report,
    }


@pytest.fixture(scope="session")
def desk_split(desk_corpus, desk_times):
    t0 = time.monotonic()
    split = split_dataset(desk_corpus["filtered"], test_count=DESK_TEST_COUNT,
                          train_fraction=0.8, seed=DESK_SEED)
    desk_times["split"] = time.monotonic() - t0
    return split


@pytest.fixture(scope="session")
def desk_frequent(desk_split):
    return type_frequencies(desk_split.train, k=10).frequent


@pytest.fixture(scope="session")
def desk_labeled(desk_split, desk_times):
    t0 = time.monotonic()
    labeled = build_labeled_dataset(desk_split, "type_guided", seed=DESK_SEED)
    desk_times["sample"] = time.monotonic() - t0
    return labeled


@pytest.fixture(scope="session")
def desk_embedding(golden_prog_paths, desk_times):
    t0 = time.monotonic()
    sequences, report = tokenize_corpus(golden_prog_paths)
    assert not report.files_skipped
    emb = train_subword_embedding(sequences, epochs=DESK_EMBED_EPOCHS, seed=DESK_SEED)
    desk_times["embed"] = time.monotonic() - t0
    return emb


@pytest.fixture(scope="session")
def desk_model(desk_labeled, desk_embedding, desk_frequent, desk_times):
    t0 = time.monotonic()
    cfg = TrainConfig(epochs=DESK_TRAIN_EPOCHS, seed=DESK_SEED)
    bundle, history = train_model(cfg, desk_labeled.train, desk_labeled.valid,
                                  desk_embedding, desk_frequent)
    desk_times["train"] = time.monotonic() - t0
    return bundle, history
