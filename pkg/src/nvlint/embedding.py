"""Subword identifier embedding: skip-gram with negative sampling over code
token streams, with character n-gram vectors so any name (seen or not) maps
to a vector.
"""
from __future__ import annotations

import io
import tokenize as pytokenize
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .serial import content_checksum, read_blob, write_blob

NUM_TOKEN = "<num>"
STR_TOKEN = "<str>"

_DROPPED_TOKEN_TYPES = frozenset({
    pytokenize.COMMENT, pytokenize.NL, pytokenize.NEWLINE, pytokenize.INDENT,
    pytokenize.DEDENT, pytokenize.ENCODING, pytokenize.ENDMARKER,
})


@dataclass
class TokenizeReport:
    files_ok: int = 0
    files_skipped: list[tuple[str, str]] = field(default_factory=list)


def tokenize_source(source: str) -> list[str]:
    """Lexical token stream: identifiers/keywords/operators verbatim, number
    and string literal contents replaced by placeholders, comments dropped.
    """
    out: list[str] = []
    reader = io.StringIO(source).readline
    for tok in pytokenize.generate_tokens(reader):
        if tok.type in _DROPPED_TOKEN_TYPES:
            continue
        if tok.type == pytokenize.NUMBER:
            out.append(NUM_TOKEN)
        elif tok.type == pytokenize.STRING:
            out.append(STR_TOKEN)
        elif tok.type in (pytokenize.NAME, pytokenize.OP):
            out.append(tok.string)
        # anything else (error tokens etc.) is dropped
    return out


def tokenize_corpus(source_files: list[str | Path]) -> tuple[list[list[str]], TokenizeReport]:
    """One token sequence per lexable file; unlexable files are skipped and
    counted."""
    report = TokenizeReport()
    sequences: list[list[str]] = []
    for path in source_files:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                source = fh.read()
            sequences.append(tokenize_source(source))
            report.files_ok += 1
        except (OSError, SyntaxError, UnicodeDecodeError, pytokenize.TokenError,
                IndentationError, ValueError) as exc:
            report.files_skipped.append((str(path), str(exc)))
    return sequences, report


def _fnv1a(data: bytes) -> int:
    h = 2166136261
    for b in data:
        h ^= b
        h = (h * 16777619) & 0xFFFFFFFF
    return h


def char_ngrams(token: str, nmin: int, nmax: int) -> list[str]:
    """Boundary-marked character n-grams of the token."""
    marked = f"<{token}>"
    grams = []
    for n in range(nmin, nmax + 1):
        for i in range(len(marked) - n + 1):
            grams.append(marked[i:i + n])
    return grams


class TokenEmbedding:
    """Trained subword embedding table.

    A token's vector is its word vector (when in vocabulary) plus the mean of
    its n-gram bucket vectors, so every string maps to a defined vector.
    """

    def __init__(self, dim: int, ngram_range: tuple[int, int], words: list[str],
                 counts: list[int], word_vecs: np.ndarray, ngram_vecs: np.ndarray,
                 seed: int = 0):
        if word_vecs.shape != (len(words), dim) or ngram_vecs.shape[1] != dim:
            raise ValueError("vector table shapes do not match dim/vocab")
        self.dim = dim
        self.ngram_range = ngram_range
        self.words = words
        self.counts = counts
        self.word_index = {w: i for i, w in enumerate(words)}
        self.word_vecs = word_vecs
        self.ngram_vecs = ngram_vecs
        self.seed = seed
        self.epoch_losses: list[float] = []
        self.warnings: list[str] = []
        self._bucket_cache: dict[str, np.ndarray] = {}

    @property
    def n_buckets(self) -> int:
        return self.ngram_vecs.shape[0]

    def buckets(self, token: str) -> np.ndarray:
        cached = self._bucket_cache.get(token)
        if cached is None:
            grams = char_ngrams(token, *self.ngram_range)
            cached = np.fromiter(
                (_fnv1a(g.encode("utf-8")) % self.n_buckets for g in grams),
                dtype=np.int64, count=len(grams))
            if len(self._bucket_cache) < 1_000_000:
                self._bucket_cache[token] = cached
        return cached

    def vector(self, token: str) -> np.ndarray:
        """Composed vector: mean over the word vector (when in vocabulary)
        and all n-gram vectors; all-zero only for the empty string."""
        buckets = self.buckets(token)
        idx = self.word_index.get(token)
        if buckets.size == 0 and idx is None:
            return np.zeros(self.dim, dtype=np.float64)
        total = self.ngram_vecs[buckets].sum(axis=0) if buckets.size else 0.0
        parts = buckets.size
        if idx is not None:
            total = total + self.word_vecs[idx]
            parts += 1
        return total / parts

    def _header(self) -> dict:
        return {
            "dim": self.dim,
            "ngram_range": list(self.ngram_range),
            "n_words": len(self.words),
            "n_buckets": self.n_buckets,
            "words": self.words,
            "counts": self.counts,
            "seed": self.seed,
        }

    def checksum(self) -> str:
        return content_checksum(self._header(),
                                {"word_vecs": self.word_vecs, "ngram_vecs": self.ngram_vecs})

    def save(self, path: str | Path) -> None:
        write_blob(path, "token-embedding", self._header(),
                   {"word_vecs": self.word_vecs, "ngram_vecs": self.ngram_vecs})

    @classmethod
    def load(cls, path: str | Path) -> "TokenEmbedding":
        header, arrays = read_blob(path, expect_kind="token-embedding")
        return cls(
            dim=header["dim"],
            ngram_range=tuple(header["ngram_range"]),
            words=header["words"],
            counts=header["counts"],
            word_vecs=arrays["word_vecs"],
            ngram_vecs=arrays["ngram_vecs"],
            seed=header.get("seed", 0),
        )

    def export_text(self, path: str | Path) -> None:
        """Composed per-token vectors as "token v1 ... v_dim" lines."""
        with open(path, "w", encoding="utf-8") as fh:
            for word in self.words:
                vec = self.vector(word)
                fh.write(word + " " + " ".join(f"{x:.6g}" for x in vec) + "\n")


def train_subword_embedding(
    sequences: list[list[str]],
    dim: int = 100,
    window: int = 5,
    epochs: int = 5,
    min_count: int = 2,
    negatives: int = 5,
    buckets: int = 50_000,
    lr: float = 0.025,
    lr_min: float = 1e-4,
    ngram_range: tuple[int, int] = (3, 5),
    seed: int = 0,
) -> TokenEmbedding:
    """Skip-gram with negative sampling; single-threaded and deterministic
    for a given seed."""
    counts: dict[str, int] = {}
    total_tokens = 0
    for seq in sequences:
        for tok in seq:
            counts[tok] = counts.get(tok, 0) + 1
            total_tokens += 1
    if total_tokens == 0:
        raise ValueError("empty corpus: no tokens to train on")

    vocab = sorted((t for t, c in counts.items() if c >= min_count),
                   key=lambda t: (-counts[t], t))
    if not vocab:
        # tiny corpora: keep every token rather than fail
        vocab = sorted(counts, key=lambda t: (-counts[t], t))
    index = {t: i for i, t in enumerate(vocab)}
    vocab_counts = [counts[t] for t in vocab]

    rng = np.random.default_rng(seed)
    word_vecs = rng.uniform(-0.5 / dim, 0.5 / dim, size=(len(vocab), dim))
    ngram_vecs = rng.uniform(-0.5 / dim, 0.5 / dim, size=(buckets, dim))
    out_vecs = np.zeros((len(vocab), dim), dtype=np.float64)

    emb = TokenEmbedding(dim=dim, ngram_range=ngram_range, words=vocab,
                         counts=vocab_counts, word_vecs=word_vecs,
                         ngram_vecs=ngram_vecs, seed=seed)
    if total_tokens <= window:
        emb.warnings.append(
            f"corpus of {total_tokens} tokens is smaller than the context window; "
            "embedding quality will be poor")

    # unigram^(3/4) noise distribution for negative sampling
    noise = np.array(vocab_counts, dtype=np.float64) ** 0.75
    noise_cdf = np.cumsum(noise / noise.sum())

    sentences = [np.array([index[t] for t in seq if t in index], dtype=np.int64)
                 for seq in sequences]
    word_buckets = [emb.buckets(t) for t in vocab]

    total_centers = sum(len(s) for s in sentences) * epochs
    processed = 0
    for epoch in range(epochs):
        loss_sum = 0.0
        loss_terms = 0
        for sent in sentences:
            n = len(sent)
            for i in range(n):
                step_lr = lr + (lr_min - lr) * (processed / max(1, total_centers))
                processed += 1
                b = int(rng.integers(1, window + 1))
                ctx = np.concatenate([sent[max(0, i - b):i], sent[i + 1:i + b + 1]])
                if ctx.size == 0:
                    continue
                center = int(sent[i])
                bucket_ids = word_buckets[center]
                parts = 1 + len(bucket_ids)
                v = (word_vecs[center] + ngram_vecs[bucket_ids].sum(axis=0)) / parts

                negs = np.searchsorted(noise_cdf, rng.random(ctx.size * negatives))
                rows = np.concatenate([ctx, negs])
                labels = np.zeros(rows.size)
                labels[:ctx.size] = 1.0
                # a sampled negative equal to its context word would push in
                # both directions; drop such draws
                keep = np.ones(rows.size, dtype=bool)
                keep[ctx.size:] = np.repeat(ctx, negatives) != negs
                rows, labels = rows[keep], labels[keep]

                u = out_vecs[rows]
                scores = u @ v
                sig = 1.0 / (1.0 + np.exp(-scores))
                g = sig - labels
                loss_sum += float(np.logaddexp(0.0, -scores[labels == 1.0]).sum()
                                  + np.logaddexp(0.0, scores[labels == 0.0]).sum())
                loss_terms += rows.size

                dv = (g @ u) / parts
                np.add.at(out_vecs, rows, -step_lr * np.outer(g, v))
                word_vecs[center] -= step_lr * dv
                np.add.at(ngram_vecs, bucket_ids, -step_lr * dv)
        emb.epoch_losses.append(loss_sum / max(1, loss_terms))
    return emb


def embed_name(embedding: TokenEmbedding, name: str) -> np.ndarray:
    """Deterministic vector for any string (subword composition)."""
    return embedding.vector(name)


def cosine_similarity(u: np.ndarray, v: np.ndarray) -> float:
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        raise ValueError("cosine similarity undefined for zero vectors")
    return float(np.dot(u, v) / (nu * nv))
