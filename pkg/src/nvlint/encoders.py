"""Vector encodings of the five pair components: name, value string, type,
length and shape.

Types get an 11-slot one-hot (ten frequent types plus "other"); length and
shape get 12 slots (ten buckets of width 100, one for >= 1000, one for
absent); value strings become printable-ASCII character indices.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .records import NameValuePair

COMPONENTS = ("name", "value_string", "type", "length", "shape")

PAD_IDX = 0
UNK_IDX = 1
CHAR_OFFSET = 2
PRINTABLE_LO = 32
PRINTABLE_HI = 126  # inclusive; 95 printable ASCII chars
CHAR_VOCAB_SIZE = PRINTABLE_HI - PRINTABLE_LO + 1 + CHAR_OFFSET  # 97
L_MAX = 200

TYPE_SLOTS = 11
TYPE_OTHER_SLOT = 10
BUCKET_SLOTS = 12
BUCKET_ABSENT_SLOT = 11


def encode_type(type_name: str, frequent_types: list[str]) -> np.ndarray:
    """One-hot over the frozen frequent-type list; residual types share the
    final "other" slot."""
    if len(frequent_types) > TYPE_SLOTS - 1:
        raise ValueError("frequent-type list longer than the ten reserved slots")
    vec = np.zeros(TYPE_SLOTS, dtype=np.float64)
    try:
        vec[frequent_types.index(type_name)] = 1.0
    except ValueError:
        vec[TYPE_OTHER_SLOT] = 1.0
    return vec


def length_bucket(n: int) -> int:
    """Slots 0-9 cover [0, 1000) in ranges of 100; slot 10 is >= 1000."""
    if n < 0:
        raise ValueError("length must be non-negative")
    return min(n // 100, 10)


def encode_length(length: int | None) -> np.ndarray:
    vec = np.zeros(BUCKET_SLOTS, dtype=np.float64)
    vec[BUCKET_ABSENT_SLOT if length is None else length_bucket(length)] = 1.0
    return vec


def encode_shape(shape: tuple[int, ...] | None) -> np.ndarray:
    """Bucket the product of the shape entries exactly like a length."""
    vec = np.zeros(BUCKET_SLOTS, dtype=np.float64)
    if shape is None:
        vec[BUCKET_ABSENT_SLOT] = 1.0
    else:
        vec[length_bucket(math.prod(shape))] = 1.0
    return vec


def encode_value_chars(s: str, l_max: int = L_MAX) -> tuple[np.ndarray, int]:
    """Character indices truncated/padded to l_max, plus the true length."""
    idx = np.full(l_max, PAD_IDX, dtype=np.int64)
    n = min(len(s), l_max)
    for i in range(n):
        code = ord(s[i])
        idx[i] = code - PRINTABLE_LO + CHAR_OFFSET if PRINTABLE_LO <= code <= PRINTABLE_HI else UNK_IDX
    return idx, n


@dataclass
class FeatureBundle:
    """Per-pair model input; masked components are zeroed (the value-string
    mask is applied to the encoder output inside the network)."""

    name_vec: np.ndarray
    value_chars: np.ndarray
    value_len: int
    type_onehot: np.ndarray
    len_onehot: np.ndarray
    shape_onehot: np.ndarray
    mask: frozenset


def assemble_features(
    pair: NameValuePair,
    embedding,
    frequent_types: list[str],
    mask: frozenset | str | set = frozenset(),
) -> FeatureBundle:
    if isinstance(mask, str):
        mask = frozenset(mask.split(",")) if mask else frozenset()
    mask = frozenset(mask)
    unknown = mask - set(COMPONENTS)
    if unknown:
        raise ValueError(f"unknown ablation components: {sorted(unknown)}")

    if "name" in mask:
        name_vec = np.zeros(embedding.dim, dtype=np.float64)
    else:
        name_vec = np.asarray(embedding.vector(pair.name), dtype=np.float64)
        # L2-normalize: embedding norms vary with corpus size and would
        # otherwise drown the name channel next to the one-hot features
        norm = np.linalg.norm(name_vec)
        if norm > 0.0:
            name_vec = name_vec / norm
    chars, n = encode_value_chars(pair.repr)
    type_onehot = np.zeros(TYPE_SLOTS) if "type" in mask else encode_type(pair.type, frequent_types)
    len_onehot = np.zeros(BUCKET_SLOTS) if "length" in mask else encode_length(pair.length)
    shape_onehot = np.zeros(BUCKET_SLOTS) if "shape" in mask else encode_shape(pair.shape)
    return FeatureBundle(
        name_vec=name_vec,
        value_chars=chars,
        value_len=n,
        type_onehot=type_onehot,
        len_onehot=len_onehot,
        shape_onehot=shape_onehot,
        mask=mask,
    )
