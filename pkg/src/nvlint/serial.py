"""Versioned binary container for embeddings and model checkpoints.

Layout: magic, format version, kind string, JSON header, then named numpy
arrays in npy format. Checksums are computed over the logical content
(header + array bytes) so they are stable across rewrites of the same data.
"""
from __future__ import annotations

import hashlib
import json
import struct
from pathlib import Path

import numpy as np

MAGIC = b"NVLB"
FORMAT_VERSION = 1


class BlobFormatError(ValueError):
    pass


def write_blob(path: str | Path, kind: str, header: dict, arrays: dict[str, np.ndarray]) -> None:
    kind_b = kind.encode("utf-8")
    header_b = json.dumps(header, sort_keys=True, ensure_ascii=False).encode("utf-8")
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<HH", FORMAT_VERSION, len(kind_b)))
        fh.write(kind_b)
        fh.write(struct.pack("<I", len(header_b)))
        fh.write(header_b)
        fh.write(struct.pack("<I", len(arrays)))
        for name, arr in arrays.items():
            name_b = name.encode("utf-8")
            fh.write(struct.pack("<H", len(name_b)))
            fh.write(name_b)
            np.lib.format.write_array(fh, np.ascontiguousarray(arr), allow_pickle=False)


def read_blob(path: str | Path, expect_kind: str | None = None) -> tuple[dict, dict[str, np.ndarray]]:
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != MAGIC:
            raise BlobFormatError(f"{path}: not a blob file (bad magic)")
        version, kind_len = struct.unpack("<HH", fh.read(4))
        if version != FORMAT_VERSION:
            raise BlobFormatError(f"{path}: unsupported format version {version}")
        kind = fh.read(kind_len).decode("utf-8")
        if expect_kind is not None and kind != expect_kind:
            raise BlobFormatError(f"{path}: expected kind {expect_kind!r}, found {kind!r}")
        (header_len,) = struct.unpack("<I", fh.read(4))
        header = json.loads(fh.read(header_len).decode("utf-8"))
        (n_arrays,) = struct.unpack("<I", fh.read(4))
        arrays = {}
        for _ in range(n_arrays):
            (name_len,) = struct.unpack("<H", fh.read(2))
            name = fh.read(name_len).decode("utf-8")
            arrays[name] = np.lib.format.read_array(fh, allow_pickle=False)
    return header, arrays


def content_checksum(header: dict, arrays: dict[str, np.ndarray]) -> str:
    digest = hashlib.sha256()
    digest.update(json.dumps(header, sort_keys=True, ensure_ascii=False).encode("utf-8"))
    for name in sorted(arrays):
        arr = np.ascontiguousarray(arrays[name])
        digest.update(name.encode("utf-8"))
        digest.update(str(arr.dtype).encode("ascii"))
        digest.update(str(arr.shape).encode("ascii"))
        digest.update(arr.tobytes())
    return digest.hexdigest()
