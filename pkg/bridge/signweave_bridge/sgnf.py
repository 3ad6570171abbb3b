"""SGNF feature file codec, independently implemented against the format:

    magic   4 bytes  b"SGNF"
    version u16 LE   currently 1
    stream  u8       0 = rgb, 1 = flow, 2 = concat
    dim     u32 LE
    windows u32 LE
    values  windows * dim float32 LE, row-major
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

MAGIC = b"SGNF"
VERSION = 1
STREAM_CODES = {"rgb": 0, "flow": 1, "concat": 2}
_HEADER = struct.Struct("<4sHBII")


def encode(stream: str, values: np.ndarray) -> bytes:
    values = np.ascontiguousarray(values, dtype="<f4")
    if values.ndim != 2:
        raise ValueError(f"feature matrix must be 2-D, got shape {values.shape}")
    n_windows, dim = values.shape
    header = _HEADER.pack(MAGIC, VERSION, STREAM_CODES[stream], dim, n_windows)
    return header + values.tobytes()


def write(path: Path | str, stream: str, values: np.ndarray) -> None:
    Path(path).write_bytes(encode(stream, values))


def read(path: Path | str) -> tuple[str, np.ndarray]:
    data = Path(path).read_bytes()
    magic, version, stream_code, dim, n_windows = _HEADER.unpack_from(data)
    if magic != MAGIC or version != VERSION:
        raise ValueError(f"{path}: not an SGNF v{VERSION} file")
    values = np.frombuffer(data, dtype="<f4", offset=_HEADER.size).reshape(n_windows, dim)
    name = {code: s for s, code in STREAM_CODES.items()}[stream_code]
    return name, values.copy()
