"""Hash-derived mock features, matching the pipeline's scheme bit for bit.

The scheme (shared contract; do not change one side without the other):
u(label) expands SHA-256(label) in counter mode -- block i =
SHA-256(seed32 || uint32_be(i)) -- reads the blocks as big-endian uint32,
maps them to uniforms (word + 0.5) / 2**32, and turns consecutive pairs
into normal deviates via Box-Muller; the first dim deviates are
L2-normalized in float64. Window w of a clip is then

    normalize(u(sign) + 0.10 u(interpreter) + 0.05 u(augmentation)
              + 0.01 u("<clip>|<w>"))

cast to float32. Windows cover 10 frames each, the final partial window
included, over the augmentation-adjusted frame count (flips keep f,
upsample doubles, downsample halves rounding up).
"""

from __future__ import annotations

import hashlib

import numpy as np

WINDOW_SIZE = 10

AUGMENTATIONS = (
    "identity",
    "upsample",
    "downsample",
    "hflip",
    "hflip_downsample",
    "hflip_upsample",
)

_DOUBLED = ("upsample", "hflip_upsample")
_HALVED = ("downsample", "hflip_downsample")


def effective_frames(frame_count: int, augmentation: str) -> int:
    if frame_count < 1:
        raise ValueError(f"frame_count must be >= 1, got {frame_count}")
    if augmentation not in AUGMENTATIONS:
        raise ValueError(f"unknown augmentation {augmentation!r}")
    if augmentation in _DOUBLED:
        return 2 * frame_count
    if augmentation in _HALVED:
        return -(-frame_count // 2)
    return frame_count


def window_count(frame_count: int, augmentation: str) -> int:
    return -(-effective_frames(frame_count, augmentation) // WINDOW_SIZE)


def unit_vector(label: str, dim: int) -> np.ndarray:
    seed = hashlib.sha256(label.encode("utf-8")).digest()
    n_blocks = -(-dim // 8)
    raw = b"".join(
        hashlib.sha256(seed + i.to_bytes(4, "big")).digest() for i in range(n_blocks)
    )
    u = (np.frombuffer(raw, dtype=">u4").astype(np.float64) + 0.5) / 2.0**32
    r = np.sqrt(-2.0 * np.log(u[0::2]))
    theta = 2.0 * np.pi * u[1::2]
    z = np.empty(u.size, dtype=np.float64)
    z[0::2] = r * np.cos(theta)
    z[1::2] = r * np.sin(theta)
    z = z[:dim]
    return z / np.sqrt(np.dot(z, z))


def mock_windows(
    sign_id: str,
    interpreter_id: str,
    clip_id: str,
    frame_count: int,
    augmentation: str,
    dim: int,
) -> np.ndarray:
    base = (
        unit_vector(sign_id, dim)
        + 0.10 * unit_vector(interpreter_id, dim)
        + 0.05 * unit_vector(augmentation, dim)
    )
    rows = []
    for w in range(window_count(frame_count, augmentation)):
        v = base + 0.01 * unit_vector(f"{clip_id}|{w}", dim)
        rows.append(v / np.sqrt(np.dot(v, v)))
    return np.asarray(rows, dtype=np.float32)
