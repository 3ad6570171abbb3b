"""Frame preprocessing for real video backbones.

Frames are resized so the shortest side is 256 px, center-cropped to
224 x 224, then temporally adjusted: upsample duplicates every frame,
downsample keeps every other frame (rounding up), horizontal flips mirror
pixels. For optical-flow fields (H x W x 2), a horizontal flip also
negates the x component.
"""

from __future__ import annotations

from pathlib import Path

import cv2
import numpy as np

SHORT_SIDE = 256
CROP = 224

_FLIPPED = ("hflip", "hflip_upsample", "hflip_downsample")
_DOUBLED = ("upsample", "hflip_upsample")
_HALVED = ("downsample", "hflip_downsample")


def resize_shortest_side(frame: np.ndarray, short_side: int = SHORT_SIDE) -> np.ndarray:
    h, w = frame.shape[:2]
    scale = short_side / min(h, w)
    new_w = int(round(w * scale))
    new_h = int(round(h * scale))
    return cv2.resize(frame, (new_w, new_h), interpolation=cv2.INTER_LINEAR)


def center_crop(frame: np.ndarray, size: int = CROP) -> np.ndarray:
    h, w = frame.shape[:2]
    if h < size or w < size:
        raise ValueError(f"frame {h}x{w} too small to crop to {size}x{size}")
    top = (h - size) // 2
    left = (w - size) // 2
    return frame[top : top + size, left : left + size]


def temporal_adjust(frames: np.ndarray, augmentation: str) -> np.ndarray:
    if augmentation in _DOUBLED:
        return np.repeat(frames, 2, axis=0)
    if augmentation in _HALVED:
        return frames[::2]
    return frames


def preprocess_frames(frames: np.ndarray, augmentation: str, kind: str = "rgb") -> np.ndarray:
    """Resize, crop, temporally adjust, and flip a (T, H, W, C) frame array.

    `kind` is "rgb" for pixel frames and "flow" for 2-channel flow fields;
    flipping a flow field negates its horizontal component.
    """
    if frames.ndim != 4:
        raise ValueError(f"expected (T, H, W, C) frames, got shape {frames.shape}")
    if len(frames) == 0:
        raise ValueError("zero frames")
    out = np.stack([center_crop(resize_shortest_side(f)) for f in frames])
    out = temporal_adjust(out, augmentation)
    if augmentation in _FLIPPED:
        out = out[:, :, ::-1].copy()
        if kind == "flow":
            out[..., 0] = -out[..., 0]
    return out


def decode_video(path: str) -> np.ndarray:
    """Decode a video file into a (T, H, W, 3) uint8 array.

    `.npy` files load directly (frames stored as an array), anything else
    goes through OpenCV.
    """
    p = Path(path)
    if not p.exists():
        raise ValueError(f"video not found: {path}")
    if p.suffix == ".npy":
        frames = np.load(p)
        if frames.ndim != 4:
            raise ValueError(f"{path}: expected a (T, H, W, C) array, got {frames.shape}")
        return frames
    capture = cv2.VideoCapture(str(p))
    frames = []
    while True:
        ok, frame = capture.read()
        if not ok:
            break
        frames.append(cv2.cvtColor(frame, cv2.COLOR_BGR2RGB))
    capture.release()
    if not frames:
        raise ValueError(f"undecodable or empty video: {path}")
    return np.stack(frames)
