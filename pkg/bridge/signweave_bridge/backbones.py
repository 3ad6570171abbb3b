"""Feature backbones.

``mock`` reproduces the pipeline's hash-derived embedding from the clip
identity carried in a ``mock://sign/interpreter/clip?frames=N`` locator,
touching no pixels. ``plugin:module:function`` decodes and preprocesses
the video, slices it into padded 10-frame windows, and calls the named
function as fn(window_frames, stream) -> 1-D feature vector; this is the
hook for a real convolutional backbone, whose checkpoint is deployment
configuration rather than something this package ships.
"""

from __future__ import annotations

import importlib
from typing import Callable, Protocol
from urllib.parse import parse_qs, urlparse

import numpy as np

from .mockfeat import WINDOW_SIZE, mock_windows, window_count


class Backbone(Protocol):
    def extract(self, request: dict) -> np.ndarray:
        """Return the (n_windows, dim) float32 feature matrix for a request."""
        ...


def parse_mock_locator(video_path: str) -> tuple[str, str, str, int]:
    url = urlparse(video_path)
    if url.scheme != "mock":
        raise ValueError(f"not a mock:// locator: {video_path!r}")
    parts = url.path.lstrip("/").split("/")
    if not url.netloc or len(parts) != 2:
        raise ValueError(f"mock locator must be mock://sign/interpreter/clip, got {video_path!r}")
    frames = parse_qs(url.query).get("frames")
    if not frames:
        raise ValueError(f"mock locator missing ?frames=N: {video_path!r}")
    return url.netloc, parts[0], parts[1], int(frames[0])


class MockBackbone:
    def extract(self, request: dict) -> np.ndarray:
        sign_id, interpreter_id, clip_id, frame_count = parse_mock_locator(request["video_path"])
        return mock_windows(
            sign_id,
            interpreter_id,
            clip_id,
            frame_count,
            request["augmentation"],
            int(request["dim"]),
        )


def _windows_of(frames: np.ndarray) -> list[np.ndarray]:
    """Non-overlapping 10-frame windows, last one padded by repeating the final frame."""
    out = []
    for start in range(0, len(frames), WINDOW_SIZE):
        window = frames[start : start + WINDOW_SIZE]
        if len(window) < WINDOW_SIZE:
            pad = np.repeat(window[-1:], WINDOW_SIZE - len(window), axis=0)
            window = np.concatenate([window, pad], axis=0)
        out.append(window)
    return out


class PluginBackbone:
    def __init__(self, fn: Callable[[np.ndarray, str], np.ndarray]):
        self.fn = fn

    @classmethod
    def load(cls, spec: str) -> "PluginBackbone":
        module_name, _, attr = spec.partition(":")
        if not attr:
            raise ValueError(f"plugin spec must be module:function, got {spec!r}")
        module = importlib.import_module(module_name)
        return cls(getattr(module, attr))

    def extract(self, request: dict) -> np.ndarray:
        from .preprocess import decode_video, preprocess_frames

        raw = decode_video(request["video_path"])
        frames = preprocess_frames(raw, request["augmentation"])
        dim = int(request["dim"])
        rows = []
        for window in _windows_of(frames):
            vec = np.asarray(self.fn(window, request["stream"]), dtype=np.float32)
            if vec.shape != (dim,):
                raise ValueError(f"plugin returned shape {vec.shape}, expected ({dim},)")
            rows.append(vec)
        if len(rows) != window_count(len(raw), request["augmentation"]):
            raise ValueError(
                f"produced {len(rows)} windows for {len(raw)} raw frames under "
                f"{request['augmentation']}"
            )
        return np.stack(rows)


def make_backbone(name: str) -> Backbone:
    if name == "mock":
        return MockBackbone()
    if name.startswith("plugin:"):
        return PluginBackbone.load(name[len("plugin:") :])
    raise ValueError(f"unknown backbone {name!r}; use 'mock' or 'plugin:module:function'")
