"""Line-synchronous request loop.

One JSON object per stdin line: {"video_path", "augmentation", "stream",
"dim", "output_path"}. Per request the feature file is written at
output_path in SGNF format and exactly one JSON reply line is emitted, in
request order. A bad request produces {"status": "error", "message"} and
the loop continues; the process never dies on malformed input.
"""

from __future__ import annotations

import json
import sys
from typing import IO

from . import sgnf
from .backbones import Backbone
from .mockfeat import AUGMENTATIONS

REQUIRED_KEYS = ("video_path", "augmentation", "stream", "dim", "output_path")


def handle_request(request: dict, backbone: Backbone) -> dict:
    missing = [k for k in REQUIRED_KEYS if k not in request]
    if missing:
        raise ValueError(f"request missing keys {missing}")
    if request["augmentation"] not in AUGMENTATIONS:
        raise ValueError(f"unknown augmentation {request['augmentation']!r}")
    if request["stream"] not in ("rgb", "flow"):
        raise ValueError(f"unknown stream {request['stream']!r}")
    dim = int(request["dim"])
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    values = backbone.extract(request)
    if values.shape[1] != dim:
        raise ValueError(f"backbone produced dim {values.shape[1]}, requested {dim}")
    sgnf.write(request["output_path"], request["stream"], values)
    return {
        "status": "ok",
        "video_path": request["video_path"],
        "augmentation": request["augmentation"],
        "stream": request["stream"],
        "dim": dim,
        "output_path": request["output_path"],
        "n_windows": int(values.shape[0]),
    }


def serve(backbone: Backbone, stdin: IO[str] = sys.stdin, stdout: IO[str] = sys.stdout) -> None:
    for line in stdin:
        if not line.strip():
            continue
        try:
            request = json.loads(line)
            if not isinstance(request, dict):
                raise ValueError("request must be a JSON object")
            reply = handle_request(request, backbone)
        except Exception as exc:  # noqa: BLE001 - the loop must survive anything
            reply = {"status": "error", "message": str(exc)}
        stdout.write(json.dumps(reply) + "\n")
        stdout.flush()
