import io
import json

import numpy as np
import pytest

from signweave_bridge import sgnf
from signweave_bridge.backbones import MockBackbone, PluginBackbone, make_backbone, parse_mock_locator
from signweave_bridge.mockfeat import mock_windows, unit_vector, window_count
from signweave_bridge.server import handle_request, serve


def request_for(tmp_path, name="r", aug="identity", stream="rgb", dim=16, frames=25):
    return {
        "video_path": f"mock://noun1/i1/noun1-i1?frames={frames}",
        "augmentation": aug,
        "stream": stream,
        "dim": dim,
        "output_path": str(tmp_path / f"{name}.sgnf"),
    }


def run_serve(lines, backbone=None):
    stdin = io.StringIO("".join(json.dumps(l) + "\n" if isinstance(l, dict) else l for l in lines))
    stdout = io.StringIO()
    serve(backbone or MockBackbone(), stdin, stdout)
    return [json.loads(line) for line in stdout.getvalue().splitlines()]


def test_well_formed_request_writes_matching_file(tmp_path):
    req = request_for(tmp_path)
    (reply,) = run_serve([req])
    assert reply["status"] == "ok"
    assert reply["n_windows"] == 3
    stream, values = sgnf.read(req["output_path"])
    assert stream == "rgb"
    assert values.shape == (3, 16)
    assert values.dtype == np.float32


@pytest.mark.parametrize("frames,aug,expected", [(25, "identity", 3), (25, "upsample", 5), (7, "downsample", 1)])
def test_window_rule_shared(tmp_path, frames, aug, expected):
    req = request_for(tmp_path, aug=aug, frames=frames)
    (reply,) = run_serve([req])
    assert reply["n_windows"] == expected == window_count(frames, aug)


def test_malformed_line_then_next_request_still_served(tmp_path):
    good = request_for(tmp_path)
    replies = run_serve(["{broken json\n", good])
    assert replies[0]["status"] == "error"
    assert replies[1]["status"] == "ok"


def test_replies_in_request_order(tmp_path):
    reqs = [request_for(tmp_path, name=f"r{i}", frames=10 + i * 10) for i in range(4)]
    replies = run_serve(reqs)
    assert [r["video_path"] for r in replies] == [q["video_path"] for q in reqs]
    assert [r["n_windows"] for r in replies] == [1, 2, 3, 4]


@pytest.mark.parametrize(
    "mutate,message",
    [
        (lambda r: r.pop("dim"), "missing keys"),
        (lambda r: r.update(augmentation="blur"), "unknown augmentation"),
        (lambda r: r.update(stream="depth"), "unknown stream"),
        (lambda r: r.update(video_path="mock://broken"), "mock locator"),
        (lambda r: r.update(video_path="/no/such/file.mp4"), "not a mock"),
    ],
)
def test_bad_requests_get_error_replies(tmp_path, mutate, message):
    req = request_for(tmp_path)
    mutate(req)
    (reply,) = run_serve([req])
    assert reply["status"] == "error"
    assert message in reply["message"]


def test_parse_mock_locator():
    assert parse_mock_locator("mock://s1/i2/c3?frames=40") == ("s1", "i2", "c3", 40)
    with pytest.raises(ValueError):
        parse_mock_locator("file:///tmp/x.mp4")


def test_mock_windows_deterministic():
    a = mock_windows("s", "i", "c", 25, "identity", 32)
    b = mock_windows("s", "i", "c", 25, "identity", 32)
    assert a.tobytes() == b.tobytes()
    norms = np.linalg.norm(a.astype(np.float64), axis=1)
    np.testing.assert_allclose(norms, 1.0, atol=1e-6)


def test_unit_vector_unit_norm():
    v = unit_vector("anything", 64)
    assert abs(float(np.dot(v, v)) - 1.0) < 1e-12


def mean_projection_plugin(window, stream):
    """Test plugin: per-channel means projected through a fixed matrix."""
    pooled = window.astype(np.float64).mean(axis=(0, 1, 2))
    rng = np.random.default_rng(0 if stream == "rgb" else 1)
    basis = rng.standard_normal((pooled.size, 8))
    return (pooled @ basis).astype(np.float32)


def test_plugin_backbone_on_npy_video(tmp_path):
    frames = np.zeros((12, 300, 320, 3), dtype=np.uint8)
    frames[..., 0] = 120
    path = tmp_path / "clip.npy"
    np.save(path, frames)
    backbone = PluginBackbone(mean_projection_plugin)
    req = {
        "video_path": str(path),
        "augmentation": "upsample",
        "stream": "rgb",
        "dim": 8,
        "output_path": str(tmp_path / "out.sgnf"),
    }
    reply = handle_request(req, backbone)
    assert reply["n_windows"] == 3  # 24 adjusted frames
    _, values = sgnf.read(req["output_path"])
    assert values.shape == (3, 8)


def test_make_backbone_selection():
    assert isinstance(make_backbone("mock"), MockBackbone)
    loaded = make_backbone(f"plugin:{__name__}:mean_projection_plugin")
    assert isinstance(loaded, PluginBackbone)
    with pytest.raises(ValueError, match="unknown backbone"):
        make_backbone("builtin-cnn")
