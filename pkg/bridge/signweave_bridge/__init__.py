"""Out-of-process feature extractor for the clip-concatenation pipeline.

Speaks one JSON request per stdin line, writes bit-exact SGNF feature
files, and replies one JSON line per request in order. Backbones are
pluggable; the built-in mock backbone reproduces the pipeline's hash-based
embedding bit for bit, which lets the two processes be cross-checked
without any model weights.
"""

__version__ = "0.1.0"
