import argparse
import sys

from .backbones import make_backbone
from .server import serve


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="signweave-bridge",
        description="Feature extraction service: JSON requests on stdin, SGNF files on disk.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sp = sub.add_parser("serve", help="serve requests from stdin until EOF")
    sp.add_argument(
        "--backbone",
        default="mock",
        help="'mock' or 'plugin:module:function' (default: mock)",
    )
    args = parser.parse_args(argv)
    try:
        backbone = make_backbone(args.backbone)
    except (ValueError, ImportError, AttributeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    serve(backbone)
    return 0


if __name__ == "__main__":
    sys.exit(main())
