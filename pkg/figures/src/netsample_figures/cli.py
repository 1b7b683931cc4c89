"""Command-line entry point: render benchmark CSV output to image files."""

from __future__ import annotations

import argparse
import sys

from .io import SchemaError
from .render import KINDS, FigureSpec, render

EXIT_OK = 0
EXIT_ERROR = 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netsample-render",
        description="Render sampling-benchmark CSV files as PNG/SVG figure pairs.",
    )
    parser.add_argument(
        "kind",
        choices=KINDS,
        help="figure family (clt_histogram takes both the raw and the summary CSV)",
    )
    parser.add_argument(
        "--input",
        nargs="+",
        required=True,
        metavar="CSV",
        help="input CSV file(s) in the harness schemas",
    )
    parser.add_argument(
        "--out",
        required=True,
        metavar="PATH",
        help="output image path; .png and .svg siblings are written",
    )
    parser.add_argument(
        "--no-reference",
        action="store_true",
        help="skip the original-network reference line",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR
    try:
        spec = FigureSpec(
            kind=args.kind,
            inputs=tuple(args.input),
            out=args.out,
            reference=not args.no_reference,
        )
        png, svg = render(spec)
    except (SchemaError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(png)
    print(svg)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
