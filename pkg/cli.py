"""
Command-line front end.

    python cli.py classify --input triangle.json
    python cli.py figure incircle --output incircle.svg
    python cli.py verify --box 4 --seed 7

Exit status: 0 success, 1 property violations (verify), 2 usage or input error.
"""

import argparse
import logging
import sys
from fractions import Fraction
from typing import List, Optional

from services.app_logic import COMMANDS, figure_command, render_text, verify_command
from services.config import get_settings
from services.documents import dump_document, load_document
from services.errors import TaxicabError
from services.figures import BUILTIN_SCENES
from services.verify import SweepConfig

logger = logging.getLogger("taxicab")

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2


def _add_io_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", default="-", help="Input JSON document (default: stdin).")
    parser.add_argument("--output", default="-", help="Output file (default: stdout).")
    parser.add_argument("--format", choices=["json", "text"], default="json", help="Output format.")


def _rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="taxicab",
        description="Exact taxicab triangle geometry: classification, circumcircles, incircles, figures.",
    )
    parser.add_argument("--log-level", default=settings.log_level, help="Logging level (stderr).")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in [
        ("classify", "Classify a triangle's angles as inscribed."),
        ("circumcircle", "Find every circumcircle of a triangle."),
        ("incircle", "Find the incircle of a triangle and run the arc-length construction."),
        ("angle", "Measure and classify an angle, or compare inscribed and central angles."),
    ]:
        _add_io_flags(sub.add_parser(name, help=help_text))

    figure = sub.add_parser("figure", help="Render a built-in figure or a scene file as SVG.")
    figure.add_argument("name", nargs="?", help=f"Built-in figure: {', '.join(sorted(BUILTIN_SCENES))}.")
    figure.add_argument("--scene", help="Scene JSON file to render instead of a built-in figure.")
    figure.add_argument("--output", default="-", help="Output SVG file (default: stdout).")

    verify = sub.add_parser("verify", help="Run the geometric property suite.")
    verify.add_argument("--box", type=int, default=4, help="Vertices range over [box-min, box]².")
    verify.add_argument("--box-min", type=int, default=0)
    verify.add_argument("--trials", type=int, default=settings.trials, help="Random rational triangles.")
    verify.add_argument("--seed", type=int, default=settings.seed)
    verify.add_argument("--denominator", type=int, default=settings.denominator_limit,
                        help="Largest denominator of random coordinates.")
    verify.add_argument("--oracle-box", type=int, default=settings.oracle_box,
                        help="Largest |coordinate| cross-checked by the circumcircle grid oracle.")
    verify.add_argument("--resolution", type=_rational, default=settings.incircle_resolution,
                        help="Grid step of the incircle oracle.")
    verify.add_argument("--no-fixtures", action="store_true", help="Skip the worked-example triangles.")
    verify.add_argument("--timings", action="store_true", help="Include elapsed times in the report.")
    verify.add_argument("--workers", type=int, default=settings.workers,
                        help="Worker processes (0: one per CPU).")
    verify.add_argument("--report-dir", default=settings.report_dir)
    verify.add_argument("--output", default="-", help="Also write the report here (default: stdout).")
    verify.add_argument("--format", choices=["json", "text"], default="text")
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


def _write_output(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)


def run(args: argparse.Namespace) -> int:
    if args.command in COMMANDS:
        doc = COMMANDS[args.command](load_document(_read_input(args.input)))
        text = dump_document(doc) if args.format == "json" else render_text(args.command, doc)
        _write_output(args.output, text)
        return EXIT_OK

    if args.command == "figure":
        if not args.name and not args.scene:
            raise TaxicabError("figure needs a built-in name or --scene")
        _write_output(args.output, figure_command(args.name, args.scene))
        return EXIT_OK

    cfg = SweepConfig(
        box_min=args.box_min,
        box_max=args.box,
        denominator_limit=args.denominator,
        trials=args.trials,
        seed=args.seed,
        oracle_box=args.oracle_box,
        incircle_resolution=args.resolution,
        include_fixtures=not args.no_fixtures,
        timings=args.timings,
        workers=args.workers,
    )
    report, _ = verify_command(cfg, args.report_dir)
    text = dump_document(report.to_document()) if args.format == "json" else report.to_text()
    _write_output(args.output, text)
    return EXIT_OK if report.ok else EXIT_VIOLATIONS


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.INFO),
        format="%(message)s",
        stream=sys.stderr,
    )
    try:
        return run(args)
    except (TaxicabError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
