"""
horospinors - Command-line entry point
Subcommands lambda, tetra, grassmann, svg and ford over spinor input documents
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from horospinors import __version__
from horospinors.commands import (
    cmd_ford,
    cmd_grassmann,
    cmd_lambda,
    cmd_svg,
    cmd_tetra,
    ford_report,
)
from horospinors.config import config
from horospinors.documents import InputDocument
from horospinors.errors import HorospinorsError, ParseError
from horospinors.polygons_grassmannians import Field
from horospinors.render import Window
from horospinors.utils import logger

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


# ---------- Argument parsing ----------
def _window(value: str) -> tuple[float, float, float, float]:
    parts = value.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected x_min,y_min,x_max,y_max")
    try:
        x_min, y_min, x_max, y_max = (float(p) for p in parts)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"cannot parse window {value!r}") from e
    return x_min, y_min, x_max, y_max


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per command"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, help="Identity-check tolerance (default 1e-9)")
    common.add_argument(
        "--format", choices=["json", "csv"], default=None, help="Report format (default json)"
    )
    common.add_argument("--input", help="Input JSON document (default: stdin)")
    common.add_argument(
        "--spinor",
        action="append",
        metavar="RE,IM,RE,IM",
        help="Inline spinor (xi, eta); repeat for several, replaces --input",
    )
    common.add_argument("--output", help="Write output to this file instead of stdout")
    common.add_argument("--config", help="Settings file of HOROSPINORS_* keys")
    common.add_argument("--log-level", choices=LOG_LEVELS, help="Logging level (default WARNING)")
    common.add_argument("--log-file", help="Also write log records to this file")

    render = argparse.ArgumentParser(add_help=False)
    render.add_argument("--width", type=int, help="SVG width in pixels")
    render.add_argument("--height", type=int, help="SVG height in pixels")
    render.add_argument(
        "--window",
        type=_window,
        metavar="X_MIN,Y_MIN,X_MAX,Y_MAX",
        help="Region of the upper half plane (default: padded bounding box)",
    )

    parser = argparse.ArgumentParser(
        prog="horospinors",
        description="Spinors, spin-decorated horospheres and complex lambda lengths",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("lambda", parents=[common], help="Lambda matrix and complex distances")
    sub.add_parser("tetra", parents=[common], help="Ptolemy residual and shape parameters")

    grassmann = sub.add_parser("grassmann", parents=[common], help="Plucker coordinates")
    field = grassmann.add_mutually_exclusive_group()
    field.add_argument(
        "--real", dest="field", action="store_const", const=Field.REAL, help="Real mode"
    )
    field.add_argument(
        "--complex", dest="field", action="store_const", const=Field.COMPLEX, help="Complex mode"
    )
    grassmann.set_defaults(field=Field.COMPLEX)

    sub.add_parser("svg", parents=[common, render], help="SVG of the decorated horocycles")

    ford = sub.add_parser("ford", parents=[common, render], help="Ford circles")
    ford.add_argument("--qmax", type=int, required=True, help="Largest denominator")

    return parser


# ---------- Setup ----------
def _configure(args: argparse.Namespace) -> None:
    config.reset()
    if args.config:
        if not Path(args.config).is_file():
            raise ParseError(f"settings file not found: {args.config}")
        try:
            applied = config.load_file(args.config)
        except ValueError as e:
            raise ParseError(f"bad value in {args.config}: {e}") from e
        logger.debug(f"Loaded settings from {args.config}: {applied}")
    config.update(tol=args.tol, log_level=args.log_level, log_file=args.log_file)

    try:
        logger.set_level(config.log_level)
    except ValueError as e:
        raise ParseError(f"unknown log level: {config.log_level}") from e
    if config.log_file:
        logger.attach_file(config.log_file)
    else:
        logger.detach_file()


def _read_input(args: argparse.Namespace) -> InputDocument:
    if args.spinor:
        return InputDocument.from_inline(args.spinor)

    if args.input and args.input != "-":
        try:
            text = Path(args.input).read_text(encoding="utf-8")
        except OSError as e:
            raise ParseError(f"cannot read {args.input}: {e}") from e
        except UnicodeDecodeError as e:
            raise ParseError(f"{args.input} is not UTF-8: {e}") from e
    else:
        try:
            text = sys.stdin.read()
        except UnicodeDecodeError as e:
            raise ParseError(f"standard input is not UTF-8: {e}") from e
    doc = InputDocument.from_json(text)

    # A tolerance on the command line wins over the document
    if doc.tol is not None and args.tol is None:
        config.update(tol=doc.tol)
    return doc


def _window_from(args: argparse.Namespace) -> Window | None:
    if args.window is None:
        return None
    return Window(*args.window)


# ---------- Dispatch ----------
def run(args: argparse.Namespace) -> str:
    """
    Execute a parsed command and return its output text.

    Raises:
        HorospinorsError: On invalid input or degenerate geometry
    """
    fmt = args.format or "json"

    if args.command == "ford":
        if args.format is not None:
            report = ford_report(args.qmax)
            return report.to_csv() if fmt == "csv" else report.to_json()
        return cmd_ford(args.qmax, args.width, args.height, _window_from(args))

    doc = _read_input(args)
    if args.command == "svg":
        return cmd_svg(doc, args.width, args.height, _window_from(args))

    if args.command == "lambda":
        report = cmd_lambda(doc)
    elif args.command == "tetra":
        report = cmd_tetra(doc)
    else:
        report = cmd_grassmann(doc, args.field)
    return report.to_csv() if fmt == "csv" else report.to_json()


def _write_output(text: str, path: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path:
        try:
            Path(path).write_text(text, encoding="utf-8")
        except OSError as e:
            raise ParseError(f"cannot write {path}: {e}") from e
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(text)


# ---------- Main entry point ----------
def main(argv: Sequence[str] | None = None) -> int:
    """
    Run the command line.

    Returns:
        0 on success, 2 for parse errors, 3 for degenerate geometry
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        _configure(args)
        logger.info(f"Running {args.command}")
        _write_output(run(args), args.output)
    except HorospinorsError as e:
        logger.console.print(
            f"error: {type(e).__name__}: {e}", markup=False, highlight=False, soft_wrap=True
        )
        logger.debug(f"{args.command} failed with exit code {e.exit_code}")
        return e.exit_code

    logger.info(f"Finished {args.command}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
