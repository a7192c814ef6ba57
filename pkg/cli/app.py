"""Command-line entry point."""
import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from config import APP_NAME, APP_VERSION, ENGINES, OBJECTIVES, STYLES
from core.errors import ArgumentError, InvariantError, ParseError, SearchSizeError
from .commands import cmd_kernel, cmd_render, cmd_solve, cmd_stats
from .run_config import RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SIZE = 2

COMMANDS = {
    "stats": cmd_stats,
    "solve": cmd_solve,
    "kernel": cmd_kernel,
    "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=APP_NAME.lower(),
        description="Exact 1-page and 2-page book crossing numbers of almost-trees.",
    )
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {APP_VERSION}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="edge-list file")
        p.add_argument("--json", dest="json_output", action="store_true", help="JSON output")
        return p

    add("stats", "n, m, a, k and 2-core sizes")

    for name, help_text in (("solve", "optimal layout"), ("kernel", "kernel dump per block"),
                            ("render", "sunburst SVG")):
        p = add(name, help_text)
        p.add_argument("--style", choices=STYLES, default="1page")
        p.add_argument("--objective", choices=OBJECTIVES, default="crossings")
        if name != "kernel":
            p.add_argument("--engine", choices=ENGINES, default="auto")
            p.add_argument("--budget", type=int, default=None, help="max explored configurations")
            p.add_argument("--threads", type=int, default=None, help="search worker processes")
            p.add_argument("--output", "-o", default=None, help="output path")
        if name == "render":
            p.add_argument("--layout", default=None, help="layout JSON from solve")
            p.add_argument("--solve", action="store_true", help="solve instead of reading a layout")
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand; returns the process exit code."""
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    values = {k: v for k, v in vars(args).items() if k != "verbose" and v is not None}

    try:
        config = RunConfig(**values)
        text = COMMANDS[config.command](config)
    except SearchSizeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SIZE
    except (ParseError, ArgumentError, OSError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantError:
        logger.exception("Internal invariant failed")
        raise

    if text:
        print(text)
    return EXIT_OK
