"""Command-line front end."""
from .app import build_parser, main
from .run_config import RunConfig

__all__ = ["build_parser", "main", "RunConfig"]
