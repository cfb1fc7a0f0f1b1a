"""
CLI package for hklab.

One subcommand per experiment; see ``python -m src.cli.hklab_cli --help``.
"""

from .hklab_cli import build_parser, main, run

__all__ = ["build_parser", "main", "run"]
