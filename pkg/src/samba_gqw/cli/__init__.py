"""Command-line interface for samba_gqw."""

from samba_gqw.cli.main import build_parser, main
from samba_gqw.cli.models import RunConfig

__all__ = ["RunConfig", "build_parser", "main"]
