"""Command-line front end."""

from .commands import HANDLERS
from .parser import CommandParser, build_parser
from .renderers import OutputFormat, render
from .validators import LambdaParser, resolve_field

__all__ = [
    "HANDLERS",
    "CommandParser",
    "build_parser",
    "OutputFormat",
    "render",
    "LambdaParser",
    "resolve_field",
]
