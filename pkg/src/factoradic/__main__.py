"""Entry point for ``python -m factoradic``."""

from .cli import entry

entry()
