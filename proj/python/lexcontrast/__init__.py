"""Thesaurus-based lexical contrast: opposites, contrast tiers and PMI."""

from ._lexcontrast import *  # noqa: F401,F403
from ._lexcontrast import (  # noqa: F401
    ComputationError,
    Error,
    IoError,
    ParseError,
    UsageError,
    ValidationError,
)

__version__ = "0.1.0"
