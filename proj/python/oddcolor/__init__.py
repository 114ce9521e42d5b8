"""Certifying clustered coloring for graphs without odd K_t minors."""

from ._core import (
    EXIT_CERTIFICATE,
    EXIT_COLORED,
    EXIT_REJECTED,
    EXIT_USAGE,
    FormatError,
    GraphError,
    PreconditionError,
    color,
    decompose,
    gnp,
    has_odd_minor,
    verify,
)

__all__ = [
    "EXIT_CERTIFICATE",
    "EXIT_COLORED",
    "EXIT_REJECTED",
    "EXIT_USAGE",
    "FormatError",
    "GraphError",
    "PreconditionError",
    "color",
    "decompose",
    "gnp",
    "has_odd_minor",
    "verify",
]
