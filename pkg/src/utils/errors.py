"""Exceptions raised across the toolkit.

The CLI maps each class onto an exit code (see src/cli/app.py).
"""


class ArithPermError(Exception):
    """Base class for every toolkit error"""


class InvalidArgumentError(ArithPermError, ValueError):
    """An argument violates an operation's precondition"""


class OutOfRangeError(ArithPermError, ValueError):
    """An argument lies outside a precomputed table"""


class ResourceLimitError(ArithPermError):
    """A computation was refused because it exceeds a configured ceiling"""


class ConstructionError(ArithPermError):
    """A block family violated disjointness or membership"""


class PrecisionError(ArithPermError):
    """A numeric self-check failed; the computed constant cannot be trusted"""
