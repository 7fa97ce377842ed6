"""
Exception hierarchy for the fiber-full engine.

Input problems (bad files, bad fields, bad windows) derive from ``InputError`` and map to
exit code 1 in the CLI. Failed internal consistency checks derive from ``InvariantViolation``
and map to exit code 2.
"""

from typing import Optional


class FiberFullError(Exception):
    """Base class for all engine errors."""


class InputError(FiberFullError, ValueError):
    """Invalid user input."""


class ParseError(InputError):
    """Syntax error in an ideal or family file."""

    def __init__(self, reason: str, path: Optional[str] = None, line: Optional[int] = None):
        self.reason = reason
        self.path = path
        self.line = line
        location = ""
        if path is not None:
            location = f"{path}:{line}: " if line is not None else f"{path}: "
        elif line is not None:
            location = f"line {line}: "
        super().__init__(f"{location}{reason}")


class FieldMismatchError(InputError):
    """Unsupported field or a conflict between declared fields."""


class WindowError(InputError):
    """Empty or disjoint degree windows."""


class InvariantViolation(FiberFullError, RuntimeError):
    """An internal consistency check failed."""


class ExponentOverflowError(InvariantViolation, OverflowError):
    """A monomial exponent left the machine-width range."""


class TheoremFalsification(InvariantViolation):
    """A theorem-backed equality failed on an instance satisfying its hypotheses."""
