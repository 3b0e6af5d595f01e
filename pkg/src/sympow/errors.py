"""Exception hierarchy shared across the library.

The CLI maps these onto exit codes, so new failure modes should subclass
one of the existing categories rather than raising bare exceptions.
"""

from __future__ import annotations


class SympowError(Exception):
    """Base class for all library errors."""


class StructuralError(SympowError):
    """Malformed input: ring mismatches, bad shapes, unusable generators."""


class UnsupportedCharacteristicError(SympowError):
    """Operation requires characteristic zero."""


class HomogeneityError(SympowError):
    """Operation requires homogeneous input."""


class PreconditionError(SympowError):
    """A documented mathematical precondition does not hold."""


class WitnessError(PreconditionError):
    """Supplied witness polynomials fail a required containment."""


class ParseError(SympowError):
    """Session or expression text could not be parsed.

    Carries the 1-based source position of the offending token.
    """

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class ComputationTimeout(SympowError):
    """Cooperative deadline expired inside a long-running computation."""


class InternalError(SympowError):
    """An internal invariant was violated; indicates a bug."""
