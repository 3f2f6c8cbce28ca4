"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "DegreeUndefinedError",
    "MorphismValidationError",
    "PairDocumentError",
    "ParseError",
    "UnsupportedPairError",
]


class DegreeUndefinedError(ValueError):
    """Raised when a degree is requested for the zero multivector."""


class UnsupportedPairError(ValueError):
    """Raised when an operation is defined only for trivial-scalar pairs."""


class MorphismValidationError(ValueError):
    """Raised when an operation requires a validated pair morphism."""


class PairDocumentError(ValueError):
    """Raised when a pair or morphism document cannot be loaded."""


class ParseError(ValueError):
    """Expression syntax or symbol-resolution error with a source position."""

    def __init__(self, position: int, message: str):
        super().__init__(f"at position {position}: {message}")
        self.position = position
        self.message = message
