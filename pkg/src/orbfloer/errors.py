"""Exception types shared across the package."""

from __future__ import annotations


class OrbfloerError(Exception):
    """Base class for all package-specific errors."""


class IncompatibleIdempotents(OrbfloerError):
    """An edge or operation violates the idempotent sandwich condition."""


class UnknownGenerator(OrbfloerError):
    """A referenced generator is not part of the structure."""


class InvalidOrder(OrbfloerError):
    """An orbifold order or structure size parameter is not a positive integer."""


class InvalidStructure(OrbfloerError):
    """A structure fails its defining structure equation."""


class NotAComplex(OrbfloerError):
    """The boundary map does not square to zero."""


class NoBoundednessWitness(OrbfloerError):
    """A tensor product cannot be formed without a boundedness certificate.

    Cannot occur for the finite tables this package constructs; reserved
    for streaming or externally supplied inputs.
    """


class GenerationFailed(OrbfloerError):
    """Random structure generation exhausted its retry budget."""


class ParseError(OrbfloerError):
    """A structure file violates the text grammar."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DuplicateGenerator(ParseError):
    """The same generator name is declared twice."""


class UnknownToken(ParseError):
    """A token is not a known label, idempotent, or keyword."""


__all__ = [
    "DuplicateGenerator",
    "GenerationFailed",
    "IncompatibleIdempotents",
    "InvalidOrder",
    "InvalidStructure",
    "NoBoundednessWitness",
    "NotAComplex",
    "OrbfloerError",
    "ParseError",
    "UnknownGenerator",
    "UnknownToken",
]
