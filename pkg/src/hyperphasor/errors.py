"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class HyperphasorError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HyperphasorError, ValueError):
    """An argument lies outside the domain of an operation."""


class Overflow(HyperphasorError, OverflowError):
    """A result does not fit in the double precision range."""


class LightlikeNotInvertible(DomainError, ZeroDivisionError):
    """Split-complex element on the light cone; it is a zero divisor."""


class NoConvergence(HyperphasorError, ArithmeticError):
    """A power series hit its term cap before the stopping rule fired."""


class UndefinedArgument(DomainError):
    """The principal argument of the origin is undefined."""


class FrequencyMismatch(DomainError):
    """Phasors with different frequencies cannot be added into one term."""


class ZeroSignal(DomainError):
    """The zero signal has no canonical single-term phase."""


class OutsideDerivationDomain(DomainError):
    """The split-complex polar construction needs ``a > |b|``."""


class InvalidMass(DomainError):
    """Oscillator mass must be strictly positive."""


class RangeError(DomainError):
    """Invalid sampling range or point count."""


class ParseError(HyperphasorError, ValueError):
    """Syntax error in an expression, with the offending offset."""

    def __init__(self, position: int, expected: str, found: str):
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(f"at offset {position}: expected {expected}, found {found}")


class LexError(ParseError):
    """Unknown character or identifier in the input."""
