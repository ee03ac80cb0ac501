"""Exception hierarchy shared by every module.

The CLI reports ``type(exc).__name__`` on stderr, so class names are part of
the public interface.
"""


class TropicalError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class DivisionByTropicalZero(TropicalError):
    pass


class NegativeExponent(TropicalError):
    pass


class NonIntegerExponent(TropicalError):
    pass


class ExponentOutOfRange(TropicalError):
    pass


class SingleTerm(TropicalError):
    pass


class ZeroPolynomial(TropicalError):
    """Raised when an expression collapses to the tropical zero (all terms -inf)."""


class ExtendedNotSupported(TropicalError):
    pass


class OverlappingPrescription(TropicalError):
    pass


class InvalidPrescription(TropicalError):
    pass


class NotRational(TropicalError):
    pass


class EmptyInterval(TropicalError):
    pass


class EmptyCurve(TropicalError):
    pass


class DegenerateInY(TropicalError):
    pass


class UnsupportedFormat(TropicalError):
    pass


class MixedVariablesInDivision(TropicalError):
    pass


class BivariateDivisionUnsupported(TropicalError):
    pass


class NonRationalLiteral(TropicalError):
    pass


class SyntaxError(TropicalError):  # noqa: A001 - name is part of the CLI contract
    """Parse failure; ``offset`` is the byte offset into the source text."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
