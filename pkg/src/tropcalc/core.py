"""Scalar arithmetic of the max-plus semiring T = Q u {-inf}.

Finite scalars are plain :class:`fractions.Fraction` values.  The tropical
zero is the singleton :data:`NEG_INF`, which orders below every rational so
that the builtin ``max`` is tropical addition.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Union

from .errors import DivisionByTropicalZero, NegativeExponent


@total_ordering
class NegInfType:
    """The tropical zero.  Use the module-level :data:`NEG_INF` instance."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INF"

    def __str__(self):
        return "ninf"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("tropcalc.NEG_INF")

    def __reduce__(self):
        return (NegInfType, ())


NEG_INF = NegInfType()

TropScalar = Union[Fraction, NegInfType]

ZERO = NEG_INF  # additive identity 0_T
ONE = Fraction(0)  # multiplicative identity 1_T


def scalar(value) -> TropScalar:
    """Coerce ints, Fractions, decimal strings, ``'p/q'`` or ``'ninf'`` to a scalar."""
    if value is NEG_INF:
        return NEG_INF
    if isinstance(value, str):
        text = value.strip()
        if text in ("ninf", "-inf"):
            return NEG_INF
        return Fraction(text)
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact scalars; pass a string or Fraction")
    raise TypeError(f"cannot convert {value!r} to a tropical scalar")


def is_neg_inf(a) -> bool:
    return a is NEG_INF


def trop_add(a: TropScalar, b: TropScalar) -> TropScalar:
    return a if b < a else b


def trop_mul(a: TropScalar, b: TropScalar) -> TropScalar:
    if a is NEG_INF or b is NEG_INF:
        return NEG_INF
    return a + b


def trop_div(a: TropScalar, b: TropScalar) -> TropScalar:
    if b is NEG_INF:
        raise DivisionByTropicalZero("division by the tropical zero (-inf)")
    if a is NEG_INF:
        return NEG_INF
    return a - b


def trop_pow(a: TropScalar, k) -> TropScalar:
    """``a`` to the tropical power ``k`` (classically ``k*a``); ``k`` must be >= 0."""
    k = Fraction(k)
    if k < 0:
        raise NegativeExponent(f"negative exponent {k}")
    if k == 0:
        return ONE
    if a is NEG_INF:
        return NEG_INF
    return k * a


def trop_sum(values) -> TropScalar:
    """Tropical sum of an iterable; empty sum is the tropical zero."""
    out = NEG_INF
    for v in values:
        out = trop_add(out, v)
    return out


def format_scalar(a: TropScalar) -> str:
    """Textual form used by serializers: ``ninf``, ``p`` or ``p/q``."""
    if a is NEG_INF:
        return "ninf"
    return str(Fraction(a))
