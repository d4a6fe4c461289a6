import re
from fractions import Fraction
from math import comb

from .error import ParseError


_RATIONAL_RE = re.compile(r'^(-?\d+)(?:/(\d+))?$')
_INT_RE = re.compile(r'^-?\d+$')


def parse_rational(text):
    """Parse a rational given as "p/q" or "p".

    Args:
        text: the string form, sign on the numerator only

    Returns the value as a Fraction in lowest terms.
    """
    if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
        return Fraction(text)
    match = _RATIONAL_RE.match(str(text).strip())
    if match is None:
        raise ParseError('malformed rational: {!r}'.format(text))
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ParseError('zero denominator: {!r}'.format(text))
    return Fraction(int(num), int(den) if den is not None else 1)


def parse_int(text):
    if isinstance(text, int) and not isinstance(text, bool):
        return text
    if _INT_RE.match(str(text).strip()) is None:
        raise ParseError('malformed integer: {!r}'.format(text))
    return int(text)


def format_rational(value):
    """Return "p" for integers and "p/q" otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


def format_rational_full(value):
    """Return "p/q" even for integers, e.g. "0/1"."""
    value = Fraction(value)
    return '{}/{}'.format(value.numerator, value.denominator)


def binomial(n, k):
    if k < 0 or k > n:
        return 0
    return comb(n, k)
