"""Truncated power series in t with polynomial coefficients.

Every generating function of the package is a :class:`Series`: the
coefficient of t^n is a :class:`~polybell.polynomial.Polynomial` in x, and
scalar series simply carry constant polynomials. Binary operations truncate
to the smaller of the two orders.
"""
from fractions import Fraction
from itertools import islice, repeat
from math import factorial
from numbers import Rational

from .error import NonzeroConstantTerm, OrderExceeded
from .polynomial import Polynomial, ZERO, ONE


class Series:
    """Formal power series truncated at order N (coefficients t^0 .. t^N)."""

    __slots__ = ('order', 'coeffs')

    def __init__(self, coeffs, order=None):
        """Create a series from its ordinary coefficients.

        :arg coeffs: iterable of Polynomial or rational values, coeffs[n] is
            the coefficient of t^n
        :arg int order: truncation order; missing coefficients are zero and
            extra ones are dropped. Defaults to len(coeffs) - 1.
        """
        coeffs = [Polynomial.lift(c) for c in coeffs]
        if order is None:
            order = max(len(coeffs) - 1, 0)
        if order < 0:
            raise ValueError('negative truncation order: {}'.format(order))
        coeffs = coeffs[:order + 1]
        coeffs += [ZERO] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def _raw(cls, coeffs, order):
        series = cls.__new__(cls)
        series.order = order
        series.coeffs = tuple(coeffs)
        return series

    @classmethod
    def zero(cls, order):
        return cls._raw([ZERO] * (order + 1), order)

    @classmethod
    def one(cls, order):
        return cls([ONE], order)

    @classmethod
    def variable(cls, order):
        """The series t."""
        return cls([0, 1], order)

    @classmethod
    def from_egf(cls, values, order):
        """Build a series from exponential coefficients, c_n = values[n]."""
        return cls([Polynomial.lift(v) / factorial(n)
                    for n, v in enumerate(islice(values, order + 1))], order)

    def truncate(self, order):
        if order > self.order:
            raise OrderExceeded(
                'cannot raise truncation order {} to {}'.format(
                    self.order, order))
        return Series._raw(self.coeffs[:order + 1], order)

    def shift(self, j):
        """Multiply by t^j, keeping the order."""
        return Series([ZERO] * j + list(self.coeffs), self.order)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __neg__(self):
        return Series._raw([-c for c in self.coeffs], self.order)

    def __add__(self, other):
        if isinstance(other, (Rational, Polynomial)):
            other = Series([other], self.order)
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        return Series._raw([a + b for a, b in zip(
            self.coeffs[:order + 1], other.coeffs)], order)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (Rational, Polynomial)):
            other = Series([other], self.order)
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_mul(self, other)
        if isinstance(other, (Rational, Polynomial)):
            return Series._raw([c * other for c in self.coeffs], self.order)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Rational):
            return NotImplemented
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, m):
        return series_pow(self, m)

    def __repr__(self):
        return 'Series(order={}, coeffs=[{}])'.format(
            self.order, ', '.join(str(c) for c in self.coeffs))


def series_mul(a, b):
    """Cauchy product truncated at min(a.order, b.order)."""
    order = min(a.order, b.order)
    lhs = [(i, c) for i, c in enumerate(a.coeffs[:order + 1]) if c]
    rhs = [(j, c) for j, c in enumerate(b.coeffs[:order + 1]) if c]
    result = [ZERO] * (order + 1)
    for i, ca in lhs:
        for j, cb in rhs:
            if i + j > order:
                break
            result[i + j] = result[i + j] + ca * cb
    return Series._raw(result, order)


def series_pow(a, m):
    """Return a^m by repeated squaring, truncated at a.order."""
    if m < 0:
        raise ValueError('negative exponent: {}'.format(m))
    result, base = Series.one(a.order), a
    while m:
        if m & 1:
            result = series_mul(result, base)
        m >>= 1
        if m:
            base = series_mul(base, base)
    return result


def series_compose(outer, inner):
    """Substitute inner into the power series with coefficients outer.

    Args:
        outer: iterable of coefficients c_0, c_1, ... (rational or
            Polynomial); only the first inner.order + 1 are read, so infinite
            iterators are accepted and short sequences are zero-padded
        inner: Series with zero constant term

    Returns sum_m c_m * inner^m truncated at inner.order, accumulated by
    Horner's rule.
    """
    if inner.coeffs[0]:
        raise NonzeroConstantTerm(
            'inner series has constant term {}'.format(inner.coeffs[0]))
    order = inner.order
    outer = list(islice(outer, order + 1))
    result = Series.zero(order)
    for c in reversed(outer):
        result = series_mul(result, inner) + c
    return result


def series_exp(a):
    return series_compose(
        (Fraction(1, factorial(m)) for m in range(a.order + 1)), a)


def series_log1p(scale, order):
    """log(1 + scale*t) = sum_{n>=1} (-1)^(n-1) scale^n t^n / n."""
    scale = Fraction(scale)
    coeffs = [0] + [(-1) ** (n - 1) * scale ** n / n
                    for n in range(1, order + 1)]
    return Series(coeffs, order)


def series_geom(u):
    """1 / (1 - u) for u with zero constant term."""
    return series_compose(repeat(1), u)


def egf_coeff(s, n):
    """n! times the coefficient of t^n."""
    if n < 0 or n > s.order:
        raise OrderExceeded(
            'coefficient {} requested from a series of order {}'.format(
                n, s.order))
    return s.coeffs[n] * factorial(n)
