from fractions import Fraction
from itertools import zip_longest
from numbers import Rational

from .utils import format_rational


class Polynomial:
    """Dense polynomial in the indeterminate x with exact rational
    coefficients.

    Coefficients are stored lowest degree first with trailing zeros trimmed,
    so the zero polynomial has no coefficients and degree -1. Instances are
    immutable and hashable.
    """

    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def _trimmed(cls, coeffs):
        poly = cls.__new__(cls)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        poly.coeffs = tuple(coeffs)
        return poly

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @staticmethod
    def lift(value):
        """Promote a rational scalar to a constant polynomial."""
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, Rational):
            return Polynomial.constant(value)
        raise TypeError('cannot lift {!r} to a polynomial'.format(value))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self[0])
        return hash(self.coeffs)

    def __neg__(self):
        return Polynomial._trimmed([-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, Rational):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return Polynomial._trimmed([
            a + b for a, b in zip_longest(
                self.coeffs, other.coeffs, fillvalue=0)
        ])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Rational):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return Polynomial._trimmed([
            a - b for a, b in zip_longest(
                self.coeffs, other.coeffs, fillvalue=0)
        ])

    def __rsub__(self, other):
        if not isinstance(other, Rational):
            return NotImplemented
        return Polynomial.constant(other) - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                return ZERO
            return Polynomial._trimmed([c * other for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        result = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                result[i + j] += a * b
        return Polynomial._trimmed(result)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Rational):
            return NotImplemented
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, value):
        """Evaluate at a rational or substitute a polynomial (Horner)."""
        result = Fraction(0) if isinstance(value, Rational) else ZERO
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def to_strings(self, width=None):
        """Serialize as rational strings, lowest degree first.

        :arg int width: pad with "0" up to this many entries
        """
        coeffs = list(self.coeffs) or [Fraction(0)]
        if width is not None:
            coeffs += [Fraction(0)] * (width - len(coeffs))
        return [format_rational(c) for c in coeffs]

    def __repr__(self):
        return 'Polynomial([{}])'.format(', '.join(self.to_strings()))

    def __str__(self):
        if not self.coeffs:
            return '0'
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = '' if i == 0 else ('x' if i == 1 else 'x^{}'.format(i))
            if i == 0:
                terms.append(format_rational(c))
            elif c == 1:
                terms.append(power)
            elif c == -1:
                terms.append('-' + power)
            else:
                terms.append('{}*{}'.format(format_rational(c), power))
        return ' + '.join(terms).replace('+ -', '- ')


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))
