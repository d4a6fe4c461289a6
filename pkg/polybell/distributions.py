"""Random variables with exact rational moment sequences.

Each variant is an immutable, hashable record exposing ``raw_moment(n)``
(E[Y^n]) and a text form understood by :func:`parse_distribution`::

    point:c   bernoulli:p   poisson:a   gamma:a,b   discrete:v1:p1,v2:p2,...
"""
from collections import namedtuple
from fractions import Fraction

from .combinatorics import bell_poly, rising_factorial
from .error import InvalidDistribution, ParseError
from .utils import format_rational, parse_rational


class _Distribution:
    """Equality and hashing include the variant, so PointMass(1) and
    Poisson(1) never share a cache entry."""

    __slots__ = ()

    def __eq__(self, other):
        return type(self) is type(other) and tuple.__eq__(self, other)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((type(self).__name__, tuple(self)))


class PointMass(_Distribution, namedtuple('PointMass', ('c',))):
    """The constant random variable Y = c."""

    __slots__ = ()

    def __new__(cls, c):
        return super().__new__(cls, parse_rational(c))

    def raw_moment(self, n):
        return self.c ** n

    def __str__(self):
        return 'point:{}'.format(format_rational(self.c))


class Bernoulli(_Distribution, namedtuple('Bernoulli', ('p',))):
    """Indicator of a success with probability p."""

    __slots__ = ()

    def __new__(cls, p):
        p = parse_rational(p)
        if not 0 <= p <= 1:
            raise InvalidDistribution(
                'bernoulli probability must lie in [0, 1]: {}'.format(p))
        return super().__new__(cls, p)

    def raw_moment(self, n):
        return Fraction(1) if n == 0 else self.p

    def __str__(self):
        return 'bernoulli:{}'.format(format_rational(self.p))


class Poisson(_Distribution, namedtuple('Poisson', ('alpha',))):
    """Poisson variable with mean alpha; E[Y^n] is the Bell polynomial
    phi_n evaluated at alpha."""

    __slots__ = ()

    def __new__(cls, alpha):
        alpha = parse_rational(alpha)
        if alpha <= 0:
            raise InvalidDistribution(
                'poisson parameter must be positive: {}'.format(alpha))
        return super().__new__(cls, alpha)

    def raw_moment(self, n):
        return bell_poly(n)(self.alpha)

    def __str__(self):
        return 'poisson:{}'.format(format_rational(self.alpha))


class Gamma(_Distribution, namedtuple('Gamma', ('alpha', 'beta'))):
    """Gamma variable with shape alpha and rate beta;
    E[Y^n] = (alpha+n-1)_n / beta^n."""

    __slots__ = ()

    def __new__(cls, alpha, beta):
        alpha, beta = parse_rational(alpha), parse_rational(beta)
        if alpha <= 0 or beta <= 0:
            raise InvalidDistribution(
                'gamma parameters must be positive: {}, {}'.format(
                    alpha, beta))
        return super().__new__(cls, alpha, beta)

    def raw_moment(self, n):
        return rising_factorial(self.alpha, n) / self.beta ** n

    def __str__(self):
        return 'gamma:{},{}'.format(
            format_rational(self.alpha), format_rational(self.beta))


class FiniteDiscrete(_Distribution,
                     namedtuple('FiniteDiscrete', ('atoms',))):
    """Finitely supported variable, atoms is a tuple of (value, prob)."""

    __slots__ = ()

    def __new__(cls, atoms):
        atoms = tuple((parse_rational(v), parse_rational(p))
                      for v, p in atoms)
        if not atoms:
            raise InvalidDistribution('discrete distribution has no atoms')
        if any(p <= 0 for _, p in atoms):
            raise InvalidDistribution(
                'discrete probabilities must be positive')
        total = sum(p for _, p in atoms)
        if total != 1:
            raise InvalidDistribution(
                'discrete probabilities sum to {}, not 1'.format(total))
        return super().__new__(cls, atoms)

    def raw_moment(self, n):
        return sum((p * v ** n for v, p in self.atoms), Fraction(0))

    def __str__(self):
        return 'discrete:' + ','.join(
            '{}:{}'.format(format_rational(v), format_rational(p))
            for v, p in self.atoms)


def _split(body, count, text):
    parts = body.split(',')
    if len(parts) != count:
        raise ParseError('expected {} parameter(s) in {!r}'.format(
            count, text))
    return parts


def parse_distribution(text):
    """Parse the text form of a distribution.

    :arg str text: e.g. "bernoulli:2/5" or "discrete:1:1/2,2:1/2"
    :return: the distribution record
    """
    if not isinstance(text, str):
        return text
    name, sep, body = text.strip().partition(':')
    if not sep or not body:
        raise ParseError('malformed distribution: {!r}'.format(text))
    if name == 'point':
        return PointMass(*_split(body, 1, text))
    if name == 'bernoulli':
        return Bernoulli(*_split(body, 1, text))
    if name == 'poisson':
        return Poisson(*_split(body, 1, text))
    if name == 'gamma':
        return Gamma(*_split(body, 2, text))
    if name == 'discrete':
        atoms = []
        for atom in body.split(','):
            value, sep, prob = atom.partition(':')
            if not sep:
                raise ParseError('malformed atom {!r} in {!r}'.format(
                    atom, text))
            atoms.append((value, prob))
        return FiniteDiscrete(atoms)
    raise ParseError('unknown distribution: {!r}'.format(name))

