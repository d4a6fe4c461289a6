"""Falling factorials, Stirling and Lah triangles, Bell polynomials and the
degenerate exponential, logarithm and polyexponential series.

Every triangle is read off its exponential generating function
(f(t))^k / k!, so the classical and degenerate families share one code path
and the usual recurrences become properties to test.
"""
import logging
import threading
from collections import namedtuple
from fractions import Fraction
from math import factorial
from numbers import Rational

from cachetools import LRUCache, cached

from .error import NegativeIndex, UnknownKind
from .polynomial import Polynomial, ONE, X
from .series import (
    Series, egf_coeff, series_compose, series_geom, series_log1p)

logger = logging.getLogger(__name__)

CLASSICAL_1 = 'classical-1'
CLASSICAL_2 = 'classical-2'
DEGENERATE_1 = 'degenerate-1'
DEGENERATE_2 = 'degenerate-2'
LAH = 'lah'
KINDS = (CLASSICAL_1, CLASSICAL_2, DEGENERATE_1, DEGENERATE_2, LAH)

# Single-entry lookups share tables of at least this size.
TABLE_FLOOR = 12

"""A triangle of connection coefficients, values[n][k] for 0 <= k <= n."""
StirlingTriangle = namedtuple('StirlingTriangle', ('kind', 'lam', 'values'))

_lock = threading.RLock()


def _check_index(n):
    if n < 0:
        raise NegativeIndex('negative index: {}'.format(n))


def falling_factorial(x, n):
    """(x)_n = x(x-1)...(x-n+1) for a rational or a Polynomial x."""
    return deg_falling(x, n, 1)


def deg_falling(x, n, lam):
    """(x)_{n,lam} = x(x-lam)...(x-(n-1)lam); x**n at lam = 0."""
    _check_index(n)
    lam = Fraction(lam)
    result = Fraction(1) if isinstance(x, Rational) else ONE
    for i in range(n):
        result = result * (x - i * lam)
    return result


def rising_factorial(x, n):
    """x(x+1)...(x+n-1), written (x+n-1)_n."""
    _check_index(n)
    return falling_factorial(x + n - 1, n)


def deg_exp_series(x, lam, order):
    """e_lam^x(t) = sum_n (x)_{n,lam} t^n / n!, exp(x t) at lam = 0.

    :arg x: rational or Polynomial exponent
    :arg lam: degeneracy parameter
    :arg int order: truncation order
    """
    lam = Fraction(lam)
    term = Polynomial.lift(x) * 0 + 1
    coeffs = [term]
    for n in range(1, order + 1):
        term = term * (x - (n - 1) * lam) / n
        coeffs.append(term)
    return Series(coeffs, order)


def deg_log_series(lam, order):
    """log_lam(1+t) = ((1+t)^lam - 1) / lam, log(1+t) at lam = 0.

    The binomial coefficients C(lam, n) are expanded term by term, so any
    rational lam stays exact.
    """
    lam = Fraction(lam)
    if lam == 0:
        return series_log1p(1, order)
    coeffs = [Fraction(0)]
    binom = Fraction(1)
    for n in range(1, order + 1):
        binom = binom * (lam - (n - 1)) / n
        coeffs.append(binom / lam)
    return Series(coeffs, order)


def _generator(kind, lam, order):
    if kind == CLASSICAL_2:
        return deg_exp_series(1, 0, order) - 1
    if kind == DEGENERATE_2:
        return deg_exp_series(1, lam, order) - 1
    if kind == CLASSICAL_1:
        return series_log1p(1, order)
    if kind == DEGENERATE_1:
        return deg_log_series(lam, order)
    if kind == LAH:
        return series_geom(Series.variable(order)) - 1
    raise UnknownKind('unknown triangle kind: {!r}'.format(kind))


@cached(LRUCache(maxsize=512), lock=_lock)
def _stirling_table(kind, lam, n_max):
    logger.debug('building %s triangle, lambda=%s, n_max=%d',
                 kind, lam, n_max)
    f = _generator(kind, lam, n_max)
    values = [[None] * (n + 1) for n in range(n_max + 1)]
    power = Series.one(n_max)
    for k in range(n_max + 1):
        for n in range(k, n_max + 1):
            values[n][k] = egf_coeff(power, n)[0]
        power = power * f / (k + 1)
    return StirlingTriangle(kind, lam, tuple(tuple(row) for row in values))


def stirling_table(kind, lam, n_max):
    """Return the triangle values[n][k], 0 <= k <= n <= n_max.

    :arg str kind: one of classical-1, classical-2, degenerate-1,
        degenerate-2, lah
    :arg lam: degeneracy parameter, ignored by the classical kinds and lah
    :arg int n_max: largest row
    """
    if kind not in KINDS:
        raise UnknownKind('unknown triangle kind: {!r}'.format(kind))
    _check_index(n_max)
    lam = Fraction(lam) if kind in (DEGENERATE_1, DEGENERATE_2) else 0
    return _stirling_table(kind, lam, n_max)


def stirling(kind, n, k, lam=0):
    """Single entry of a triangle; zero outside 0 <= k <= n."""
    _check_index(n)
    _check_index(k)
    if k > n:
        return Fraction(0)
    size = max(TABLE_FLOOR, -(-n // 4) * 4)
    return stirling_table(kind, lam, size).values[n][k]


def polyexp_coeffs(k, lam, order):
    """Coefficients of Ei_{k,lam}: 0, then (1)_{m,lam} / ((m-1)! m^k)."""
    lam = Fraction(lam)
    coeffs = [Fraction(0)]
    for m in range(1, order + 1):
        coeffs.append(deg_falling(1, m, lam) /
                      (factorial(m - 1) * Fraction(m) ** k))
    return coeffs


def polyexp_apply(k, lam, u):
    """Ei_{k,lam}(u) for a series u with zero constant term; k may be any
    integer."""
    return series_compose(polyexp_coeffs(k, lam, u.order), u)


def bell_poly(n, lam=None):
    """Bell polynomial phi_n(x), or the degenerate phi_{n,lam}(x) when lam
    is given."""
    _check_index(n)
    if lam is None:
        row = [stirling(CLASSICAL_2, n, j) for j in range(n + 1)]
    else:
        row = [stirling(DEGENERATE_2, n, j, lam) for j in range(n + 1)]
    return Polynomial(row)


def bell_number(n, lam=None):
    return bell_poly(n, lam)(1)


@cached(LRUCache(maxsize=256), lock=_lock)
def _deg_poly_bell_row(k, lam, n_max):
    logger.debug('building degenerate poly-Bell row, k=%d, lambda=%s, '
                 'n_max=%d', k, lam, n_max)
    u = X * (deg_exp_series(1, lam, n_max) - 1)
    gf = polyexp_apply(k, lam, u)
    return (ONE,) + tuple(egf_coeff(gf, n) for n in range(1, n_max + 1))


def deg_poly_bell(k, lam, n):
    """Degenerate poly-Bell polynomial, the n-th EGF coefficient of
    Ei_{k,lam}(x(e_lam(t) - 1)), with the 0-th polynomial fixed to 1."""
    _check_index(n)
    return _deg_poly_bell_row(
        k, Fraction(lam), max(TABLE_FLOOR, -(-n // 4) * 4))[n]
