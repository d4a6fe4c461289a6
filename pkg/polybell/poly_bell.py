"""Probabilistic degenerate poly-Bell polynomials Bel_{n,lam}^{(k,Y)}(x).

The polynomials are the EGF coefficients of
Ei_{k,lam}(x (E[e_lam^Y(t)] - 1)), with Bel_0 = 1. Three independent
routes compute them:

    * closed: sum_l (1)_{l,lam} / l^(k-1) {n l}_{Y,lam} x^l
    * gf: expand the generating function directly
    * sm: sum_l (1)_{l,lam} / ((l-1)! l^k)
          sum_m C(l,m) (-1)^(l-m) E[(S_m)_{n,lam}] x^l

Each route builds a whole row n = 0..n_max per (Y, lam, k), and single
queries index into the cached row.
"""
import logging
import threading
from collections import namedtuple
from fractions import Fraction
from math import factorial

from cachetools import LRUCache, cached

from .combinatorics import deg_falling, polyexp_apply
from .distributions import parse_distribution
from .error import NegativeIndex
from .polynomial import Polynomial, ONE, X
from .probabilistic import (
    deg_mgf_series, prob_deg_stirling_table, sm_deg_moment_table)
from .series import egf_coeff
from .utils import binomial

logger = logging.getLogger(__name__)

CLOSED = 'closed'
GF = 'gf'
SM = 'sm'
ROUTES = (CLOSED, GF, SM)

"""One polynomial of the family; n_max widens the cached row so that a
grid of queries shares one series build."""
PolyBellQuery = namedtuple(
    'PolyBellQuery', ('dist', 'lam', 'k', 'n', 'n_max'), defaults=(None,))

_lock = threading.RLock()


def _weight(lam, l, k):
    """(1)_{l,lam} / l^(k-1)."""
    return deg_falling(1, l, lam) / Fraction(l) ** (k - 1)


@cached(LRUCache(maxsize=1024), lock=_lock)
def _row_closed(dist, lam, k, n_max):
    table = prob_deg_stirling_table(dist, lam, n_max)
    rows = [ONE]
    for n in range(1, n_max + 1):
        rows.append(Polynomial(
            [0] + [_weight(lam, l, k) * table[n][l]
                   for l in range(1, n + 1)]))
    return tuple(rows)


@cached(LRUCache(maxsize=1024), lock=_lock)
def _row_gf(dist, lam, k, n_max):
    logger.debug('expanding Ei_{%d,%s} for %s to order %d',
                 k, lam, dist, n_max)
    u = X * (deg_mgf_series(dist, lam, n_max) - 1)
    gf = polyexp_apply(k, lam, u)
    return (ONE,) + tuple(egf_coeff(gf, n) for n in range(1, n_max + 1))


@cached(LRUCache(maxsize=1024), lock=_lock)
def _row_sm(dist, lam, k, n_max):
    table = sm_deg_moment_table(dist, lam, n_max, n_max)
    rows = [ONE]
    for n in range(1, n_max + 1):
        coeffs = [0]
        for l in range(1, n + 1):
            alternating = sum(
                (binomial(l, m) * (-1) ** (l - m) * table[m][n]
                 for m in range(l + 1)), Fraction(0))
            coeffs.append(deg_falling(1, l, lam) * alternating /
                          (factorial(l - 1) * Fraction(l) ** k))
        rows.append(Polynomial(coeffs))
    return tuple(rows)


_ROW_BUILDERS = {CLOSED: _row_closed, GF: _row_gf, SM: _row_sm}


def bel_row(dist, lam, k, n_max, route=GF):
    """Bel_{n,lam}^{(k,Y)}(x) for n = 0..n_max along one route.

    :arg dist: distribution record or its text form
    :arg lam: degeneracy parameter
    :arg int k: polyexponential index, any integer
    :arg int n_max: last degree
    :arg str route: closed, gf or sm
    :return: tuple of Polynomial
    """
    if n_max < 0:
        raise NegativeIndex('negative degree: {}'.format(n_max))
    try:
        builder = _ROW_BUILDERS[route]
    except KeyError:
        raise ValueError('unknown route: {!r}'.format(route)) from None
    return builder(parse_distribution(dist), Fraction(lam), k, n_max)


def _query(q, route):
    if q.n < 0:
        raise NegativeIndex('negative degree: {}'.format(q.n))
    n_max = max(q.n, q.n_max or 0)
    return bel_row(q.dist, q.lam, q.k, n_max, route)[q.n]


def bel_closed(q):
    """Finite sum over the probabilistic degenerate Stirling numbers."""
    return _query(q, CLOSED)


def bel_gf(q):
    """EGF coefficient of Ei_{k,lam}(x (E[e_lam^Y(t)] - 1))."""
    return _query(q, GF)


def bel_via_sm(q):
    """Finite sum over the degenerate moments of the sums S_m."""
    return _query(q, SM)


def bel_number(q, route=GF):
    """Bel_{n,lam}^{(k,Y)} = Bel_{n,lam}^{(k,Y)}(1)."""
    return _query(q, route)(1)
