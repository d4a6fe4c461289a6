"""Moment pipeline for a random variable Y.

Raw moments E[Y^n] come from the distribution record. The degenerate
moments E[(Y)_{n,lam}] are obtained from them by the basis change
(x)_{n,lam} = sum_k lam^(n-k) S1(n,k) x^k, and everything else (the
degenerate MGF, probabilistic Stirling numbers, Bell polynomials, moments
of S_m = Y_1 + ... + Y_m) is read off series built from those moments.

All series are formal; the convergence domain of the gamma closed form
(t < (e^lam - 1)/lam) plays no role in a truncated series.
"""
import logging
import threading
from collections import namedtuple
from fractions import Fraction
from math import factorial

from cachetools import LRUCache, cached

from .combinatorics import CLASSICAL_1, TABLE_FLOOR, deg_exp_series, stirling
from .distributions import (
    Bernoulli, FiniteDiscrete, Gamma, PointMass, Poisson, parse_distribution)
from .error import IndexOutOfTriangle, NegativeIndex, NoClosedForm
from .polynomial import X
from .series import (
    Series, egf_coeff, series_exp, series_geom, series_log1p, series_pow)
from .utils import binomial

logger = logging.getLogger(__name__)

"""Raw moments raw[n] = E[Y^n] for 0 <= n <= n_max."""
MomentSequence = namedtuple('MomentSequence', ('dist', 'raw'))

_lock = threading.RLock()


def _check_index(*indices):
    for i in indices:
        if i < 0:
            raise NegativeIndex('negative index: {}'.format(i))


def raw_moment(dist, n):
    """E[Y^n], exact."""
    _check_index(n)
    return Fraction(parse_distribution(dist).raw_moment(n))


@cached(LRUCache(maxsize=256), lock=_lock)
def _moment_sequence(dist, n_max):
    return MomentSequence(dist, tuple(raw_moment(dist, n)
                                      for n in range(n_max + 1)))


def moment_sequence(dist, n_max):
    _check_index(n_max)
    return _moment_sequence(parse_distribution(dist), n_max)


def expect_poly(dist, poly):
    """E[p(Y)] for a polynomial p, by linearity over the raw moments."""
    raw = moment_sequence(dist, max(poly.degree, 0)).raw
    return sum((c * raw[i] for i, c in enumerate(poly.coeffs)), Fraction(0))


def deg_moment(dist, n, lam):
    """E[(Y)_{n,lam}] = sum_k lam^(n-k) S1(n,k) E[Y^k]."""
    _check_index(n)
    lam = Fraction(lam)
    raw = moment_sequence(dist, n).raw
    return sum((lam ** (n - k) * stirling(CLASSICAL_1, n, k) * raw[k]
                for k in range(n + 1)), Fraction(0))


@cached(LRUCache(maxsize=512), lock=_lock)
def _deg_mgf_series(dist, lam, order):
    logger.debug('building degenerate MGF of %s, lambda=%s, order=%d',
                 dist, lam, order)
    return Series.from_egf(
        (deg_moment(dist, n, lam) for n in range(order + 1)), order)


def deg_mgf_series(dist, lam, order):
    """E[e_lam^Y(t)] built from the moment sequence of Y.

    :arg dist: distribution record or its text form
    :arg lam: degeneracy parameter
    :arg int order: truncation order
    """
    _check_index(order)
    return _deg_mgf_series(parse_distribution(dist), Fraction(lam), order)


def deg_mgf_closed(dist, lam, order):
    """E[e_lam^Y(t)] from the closed form of the distribution.

    Available for point masses, Bernoulli, Poisson (e^{a(e_lam(t)-1)}),
    finite discrete variables (sum p_i e_lam^{v_i}(t)) and gamma(1,1)
    (1 / (1 - log(1+lam t)/lam)). Other gamma variables raise NoClosedForm.
    """
    _check_index(order)
    dist = parse_distribution(dist)
    lam = Fraction(lam)
    if isinstance(dist, PointMass):
        return deg_exp_series(dist.c, lam, order)
    if isinstance(dist, Bernoulli):
        return 1 + dist.p * (deg_exp_series(1, lam, order) - 1)
    if isinstance(dist, Poisson):
        return series_exp(dist.alpha * (deg_exp_series(1, lam, order) - 1))
    if isinstance(dist, FiniteDiscrete):
        total = Series.zero(order)
        for value, prob in dist.atoms:
            total = total + prob * deg_exp_series(value, lam, order)
        return total
    if isinstance(dist, Gamma) and dist.alpha == 1 and dist.beta == 1:
        if lam == 0:
            log_term = Series.variable(order)
        else:
            log_term = series_log1p(lam, order) / lam
        return series_geom(log_term)
    raise NoClosedForm('no closed-form degenerate MGF for {}'.format(dist))


@cached(LRUCache(maxsize=512), lock=_lock)
def _prob_deg_stirling_table(dist, lam, n_max):
    logger.debug('building probabilistic Stirling triangle of %s, '
                 'lambda=%s, n_max=%d', dist, lam, n_max)
    f = _deg_mgf_series(dist, lam, n_max) - 1
    values = [[None] * (n + 1) for n in range(n_max + 1)]
    power = Series.one(n_max)
    for k in range(n_max + 1):
        for n in range(k, n_max + 1):
            values[n][k] = egf_coeff(power, n)[0]
        power = power * f / (k + 1)
    return tuple(tuple(row) for row in values)


def prob_deg_stirling_table(dist, lam, n_max):
    """Rows values[n][k] = {n k}_{Y,lam} for 0 <= k <= n <= n_max."""
    _check_index(n_max)
    return _prob_deg_stirling_table(
        parse_distribution(dist), Fraction(lam), n_max)


def _triangle_size(n):
    return max(TABLE_FLOOR, -(-n // 4) * 4)


def prob_deg_stirling2(dist, lam, n, k):
    """{n k}_{Y,lam}: n! [t^n] (E[e_lam^Y(t)] - 1)^k / k!."""
    if n < 0 or k < 0 or k > n:
        raise IndexOutOfTriangle(
            'no triangle entry at n={}, k={}'.format(n, k))
    return prob_deg_stirling_table(dist, lam, _triangle_size(n))[n][k]


def prob_stirling2(dist, n, k):
    """{n k}_Y, the lam = 0 case."""
    return prob_deg_stirling2(dist, 0, n, k)


def prob_stirling2_by_differences(dist, n, k):
    """{n k}_Y = (1/k!) sum_j C(k,j) (-1)^(k-j) E[S_j^n]."""
    if n < 0 or k < 0 or k > n:
        raise IndexOutOfTriangle(
            'no triangle entry at n={}, k={}'.format(n, k))
    table = sm_deg_moment_table(dist, 0, k, n)
    return sum((binomial(k, j) * (-1) ** (k - j) * table[j][n]
                for j in range(k + 1)), Fraction(0)) / factorial(k)


@cached(LRUCache(maxsize=256), lock=_lock)
def _prob_deg_bell_row(dist, lam, n_max):
    gf = series_exp(X * (_deg_mgf_series(dist, lam, n_max) - 1))
    return tuple(egf_coeff(gf, n) for n in range(n_max + 1))


def prob_deg_bell(dist, lam, n):
    """phi_{n,lam}^Y(x), the n-th EGF coefficient of
    exp(x (E[e_lam^Y(t)] - 1))."""
    _check_index(n)
    return _prob_deg_bell_row(
        parse_distribution(dist), Fraction(lam), _triangle_size(n))[n]


def prob_bell(dist, n):
    return prob_deg_bell(dist, 0, n)


def sm_deg_moment(dist, lam, m, n):
    """E[(S_m)_{n,lam}] where S_m sums m independent copies of Y and
    S_0 = 0."""
    _check_index(m, n)
    mgf = deg_mgf_series(dist, lam, n)
    return egf_coeff(series_pow(mgf, m), n)[0]


@cached(LRUCache(maxsize=512), lock=_lock)
def _sm_deg_moment_table(dist, lam, m_max, n_max):
    logger.debug('building S_m moment table of %s, lambda=%s, m_max=%d, '
                 'n_max=%d', dist, lam, m_max, n_max)
    mgf = _deg_mgf_series(dist, lam, n_max)
    rows = []
    power = Series.one(n_max)
    for _ in range(m_max + 1):
        rows.append(tuple(egf_coeff(power, n)[0]
                          for n in range(n_max + 1)))
        power = power * mgf
    return tuple(rows)


def sm_deg_moment_table(dist, lam, m_max, n_max):
    """Rows table[m][n] = E[(S_m)_{n,lam}] for m <= m_max, n <= n_max."""
    _check_index(m_max, n_max)
    return _sm_deg_moment_table(
        parse_distribution(dist), Fraction(lam), m_max, n_max)


def sm_moment(dist, m, n):
    """E[S_m^n]."""
    return sm_deg_moment(dist, 0, m, n)


def alternating_sm_sum(dist, lam, l, n):
    """sum_{m=0}^{l} C(l,m) (-1)^(l-m) E[(S_m)_{n,lam}], which is
    l! [t^n] (E[e_lam^Y(t)] - 1)^l / l! and so vanishes for l > n."""
    _check_index(l, n)
    table = sm_deg_moment_table(dist, lam, l, n)
    return sum((binomial(l, m) * (-1) ** (l - m) * table[m][n]
                for m in range(l + 1)), Fraction(0))
