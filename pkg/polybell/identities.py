"""Catalog of identities and the engine that checks them by exact equality.

Each catalog entry names the parameter axes it ranges over, a default grid
for every axis, and one or more variants: a variant maps a grid point to a
(lhs, rhs) pair of rationals or polynomials in x. The engine expands the
grid, evaluates every variant at every point and compares exactly.

Grid text is a ``;``-separated list of constraints, each either
``name=v1|v2|...`` or ``name<=N``::

    n<=6;l<=10
    dist=gamma:1,1|point:1;lambda=0|1/3

The ``l`` axis of the vanishing identities is tied to ``n``: by default it
runs over n+1 .. n+4 and ``l<=L`` makes it n+1 .. L. Both the bound L and
explicit values must exceed every ``n`` of the grid.
"""
import logging
import threading
from collections import OrderedDict, namedtuple
from concurrent import futures
from fractions import Fraction
from itertools import product

from cachetools import LRUCache, cached

from .combinatorics import (
    CLASSICAL_1, DEGENERATE_1, DEGENERATE_2, LAH, bell_poly, deg_exp_series,
    deg_falling, deg_log_series, deg_poly_bell, falling_factorial,
    polyexp_apply, stirling)
from .distributions import Bernoulli, Gamma, Poisson, parse_distribution
from .error import GridMismatch, ParseError, UnknownIdentity
from .poly_bell import PolyBellQuery, bel_closed, bel_gf, bel_row, bel_via_sm
from .polynomial import Polynomial, X
from .probabilistic import (
    alternating_sm_sum, deg_mgf_closed, deg_mgf_series, deg_moment,
    expect_poly, prob_deg_stirling_table, sm_deg_moment_table)
from .series import Series, egf_coeff, series_compose
from .utils import binomial, format_rational_full, parse_int, parse_rational

logger = logging.getLogger(__name__)

"""A parameter axis, its default values and the least value it admits."""
Axis = namedtuple('Axis', ('name', 'default', 'minimum'), defaults=(None,))

"""A grid constraint: op is '=' (explicit values) or '<=' (upper bound)."""
Constraint = namedtuple('Constraint', ('op', 'values'))

IdentityEntry = namedtuple(
    'IdentityEntry', ('id', 'quote', 'axes', 'variants', 'pinned', 'note'))

Failure = namedtuple('Failure', ('params', 'lhs', 'rhs'))

IdentityReport = namedtuple(
    'IdentityReport',
    ('id', 'grid_size', 'failures', 'passed', 'variants', 'pinned'))

AXIS_PARSERS = {
    'dist': parse_distribution,
    'lambda': parse_rational,
    'p': parse_rational,
    'alpha': parse_rational,
    'beta': parse_rational,
    'k': parse_int,
    'n': parse_int,
    'l': parse_int,
    'j': parse_int,
    'm': parse_int,
}
INT_AXES = ('k', 'n', 'l', 'j', 'm')

# Rows of the poly-Bell family are built at least this wide so that every
# entry shares them.
ROW_SPAN = 12

# Default grids.
LAMBDAS = tuple(map(Fraction, (0, Fraction(1, 3), Fraction(-1, 2), 2)))
# 1 and 1/2 make (1)_{l,lam} vanish; 1/3 does too once l >= 4.
EXCLUDED_LAMBDAS = (Fraction(1), Fraction(1, 2))
KS = (-2, -1, 0, 1, 2, 3)
DISTS = tuple(map(parse_distribution, (
    'point:1', 'bernoulli:2/5', 'poisson:3/2', 'gamma:1,1',
    'discrete:1:1/2,2:1/2')))
PS = (Fraction(2, 5), Fraction(1))


def _ints(lo, hi):
    return tuple(range(lo, hi + 1))


def _rationals(*values):
    return tuple(Fraction(v) for v in values)


def _span(grid):
    return max(ROW_SPAN, max(grid['n']))


def _weight(lam, l, k):
    return deg_falling(1, l, lam) / Fraction(l) ** (k - 1)


# -- probabilistic degenerate poly-Bell polynomials ------------------------

def _first_kind_closed_sum(p, grid):
    dist, lam, n = p['dist'], p['lambda'], p['n']
    table = prob_deg_stirling_table(dist, lam, _span(grid))
    lhs = Polynomial([0] + [deg_falling(1, j, lam) * table[n][j]
                            for j in range(1, n + 1)])
    rhs = bel_gf(PolyBellQuery(dist, lam, 1, n, _span(grid)))
    return lhs, rhs


def _closed_vs_gf(p, grid):
    q = PolyBellQuery(p['dist'], p['lambda'], p['k'], p['n'], _span(grid))
    return bel_closed(q), bel_gf(q)


def _sm_vs_closed(p, grid):
    q = PolyBellQuery(p['dist'], p['lambda'], p['k'], p['n'], _span(grid))
    return bel_via_sm(q), bel_closed(q)


def _vanishing_with_prefactor(p, grid):
    lam, l = p['lambda'], p['l']
    return (deg_falling(1, l, lam) *
            alternating_sm_sum(p['dist'], lam, l, p['n']), Fraction(0))


def _vanishing_bare(p, grid):
    return alternating_sm_sum(p['dist'], p['lambda'], p['l'], p['n']), \
        Fraction(0)


def _vanishing_classical(p, grid):
    return alternating_sm_sum(p['dist'], 0, p['l'], p['n']), Fraction(0)


def _gamma_alternating_direct(p, grid):
    alpha, n, l = p['alpha'], p['n'], p['l']
    total = sum((binomial(l, m) * (-1) ** (l - m) *
                 falling_factorial(alpha * m + n - 1, n)
                 for m in range(l + 1)), Fraction(0))
    return total, Fraction(0)


def _gamma_alternating_moments(p, grid):
    return alternating_sm_sum(Gamma(p['alpha'], 1), 0, p['l'], p['n']), \
        Fraction(0)


def _log_substitution_lhs(p, grid):
    dist, lam, k, n = p['dist'], p['lambda'], p['k'], p['n']
    row = bel_row(dist, lam, k, _span(grid))
    total = Polynomial()
    for l in range(1, n + 1):
        total = total + stirling(DEGENERATE_1, n, l, lam) * row[l]
    return total


def _log_substitution(first_kind_index):
    """Both readings of the double sum: the first-kind factor indexed by
    the inner variable l as printed, or by the outer variable j as the
    expansion of (log(1+t))^j / j! produces."""

    def evaluate(p, grid):
        dist, lam, k, n = p['dist'], p['lambda'], p['k'], p['n']
        table = prob_deg_stirling_table(dist, 0, _span(grid))
        coeffs = [Fraction(0)] * (n + 1)
        for j in range(1, n + 1):
            for l in range(1, j + 1):
                s1 = stirling(CLASSICAL_1, n, first_kind_index(j, l))
                coeffs[l] += _weight(lam, l, k) * table[j][l] * s1
        return _log_substitution_lhs(p, grid), Polynomial(coeffs)
    return evaluate


def _shifted_moment(dist, lam, j):
    """E[Y (Y - lam)_{j,lam}] by expanding the polynomial in Y."""
    return expect_poly(dist, X * deg_falling(X - lam, j, lam))


def _derivative_recurrence(p, grid):
    dist, lam, k, n = p['dist'], p['lambda'], p['k'], p['n']
    lower = bel_row(dist, lam, k - 1, _span(grid))
    upper = bel_row(dist, lam, k, _span(grid))
    lhs = Polynomial()
    for m in range(1, n + 1):
        lhs = lhs + binomial(n, m) * _shifted_moment(dist, lam, n - m) * \
            lower[m]
    rhs = Polynomial()
    for m in range(n):
        rhs = rhs + binomial(n, m) * deg_moment(dist, n - m, lam) * \
            upper[m + 1]
    return lhs, rhs


def _shift_symbolic(p, grid):
    lam, j = p['lambda'], p['j']
    return X * deg_falling(X - lam, j, lam), deg_falling(X, j + 1, lam)


def _shift_expectation(p, grid):
    dist, lam, j = p['dist'], p['lambda'], p['j']
    return _shifted_moment(dist, lam, j), deg_moment(dist, j + 1, lam)


# -- Bernoulli and gamma(1,1) specializations -------------------------------

def _bernoulli_closed(p, lam, k, n):
    return Polynomial([0] + [
        _weight(lam, m, k) * p ** m * stirling(DEGENERATE_2, n, m, lam)
        for m in range(1, n + 1)])


def _bernoulli_vs_gf(p, grid):
    prob, lam, k, n = p['p'], p['lambda'], p['k'], p['n']
    q = PolyBellQuery(Bernoulli(prob), lam, k, n, _span(grid))
    return _bernoulli_closed(prob, lam, k, n), bel_gf(q)


def _bernoulli_triple_sum(p, grid):
    prob, lam, k, n = p['p'], p['lambda'], p['k'], p['n']
    coeffs = [Fraction(0)]
    for j in range(1, n + 1):
        inner = Fraction(0)
        for l in range(1, j + 1):
            inner += stirling(DEGENERATE_2, j, l, lam) * sum(
                (_weight(lam, m, k) * stirling(DEGENERATE_1, l, m, lam)
                 for m in range(1, l + 1)), Fraction(0))
        coeffs.append(inner * stirling(DEGENERATE_2, n, j, lam) * prob ** j)
    return Polynomial(coeffs), _bernoulli_closed(prob, lam, k, n)


def _gamma_double_sum(p, grid):
    lam, k, n = p['lambda'], p['k'], p['n']
    coeffs = [Fraction(0)]
    for m in range(1, n + 1):
        coeffs.append(sum(
            (_weight(lam, m, k) * lam ** (n - l) * stirling(LAH, l, m) *
             stirling(CLASSICAL_1, n, l) for l in range(m, n + 1)),
            Fraction(0)))
    q = PolyBellQuery(Gamma(1, 1), lam, k, n, _span(grid))
    return Polynomial(coeffs), bel_gf(q)


# -- Poisson ----------------------------------------------------------------

def _poisson_alternating(p, grid):
    alpha, lam, n, l = p['alpha'], p['lambda'], p['n'], p['l']
    bell = bell_poly(n, lam)
    return sum((binomial(l, m) * (-1) ** (l - m) * bell(alpha * m)
                for m in range(l + 1)), Fraction(0)), Fraction(0)


def _poisson_sm(p, grid):
    alpha, lam, m, n = p['alpha'], p['lambda'], p['m'], p['n']
    table = sm_deg_moment_table(Poisson(alpha), lam, max(grid['m']),
                                max(grid['n']))
    return table[m][n], bell_poly(n, lam)(alpha * m)


# -- engine soundness --------------------------------------------------------

_lock = threading.RLock()


@cached(LRUCache(maxsize=64), lock=_lock)
def _ei1_series(lam, order):
    u = X * (deg_exp_series(1, lam, order) - 1)
    exp_coeffs = deg_exp_series(1, lam, order).coeffs
    return polyexp_apply(1, lam, u), series_compose(exp_coeffs, u) - 1


def _ei1(p, grid):
    lhs, rhs = _ei1_series(p['lambda'], max(grid['n']))
    return egf_coeff(lhs, p['n']), egf_coeff(rhs, p['n'])


@cached(LRUCache(maxsize=64), lock=_lock)
def _inverse_series(lam, order):
    exp_series = deg_exp_series(1, lam, order)
    log_series = deg_log_series(lam, order)
    return (series_compose(exp_series.coeffs, log_series),
            series_compose(log_series.coeffs, exp_series - 1))


def _exp_of_log(p, grid):
    order = max(grid['n'])
    composed, _ = _inverse_series(p['lambda'], order)
    target = Series([1, 1], order)
    return egf_coeff(composed, p['n']), egf_coeff(target, p['n'])


def _log_of_exp(p, grid):
    order = max(grid['n'])
    _, composed = _inverse_series(p['lambda'], order)
    target = Series.variable(order)
    return egf_coeff(composed, p['n']), egf_coeff(target, p['n'])


def _orthogonality(p, grid):
    lam, j = p['lambda'], p['j']
    coeffs = [sum((stirling(DEGENERATE_2, j, l, lam) *
                   stirling(DEGENERATE_1, l, m, lam)
                   for l in range(m, j + 1)), Fraction(0))
              for m in range(j + 1)]
    return Polynomial(coeffs), Polynomial.monomial(j)


def _point_reduction(p, grid):
    lam, k, n = p['lambda'], p['k'], p['n']
    q = PolyBellQuery(parse_distribution('point:1'), lam, k, n, _span(grid))
    return bel_gf(q), deg_poly_bell(k, lam, n)


def _gamma_mgf(p, grid):
    order = max(grid['n'])
    gamma = Gamma(1, 1)
    closed = deg_mgf_closed(gamma, p['lambda'], order)
    generic = deg_mgf_series(gamma, p['lambda'], order)
    return egf_coeff(closed, p['n']), egf_coeff(generic, p['n'])


def _gamma_sm(p, grid):
    alpha, beta, m, n = p['alpha'], p['beta'], p['m'], p['n']
    table = sm_deg_moment_table(Gamma(alpha, beta), 0, max(grid['m']),
                                max(grid['n']))
    return table[m][n], falling_factorial(alpha * m + n - 1, n) / beta ** n


# -- catalog -----------------------------------------------------------------

def _entry(identity_id, quote, axes, variants, pinned=None, note=''):
    if callable(variants):
        variants = OrderedDict([('stated', variants)])
    return IdentityEntry(identity_id, quote, tuple(Axis(*a) for a in axes),
                         OrderedDict(variants), pinned, note)


_VANISHING_AXES = (('n', _ints(1, 8)), ('l', None))

CATALOG = OrderedDict((entry.id, entry) for entry in sorted([
    _entry(
        'T2.1',
        r'\mathrm{Bel}_{m,\lambda}^{(1,Y)}(x)=\sum_{n=1}^{m}(1)_{n,\lambda}'
        r'{m \brace n}_{Y,\lambda}x^{n}',
        (('dist', DISTS), ('lambda', LAMBDAS), ('n', _ints(1, 12), 1)),
        _first_kind_closed_sum,
        note='stated for m in Z; only m >= 1 carries meaning, the sum '
             'index is kept distinct from the degree'),
    _entry(
        'T2.2',
        r'\frac{(1)_{l,\lambda}}{l^{k-1}}{n \brace l}_{Y,\lambda}x^{l}',
        (('dist', DISTS), ('lambda', LAMBDAS), ('k', KS),
         ('n', _ints(1, 12))),
        _closed_vs_gf),
    _entry(
        'T2.3a',
        r'\frac{(1)_{l,\lambda}}{(l-1)!l^{k}}',
        (('dist', DISTS), ('lambda', LAMBDAS), ('k', KS),
         ('n', _ints(1, 12))),
        _sm_vs_closed),
    _entry(
        'T2.3b',
        r'=0, \quad \mathrm{for}\,\,\, l \ge n+1',
        (('dist', DISTS), ('lambda', LAMBDAS)) + _VANISHING_AXES,
        _vanishing_with_prefactor),
    _entry(
        'R2.4a',
        r'\sum_{m=0}^{l}\binom{l}{m}(-1)^{l-m}'
        r'E\big[(S_{m})_{n,\lambda}\big]=0',
        (('dist', DISTS), ('lambda', LAMBDAS + EXCLUDED_LAMBDAS)) +
        _VANISHING_AXES,
        [('prefactor', _vanishing_with_prefactor),
         ('bare', _vanishing_bare)],
        note='the bare sum is also checked at lambda = 1, 1/2, ..., '
             '1/(l-1), where (1)_{l,lambda} vanishes'),
    _entry(
        'R2.4b',
        r'\sum_{m=0}^{l}\binom{l}{m}(-1)^{l-m}E\big[S_{m}^{n}\big]=0',
        (('dist', DISTS),) + _VANISHING_AXES,
        _vanishing_classical),
    _entry(
        'R2.4c',
        r'(\alpha m +n-1)_{n}=0',
        (('alpha', _rationals(1, 2, Fraction(1, 2))),) + _VANISHING_AXES,
        [('direct', _gamma_alternating_direct),
         ('moments', _gamma_alternating_moments)]),
    _entry(
        'T2.4',
        r'{j \brace l}_{Y}S_{1}(n,l)x^{l}',
        (('dist', DISTS), ('lambda', LAMBDAS), ('k', KS),
         ('n', _ints(1, 12))),
        [('printed', _log_substitution(lambda j, l: l)),
         ('corrected', _log_substitution(lambda j, l: j))],
        pinned='corrected',
        note='printed uses S1(n,l), corrected uses S1(n,j)'),
    _entry(
        'T2.5',
        r'E\big[Y(Y-\lambda)_{n-m,\lambda}\big]',
        (('dist', DISTS), ('lambda', LAMBDAS), ('k', KS),
         ('n', _ints(1, 10))),
        _derivative_recurrence),
    _entry(
        'T2.6',
        r'p^{m}{n \brace m}_{\lambda}x^{m}',
        (('p', PS), ('lambda', LAMBDAS), ('k', KS),
         ('n', _ints(1, 12), 1)),
        _bernoulli_vs_gf),
    _entry(
        'T2.7',
        r'S_{1,\lambda}(l,m){j \brace l}_{\lambda}{n \brace j}_{\lambda}'
        r'p^{j}x^{j}',
        (('p', PS), ('lambda', LAMBDAS), ('k', KS),
         ('n', _ints(1, 12), 1)),
        _bernoulli_triple_sum),
    _entry(
        'T2.8',
        r'\lambda^{n-l}L(l,m)S_{1}(n,l)x^{m}',
        (('lambda', LAMBDAS), ('k', KS), ('n', _ints(1, 10), 1)),
        _gamma_double_sum),
    _entry(
        'C3',
        r'\phi_{n,\lambda}(\alpha m)=0',
        (('alpha', _rationals(1, Fraction(3, 2))), ('lambda', LAMBDAS)) +
        _VANISHING_AXES,
        _poisson_alternating),
    _entry(
        'EI1',
        r'\mathrm{Ei}_{1,\lambda}(x)=e_{\lambda}(x)-1',
        (('lambda', LAMBDAS), ('n', _ints(0, 12))),
        _ei1),
    _entry(
        'INV',
        r'e_{\lambda}\big(\log_{\lambda}(1+t)\big)='
        r'\log_{\lambda}\big(e_{\lambda}(1+t)\big)=1+t',
        (('lambda', LAMBDAS), ('n', _ints(0, 20))),
        [('exp-of-log', _exp_of_log), ('log-of-exp', _log_of_exp)],
        note='log-of-exp composes log_lambda(1+u) with u = e_lambda(t) - 1'),
    _entry(
        'ORTH',
        r'(x)_{n}=\sum_{k=0}^{n}S_{1,\lambda}(n,k)(x)_{k,\lambda}',
        (('lambda', LAMBDAS), ('j', _ints(0, 12))),
        _orthogonality,
        note='sum_l {j l}_lambda S1_lambda(l, m) as a polynomial in a '
             'marker variable, compared with x^j'),
    _entry(
        'RED-Y1',
        r'\mathrm{Bel}_{n,\lambda}^{(k,1)}(x)= '
        r'\mathrm{Bel}_{n,\lambda}^{(k)}(x)',
        (('lambda', LAMBDAS), ('k', KS), ('n', _ints(1, 12))),
        _point_reduction),
    _entry(
        'SHIFT',
        r'E\big[Ye_{\lambda}^{Y-\lambda}(t)\big]',
        (('dist', DISTS), ('lambda', LAMBDAS), ('j', _ints(0, 8))),
        [('symbolic', _shift_symbolic),
         ('expectation', _shift_expectation)],
        note='Y (Y-lambda)_{j,lambda} = (Y)_{j+1,lambda}'),
    _entry(
        'GAMMA-MGF',
        r'\frac{1}{1-\frac{1}{\lambda}\log(1+\lambda t)}',
        (('lambda', LAMBDAS), ('n', _ints(0, 20))),
        _gamma_mgf),
    _entry(
        'GAMMA-SM',
        r'\frac{(\alpha m+n-1)_{n}}{\beta^{n}}',
        (('alpha', _rationals(1, 2, Fraction(1, 2))),
         ('beta', _rationals(1, Fraction(2, 3))),
         ('m', _ints(0, 5)), ('n', _ints(0, 8))),
        _gamma_sm),
    _entry(
        'POISSON-SM',
        r'e^{\alpha m\big(e_{\lambda}(t)-1 \big)}=\sum_{n=0}^{\infty}'
        r'\phi_{n,\lambda}(\alpha m)\frac{t^{n}}{n!}',
        (('alpha', _rationals(1, Fraction(3, 2))), ('lambda', LAMBDAS),
         ('m', _ints(0, 6)), ('n', _ints(0, 8))),
        _poisson_sm),
], key=lambda e: e.id))


def catalog_ids():
    return list(CATALOG)


def get_entry(identity_id):
    try:
        return CATALOG[identity_id]
    except KeyError:
        raise UnknownIdentity(identity_id) from None


# -- grids -------------------------------------------------------------------

def _parse_constraint(name, text):
    if name not in AXIS_PARSERS:
        raise ParseError('unknown grid axis: {!r}'.format(name))
    if text.startswith('<='):
        if name not in INT_AXES:
            raise ParseError(
                'axis {!r} takes explicit values only'.format(name))
        return Constraint('<=', parse_int(text[2:]))
    if not text.startswith('='):
        raise ParseError('malformed grid constraint: {!r}'.format(
            name + text))
    values = tuple(AXIS_PARSERS[name](v) for v in text[1:].split('|'))
    return Constraint('=', values)


def parse_grid(text):
    """Parse grid text into a mapping of axis name to Constraint."""
    constraints = OrderedDict()
    for item in text.split(';'):
        item = item.strip()
        if not item:
            continue
        cut = min(i for i in (item.find('<='), item.find('=')) if i >= 0) \
            if '=' in item else -1
        if cut <= 0:
            raise ParseError('malformed grid constraint: {!r}'.format(item))
        constraints[item[:cut].strip()] = _parse_constraint(
            item[:cut].strip(), item[cut:].replace(' ', ''))
    return constraints


def _constraints(grid):
    if grid is None:
        return OrderedDict()
    if isinstance(grid, str):
        return parse_grid(grid)
    constraints = OrderedDict()
    for name, value in grid.items():
        if isinstance(value, Constraint):
            constraints[name] = value
        elif isinstance(value, str):
            constraints[name] = _parse_constraint(name, value if value[:1] in
                                                  '<=' else '=' + value)
        else:
            if not isinstance(value, (list, tuple)):
                value = (value,)
            if name not in AXIS_PARSERS:
                raise ParseError('unknown grid axis: {!r}'.format(name))
            constraints[name] = Constraint(
                '=', tuple(AXIS_PARSERS[name](v) for v in value))
    return constraints


def _resolve(entry, constraints):
    values = OrderedDict((axis.name, axis.default) for axis in entry.axes)
    for name, constraint in constraints.items():
        if name not in values:
            raise GridMismatch(
                '{} has no {!r} axis'.format(entry.id, name))
        if name == 'l':
            values[name] = constraint
        elif constraint.op == '=':
            values[name] = constraint.values
        else:
            values[name] = tuple(
                v for v in range(min(values[name]), constraint.values + 1))
    for axis in entry.axes:
        if axis.minimum is None:
            continue
        low = [v for v in values[axis.name] if v < axis.minimum]
        if low:
            raise GridMismatch('{} holds for {} >= {} only, got {}={}'.format(
                entry.id, axis.name, axis.minimum, axis.name, low[0]))
    rule = values.get('l')
    if rule is not None and values.get('n'):
        top = max(values['n'])
        if rule.op == '<=':
            low = [rule.values] if rule.values <= top else []
        else:
            low = [l for l in rule.values if l <= top]
        if low:
            raise GridMismatch(
                '{} holds for l >= n+1 only, l={} does not exceed n={}'
                .format(entry.id, low[0], top))
    return values


def _l_values(rule, n):
    if rule is None:
        return range(n + 1, n + 5)
    if rule.op == '<=':
        return range(n + 1, rule.values + 1)
    return rule.values


def _points(values):
    names = [name for name in values if name != 'l']
    for combo in product(*(values[name] for name in names)):
        point = OrderedDict(zip(names, combo))
        if 'l' not in values:
            yield point
            continue
        for l in _l_values(values['l'], point['n']):
            with_l = OrderedDict(point)
            with_l['l'] = l
            yield with_l


# -- engine ------------------------------------------------------------------

def _param_text(name, value):
    if name == 'dist':
        return str(value)
    if name in INT_AXES:
        return value
    return format_rational_full(value)


def value_to_json(value):
    """Rationals as "p/q"; polynomials as coefficient arrays."""
    if isinstance(value, Polynomial):
        return [format_rational_full(c) for c in (value.coeffs or (0,))]
    return format_rational_full(value)


def verify_identity(identity_id, grid=None, workers=1):
    """Check one catalog entry over its grid.

    :arg str identity_id: catalog id, e.g. "T2.2"
    :arg grid: None for the default grid, grid text, or a mapping of axis
        name to values
    :arg int workers: number of threads evaluating grid points
    :return: IdentityReport
    """
    entry = get_entry(identity_id)
    values = _resolve(entry, _constraints(grid))
    points = list(_points(values))
    if not points:
        raise GridMismatch('{}: the grid is empty'.format(identity_id))
    logger.info('verifying %s over %d points', identity_id, len(points))

    def evaluate(point):
        return [(name, side(point, values))
                for name, side in entry.variants.items()]

    if workers > 1:
        with futures.ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(evaluate, points))
    else:
        results = [evaluate(point) for point in points]

    failures = OrderedDict((name, []) for name in entry.variants)
    for point, outcome in zip(points, results):
        for name, (lhs, rhs) in outcome:
            if lhs != rhs:
                params = OrderedDict(
                    (k, _param_text(k, v)) for k, v in point.items())
                if entry.pinned is None and len(entry.variants) > 1:
                    params['variant'] = name
                failures[name].append(Failure(
                    params, value_to_json(lhs), value_to_json(rhs)))

    variants = OrderedDict(
        (name, not failed) for name, failed in failures.items())
    if entry.pinned is not None:
        reported = failures[entry.pinned]
    else:
        reported = [f for failed in failures.values() for f in failed]
    report = IdentityReport(
        identity_id, len(points), reported, not reported,
        variants if len(variants) > 1 else None, entry.pinned)
    logger.info('%s %s', identity_id, 'passed' if report.passed else
                'FAILED ({} failures)'.format(len(reported)))
    return report


def run_all(grid_overrides=None, workers=1):
    """Verify every catalog entry in id order.

    Each override constrains only the entries that range over its axis.
    """
    constraints = _constraints(grid_overrides)
    reports = []
    for identity_id, entry in CATALOG.items():
        axes = {axis.name for axis in entry.axes}
        applicable = OrderedDict(
            (k, c) for k, c in constraints.items() if k in axes)
        reports.append(verify_identity(identity_id, applicable, workers))
    return reports


def report_to_json(report):
    """JSON-ready mapping of a report, keys in a fixed order."""
    data = OrderedDict([
        ('id', report.id),
        ('grid_size', report.grid_size),
        ('passed', report.passed),
        ('failures', [OrderedDict([('params', f.params), ('lhs', f.lhs),
                                   ('rhs', f.rhs)])
                      for f in report.failures]),
    ])
    if report.variants is not None:
        data['variants'] = report.variants
    if report.pinned is not None:
        data['pinned'] = report.pinned
    return data
