"""Command-line front end.

::

    polybell table --family polybell --dist point:1 --lambda 0 --k 1 --n-max 3
    polybell verify --id all --seed-grid
    polybell series --name deg-mgf --dist gamma:1,1 --lambda 1/2 --order 3

Exit codes: 0 on success, 1 when an identity fails, 2 on bad arguments.
"""
import argparse
import csv
import io
import json
import logging
import os
import sys
from collections import OrderedDict, namedtuple

from . import identities
from .combinatorics import (
    CLASSICAL_1, CLASSICAL_2, DEGENERATE_1, DEGENERATE_2, LAH, bell_poly,
    deg_exp_series, deg_log_series, polyexp_apply, stirling_table)
from .distributions import parse_distribution
from .error import Error
from .poly_bell import GF, ROUTES, bel_row
from .polynomial import Polynomial, X
from .probabilistic import (
    deg_mgf_closed, deg_mgf_series, prob_bell, prob_deg_bell,
    prob_deg_stirling_table)
from .series import Series, egf_coeff
from .utils import format_rational, parse_int, parse_rational

logger = logging.getLogger(__name__)

OUTPUT_ENV = 'POLYBELL_OUTPUT'

CliConfig = namedtuple('CliConfig', (
    'command', 'selector', 'params', 'output_format', 'output_path',
    'workers', 'seed_grid', 'verbosity'))

_TRIANGLES = OrderedDict([
    ('stirling1', CLASSICAL_1),
    ('stirling2', CLASSICAL_2),
    ('deg-stirling1', DEGENERATE_1),
    ('deg-stirling2', DEGENERATE_2),
    ('lah', LAH),
])
FAMILIES = tuple(_TRIANGLES) + (
    'bell', 'deg-bell', 'prob-stirling2', 'prob-deg-stirling2', 'prob-bell',
    'prob-deg-bell', 'polybell')
SERIES_NAMES = ('deg-exp', 'deg-log', 'deg-mgf', 'polyexp')

# Parameters each family or series needs besides --n-max / --order.
_REQUIRED = {
    'deg-stirling1': ('lambda',),
    'deg-stirling2': ('lambda',),
    'deg-bell': ('lambda',),
    'prob-stirling2': ('dist',),
    'prob-deg-stirling2': ('dist', 'lambda'),
    'prob-bell': ('dist',),
    'prob-deg-bell': ('dist', 'lambda'),
    'polybell': ('dist', 'lambda', 'k'),
    'deg-exp': ('lambda',),
    'deg-log': ('lambda',),
    'deg-mgf': ('dist', 'lambda'),
    'polyexp': ('k', 'lambda'),
}
# Options with a default that only these selectors read.
_OPTIONAL = {
    'polybell': ('route',),
    'deg-exp': ('x',),
    'deg-mgf': ('path',),
}


# argparse reports "invalid <name> value", so these carry readable names.
def rational(text):
    return parse_rational(text)


def integer(text):
    return parse_int(text)


def distribution(text):
    return parse_distribution(text)


def exponent(text):
    """A rational, or the literal x for the indeterminate."""
    return X if text == 'x' else parse_rational(text)


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', dest='output_format', default='json',
                        choices=('json', 'csv'), help='output encoding')
    common.add_argument('--output', dest='output_path', default=None,
                        help='write to this file instead of standard output '
                             '(overridden by ${})'.format(OUTPUT_ENV))
    common.add_argument('-v', '--verbose', dest='verbosity', action='count',
                        default=0, help='log progress to standard error')

    parser = argparse.ArgumentParser(
        prog='polybell',
        description='Exact tables, series and identity checks for '
                    'probabilistic degenerate poly-Bell polynomials.')
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    table = commands.add_parser('table', parents=[common],
                                help='coefficient table of a family')
    table.add_argument('--family', required=True, choices=FAMILIES)
    table.add_argument('--n-max', dest='n_max', required=True, type=integer)
    table.add_argument('--lambda', dest='lambda', type=rational)
    table.add_argument('--k', type=integer)
    table.add_argument('--dist', type=distribution)
    table.add_argument('--route', choices=ROUTES, default=GF)

    verify = commands.add_parser('verify', parents=[common],
                                 help='check catalog identities')
    verify.add_argument('--id', dest='identity', required=True,
                        help='catalog id, or "all"')
    grids = verify.add_mutually_exclusive_group()
    grids.add_argument('--grid', help='e.g. "n<=6;l<=10"')
    grids.add_argument('--seed-grid', dest='seed_grid', action='store_true',
                       help='use the fixed default grid of every entry')
    verify.add_argument('--workers', type=integer, default=1)

    series = commands.add_parser('series', parents=[common],
                                 help='EGF coefficients of a series')
    series.add_argument('--name', required=True, choices=SERIES_NAMES)
    series.add_argument('--order', required=True, type=integer)
    series.add_argument('--x', type=exponent, default=1)
    series.add_argument('--lambda', dest='lambda', type=rational)
    series.add_argument('--k', type=integer)
    series.add_argument('--dist', type=distribution)
    series.add_argument('--path', choices=('generic', 'closed'),
                        default='generic')
    return parser


def parse_args(argv=None):
    """Parse and validate the command line into a CliConfig.

    Exits with status 2 on bad arguments, before anything is computed.
    """
    parser = _build_parser()
    args = parser.parse_args(argv)
    values = vars(args)

    if args.command == 'table':
        selector = args.family
        names = ('n_max',)
    elif args.command == 'series':
        selector = args.name
        names = ('order',)
    else:
        selector = args.identity
        names = ('grid',)
    names += _REQUIRED.get(selector, ()) + _OPTIONAL.get(selector, ())
    for name in _REQUIRED.get(selector, ()):
        if values.get(name) is None:
            parser.error('--{} is required for {}'.format(name, selector))
    for name in ('n_max', 'order'):
        if values.get(name) is not None and values[name] < 0:
            parser.error('--{} must be non-negative'.format(
                name.replace('_', '-')))
    if args.command == 'verify' and args.workers < 1:
        parser.error('--workers must be at least 1')

    params = OrderedDict(
        (name, values[name]) for name in names if values[name] is not None)
    return CliConfig(
        command=args.command,
        selector=selector,
        params=params,
        output_format=args.output_format,
        output_path=args.output_path,
        workers=values.get('workers', 1),
        seed_grid=values.get('seed_grid', False),
        verbosity=args.verbosity)


def _param_text(name, value):
    if isinstance(value, Polynomial):
        return 'x'
    if name == 'x':
        return format_rational(value)
    if isinstance(value, (int, str)):
        return value
    if hasattr(value, 'numerator'):
        return format_rational(value)
    return str(value)


def _cells(value, width=None):
    if isinstance(value, Polynomial):
        return value.to_strings(width)
    return [format_rational(v) for v in value]


def _encode_rows(config, head, rows, label):
    """rows is a list of (n, cells); JSON or CSV with header n,c0,c1,..."""
    if config.output_format == 'csv':
        width = max((len(cells) for _, cells in rows), default=1)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(['n'] + ['c{}'.format(i) for i in range(width)])
        for n, cells in rows:
            writer.writerow([n] + cells)
        return buf.getvalue()
    payload = OrderedDict(head)
    payload['params'] = OrderedDict(
        (k, _param_text(k, v)) for k, v in config.params.items())
    payload[label] = [OrderedDict([('n', n), ('coeffs', cells)])
                      for n, cells in rows]
    return json.dumps(payload) + '\n'


def _table_rows(family, p):
    n_max = p['n_max']
    lam = p.get('lambda', 0)
    if family in _TRIANGLES:
        values = stirling_table(_TRIANGLES[family], lam, n_max).values
        return [_cells(row) for row in values]
    if family in ('bell', 'deg-bell'):
        deg = lam if family == 'deg-bell' else None
        return [_cells(bell_poly(n, deg), n + 1) for n in range(n_max + 1)]
    if family in ('prob-stirling2', 'prob-deg-stirling2'):
        if family == 'prob-stirling2':
            lam = 0
        return [_cells(row) for row in
                prob_deg_stirling_table(p['dist'], lam, n_max)]
    if family == 'prob-bell':
        return [_cells(prob_bell(p['dist'], n), n + 1)
                for n in range(n_max + 1)]
    if family == 'prob-deg-bell':
        return [_cells(prob_deg_bell(p['dist'], lam, n), n + 1)
                for n in range(n_max + 1)]
    row = bel_row(p['dist'], lam, p['k'], n_max, p['route'])
    return [_cells(poly, n + 1) for n, poly in enumerate(row)]


def cmd_table(config):
    rows = _table_rows(config.selector, config.params)
    return 0, _encode_rows(config, [('family', config.selector)],
                           list(enumerate(rows)), 'rows')


def _series(name, p):
    order = p['order']
    lam = p.get('lambda', 0)
    if name == 'deg-exp':
        return deg_exp_series(p['x'], lam, order)
    if name == 'deg-log':
        return deg_log_series(lam, order)
    if name == 'deg-mgf':
        if p['path'] == 'closed':
            return deg_mgf_closed(p['dist'], lam, order)
        return deg_mgf_series(p['dist'], lam, order)
    return polyexp_apply(p['k'], lam, Series.variable(order))


def cmd_series(config):
    series = _series(config.selector, config.params)
    symbolic = any(c.degree > 0 for c in series.coeffs)
    rows = []
    for n in range(series.order + 1):
        coeff = egf_coeff(series, n)
        rows.append((n, _cells(coeff, None if symbolic else 1)))
    return 0, _encode_rows(config, [('series', config.selector)], rows,
                           'egf')


def _encode_reports(config, reports):
    if config.output_format == 'csv':
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(['id', 'grid_size', 'passed', 'failures'])
        for r in reports:
            writer.writerow([r.id, r.grid_size, 'true' if r.passed else
                             'false', len(r.failures)])
        return buf.getvalue()
    return ''.join(json.dumps(identities.report_to_json(r)) + '\n'
                   for r in reports)


def cmd_verify(config):
    grid = None if config.seed_grid else config.params.get('grid')
    if config.selector == 'all':
        reports = identities.run_all(grid, config.workers)
    else:
        identities.get_entry(config.selector)
        reports = [identities.verify_identity(
            config.selector, grid, config.workers)]
    failed = [r.id for r in reports if not r.passed]
    if failed:
        logger.warning('identities failed: %s', ', '.join(failed))
    return (1 if failed else 0), _encode_reports(config, reports)


_COMMANDS = {'table': cmd_table, 'verify': cmd_verify, 'series': cmd_series}


def _write(config, text):
    path = os.environ.get(OUTPUT_ENV) or config.output_path
    if path:
        with open(path, 'w', newline='') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    try:
        config = parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    level = (logging.WARNING, logging.INFO)[config.verbosity] \
        if config.verbosity < 2 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        code, text = _COMMANDS[config.command](config)
    except Error as exc:
        print('polybell: error: {}'.format(exc), file=sys.stderr)
        return 2
    try:
        _write(config, text)
    except OSError as exc:
        print('polybell: error: cannot write output: {}'.format(exc),
              file=sys.stderr)
        return 2
    return code
