"""
Command-line interface: ``polyquant <subcommand> [options]``.

Every subcommand writes a single document (JSON, CSV, plain text or SVG)
to stdout or to ``--out``. Exit status is 0 on success, 1 when
``validate`` finds a failing check and 2 on usage errors.
"""

from collections import OrderedDict, namedtuple

import argparse
import json
import logging
import sys

import pandas as pd

from .coefficient import (circle_coefficient, coefficient_gap,
                          quant_coefficient)
from .common import (DEFAULT_NODES, DEFAULT_SEED, DEFAULT_SVG_SIZE,
                     DEFAULT_TOL, LLOYD_MAX_ITER, check_positive,
                     check_positive_int, check_sides)
from .core import sweep_frame, validate
from .geometry import RegularPolygon
from .oracle import LLOYD_INITS, lloyd_solve, voronoi_cells_on_boundary
from .polygon import optimal_error, optimal_mk_set
from .render import render_svg
from .util.records import ordered_record, quantize_recs, sweep_recs

logger = logging.getLogger(__name__)

PROG = 'polyquant'

#: Output formats understood by ``--format``
FORMATS = ('json', 'csv', 'text')

#: Output format used when ``--format`` is not given
DEFAULT_FORMATS = {'coefficient': 'text', 'sweep': 'csv'}

#: Significant digits of plain-text numbers
TEXT_DIGITS = 15

#: Parsed command line
CliConfig = namedtuple('CliConfig', [
    'subcommand', 'm', 'k', 'n', 'format', 'out', 'tol', 'nodes', 'seed',
    'svg', 'svg_size', 'sides_range', 'k_range', 'limit', 'init', 'max_iter',
    'verbose',
])


class UsageError(Exception):
    """ Malformed command line. """


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError(message)


def _int_range(text):
    """ Parse an inclusive integer range "A:B". """
    try:
        lo, hi = (int(part) for part in text.split(':'))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected an integer range A:B (got {!r})".format(text))
    if hi < lo:
        raise argparse.ArgumentTypeError(
            "empty range {!r}".format(text))
    return list(range(lo, hi + 1))


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument('--sides', dest='m', type=int,
                        help="Number of polygon sides m (>= 3)")
    common.add_argument('--k', type=int,
                        help="Means per corner-plus-side group (n = m*k)")
    common.add_argument('--n', type=int, help="Total number of means")
    common.add_argument('--format', choices=FORMATS,
                        help="Output format (default depends on the "
                             "subcommand)")
    common.add_argument('--out', help="Write output here instead of stdout")
    common.add_argument('--tol', type=float, default=DEFAULT_TOL,
                        help="Agreement / convergence tolerance")
    common.add_argument('--nodes', type=int, default=DEFAULT_NODES,
                        help="Gauss-Legendre nodes per boundary arc")
    common.add_argument('--seed', type=int, default=DEFAULT_SEED,
                        help="Seed for randomized initializations")
    common.add_argument('--svg', help="Also write an SVG picture here")
    common.add_argument('--svg-size', type=int, default=DEFAULT_SVG_SIZE,
                        help="Edge length of SVG pictures in pixels")
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help="Log progress to stderr (repeat for debug)")

    parser = _Parser(prog=PROG,
                     description="Optimal quantizers for uniform "
                                 "distributions on regular polygon "
                                 "boundaries")
    sub = parser.add_subparsers(dest='subcommand')

    sub.add_parser('quantize', parents=[common],
                   help="Emit the optimal set of n = m*k means")
    sub.add_parser('error', parents=[common],
                   help="Emit the exact quantization error")
    p_coeff = sub.add_parser('coefficient', parents=[common],
                             help="Emit the quantization coefficient")
    p_coeff.add_argument('--limit', action='store_true',
                         help="Also print pi^2/3 and the gap to it")
    p_sweep = sub.add_parser('sweep', parents=[common],
                             help="Tabulate n^2 V_n over ranges of m and k")
    p_sweep.add_argument('--sides-range', type=_int_range,
                         help="Inclusive range of m, e.g. 3:12")
    p_sweep.add_argument('--k-range', type=_int_range,
                         help="Inclusive range of k, e.g. 1:10")
    p_lloyd = sub.add_parser('lloyd', parents=[common],
                             help="Run Lloyd's algorithm on the boundary")
    p_lloyd.add_argument('--init', choices=LLOYD_INITS, default='random',
                         help="Starting configuration")
    p_lloyd.add_argument('--max-iter', type=int, default=LLOYD_MAX_ITER,
                         help="Iteration cap")
    sub.add_parser('validate', parents=[common],
                   help="Check the closed forms against the numerical "
                        "oracle")
    sub.add_parser('render', parents=[common],
                   help="Draw the optimal set as SVG")
    return parser


def parse_config(argv):
    """ Parse `argv` into a :class:`CliConfig`.

    Raises
    ------
    UsageError
        On unknown flags, malformed numbers or a missing subcommand.

    """
    args = build_parser().parse_args(argv)
    if args.subcommand is None:
        raise UsageError("a subcommand is required")
    fmt = args.format or DEFAULT_FORMATS.get(args.subcommand, 'json')
    return CliConfig(
        subcommand=args.subcommand, m=args.m, k=args.k, n=args.n, format=fmt,
        out=args.out, tol=args.tol, nodes=args.nodes, seed=args.seed,
        svg=args.svg, svg_size=args.svg_size,
        sides_range=getattr(args, 'sides_range', None),
        k_range=getattr(args, 'k_range', None),
        limit=getattr(args, 'limit', False),
        init=getattr(args, 'init', None),
        max_iter=getattr(args, 'max_iter', None),
        verbose=args.verbose,
    )


def _require_sides(cfg):
    if cfg.m is None:
        raise ValueError("--sides is required for '{}'"
                         .format(cfg.subcommand))
    return check_sides(cfg.m)


def _resolve_k(cfg):
    """ k from --k, or from --n when n is a multiple of m. """
    m = _require_sides(cfg)
    if cfg.k is None and cfg.n is None:
        raise ValueError("one of --k or --n is required for '{}'"
                         .format(cfg.subcommand))
    if cfg.k is not None:
        k = check_positive_int('k', cfg.k)
        if cfg.n is not None and cfg.n != m*k:
            raise ValueError("--n {} does not equal m*k = {}"
                             .format(cfg.n, m*k))
        return k
    n = check_positive_int('n', cfg.n)
    if n % m:
        raise ValueError("--n must be a multiple of m (got m={}, n={})"
                         .format(m, n))
    return n//m


def _text_number(value):
    """ Shortest repr of `value` rounded to TEXT_DIGITS significant
    digits. """
    return repr(float('{:.{}g}'.format(value, TEXT_DIGITS)))


def _dumps(doc):
    return json.dumps(doc, indent=2) + "\n"


def _csv(df):
    return df.to_csv(index=False, float_format="%.17g")


def _unsupported(cfg):
    return ValueError("--format {} is not available for '{}'"
                      .format(cfg.format, cfg.subcommand))


def _write_svg(cfg, p, q, cells=None):
    if cells is None:
        cells = voronoi_cells_on_boundary(p, q)
    svg = render_svg(p, q, cells, size=cfg.svg_size)
    with open(cfg.svg, 'w') as f:
        f.write(svg)
    logger.info("wrote %s", cfg.svg)


def cmd_quantize(cfg):
    k = _resolve_k(cfg)
    q = optimal_mk_set(cfg.m, k)
    if cfg.svg:
        _write_svg(cfg, RegularPolygon(cfg.m), q)
    if cfg.format == 'json':
        doc = ordered_record(quantize_recs, dict(
            m=q.m, k=q.k, n=q.n, r=q.r,
            coefficient=quant_coefficient(q.m),
            V=optimal_error(q.m, k).total,
            points=q.to_dict()['points'],
        ))
        return _dumps(doc), 0
    if cfg.format == 'csv':
        return _csv(pd.DataFrame(q.coords, columns=['x', 'y'])), 0
    raise _unsupported(cfg)


def cmd_error(cfg):
    k = _resolve_k(cfg)
    doc = optimal_error(cfg.m, k).to_dict()
    if cfg.format == 'json':
        return _dumps(doc), 0
    if cfg.format == 'csv':
        return _csv(pd.DataFrame([doc])), 0
    raise _unsupported(cfg)


def cmd_coefficient(cfg):
    m = _require_sides(cfg)
    doc = OrderedDict([('m', m), ('coefficient', quant_coefficient(m))])
    if cfg.limit:
        doc['circle'] = circle_coefficient()
        doc['gap'] = coefficient_gap(m)
    if cfg.format == 'text':
        if not cfg.limit:
            return _text_number(doc['coefficient']) + "\n", 0
        return "".join("{}: {}\n".format(key, _text_number(doc[key]))
                       for key in ('coefficient', 'circle', 'gap')), 0
    if cfg.format == 'json':
        return _dumps(doc), 0
    return _csv(pd.DataFrame([doc])), 0


def cmd_sweep(cfg):
    if cfg.sides_range is not None:
        sides = cfg.sides_range
    else:
        sides = [_require_sides(cfg)]
    if cfg.k_range is not None:
        ks = cfg.k_range
    elif cfg.k is not None:
        ks = [cfg.k]
    else:
        raise ValueError("one of --k-range or --k is required for 'sweep'")
    df = sweep_frame(sides, ks)
    if cfg.format == 'csv':
        return _csv(df), 0
    if cfg.format == 'json':
        rows = [ordered_record(sweep_recs, {rec.name: rec.type(row[rec.name])
                                            for rec in sweep_recs})
                for row in df.to_dict('records')]
        return _dumps(rows), 0
    raise _unsupported(cfg)


def cmd_lloyd(cfg):
    m = _require_sides(cfg)
    if cfg.n is not None:
        n = check_positive_int('n', cfg.n)
    elif cfg.k is not None:
        n = m*check_positive_int('k', cfg.k)
    else:
        raise ValueError("one of --n or --k is required for 'lloyd'")
    p = RegularPolygon(m)
    state = lloyd_solve(p, n, init=cfg.init, tol=cfg.tol,
                        max_iter=cfg.max_iter, seed=cfg.seed,
                        nodes=cfg.nodes)
    if cfg.svg:
        _write_svg(cfg, p, state.points)
    if cfg.format == 'json':
        return _dumps(state.to_dict()), 0
    if cfg.format == 'csv':
        return _csv(pd.DataFrame(state.points.coords, columns=['x', 'y'])), 0
    raise _unsupported(cfg)


def cmd_validate(cfg):
    k = _resolve_k(cfg)
    df = validate(cfg.m, k, tol=cfg.tol, nodes=cfg.nodes, seed=cfg.seed)
    status = 0 if df['passed'].all() else 1
    if cfg.format == 'csv':
        return _csv(df), status
    if cfg.format == 'json':
        doc = OrderedDict([
            ('m', cfg.m), ('k', k), ('passed', bool(status == 0)),
            ('checks', [OrderedDict(
                (key, row[key].item() if hasattr(row[key], 'item')
                 else row[key]) for key in df.columns)
                for _, row in df.iterrows()]),
        ])
        return _dumps(doc), status
    raise _unsupported(cfg)


def cmd_render(cfg):
    k = _resolve_k(cfg)
    p = RegularPolygon(cfg.m)
    q = optimal_mk_set(cfg.m, k)
    cells = voronoi_cells_on_boundary(p, q)
    svg = render_svg(p, q, cells, size=cfg.svg_size)
    if cfg.svg:
        with open(cfg.svg, 'w') as f:
            f.write(svg)
        return "", 0
    return svg, 0


COMMANDS = {
    'quantize': cmd_quantize,
    'error': cmd_error,
    'coefficient': cmd_coefficient,
    'sweep': cmd_sweep,
    'lloyd': cmd_lloyd,
    'validate': cmd_validate,
    'render': cmd_render,
}


def run(argv, stdout=None, stderr=None):
    """ Execute one command line and return its exit status. """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        cfg = parse_config(argv)
        if cfg.verbose:
            logging.basicConfig(
                stream=stderr,
                level=logging.DEBUG if cfg.verbose > 1 else logging.INFO,
                format="%(name)s: %(levelname)s: %(message)s")
        check_positive('tol', cfg.tol)
        text, status = COMMANDS[cfg.subcommand](cfg)
    except (UsageError, ValueError) as err:
        stderr.write("{}: error: {}\n".format(PROG, err))
        return 2

    if cfg.out:
        with open(cfg.out, 'w') as f:
            f.write(text)
    else:
        stdout.write(text)
    return status


def main(argv=None):
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == '__main__':
    sys.exit(main())
