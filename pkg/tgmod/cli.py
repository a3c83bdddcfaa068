#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

"""Command-line interface."""

import argparse
import json
import logging
import sys

import numpy as np

from . import carleson, distances, hardy, misc, MPI, series, symbols
from . import verify, volterra

commands = ['norm', 'seminorm', 'carleson', 'dist', 'apply', 'tail', 'leibov',
    'report', 'verify', 'ladder']

class UsageError(Exception):
    pass

class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError('%s: %s' % (self.prog, message))

def complex_number(text):
    """Parse complex number given as ``0.5``, ``0.5+0.1j``, or ``[re, im]``."""

    text = text.strip()

    try:
        if text.startswith('['):
            re, im = json.loads(text)
            return complex(re, im)

        return complex(text.replace(' ', ''))

    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError('invalid complex number %r' % text)

def floats(text):
    """Parse list of numbers given as JSON array or comma-separated."""

    text = text.strip()

    try:
        if text.startswith('['):
            return [float(x) for x in json.loads(text)]

        return [float(x) for x in text.split(',') if x.strip()]

    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError('invalid list of numbers %r' % text)

def parameter(text):
    """Parse ``key=value`` pair; values are JSON if possible."""

    if '=' not in text:
        raise argparse.ArgumentTypeError('parameter %r is not key=value' % text)

    key, value = text.split('=', 1)

    try:
        value = json.loads(value)
    except ValueError:
        pass

    return key.strip(), value

def build_symbol(spec, params=()):
    """Create symbol from registry name or JSON record and parameters."""

    spec = spec.strip()

    if spec.startswith('{'):
        if params:
            raise misc.UnsupportedSymbol('--param is not allowed with JSON '
                'records')

        return symbols.record(spec)

    return symbols.record(dict(name=spec, params=dict(params)))

def parser():
    """Create argument parser with one subparser per command."""

    main = Parser(prog='tgmod', description='Volterra operators, Hardy-space '
        'seminorms, Carleson measures, and essential-norm proxies.')

    main.add_argument('--config', help='JSON file with default option values')

    common = Parser(add_help=False)

    common.add_argument('--format', choices=['json', 'csv'], default='json',
        help='output format (default: json)')
    common.add_argument('--out', help='output file (default: standard output)')
    common.add_argument('--progress', action='store_true',
        help='show progress bars on standard error')
    common.add_argument('--verbose', action='store_true',
        help='log status messages on standard error')

    symbol = Parser(add_help=False)

    symbol.add_argument('--symbol', default='identity',
        help='registry name or JSON record {"name": ..., "params": {...}}')
    symbol.add_argument('--param', type=parameter, action='append',
        default=[], help='symbol parameter key=value (repeatable)')

    grid = Parser(add_help=False)

    grid.add_argument('--levels', type=int,
        help='number of radii or arc sizes 2^-j (default: 10; 40 for dist and '
        'report)')
    grid.add_argument('--angles', type=int, default=64,
        help='number of equispaced angles (default: 64)')

    sub = main.add_subparsers(dest='command', parser_class=Parser)
    sub.required = True

    new = dict()

    def add(name, help, *parents):
        new[name] = sub.add_parser(name, help=help,
            parents=[common, symbol] + list(parents))
        return new[name]

    cmd = add('norm', 'H^p norm or Möbius-centered norm')
    cmd.add_argument('--a', type=complex_number,
        help='center a (omit for the plain H^p norm)')
    cmd.add_argument('--p', type=float, default=2.0)
    cmd.add_argument('--samples', type=int, default=hardy.samples)

    cmd = add('seminorm', 'BMOA, logarithmic, or Carleson seminorm', grid)
    cmd.add_argument('--kind', choices=['bmoa', 'lmoa', 'carleson'],
        default='bmoa')
    cmd.add_argument('--p', type=float, default=2.0)
    cmd.add_argument('--samples', type=int, default=hardy.samples)

    cmd = add('carleson', 'Carleson measure of a window')
    cmd.add_argument('--center', type=float, default=0.0,
        help='arc center angle in radians')
    cmd.add_argument('--size', type=float, default=0.5,
        help='normalized arc measure |I|')
    cmd.add_argument('--input',
        help='symbol f for the window energy of T_g f (JSON or name)')

    cmd = add('dist', 'distance proxies to VMOA or LVMOA', grid)
    cmd.add_argument('--space', choices=['vmoa', 'lvmoa'], default='vmoa')
    cmd.add_argument('--p', type=float, default=2.0)

    cmd = add('apply', 'apply T_g to a truncated series')
    cmd.add_argument('--input-coeffs', type=lambda text: json.loads(text),
        help='coefficients of f as JSON list (numbers or [re, im] pairs)')
    cmd.add_argument('--input', help='symbol f (JSON or name)')
    cmd.add_argument('--degree', type=int, default=16)

    cmd = add('tail', 'off-arc tail integral of T_g f_a')
    cmd.add_argument('--a', type=complex_number, required=True)
    cmd.add_argument('--nodes', type=int, default=4096)
    cmd.add_argument('--split', action='store_true',
        help='also integrate over the arc I(a)')
    cmd.add_argument('--bound', action='store_true',
        help='also evaluate the unit-constant tail bound')

    cmd = add('leibov', 'Leibov sequence diagnostics')
    cmd.add_argument('--sizes', type=floats,
        help='decreasing arc sizes (default: 2^-1, ..., 2^-13)')
    cmd.add_argument('--centers', type=floats, help='arc centers (radians)')
    cmd.add_argument('--seminorm', action='store_true',
        help='estimate BMOA seminorms of h_n')
    cmd.add_argument('--energy', action='store_true',
        help='window energies of T_g f_n for the given symbol')

    cmd = add('report', 'essential-norm report', grid)
    cmd.add_argument('--space', default='H2',
        help='H1, H2, Hp (with --p), BMOA, or VMOA')
    cmd.add_argument('--p', type=float)
    cmd.add_argument('--test-function', action='store_true',
        help='add the test-function lower bound (Hardy spaces)')

    cmd = add('verify', 'acceptance checks')
    cmd.add_argument('--suite', default='all',
        help='"all" or comma-separated check names')
    cmd.add_argument('--budget', type=float, help='time limit in seconds')

    cmd = add('ladder', 'radial, lambda-weighted, Carleson, or test-function '
        'ladder', grid)
    cmd.add_argument('--kind', choices=['radial', 'lambda', 'carleson',
        'testfn'], default='radial')
    cmd.add_argument('--p', type=float, default=2.0)

    return main, new

def configure(main, new, filename):
    """Use JSON configuration file as defaults of all subcommands."""

    try:
        with open(filename, encoding='utf-8') as data:
            config = json.load(data)

    except (OSError, ValueError) as error:
        raise UsageError('cannot read configuration: %s' % error)

    if not isinstance(config, dict):
        raise UsageError('configuration must be a JSON object')

    config = dict((key.replace('-', '_'), value)
        for key, value in config.items())

    for cmd in new.values():
        known = set(action.dest for action in cmd._actions)

        cmd.set_defaults(**dict((key, value)
            for key, value in config.items() if key in known))

    everywhere = set()

    for cmd in new.values():
        everywhere.update(action.dest for action in cmd._actions)

    unknown = sorted(set(config) - everywhere)

    if unknown:
        raise UsageError('unknown configuration keys: %s' % ', '.join(unknown))

def parse(argv=None):
    """Parse command line, honoring ``--config``."""

    main, new = parser()

    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument('--config')

    known, _ = pre.parse_known_args(argv)

    if known.config:
        configure(main, new, known.config)

    return main.parse_args(argv)

def norm_table(result):
    data = result.to_dict()

    argmax = data.pop('argmax') or dict(r=None, theta=None)

    data.pop('arc', None)
    data.update(argmax)

    return list(data), [list(data.values())]

def rows_table(rows, header=None):
    if header is None:
        header = list(rows[0]) if rows else []

    return header, [[row.get(key) for key in header] for row in rows]

def run_command(args):
    """Dispatch parsed command.

    Returns
    -------
    object, int
        Result (anything with `to_dict`, a dict, or a list) together with a
        table ``(header, rows)`` for CSV output, and the exit status.
    """
    g = build_symbol(args.symbol, args.param)

    status = 0

    levels = getattr(args, 'levels', None) or 10

    if args.command == 'norm':
        if args.a is None:
            result = hardy.NormResult(hardy.hp_norm(g, args.p,
                samples=args.samples), degree_used=g.degree or 0)
        else:
            result = hardy.mobius_centered_norm(g, args.a, args.p,
                args.samples)

        return result, norm_table(result), status

    if args.command == 'seminorm':
        if args.kind == 'carleson':
            result = carleson.carleson_seminorm(g,
                carleson.default_arcs(g, levels, args.angles))
        else:
            grid = hardy.SeminormGrid.default(g, levels, args.angles,
                args.samples)

            if args.kind == 'bmoa':
                result = hardy.bmoa_seminorm(g, grid, args.p)
            else:
                result = hardy.lmoa_seminorm(g, grid)

        return result, norm_table(result), status

    if args.command == 'carleson':
        I = carleson.Arc(args.center, args.size)

        mu = carleson.mu_window(g, I)

        result = dict(arc=I.to_dict(), mu=mu, ratio=mu / I.measure)

        if args.input:
            f = build_symbol(args.input)
            result['energy_ratio'] = carleson.window_energy_ratio(g, f, I)

        return result, rows_table([result_row(result)]), status

    if args.command == 'dist':
        if args.space == 'vmoa':
            proxy, result = distances.dist_vmoa(g, args.p, args.levels,
                args.angles)
            cross = None
        else:
            proxy, result, cross = distances.dist_lvmoa(g, args.levels,
                args.angles)

        data = dict(space=args.space.upper(), dist_proxy=proxy,
            flag=result.flag, ladder=result.to_dict()['rungs'],
            cross_check=cross)

        return data, (result.header(), list(result.rows())), status

    if args.command == 'apply':
        if args.input is not None:
            f = build_symbol(args.input)
        elif args.input_coeffs is not None:
            f = series.poly(args.input_coeffs)
        else:
            raise UsageError('apply needs --input or --input-coeffs')

        coeffs = volterra.tg_apply(g, f, args.degree)

        data = dict(degree=args.degree, coeffs=coeffs)

        return data, (['k', 're', 'im'], [[k, c.real, c.imag]
            for k, c in enumerate(coeffs)]), status

    if args.command == 'tail':
        result = volterra.offarc_tail_integral(g, args.a, args.nodes)

        data = dict(a=args.a, tail=result.value, resolved=result.resolved,
            nodes=result.samples_used)

        if args.split:
            data['on_arc'], data['off_arc'] = volterra.arc_split(g, args.a,
                args.nodes)

        if args.bound:
            data['bound'] = volterra.tail_bound(g, args.a)

        return data, rows_table([result_row(data)]), status

    if args.command == 'leibov':
        sequence = volterra.leibov_build(args.sizes, args.centers)

        if args.energy:
            rows = sequence.energy(g)
            return rows, rows_table(rows), status

        rows = sequence.diagnostics(seminorm=args.seminorm)

        return rows, rows_table(rows, volterra.columns), status

    if args.command == 'report':
        result = distances.essential_norm_report(g, args.space, args.p,
            args.levels, args.angles, args.test_function)

        return result, (result.ladder.header(),
            list(result.ladder.rows())), status

    if args.command == 'verify':
        result = verify.verify_suite(args.suite, args.budget)

        return result, rows_table([dict(name=check['name'],
            passed=check['passed'], seconds=check['seconds'])
            for check in result['checks']], ['name', 'passed', 'seconds']), \
            0 if result['passed'] else 1

    if args.command == 'ladder':
        if args.kind == 'radial':
            result = distances.radial_ladder(g, args.p, levels,
                args.angles)
        elif args.kind == 'lambda':
            result = distances.radial_ladder(g, 2, levels, args.angles,
                weight='lambda')
        elif args.kind == 'carleson':
            result = carleson.log_carleson_ladder(g,
                2.0 ** -np.arange(1, levels + 1),
                carleson.angle_grid(g, args.angles))
        else:
            result = volterra.testfn_ladder(g, args.p, levels,
                min(args.angles, 16))

        return result, (result.header(), list(result.rows())), status

    raise UsageError('unknown command %r' % args.command)

def result_row(data):
    """Flatten nested dictionaries and complex numbers for CSV rows."""

    row = dict()

    for key, value in data.items():
        if isinstance(value, dict):
            for inner, item in value.items():
                row['%s_%s' % (key, inner)] = item
        elif isinstance(value, complex):
            row[key + '_re'] = value.real
            row[key + '_im'] = value.imag
        else:
            row[key] = value

    return row

def emit(text, out):
    if out:
        misc.write(out, text)
    elif MPI.comm.rank == 0:
        sys.stdout.write(text)
        sys.stdout.flush()

def main(argv=None):
    """Run command line and return exit status.

    Exit status is 0 on success, 1 on computational errors (and failed
    checks), 2 on usage errors, and 3 if the time budget of ``verify`` is
    exceeded.
    """
    try:
        args = parse(argv)

    except UsageError as error:
        sys.stderr.write('%s\n' % error)
        return 2

    logging.basicConfig(level=logging.INFO if args.verbose
        else logging.WARNING, stream=sys.stderr,
        format='%(name)s: %(message)s')

    misc.verbosity(args.progress)

    try:
        result, (header, rows), status = run_command(args)

    except UsageError as error:
        sys.stderr.write('tgmod: %s\n' % error)
        return 2

    except misc.BudgetExceeded as error:
        MPI.info(error.detail, error=True)

        emit(misc.dumps(error.report), args.out)
        return 3

    except misc.Error as error:
        MPI.info('%s: %s' % (error.kind, error.detail), error=True)

        emit(misc.dumps(error.record()), args.out)
        return 1

    if args.format == 'csv':
        emit(misc.csv(header, rows), args.out)
    else:
        emit(misc.dumps(result), args.out)

    return status
