"""
Command line front end.

Every subcommand reads its inputs from JSON files and writes its report to
``--out`` (or stdout). Exit codes: 0 on success, 1 when a check fails or
the input is invalid, 2 on usage errors.
"""
import argparse
import logging
import os
import sys

from . import covers, family, hodge, set_loglevel, simplicial
from . import serialization as ser
from .errors import HDXException
from .fixtures import load_fixtures

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _emit_json(out, data):
    if out:
        ser.write_json(out, data)
    else:
        sys.stdout.write(ser.dumps_json(data))


def _emit_text(out, text):
    if out:
        ser.write_text(out, text)
    else:
        sys.stdout.write(text)


def complex_info(args):
    K = ser.load_facets(args.facets)
    diagnostics = simplicial.validate_complex(K)
    _emit_json(args.out, {
        'vertex_count': K.vertex_count,
        'dim': K.dim,
        'counts': [K.count(l) for l in range(K.dim + 1)],
        'euler_characteristic': simplicial.euler_characteristic(K),
        'vertex_degree_profiles': [
            simplicial.vertex_degree_profile(K, l)
            for l in range(K.dim + 1)
        ],
        'diagnostics': diagnostics,
    })
    return EXIT_FAILED if diagnostics else EXIT_OK


def complex_spectrum(args):
    K = ser.load_facets(args.facets)
    M = hodge.cochain_complex(K)
    report = hodge.spectrum_report(M, args.degree)
    _emit_json(args.out, ser.spectrum_report_to_dict(report))
    return EXIT_FAILED if report.diagnostics else EXIT_OK


def complex_betti(args):
    K = ser.load_facets(args.facets)
    M = hodge.cochain_complex(K)
    _emit_json(args.out, {'betti': hodge.betti_numbers(M)})
    return EXIT_OK


def complex_export(args):
    K = ser.load_facets(args.facets)
    M = hodge.cochain_complex(K)
    _emit_text(args.out, ser.matrix_csv(M.exact_coboundary(args.degree)))
    return EXIT_OK


def _load_pair(args):
    datum = ser.load_gamma(args.gamma)
    action = ser.load_action(args.action)
    return datum, action


def quotient_build(args):
    datum, action = _load_pair(args)
    K = covers.quotient_complex(datum, action, n=args.n)
    _emit_json(args.out, ser.complex_to_dict(K))
    return EXIT_OK


def shapiro_verify(args):
    datum, action = _load_pair(args)
    report = covers.verify_shapiro(datum, action, args.degree)
    if args.out:
        ser.write_json(args.out, ser.exact_report_to_dict(report))
    if report.matrices_equal and report.bijective:
        print('EXACT MATCH')
        return EXIT_OK
    print('MISMATCH: max entry difference %s' % report.max_entry_diff)
    return EXIT_FAILED


def symbol_check(args):
    datum, action = _load_pair(args)
    report = covers.verify_symbol(datum, action, args.degree)
    if args.out:
        ser.write_json(args.out, ser.exact_report_to_dict(report))
    if report.matrices_equal:
        print('EXACT MATCH')
        return EXIT_OK
    print('MISMATCH: max entry difference %s' % report.max_entry_diff)
    return EXIT_FAILED


def family_report(args):
    datum = ser.load_gamma(args.gamma)
    actions = [ser.load_action(path) for path in args.actions]
    diagnostics = covers.validate_gamma_data(datum, actions)
    if diagnostics:
        for msg in diagnostics:
            logger.error(msg)
        return EXIT_FAILED
    report = family.family_report(
        datum, actions, args.n, args.threshold, jobs=args.jobs,
    )
    _emit_json(args.out, ser.family_report_to_dict(report))
    if args.csv:
        ser.write_family_csv(args.csv, report)
    return EXIT_OK


def _fixture_command(module):
    def build(args):
        params = dict(
            (name, getattr(args, name)) for name in module.DEFS['params']
        )
        datum, action = module.build(**params)
        if not os.path.isdir(args.out_dir):
            os.makedirs(args.out_dir)
        ser.dump_gamma(os.path.join(args.out_dir, 'gamma.json'), datum)
        ser.dump_action(os.path.join(args.out_dir, 'action.json'), action)
        return EXIT_OK
    return build


def _positive_int(value):
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError('%s is not a positive integer' % (
            value,
        ))
    return number


def _add_out(parser, help_text='Output file, stdout by default'):
    parser.add_argument('--out', default=None, help=help_text)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='hdx',
        description='Hodge Laplacian spectra of simplicial complexes and '
        'of their covers',
    )
    parser.add_argument(
        '-v', '--verbose', action='store_true', help='Log debug messages'
    )
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    complex_parser = commands.add_parser('complex')
    complex_cmds = complex_parser.add_subparsers(dest='subcommand')
    complex_cmds.required = True
    for name, func, needs_degree in (
        ('info', complex_info, False),
        ('spectrum', complex_spectrum, True),
        ('betti', complex_betti, False),
        ('export', complex_export, True),
    ):
        sub = complex_cmds.add_parser(name)
        sub.add_argument(
            '--facets', required=True, help='JSON file with the facets'
        )
        if needs_degree:
            sub.add_argument('--degree', type=int, required=True)
        _add_out(sub)
        sub.set_defaults(func=func)

    quotient_parser = commands.add_parser('quotient')
    quotient_cmds = quotient_parser.add_subparsers(dest='subcommand')
    quotient_cmds.required = True
    build = quotient_cmds.add_parser('build')
    build.add_argument('--gamma', required=True)
    build.add_argument('--action', required=True)
    build.add_argument('--n', type=int, default=None)
    _add_out(build)
    build.set_defaults(func=quotient_build)

    for group, verb, func in (
        ('shapiro', 'verify', shapiro_verify),
        ('symbol', 'check', symbol_check),
    ):
        group_parser = commands.add_parser(group)
        group_cmds = group_parser.add_subparsers(dest='subcommand')
        group_cmds.required = True
        sub = group_cmds.add_parser(verb)
        sub.add_argument('--gamma', required=True)
        sub.add_argument('--action', required=True)
        sub.add_argument('--degree', type=int, required=True)
        _add_out(sub, 'File for the JSON report')
        sub.set_defaults(func=func)

    family_parser = commands.add_parser('family')
    family_cmds = family_parser.add_subparsers(dest='subcommand')
    family_cmds.required = True
    report = family_cmds.add_parser('report')
    report.add_argument('--gamma', required=True)
    report.add_argument('--actions', nargs='+', required=True)
    report.add_argument('--n', type=_positive_int, required=True)
    report.add_argument('--threshold', type=float, required=True)
    report.add_argument('--csv', default=None, help='Per member CSV rows')
    report.add_argument('--jobs', type=_positive_int, default=1)
    _add_out(report)
    report.set_defaults(func=family_report)

    fixture_parser = commands.add_parser('fixture')
    fixture_cmds = fixture_parser.add_subparsers(dest='subcommand')
    fixture_cmds.required = True
    fixtures = load_fixtures()
    for kind in sorted(fixtures):
        module = fixtures[kind]
        sub = fixture_cmds.add_parser(
            module.DEFS.get('command', kind), help=module.DEFS.get('help'),
        )
        for name, pdef in sorted(module.DEFS['params'].items()):
            sub.add_argument(
                '--' + name,
                type=_positive_int if pdef['ptype'] == 'Integer' else str,
                required=pdef.get('required', False),
            )
        sub.add_argument(
            '--out-dir', default='.',
            help='Directory for gamma.json and action.json',
        )
        sub.set_defaults(func=_fixture_command(module))
    return parser


def cli_dispatch(argv):
    """
    Runs one command.

    :param argv: command line arguments, without the program name
    :return: exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return EXIT_OK if not error.code else EXIT_USAGE

    logging.basicConfig(
        stream=sys.stderr,
        format='%(levelname)s:%(name)s:%(message)s',
    )
    set_loglevel(logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except HDXException as error:
        logger.error('%s', error)
        return EXIT_FAILED
    except (IOError, OSError) as error:
        logger.error('%s', error)
        return EXIT_FAILED


def main():
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == '__main__':
    main()
