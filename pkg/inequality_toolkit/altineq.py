#!/usr/bin/env python
u"""
altineq.py (10/2026)
Numerical checks of the alternating Hölder, Cauchy and Minkowski
    inequalities, their sharp constants and the alternating series identities

CALLING SEQUENCE:
    altineq verify --functional minkowski_alt --trials 100000 --p 2
    altineq constants --box 1,2,1,2 --p 2
    altineq constants --quotient 1,3
    altineq sharpness minkowski_eps_b --p 2 --grid 10,100,1000 --out eps_b
    altineq search --functional minkowski_alt --p 2 --n 6 --seed 7
    altineq series eta --s 2

COMMAND LINE OPTIONS:
    --seed X: master seed (unsigned 64-bit integer)
    -O X, --out X: output file (JSON to stdout if not given)
    --tol X: relative comparison tolerance overriding tol_cmp
    -F X, --format X: report format (json, csv, text)
    -C X, --config X: altineqrc file overriding the packaged defaults
    -V, --verbose: verbose output of run

    verify:
        --functional X: campaign functionals
        --trials X: number of trials per functional
        --n-range X: inclusive range of sequence lengths (lo,hi)
        --box-range X: range of box bounds (lo,hi)
        --p X: comma-separated exponents (rationals such as 3/2 accepted)
        --unstructured: draw Cauchy pairs without monotone quotients
    constants:
        --box X: bounds a,A,b,B
        --p X: exponent
        --quotient X: quotient bounds m,M
    sharpness:
        family: witness family
        --grid X: comma-separated family parameters
        --p X: exponent
        --n X: even length of the holder_zero witness
        --b-tail X: fixed b_(2n) of the holder_blowup family
        --pairs X: pairs of the holder_blowup family
    search:
        --functional X: ratio functional
        --direction X: maximize or minimize
        --n X: sequence length
        --p X: exponent
        --a-box X: bounds of a (lo,hi)
        --b-box X: bounds of b or of the quotient a/b (lo,hi)
        --restarts X: number of seeded starts
        --step-init X: initial compass step
        --step-min X: smallest compass step
        --max-evals X: evaluation budget per restart
        --r X, --R X: exponents of power_ratio
    series:
        mode: eta, zeta, F_scan, harmonic or geometric
        --s X: argument of eta and zeta
        --alpha X, --beta X: arguments of the harmonic check
        --a X, --b X: bases of the geometric check
        --p X: exponent
        --grid X: F scan grid (start:stop:step or comma-separated)
        --p-list X: comma-separated exponents of the F scan

EXIT STATUS:
    0: all checks pass
    1: mathematical violation found
    2: usage error
    3: degenerate input

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org

PROGRAM DEPENDENCIES:
    campaigns.py: report builders of each subcommand
    extremal.py: multi-start extremal search
    utilities.py: configuration, parsers and report writers

UPDATE HISTORY:
    Written 10/2026
"""
from __future__ import annotations

import sys
import csv
import logging
import argparse
import inequality_toolkit.utilities
import inequality_toolkit.campaigns as campaigns
from inequality_toolkit.extremal import SearchConfig, FUNCTIONALS, DIRECTIONS
from inequality_toolkit.utilities import (parse_fraction, parse_list,
    parse_range, DegenerateDenominator, NonPositiveInnerSum)

def _pair(value: str):
    values = parse_list(value)
    if (len(values) != 2):
        raise argparse.ArgumentTypeError(f'Expected two values, got {value}')
    return tuple(values)

def _grid(value: str):
    return parse_range(value) if (':' in value) else parse_list(value)

# PURPOSE: create argument parser
def arguments():
    parser = argparse.ArgumentParser(
        description="""Numerical checks of the alternating Hölder, Cauchy
            and Minkowski inequalities and their sharp constants
            """
    )
    # options shared by all subcommands
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed',
        type=int, default=0,
        help='Master seed (unsigned 64-bit integer)')
    common.add_argument('--out', '-O',
        type=str, default=None,
        help='Output file')
    common.add_argument('--tol',
        type=parse_fraction, default=None,
        help='Relative comparison tolerance')
    common.add_argument('--format', '-F',
        type=str, default='json', choices=('json','csv','text'),
        help='Report format')
    common.add_argument('--config', '-C',
        type=str, default=None,
        help='altineqrc file overriding the packaged defaults')
    common.add_argument('--verbose', '-V',
        default=False, action='store_true',
        help='Verbose output of run')
    subparsers = parser.add_subparsers(dest='command', required=True)
    # verification campaigns
    verify = subparsers.add_parser('verify', parents=[common],
        help='Seeded verification campaigns')
    verify.add_argument('--functional',
        type=str, nargs='+', default=['minkowski_alt'],
        choices=sorted(campaigns.CAMPAIGNS.keys()),
        help='Campaign functionals')
    verify.add_argument('--trials',
        type=int, default=1000,
        help='Number of trials per functional')
    verify.add_argument('--n-range',
        type=_pair, default=(2, 64),
        help='Inclusive range of sequence lengths')
    verify.add_argument('--box-range',
        type=_pair, default=(0.1, 10.0),
        help='Range of box bounds')
    verify.add_argument('--p',
        type=parse_list, default=None,
        help='Comma-separated exponents')
    verify.add_argument('--unstructured',
        default=False, action='store_true',
        help='Draw Cauchy pairs without monotone quotients')
    # sharp constants
    constants = subparsers.add_parser('constants', parents=[common],
        help='Sharp constants of a box')
    constants.add_argument('--box',
        type=parse_list, default=None,
        help='Bounds a,A,b,B')
    constants.add_argument('--p',
        type=parse_fraction, default=None,
        help='Exponent')
    constants.add_argument('--quotient',
        type=_pair, default=None,
        help='Quotient bounds m,M')
    # witness-family traces
    sharpness = subparsers.add_parser('sharpness', parents=[common],
        help='Witness-family sharpness traces')
    sharpness.add_argument('family',
        type=str, choices=campaigns.FAMILIES,
        help='Witness family')
    sharpness.add_argument('--grid',
        type=parse_list, default=None,
        help='Comma-separated family parameters')
    sharpness.add_argument('--p',
        type=parse_fraction, default=2.0,
        help='Exponent')
    sharpness.add_argument('--n',
        type=int, default=4,
        help='Even length of the holder_zero witness')
    sharpness.add_argument('--b-tail',
        type=parse_fraction, default=1.0,
        help='Fixed b_(2n) of the holder_blowup family')
    sharpness.add_argument('--pairs',
        type=int, default=1,
        help='Pairs of the holder_blowup family')
    # extremal search
    search = subparsers.add_parser('search', parents=[common],
        help='Multi-start extremal search')
    search.add_argument('--functional',
        type=str, required=True, choices=FUNCTIONALS,
        help='Ratio functional')
    search.add_argument('--direction',
        type=str, default='maximize', choices=DIRECTIONS,
        help='Search direction')
    search.add_argument('--n',
        type=int, default=6,
        help='Sequence length')
    search.add_argument('--p',
        type=parse_fraction, default=2.0,
        help='Exponent')
    search.add_argument('--a-box',
        type=_pair, default=None,
        help='Bounds of a')
    search.add_argument('--b-box',
        type=_pair, default=None,
        help='Bounds of b (of a/b for cauchy)')
    search.add_argument('--restarts',
        type=int, default=64,
        help='Number of seeded starts')
    search.add_argument('--step-init',
        type=float, default=0.25,
        help='Initial compass step')
    search.add_argument('--step-min',
        type=float, default=1e-8,
        help='Smallest compass step')
    search.add_argument('--max-evals',
        type=int, default=5000,
        help='Evaluation budget per restart')
    search.add_argument('--r',
        type=int, default=1,
        help='Lower exponent of power_ratio')
    search.add_argument('--R',
        type=int, default=2,
        help='Upper exponent of power_ratio')
    # alternating series
    series = subparsers.add_parser('series', parents=[common],
        help='Alternating series identities')
    series.add_argument('mode',
        type=str, choices=campaigns.SERIES_MODES,
        help='Series mode')
    series.add_argument('--s',
        type=parse_fraction, default=None,
        help='Argument of eta and zeta')
    series.add_argument('--alpha',
        type=parse_fraction, default=None,
        help='First argument of the harmonic check')
    series.add_argument('--beta',
        type=parse_fraction, default=None,
        help='Second argument of the harmonic check')
    series.add_argument('--a',
        type=parse_fraction, default=None,
        help='First base of the geometric check')
    series.add_argument('--b',
        type=parse_fraction, default=None,
        help='Second base of the geometric check')
    series.add_argument('--p',
        type=parse_fraction, default=2.0,
        help='Exponent')
    series.add_argument('--grid',
        type=_grid, default=None,
        help='F scan grid')
    series.add_argument('--p-list',
        type=parse_list, default=None,
        help='Comma-separated exponents of the F scan')
    # return the parser
    return parser

# PURPOSE: dispatch a parsed command line to its report builder
def run(args):
    if (args.command == 'verify'):
        return campaigns.cmd_verify(args.functional, args.trials,
            seed=args.seed, n_range=tuple(int(v) for v in args.n_range),
            box_range=args.box_range, p_list=args.p, tol=args.tol,
            structured=not args.unstructured)
    elif (args.command == 'constants'):
        return campaigns.cmd_constants(box=args.box, p=args.p,
            quotient=args.quotient)
    elif (args.command == 'sharpness'):
        return campaigns.cmd_sharpness(args.family, grid=args.grid,
            p=args.p, n=args.n, b_tail=args.b_tail, pairs=args.pairs)
    elif (args.command == 'search'):
        config = SearchConfig(args.functional, direction=args.direction,
            n=args.n, p=args.p, a_box=args.a_box, b_box=args.b_box,
            restarts=args.restarts, seed=args.seed,
            step_init=args.step_init, step_min=args.step_min,
            max_evals=args.max_evals, r=args.r, R=args.R)
        return campaigns.cmd_search(config)
    return campaigns.cmd_series(args.mode, s=args.s, alpha=args.alpha,
        beta=args.beta, p=args.p, a=args.a, b=args.b, grid=args.grid,
        p_list=args.p_list)

# PURPOSE: CSV header of each subcommand
def _header(args):
    if (args.command == 'verify'):
        return campaigns.VERIFY_HEADER
    elif (args.command == 'constants'):
        return ['name', 'value']
    elif (args.command == 'sharpness') and (args.family != 'holder_zero'):
        return campaigns.TRACE_HEADER
    elif (args.command == 'series') and (args.mode == 'F_scan'):
        return campaigns.F_SCAN_HEADER
    elif (args.command == 'series') and (args.mode == 'eta'):
        return ['s', 'value', 'est_error', 'terms_used']
    elif (args.command == 'series') and (args.mode == 'zeta'):
        return ['s', 'value']
    elif (args.command == 'series'):
        return ['ratio', 'bound', 'slack', 'holds', 'equality']
    return ['k', 'a', 'b']

# PURPOSE: write the report in the requested format
def emit(args, report: dict, rows: list):
    utilities = inequality_toolkit.utilities
    manifest = report['manifest']
    header = _header(args)
    out = utilities.output_path(args.out) if args.out else None
    if out and (args.format == 'csv'):
        manifest.outputs.append(str(out))
        utilities.write_csv(out, header, rows)
    elif out and (args.command == 'sharpness'):
        # sharpness writes the trace as CSV beside the JSON report
        csv_file = out.with_suffix('.csv')
        json_file = out.with_suffix('.json')
        manifest.outputs.extend([str(csv_file), str(json_file)])
        utilities.write_csv(csv_file, header, rows)
        utilities.write_json(json_file, report)
    elif out:
        manifest.outputs.append(str(out))
        utilities.write_json(out, report)
    elif (args.format == 'csv'):
        writer = csv.writer(sys.stdout, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([utilities.format_float(v) if isinstance(v, float)
                else v for v in row])
    elif (args.format == 'text'):
        for row in rows:
            print(' '.join(str(v) for v in row))
    else:
        print(utilities.dumps(report))

# main program that calls the subcommands
def main(argv: list | None = None):
    # Read the system arguments listed after the program
    parser = arguments()
    args = parser.parse_args(argv)
    # create logger
    loglevel = logging.INFO if args.verbose else logging.CRITICAL
    logging.basicConfig(level=loglevel)
    # reload defaults from the user configuration and tolerance override
    inequality_toolkit.utilities.configure(args.config, tol_cmp=args.tol)
    try:
        status, report, rows = run(args)
    except (DegenerateDenominator, NonPositiveInnerSum) as exc:
        logging.critical(f'Degenerate input: {exc}')
        print(f'altineq: degenerate input: {exc}', file=sys.stderr)
        return campaigns.EXIT_DEGENERATE
    except ValueError as exc:
        print(f'altineq: error: {exc}', file=sys.stderr)
        return campaigns.EXIT_USAGE
    emit(args, report, rows)
    return status

# run main program
if __name__ == '__main__':
    sys.exit(main())
