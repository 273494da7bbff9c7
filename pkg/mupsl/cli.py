#!/usr/bin/env python
# encoding: utf-8
#
# Copyright SAS Institute
#
#  Licensed under the Apache License, Version 2.0 (the License);
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
#

"""
Command line front end
"""

import argparse
import sys
from collections import OrderedDict

import mupsl
from mupsl.audit import (
    NUMBERED_CHECKS, check_names, numbered_check, run_all, run_checks)
from mupsl.catalog import catalog_frame, get_group
from mupsl.exceptions import BudgetExceeded, CapExceeded, DomainError
from mupsl.interface import (
    document_to_text, format_reports, read_group_file)
from mupsl.interface.format.report_format import frame_to_tsv
from mupsl.lie import LieFamily, as_family, factorize
from mupsl.libs import pd
from mupsl.mu import mu_decomposition, mu_profile, order_from_mu
from mupsl.psl2 import (
    brute_vs_analytic, element_order_census_analytic, identify_psl2,
    mu_profile_analytic, psl2_order)
from mupsl.util.package_utils import (
    format_rational, is_prime_power, note, parse_rational,
    require_prime_power)


EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--cap', type=int, default=None,
        help='Largest group order enumerated element by element')
    common.add_argument(
        '--format', choices=('json', 'tsv'), default=None,
        dest='output_format', help='Output format (default: json)')
    common.add_argument(
        '--q0-max', type=int, default=None, dest='q0_max',
        help='Replay Lie-type audits for every prime power q0 up to this')
    return common


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog='mupsl',
        description='Exact mu-profiles of finite groups and the PSL(2,q) '
                    'characterization audit')
    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(mupsl.__version__))
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    mu_parser = subparsers.add_parser(
        'mu', parents=[common], help='Compute the mu-profile of a group')
    mu_parser.add_argument('group_file', nargs='?', default=None,
                           help='Group file with degree and cycle lines')
    mu_parser.add_argument('--group', default=None,
                           help='Catalog group name, such as A5')

    psl2_parser = subparsers.add_parser(
        'psl2', parents=[common],
        help='Analytic census and mu-profile of PSL(2,q)')
    psl2_parser.add_argument('q', help='Prime power q, or a range A..B')
    psl2_parser.add_argument('--brute', action='store_true',
                             help='Also enumerate the group and compare')

    lie_parser = subparsers.add_parser(
        'lie-order', parents=[common],
        help='Cyclotomic factorization of a Lie-type group order')
    lie_parser.add_argument('label', nargs='?', default=None,
                            help='Family label such as PSU(3) or G2')
    lie_parser.add_argument('--family', default=None)
    lie_parser.add_argument('--n', type=int, default=None,
                            help='Rank parameter of a classical family')
    lie_parser.add_argument('--q0', type=int, required=True)

    identify_parser = subparsers.add_parser(
        'identify', parents=[common],
        help='Find the PSL(2,q) with a given mu value set')
    identify_parser.add_argument('values', nargs='+',
                                 help='Rationals written as num/den')

    audit_parser = subparsers.add_parser(
        'audit', parents=[common],
        help='Replay the arithmetic of the characterization')
    audit_parser.add_argument('--all', action='store_true', dest='run_all',
                              help='Run every check and family sweep')
    audit_parser.add_argument(
        '--subcase', action='append', default=[], metavar='TAG',
        help='Sweep the order comparisons of a Lie family tag or case number')
    audit_parser.add_argument(
        '--check', action='append', default=[], metavar='NAME',
        help='Run a named check: {}'.format(', '.join(check_names())))
    audit_parser.add_argument(
        '--lemma', action='append', default=[], metavar='NUMBER',
        help='Run the check behind a numbered lemma: {}'.format(
            ', '.join(sorted(NUMBERED_CHECKS))))
    audit_parser.add_argument('--n-max', type=int, default=None,
                              dest='n_max',
                              help='Upper end of the factorial sweep')

    subparsers.add_parser('catalog', parents=[common],
                          help='List the built-in groups')
    return parser


def _apply_options(args, overridden):
    overrides = OrderedDict()
    if args.cap is not None:
        overrides['enumeration_cap'] = args.cap
    if args.output_format is not None:
        overrides['output_format'] = args.output_format
    if args.q0_max is not None:
        q0_range = tuple(q for q in range(2, args.q0_max + 1)
                         if is_prime_power(q))
        overrides['q0_range'] = q0_range
    for key, value in overrides.items():
        mupsl.config[key] = value
        overridden.append(key)


def _emit(text):
    sys.stdout.write(text if text.endswith('\n') else text + '\n')


def _load_group(args):
    if args.group is not None:
        return get_group(args.group)
    if args.group_file is None:
        raise DomainError('Give a group file or --group NAME')
    return read_group_file(args.group_file)


def cmd_mu(args):
    """
    Prints the order, prime spectrum, mu table and the t/|R| decompositions
    """
    G = _load_group(args)
    profile = mu_profile(G)
    decompositions = [mu_decomposition(G, r) for r in profile]
    if mupsl.config['output_format'] == 'tsv':
        records = [(d.prime, format_rational(d.value), d.t, d.sylow_order)
                   for d in decompositions]
        frame = pd.records_to_frame(
            records, columns=['prime', 'mu', 't', 'sylow_order'])
        _emit(frame_to_tsv(frame))
        return EXIT_OK
    document = OrderedDict()
    document['group'] = str(G)
    document['order'] = G.order()
    document['primes'] = profile.primes()
    document['mu'] = profile
    document['decompositions'] = decompositions
    document['order_from_mu'] = order_from_mu(profile.value_set())
    _emit(document_to_text(document, 'json'))
    return EXIT_OK


def _parse_q_values(text):
    if '..' in text:
        low, high = (int(part) for part in text.split('..', 1))
        if low > high:
            raise DomainError('Empty range of q: {}'.format(text))
        return [q for q in range(max(low, 4), high + 1) if is_prime_power(q)]
    q = int(text)
    require_prime_power(q)
    if q < 4:
        raise DomainError('PSL(2,q) is simple for q >= 4 only, got {}'.format(
            q))
    return [q]


def _psl2_document(q, brute):
    document = OrderedDict()
    document['q'] = q
    document['order'] = psl2_order(q)
    document['census'] = element_order_census_analytic(q)
    document['mu'] = mu_profile_analytic(q)
    if brute is not None:
        document['brute'] = brute
    return document


def cmd_psl2(args):
    """
    Prints the analytic census and mu-profile of PSL(2,q), and with
    ``--brute`` the comparison with the enumerated group
    """
    qs = _parse_q_values(args.q)
    reports = [brute_vs_analytic(q) for q in qs] if args.brute else []
    status = EXIT_FAIL if any(r.failed for r in reports) else EXIT_OK
    if mupsl.config['output_format'] == 'tsv':
        records = []
        for q in qs:
            census = element_order_census_analytic(q)
            records.extend((q, d, c) for d, c in census.counts.items())
        frame = pd.records_to_frame(records, columns=['q', 'order', 'count'])
        _emit(frame_to_tsv(frame))
        if reports:
            _emit(format_reports(reports, 'tsv'))
        return status
    documents = [_psl2_document(q, reports[i] if reports else None)
                 for i, q in enumerate(qs)]
    if len(documents) == 1:
        _emit(document_to_text(documents[0], 'json'))
    else:
        _emit(document_to_text(OrderedDict([('psl2', documents)]), 'json'))
    return status


def _family(args):
    if args.family is not None:
        return LieFamily(args.family, args.n)
    if args.label is None:
        raise DomainError('Give a family label or --family')
    if args.n is not None:
        return LieFamily(args.label, args.n)
    return as_family(args.label)


def cmd_lie_order(args):
    """
    Prints the factored order d, h, (m, Phi_m(q0), e) and the integer order
    """
    factorization = factorize(_family(args), args.q0)
    _emit(document_to_text(factorization.to_json(),
                           mupsl.config['output_format']))
    return EXIT_OK


def cmd_identify(args):
    values = [parse_rational(v) for v in args.values]
    found = identify_psl2(values)
    document = OrderedDict()
    document['values'] = values
    document['identified'] = list(found) if found else 'none'
    _emit(document_to_text(document, mupsl.config['output_format']))
    return EXIT_OK


def cmd_audit(args):
    """
    Runs the selected checks and prints their reports

    The status is 1 when any executed check fails; survivors and vacuous
    checks do not fail the run.
    """
    q0_range = mupsl.config['q0_range'] if args.q0_max is not None else None
    if args.run_all:
        reports = run_all(n_max=args.n_max, q0_range=q0_range)
    elif args.check or args.subcase or args.lemma:
        checks = args.check + [numbered_check(n) for n in args.lemma]
        reports = run_checks(checks, args.subcase, n_max=args.n_max,
                             q0_range=q0_range)
    else:
        raise DomainError(
            'Select checks with --all, --check, --lemma or --subcase')
    failures = [r for r in reports if r.failed]
    note('{} checks run, {} failed'.format(len(reports), len(failures)), 3)
    _emit(format_reports(reports, mupsl.config['output_format']))
    return EXIT_FAIL if failures else EXIT_OK


def cmd_catalog(args):
    frame = catalog_frame()
    if mupsl.config['output_format'] == 'tsv':
        _emit(frame_to_tsv(frame))
    else:
        _emit(frame.to_json(orient='records', indent=2))
    return EXIT_OK


COMMANDS = {
    'mu': cmd_mu,
    'psl2': cmd_psl2,
    'lie-order': cmd_lie_order,
    'identify': cmd_identify,
    'audit': cmd_audit,
    'catalog': cmd_catalog,
}


def main(argv=None):
    """
    Runs the command line front end and returns the exit status

    Status 0 means success, 1 a failed audit check, 2 an input that could not
    be parsed or is out of range, 3 a group beyond the enumeration cap.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    overridden = []
    try:
        _apply_options(args, overridden)
        return COMMANDS[args.command](args)
    except (CapExceeded, BudgetExceeded) as e:
        print('ERROR: {}'.format(e), file=sys.stderr)
        return EXIT_CAP
    except (ValueError, KeyError, OSError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else e
        print('ERROR: {}'.format(message), file=sys.stderr)
        return EXIT_INPUT
    finally:
        for key in overridden:
            del mupsl.config[key]
