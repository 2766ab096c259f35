# -*- coding: utf-8 -*-

"""
Foliage: Poisson Structure Classifier
Copyright (C) 2021 Foliage Developers

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU Affero General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License
along with this program.  If not, see <https://www.gnu.org/licenses/>.
"""

import argparse
import logging
import sys

from . import __version__, commands, config
from .enums import DeformationMode
from .handlers import describe_error
from .problem import load_problem
from .utils import dumps


log = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_FAILURE = 2


def cmd_invariants(args):
    return commands.run_invariants(load_problem(args.problem), args.curves)


def cmd_classify(args):
    return commands.run_classify(load_problem(args.a), load_problem(args.b), args.mode)


def cmd_normal_form(args):
    return commands.run_normal_form(args.T, args.V)


def cmd_tree(args):
    return commands.run_tree(load_problem(args.problem), args.dot)


def cmd_cohomology(args):
    return commands.run_cohomology(load_problem(args.problem))


def cmd_deform(args):
    return commands.run_deform(load_problem(args.problem), args.mode, args.epsilon, args.curve)


def cmd_serve(args):
    import uvicorn

    from .server import app

    uvicorn.run(app, host=args.host, port=args.port, log_level=args.log_level.lower())


def build_parser():
    parser = argparse.ArgumentParser(prog='foliage', description='Classify Poisson structures on the sphere and torus.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('--log-level', default=config.LOG_LEVEL, help='root log level, logs go to stderr')

    subcommands = parser.add_subparsers(dest='command', required=True)

    invariants = subcommands.add_parser('invariants', help='periods, regularized volume and topology of a structure')
    invariants.add_argument('problem', help='TOML problem file')
    invariants.add_argument('--curves', action='store_true', help='include the zero curve polylines')
    invariants.set_defaults(handler=cmd_invariants)

    classify = subcommands.add_parser('classify', help='decide whether two structures are Poisson isomorphic')
    classify.add_argument('a', help='TOML problem file')
    classify.add_argument('b', help='TOML problem file')
    classify.add_argument(
        '--mode', choices=['preserving', 'reversing', 'any', 'both'], default='preserving', help='orientation mode'
    )
    classify.set_defaults(handler=cmd_classify)

    form = subcommands.add_parser('normal-form', help='sphere structure with one zero curve and given invariants')
    form.add_argument('--T', type=float, required=True, help='modular period')
    form.add_argument('--V', type=float, required=True, help='regularized volume')
    form.set_defaults(handler=cmd_normal_form)

    tree = subcommands.add_parser('tree', help='signed region graph of a structure')
    tree.add_argument('problem', help='TOML problem file')
    tree.add_argument('--dot', action='store_true', help='print the graph in DOT format')
    tree.set_defaults(handler=cmd_tree)

    cohomology = subcommands.add_parser('cohomology', help='Poisson cohomology dimensions and generators')
    cohomology.add_argument('problem', help='TOML problem file')
    cohomology.set_defaults(handler=cmd_cohomology)

    deform = subcommands.add_parser('deform', help='deform a structure and compare invariants')
    deform.add_argument('problem', help='TOML problem file')
    deform.add_argument('--mode', choices=[mode.value for mode in DeformationMode], required=True)
    deform.add_argument('--curve', type=int, default=0, help='curve index for period deformations')
    deform.add_argument('--epsilon', type=float, required=True)
    deform.set_defaults(handler=cmd_deform)

    serve = subcommands.add_parser('serve', help='serve the commands over HTTP')
    serve.add_argument('--host', default=config.HOST)
    serve.add_argument('--port', type=int, default=config.PORT)
    serve.set_defaults(handler=cmd_serve)

    return parser


def main(argv=None):
    # Usage errors exit with 2 as well, argparse takes care of those
    args = build_parser().parse_args(argv)
    logging.getLogger().setLevel(args.log_level.upper())

    try:
        output = args.handler(args)
    except Exception as error:
        data = describe_error(error)
        log.error(f'{data["kind"]} during {data["stage"]}: {data["detail"]}')

        sys.stdout.write(dumps({'version': __version__, 'error': data}) + '\n')
        return EXIT_FAILURE

    if output is not None:
        sys.stdout.write(output if isinstance(output, str) else dumps(output) + '\n')

    return EXIT_OK
