#     Copyright 2024. ThingsBoard
#
#     Licensed under the Apache License, Version 2.0 (the "License");
#     you may not use this file except in compliance with the License.
#     You may obtain a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#     Unless required by applicable law or agreed to in writing, software
#     distributed under the License is distributed on an "AS IS" BASIS,
#     WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#     See the License for the specific language governing permissions and
#     limitations under the License.
import logging
import logging.config
import sys
from argparse import ArgumentParser

from simplejson import load
from termcolor import colored

from bionet_simulator import __version__
from bionet_simulator.bn_utility.bn_errors import BionetError, ConfigurationError
from bionet_simulator.bn_utility.bn_handler import LOGGER_NAMES, set_default_handler
from bionet_simulator.bn_utility.bn_logger import init_logger
from bionet_simulator.service.bn_simulation_service import cmd_converge, cmd_distance, cmd_order, cmd_rotate, cmd_run
from bionet_simulator.service.constant_enums import ExitCode, Subcommand
from bionet_simulator.service.constants import DEFAULT_CONFIG_PATH, LOGS_CONFIG_PATH, OUT_DIR_PARAMETER
from bionet_simulator.service.run_config import parse_config

log = logging.getLogger("service")


def init_logging(level=None):
    logging_error = None
    try:
        with open(LOGS_CONFIG_PATH, 'r') as file:
            log_config = load(file)
        logging.config.dictConfig(log_config)
    except Exception as e:
        logging_error = e
        set_default_handler()

    if level:
        for name in LOGGER_NAMES:
            init_logger(name, level)
    if logging_error is not None:
        log.error("Logging loading exception, logs.json is wrong: %s", logging_error)


def parse_n_list(text):
    try:
        return [int(item) for item in text.replace(';', ',').split(',') if item.strip()]
    except ValueError:
        raise ConfigurationError("--n-list must be a comma separated list of integers", key="n-list")


def build_parser():
    parser = ArgumentParser(prog='bn-simulator', description="Self-regulating transport network simulator")
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('--log-level', default=None, help="Overrides the level of every logger")
    subparsers = parser.add_subparsers(dest='command', required=True)

    run_parser = subparsers.add_parser(Subcommand.RUN.value, help="Single gradient flow run")
    converge_parser = subparsers.add_parser(Subcommand.CONVERGE.value, help="Resolution study")
    rotate_parser = subparsers.add_parser(Subcommand.ROTATE.value, help="Leaf against rotated leaf")
    for sub in (run_parser, converge_parser, rotate_parser):
        sub.add_argument('--config', default=DEFAULT_CONFIG_PATH, help="Path to the run configuration")
        sub.add_argument('--out', default=None, help="Output directory, overrides out_dir")
    for sub in (converge_parser, rotate_parser):
        sub.add_argument('--n-list', default=None, help="Comma separated resolutions, e.g. 50,100,200")
        sub.add_argument('--workers', type=int, default=1, help="Parallel runs")
        sub.add_argument('--p', type=float, default=1.0, help="Wasserstein order")
    rotate_parser.add_argument('--theta', type=float, required=True, help="Rotation angle in radians")

    distance_parser = subparsers.add_parser(Subcommand.DISTANCE.value, help="Wasserstein distance of snapshots")
    distance_parser.add_argument('file_a')
    distance_parser.add_argument('file_b')
    distance_parser.add_argument('--p', type=float, default=1.0, help="Wasserstein order")
    distance_parser.add_argument('--field', default=None, help="Field label, conductivity norm by default")

    order_parser = subparsers.add_parser(Subcommand.ORDER.value, help="Richardson order of two errors")
    order_parser.add_argument('e_coarse', type=float)
    order_parser.add_argument('e_fine', type=float)
    order_parser.add_argument('--rho', type=float, default=2.0, help="Refinement ratio")
    return parser


def execute(args):
    command = Subcommand(args.command)
    if command == Subcommand.DISTANCE:
        print(repr(cmd_distance(args.file_a, args.file_b, p=args.p, label=args.field)))
        return
    if command == Subcommand.ORDER:
        print(repr(cmd_order(args.e_coarse, args.e_fine, rho=args.rho)))
        return

    config = parse_config(args.config, overrides={OUT_DIR_PARAMETER: args.out})
    if command == Subcommand.RUN:
        manifest = cmd_run(config)
        print("%s: %i steps, %s" % (config.out_dir, manifest.step_count, manifest.termination_reason))
        return

    n_list = parse_n_list(args.n_list) if args.n_list else [config.n]
    if command == Subcommand.CONVERGE:
        rows = cmd_converge(config, n_list, workers=args.workers, p=args.p)
    else:
        rows = cmd_rotate(config, args.theta, n_list, workers=args.workers, p=args.p)
    for row in rows:
        print("N=%i distance=%s order=%s" % (row['N'], row['distance'], row['order']))


def main(argv=None):
    args = build_parser().parse_args(argv)
    init_logging(args.log_level)
    try:
        execute(args)
    except BionetError as e:
        log.error(e)
        print(colored("Error: %s" % e, color='red'), file=sys.stderr)
        return e.exit_code
    except Exception as e:
        log.exception(e)
        print(colored("Error: %s" % e, color='red'), file=sys.stderr)
        return ExitCode.RUNTIME_FAILURE.value
    return ExitCode.SUCCESS.value


def daemon():
    sys.exit(main())


if __name__ == '__main__':
    daemon()
