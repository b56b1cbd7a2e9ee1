"""Command-line entry point dispatching to the tools subcommands."""
import argparse
import logging
import logging.config
import re
import sys

from well_pressure.errors import DomainError, NumericalError, UsageError
from well_pressure.protocol import (
    exit_domain_error, exit_numerical_failure, exit_usage
)
from well_pressure.tools import fit, hydrogen, spectrum, sweep, verify
from well_pressure.util import config
from well_pressure.util.logging import logging_config, set_verbosity


# Set up logging
logger = logging.getLogger(__name__)

commands = {
    'spectrum': spectrum,
    'fit': fit,
    'hydrogen': hydrogen,
    'sweep': sweep,
    'verify': verify
}


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser reporting usage errors with the usage exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(exit_usage, '{}: error: {}\n'.format(self.prog, message))


negative_value_pattern = re.compile(r'^-\.?\d')


def attach_negative_values(argv):
    """Join `--flag -1m` into `--flag=-1m` so negative quantities parse."""
    joined = []
    tokens = list(argv)
    i = 0
    while i < len(tokens):
        token = tokens[i]
        if (
            token.startswith('--') and '=' not in token
            and i + 1 < len(tokens)
            and negative_value_pattern.match(tokens[i + 1])
        ):
            joined.append('{}={}'.format(token, tokens[i + 1]))
            i += 2
            continue
        joined.append(token)
        i += 1
    return joined


def build_parser():
    parser = ArgumentParser(
        prog='well-pressure',
        description=(
            'Energies, pressure response and ionization threshold of a '
            'particle in a one-dimensional finite potential well.'
        )
    )
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True
    for (name, module) in commands.items():
        subparser = subparsers.add_parser(
            name, help=module.description, description=module.description
        )
        module.add_arguments(subparser)
        subparser.add_argument(
            '--json', action='store_true',
            help='Emit machine-readable JSON instead of a table.'
        )
        subparser.add_argument(
            '--verbose', '-v', action='store_true',
            help='Log debugging output to standard error.'
        )
        config.add_config_arguments(subparser)
        subparser.set_defaults(main=module.main)
    return parser


def main(argv=None):
    """Run a subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(attach_negative_values(
            sys.argv[1:] if argv is None else argv
        ))
    except SystemExit as e:
        return e.code

    logging.config.dictConfig(logging_config)
    set_verbosity(args.verbose)
    try:
        configuration = config.load_config_from_args(args)
        return args.main(args, configuration)
    except UsageError as e:
        logger.error('{}'.format(e))
        parser.print_usage(sys.stderr)
        return exit_usage
    except DomainError as e:
        logger.error('{}'.format(e))
        return exit_domain_error
    except ValueError as e:
        logger.error('Invalid input: {}'.format(e))
        return exit_domain_error
    except NumericalError as e:
        logger.error('{}'.format(e))
        return exit_numerical_failure
    except OSError as e:
        logger.error('{}'.format(e))
        return exit_domain_error


def run():
    sys.exit(main())


if __name__ == '__main__':
    run()
