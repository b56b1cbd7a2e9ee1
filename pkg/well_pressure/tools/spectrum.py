"""Bound-state energies of a finite well."""
import logging

from well_pressure import spectrum
from well_pressure.protocol import exit_ok
from well_pressure.tools.output import print_json, print_table
from well_pressure.units import constants


# Set up logging
logger = logging.getLogger(__name__)

description = 'Solve the even-parity bound states of a finite well.'


def add_arguments(parser):
    spectrum.add_well_arguments(parser)
    parser.add_argument(
        '--branch', '-b', type=int, default=0,
        help='Even-parity branch to solve, 0 for the ground state. Default: 0'
    )
    parser.add_argument(
        '--all', action='store_true',
        help='Solve every even-parity branch the well holds.'
    )


def state_document(cfg, strength, state):
    return {
        'branch': state.branch,
        'n': strength.n,
        'K_m': strength.K,
        'xi': state.xi,
        'eta': state.eta,
        'alpha_per_m': state.alpha,
        'beta_per_m': state.beta,
        'E_J': state.energy,
        'E_eV': state.energy / constants.electronvolt,
        'E_over_V0': state.energy / cfg.V0
    }


def main(args, configuration):
    cfg = spectrum.parse_well_from_args(args, configuration)
    strength = spectrum.well_strength(cfg)
    if args.all:
        states = spectrum.even_states(cfg)
    else:
        states = [spectrum.energy_exact(cfg, args.branch)]
    documents = [state_document(cfg, strength, state) for state in states]
    logger.info('Solved {} even-parity state(s) at n = {}'.format(
        len(states), strength.n
    ))

    if args.json:
        print_json(documents if args.all else documents[0])
        return exit_ok
    for (i, document) in enumerate(documents):
        if i > 0:
            print()
        print_table(list(document.items()))
    return exit_ok
