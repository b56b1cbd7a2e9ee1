"""Refit the inverse-power energy series or emit the published set."""
import logging

from well_pressure import fitseries
from well_pressure.protocol import exit_ok
from well_pressure.tools.output import print_json, print_table


# Set up logging
logger = logging.getLogger(__name__)

description = 'Fit E/V0 against powers of 1/n and write the coefficients.'


def add_arguments(parser):
    parser.add_argument(
        '--grid', '-g', type=str, default=None,
        help=(
            'Strength grid as start:stop:count. Default: the grid in the '
            'settings file'
        )
    )
    parser.add_argument(
        '--paper', action='store_true',
        help='Emit the published coefficient set instead of refitting.'
    )
    parser.add_argument(
        '--out', '-o', type=str, default=None,
        help='Path to write the coefficients JSON document.'
    )
    parser.add_argument(
        '--workers', type=int, default=1,
        help='Worker threads for sampling exact energies. Default: 1'
    )


def grid_from_args(args, configuration):
    if args.grid is not None:
        return fitseries.FitGrid.parse(args.grid)
    grid_settings = configuration.get('fit', {}).get('grid')
    if grid_settings is None:
        return fitseries.default_grid
    return fitseries.FitGrid.from_document(grid_settings)


def main(args, configuration):
    if args.paper:
        coeffs = fitseries.PUBLISHED_COEFFICIENTS
    else:
        grid = grid_from_args(args, configuration)
        logger.info('Refitting on grid {}:{}:{}...'.format(
            grid.n_start, grid.n_stop, grid.n_count
        ))
        coeffs = fitseries.refit(grid, workers=args.workers)
    if args.out is not None:
        fitseries.save_coefficients(coeffs, args.out)

    document = fitseries.coefficients_to_document(coeffs)
    if args.json:
        print_json(document)
        return exit_ok
    pairs = [('c{}'.format(i), value) for (i, value) in enumerate(coeffs.c)]
    pairs.append(('sigma', coeffs.sigma))
    pairs.append(('source', coeffs.source))
    if coeffs.grid is not None:
        pairs.append(('grid', '{}:{}:{}'.format(
            coeffs.grid.n_start, coeffs.grid.n_stop, coeffs.grid.n_count
        )))
    print_table(pairs)
    return exit_ok
