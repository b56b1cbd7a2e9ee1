"""Sweep one well parameter and stream plot-ready CSV rows."""
import logging
import sys

from well_pressure import fitseries, pressure, spectrum
from well_pressure.errors import UsageError
from well_pressure.probability import BetaSource
from well_pressure.protocol import exit_numerical_failure, exit_ok
from well_pressure.sweep import (
    Parameter, Scale, SweepSpec, default_near_pole_tolerance, parameter_fields,
    render_csv, run_sweep
)
from well_pressure.tools.output import print_json
from well_pressure.units import parse_quantity


# Set up logging
logger = logging.getLogger(__name__)

description = 'Sweep width, depth, mass or gamma and emit CSV rows.'

placeholder_names = {
    Parameter.width: 'width',
    Parameter.depth: 'depth',
    Parameter.mass: 'mass'
}


def add_arguments(parser):
    parser.add_argument(
        '--parameter', '-x', type=str, required=True,
        choices=[parameter.value for parameter in Parameter],
        help='Parameter to sweep.'
    )
    parser.add_argument(
        '--from', dest='start', type=str, required=True,
        help='First value of the swept parameter, e.g. 1e-11m.'
    )
    parser.add_argument(
        '--to', dest='stop', type=str, required=True,
        help='Last value of the swept parameter, e.g. 3e-10m.'
    )
    parser.add_argument(
        '--steps', '-n', type=int, required=True,
        help='Number of sweep points, at least 2.'
    )
    parser.add_argument(
        '--scale', type=str, default=Scale.linear.value,
        choices=[scale.value for scale in Scale],
        help='Spacing of the sweep points. Default: linear'
    )
    parser.add_argument(
        '--gamma', type=float, default=None,
        help='Interval fraction for R; R is left empty when unspecified.'
    )
    parser.add_argument(
        '--beta-source', type=str, default=BetaSource.fit.value,
        choices=[source.value for source in BetaSource],
        help='Decay constant from the fitted series or the exact energy.'
    )
    parser.add_argument(
        '--workers', type=int, default=None,
        help='Worker threads for row evaluation. Default: settings file'
    )
    spectrum.add_well_arguments(parser)
    fitseries.add_coefficients_arguments(parser)
    pressure.add_variant_arguments(parser)


def main(args, configuration):
    spec = SweepSpec(
        parameter=Parameter(args.parameter),
        start=parse_quantity(args.start),
        stop=parse_quantity(args.stop),
        steps=args.steps,
        scale=Scale(args.scale)
    )
    defaults = {}
    if spec.parameter in placeholder_names:
        defaults[placeholder_names[spec.parameter]] = spec.start.value
    elif args.gamma is not None:
        raise UsageError('--gamma conflicts with a gamma sweep')
    cfg = spectrum.parse_well_from_args(args, configuration, defaults)
    if spec.parameter in parameter_fields:
        cfg = cfg.replace(**{parameter_fields[spec.parameter]: spec.start.value})
    coeffs = fitseries.load_coefficients_from_args(args)

    sweep_settings = configuration.get('sweep', {})
    pressure_settings = configuration.get('pressure', {})
    workers = args.workers
    if workers is None:
        workers = sweep_settings.get('workers', 1)
    rows = run_sweep(
        spec, cfg, coeffs, gamma=args.gamma,
        variant=pressure.Variant(args.variant),
        beta_source=BetaSource(args.beta_source),
        near_pole_tolerance=pressure_settings.get(
            'near_pole_tolerance', default_near_pole_tolerance
        ),
        pole_tolerance=pressure_settings.get(
            'pole_tolerance', pressure.pole_tolerance
        ),
        workers=workers
    )

    if args.json:
        print_json([row.to_document() for row in rows])
    else:
        sys.stdout.write(render_csv(rows))
    if all(row.failed for row in rows):
        logger.error('Every sweep row failed')
        return exit_numerical_failure
    return exit_ok
