"""Report on the printed closed forms of the pressure calculus."""
import logging

from well_pressure import fitseries, spectrum, verify
from well_pressure.protocol import exit_ok
from well_pressure.tools.hydrogen import default_preset
from well_pressure.tools.output import format_value, print_json


# Set up logging
logger = logging.getLogger(__name__)

description = 'Compare printed closed forms with their re-derivations.'


def add_arguments(parser):
    spectrum.add_well_arguments(parser)
    fitseries.add_coefficients_arguments(parser)


def main(args, configuration):
    coeffs = fitseries.load_coefficients_from_args(args)
    if args.preset is None and None in (args.width, args.depth, args.mass):
        args.preset = 'hydrogen'
        configuration.setdefault('presets', {}).setdefault(
            'hydrogen', default_preset
        )
    cfg = spectrum.parse_well_from_args(args, configuration)
    settings = configuration.get('verify', {})
    report = verify.build_report(
        cfg, coeffs,
        tolerance=settings.get('tolerance', verify.default_tolerance),
        small_ratio=settings.get('small_ratio', verify.default_small_ratio),
        small_width_ratio=settings.get(
            'small_width_ratio', verify.default_small_width_ratio
        ),
        pressure_ratio=settings.get(
            'pressure_ratio', verify.default_pressure_ratio
        )
    )

    if args.json:
        print_json(report.to_document())
        return exit_ok
    header = ('equation', 'printed', 'rederived', 'deviation', 'verdict')
    rows = [header] + [
        (
            check.equation, format_value(check.printed),
            format_value(check.rederived), format_value(check.deviation),
            check.verdict.value
        )
        for check in report.checks
    ]
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    for row in rows:
        print('  '.join(
            '{:<{}}'.format(cell, width) for (cell, width) in zip(row, widths)
        ).rstrip())
    print()
    print('a0/K from narrow-well expansion  {}'.format(
        format_value(report.a0_paper_ratio)
    ))
    print('a0/K from full numerator         {}'.format(
        format_value(report.a0_numeric_ratio)
    ))
    print('pole a/K                         {}'.format(
        format_value(report.pole_ratio)
    ))
    return exit_ok
