"""Reproduce the one-dimensional hydrogen example."""
import logging

from well_pressure import fitseries, pressure, spectrum
from well_pressure.protocol import exit_numerical_failure, exit_ok
from well_pressure.tools.output import print_json, print_table
from well_pressure.units import Dimension, constants, parse_quantity


# Set up logging
logger = logging.getLogger(__name__)

description = (
    'Critical width and ionization verdict for an electron in a well as deep '
    'as the hydrogen ionization energy.'
)

default_reference = {
    'reference_K_m': 5.2918e-11,
    'reference_a0_m': 1.31056e-10,
    'relative_tolerance': 2e-3
}
default_preset = {
    'width': '0.529angstrom',
    'depth': '13.6058eV',
    'mass': 'me'
}


def add_arguments(parser):
    fitseries.add_coefficients_arguments(parser)


def reproduce(configuration, coeffs=fitseries.PUBLISHED_COEFFICIENTS):
    """Compute the hydrogen numbers and compare them with the references."""
    preset = configuration.get('presets', {}).get('hydrogen', default_preset)
    reference = dict(default_reference)
    reference.update(configuration.get('hydrogen', {}))
    cfg = spectrum.WellConfig(
        a=parse_quantity(preset['width']).expect(Dimension.length).value,
        V0=parse_quantity(preset['depth']).expect(Dimension.energy).value,
        m=parse_quantity(preset['mass']).expect(Dimension.mass).value
    )
    strength = spectrum.well_strength(cfg)
    scan = configuration.get('pressure', {})
    widths = pressure.critical_width(
        strength.K, coeffs, method=pressure.WidthMethod.numeric,
        stop=scan.get('scan_stop', pressure.scan_stop),
        points=scan.get('scan_points', pressure.scan_points)
    )
    classification = pressure.classify_response(cfg.a, strength.K, coeffs)
    tolerance = reference['relative_tolerance']
    K_deviation = abs(strength.K / reference['reference_K_m'] - 1.0)
    a0_deviation = abs(classification.a0 / reference['reference_a0_m'] - 1.0)
    document = {
        'V0_J': cfg.V0,
        'V0_eV': cfg.V0 / constants.electronvolt,
        'm_kg': cfg.m,
        'K_m': strength.K,
        'a0_m': classification.a0,
        'a0_over_K': classification.a0 / strength.K,
        'a0_numeric_m': widths.a0_numeric,
        'a_m': cfg.a,
        'n': strength.n,
        'classification': classification.response.value,
        'boundary': classification.boundary,
        'K_deviation': K_deviation,
        'a0_deviation': a0_deviation,
        'reproduced': bool(
            K_deviation <= tolerance and a0_deviation <= tolerance
            and classification.response is pressure.Response.ionizes
        )
    }
    return document


def main(args, configuration):
    coeffs = fitseries.load_coefficients_from_args(args)
    document = reproduce(configuration, coeffs)
    if not document['reproduced']:
        logger.error(
            'Hydrogen numbers deviate from the references '
            '(K {:.3e}, a0 {:.3e}, {})'.format(
                document['K_deviation'], document['a0_deviation'],
                document['classification']
            )
        )
    if args.json:
        print_json(document)
    else:
        print_table(list(document.items()))
    return exit_ok if document['reproduced'] else exit_numerical_failure
