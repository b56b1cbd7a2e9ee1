"""Printed-versus-rederived consistency checks of the pressure calculus."""
import enum
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from well_pressure.fitseries import energy_from_fit
from well_pressure.pressure import (
    Variant, WidthMethod, critical_width, denergy_dpressure,
    expansion_small_k, expansion_small_width, pressure_1d, pressure_slope
)
from well_pressure.spectrum import well_strength


# Set up logging
logger = logging.getLogger(__name__)

default_tolerance = 1e-3
default_small_ratio = 1e-8
default_small_width_ratio = 1e-3
default_pressure_ratio = 2.0
difference_step = 1e-6


class Verdict(enum.Enum):
    consistent = 'consistent'
    discrepant = 'discrepant'


@dataclass(frozen=True)
class Check(object):
    equation: str
    description: str
    printed: float
    rederived: float
    deviation: float
    verdict: Verdict

    def to_document(self):
        return {
            'equation': self.equation,
            'description': self.description,
            'printed': self.printed,
            'rederived': self.rederived,
            'deviation': self.deviation,
            'verdict': self.verdict.value
        }


@dataclass(frozen=True)
class VerifyReport(object):
    checks: Tuple[Check, ...]
    K: float
    a0_paper_ratio: float
    a0_numeric_ratio: float
    pole_ratio: Optional[float]

    def check(self, equation):
        return next(check for check in self.checks if check.equation == equation)

    def to_document(self):
        return {
            'K_m': self.K,
            'a0_paper_over_K': self.a0_paper_ratio,
            'a0_numeric_over_K': self.a0_numeric_ratio,
            'pole_over_K': self.pole_ratio,
            'checks': [check.to_document() for check in self.checks]
        }


def relative_deviation(printed, rederived):
    scale = abs(rederived)
    if scale == 0.0:
        return abs(printed)
    return abs(printed - rederived) / scale


def _check(equation, description, printed, rederived, tolerance):
    deviation = relative_deviation(printed, rederived)
    verdict = (
        Verdict.consistent if deviation <= tolerance else Verdict.discrepant
    )
    logger.debug('{}: printed {} vs rederived {} -> {}'.format(
        equation, printed, rederived, verdict.value
    ))
    return Check(
        equation=equation, description=description, printed=printed,
        rederived=rederived, deviation=deviation, verdict=verdict
    )


def build_report(
    cfg, coeffs, tolerance=default_tolerance, small_ratio=default_small_ratio,
    small_width_ratio=default_small_width_ratio,
    pressure_ratio=default_pressure_ratio
):
    """Compare every printed closed form with its re-derivation."""
    K = well_strength(cfg).K
    V0 = cfg.V0
    checks = []

    # Pressure series with and without the depth factor, compared as the
    # ratio P(2 V0) / P(V0) at fixed a and K, which carries no units
    a = pressure_ratio * K
    h = difference_step * a

    def printed_pressure(depth):
        return pressure_1d(a, K, coeffs, 1.0)

    def rederived_pressure(depth):
        return -(
            energy_from_fit(a + h, K, coeffs, depth)
            - energy_from_fit(a - h, K, coeffs, depth)
        ) / (2.0 * h)

    printed = printed_pressure(2.0 * V0) / printed_pressure(V0)
    rederived = rederived_pressure(2.0 * V0) / rederived_pressure(V0)
    checks.append(_check(
        'pressure_series',
        'P(2 V0)/P(V0) of the series without the V0 factor vs -dE/da'
        ' by central difference at a/K = {}'.format(pressure_ratio),
        printed, rederived, tolerance
    ))

    # Closed-form dE/dP in the deep-well limit
    a_wide = K / small_ratio
    printed_wide = denergy_dpressure(a_wide, K, coeffs, Variant.printed)
    rederived_wide = -pressure_1d(a_wide, K, coeffs, V0) / pressure_slope(
        a_wide, K, coeffs, V0
    )
    checks.append(_check(
        'denergy_dpressure',
        'printed closed-form dE/dP vs (dE/da)/(dP/da) at K/a = {}'
        .format(small_ratio),
        printed_wide, rederived_wide, tolerance
    ))

    # Narrow-well expansion
    a_narrow = small_width_ratio * K
    checks.append(_check(
        'small_width_expansion',
        'narrow-well expansion vs consistent closed form at a/K = {}'
        .format(small_width_ratio),
        expansion_small_width(a_narrow, K, coeffs),
        denergy_dpressure(a_narrow, K, coeffs, Variant.consistent),
        tolerance
    ))

    # Deep-well expansion against the printed closed form
    checks.append(_check(
        'small_k_expansion',
        'printed deep-well expansion vs printed closed form at K/a = {}'
        .format(small_ratio),
        expansion_small_k(a_wide, K, coeffs, Variant.printed),
        printed_wide, tolerance
    ))

    c = coeffs.c
    checks.append(_check(
        'small_k_third_term',
        'second-order bracket c2^2 - c3^2 vs c2^2 - c1*c3',
        c[2] ** 2 - c[3] ** 2, c[2] ** 2 - c[1] * c[3], tolerance
    ))

    numeric = critical_width(K, coeffs, method=WidthMethod.numeric)
    paper = critical_width(K, coeffs, method=WidthMethod.paper)
    checks.append(_check(
        'critical_width',
        'a0/K from the narrow-well expansion vs zero of the full numerator',
        paper.a0_paper / K, numeric.a0_numeric / K, tolerance
    ))

    report = VerifyReport(
        checks=tuple(checks),
        K=K,
        a0_paper_ratio=paper.a0_paper / K,
        a0_numeric_ratio=numeric.a0_numeric / K,
        pole_ratio=(
            numeric.pole_location / K
            if numeric.pole_location is not None else None
        )
    )
    discrepant = [
        check.equation for check in checks
        if check.verdict is Verdict.discrepant
    ]
    logger.info('Verified {} forms, discrepant: {}'.format(
        len(checks), ', '.join(discrepant) or 'none'
    ))
    return report
