"""Pressure calculus on the fitted energy series.

With E(a) = V0 * sum(c[i] * (K/a)**i), the one-dimensional pressure is
P = -dE/da and carries force units. dE/dP is the ratio of the two width
derivatives. The printed forms of the closed-form ratio and of its small-K
expansion are kept next to re-derived consistent forms so both can be
evaluated and compared.
"""
import enum
import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import optimize

from well_pressure.errors import DomainError, NoRoot, PoleSingularity
from well_pressure.spectrum import require_positive


# Set up logging
logger = logging.getLogger(__name__)

pole_tolerance = 1e-12
tie_tolerance = 1e-12
scan_points = 2000
scan_stop = 20.0
bisection_tolerance = 1e-12

# Weights of c[1]..c[5] in the quartics of t = a/K, highest power first
numerator_weights = (1, 2, 3, 4, 5)
printed_denominator_weights = (2, 3, 6, 10, 15)
consistent_denominator_weights = (1, 3, 6, 10, 15)


class Variant(enum.Enum):
    printed = 'printed'
    consistent = 'consistent'


class Response(enum.Enum):
    ionizes = 'Ionizes'
    pushed_deeper = 'PushedDeeper'


class WidthMethod(enum.Enum):
    paper = 'paper'
    numeric = 'numeric'


@dataclass(frozen=True)
class PressureProfile(object):
    a: float  # m
    P: float  # N
    dEdP: Optional[float]  # m, consistent form; None on its pole
    dEdP_printed: Optional[float]  # m, printed form; None on its pole
    near_pole: bool


@dataclass(frozen=True)
class CriticalWidthReport(object):
    a0_paper: Optional[float]  # m
    a0_numeric: Optional[float]  # m
    pole_location: Optional[float]  # m
    classification_width_used: WidthMethod

    @property
    def a0(self):
        if self.classification_width_used is WidthMethod.numeric:
            return self.a0_numeric
        return self.a0_paper


@dataclass(frozen=True)
class ResponseClassification(object):
    response: Response
    boundary: bool
    a0: float  # m


def _denominator_weights(variant):
    variant = Variant(variant)
    if variant is Variant.printed:
        return printed_denominator_weights
    return consistent_denominator_weights


def quartic_terms(t, coeffs, weights):
    """Terms w[i] * c[i] * t**(5 - i) for i = 1..5."""
    return [
        weight * coeffs.c[i] * t ** (5 - i)
        for (i, weight) in zip(range(1, 6), weights)
    ]


def quartic_polynomial(coeffs, weights):
    """The quartic in t as a numpy Polynomial."""
    return np.polynomial.Polynomial([
        weight * coeffs.c[i] for (i, weight) in zip(range(1, 6), weights)
    ][::-1])


def denominator_ratio(a, K, coeffs, variant=Variant.consistent):
    """|denominator| relative to its largest term."""
    require_positive(a=a, K=K)
    terms = quartic_terms(a / K, coeffs, _denominator_weights(variant))
    scale = max(abs(term) for term in terms)
    if scale == 0.0:
        return 0.0
    return abs(math.fsum(terms)) / scale


# Pressure

def pressure_1d(a, K, coeffs, V0):
    """P = V0 * sum(i * c[i] * K**i / a**(i + 1)).

    The V0 factor is required by E = V0 * sum(c[i] * (K/a)**i).
    """
    require_positive(a=a, K=K)
    s = K / a
    return V0 / a * math.fsum(i * coeffs.c[i] * s ** i for i in range(1, 6))


def pressure_slope(a, K, coeffs, V0):
    """dP/da = -V0 * sum(i * (i + 1) * c[i] * K**i / a**(i + 2))."""
    require_positive(a=a, K=K)
    s = K / a
    return -V0 / (a * a) * math.fsum(
        i * (i + 1) * coeffs.c[i] * s ** i for i in range(1, 6)
    )


# dE/dP

def denergy_dpressure(
    a, K, coeffs, variant=Variant.consistent, tolerance=pole_tolerance
):
    """Closed-form dE/dP = (a/2) * numerator / denominator."""
    require_positive(a=a, K=K)
    t = a / K
    numerator = math.fsum(quartic_terms(t, coeffs, numerator_weights))
    denominator_terms = quartic_terms(t, coeffs, _denominator_weights(variant))
    scale = max(abs(term) for term in denominator_terms)
    denominator = math.fsum(denominator_terms)
    if scale == 0.0 or abs(denominator) < tolerance * scale:
        raise PoleSingularity(
            'dE/dP denominator ({}) vanishes at a/K = {}'.format(
                Variant(variant).value, t
            )
        )
    return 0.5 * a * numerator / denominator


def expansion_small_width(a, K, coeffs):
    """a/6 + (c4 / (45 c5)) * a**2 / K."""
    require_positive(a=a, K=K)
    c = coeffs.c
    if c[5] == 0.0:
        raise DomainError('Small-width expansion needs c5 != 0')
    return a / 6.0 + (c[4] / c[5]) * a * a / (45.0 * K)


def expansion_small_k(a, K, coeffs, variant=Variant.consistent):
    """a/2 - K c2/(2 c1) + (3 K**2 / (2 a c1**2)) * bracket.

    The printed bracket is c2**2 - c3**2, the consistent one c2**2 - c1*c3.
    """
    require_positive(a=a, K=K)
    c = coeffs.c
    if c[1] == 0.0:
        raise DomainError('Small-K expansion needs c1 != 0')
    if Variant(variant) is Variant.printed:
        bracket = c[2] ** 2 - c[3] ** 2
    else:
        bracket = c[2] ** 2 - c[1] * c[3]
    return (
        a / 2.0 - K * c[2] / (2.0 * c[1])
        + 3.0 * K * K / (2.0 * a * c[1] ** 2) * bracket
    )


# Critical width

def _first_positive_root(polynomial, stop, points):
    """Smallest root of a polynomial on (0, stop] by sign scan and bisection."""
    t = np.linspace(stop / points, stop, points)
    values = polynomial(t)
    for i in range(points):
        if values[i] == 0.0:
            return float(t[i])
        if i > 0 and np.sign(values[i - 1]) != np.sign(values[i]):
            return optimize.bisect(
                polynomial, t[i - 1], t[i], xtol=bisection_tolerance
            )
    return None


def critical_width(
    K, coeffs, method=WidthMethod.paper, stop=scan_stop, points=scan_points
):
    """Width at which dE/dP changes sign."""
    require_positive(K=K)
    method = WidthMethod(method)
    c = coeffs.c
    a0_paper = None
    if c[4] != 0.0 and -c[5] / c[4] > 0:
        a0_paper = -7.5 * (c[5] / c[4]) * K

    if method is WidthMethod.paper:
        if a0_paper is None:
            raise NoRoot(
                'Small-width expansion has no positive zero (c4 = {}, c5 = {})'
                .format(c[4], c[5])
            )
        return CriticalWidthReport(
            a0_paper=a0_paper, a0_numeric=None, pole_location=None,
            classification_width_used=method
        )

    numerator_root = _first_positive_root(
        quartic_polynomial(coeffs, numerator_weights), stop, points
    )
    if numerator_root is None:
        raise NoRoot(
            'dE/dP numerator has no positive root on (0, {}]'.format(stop)
        )
    pole_root = _first_positive_root(
        quartic_polynomial(coeffs, consistent_denominator_weights),
        stop, points
    )
    logger.debug('dE/dP zero at a/K = {}, pole at a/K = {}'.format(
        numerator_root, pole_root
    ))
    return CriticalWidthReport(
        a0_paper=a0_paper,
        a0_numeric=numerator_root * K,
        pole_location=pole_root * K if pole_root is not None else None,
        classification_width_used=method
    )


def classify_response(a, K, coeffs, method=WidthMethod.paper):
    """Ionizes below the critical width, else the particle is pushed deeper."""
    require_positive(a=a, K=K)
    a0 = critical_width(K, coeffs, method=method).a0
    boundary = abs(a - a0) <= tie_tolerance * a0
    if a < a0 and not boundary:
        response = Response.ionizes
    else:
        response = Response.pushed_deeper
    return ResponseClassification(response=response, boundary=boundary, a0=a0)


def pressure_profile(
    a, K, coeffs, V0, tolerance=pole_tolerance, near_pole_tolerance=None
):
    """Pressure and both dE/dP forms at one width."""
    if near_pole_tolerance is None:
        near_pole_tolerance = tolerance
    P = pressure_1d(a, K, coeffs, V0)
    values = {}
    for variant in Variant:
        try:
            values[variant] = denergy_dpressure(
                a, K, coeffs, variant=variant, tolerance=tolerance
            )
        except PoleSingularity as e:
            logger.warning('{}'.format(e))
            values[variant] = None
    near_pole = (
        denominator_ratio(a, K, coeffs, Variant.consistent)
        < near_pole_tolerance
    )
    return PressureProfile(
        a=a, P=P,
        dEdP=values[Variant.consistent],
        dEdP_printed=values[Variant.printed],
        near_pole=near_pole
    )


# Command-line args

def add_variant_arguments(arg_parser):
    arg_parser.add_argument(
        '--variant', type=str, default=Variant.consistent.value,
        choices=[variant.value for variant in Variant],
        help=(
            'Form of the closed-form dE/dP. Default: {}'
            .format(Variant.consistent.value)
        )
    )
