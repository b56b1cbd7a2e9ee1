"""In-well wavefunction normalization and interval probabilities.

The in-well profile is u(x) = 2 C cosh(beta x) on |x| <= a, normalized so that
its square integrates to one over the well. R is the probability of finding
the particle in |x| <= gamma a.
"""
import enum
import logging
import math
from dataclasses import dataclass

from well_pressure.errors import DomainError, FitOutOfRange, PoleSingularity
from well_pressure.fitseries import eval_fit
from well_pressure.pressure import pole_tolerance, pressure_1d
from well_pressure.spectrum import (
    characteristic_length, energy_exact, require_positive
)
from well_pressure.units import constants


# Set up logging
logger = logging.getLogger(__name__)

series_guard = 1e-4
# 2 a beta above which the closed forms are rescaled by exp(-2 a beta)
large_argument = 50.0
relative_step = 1e-6


class Method(enum.Enum):
    closed_form = 'closed_form'
    small_beta = 'small_beta'
    quadrature = 'quadrature'


class BetaSource(enum.Enum):
    energy = 'energy'
    fit = 'fit'


@dataclass(frozen=True)
class WavefunctionNorm(object):
    C: float  # m**-1/2
    beta: float  # 1/m
    a: float  # m


@dataclass(frozen=True)
class ProbabilityResult(object):
    R: float
    gamma: float
    method: Method


def sinhc(z):
    """sinh(z)/z with the z -> 0 limit."""
    if abs(z) < series_guard:
        z2 = z * z
        return 1.0 + z2 / 6.0 + z2 * z2 / 120.0
    return math.sinh(z) / z


def _scaled_sinh(x, z):
    """2 exp(-z) sinh(x) for 0 <= x <= z without overflow."""
    if x < 0.5 * large_argument:
        return 2.0 * math.exp(-z) * math.sinh(x)
    return math.exp(x - z) * -math.expm1(-2.0 * x)


def _scaled_amplitude(a, z):
    """C exp(z / 2) for z = 2 a beta."""
    scaled_norm = 2.0 * z * math.exp(-z) + _scaled_sinh(z, z)
    return 0.5 / math.sqrt(a) * math.sqrt(2.0 * z / scaled_norm)


def _check_beta(beta):
    if not (math.isfinite(beta) and beta >= 0):
        raise DomainError('beta must be finite and >= 0, got {}'.format(beta))


def _check_gamma(gamma):
    if not (0.0 <= gamma <= 1.0):
        raise DomainError('gamma must lie in [0, 1], got {}'.format(gamma))


# Decay constant

def beta_from_energy(E, m, V0):
    """beta = sqrt(2 m (V0 - E)) / hbar."""
    require_positive(m=m, V0=V0)
    if not (0.0 <= E <= V0):
        raise DomainError(
            'Energy {} J must lie in [0, V0 = {} J]'.format(E, V0)
        )
    return math.sqrt(2.0 * m * (V0 - E)) / constants.hbar


def beta_from_fit(a, K, coeffs, m, V0):
    """beta from the fitted series: (2 m V0 / hbar**2) * (1 - E/V0)."""
    require_positive(a=a, K=K, m=m, V0=V0)
    bracket = 1.0 - eval_fit(coeffs, a / K)
    if bracket < 0:
        raise FitOutOfRange(
            'Fitted E/V0 exceeds 1 at a/K = {} (1 - E/V0 = {})'
            .format(a / K, bracket)
        )
    return math.sqrt(2.0 * m * V0 * bracket) / constants.hbar


# Wavefunction

def normalization_constant(a, beta):
    """C = (1 / (2 sqrt(a))) * (1 + sinh(2 a beta) / (2 a beta))**-1/2."""
    require_positive(a=a)
    _check_beta(beta)
    z = 2.0 * a * beta
    if z < large_argument:
        C = 0.5 / math.sqrt(a) / math.sqrt(1.0 + sinhc(z))
    else:
        C = _scaled_amplitude(a, z) * math.exp(-0.5 * z)
    return WavefunctionNorm(C=C, beta=beta, a=a)


def wavefunction(x, norm):
    """u(x) = 2 C cosh(beta x) inside the well."""
    if abs(x) > norm.a:
        raise DomainError(
            'x = {} lies outside the well |x| <= {}'.format(x, norm.a)
        )
    z = 2.0 * norm.a * norm.beta
    if z < large_argument:
        return 2.0 * norm.C * math.cosh(norm.beta * x)
    # C underflows long before cosh overflows, so fold exp(-z/2) into each term
    bx = norm.beta * abs(x)
    return _scaled_amplitude(norm.a, z) * (
        math.exp(bx - 0.5 * z) + math.exp(-bx - 0.5 * z)
    )


# Interval probability

def probability_interval(a, beta, gamma):
    """R = (2 a beta gamma + sinh(2 a beta gamma)) / (2 a beta + sinh(2 a beta))."""
    require_positive(a=a)
    _check_beta(beta)
    _check_gamma(gamma)
    z = 2.0 * a * beta
    if z < large_argument:
        R = gamma * (1.0 + sinhc(z * gamma)) / (1.0 + sinhc(z))
    else:
        x = z * gamma
        decay = math.exp(-z)
        R = (
            (2.0 * x * decay + _scaled_sinh(x, z))
            / (2.0 * z * decay + _scaled_sinh(z, z))
        )
    return ProbabilityResult(
        R=min(max(R, 0.0), 1.0), gamma=gamma, method=Method.closed_form
    )


def probability_small_beta(a, beta, gamma):
    """R = gamma * (1 + (a beta)**2 * (gamma**2 - 1) / 3)."""
    require_positive(a=a)
    _check_beta(beta)
    _check_gamma(gamma)
    R = gamma * (1.0 + (a * beta) ** 2 * (gamma * gamma - 1.0) / 3.0)
    return ProbabilityResult(R=R, gamma=gamma, method=Method.small_beta)


def probability_from_config(cfg, gamma, coeffs=None, beta_source=BetaSource.energy):
    """Interval probability with beta from the exact ground state or the fit."""
    if BetaSource(beta_source) is BetaSource.fit:
        K = characteristic_length(cfg.V0, cfg.m)
        beta = beta_from_fit(cfg.a, K, coeffs, cfg.m, cfg.V0)
    else:
        beta = energy_exact(cfg, 0).beta
    return probability_interval(cfg.a, beta, gamma)


# Pressure derivative

def _fit_probability(a, K, coeffs, m, V0, gamma):
    beta = beta_from_fit(a, K, coeffs, m, V0)
    return probability_interval(a, beta, gamma).R


def probability_pressure_derivative(cfg, coeffs, gamma, step=relative_step):
    """dR/dP by central differences of a -> R(a) and a -> P(a)."""
    _check_gamma(gamma)
    K = characteristic_length(cfg.V0, cfg.m)
    a = cfg.a
    h = step * a
    R_plus = _fit_probability(a + h, K, coeffs, cfg.m, cfg.V0, gamma)
    R_minus = _fit_probability(a - h, K, coeffs, cfg.m, cfg.V0, gamma)
    # the bracket must also hold at the centre point
    beta_from_fit(a, K, coeffs, cfg.m, cfg.V0)
    P_plus = pressure_1d(a + h, K, coeffs, cfg.V0)
    P_minus = pressure_1d(a - h, K, coeffs, cfg.V0)
    dP = P_plus - P_minus
    if abs(dP) <= pole_tolerance * max(abs(P_plus), abs(P_minus)):
        raise PoleSingularity(
            'dP/da vanishes at a/K = {}'.format(a / K)
        )
    dR_da = (R_plus - R_minus) / (2.0 * h)
    dP_da = dP / (2.0 * h)
    logger.debug('dR/da = {}, dP/da = {} at a/K = {}'.format(
        dR_da, dP_da, a / K
    ))
    return dR_da / dP_da
