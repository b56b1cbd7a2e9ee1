"""Even-parity bound states of the one-dimensional finite square well.

The well is zero for |x| < a and V0 outside. With n = a*sqrt(2 m V0)/hbar the
even states satisfy xi*tan(xi) = sqrt(n**2 - xi**2) and E = (xi/n)**2 * V0.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from well_pressure.errors import (
    ConvergenceFailure, DomainError, NoSuchBranch, UsageError
)
from well_pressure.units import Dimension, constants, parse_quantity


# Set up logging
logger = logging.getLogger(__name__)

root_tolerance = 1e-12
max_iterations = 200


def require_positive(**values):
    for (name, value) in values.items():
        if not (math.isfinite(value) and value > 0):
            raise DomainError(
                '{} must be finite and positive, got {}'.format(name, value)
            )


@dataclass(frozen=True)
class WellConfig(object):
    """Physical description of the well, SI units."""

    a: float  # half-width, m
    V0: float  # depth, J
    m: float  # particle mass, kg

    def __post_init__(self):
        require_positive(a=self.a, V0=self.V0, m=self.m)

    def replace(self, **changes):
        fields = {'a': self.a, 'V0': self.V0, 'm': self.m}
        fields.update(changes)
        return WellConfig(**fields)


@dataclass(frozen=True)
class WellStrength(object):
    n: float  # dimensionless strength
    K: float  # characteristic length, m


@dataclass(frozen=True)
class BoundState(object):
    branch: int
    xi: float
    eta: float
    alpha: float  # 1/m
    beta: float  # 1/m
    energy: float  # J

    @property
    def E(self):
        return self.energy


def characteristic_length(V0, m):
    """K = hbar / sqrt(2 m V0)."""
    require_positive(V0=V0, m=m)
    return constants.hbar / math.sqrt(2.0 * m * V0)


def well_strength(cfg):
    """Dimensionless strength n and characteristic length K of a well."""
    require_positive(a=cfg.a, V0=cfg.V0, m=cfg.m)
    K = characteristic_length(cfg.V0, cfg.m)
    return WellStrength(n=cfg.a / K, K=K)


def branch_bracket(n, branch):
    """Interval (k pi, min(k pi + pi/2, n)) holding the root of a branch."""
    require_positive(n=n)
    if branch < 0 or int(branch) != branch:
        raise DomainError(
            'Branch must be a non-negative integer, got {}'.format(branch)
        )
    lower = branch * math.pi
    upper = min(lower + 0.5 * math.pi, n)
    if upper <= lower:
        raise NoSuchBranch(
            'Even branch {} does not exist for n = {}'.format(branch, n)
        )
    return (lower, upper)


def count_even_states(n):
    """Number of even-parity bound states held by a well of strength n."""
    require_positive(n=n)
    return int(math.ceil(n / math.pi))


def even_residual(xi, n):
    """xi*tan(xi) - sqrt(n**2 - xi**2)."""
    return xi * math.tan(xi) - math.sqrt(max(n * n - xi * xi, 0.0))


def _pole_free_residual(xi, n):
    # cos(xi) times the residual; continuous across xi = pi/2
    return xi * math.sin(xi) - math.cos(xi) * math.sqrt(max(n * n - xi * xi, 0.0))


def solve_even_root(n, branch=0):
    """Solve xi*tan(xi) = sqrt(n**2 - xi**2) on the bracket of a branch."""
    (lower, upper) = branch_bracket(n, branch)
    f_lower = _pole_free_residual(lower, n)
    f_upper = _pole_free_residual(upper, n)
    if f_lower == 0.0:
        xi = lower
    elif f_upper == 0.0:
        xi = upper
    else:
        try:
            (xi, result) = optimize.brentq(
                _pole_free_residual, lower, upper, args=(n,),
                xtol=1e-15, rtol=4 * np.finfo(float).eps,
                maxiter=max_iterations, full_output=True, disp=False
            )
        except ValueError as e:
            raise ConvergenceFailure(
                'Bracket ({}, {}) for n = {} failed: {}'
                .format(lower, upper, n, e)
            ) from None
        logger.debug(
            'Branch {} for n = {}: bracket ({:.6g}, {:.6g}), {} iterations'
            .format(branch, n, lower, upper, result.iterations)
        )
        if not result.converged:
            raise ConvergenceFailure(
                'Root solver did not converge for n = {}, branch {}: {}'
                .format(n, branch, result.flag)
            )
    residual = abs(even_residual(xi, n))
    if residual > root_tolerance * max(1.0, n):
        raise ConvergenceFailure(
            'Residual {:.3e} above tolerance for n = {}, branch {}'
            .format(residual, n, branch)
        )
    return xi


def energy_exact(cfg, branch=0):
    """Solve one even-parity branch and populate its BoundState."""
    strength = well_strength(cfg)
    n = strength.n
    xi = solve_even_root(n, branch)
    eta = math.sqrt(max(n * n - xi * xi, 0.0))
    return BoundState(
        branch=branch,
        xi=xi,
        eta=eta,
        alpha=xi / cfg.a,
        beta=eta / cfg.a,
        energy=(xi / n) ** 2 * cfg.V0
    )


def even_states(cfg):
    """All even-parity bound states of the well, ground state first."""
    n = well_strength(cfg).n
    return [energy_exact(cfg, branch) for branch in range(count_even_states(n))]


# Command-line args

well_fields = ('width', 'depth', 'mass')


def add_well_arguments(arg_parser):
    arg_parser.add_argument(
        '--width', '-w', type=str, default=None,
        help='Well half-width, e.g. 0.529angstrom. Overrides the preset.'
    )
    arg_parser.add_argument(
        '--depth', '-V', type=str, default=None,
        help='Well depth, e.g. 13.6058eV. Overrides the preset.'
    )
    arg_parser.add_argument(
        '--mass', '-m', type=str, default=None,
        help='Particle mass, e.g. me or 9.1e-31kg. Overrides the preset.'
    )
    arg_parser.add_argument(
        '--preset', '-p', type=str, default=None,
        help='Name of a well preset in the settings file, e.g. hydrogen.'
    )


def parse_well_from_args(parsed_args, configuration, defaults={}):
    """Build a WellConfig from unit-grammar flags, a preset and defaults."""
    texts = {}
    if parsed_args.preset is not None:
        presets = configuration.get('presets', {})
        if parsed_args.preset not in presets:
            raise UsageError('Unknown preset: {}'.format(parsed_args.preset))
        texts.update(presets[parsed_args.preset])
    for name in well_fields:
        value = getattr(parsed_args, name)
        if value is not None:
            texts[name] = value
    values = dict(defaults)
    for (name, dimension) in zip(
        well_fields, (Dimension.length, Dimension.energy, Dimension.mass)
    ):
        if name in texts:
            values[name] = parse_quantity(texts[name]).expect(dimension).value
    missing = [name for name in well_fields if name not in values]
    if missing:
        raise UsageError('Missing well parameters: {}'.format(
            ', '.join('--{}'.format(name) for name in missing)
        ))
    return WellConfig(a=values['width'], V0=values['depth'], m=values['mass'])
