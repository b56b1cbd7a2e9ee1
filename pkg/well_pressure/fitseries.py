"""Inverse-power series fit of ground-state energies.

Exact ground-state energies sampled over a grid of strengths n are fitted by
E/V0 = sum(c[i] / n**i for i in 0..5), solved as an ordinary degree-5
polynomial in u = 1/n.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from well_pressure import protocol
from well_pressure.errors import DomainError, SingularSystem
from well_pressure.spectrum import require_positive, solve_even_root
from well_pressure.util import files
from well_pressure.util.parallel import map_ordered


# Set up logging
logger = logging.getLogger(__name__)

degree = 5
min_grid_points = 12


@dataclass(frozen=True)
class FitGrid(object):
    n_start: float
    n_stop: float
    n_count: int

    def __post_init__(self):
        if not (1.0 <= self.n_start < self.n_stop):
            raise DomainError(
                'Fit grid needs 1 <= n_start < n_stop, got {}:{}'
                .format(self.n_start, self.n_stop)
            )
        if int(self.n_count) != self.n_count or self.n_count < min_grid_points:
            raise DomainError(
                'Fit grid needs at least {} points, got {}'
                .format(min_grid_points, self.n_count)
            )

    def values(self):
        return np.linspace(self.n_start, self.n_stop, int(self.n_count))

    def to_document(self):
        return {
            'n_start': self.n_start,
            'n_stop': self.n_stop,
            'n_count': int(self.n_count)
        }

    @classmethod
    def from_document(cls, document):
        return cls(
            n_start=float(document['n_start']),
            n_stop=float(document['n_stop']),
            n_count=int(document['n_count'])
        )

    @classmethod
    def parse(cls, text):
        """Parse `start:stop:count`."""
        parts = text.split(':')
        if len(parts) != 3:
            raise DomainError(
                'Grid must be start:stop:count, got {!r}'.format(text)
            )
        try:
            return cls(float(parts[0]), float(parts[1]), int(parts[2]))
        except ValueError:
            raise DomainError(
                'Grid must be start:stop:count, got {!r}'.format(text)
            ) from None


# Below n = 1.5 the degree-5 series cannot reach sigma <= 1e-5
default_grid = FitGrid(1.5, 10.0, 86)


@dataclass(frozen=True)
class FitCoefficients(object):
    c: Tuple[float, ...]
    sigma: float = 0.0
    source: str = protocol.source_refit
    grid: Optional[FitGrid] = field(default=None)

    def __post_init__(self):
        c = tuple(float(value) for value in self.c)
        if len(c) != degree + 1:
            raise DomainError('Expected {} coefficients, got {}'.format(
                degree + 1, len(c)
            ))
        if not all(math.isfinite(value) for value in c):
            raise DomainError('Coefficients must be finite: {}'.format(c))
        if not (math.isfinite(self.sigma) and self.sigma >= 0):
            raise DomainError('Fit sigma must be >= 0, got {}'.format(
                self.sigma
            ))
        if self.source not in (protocol.source_paper, protocol.source_refit):
            raise DomainError('Unknown coefficient source {!r}'.format(
                self.source
            ))
        object.__setattr__(self, 'c', c)

    def scaled(self, factor):
        """The same series multiplied by a constant factor."""
        return FitCoefficients(
            tuple(factor * value for value in self.c), source=self.source,
            sigma=abs(factor) * self.sigma, grid=self.grid
        )


PUBLISHED_COEFFICIENTS = FitCoefficients(
    c=(-0.000618, 0.018006, 2.259278, -3.678692, 2.908830, -0.960535),
    sigma=2.2e-6,
    source=protocol.source_paper
)


# Sampling

def ground_energy_ratio(n):
    """Exact ground-state E/V0 of a well of strength n."""
    return (solve_even_root(n, 0) / n) ** 2


def sample_energies(grid=default_grid, workers=1):
    """Exact (n, E/V0) pairs on a uniform grid, in grid order."""
    n_values = [float(n) for n in grid.values()]
    ratios = map_ordered(ground_energy_ratio, n_values, workers=workers)
    return list(zip(n_values, ratios))


# Fitting

def fit_inverse_poly(points, grid=None):
    """Least-squares fit of E/V0 against powers of 1/n up to degree 5."""
    points = list(points)
    if len(points) < min_grid_points:
        raise DomainError('Need at least {} points to fit, got {}'.format(
            min_grid_points, len(points)
        ))
    n_values = np.array([n for (n, _) in points], dtype=float)
    ratios = np.array([ratio for (_, ratio) in points], dtype=float)
    if np.any(n_values <= 0):
        raise DomainError('Fit points need n > 0')
    if len(np.unique(n_values)) != len(n_values):
        raise DomainError('Fit points need distinct n values')

    u = 1.0 / n_values
    design = np.vander(u, degree + 1, increasing=True)
    (c, _, rank, singular_values) = np.linalg.lstsq(design, ratios, rcond=None)
    if rank < degree + 1:
        raise SingularSystem(
            'Design matrix has rank {} < {} (singular values {})'
            .format(rank, degree + 1, singular_values)
        )
    residuals = design @ c - ratios
    sigma = float(np.sqrt(np.mean(residuals ** 2)))
    logger.info('Fitted {} points: sigma = {:.3e}, condition = {:.3e}'.format(
        len(points), sigma, singular_values[0] / singular_values[-1]
    ))
    return FitCoefficients(
        c=tuple(float(value) for value in c), sigma=sigma,
        source=protocol.source_refit, grid=grid
    )


def refit(grid=default_grid, workers=1):
    """Sample the exact energies on a grid and fit them."""
    return fit_inverse_poly(sample_energies(grid, workers=workers), grid=grid)


# Evaluation

def eval_fit(coeffs, n):
    """Horner evaluation of the series in 1/n."""
    if not (math.isfinite(n) and n > 0):
        raise DomainError('Series needs n > 0, got {}'.format(n))
    u = 1.0 / n
    total = 0.0
    for value in reversed(coeffs.c):
        total = total * u + value
    return total


def energy_from_fit(a, K, coeffs, V0):
    """E = V0 * sum(c[i] * (K/a)**i)."""
    require_positive(a=a, K=K)
    return V0 * eval_fit(coeffs, a / K)


# Interchange document

def coefficients_to_document(coeffs):
    return {
        protocol.coefficients_key: list(coeffs.c),
        protocol.sigma_key: coeffs.sigma,
        protocol.source_key: coeffs.source,
        protocol.grid_key: (
            coeffs.grid.to_document() if coeffs.grid is not None else None
        )
    }


def coefficients_from_document(document):
    try:
        grid = document.get(protocol.grid_key)
        return FitCoefficients(
            c=tuple(document[protocol.coefficients_key]),
            sigma=float(document[protocol.sigma_key]),
            source=document[protocol.source_key],
            grid=FitGrid.from_document(grid) if grid is not None else None
        )
    except (AttributeError, KeyError, TypeError, ValueError) as e:
        raise DomainError(
            'Malformed coefficients document: {}'.format(e)
        ) from None


def save_coefficients(coeffs, path):
    files.json_dump(coefficients_to_document(coeffs), path)
    logger.info('Saved coefficients to: {}'.format(path))


def load_coefficients(path):
    logger.info('Loading coefficients from {}...'.format(path))
    return coefficients_from_document(files.json_load(path))


# Command-line args

def add_coefficients_arguments(arg_parser):
    arg_parser.add_argument(
        '--coefficients', '-k', type=str, default=None,
        help=(
            'Path of a coefficients JSON document. Default: the published '
            'coefficient set.'
        )
    )

def load_coefficients_from_args(parsed_args):
    if parsed_args.coefficients is None:
        return PUBLISHED_COEFFICIENTS
    return load_coefficients(parsed_args.coefficients)
