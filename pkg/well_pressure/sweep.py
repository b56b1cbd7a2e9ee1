"""Parameter sweeps emitting plot-ready rows."""
import enum
import functools
import io
import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from well_pressure import protocol
from well_pressure.errors import DomainError, WellPressureError
from well_pressure.pressure import (
    Variant, consistent_denominator_weights, pole_tolerance, pressure_profile,
    quartic_terms
)
from well_pressure.probability import (
    BetaSource, beta_from_energy, beta_from_fit, probability_interval
)
from well_pressure.spectrum import energy_exact, well_strength
from well_pressure.units import Dimension, Quantity, format_number
from well_pressure.util.parallel import map_ordered


# Set up logging
logger = logging.getLogger(__name__)

default_near_pole_tolerance = 1e-2
default_pole_tolerance = pole_tolerance


class Parameter(enum.Enum):
    width = 'width'
    depth = 'depth'
    mass = 'mass'
    gamma = 'gamma'


class Scale(enum.Enum):
    linear = 'linear'
    log = 'log'


parameter_dimensions = {
    Parameter.width: Dimension.length,
    Parameter.depth: Dimension.energy,
    Parameter.mass: Dimension.mass,
    Parameter.gamma: Dimension.dimensionless
}
parameter_fields = {
    Parameter.width: 'a',
    Parameter.depth: 'V0',
    Parameter.mass: 'm'
}


@dataclass(frozen=True)
class SweepSpec(object):
    parameter: Parameter
    start: Quantity
    stop: Quantity
    steps: int
    scale: Scale = Scale.linear

    def __post_init__(self):
        object.__setattr__(self, 'parameter', Parameter(self.parameter))
        object.__setattr__(self, 'scale', Scale(self.scale))
        dimension = parameter_dimensions[self.parameter]
        self.start.expect(dimension)
        self.stop.expect(dimension)
        if not self.start.value < self.stop.value:
            raise DomainError('Sweep needs from < to, got {} and {}'.format(
                self.start.value, self.stop.value
            ))
        if int(self.steps) != self.steps or self.steps < 2:
            raise DomainError(
                'Sweep needs at least 2 steps, got {}'.format(self.steps)
            )
        if self.scale is Scale.log and self.start.value <= 0:
            raise DomainError('Log sweep needs from > 0')

    def values(self):
        if self.scale is Scale.log:
            return np.geomspace(self.start.value, self.stop.value, self.steps)
        return np.linspace(self.start.value, self.stop.value, self.steps)


@dataclass(frozen=True)
class SweepRow(object):
    param: float
    a: Optional[float] = None
    n: Optional[float] = None
    K: Optional[float] = None
    xi: Optional[float] = None
    E: Optional[float] = None
    E_over_V0: Optional[float] = None
    P: Optional[float] = None
    dEdP: Optional[float] = None
    R: Optional[float] = None
    flags: Tuple[str, ...] = ()
    denominator_sign: float = field(default=0.0, compare=False)

    @property
    def failed(self):
        return any(
            flag.startswith(protocol.error_flag_prefix) for flag in self.flags
        )

    def with_flag(self, flag):
        if flag in self.flags:
            return self
        fields = dict(vars(self))
        fields['flags'] = self.flags + (flag,)
        return SweepRow(**fields)

    def values(self):
        return (
            self.param, self.a, self.n, self.K, self.xi, self.E,
            self.E_over_V0, self.P, self.dEdP, self.R
        )

    def to_document(self):
        document = dict(zip(protocol.csv_columns, self.values()))
        document['flags'] = list(self.flags)
        return document


def _error_flag(error):
    return '{}{}'.format(protocol.error_flag_prefix, type(error).__name__)


def evaluate_row(
    value, parameter, cfg, coeffs, gamma=None, variant=Variant.consistent,
    beta_source=BetaSource.fit,
    near_pole_tolerance=default_near_pole_tolerance,
    pole_tolerance=default_pole_tolerance
):
    """Evaluate one sweep point; failures become error flags on the row."""
    row = {'param': float(value)}
    flags = []
    if parameter is Parameter.gamma:
        gamma = float(value)
    else:
        try:
            cfg = cfg.replace(**{parameter_fields[parameter]: float(value)})
        except DomainError as e:
            logger.warning('Row {}: {}'.format(value, e))
            return SweepRow(flags=(_error_flag(e),), **row)

    strength = well_strength(cfg)
    row.update(a=cfg.a, n=strength.n, K=strength.K)
    state = None
    try:
        state = energy_exact(cfg, 0)
        row.update(xi=state.xi, E=state.energy, E_over_V0=state.energy / cfg.V0)
    except WellPressureError as e:
        logger.warning('Row {}: {}'.format(value, e))
        flags.append(_error_flag(e))

    profile = pressure_profile(
        cfg.a, strength.K, coeffs, cfg.V0, tolerance=pole_tolerance,
        near_pole_tolerance=near_pole_tolerance
    )
    row['P'] = profile.P
    if Variant(variant) is Variant.printed:
        row['dEdP'] = profile.dEdP_printed
    else:
        row['dEdP'] = profile.dEdP
    if row['dEdP'] is None:
        flags.append('{}PoleSingularity'.format(protocol.error_flag_prefix))
    if profile.near_pole:
        flags.append(protocol.near_pole_flag)

    if gamma is not None:
        try:
            if BetaSource(beta_source) is BetaSource.fit:
                beta = beta_from_fit(
                    cfg.a, strength.K, coeffs, cfg.m, cfg.V0
                )
            elif state is not None:
                beta = beta_from_energy(state.energy, cfg.m, cfg.V0)
            else:
                beta = None
            if beta is not None:
                row['R'] = probability_interval(cfg.a, beta, gamma).R
        except WellPressureError as e:
            logger.warning('Row {}: {}'.format(value, e))
            flags.append(_error_flag(e))

    denominator = math.fsum(quartic_terms(
        cfg.a / strength.K, coeffs, consistent_denominator_weights
    ))
    return SweepRow(
        flags=tuple(flags), denominator_sign=float(np.sign(denominator)),
        **row
    )


def mark_pole_crossings(rows):
    """Flag rows where the dE/dP denominator changed sign since the last row."""
    marked = list(rows)
    for i in range(1, len(marked)):
        (previous, current) = (marked[i - 1], marked[i])
        if previous.denominator_sign * current.denominator_sign < 0:
            marked[i] = current.with_flag(protocol.near_pole_flag)
    return marked


def run_sweep(
    spec, cfg, coeffs, gamma=None, variant=Variant.consistent,
    beta_source=BetaSource.fit,
    near_pole_tolerance=default_near_pole_tolerance,
    pole_tolerance=default_pole_tolerance, workers=1
):
    """Evaluate every sweep point, keeping the input order."""
    evaluate = functools.partial(
        evaluate_row, parameter=spec.parameter, cfg=cfg, coeffs=coeffs,
        gamma=gamma, variant=variant, beta_source=beta_source,
        near_pole_tolerance=near_pole_tolerance, pole_tolerance=pole_tolerance
    )
    values = [float(value) for value in spec.values()]
    rows = mark_pole_crossings(map_ordered(evaluate, values, workers=workers))
    logger.info('Swept {} over {} points, {} failed'.format(
        spec.parameter.value, len(rows), sum(row.failed for row in rows)
    ))
    return rows


def _format_cell(value):
    if value is None:
        return ''
    return format_number(value, significant_digits=None)


def render_csv(rows):
    buffer = io.StringIO()
    buffer.write(protocol.csv_header + '\n')
    for row in rows:
        cells = [_format_cell(value) for value in row.values()]
        cells.append(protocol.flag_separator.join(row.flags))
        buffer.write(','.join(cells) + '\n')
    return buffer.getvalue()
