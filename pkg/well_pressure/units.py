"""Physical constants, unit parsing and unit conversion.

All computation in the package happens in SI units. Electronvolts, angstroms
and electron masses are accepted only when text is parsed at the boundary.
"""
import enum
import math
import re
from dataclasses import dataclass

from well_pressure.errors import (
    DimensionMismatch, DomainError, MalformedNumber, UnknownUnit
)


@dataclass(frozen=True)
class PhysicalConstants(object):
    """Pinned constants table, SI units."""

    hbar: float
    electron_mass: float
    electronvolt: float

    def __post_init__(self):
        for (name, value) in vars(self).items():
            if not (math.isfinite(value) and value > 0):
                raise DomainError(
                    'Constant {} must be finite and positive, got {}'
                    .format(name, value)
                )


# CODATA 2018 recommended values. hbar and the electronvolt are exact in the
# 2019 SI; the electron mass carries a relative uncertainty of 3e-10.
CODATA_2018 = PhysicalConstants(
    hbar=1.054571817e-34,  # J s
    electron_mass=9.1093837015e-31,  # kg
    electronvolt=1.602176634e-19  # J
)
constants = CODATA_2018


class Dimension(enum.Enum):
    length = 'length'
    energy = 'energy'
    mass = 'mass'
    force = 'force'
    dimensionless = 'dimensionless'


si_units = {
    Dimension.length: 'm',
    Dimension.energy: 'J',
    Dimension.mass: 'kg',
    Dimension.force: 'N',
    Dimension.dimensionless: ''
}

# unit token -> (dimension, factor to SI)
unit_table = {
    'm': (Dimension.length, 1.0),
    'nm': (Dimension.length, 1e-9),
    'angstrom': (Dimension.length, 1e-10),
    'J': (Dimension.energy, 1.0),
    'eV': (Dimension.energy, constants.electronvolt),
    'kg': (Dimension.mass, 1.0),
    'me': (Dimension.mass, constants.electron_mass),
    'N': (Dimension.force, 1.0),
    '': (Dimension.dimensionless, 1.0)
}

quantity_pattern = re.compile(r'^(?P<number>.*?)(?P<unit>[A-Za-z]*)$')


@dataclass(frozen=True)
class Quantity(object):
    """A finite SI value tagged with its dimension."""

    value: float
    dimension: Dimension

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise MalformedNumber(
                'Quantity value must be finite, got {}'.format(self.value)
            )

    @property
    def unit(self):
        return si_units[self.dimension]

    def to(self, unit):
        """Express the quantity in another unit of the same dimension."""
        (dimension, factor) = lookup_unit(unit)
        if dimension is not self.dimension:
            raise DimensionMismatch('Cannot express {} {} in {}'.format(
                self.dimension.value, self.value, unit or '(dimensionless)'
            ))
        return self.value / factor

    def expect(self, dimension):
        """Return the quantity if it has the given dimension, else raise."""
        if self.dimension is not dimension:
            raise DimensionMismatch('Expected a {} quantity, got {} {}'.format(
                dimension.value, self.dimension.value, format_quantity(self)
            ))
        return self


def lookup_unit(unit):
    try:
        return unit_table[unit]
    except KeyError:
        raise UnknownUnit('Unknown unit: {!r}'.format(unit)) from None


def convert(value, from_unit, to_unit):
    """Convert a value between two units of the same dimension."""
    (from_dimension, from_factor) = lookup_unit(from_unit)
    (to_dimension, to_factor) = lookup_unit(to_unit)
    if from_dimension is not to_dimension:
        raise DimensionMismatch('Cannot convert {} to {}'.format(
            from_unit or '(dimensionless)', to_unit or '(dimensionless)'
        ))
    return value * from_factor / to_factor


def parse_quantity(text):
    """Parse `<number><unit>` into an SI-normalized Quantity.

    A bare unit token such as `me` stands for one of that unit.
    """
    stripped = text.strip()
    match = quantity_pattern.match(stripped)
    number = match.group('number').strip()
    unit = match.group('unit')
    (dimension, factor) = lookup_unit(unit)
    if not number:
        if not unit:
            raise MalformedNumber('Empty quantity: {!r}'.format(text))
        number = '1'
    try:
        value = float(number)
    except ValueError:
        raise MalformedNumber(
            'Cannot parse number {!r} in {!r}'.format(number, text)
        ) from None
    if not math.isfinite(value):
        raise MalformedNumber('Quantity must be finite: {!r}'.format(text))
    return Quantity(value * factor, dimension)


def format_number(value, significant_digits=9):
    """Format a float with the given significant digits.

    significant_digits=None gives the shortest round-trip decimal.
    """
    if significant_digits is None:
        return repr(float(value))
    return '{:.{}g}'.format(value, significant_digits)


def format_quantity(quantity, significant_digits=9):
    """Format a quantity in SI units so that parse_quantity can read it."""
    return '{}{}'.format(
        format_number(quantity.value, significant_digits), quantity.unit
    )


def length(value):
    return Quantity(value, Dimension.length)


def energy(value):
    return Quantity(value, Dimension.energy)


def mass(value):
    return Quantity(value, Dimension.mass)
