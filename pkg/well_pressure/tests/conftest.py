import numpy as np
import pytest

from well_pressure.fitseries import PUBLISHED_COEFFICIENTS
from well_pressure.spectrum import WellConfig, well_strength
from well_pressure.units import parse_quantity


@pytest.fixture
def rng():
    return np.random.default_rng(20011127)


@pytest.fixture
def hydrogen():
    return WellConfig(
        a=parse_quantity('0.529angstrom').value,
        V0=parse_quantity('13.6058eV').value,
        m=parse_quantity('me').value
    )


@pytest.fixture
def hydrogen_K(hydrogen):
    return well_strength(hydrogen).K


@pytest.fixture
def published():
    return PUBLISHED_COEFFICIENTS
