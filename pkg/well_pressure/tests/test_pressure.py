import math

import numpy as np
import pytest

from well_pressure.errors import DomainError, NoRoot, PoleSingularity
from well_pressure.fitseries import (
    PUBLISHED_COEFFICIENTS, FitCoefficients, energy_from_fit
)
from well_pressure.pressure import (
    Response, Variant, WidthMethod, classify_response, critical_width,
    denergy_dpressure, denominator_ratio, expansion_small_k,
    expansion_small_width, pressure_1d, pressure_profile, pressure_slope
)
from well_pressure.tests import oracles

# Well-behaved synthetic series for expansions that need small higher terms
gentle = FitCoefficients(c=(0.0, 1.0, 0.5, -0.3, 0.2, -0.1))
K = 1.0
V0 = 3.0


@pytest.fixture(scope='module')
def widths():
    return critical_width(K, PUBLISHED_COEFFICIENTS, method=WidthMethod.numeric)


def test_zero_series_has_no_pressure():
    zero = FitCoefficients(c=(0.5, 0.0, 0.0, 0.0, 0.0, 0.0))
    assert pressure_1d(2.0, K, zero, V0) == 0.0


def test_pressure_series(published):
    c = published.c
    expected = sum(i * c[i] / 2.0 ** i for i in range(1, 6))
    assert pressure_1d(2.0 * K, K, published, V0) * 2.0 * K / V0 == pytest.approx(
        expected, rel=1e-12
    )


@pytest.mark.parametrize('t', [0.5, 1.0, 2.0, 3.0, 5.0])
def test_pressure_is_minus_energy_slope(published, hydrogen, hydrogen_K, t):
    a = t * hydrogen_K
    h = 1e-6 * a
    expected = -oracles.central_difference(
        lambda width: energy_from_fit(width, hydrogen_K, published, hydrogen.V0),
        a, h
    )
    assert pressure_1d(a, hydrogen_K, published, hydrogen.V0) == pytest.approx(
        expected, rel=1e-6
    )


@pytest.mark.parametrize('t', [0.5, 2.0, 5.0])
def test_pressure_slope_matches_difference(published, t):
    a = t * K
    h = 1e-6 * a
    expected = oracles.central_difference(
        lambda width: pressure_1d(width, K, published, V0), a, h
    )
    assert pressure_slope(a, K, published, V0) == pytest.approx(
        expected, rel=1e-6
    )


def test_deep_well_limits(published):
    a = 1.0
    deep = a * 1e-9
    assert denergy_dpressure(a, deep, published, Variant.consistent) == (
        pytest.approx(a / 2.0, rel=1e-5)
    )
    assert denergy_dpressure(a, deep, published, Variant.printed) == (
        pytest.approx(a / 4.0, rel=1e-5)
    )


def test_narrow_well_limit(published):
    a = 1e-9
    for variant in Variant:
        assert denergy_dpressure(a, 1.0, published, variant) == pytest.approx(
            a / 6.0, rel=1e-6
        )


def test_closed_form_equals_derivative_ratio(published, widths, rng):
    pole = widths.pole_location / K
    count = 0
    while count < 1000:
        t = rng.uniform(0.05, 10.0)
        if abs(t - pole) <= 0.01 * pole:
            continue
        a = t * K
        expected = -pressure_1d(a, K, published, V0) / pressure_slope(
            a, K, published, V0
        )
        assert denergy_dpressure(a, K, published) == pytest.approx(
            expected, rel=1e-12, abs=1e-12 * a
        )
        count += 1


def test_pole_raises(published, widths):
    with pytest.raises(PoleSingularity):
        denergy_dpressure(widths.pole_location, K, published)
    profile = pressure_profile(widths.pole_location, K, published, V0)
    assert profile.dEdP is None
    assert profile.near_pole
    assert denominator_ratio(widths.pole_location, K, published) < 1e-12


def test_profile_away_from_pole(published):
    profile = pressure_profile(
        3.0 * K, K, published, V0, near_pole_tolerance=1e-2
    )
    assert not profile.near_pole
    assert profile.P == pressure_1d(3.0 * K, K, published, V0)
    assert profile.dEdP == denergy_dpressure(3.0 * K, K, published)
    assert profile.dEdP_printed == denergy_dpressure(
        3.0 * K, K, published, Variant.printed
    )


def test_small_width_expansion(published):
    errors = {}
    for t in (0.01, 0.001):
        a = t * K
        exact = denergy_dpressure(a, K, published)
        approx = expansion_small_width(a, K, published)
        assert approx == pytest.approx(exact, rel=1e-2)
        errors[t] = abs(approx - exact) / abs(exact)
    assert errors[0.01] >= 30.0 * errors[0.001]
    a0 = -7.5 * published.c[5] / published.c[4] * K
    assert abs(expansion_small_width(a0, K, published)) <= 1e-12 * a0
    assert expansion_small_width(1e-12, K, published) == pytest.approx(
        1e-12 / 6.0, rel=1e-9
    )


def test_small_width_expansion_needs_c5():
    with pytest.raises(DomainError):
        expansion_small_width(
            1.0, K, FitCoefficients(c=(0.0, 1.0, 1.0, 1.0, 1.0, 0.0))
        )


def test_small_k_expansion_tracks_closed_form(published):
    a = 1.0
    for (coeffs, ratio) in ((gentle, 0.01), (published, 1e-4)):
        k = ratio * a
        assert expansion_small_k(a, k, coeffs) == pytest.approx(
            denergy_dpressure(a, k, coeffs), rel=1e-2
        )
    assert expansion_small_k(a, 1e-12 * a, published) == pytest.approx(
        a / 2.0, rel=1e-9
    )


def test_small_k_variants_differ_in_third_term(published):
    (a, k) = (2.0, 0.1)
    c = published.c
    difference = (
        expansion_small_k(a, k, published, Variant.consistent)
        - expansion_small_k(a, k, published, Variant.printed)
    )
    expected = 3.0 * k * k / (2.0 * a * c[1] ** 2) * (c[3] ** 2 - c[1] * c[3])
    assert difference == pytest.approx(expected, rel=1e-9)


def test_small_k_expansion_needs_c1():
    with pytest.raises(DomainError):
        expansion_small_k(
            1.0, 0.1, FitCoefficients(c=(0.0, 0.0, 1.0, 1.0, 1.0, 1.0))
        )


def test_critical_width_published(published):
    report = critical_width(K, published)
    assert report.a0_paper == pytest.approx(2.476601 * K, rel=1e-5)
    assert report.a0 == report.a0_paper
    assert report.a0_numeric is None


def test_critical_width_numeric(published, widths):
    assert widths.a0_numeric == pytest.approx(0.89 * K, abs=0.01)
    assert widths.pole_location == pytest.approx(1.1 * K, abs=0.05)
    assert widths.a0_paper == pytest.approx(2.476601 * K, rel=1e-5)
    assert widths.a0 == widths.a0_numeric
    roots = np.roots([
        weight * published.c[i]
        for (i, weight) in zip(range(1, 6), (1, 2, 3, 4, 5))
    ])
    positive = sorted(
        root.real for root in roots
        if abs(root.imag) < 1e-12 and root.real > 0
    )
    assert widths.a0_numeric == pytest.approx(positive[0] * K, abs=1e-9)


def test_critical_width_without_root():
    lonely = FitCoefficients(c=(0.0, 0.0, 0.0, 0.0, 0.0, 1.0))
    for method in WidthMethod:
        with pytest.raises(NoRoot):
            critical_width(K, lonely, method=method)


@pytest.mark.parametrize('factor', [0.5, 3.0, 1e3])
def test_critical_width_scale_invariant(published, factor):
    scaled = published.scaled(factor)
    for method in WidthMethod:
        assert critical_width(K, scaled, method=method).a0 == pytest.approx(
            critical_width(K, published, method=method).a0, rel=1e-10
        )


def test_critical_width_scales_with_k(published):
    assert critical_width(2.0, published).a0 == pytest.approx(
        2.0 * critical_width(1.0, published).a0, rel=1e-15
    )


def test_classification(published, hydrogen, hydrogen_K):
    result = classify_response(hydrogen.a, hydrogen_K, published)
    assert result.response is Response.ionizes
    assert not result.boundary
    assert result.a0 == pytest.approx(1.31056e-10, rel=2e-3)

    wide = classify_response(10.0 * result.a0, hydrogen_K, published)
    assert wide.response is Response.pushed_deeper

    tie = classify_response(result.a0, hydrogen_K, published)
    assert tie.response is Response.pushed_deeper
    assert tie.boundary


def test_classification_numeric(published, widths):
    below = classify_response(
        0.5 * widths.a0_numeric, K, published, method=WidthMethod.numeric
    )
    assert below.response is Response.ionizes
    above = classify_response(
        2.0 * widths.a0_numeric, K, published, method=WidthMethod.numeric
    )
    assert above.response is Response.pushed_deeper


def test_pressure_domain(published):
    for (a, k) in ((0.0, 1.0), (1.0, 0.0), (math.nan, 1.0)):
        with pytest.raises(DomainError):
            pressure_1d(a, k, published, V0)
        with pytest.raises(DomainError):
            denergy_dpressure(a, k, published)
