import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fisheye.errors import DimensionParity
from fisheye.special import EVEN_FORMULAS, ODD_FORMULAS, dP_dnu_resonant, ferrers_P

# mpmath diff(legenp(nu, 1 - N/2, x), nu) at nu = n + N/2 - 1, keyed by (N, n, x)
FROZEN = [
    ((4, 2, -0.3), 0.23659932554265528),
    ((3, 1, 0.25), -0.5657440800229676),
    ((6, 3, 0.8), -0.008983352149875612),
    ((5, 0, -0.9), -1.8093493385218644),
    ((2, 2, 0.1), -0.09254905463352409),
    ((7, 4, -0.5), 0.002784602820637356),
]


def central_difference(N, n, x, eps=1e-5):
    nu = n + N / 2 - 1
    mu = 1 - N / 2
    return ((ferrers_P(nu + eps, mu, x) - ferrers_P(nu - eps, mu, x)) / (2 * eps)).real


def formulas(N):
    return EVEN_FORMULAS if N % 2 == 0 else ODD_FORMULAS


def test_two_dimensional_ground_state():
    for formula in EVEN_FORMULAS:
        assert dP_dnu_resonant(2, 0, 0.4, formula) == pytest.approx(math.log(0.7), rel=1e-12)


def test_odd_layouts_agree_n3():
    a, b = (dP_dnu_resonant(3, 1, 0.25, f) for f in ODD_FORMULAS)
    assert abs(a - b) <= 1e-12 * abs(a)


def test_n4_central_difference():
    assert abs(dP_dnu_resonant(4, 2, -0.3) - central_difference(4, 2, -0.3)) <= 1e-6


@pytest.mark.parametrize("key, ref", FROZEN)
def test_frozen_values_every_formula(key, ref):
    N, n, x = key
    for formula in formulas(N):
        assert dP_dnu_resonant(N, n, x, formula) == pytest.approx(ref, rel=1e-10), formula


def test_parity_family_mismatch():
    with pytest.raises(DimensionParity):
        dP_dnu_resonant(4, 1, 0.2, "odd_power")
    with pytest.raises(DimensionParity):
        dP_dnu_resonant(3, 1, 0.2, "even_legendre")
    with pytest.raises(ValueError):
        dP_dnu_resonant(3, -1, 0.2)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 6, 7]), st.integers(0, 4), st.floats(-0.95, 0.95))
def test_formulas_agree_pairwise(N, n, x):
    vals = [dP_dnu_resonant(N, n, x, f) for f in formulas(N)]
    scale = max(1.0, *(abs(v) for v in vals))
    assert max(vals) - min(vals) <= 1e-10 * scale


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 6, 7]), st.integers(0, 4), st.floats(-0.95, 0.95))
def test_matches_numerical_derivative(N, n, x):
    val = dP_dnu_resonant(N, n, x)
    ref = central_difference(N, n, x)
    assert abs(val - ref) <= 1e-6 * max(1.0, abs(ref))
