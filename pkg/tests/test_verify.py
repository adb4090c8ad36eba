import math

import numpy as np
import pytest

from fisheye.errors import FieldEvaluationFailure, TooCloseToSingularity
from fisheye.greens import green, green_generalized, singular_coefficient
from fisheye.medium import Medium
from fisheye.verify import (
    CHECK_FAMILIES,
    CheckOutcome,
    extract_far_field_constant,
    extract_singular_coefficient,
    fd_laplacian,
    nu_derivative_oracle,
    pde_residual,
    run_suite,
    sample_ball,
    singular_coefficient_samples,
)


@pytest.mark.parametrize("N", [2, 3, 5])
def test_fd_laplacian_exact_on_quadratics(N):
    assert fd_laplacian(lambda x: x @ x, np.linspace(-1, 1, N), 1e-2) == pytest.approx(2 * N, abs=1e-9)
    A = np.arange(N * N, dtype=float).reshape(N, N) / 7
    quad = lambda x: x @ A @ x + 3 * x[0] - 2
    assert fd_laplacian(quad, np.ones(N), 0.5) == pytest.approx(np.trace(A + A.T), rel=1e-12)


def test_fd_laplacian_harmonic():
    f = lambda x: 1 / np.linalg.norm(x)
    assert abs(fd_laplacian(f, np.array([0.6, 0.0, 0.8]), 1e-3)) < 1e-4


def test_fd_laplacian_failures():
    with pytest.raises(FieldEvaluationFailure):
        fd_laplacian(lambda x: 1 / (x[0] - 0.5) if x[0] != 0.5 else float("inf"), np.array([0.5, 0]), 0.1)
    with pytest.raises(FieldEvaluationFailure):
        fd_laplacian(lambda x: 1 / 0, np.zeros(2), 0.1)
    with pytest.raises(ValueError):
        fd_laplacian(lambda x: 1.0, np.zeros(2), 0.0)


def test_pde_residual_guard_and_report():
    m = Medium(3)
    q = np.array([0.2, 0.0, 0.1])
    field = lambda x: green(m, 0.4, x, q).value
    with pytest.raises(TooCloseToSingularity):
        pde_residual(m, 0.4, field, q + 1e-4, h=1e-4, singular_points=(q,))
    rep = pde_residual(m, 0.4, field, np.array([1.0, 0.5, -0.3]), singular_points=(q,))
    assert rep.step > 0 and rep.residual_rel <= 1e-5
    assert rep.order_estimate is not None
    assert pde_residual(m, 0.4, field, np.array([1.0, 0.5, -0.3]), estimate_order=False).order_estimate is None


@pytest.mark.parametrize("N, n", [(3, 0), (2, 1)])
def test_nu_derivative_oracle_matches_closed_form(N, n):
    m = Medium(N)
    r, q = np.full(N, 0.4), np.linspace(-0.5, 0.7, N)
    val = green_generalized(m, n, r, q).value
    assert abs(nu_derivative_oracle(m, n, r, q) - val) <= 1e-6 * max(1.0, abs(val))


def test_nu_derivative_oracle_step_halving():
    m = Medium(3)
    r, q = [0.3, 0.4, 0.5], [-0.2, 0.1, 0.0]
    a = nu_derivative_oracle(m, 1, r, q, eps=1e-4)
    b = nu_derivative_oracle(m, 1, r, q, eps=5e-5)
    assert abs(a - b) < 1e-7
    with pytest.raises(ValueError):
        nu_derivative_oracle(m, 1, r, q, eps=1e-2)


def test_nu_derivative_richardson_gap_shrinks():
    m = Medium(4)
    r, q = [0.3, 0.4, 0.5, -0.1], [-0.2, 0.1, 0.0, 0.3]
    gap = lambda e: abs(nu_derivative_oracle(m, 0, r, q, e, richardson=True) - nu_derivative_oracle(m, 0, r, q, e))
    ratio = gap(1e-3) / gap(5e-4)
    assert 3.5 < ratio < 4.5


@pytest.mark.parametrize("N", [3, 4, 5])
def test_extract_singular_coefficient(N):
    m = Medium(N)
    q = np.linspace(0.2, -0.4, N)
    val = extract_singular_coefficient(m, 0.6, q, 1e-6)
    ref = singular_coefficient(m)
    assert abs(val / ref - 1) <= 1e-3
    samples = singular_coefficient_samples(m, 0.6, q, 1e-6).real
    assert (samples.max() - samples.min()) <= 1e-3 * abs(ref)


def test_extract_singular_coefficient_two_d():
    m = Medium(2)
    q = [0.3, -0.2]
    assert extract_singular_coefficient(m, 0.6, q, 1e-6, method="slope") == pytest.approx(
        1 / (2 * math.pi), rel=1e-3)
    with pytest.raises(ValueError):
        extract_singular_coefficient(m, 0.6, q, 1e-1)
    with pytest.raises(ValueError):
        extract_singular_coefficient(Medium(3), 0.6, [0, 0, 0.1], 1e-6, method="slope")


def test_extract_far_field_constant():
    from fisheye.greens import asymptotic_constant
    m = Medium(3)
    q = [0.5, 0.2, -0.3]
    c = extract_far_field_constant(m, 0.35, q, [1, 1, 1])
    assert abs(c - asymptotic_constant(m, 0.35, q)) <= 1e-8 * abs(c)


def test_sample_ball():
    pts = sample_ball(4, 64, seed=3, radius=2.0, blocks=2)
    assert pts.shape == (64, 8)
    assert np.all(np.linalg.norm(pts.reshape(64, 2, 4), axis=2) <= 2.0 + 1e-12)
    np.testing.assert_array_equal(pts, sample_ball(4, 64, seed=3, radius=2.0, blocks=2))
    assert not np.array_equal(pts, sample_ball(4, 64, seed=4, radius=2.0, blocks=2))


def test_check_outcome_contract():
    o = CheckOutcome.make("x", 1e-6, 1e-5, N=3)
    assert o.passed and o.as_dict() == {"name": "x", "passed": True, "measured": 1e-6,
                                        "tolerance": 1e-5, "context": {"N": 3}}
    assert not CheckOutcome.make("x", math.nan, 1.0).passed


def test_run_suite_filter_family():
    outcomes = run_suite({"wronskian"}, seed=0)
    assert [o.name for o in outcomes] == ["wronskian"]
    assert outcomes[0].passed


def test_run_suite_filter_single_outcome():
    outcomes = run_suite(["half_odd_forms.PQ"], seed=1)
    assert [o.name for o in outcomes] == ["half_odd_forms.PQ"]


def test_run_suite_unknown_name():
    with pytest.raises(ValueError):
        run_suite(["no_such_check"])


def test_run_suite_deterministic():
    sel = {"symmetry", "far_field", "generalized"}
    a = [o.as_dict() for o in run_suite(sel, seed=7)]
    b = [o.as_dict() for o in run_suite(sel, seed=7)]
    assert a == b


def test_full_suite_passes():
    outcomes = run_suite(seed=0)
    families = {o.name.split(".")[0] for o in outcomes}
    assert families == set(CHECK_FAMILIES)
    failed = [(o.name, o.measured, o.tolerance) for o in outcomes if not o.passed]
    assert not failed
