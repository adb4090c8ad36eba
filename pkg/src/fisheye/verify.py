"""Numerical oracles and the verification suite.

Nothing here uses the closed forms to check themselves: residuals come from
finite differences, degree derivatives from symmetric differences in nu,
singular and far-field coefficients from sampling the function. The suite
runner turns every identity the library relies on into a named, seeded
check whose outcome can be serialized.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.stats import qmc

from . import greens as gr
from . import medium as md
from .errors import FieldEvaluationFailure, ParameterPole, TooCloseToSingularity
from .special import degree_derivative as dd
from .special import trig
from .special.gamma import log_gamma, rgamma
from .special.legendre import (
    ferrers_P,
    ferrers_p_ts,
    legendre_R,
    legendre_r_ts,
    split_argument,
)

__all__ = [
    "ResidualReport",
    "CheckOutcome",
    "fd_laplacian",
    "pde_residual",
    "local_length_scale",
    "nu_derivative_oracle",
    "singular_coefficient_samples",
    "extract_singular_coefficient",
    "far_field_product",
    "extract_far_field_constant",
    "sample_ball",
    "run_suite",
    "CHECK_FAMILIES",
]

# steps relative to the local length scale; see pde_residual
STEP_FACTOR = 3e-4
ORDER_STEP_FACTOR = 1e-2
# stencil must stay this many steps away from a singular point
SAFE_STEPS = 10


@dataclass(frozen=True)
class ResidualReport:
    """Finite-difference residual of the fish-eye equation at one point."""

    point: tuple
    step: float
    residual_abs: float
    residual_rel: float
    order_estimate: float | None = None


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    measured: float
    tolerance: float
    context: dict = field(default_factory=dict)

    @classmethod
    def make(cls, name, measured, tolerance, **context):
        measured = float(measured)
        return cls(name, bool(measured <= tolerance), measured, float(tolerance), context)

    def as_dict(self):
        return {"name": self.name, "passed": self.passed, "measured": self.measured,
                "tolerance": self.tolerance, "context": self.context}


# ---------------------------------------------------------------- oracles

def _call(field_fn, x):
    try:
        v = complex(field_fn(x))
    except Exception as exc:  # field errors become a single failure type
        raise FieldEvaluationFailure(f"field raised at {list(x)}: {exc}") from exc
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise FieldEvaluationFailure(f"field is not finite at {list(x)}")
    return v


def _axis_terms(field_fn, p, h):
    if not h > 0:
        raise ValueError(f"step must be positive, got {h!r}")
    p = np.asarray(p, dtype=float)
    f0 = _call(field_fn, p)
    terms = []
    for i in range(p.size):
        e = np.zeros_like(p)
        e[i] = h
        terms.append((_call(field_fn, p + e) - 2.0 * f0 + _call(field_fn, p - e)) / h ** 2)
    return f0, terms


def fd_laplacian(field_fn: Callable, p, h: float) -> complex:
    """Second-order central-difference Laplacian on the 2N-point stencil."""
    return sum(_axis_terms(field_fn, p, h)[1])


def local_length_scale(m: md.Medium, p, singular_points: Iterable = ()) -> float:
    """min(distance to each singular point, sqrt(p^2 + rho^2))."""
    p = np.asarray(p, dtype=float)
    scale = math.sqrt(float(p @ p) + m.rho ** 2)
    for q in singular_points:
        scale = min(scale, float(np.linalg.norm(p - np.asarray(q, dtype=float))))
    return scale


def pde_residual(m: md.Medium, d, field_fn: Callable, p, h: float | None = None,
                 singular_points: Sequence = (), rhs: Callable | None = None,
                 estimate_order: bool = True) -> ResidualReport:
    r"""Residual of :math:`[\nabla^2 + 4\nu(\nu+1)\rho^2/(r^2+\rho^2)^2] f = \mathrm{rhs}`.

    Parameters
    ----------
    m, d : Medium, Degree or complex
        The equation; the potential uses nu(nu+1) = n0^2 k^2 rho^2.
    field_fn : callable
        Maps an N-vector to a complex number.
    p : array_like
        Probe point.
    h : float, optional
        Step. Defaults to 3e-4 times :func:`local_length_scale`.
    singular_points : sequence of points
        Points the stencil must avoid by at least 10 h.
    rhs : callable, optional
        Right-hand side (zero when omitted).
    estimate_order : bool
        Also probe h/2 and report log2 of the residual ratio.

    Notes
    -----
    ``residual_rel`` divides by the largest single term of the operator:
    each axis second difference and the potential term. Normalizing by the
    summed Laplacian instead would inflate the ratio wherever the axis terms
    cancel, which is most of space for small degrees.

    The order estimate is only meaningful while truncation error dominates
    roundoff. At the default step it often does not; probe with
    ``h = ORDER_STEP_FACTOR * local_length_scale(...)`` for a clean estimate.

    Raises
    ------
    TooCloseToSingularity
        If p lies within 10 h of a singular point.
    FieldEvaluationFailure
        If the field fails on the stencil.
    """
    p = np.asarray(p, dtype=float)
    nu = md.as_degree(d).nu
    scale = local_length_scale(m, p, singular_points)
    if h is None:
        h = STEP_FACTOR * scale
    for q in singular_points:
        if float(np.linalg.norm(p - np.asarray(q, dtype=float))) < SAFE_STEPS * h:
            raise TooCloseToSingularity(f"point {list(p)} within {SAFE_STEPS} steps of {list(q)}")
    pot = 4.0 * nu * (nu + 1) * m.rho ** 2 / (float(p @ p) + m.rho ** 2) ** 2
    f0 = _call(field_fn, p)
    extra = complex(rhs(p)) if rhs is not None else 0j

    def resid(step):
        _, terms = _axis_terms(field_fn, p, step)
        r = sum(terms) + pot * f0 - extra
        norm = max(max(abs(v) for v in terms), abs(pot * f0), abs(extra))
        return abs(r), abs(r) / norm if norm else abs(r)

    r_abs, r_rel = resid(h)
    order = None
    if estimate_order:
        half_abs, _ = resid(h / 2)
        order = math.log2(r_abs / half_abs) if half_abs > 0 and r_abs > 0 else math.inf
    return ResidualReport(tuple(p), h, r_abs, r_rel, order)


def nu_derivative_oracle(m: md.Medium, n: int, r, r_src, eps: float = 1e-5,
                         richardson: bool = False) -> complex:
    """Generalized Green's function from its limit definition.

    Symmetric difference of f(nu) = (nu - n - N/2 + 1)(nu + n + N/2) G_nu
    about nu0 = n + N/2 - 1, divided by 2n + N - 1. With ``richardson`` the
    steps eps and eps/2 are combined to cancel the eps^2 term.
    """
    if not 1e-7 <= eps <= 1e-3:
        raise ValueError(f"eps must lie in [1e-7, 1e-3], got {eps!r}")
    N = m.dim
    nu0 = n + N / 2 - 1

    def f(nu):
        return (nu - nu0) * (nu + n + N / 2) * gr.green(m, nu, r, r_src).value

    def diff(e):
        return (f(nu0 + e) - f(nu0 - e)) / (2 * e * (2 * n + N - 1))

    if not richardson:
        return diff(eps)
    return (4.0 * diff(eps / 2) - diff(eps)) / 3.0


def _directions(N: int, count: int, seed: int) -> np.ndarray:
    v = np.random.default_rng(seed).standard_normal((count, N))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def singular_coefficient_samples(m: md.Medium, d, r_src, delta: float, n_dirs: int = 16,
                                 seed: int = 0, method: str = "ratio") -> np.ndarray:
    """Near-source coefficient estimates, one per random approach direction.

    ``method="ratio"`` returns G |r - r'|^{N-2} (N >= 3) or G/ln|r - r'|
    (N = 2). ``method="slope"`` (N = 2 only) returns
    [G(delta) - G(delta/2)]/ln 2, which drops the constant term that biases
    the ratio by O(1/ln delta).
    """
    if not 1e-8 * m.rho <= delta <= 1e-3 * m.rho:
        raise ValueError(f"delta must lie in [1e-8 rho, 1e-3 rho], got {delta!r}")
    q = md._point(m, r_src)
    out = []
    for u in _directions(m.dim, n_dirs, seed):
        g1 = gr.green(m, d, q + delta * u, q).value
        if m.dim >= 3:
            if method != "ratio":
                raise ValueError("slope extraction is for N = 2")
            out.append(g1 * delta ** (m.dim - 2))
        elif method == "ratio":
            out.append(g1 / math.log(delta))
        elif method == "slope":
            g2 = gr.green(m, d, q + 0.5 * delta * u, q).value
            out.append((g1 - g2) / math.log(2.0))
        else:
            raise ValueError(f"unknown method {method!r}")
    return np.array(out)


def extract_singular_coefficient(m: md.Medium, d, r_src, delta: float, n_dirs: int = 16,
                                 seed: int = 0, method: str = "ratio") -> float:
    """Mean over directions of :func:`singular_coefficient_samples` (real part)."""
    return float(np.mean(singular_coefficient_samples(m, d, r_src, delta, n_dirs, seed, method)).real)


def far_field_product(m: md.Medium, d, r_src, direction, radius: float) -> complex:
    """r^{N-2} G(r u, r') at distance ``radius`` along unit vector u."""
    u = np.asarray(direction, dtype=float)
    u = u / np.linalg.norm(u)
    return radius ** (m.dim - 2) * gr.green(m, d, radius * u, r_src).value


def extract_far_field_constant(m: md.Medium, d, r_src, direction, radius: float | None = None,
                               richardson: bool = True) -> complex:
    """Limit of r^{N-2} G as r -> infinity along a direction.

    The product approaches its limit as C + c1/r, so the plain value at
    r = 1e4 rho carries an O(|r'|/r) error. ``richardson`` combines r and 2r
    to cancel the 1/r term.
    """
    radius = 1e4 * m.rho if radius is None else radius
    f1 = far_field_product(m, d, r_src, direction, radius)
    if not richardson:
        return f1
    return 2.0 * far_field_product(m, d, r_src, direction, 2 * radius) - f1


def sample_ball(N: int, count: int, seed: int, radius: float = 3.0, blocks: int = 1) -> np.ndarray:
    """Scrambled Halton points, each N-block inside the ball of given radius.

    Returns shape ``(count, blocks * N)``. Each block of the cube [-1, 1]^N
    is mapped radially onto the ball: the direction is kept and the sup-norm
    becomes the radius, which is deterministic and keeps the radial
    distribution uniform in volume.
    """
    x = 2.0 * qmc.Halton(d=blocks * N, scramble=True, seed=seed).random(count) - 1.0
    x = x.reshape(count, blocks, N)
    l2 = np.linalg.norm(x, axis=2, keepdims=True)
    linf = np.max(np.abs(x), axis=2, keepdims=True)
    x = np.where(l2 > 0, x * linf / np.where(l2 > 0, l2, 1.0), 0.0) * radius
    return x.reshape(count, blocks * N)


def _sample_unit(count: int, dim: int, seed: int) -> np.ndarray:
    return qmc.Halton(d=dim, scramble=True, seed=seed).random(count)


def _non_resonant(N: int, u: float, lo: float = 0.1, hi: float = 2.4, gap: float = 0.05) -> float:
    """Map u in [0, 1) to a real degree at least ``gap`` from every resonance."""
    nu = lo + (hi - lo) * u
    for n in range(10):
        for res in (n + N / 2 - 1, -n - N / 2):
            if abs(nu - res) < gap:
                nu = res + gap if nu >= res else res - gap
    return nu


def _rel(a, b) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def _mixed(a, b) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


# ------------------------------------------------------------ check families

def _check_laplace(seed):
    out = []
    for N in (3, 4, 5):
        m = md.Medium(N, 1.0)
        pts = sample_ball(N, 100, seed + N, blocks=2)
        worst = 0.0
        c = gr.singular_coefficient(m)
        for x in pts:
            r, q = x[:N], x[N:]
            ref = c / float(np.linalg.norm(r - q)) ** (N - 2)
            worst = max(worst, _rel(gr.green(m, 0.0, r, q).value, ref))
        out.append(CheckOutcome.make(f"laplace_reduction.N{N}", worst, 1e-10, N=N, samples=100))
    return out


def _safe_pairs(m, count, seed, min_gap=0.1):
    """(point, source) pairs away from the source, its image and each other."""
    N = m.dim
    cand = sample_ball(N, 4 * count, seed, blocks=2)
    out = []
    for x in cand:
        p, q = x[:N], x[N:]
        sing = [q]
        if q.any():
            sing.append(md.image_point(m, q))
        if min(np.linalg.norm(p - s) for s in sing) >= min_gap * m.rho:
            out.append((p, q, sing))
        if len(out) == count:
            break
    return out


def _residual_pair(m, nu, field_fn, p, sing, rhs=None):
    """Residual at the default step plus an order probe at a coarser step."""
    fine = pde_residual(m, nu, field_fn, p, singular_points=sing, rhs=rhs, estimate_order=False)
    h = ORDER_STEP_FACTOR * local_length_scale(m, p, sing)
    coarse = pde_residual(m, nu, field_fn, p, h=h, singular_points=sing, rhs=rhs)
    return fine, coarse


def _residual_outcomes(name, pairs, **ctx):
    rel = max(fine.residual_rel for fine, _ in pairs)
    order = max(abs(coarse.order_estimate - 2.0) for _, coarse in pairs)
    return [CheckOutcome.make(f"{name}.relative", rel, 1e-5, points=len(pairs),
                              step_factor=STEP_FACTOR, **ctx),
            CheckOutcome.make(f"{name}.order", order, 0.3, points=len(pairs),
                              step_factor=ORDER_STEP_FACTOR, note="max |order - 2|", **ctx)]


def _check_pde(seed, count=50):
    out = []
    for N in (2, 3, 4, 5):
        m = md.Medium(N, 1.0, 1.0)
        u = _sample_unit(count, 1, seed + 10 * N)[:, 0]
        reps = []
        for (p, q, sing), ui in zip(_safe_pairs(m, count, seed + N), u):
            nu = _non_resonant(N, ui)
            reps.append(_residual_pair(m, nu, lambda x, q=q, nu=nu: gr.green(m, nu, x, q).value,
                                       p, sing))
        out += _residual_outcomes(f"pde_residual.N{N}", reps, N=N)
    return out


def _random_degree(u, v, w):
    nu = complex(-2.5 + 6.0 * u, (2.0 * v - 1.0) if w < 0.5 else 0.0)
    return nu


def _reps_for(N):
    reps = ["prefactor", "symmetric", "double", "gegenbauer"]
    if N == 2:
        reps.append("two_d")
    if N == 3:
        reps += ["trig", "arctan"]
    return reps


def _check_representations(seed, per_dim=50):
    out = []
    for N in (2, 3, 4, 5):
        m = md.Medium(N, 0.9)
        pts = sample_ball(N, per_dim, seed + N, blocks=2)
        uu = _sample_unit(per_dim, 3, seed + 100 + N)
        worst = 0.0
        for x, u in zip(pts, uu):
            nu = _random_degree(*u)
            if md.Degree(nu).is_resonant(N, 1e-3):
                nu += 0.01
            vals = [gr.green(m, nu, x[:N], x[N:], rep).value for rep in _reps_for(N)]
            worst = max(worst, max(_rel(a, b) for a in vals for b in vals))
        out.append(CheckOutcome.make(f"representations.N{N}", worst, 1e-10, N=N,
                                     samples=per_dim, forms=_reps_for(N)))
    return out


def _check_symmetry(seed, per_dim=50):
    worst = 0.0
    for N in (2, 3, 4, 5):
        m = md.Medium(N, 1.1)
        pts = sample_ball(N, per_dim, seed + 7 * N, blocks=2)
        uu = _sample_unit(per_dim, 3, seed + 200 + N)
        for x, u in zip(pts, uu):
            nu = _random_degree(*u)
            if md.Degree(nu).is_resonant(N, 1e-3):
                nu += 0.01
            for rep in _reps_for(N):
                a = gr.green(m, nu, x[:N], x[N:], rep).value
                b = gr.green(m, nu, x[N:], x[:N], rep).value
                worst = max(worst, _rel(a, b))
    return [CheckOutcome.make("symmetry", worst, 1e-12, samples=4 * per_dim)]


def _check_singular(seed):
    out = []
    for N in (2, 3, 4, 5):
        m = md.Medium(N, 1.0)
        c = gr.singular_coefficient(m)
        q = sample_ball(N, 1, seed + N)[0]
        nu = _non_resonant(N, 0.37)
        method = "slope" if N == 2 else "ratio"
        s = singular_coefficient_samples(m, nu, q, 1e-6 * m.rho, 16, seed, method).real
        err = abs(s.mean() - c) / abs(c)
        spread = (s.max() - s.min()) / abs(c)
        out.append(CheckOutcome.make(f"singular_coefficients.N{N}", max(err, spread), 1e-3,
                                     N=N, method=method, mean=float(s.mean()), expected=c))
    return out


def _check_far_field(seed, count=20):
    out = []
    for N in (2, 3, 4):
        m = md.Medium(N, 1.0)
        dirs = _directions(N, count, seed + N)
        srcs = sample_ball(N, count, seed + 20 + N, radius=2.0)
        uu = _sample_unit(count, 1, seed + 40 + N)[:, 0]
        worst = 0.0
        for u, q, w in zip(dirs, srcs, uu):
            nu = _non_resonant(N, w)
            C = gr.asymptotic_constant(m, nu, q)
            worst = max(worst, _rel(extract_far_field_constant(m, nu, q, u), C))
        out.append(CheckOutcome.make(f"far_field.N{N}", worst, 1e-5, N=N, samples=count,
                                     radius="1e4 rho", extrapolation="richardson in 1/r"))
    return out


def _check_inversion(seed, count=20):
    out = []
    worst_idx = worst_inv = worst_rad = worst_chi = 0.0
    worst_scale = worst_img = 0.0
    kelvin_reports = []
    for N in (2, 3, 4, 5):
        m = md.Medium(N, 1.2, 0.8)
        pts = sample_ball(N, count, seed + N, blocks=3)
        for x in pts:
            r, a, q = x[:N], x[N:2 * N], x[2 * N:]
            spec = md.fisheye_inversion(m, a)
            lhs = md.refraction_index(m, md.invert_point(spec, r))
            rhs = float((r - a) @ (r - a)) / (m.rho ** 2 + float(a @ a)) * md.refraction_index(m, r)
            worst_idx = max(worst_idx, _rel(lhs, rhs))
            back = md.invert_point(spec, md.invert_point(spec, r))
            worst_inv = max(worst_inv, float(np.linalg.norm(back - r)) / float(np.linalg.norm(r)))
            D = md.symmetric_radical(m, r, q)
            f1 = float(np.linalg.norm(q)) * float(np.linalg.norm(r + q * m.rho ** 2 / (q @ q)))
            f2 = float(np.linalg.norm(r)) * float(np.linalg.norm(q + r * m.rho ** 2 / (r @ r)))
            worst_rad = max(worst_rad, _rel(D, f1), _rel(D, f2))
            worst_chi = max(worst_chi, abs(md.chi(m, md.image_point(m, q), q) - 1.0))
            nu = _non_resonant(N, float(x[0] % 1.0))
            g = gr.green_inverted_construction(m, nu, r, q)
            G = gr.green(m, nu, r, q, "prefactor").value
            worst_scale = max(worst_scale, _rel((m.rho ** 2 / np.linalg.norm(q)) ** (N - 2) * g, G))
            img = md.image_point(m, q)
            u = _directions(N, 1, seed + int(1e3 * abs(x[0])))[0]
            near = gr.green_inverted_construction(m, nu, img + 1e-7 * m.rho * u, q)
            worst_img = max(worst_img, _rel(near, gr.image_point_limit(m, nu, q)))
        # Kelvin transform of the central solution about a random center
        for x in sample_ball(N, 5, seed + 50 + N, blocks=2):
            p, a = x[:N], x[N:]
            spec = md.fisheye_inversion(m, a)
            pre = -a * m.rho ** 2 / float(a @ a)
            if min(np.linalg.norm(p - a), np.linalg.norm(p - pre)) < 0.1 * m.rho:
                continue
            nu = _non_resonant(N, 0.61)
            fn = lambda y, spec=spec, nu=nu: md.kelvin_transform(
                spec, lambda z: gr.green_central(m, nu, z).value, y)
            kelvin_reports.append(_residual_pair(m, nu, fn, p, [a, pre]))
    out.append(CheckOutcome.make("inversion.index_covariance", worst_idx, 1e-12))
    out.append(CheckOutcome.make("inversion.involution", worst_inv, 1e-12))
    out.append(CheckOutcome.make("inversion.radical_forms", worst_rad, 1e-12))
    out.append(CheckOutcome.make("inversion.image_chi", worst_chi, 1e-14))
    out.append(CheckOutcome.make("inversion.scaling", worst_scale, 1e-10))
    out.append(CheckOutcome.make("inversion.image_limit", worst_img, 1e-4, offset="1e-7 rho"))
    out += _residual_outcomes("inversion.kelvin_residual", kelvin_reports)
    return out


def _check_generalized(seed, count=20):
    out = []
    worst_lim = worst_trig = 0.0
    reports = []
    for N in (2, 3, 4, 5):
        m = md.Medium(N, 1.0)
        for n in (0, 1, 2):
            for x in sample_ball(N, count, seed + 10 * N + n, blocks=2):
                r, q = x[:N], x[N:]
                gb = gr.green_generalized(m, n, r, q).value
                worst_lim = max(worst_lim, _mixed(gb, nu_derivative_oracle(m, n, r, q)))
                if N == 3:
                    worst_trig = max(worst_trig,
                                     _rel(gb, gr.green_generalized(m, n, r, q, "trig").value))
            nu0 = n + N / 2 - 1
            for p, q, sing in _safe_pairs(m, 3, seed + 70 + 10 * N + n):
                fn = lambda y, q=q, n=n: gr.green_generalized(m, n, y, q).value
                rhs = lambda y, q=q, n=n: (-4.0 * m.rho ** 2 / (float(y @ y) + m.rho ** 2) ** 2
                                           * gr.resonant_residue(m, n, y, q))
                reports.append(_residual_pair(m, nu0, fn, p, sing, rhs))
    out.append(CheckOutcome.make("generalized.limit", worst_lim, 1e-6, eps=1e-5))
    out.append(CheckOutcome.make("generalized.trig", worst_trig, 1e-10, N=3))
    out += _residual_outcomes("generalized.pde_inhomogeneous", reports,
                              rhs="-V * resonant_residue")
    return out


XGRID = np.linspace(-0.95, 0.95, 21)


def _check_degree_derivative(seed):
    worst_pair = worst_fd = 0.0
    eps = 1e-5
    for N in (2, 3, 4, 5, 6, 7):
        forms = dd.EVEN_FORMULAS if N % 2 == 0 else dd.ODD_FORMULAS
        for n in range(5):
            nu0 = n + N / 2 - 1
            for x in XGRID:
                t, s = split_argument(x)
                vals = [dd.dp_dnu_resonant_ts(N, n, t, s, f) for f in forms]
                fd = ((ferrers_p_ts(nu0 + eps, 1 - N / 2, t, s)
                       - ferrers_p_ts(nu0 - eps, 1 - N / 2, t, s)) / (2 * eps)).real
                worst_pair = max(worst_pair, max(_mixed(a, b) for a in vals for b in vals))
                worst_fd = max(worst_fd, max(_mixed(v, fd) for v in vals))
    return [CheckOutcome.make("degree_derivative.consensus", worst_pair, 1e-10),
            CheckOutcome.make("degree_derivative.central_difference", worst_fd, 1e-6, eps=eps)]


def _check_half_odd(seed):
    worst_p = worst_pq = 0.0
    uu = _sample_unit(30, 3, seed)
    for N in (3, 5, 7):
        for u in uu:
            nu = complex(-0.4 + 4.0 * u[0], u[1] - 0.5)
            x = 1.9 * u[2] - 0.95
            t, s = split_argument(x)
            a = trig.half_odd_p_ts(N, nu, t, s, "multiple_angle")
            b = trig.half_odd_p_ts(N, nu, t, s, "power")
            c = ferrers_p_ts(nu, 1 - N / 2, t, s)
            worst_p = max(worst_p, _mixed(a, b), _mixed(a, c))
        for n in range(5):
            for x in XGRID:
                t, s = split_argument(x)
                p1, q1 = trig.half_odd_pq_ts(N, n, t, s, "multiple_angle")
                p2, q2 = trig.half_odd_pq_ts(N, n, t, s, "power")
                worst_pq = max(worst_pq, _mixed(p1, p2), _mixed(q1, q2))
    return [CheckOutcome.make("half_odd_forms.P", worst_p, 1e-12),
            CheckOutcome.make("half_odd_forms.PQ", worst_pq, 1e-12)]


def _d1(f, x, h):
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h)


def _d2(f, x, h):
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h)


WRONSKIAN_DEGREES = (0.4 + 0.1j, 1.7, -0.3 + 0.5j, 2.5, 0.25 - 0.75j)
WRONSKIAN_ORDERS = (0.0, 0.5, 1.0, 1.5, 2.0)


def _check_wronskian(seed):
    worst = 0.0
    h = 1e-3
    for nu in WRONSKIAN_DEGREES:
        for mu in WRONSKIAN_ORDERS:
            for x in (-0.7, -0.2, 0.2, 0.5, 0.8):
                P = lambda y: ferrers_P(nu, -mu, y)
                R = lambda y: legendre_R(nu, mu, y)
                W = (1 - x * x) * (P(x) * _d1(R, x, h) - R(x) * _d1(P, x, h))
                worst = max(worst, abs(W - cmath.exp(1j * math.pi * mu)))
    return [CheckOutcome.make("wronskian", worst, 1e-8, step=h)]


def _check_reflection(seed):
    worst = 0.0
    for u in _sample_unit(200, 2, seed):
        nu = complex(-5.0 + 10.0 * u[0], 0.0 if u[1] < 0.5 else 2.0 * u[1] - 1.0)
        if abs(nu.imag) < 1e-3 and min(abs(nu.real - k) for k in range(-6, 7)) < 0.01:
            nu += 0.02
        a = cmath.exp(log_gamma(nu + 1) + log_gamma(-nu)) * cmath.sin(math.pi * nu)
        worst = max(worst, _rel(a, -math.pi))
        if abs(nu.imag) < 1e-3 and min(abs(nu.real - k - 0.5) for k in range(-6, 6)) < 0.01:
            nu += 0.02
        b = cmath.exp(log_gamma(0.5 + nu) + log_gamma(0.5 - nu)) * cmath.cos(math.pi * nu)
        worst = max(worst, _rel(b, math.pi))
    return [CheckOutcome.make("reflection", worst, 1e-12, samples=200)]


ENDPOINT_DEGREES = (0.3, 1.7 + 0.2j, -0.6 + 0.4j)
ENDPOINT_ORDERS = (0.5, 1.0, 1.5)
ENDPOINT_GAP = 1e-8


def _check_endpoints(seed):
    from scipy.special import gamma as G
    worst_pow = worst_log = 0.0
    t0 = ENDPOINT_GAP / 2  # (1 - x)/2 at x = 1 - 1e-8
    for nu in ENDPOINT_DEGREES:
        for mu in ENDPOINT_ORDERS:
            # x -> 1: P^{-mu} ~ ((1-x)/2)^{mu/2}/Gamma(mu+1)
            v = ferrers_p_ts(nu, -mu, t0, 1 - t0) * t0 ** (-mu / 2) * G(mu + 1)
            worst_pow = max(worst_pow, abs(v - 1))
            # x -> 1: R^mu ~ e^{i pi mu} Gamma(mu) ((1-x)/2)^{-mu/2}/2
            v = legendre_r_ts(nu, mu, t0, 1 - t0) / (
                0.5 * cmath.exp(1j * math.pi * mu) * G(mu) * t0 ** (-mu / 2))
            worst_pow = max(worst_pow, abs(v - 1))
            # x -> -1: P^{-mu} ~ Gamma(mu)/(Gamma(nu+mu+1) Gamma(mu-nu)) ((1+x)/2)^{-mu/2}
            lim = G(mu) * rgamma(nu + mu + 1) * rgamma(mu - nu)
            v = ferrers_p_ts(nu, -mu, 1 - t0, t0) * t0 ** (mu / 2)
            worst_pow = max(worst_pow, _rel(v, lim))
        # logarithmic laws: compare the coefficient of the log via a two-point slope
        r1 = legendre_r_ts(nu, 0.0, t0, 1 - t0)
        r2 = legendre_r_ts(nu, 0.0, 2 * t0, 1 - 2 * t0)
        worst_log = max(worst_log, abs((r1 - r2) / (0.5 * math.log(2.0)) - 1.0))
        p1 = ferrers_p_ts(nu, 0.0, 1 - t0, t0)
        p2 = ferrers_p_ts(nu, 0.0, 1 - 2 * t0, 2 * t0)
        worst_log = max(worst_log, _rel((p1 - p2) / -math.log(2.0), cmath.sin(math.pi * nu) / math.pi))
    return [CheckOutcome.make("endpoint_asymptotics.power_laws", worst_pow, 1e-3, gap=ENDPOINT_GAP),
            CheckOutcome.make("endpoint_asymptotics.log_slopes", worst_log, 1e-3, gap=ENDPOINT_GAP,
                              note="two-point slope of the logarithmic term")]


def _check_extreme_order_signs(seed):
    worst = 0.0
    bad_sign = 0
    for n in (0, 1, 2):
        m = 2 * n + 1
        for x in np.linspace(-0.99, 0.99, 41):
            base = (1 - x * x) ** (m / 2) / (2.0 ** m * math.factorial(m))
            t, s = split_argument(x)
            for deg, ref in ((m, base), (m + 1, x * base)):
                v = ferrers_p_ts(deg, -m, t, s).real
                if ref != 0 and np.sign(v) != np.sign(ref):
                    bad_sign += 1
                worst = max(worst, abs(v - ref) / max(abs(ref), 1e-300) if ref else abs(v))
    return [CheckOutcome.make("extreme_order_signs.values", worst, 1e-12),
            CheckOutcome.make("extreme_order_signs.sign_flips", bad_sign, 0)]


def _check_ode(seed):
    worst = 0.0
    h = 1e-3
    for u in _sample_unit(40, 4, seed):
        nu = complex(-1.0 + 4.0 * u[0], u[1] - 0.5)
        mu = (0.0, 0.5, 1.0, 1.5)[int(4 * u[2])]
        x = 1.6 * u[3] - 0.8
        for F in (lambda y: ferrers_P(nu, -mu, y), lambda y: legendre_R(nu, mu, y)):
            terms = ((1 - x * x) * _d2(F, x, h), -2 * x * _d1(F, x, h),
                     (nu * (nu + 1) - mu * mu / (1 - x * x)) * F(x))
            # local magnitude includes the stencil values: all three terms can
            # vanish together where F is small but F' is not
            scale = max(*(abs(v) for v in terms), *(abs(F(x + k * h)) for k in (-2, 2)))
            worst = max(worst, abs(sum(terms)) / scale)
    return [CheckOutcome.make("ode_residual", worst, 1e-6, samples=40, step=h)]


def _check_resonances(seed):
    worst = 0.0
    for N in range(2, 8):
        for n, nu, k in md.resonant_wavenumbers(md.Medium(N), 10):
            lhs = nu * (nu + 1)
            rhs = (n + N / 2) * (n + N / 2 - 1)
            worst = max(worst, abs(lhs - rhs) / max(rhs, 1.0))
    return [CheckOutcome.make("resonances", worst, 1e-14)]


CHECK_FAMILIES = {
    "laplace_reduction": _check_laplace,
    "pde_residual": _check_pde,
    "representations": _check_representations,
    "symmetry": _check_symmetry,
    "singular_coefficients": _check_singular,
    "far_field": _check_far_field,
    "inversion": _check_inversion,
    "generalized": _check_generalized,
    "degree_derivative": _check_degree_derivative,
    "half_odd_forms": _check_half_odd,
    "wronskian": _check_wronskian,
    "reflection": _check_reflection,
    "endpoint_asymptotics": _check_endpoints,
    "extreme_order_signs": _check_extreme_order_signs,
    "ode_residual": _check_ode,
    "resonances": _check_resonances,
}


def run_suite(selection: Iterable[str] | None = None, seed: int = 0) -> list[CheckOutcome]:
    """Run the named check families (all when ``selection`` is empty).

    A name selects a whole family (``"wronskian"``) or a single outcome
    within one (``"inversion.scaling"``). Failures are recorded, not raised;
    an exception inside a family becomes a failed outcome carrying the
    message.
    """
    wanted = set(selection or ())
    unknown = {w for w in wanted if w.split(".")[0] not in CHECK_FAMILIES}
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}; known: {sorted(CHECK_FAMILIES)}")
    out = []
    for name, fn in CHECK_FAMILIES.items():
        exact = {w for w in wanted if w.split(".")[0] == name and "." in w}
        if wanted and name not in wanted and not exact:
            continue
        try:
            results = fn(seed)
        except (ArithmeticError, ValueError, ParameterPole) as exc:
            results = [CheckOutcome(name, False, math.inf, 0.0, {"error": str(exc)})]
        if exact and name not in wanted:
            results = [r for r in results if r.name in exact]
        out.extend(results)
    return out
