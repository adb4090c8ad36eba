r"""Closed forms of the fish-eye Green's function and its generalized version.

The Green's function solves

.. math::
    \left[\nabla^2 + \frac{4\nu(\nu+1)\rho^2}{(r^2+\rho^2)^2}\right] G_\nu(r, r') = 0,
    \qquad r \neq r',

with the free-space singularity at r = r' and decay :math:`C_\nu/r^{N-2}` at
infinity. Every representation shares the Legendre argument :math:`\chi`
(taken from :func:`fisheye.medium.chi_split`) and the prefactor

.. math::
    K_\nu = -\frac{\Gamma(N/2+\nu)\,\Gamma(N/2-\nu-1)}{4\pi^{N/2}},

and differs in how the geometric denominator is assembled. Redundant forms
exist on purpose: they cross-check each other.

At the resonant degrees :math:`\nu = n + N/2 - 1` the Gamma factor has a
pole and :func:`green_generalized` supplies the finite replacement.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CoincidentPoints,
    OriginSingularity,
    OriginSource,
    ParameterPole,
    RepresentationDimensionMismatch,
    ResonantDegree,
)
from .medium import (
    Medium,
    _point,
    _radical_sq,
    as_degree,
    chi_split,
    fisheye_inversion,
    image_point,
    kelvin_transform,
    sphere_area,
)
from .special.degree_derivative import dp_dnu_resonant_ts
from .special.gamma import cos_pi, digamma, log_gamma, sin_pi
from .special.legendre import ferrers_p_ts, gegenbauer_c_ts
from .special.trig import angle_from_ts

__all__ = [
    "Representation",
    "Flag",
    "GreenValue",
    "green_central",
    "green",
    "green_inverted_construction",
    "asymptotic_constant",
    "green_generalized",
    "resonant_residue",
    "singular_coefficients",
    "singular_coefficient",
    "image_point_limit",
    "prefactor",
]

# |chi + 1| and |chi - 1| below this raise the proximity flags
ENDPOINT_TOL = 1e-8
# max(|r|, |r'|) beyond this many rho raises FarField
FAR_FIELD_RATIO = 1e4
# imaginary parts below this fraction of |value| count as round-off
REAL_TOL = 1e-13


class Representation(str, enum.Enum):
    """Closed forms of G. The ``value`` doubles as the CLI spelling."""

    PREFACTOR = "prefactor"    # source-anchored radical, (rho/r')^{N/2-1}
    SYMMETRIC = "symmetric"    # single symmetric radical D
    DOUBLE = "double"          # two inverted-point radicals
    GEGENBAUER = "gegenbauer"  # Gegenbauer function of degree nu - N/2 + 1
    TWO_D = "two_d"            # N = 2, P_nu(chi)/(4 sin pi nu)
    TRIG = "trig"              # N = 3, sine of a multiple of arccos chi
    ARCTAN = "arctan"          # N = 3, sine of a multiple of an arctangent
    AUTO = "auto"

    @classmethod
    def parse(cls, rep) -> "Representation":
        if isinstance(rep, cls):
            return rep
        try:
            return cls(str(rep).lower())
        except ValueError:
            names = ", ".join(r.value for r in cls)
            raise ValueError(f"unknown representation {rep!r}; choose from {names}") from None


class Flag(str, enum.Enum):
    NEAR_SOURCE = "NearSource"
    NEAR_IMAGE_POINT = "NearImagePoint"
    SOURCE_AT_ORIGIN = "SourceAtOrigin"
    FAR_FIELD = "FarField"


@dataclass(frozen=True)
class GreenValue:
    """A Green's-function value with the form that produced it and proximity flags."""

    value: complex
    representation: Representation
    flags: frozenset = field(default_factory=frozenset)

    @property
    def is_real(self) -> bool:
        """True when the imaginary part is round-off (below 1e-13 of |value|)."""
        return abs(self.value.imag) <= REAL_TOL * abs(self.value)

    def __complex__(self):
        return self.value


def _check_degree(m: Medium, d) -> complex:
    deg = as_degree(d)
    n = deg.resonance(m.dim)
    if n is not None:
        raise ResonantDegree(
            f"nu = {deg.nu} is the resonance n = {n} for N = {m.dim}; "
            "use green_generalized instead")
    return deg.nu


def prefactor(m: Medium, d) -> complex:
    """K = -Gamma(N/2 + nu) Gamma(N/2 - nu - 1)/(4 pi^{N/2}), in log space."""
    nu = _check_degree(m, d)
    h = m.dim / 2
    return -cmath.exp(log_gamma(h + nu) + log_gamma(h - nu - 1)) / (4.0 * math.pi ** h)


def _flags(m: Medium, t, s, p, q) -> frozenset:
    out = set()
    if 2.0 * s < ENDPOINT_TOL:
        out.add(Flag.NEAR_SOURCE)
    if 2.0 * t < ENDPOINT_TOL:
        out.add(Flag.NEAR_IMAGE_POINT)
    if not q.any():
        out.add(Flag.SOURCE_AT_ORIGIN)
    if max(np.linalg.norm(p), np.linalg.norm(q)) >= FAR_FIELD_RATIO * m.rho:
        out.add(Flag.FAR_FIELD)
    return frozenset(out)


def _p_res(nu, mu, t, s):
    return ferrers_p_ts(nu, -mu, t, s)


def green_central(m: Medium, d, r) -> GreenValue:
    r"""G_nu(r, 0) = K P_nu^{1-N/2}(x)/(r rho)^{N/2-1}, x = (r^2 - rho^2)/(r^2 + rho^2).

    Raises
    ------
    ResonantDegree
        On a resonance.
    OriginSingularity
        At r = 0, where the source sits.
    """
    K = prefactor(m, d)
    nu = as_degree(d).nu
    p = _point(m, r)
    r2 = float(p @ p)
    if r2 == 0.0:
        raise OriginSingularity("central Green's function is singular at the origin")
    den = r2 + m.rho ** 2
    t, s = m.rho ** 2 / den, r2 / den
    mu = m.mu
    val = K * _p_res(nu, mu, t, s) / (math.sqrt(r2) * m.rho) ** mu
    return GreenValue(val, Representation.SYMMETRIC,
                      _flags(m, t, s, p, np.zeros_like(p)))


class _Geometry:
    """Quantities shared by the representations, each computed once."""

    def __init__(self, m: Medium, r, r_src):
        self.p = _point(m, r)
        self.q = _point(m, r_src)
        diff = self.p - self.q
        self.d = float(np.linalg.norm(diff))
        if self.d == 0.0:
            raise CoincidentPoints("observation point coincides with the source")
        self.r = float(np.linalg.norm(self.p))
        self.rs = float(np.linalg.norm(self.q))
        self.A = self.r ** 2 + m.rho ** 2
        self.B = self.rs ** 2 + m.rho ** 2
        self.D = math.sqrt(_radical_sq(m, self.p, self.q))
        self.t, self.s = chi_split(m, self.p, self.q)


def _rep_prefactor(m, nu, g: _Geometry):
    mu = m.mu
    if mu == 0:
        return prefactor(m, nu) * _p_res(nu, 0, g.t, g.s)
    if g.rs == 0.0:
        raise OriginSource("the prefactor form needs a source away from the origin")
    e = float(np.linalg.norm(g.p + g.q * (m.rho ** 2 / g.rs ** 2)))
    if e == 0.0:
        ratio = (g.rs / (m.rho * g.d)) ** mu / math.gamma(1 + mu)
    else:
        ratio = _p_res(nu, mu, g.t, g.s) / e ** mu
    return prefactor(m, nu) * (m.rho / g.rs) ** mu * ratio / g.d ** mu


def _rep_symmetric(m, nu, g: _Geometry):
    mu = m.mu
    if g.D == 0.0:
        ratio = 1.0 / ((m.rho * g.d) ** mu * math.gamma(1 + mu))
    else:
        ratio = _p_res(nu, mu, g.t, g.s) / g.D ** mu
    return prefactor(m, nu) * m.rho ** mu * ratio / g.d ** mu


def _rep_double(m, nu, g: _Geometry):
    mu = m.mu
    if mu == 0:
        return prefactor(m, nu) * _p_res(nu, 0, g.t, g.s)
    if g.rs == 0.0:
        raise OriginSource("the double-radical form needs a source away from the origin")
    if g.r == 0.0:
        raise OriginSingularity("the double-radical form needs r away from the origin")
    e1 = float(np.linalg.norm(g.p + g.q * (m.rho ** 2 / g.rs ** 2)))
    e2 = float(np.linalg.norm(g.q + g.p * (m.rho ** 2 / g.r ** 2)))
    h = mu / 2
    if e1 == 0.0 or e2 == 0.0:
        ratio = (g.r * g.rs) ** h / (m.rho * g.d) ** mu / math.gamma(1 + mu)
    else:
        ratio = _p_res(nu, mu, g.t, g.s) / (e1 ** h * e2 ** h)
    return prefactor(m, nu) * m.rho ** mu * ratio / ((g.r * g.rs) ** h * g.d ** mu)


def _rep_gegenbauer(m, nu, g: _Geometry):
    N = m.dim
    _check_degree(m, nu)
    sine = sin_pi(N / 2 - nu)
    if sine == 0:
        # Zero of the sine matched by a zero of 1/Gamma(alpha + 1) in C.
        raise ParameterPole(
            f"Gegenbauer form is 0/0 at nu = {nu} for N = {N}; use another representation")
    lam = (N - 1) / 2
    c = gegenbauer_c_ts(nu - N / 2 + 1, lam, g.t, g.s)
    coef = 2.0 ** (N - 4) * math.gamma(lam) / (math.pi ** lam * sine)
    return coef * m.rho ** (N - 2) * c / (g.A * g.B) ** (N / 2 - 1)


def _rep_two_d(m, nu, g: _Geometry):
    if m.dim != 2:
        raise RepresentationDimensionMismatch("two_d form is for N = 2 only")
    _check_degree(m, nu)
    return _p_res(nu, 0, g.t, g.s) / (4.0 * sin_pi(nu))


def _n3_common(m, nu, g: _Geometry, name):
    if m.dim != 3:
        raise RepresentationDimensionMismatch(f"{name} form is for N = 3 only")
    _check_degree(m, nu)
    c = cos_pi(nu)
    if c == 0:
        raise ParameterPole(f"{name} form is 0/0 at nu = {nu}; use another representation")
    return -1.0 / (4.0 * math.pi * c) * math.sqrt(g.A * g.B) / g.d


def _rep_trig(m, nu, g: _Geometry):
    lead = _n3_common(m, nu, g, "trig")
    if g.D == 0.0:
        return lead * (2 * nu + 1) / math.sqrt(g.A * g.B)
    theta = angle_from_ts(g.t, g.s)
    return lead * cmath.sin((nu + 0.5) * theta) / g.D


def _rep_arctan(m, nu, g: _Geometry):
    lead = _n3_common(m, nu, g, "arctan")
    if g.D == 0.0:
        return lead * (2 * nu + 1) / math.sqrt(g.A * g.B)
    return lead * cmath.sin((2 * nu + 1) * math.atan(g.D / (m.rho * g.d))) / g.D


_REPS = {
    Representation.PREFACTOR: _rep_prefactor,
    Representation.SYMMETRIC: _rep_symmetric,
    Representation.DOUBLE: _rep_double,
    Representation.GEGENBAUER: _rep_gegenbauer,
    Representation.TWO_D: _rep_two_d,
    Representation.TRIG: _rep_trig,
    Representation.ARCTAN: _rep_arctan,
}


def green(m: Medium, d, r, r_src, rep=Representation.AUTO) -> GreenValue:
    """Fish-eye Green's function G_nu(r, r').

    Parameters
    ----------
    m : Medium
    d : Degree or complex
        Degree nu; complex values are allowed.
    r, r_src : array_like
        Observation and source points, each with ``m.dim`` coordinates.
    rep : Representation or str
        Closed form to evaluate. ``"auto"`` is the symmetric-radical form,
        which is finite for a source at the origin.

    Returns
    -------
    GreenValue
        Complex value, representation used and proximity flags.

    Raises
    ------
    ResonantDegree
        At nu = n + N/2 - 1 or nu = -n - N/2.
    CoincidentPoints
        At r = r'.
    RepresentationDimensionMismatch
        For ``two_d`` with N != 2, or ``trig``/``arctan`` with N != 3.
    OriginSource
        For the prefactor and double-radical forms with r' = 0 (N >= 3).
    """
    rep = Representation.parse(rep)
    if rep is Representation.AUTO:
        rep = Representation.SYMMETRIC
    nu = _check_degree(m, d)
    g = _Geometry(m, r, r_src)
    val = complex(_REPS[rep](m, nu, g))
    return GreenValue(val, rep, _flags(m, g.t, g.s, g.p, g.q))


def green_inverted_construction(m: Medium, d, r, r_src) -> complex:
    r"""g_nu(r, r'): the central Green's function carried to r' by inversion.

    The inversion is centered at the image point :math:`a = -r'\rho^2/r'^2`
    with radius :math:`\sqrt{\rho^2 + a^2}`; the result satisfies
    :math:`(\rho^2/r')^{N-2} g_\nu = G_\nu`.

    Raises
    ------
    OriginSource
        For r' = 0.
    CoincidentPoints
        At r = r' (mapped onto the central source).
    CenterSingularity
        At the image point itself, where the construction has a removable
        singularity; see :func:`image_point_limit`.
    """
    p, q = _point(m, r), _point(m, r_src)
    if not q.any():
        raise OriginSource("the inversion construction needs r' != 0")
    if np.array_equal(p, q):
        raise CoincidentPoints("observation point coincides with the source")
    _check_degree(m, d)
    spec = fisheye_inversion(m, image_point(m, q))

    def central(x):
        if not np.any(x):
            raise CoincidentPoints("observation point coincides with the source")
        return green_central(m, d, x).value

    return kelvin_transform(spec, central, p)


def image_point_limit(m: Medium, d, r_src) -> complex:
    """Finite value of g_nu(r, r') as r approaches the image point of r'."""
    K = prefactor(m, d)
    q = _point(m, r_src)
    rs2 = float(q @ q)
    if rs2 == 0.0:
        raise OriginSource("a source at the origin has no finite image point")
    N = m.dim
    return (K / math.gamma(N / 2) * (rs2 / m.rho ** 2) ** (N - 2)
            / (rs2 + m.rho ** 2) ** (N - 2))


def asymptotic_constant(m: Medium, d, r_src) -> complex:
    """C_nu(r') in G ~ C_nu(r')/r^{N-2} as r -> infinity.

    For r' = 0 this is K/Gamma(N/2); otherwise
    K (rho/r')^{N/2-1} P_nu^{1-N/2}((rho^2 - r'^2)/(rho^2 + r'^2)).
    """
    K = prefactor(m, d)
    nu = as_degree(d).nu
    q = _point(m, r_src)
    rs2 = float(q @ q)
    mu = m.mu
    if rs2 == 0.0:
        return K / math.gamma(m.dim / 2)
    den = rs2 + m.rho ** 2
    t, s = rs2 / den, m.rho ** 2 / den
    return K * (m.rho / math.sqrt(rs2)) ** mu * _p_res(nu, mu, t, s)


def green_generalized(m: Medium, n: int, r, r_src, method: str = "auto") -> GreenValue:
    r"""Generalized Green's function at the resonance nu = n + N/2 - 1.

    The generic form multiplies the symmetric-radical geometry by

    .. math::
        (-1)^n \frac{(n+N-2)!}{4\pi^{N/2} n!}
        \Big\{\big[\psi(n+N-1) - \psi(n+1) + \tfrac{1}{2n+N-1}\big] P
        + \partial_\nu P\Big\},

    with P and its degree derivative at the resonance taken from
    :func:`fisheye.special.dP_dnu_resonant`.

    Parameters
    ----------
    method : {"auto", "generic", "trig"}
        ``"trig"`` is the N = 3 closed form in arccos chi. ``"auto"`` means
        ``"generic"``.

    Raises
    ------
    CoincidentPoints
        At r = r'.
    RepresentationDimensionMismatch
        For ``method="trig"`` with N != 3.
    """
    if int(n) != n or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    n = int(n)
    if method == "auto":
        method = "generic"
    g = _Geometry(m, r, r_src)
    N, rho = m.dim, m.rho
    flags = _flags(m, g.t, g.s, g.p, g.q)
    if method == "trig":
        if N != 3:
            raise RepresentationDimensionMismatch("trig generalized form is for N = 3 only")
        lead = (-1) ** n / (4.0 * math.pi ** 2) * math.sqrt(g.A * g.B) / g.d
        if g.D == 0.0:
            val = lead * 3.0 / math.sqrt(g.A * g.B)
        else:
            th = angle_from_ts(g.t, g.s)
            val = lead * (math.cos((n + 1) * th) * th
                          + math.sin((n + 1) * th) / (2 * (n + 1))) / g.D
        return GreenValue(complex(val), Representation.TRIG, flags)
    if method != "generic":
        raise ValueError(f"unknown method {method!r}")
    mu = m.mu
    nu0 = n + N / 2 - 1
    lead = ((-1) ** n * math.factorial(n + N - 2)
            / (4.0 * math.pi ** (N / 2) * math.factorial(n)))
    weight = (digamma(n + N - 1).real - digamma(n + 1).real + 1.0 / (2 * n + N - 1))
    if g.D == 0.0:
        # P ~ (t/s)^{mu/2}/Gamma(1+mu) and its degree derivative vanishes faster.
        brace = weight / ((rho * g.d) ** mu * math.gamma(1 + mu))
    else:
        P = _p_res(nu0, mu, g.t, g.s).real
        dP = dp_dnu_resonant_ts(N, n, g.t, g.s)
        brace = (weight * P + dP) / g.D ** mu
    val = lead * rho ** mu * brace / g.d ** mu
    return GreenValue(complex(val), Representation.SYMMETRIC, flags)


def resonant_residue(m: Medium, n: int, r, r_src) -> float:
    r"""E = lim (lambda - lambda_n) G_nu at the resonance, lambda = nu(nu + 1).

    E is a product of resonant eigenfunctions, so it solves the homogeneous
    equation; the generalized function then obeys

    .. math::
        \left[\nabla^2 + \lambda_n V\right] \bar G = -V E,
        \qquad V = \frac{4\rho^2}{(r^2+\rho^2)^2},

    away from the source, which is what the residual checks compare against.
    """
    if int(n) != n or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    n = int(n)
    g = _Geometry(m, r, r_src)
    N, mu = m.dim, m.mu
    lead = ((-1) ** n * (2 * n + N - 1) * math.factorial(n + N - 2)
            / (4.0 * math.pi ** (N / 2) * math.factorial(n)))
    if g.D == 0.0:
        ratio = 1.0 / ((m.rho * g.d) ** mu * math.gamma(1 + mu))
    else:
        ratio = _p_res(n + N / 2 - 1, mu, g.t, g.s).real / g.D ** mu
    return lead * m.rho ** mu * ratio / g.d ** mu


def singular_coefficients(m: Medium) -> tuple[float, float]:
    """Near-source coefficients (two_d, n_d).

    ``two_d`` = 1/(2 pi) multiplies ln|r - r'| for N = 2; ``n_d`` =
    -1/((N-2) S_{N-1}) multiplies |r - r'|^{2-N} for N >= 3 (nan for N = 2).
    """
    two_d = 1.0 / (2.0 * math.pi)
    if m.dim == 2:
        return two_d, math.nan
    return two_d, -1.0 / ((m.dim - 2) * sphere_area(m.dim))


def singular_coefficient(m: Medium) -> float:
    """The coefficient of :func:`singular_coefficients` that applies to ``m.dim``."""
    two_d, n_d = singular_coefficients(m)
    return two_d if m.dim == 2 else n_d
