r"""Closed forms of :math:`\partial_\nu P_\nu^{1-N/2}(x)` at resonant degrees.

At :math:`\nu = n + N/2 - 1` the degree derivative of the Ferrers function
has terminating representations. For even N there are eight of them:

=====================  ==============================================
``"even_t_split"``     sums in (1-x)/2, weights ``2psi(k+n+N-1) - psi(k+N/2)``
``"even_t_shifted"``   sums in (1-x)/2, weights ``2psi(k+n+N/2) - psi(k+N/2)``
``"even_t_single"``    sums in (1-x)/2, single digamma weights
``"even_s_reflected"`` sums in (1+x)/2 with a finite polar part
``"even_s_digamma"``   sums in (1+x)/2 with ``psi(n+N-1) - psi(n+1)``
``"even_ratio_t"``     sums in powers of (1-x)/(1+x)
``"even_ratio_s"``     sums in powers of (1+x)/(1-x)
``"even_legendre"``    finite combination of lower-degree Ferrers functions
=====================  ==============================================

For odd N there are two, ``"odd_multiple_angle"`` and ``"odd_power"``, built
on the trigonometric forms in :mod:`fisheye.special.trig`.

Every formula is real-valued and evaluated in double precision with exact
integer factorials.
"""

import math

from scipy.special import psi as _psi

from ..errors import DimensionParity
from .legendre import ferrers_p_ts, split_argument
from .trig import angle_from_ts, half_odd_pq_ts

__all__ = [
    "dP_dnu_resonant",
    "dp_dnu_resonant_ts",
    "EVEN_FORMULAS",
    "ODD_FORMULAS",
    "default_formula",
]

EVEN_FORMULAS = (
    "even_t_split",
    "even_t_shifted",
    "even_t_single",
    "even_s_reflected",
    "even_s_digamma",
    "even_ratio_t",
    "even_ratio_s",
    "even_legendre",
)
ODD_FORMULAS = ("odd_multiple_angle", "odd_power")

f = math.factorial


def psi(z):
    return float(_psi(z))


def default_formula(N):
    return "even_legendre" if N % 2 == 0 else "odd_multiple_angle"


def _p_res(N, n, t, s):
    return ferrers_p_ts(n + N / 2 - 1, 1 - N / 2, t, s).real


def _even(N, n, t, s, formula):
    h = N // 2
    e = (h - 1) / 2  # N/4 - 1/2
    p0 = _p_res(N, n, t, s)
    base = p0 * math.log(s)
    c_nn = f(n) / f(n + N - 2)

    if formula == "even_t_split":
        s1 = sum((-1) ** k * f(k + n + N - 2) / (f(k) * f(k + h - 1) * f(n - k))
                 * (2 * psi(k + n + N - 1) - psi(k + h)) * t ** k for k in range(n + 1))
        s2 = sum((-1) ** k * f(k + n + h - 1) * psi(k + h) / (f(k) * f(k + h - 1) * f(n + h - k - 1))
                 * t ** k for k in range(n + h))
        return base - 2 * psi(n + N - 1) * p0 + c_nn * (t * s) ** e * s1 + (t / s) ** e * s2

    if formula == "even_t_shifted":
        s1 = sum((-1) ** k * f(k + n + N - 2) * psi(k + h) / (f(k) * f(k + h - 1) * f(n - k))
                 * t ** k for k in range(n + 1))
        s2 = sum((-1) ** k * f(k + n + h - 1) / (f(k) * f(k + h - 1) * f(n + h - k - 1))
                 * (2 * psi(k + n + h) - psi(k + h)) * t ** k for k in range(n + h))
        return base - 2 * psi(n + h) * p0 + c_nn * (t * s) ** e * s1 + (t / s) ** e * s2

    if formula == "even_t_single":
        s1 = sum((-1) ** k * f(k + n + N - 2) * psi(k + n + N - 1) / (f(k) * f(k + h - 1) * f(n - k))
                 * t ** k for k in range(n + 1))
        s2 = sum((-1) ** k * f(k + n + h - 1) * psi(k + n + h) / (f(k) * f(k + h - 1) * f(n + h - k - 1))
                 * t ** k for k in range(n + h))
        return (base - (psi(n + N - 1) + psi(n + h)) * p0
                + c_nn * (t * s) ** e * s1 + (t / s) ** e * s2)

    if formula == "even_s_reflected":
        s1 = sum(f(k + n) * f(h - k - 2) / (f(k) * f(n + N - k - 2)) * s ** k
                 for k in range(h - 1))
        s2 = sum((-1) ** k * f(k + n + h - 1) / (f(k) * f(k + h - 1) * f(n + h - k - 1))
                 * (2 * psi(k + n + h) - psi(k + h) - psi(k + 1)) * s ** k for k in range(n + h))
        sg = (-1) ** n
        return base - sg * (t * s) ** (-e) * s1 + sg * (s / t) ** e * s2

    if formula == "even_s_digamma":
        s1 = sum(f(k + n + h - 1) * f(h - k - 2) / (f(k) * f(n + h - k - 1)) * s ** k
                 for k in range(h - 1))
        s2 = sum((-1) ** k * f(k + n + N - 2) / (f(k) * f(k + h - 1) * f(n - k))
                 * (2 * psi(k + n + N - 1) - psi(k + h) - psi(k + 1)) * s ** k for k in range(n + 1))
        sg = (-1) ** n
        return (base - (psi(n + N - 1) - psi(n + 1)) * p0
                - sg * c_nn * (t / s) ** e * s1 + sg * c_nn * (t * s) ** e * s2)

    if formula == "even_ratio_t":
        q = t / s
        lead = f(n) * f(n + h - 1)
        s1 = sum(f(k - 1) / (f(k + n) * f(k + n + h - 1) * f(h - k - 1)) * q ** k
                 for k in range(1, h))
        s2 = sum((-1) ** k * (psi(n + h - k) + psi(n - k + 1))
                 / (f(k) * f(k + h - 1) * f(n - k) * f(n + h - k - 1)) * q ** k for k in range(n + 1))
        return (base + (psi(n + 1) + psi(n + h)) * p0
                - (-1) ** n * lead * (s / t) ** e * t ** (n + h - 1) * s1
                - lead * (t / s) ** e * s ** (n + h - 1) * s2)

    if formula == "even_ratio_s":
        q = s / t
        lead = f(n) * f(n + h - 1)
        s1 = sum(f(h - k - 2) / (f(k) * f(n + h - k - 1) * f(n + N - k - 2)) * q ** k
                 for k in range(h - 1))
        s2 = sum((-1) ** k * (psi(k + 1) + psi(k + h))
                 / (f(k) * f(k + h - 1) * f(n - k) * f(n + h - k - 1)) * q ** k for k in range(n + 1))
        sg = (-1) ** n
        return (base + (psi(n + 1) + psi(n + h)) * p0
                - sg * lead * (t / s) ** e * t ** (n + h - 1) * s1
                - sg * lead * (s / t) ** e * t ** (n + h - 1) * s2)

    if formula == "even_legendre":
        s1 = 0.0
        for k in range(n):
            coef = (2 * k + N - 1) / ((n - k) * (k + n + N - 1))
            coef *= 1 + f(n) * f(k + N - 2) / (f(k) * f(n + N - 2))
            s1 += (-1) ** (k + n) * coef * _p_res(N, k, t, s)
        s2 = 0.0
        for k in range(h - 1):
            coef = (2 * k + 1) / ((n + h - k - 1) * (k + n + h))
            s2 += (-1) ** (k + n + h) * coef * ferrers_p_ts(k, 1 - h, t, s).real
        return (base + (2 * psi(2 * n + N - 1) - psi(n + N - 1) - psi(n + h)) * p0
                + s1 - s2)

    raise ValueError(f"unknown even-N formula {formula!r}")


def _odd(N, n, t, s, formula):
    J = (N - 3) // 2
    h = (N - 1) // 2
    theta = angle_from_ts(t, s)
    w = 4.0 * t * s
    if formula == "odd_multiple_angle":
        p0, q0 = half_odd_pq_ts(N, n, t, s, "multiple_angle")
        total = sum((-1) ** k * f(k + n) / (f(k) * f(k + n + h) * f(J - k))
                    * (psi(k + n + h + 1) - psi(k + n + 1)) * math.sin((2 * k + n + 1) * theta)
                    for k in range(J + 1))
        lead = f(J) / (2.0 ** (N / 2 - 2) * math.sqrt(math.pi)) * w ** (-N / 4 + 0.5)
        return 2.0 / math.pi * q0 * theta - lead * total
    if formula == "odd_power":
        p0, q0 = half_odd_pq_ts(N, n, t, s, "power")
        total = sum(f(k + J) * psi(k + n + h + 1) / (2.0 ** k * f(k) * f(k + n + h) * f(J - k))
                    * math.sin((k + n + h) * theta + (k - J) * math.pi / 2) / w ** (k / 2 + 0.25)
                    for k in range(J + 1))
        return (2.0 / math.pi * q0 * theta + psi(n + 1) * p0
                - math.sqrt(2.0 / math.pi) * f(n) * total)
    raise ValueError(f"unknown odd-N formula {formula!r}")


def dp_dnu_resonant_ts(N, n, t, s, formula=None):
    """Same as :func:`dP_dnu_resonant` with x given through (t, s)."""
    if N < 2:
        raise DimensionParity(f"N must be at least 2, got {N}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    formula = default_formula(N) if formula is None else formula
    if N % 2 == 0:
        if formula not in EVEN_FORMULAS:
            raise DimensionParity(f"formula {formula!r} is not an even-N formula")
        return _even(N, n, t, s, formula)
    if formula not in ODD_FORMULAS:
        raise DimensionParity(f"formula {formula!r} is not an odd-N formula")
    return _odd(N, n, t, s, formula)


def dP_dnu_resonant(N, n, x, formula=None):
    r""":math:`[\partial P_\nu^{1-N/2}(x)/\partial\nu]` at :math:`\nu = n + N/2 - 1`.

    Parameters
    ----------
    N : int
        Dimension, N >= 2.
    n : int
        Resonance index, n >= 0.
    x : float
        Argument in (-1, 1).
    formula : str, optional
        One of :data:`EVEN_FORMULAS` (even N) or :data:`ODD_FORMULAS` (odd N).
        Defaults to ``"even_legendre"`` / ``"odd_multiple_angle"``.

    Raises
    ------
    DimensionParity
        If the formula belongs to the other parity family.
    """
    t, s = split_argument(x)
    return dp_dnu_resonant_ts(N, n, t, s, formula)
