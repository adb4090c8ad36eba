r"""Finite trigonometric forms of :math:`P_\nu^{1-N/2}` for odd N.

For odd N the order 1 - N/2 is a half-integer and the Ferrers functions
collapse to finite sums of sines and cosines of multiples of arccos x. Two
equivalent layouts are provided for each quantity:

``"multiple_angle"``
    a common :math:`(1-x^2)` power times sines of :math:`(2k + \cdot)\theta`;
``"power"``
    sines shifted by quarter periods, each with its own :math:`(1-x^2)` power.
"""

import cmath
import math

from ..errors import DimensionParity
from .gamma import gamma_ratio
from .legendre import split_argument

__all__ = [
    "ferrers_P_half_odd",
    "ferrers_PQ_half_odd_aux",
    "half_odd_p_ts",
    "half_odd_pq_ts",
    "angle_from_ts",
    "HALF_ODD_FORMULAS",
]

HALF_ODD_FORMULAS = ("multiple_angle", "power")


def _require_odd(N):
    if N < 3 or N % 2 == 0:
        raise DimensionParity(f"odd N >= 3 required, got N={N}")


def angle_from_ts(t, s):
    """arccos(x) for x = 1 - 2t = 2s - 1, accurate at both ends."""
    return 2.0 * math.atan2(math.sqrt(t), math.sqrt(s))


def half_odd_p_ts(N, nu, t, s, formula="multiple_angle"):
    _require_odd(N)
    nu = complex(nu)
    J = (N - 3) // 2
    theta = angle_from_ts(t, s)
    w = 4.0 * t * s  # 1 - x^2
    if formula == "multiple_angle":
        total = 0j
        for k in range(J + 1):
            g = gamma_ratio(k + nu - N / 2 + 2, k + nu + 1.5)
            total += (-1) ** k * g / (math.factorial(k) * math.factorial(J - k)) * \
                cmath.sin((2 * k + nu - N / 2 + 2) * theta)
        return math.factorial(J) / (2.0 ** (N / 2 - 2) * math.sqrt(math.pi)) * \
            w ** (-N / 4 + 0.5) * total
    if formula == "power":
        total = 0j
        for k in range(J + 1):
            g = gamma_ratio(nu - N / 2 + 2, k + nu + 1.5)
            phase = (k + nu + 0.5) * theta + (k - J) * math.pi / 2
            total += math.factorial(k + J) * g / (
                2.0 ** k * math.factorial(k) * math.factorial(J - k)) * \
                cmath.sin(phase) / w ** (k / 2 + 0.25)
        return math.sqrt(2.0 / math.pi) * total
    raise ValueError(f"unknown formula {formula!r}")


def ferrers_P_half_odd(N, nu, x, formula="multiple_angle"):
    r""":math:`P_\nu^{1-N/2}(x)` for odd N >= 3 as a finite trigonometric sum.

    Raises
    ------
    DimensionParity
        For even N.
    ParameterPole
        At the isolated degrees where a Gamma factor of the chosen layout has
        a pole (the function itself stays finite there).
    """
    _require_odd(N)
    t, s = split_argument(x)
    return half_odd_p_ts(N, nu, t, s, formula)


def half_odd_pq_ts(N, n, t, s, formula="multiple_angle"):
    _require_odd(N)
    J = (N - 3) // 2
    h = (N - 1) // 2
    theta = angle_from_ts(t, s)
    w = 4.0 * t * s
    if formula == "multiple_angle":
        sp = sq = 0.0
        for k in range(J + 1):
            c = (-1) ** k * math.factorial(k + n) / (
                math.factorial(k) * math.factorial(k + n + h) * math.factorial(J - k))
            sp += c * math.sin((2 * k + n + 1) * theta)
            sq += c * math.cos((2 * k + n + 1) * theta)
        lead = math.factorial(J) * w ** (-N / 4 + 0.5)
        p = lead / (2.0 ** (N / 2 - 2) * math.sqrt(math.pi)) * sp
        q = lead * math.sqrt(math.pi) / 2.0 ** (N / 2 - 1) * sq
        return p, q
    if formula == "power":
        sp = sq = 0.0
        for k in range(J + 1):
            c = math.factorial(k + J) / (
                2.0 ** k * math.factorial(k) * math.factorial(k + n + h) * math.factorial(J - k))
            phase = (k + n + h) * theta + (k - J) * math.pi / 2
            den = w ** (k / 2 + 0.25)
            sp += c * math.sin(phase) / den
            sq += c * math.cos(phase) / den
        nf = math.factorial(n)
        return math.sqrt(2.0 / math.pi) * nf * sp, math.sqrt(math.pi / 2.0) * nf * sq
    raise ValueError(f"unknown formula {formula!r}")


def ferrers_PQ_half_odd_aux(N, n, x, formula="multiple_angle"):
    r"""Pair :math:`(P, Q)_{n+N/2-1}^{1-N/2}(x)` at a resonant half-odd degree.

    Both are real and given by terminating trigonometric sums.
    """
    _require_odd(N)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    t, s = split_argument(x)
    return half_odd_pq_ts(N, n, t, s, formula)
