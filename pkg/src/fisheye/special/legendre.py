r"""Ferrers (on-the-cut Legendre) functions of complex degree.

Conventions follow the usual Ferrers normalization on -1 < x < 1:

.. math::
    P_\nu^\mu(x) = \left(\frac{1+x}{1-x}\right)^{\mu/2}
        \mathbf{F}\left(\nu+1, -\nu; 1-\mu; \tfrac{1-x}{2}\right)

with :math:`\mathbf{F}` the regularized Gauss function, and
:math:`Q_\nu^\mu` the matching second solution. The order :math:`\mu` is
real, the degree :math:`\nu` may be complex.

Internally every evaluator works with the pair ``t = (1-x)/2`` and
``s = (1+x)/2``. Callers that know these two numbers more accurately than
``x`` (the Green's-function geometry does) use the ``*_ts`` variants so that
nothing is lost to cancellation next to the endpoints.
"""

import cmath
import math

from ..errors import ParameterPole
from .gamma import (
    digamma,
    gamma_ratio,
    is_nonpositive_integer,
    log_gamma,
    psi_over_gamma,
    rgamma,
    sin_pi,
    cos_pi,
)
from .hypergeometric import MAX_TERMS, SERIES_TOL, hyp2f1_regularized

__all__ = [
    "ferrers_P",
    "ferrers_Q",
    "legendre_R",
    "gegenbauer_C",
    "ferrers_p_ts",
    "ferrers_q_ts",
    "legendre_r_ts",
    "gegenbauer_c_ts",
    "split_argument",
]


def split_argument(x):
    """Return ``(t, s) = ((1-x)/2, (1+x)/2)`` after checking -1 < x < 1."""
    x = float(x)
    if not -1.0 < x < 1.0:
        raise ValueError(f"argument must satisfy -1 < x < 1, got {x!r}")
    return 0.5 * (1.0 - x), 0.5 * (1.0 + x)


def _is_integer(mu):
    return float(mu) == round(float(mu))


def _pochhammer(z, n):
    out = 1 + 0j
    for j in range(n):
        out *= z + j
    return out


# Above this real part of the degree, the hypergeometric series in t cancels
# badly for t near 1/2; values come from upward recurrence instead.
RECURRENCE_DEGREE = 4.0


def _recur(base, nu, mu, x):
    """Evaluate at degree nu from ``base(v)`` at two moderate degrees.

    Uses (v - mu + 1) f_{v+1} = (2v + 1) x f_v - (v + mu) f_{v-1}, which holds
    for both Ferrers kinds and is neutrally stable on the cut, upward for
    large Re nu and downward for very negative Re nu. Returns None when a
    divisor vanishes or a base value sits on a pole, so the caller can fall
    back to the direct evaluation.
    """
    if nu.real > RECURRENCE_DEGREE:
        steps = int(math.floor(nu.real - RECURRENCE_DEGREE + 1.0))
        v0 = nu - steps
        divisors = [v0 + j - mu + 1 for j in range(steps)]
    else:
        steps = int(math.floor(-nu.real - RECURRENCE_DEGREE))
        v0 = nu + steps
        divisors = [v0 - j + mu for j in range(steps)]
    if steps <= 0 or min(abs(d) for d in divisors) < 0.5:
        return None
    try:
        if nu.real > RECURRENCE_DEGREE:
            f_prev, f = base(v0 - 1), base(v0)
        else:
            f_prev, f = base(v0 + 1), base(v0)
    except ParameterPole:
        return None
    for j, den in enumerate(divisors):
        if nu.real > RECURRENCE_DEGREE:
            v = v0 + j
            f_prev, f = f, ((2 * v + 1) * x * f - (v + mu) * f_prev) / den
        else:
            v = v0 - j
            f_prev, f = f, ((2 * v + 1) * x * f - (v - mu + 1) * f_prev) / den
    return f


def ferrers_p_ts(nu, mu, t, s, method="auto"):
    """P_nu^mu at x = 1 - 2t = 2s - 1 (see :func:`ferrers_P`)."""
    nu = complex(nu)
    mu = float(mu)
    if t == 0.0:
        return _p_at_one(mu)
    if mu > 0 and _is_integer(mu):
        m = int(round(mu))
        # P^m = (-1)^m Gamma(nu+m+1)/Gamma(nu-m+1) P^{-m}; the ratio is a polynomial.
        return (-1) ** m * _pochhammer(nu - m + 1, 2 * m) * ferrers_p_ts(nu, -m, t, s, method)
    if t > 0.5 and method != "series" and _is_integer(mu) and nu.imag == 0.0:
        n = nu.real if nu.real >= -0.5 else -nu.real - 1.0
        if n == round(n) and n >= -mu:
            # (1 - x^2)^{m/2} times a polynomial of parity n + m; the direct
            # sum would cancel catastrophically next to x = -1.
            sign = -1.0 if int(round(n - mu)) % 2 else 1.0
            return sign * ferrers_p_ts(nu, mu, s, t, method)
    if method == "auto":
        if nu.real < -0.5:
            nu = -nu - 1.0  # P is invariant under nu -> -nu - 1
        if nu.real > RECURRENCE_DEGREE:
            val = _recur(lambda v: ferrers_p_ts(v, mu, t, s), nu, mu, s - t)
            if val is not None:
                return val
    if method == "auto" and t > 0.5 and abs(nu.imag) >= 1.0 and s >= 0.01:
        # the connection formula cancels terms of size exp(pi |Im nu|); the
        # direct series does not and still converges at this distance
        method = "series"
    body = hyp2f1_regularized(nu + 1, -nu, 1.0 - mu, t, s, method=method)
    if mu == 0.0:
        return body
    return (s / t) ** (0.5 * mu) * body


def _p_at_one(mu):
    # Value at x = 1: the series collapses to its first term times (t/s)^{-mu/2}.
    if mu == 0.0:
        return 1 + 0j
    if mu < 0.0:
        return 0j
    raise ValueError(f"P_nu^mu is unbounded at x = 1 for mu = {mu} > 0")


def ferrers_P(nu, mu, x, method="auto"):
    r"""Ferrers function of the first kind :math:`P_\nu^\mu(x)`.

    Parameters
    ----------
    nu : complex
        Degree.
    mu : float
        Order. The Green's-function code only needs :math:`\mu = 1 - N/2`,
        but any real order is accepted.
    x : float
        Argument, strictly inside (-1, 1).
    method : {"auto", "series", "connection"}
        ``"series"`` forces the expansion about x = 1, ``"connection"`` the
        expansion about x = -1. ``"auto"`` picks the former for x >= 0.

    Raises
    ------
    NonConvergent
        With ``method="series"`` too close to x = -1.
    """
    t, s = split_argument(x)
    return ferrers_p_ts(nu, mu, t, s, method)


def _weights(k, z):
    """(k!/Gamma(z), k! psi(z)/Gamma(z)) for real z, continued through poles."""
    if z <= 0 and z == round(z):
        return 0.0, math.factorial(k) * psi_over_gamma(z).real
    if z > 0:
        w = math.exp(math.lgamma(k + 1) - math.lgamma(z))
    else:
        w = math.factorial(k) * rgamma(z).real
    return w, w * digamma(z).real


def _q_integer_order(nu, m, t, s):
    """Q_nu^m for integer m, t <= 1/2, as the mu-derivative of the P-combination."""
    a, b = nu + 1, -nu
    log_ratio = math.log(s / t)
    # base_k = (a)_k (b)_k t^k / (k!)^2 decays geometrically; the k!/Gamma(.)
    # weights restore the regularized coefficients.
    base = 1 + 0j
    p_plus = p_minus = d_plus = d_minus = 0j
    k = 0
    while True:
        rp, gp = _weights(k, 1.0 - m + k)
        rm, gm = _weights(k, 1.0 + m + k)
        terms = (base * rp, base * rm, base * gp, base * gm)
        p_plus += terms[0]
        p_minus += terms[1]
        d_plus += terms[2]
        d_minus += terms[3]
        base *= (a + k) * (b + k) / ((k + 1) ** 2) * t
        k += 1
        if base == 0 or k > MAX_TERMS:
            break
        if k > abs(m) + 1:
            scale = max(abs(p_plus), abs(p_minus), abs(d_plus), abs(d_minus), 1e-300)
            if max(abs(v) for v in terms) < SERIES_TOL * scale * (1 - t):
                break
    w_plus = (s / t) ** (0.5 * m)
    w_minus = (t / s) ** (0.5 * m)
    p_plus *= w_plus
    p_minus *= w_minus
    dp_plus = 0.5 * log_ratio * p_plus + w_plus * d_plus
    dp_minus = -0.5 * log_ratio * p_minus - w_minus * d_minus
    if is_nonpositive_integer(nu + m + 1):
        raise ParameterPole(f"Q_nu^mu undefined: nu + mu = {nu + m} is a negative integer")
    g_num = cmath.exp(log_gamma(nu + m + 1))
    ratio = g_num * rgamma(nu - m + 1)
    inner = (ratio * digamma(nu + m + 1) + g_num * psi_over_gamma(nu - m + 1)) * p_minus
    inner += ratio * dp_minus
    return 0.5 * dp_plus - 0.5 * (-1) ** m * inner


def ferrers_q_ts(nu, mu, t, s):
    """Q_nu^mu at x = 1 - 2t = 2s - 1 (see :func:`ferrers_Q`)."""
    nu = complex(nu)
    mu = float(mu)
    if abs(nu.real) > RECURRENCE_DEGREE + 1.0:
        val = _recur(lambda v: ferrers_q_ts(v, mu, t, s), nu, mu, s - t)
        if val is not None:
            return val
    if t > 0.5 and _is_integer(mu):
        # x < 0: reflect onto -x where the series in (1 - x)/2 is fast.
        q_ref = ferrers_q_ts(nu, mu, s, t)
        p_ref = ferrers_p_ts(nu, mu, s, t)
        return -cos_pi(nu + mu) * q_ref - 0.5 * math.pi * sin_pi(nu + mu) * p_ref
    if _is_integer(mu):
        return _q_integer_order(nu, int(round(mu)), t, s)
    ratio = gamma_ratio(nu + mu + 1, nu - mu + 1)
    p_pos = ferrers_p_ts(nu, mu, t, s)
    p_neg = ferrers_p_ts(nu, -mu, t, s)
    return 0.5 * math.pi / sin_pi(mu) * (cos_pi(mu) * p_pos - ratio * p_neg)


def ferrers_Q(nu, mu, x):
    r"""Ferrers function of the second kind :math:`Q_\nu^\mu(x)`.

    Non-integer orders use the standard combination of :math:`P^{\pm\mu}`;
    integer orders use its limit, a series carrying digamma weights. For
    integer orders, points with x < 0 are reflected to -x; the reflection
    weights grow like exp(pi |Im nu|), so accuracy there degrades to about
    exp(pi |Im nu|) times machine epsilon.

    Raises
    ------
    ParameterPole
        When nu + mu is a negative integer.
    """
    t, s = split_argument(x)
    return ferrers_q_ts(nu, mu, t, s)


def legendre_r_ts(nu, mu, t, s, form="auto"):
    """R_nu^mu at x = 1 - 2t (see :func:`legendre_R`)."""
    nu = complex(nu)
    mu = float(mu)
    if form == "auto":
        form = "qp" if _is_integer(mu) else "sine"
    if form == "qp":
        return ferrers_q_ts(nu, mu, t, s) + 0.5j * math.pi * ferrers_p_ts(nu, mu, t, s)
    if form == "sine":
        if _is_integer(mu):
            raise ValueError("the sine form of R needs a non-integer order")
        ratio = gamma_ratio(nu + mu + 1, nu - mu + 1)
        p_pos = ferrers_p_ts(nu, mu, t, s)
        p_neg = ferrers_p_ts(nu, -mu, t, s)
        return 0.5 * math.pi / sin_pi(mu) * ((cos_pi(mu) + 1j * sin_pi(mu)) * p_pos - ratio * p_neg)
    raise ValueError(f"unknown form {form!r}")


def legendre_R(nu, mu, x, form="auto"):
    r"""Third-kind combination :math:`R_\nu^\mu = Q_\nu^\mu + (i\pi/2) P_\nu^\mu`.

    ``form="sine"`` evaluates the equivalent
    :math:`\frac{\pi}{2\sin\pi\mu}[e^{i\pi\mu}P^\mu - \Gamma(\nu+\mu+1)/\Gamma(\nu-\mu+1)P^{-\mu}]`,
    valid for non-integer orders only.
    """
    t, s = split_argument(x)
    return legendre_r_ts(nu, mu, t, s, form)


def gegenbauer_c_ts(alpha, lam, t, s):
    alpha = complex(alpha)
    lam = float(lam)
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam!r}")
    if t == 0.0:
        # C(1) = Gamma(alpha + 2 lam)/(Gamma(2 lam) Gamma(alpha + 1))
        return gamma_ratio(alpha + 2 * lam, alpha + 1) / math.gamma(2 * lam)
    coef = math.sqrt(math.pi) / 2.0 ** (lam - 0.5) / math.gamma(lam)
    coef = coef * gamma_ratio(alpha + 2 * lam, alpha + 1)
    one_minus_x2 = 4.0 * t * s
    p = ferrers_p_ts(alpha + lam - 0.5, 0.5 - lam, t, s)
    return coef * one_minus_x2 ** (0.25 - 0.5 * lam) * p


def gegenbauer_C(alpha, lam, x):
    r"""Gegenbauer function :math:`C_\alpha^\lambda(x)` of complex degree.

    Built from :math:`P_{\alpha+\lambda-1/2}^{1/2-\lambda}`, so it reduces to
    the Gegenbauer polynomial for non-negative integer alpha.
    """
    t, s = split_argument(x)
    return gegenbauer_c_ts(alpha, lam, t, s)
