"""Gauss hypergeometric function 2F1 on [0, 1).

Two entry points:

* :func:`hyp2f1_series` sums the defining power series and refuses to work
  when the argument is too close to 1.
* :func:`hyp2f1_regularized` returns F(a, b; c; t)/Gamma(c) and switches to
  the 1 - t connection formulas (including the logarithmic case where
  c - a - b is an integer) once t exceeds 1/2.

Both accept complex a, b, c; the argument t is real.
"""

import math

from ..errors import NonConvergent, PoleInC
from .gamma import digamma, gamma_ratio, is_nonpositive_integer, rgamma

__all__ = ["hyp2f1_series", "hyp2f1_regularized", "SERIES_TOL", "MAX_TERMS"]

SERIES_TOL = 1e-15
MAX_TERMS = 10_000


def _terminates_at(p):
    """Number of nonzero terms contributed by a Pochhammer (p)_k, or None."""
    if is_nonpositive_integer(p):
        return int(round(-complex(p).real)) + 1
    return None


def _sum_series(a, b, c, t, tol, max_terms, start=1 + 0j, k0=0):
    """Sum_{k>=k0} term_k with term_{k0} = start and the 2F1 term ratio."""
    a, b, c = complex(a), complex(b), complex(c)
    total = start
    term = start
    if term == 0 or t == 0.0:
        return total
    n_stop = [n for n in (_terminates_at(a), _terminates_at(b)) if n is not None]
    finite = min(n_stop) if n_stop else None
    if finite is None and t > 0.0:
        needed = math.log(tol) / math.log(t)
        if needed > max_terms:
            raise NonConvergent(
                f"2F1 series at t={t!r} needs ~{needed:.3g} terms (cap {max_terms})")
    prev = abs(term)
    k = k0
    while True:
        if finite is not None and k + 1 >= finite:
            return total
        den = (c + k) * (k + 1)
        if den == 0:
            raise PoleInC(f"lower parameter c={c!r} reaches a pole at k={k}")
        term = term * (a + k) * (b + k) / den * t
        total += term
        k += 1
        mag = abs(term)
        if finite is None:
            r = mag / prev if prev else 0.0
            r = max(r, abs(t))
            if r < 1.0 and mag * r / (1.0 - r) <= tol * max(abs(total), 1e-300):
                return total
            if k - k0 >= max_terms:
                raise NonConvergent(f"2F1 series not converged after {max_terms} terms")
        prev = mag


def hyp2f1_series(a, b, c, t, tol=SERIES_TOL, max_terms=MAX_TERMS):
    """Direct power series for 2F1(a, b; c; t), 0 <= t < 1.

    Raises
    ------
    PoleInC
        If c is a non-positive integer and the series does not terminate
        before the offending term.
    NonConvergent
        If the tail cannot be pushed below ``tol`` within ``max_terms``.
    """
    t = float(t)
    if not 0.0 <= t < 1.0:
        raise ValueError(f"t must lie in [0, 1), got {t!r}")
    return _sum_series(a, b, c, t, tol, max_terms)


def _regularized_direct(a, b, c, t, tol, max_terms):
    a, b, c = complex(a), complex(b), complex(c)
    if not is_nonpositive_integer(c):
        return rgamma(c) * _sum_series(a, b, c, t, tol, max_terms)
    # F(a,b;-p;t)/Gamma(-p) = (a)_{p+1}(b)_{p+1} t^{p+1}/(p+1)! F(a+p+1, b+p+1; p+2; t)
    p = int(round(-c.real))
    lead = 1 + 0j
    for j in range(p + 1):
        lead *= (a + j) * (b + j) / (j + 1)
    lead *= t ** (p + 1)
    if lead == 0:
        return 0j
    return lead * _sum_series(a + p + 1, b + p + 1, p + 2, t, tol, max_terms)


def _near_integer(z, tol=1e-13):
    z = complex(z)
    return abs(z.imag) <= tol and abs(z.real - round(z.real)) <= tol


def _snap_to_pole(z):
    """Move z onto a non-positive integer closer than 1e-15 (relative).

    The shift is below double-precision resolution of the result, and it keeps
    products such as rgamma(b) psi(b) from overflowing at subnormal offsets.
    """
    z = complex(z)
    n = round(z.real)
    if n <= 0 and abs(z - n) <= 1e-15 * max(1.0, abs(n)):
        return complex(n)
    return z


# Chebyshev nodes (in c - a - b minus its nearest integer) for near-integer
# interpolation; the smallest node sits at about 2e-3, where the two gamma
# branches lose at most about eps/2e-3 to cancellation.
NEAR_INTEGER_BAND = 1e-3
_NODES = 8
_HALF_WIDTH = 1e-2
_X = [_HALF_WIDTH * math.cos((2 * j + 1) * math.pi / (2 * _NODES)) for j in range(_NODES)]
_W = [(-1) ** j * math.sin((2 * j + 1) * math.pi / (2 * _NODES)) for j in range(_NODES)]


def _near_integer_connection(a, b, c, delta, t, s, tol, max_terms):
    # F/Gamma(c) is entire in c: sample c - a - b = m + x_j, interpolate at m + delta.
    vals = [_regularized_connection(a, b, c - delta + x, t, s, tol, max_terms) for x in _X]
    num = den = 0j
    for x, w, v in zip(_X, _W, vals):
        q = w / (delta - x)
        num += q * v
        den += q
    return num / den


def _regularized_connection(a, b, c, t, s, tol, max_terms):
    """F(a,b;c;t)/Gamma(c) expanded in s = 1 - t."""
    a, b, c = complex(a), complex(b), complex(c)
    sigma = c - a - b
    if _near_integer(sigma):
        m = int(round(sigma.real))
        if m < 0:
            # Euler transformation makes c - a - b non-negative.
            return s ** m * _regularized_connection(c - a, c - b, c, t, s, tol, max_terms)
        return _log_case(a, b, m, s, tol, max_terms)
    delta = sigma - round(sigma.real)
    if abs(delta) < NEAR_INTEGER_BAND:
        return _near_integer_connection(a, b, c, delta, t, s, tol, max_terms)
    g_sigma = gamma_ratio(sigma, 1.0)
    g_msigma = gamma_ratio(-sigma, 1.0)
    first = g_sigma * rgamma(c - a) * rgamma(c - b)
    if first != 0:
        first *= _sum_series(a, b, 1 - sigma, s, tol, max_terms)
    second = g_msigma * rgamma(a) * rgamma(b)
    if second != 0:
        second *= s ** sigma * _sum_series(c - a, c - b, 1 + sigma, s, tol, max_terms)
    return first + second


def _psi_safe(z):
    return 0j if is_nonpositive_integer(z) else digamma(z)


def _log_case(a, b, m, s, tol, max_terms):
    """Degenerate connection when c - a - b = m is a non-negative integer."""
    finite = 0j
    pref = rgamma(a + m) * rgamma(b + m)
    if pref != 0 and m > 0:
        term = 1 + 0j
        for k in range(m):
            finite += term * math.factorial(m - k - 1)
            term *= (a + k) * (b + k) / (k + 1) * (-s)
        finite *= pref
    ra, rb = rgamma(a), rgamma(b)
    if ra * rb == 0:
        return finite
    log_s = math.log(s)
    # psi(a+m+k), psi(b+m+k) are evaluated directly: a running recurrence
    # started next to a pole of psi carries its large absolute error along.
    psi_1 = digamma(1.0)
    psi_m = digamma(m + 1.0)
    coef = 1.0 / math.factorial(m)
    total = 0j
    prev = None
    k = 0
    while True:
        bracket = log_s - psi_1 - psi_m + _psi_safe(a + m + k) + _psi_safe(b + m + k)
        term = coef * bracket
        total += term
        mag = abs(coef) * (abs(bracket) + 1.0)
        if k > 0 and prev is not None:
            r = max(mag / prev if prev else 0.0, s)
            if r < 1.0 and mag * r / (1.0 - r) <= tol * max(abs(total), 1e-300):
                break
        if coef == 0:
            break
        if k >= max_terms:
            raise NonConvergent(f"logarithmic 2F1 connection not converged after {max_terms} terms")
        prev = mag
        coef = coef * (a + m + k) * (b + m + k) / ((k + 1) * (k + m + 1)) * s
        psi_1 += 1.0 / (k + 1)
        psi_m += 1.0 / (k + m + 1)
        k += 1
    return finite - (-s) ** m * ra * rb * total


def _connection_safe(a, b, c):
    """Whether a terminating series may go through the 1 - t expansion.

    With c - a - b non-integer the second branch drops out and the first is a
    polynomial in 1 - t. In the logarithmic case the digamma poles are only
    avoided when the polynomial degree stays below c - a - b.
    """
    sigma = complex(c) - complex(a) - complex(b)
    if not _near_integer(sigma):
        return True
    m = int(round(sigma.real))
    degrees = [n - 1 for n in (_terminates_at(a), _terminates_at(b)) if n is not None]
    return m >= 0 and min(degrees) < m


def hyp2f1_regularized(a, b, c, t, s=None, method="auto",
                       tol=SERIES_TOL, max_terms=MAX_TERMS):
    """F(a, b; c; t)/Gamma(c) for 0 <= t < 1.

    Parameters
    ----------
    a, b, c : complex
        Hypergeometric parameters; c may be a non-positive integer.
    t : float
        Argument.
    s : float, optional
        ``1 - t`` supplied independently; pass it when it is known more
        accurately than ``1 - t`` can be formed in floating point.
    method : {"auto", "series", "connection"}
        ``"auto"`` sums the direct series for t <= 1/2 and the connection
        formula otherwise. Terminating series whose 1 - t expansion would
        hit digamma poles are always summed directly.
    """
    t = float(t)
    s = 1.0 - t if s is None else float(s)
    if not (0.0 <= t < 1.0 and 0.0 < s <= 1.0):
        raise ValueError(f"argument outside [0, 1): t={t!r}, s={s!r}")
    a, b, c = _snap_to_pole(a), _snap_to_pole(b), _snap_to_pole(c)
    terminating = _terminates_at(a) is not None or _terminates_at(b) is not None
    if method == "auto":
        method = "series" if t <= 0.5 else "connection"
    if method == "series":
        return _regularized_direct(a, b, c, t, tol, max_terms)
    if method == "connection":
        if terminating and not _connection_safe(a, b, c):
            return _regularized_direct(a, b, c, t, tol, max_terms)
        return _regularized_connection(a, b, c, t, s, tol, max_terms)
    raise ValueError(f"unknown method {method!r}")
