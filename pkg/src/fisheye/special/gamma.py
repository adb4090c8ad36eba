"""Gamma-family helpers on the complex plane.

The heavy lifting is delegated to :mod:`scipy.special`; this module adds the
pole policy used throughout the package (raise instead of returning inf/nan)
and a few combinations that need care near poles.
"""

import cmath
import math

from scipy import special as _sc

from ..errors import ParameterPole, PoleAtNonPositiveInteger

__all__ = [
    "is_nonpositive_integer",
    "log_gamma",
    "digamma",
    "rgamma",
    "gamma_ratio",
    "psi_over_gamma",
    "sin_pi",
    "cos_pi",
]


def is_nonpositive_integer(z, tol=0.0):
    """True when ``z`` lies within ``tol`` of one of 0, -1, -2, ..."""
    z = complex(z)
    if abs(z.imag) > tol or z.real > tol:
        return False
    return abs(z.real - round(z.real)) <= tol


def sin_pi(z):
    """sin(pi z), reducing the real part by its nearest integer first.

    Forming ``pi * z`` directly costs an absolute error of about
    ``|z| * eps``, which swamps the result when ``z`` is near an integer.
    """
    z = complex(z)
    n = round(z.real)
    return (-1) ** (n % 2) * cmath.sin(math.pi * (z - n))


def cos_pi(z):
    """cos(pi z) with the same argument reduction as :func:`sin_pi`."""
    z = complex(z)
    n = round(z.real)
    return (-1) ** (n % 2) * cmath.cos(math.pi * (z - n))


def _check_finite(z):
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite argument {z!r}")
    return z


def log_gamma(z):
    """Principal branch of log Gamma(z).

    Raises
    ------
    PoleAtNonPositiveInteger
        If ``z`` is 0, -1, -2, ...
    """
    z = _check_finite(z)
    if is_nonpositive_integer(z):
        raise PoleAtNonPositiveInteger(f"log_gamma pole at z={z.real:g}")
    return complex(_sc.loggamma(z))


def digamma(z):
    """psi(z) = Gamma'(z)/Gamma(z)."""
    z = _check_finite(z)
    if is_nonpositive_integer(z):
        raise PoleAtNonPositiveInteger(f"digamma pole at z={z.real:g}")
    if z.imag == 0.0:
        x = z.real
        if x < 0.0:
            # Reflect with the exact offset from the nearest integer; forming
            # pi*x directly costs ~1e-11 relative accuracy next to a pole.
            d = x - round(x)
            return complex(_sc.psi(1.0 - x) - math.pi / math.tan(math.pi * d))
        return complex(_sc.psi(x))
    return complex(_sc.psi(z))


def rgamma(z):
    """1/Gamma(z), entire; exactly zero at the poles of Gamma."""
    z = complex(z)
    if is_nonpositive_integer(z):
        return 0j
    if z.imag == 0.0:
        return complex(_sc.rgamma(z.real))
    return complex(_sc.rgamma(z))


def gamma_ratio(a, b):
    """Gamma(a)/Gamma(b) evaluated in log space.

    Returns 0 when ``b`` sits on a pole; raises :class:`ParameterPole` when
    ``a`` does.
    """
    a, b = complex(a), complex(b)
    if is_nonpositive_integer(a):
        raise ParameterPole(f"Gamma({a.real:g}) in numerator")
    if is_nonpositive_integer(b):
        return 0j
    return cmath.exp(log_gamma(a) - log_gamma(b))


def psi_over_gamma(z):
    """psi(z)/Gamma(z), continued through the poles.

    At z = -p the limit is (-1)**(p+1) * p!. Points within rounding
    distance of a pole take that limit, since the product psi * (1/Gamma)
    would overflow to inf * 0 there.
    """
    z = complex(z)
    if is_nonpositive_integer(z, tol=1e-15 * max(1.0, abs(z))):
        p = int(round(-z.real))
        return complex((-1) ** (p + 1) * math.factorial(p))
    return digamma(z) * rgamma(z)
