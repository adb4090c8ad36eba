r"""Geometry of the Maxwell fish-eye medium.

The medium has refraction index :math:`n(r) = 2 n_0 \rho^2 / (r^2 + \rho^2)`
in :math:`\mathbb{R}^N`. This module holds the value types, the map between
wavenumber k and Legendre degree :math:`\nu`, the hyperspherical inversion
and the two geometric invariants every Green's-function formula is built on:

* the Legendre argument :math:`\chi`, handled as the exact pair
  ``t = (1-chi)/2``, ``s = (1+chi)/2``;
* the symmetric radical :math:`D = \sqrt{r^2 r'^2 + 2\rho^2 r\cdot r' + \rho^4}`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import BadDimension, CenterSingularity, DimensionMismatch

__all__ = [
    "Medium",
    "Degree",
    "InversionSpec",
    "RESONANCE_TOL",
    "refraction_index",
    "nu_from_k",
    "k_from_nu",
    "resonant_wavenumbers",
    "invert_point",
    "kelvin_transform",
    "fisheye_inversion",
    "image_point",
    "chi",
    "chi_split",
    "symmetric_radical",
    "sphere_area",
]

RESONANCE_TOL = 1e-12


@dataclass(frozen=True)
class Medium:
    """Fish-eye configuration: dimension ``dim``, radius ``rho``, index scale ``n0``."""

    dim: int
    rho: float = 1.0
    n0: float = 1.0

    def __post_init__(self):
        if int(self.dim) != self.dim or self.dim < 2:
            raise BadDimension(f"dimension must be an integer >= 2, got {self.dim!r}")
        if not self.rho > 0:
            raise ValueError(f"rho must be positive, got {self.rho!r}")
        if not self.n0 > 0:
            raise ValueError(f"n0 must be positive, got {self.n0!r}")

    @property
    def mu(self) -> float:
        """Legendre order magnitude N/2 - 1."""
        return self.dim / 2 - 1


@dataclass(frozen=True)
class Degree:
    """Complex Legendre degree nu with resonance classification."""

    nu: complex

    def __post_init__(self):
        object.__setattr__(self, "nu", complex(self.nu))
        if not (math.isfinite(self.nu.real) and math.isfinite(self.nu.imag)):
            raise ValueError(f"degree must be finite, got {self.nu!r}")

    def resonance(self, dim: int, tol: float = RESONANCE_TOL) -> int | None:
        """Index n if nu = n + N/2 - 1 or nu = -n - N/2 (within ``tol``), else None."""
        if abs(self.nu.imag) >= tol:
            return None
        for cand in (self.nu.real - dim / 2 + 1, -self.nu.real - dim / 2):
            n = round(cand)
            if n >= 0 and abs(cand - n) < tol:
                return int(n)
        return None

    def is_resonant(self, dim: int, tol: float = RESONANCE_TOL) -> bool:
        return self.resonance(dim, tol) is not None


@dataclass(frozen=True)
class InversionSpec:
    """Inversion r -> R^2 (r - a)/|r - a|^2 + b."""

    center: tuple
    offset: tuple
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", tuple(float(c) for c in self.center))
        object.__setattr__(self, "offset", tuple(float(c) for c in self.offset))
        if len(self.center) != len(self.offset):
            raise DimensionMismatch("center and offset differ in dimension")
        if not self.radius > 0:
            raise ValueError(f"radius must be positive, got {self.radius!r}")


def as_degree(d) -> Degree:
    return d if isinstance(d, Degree) else Degree(d)


def _point(m: Medium | None, r: Sequence[float]) -> np.ndarray:
    p = np.asarray(r, dtype=float).reshape(-1)
    if m is not None and p.size != m.dim:
        raise DimensionMismatch(f"point has {p.size} coordinates, medium is {m.dim}-dimensional")
    return p


def refraction_index(m: Medium, r) -> float:
    """2 n0 rho^2 / (r^2 + rho^2)."""
    p = _point(m, r)
    return 2.0 * m.n0 * m.rho ** 2 / (float(p @ p) + m.rho ** 2)


def nu_from_k(m: Medium, k) -> Degree:
    """Degree nu = (-1 + sqrt(1 + 4 n0^2 k^2 rho^2))/2.

    The principal square root is used, so nu -> 0 as n0 k -> 0 and the cut
    sits on 1 + 4 n0^2 k^2 rho^2 <= 0.
    """
    w = 4.0 * (m.n0 * complex(k) * m.rho) ** 2
    return Degree((-1.0 + cmath.sqrt(1.0 + w)) / 2.0)


def k_from_nu(m: Medium, d) -> complex:
    """Wavenumber with nu(nu+1) = n0^2 k^2 rho^2 (principal root)."""
    nu = as_degree(d).nu
    return cmath.sqrt(nu * (nu + 1)) / (m.n0 * m.rho)


def resonant_wavenumbers(m: Medium, n_max: int) -> list[tuple[int, float, float]]:
    """Rows (n, nu, k) for the resonances nu = n + N/2 - 1, n = 0..n_max."""
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    rows = []
    for n in range(n_max + 1):
        nu = n + m.dim / 2 - 1
        rows.append((n, nu, math.sqrt(nu * (nu + 1)) / (m.n0 * m.rho)))
    return rows


def invert_point(spec: InversionSpec, r) -> np.ndarray:
    """R^2 (r - a)/|r - a|^2 + b.

    Raises
    ------
    CenterSingularity
        If r coincides with the center a.
    """
    p = _point(None, r)
    a = np.asarray(spec.center)
    if p.size != a.size:
        raise DimensionMismatch(f"point has {p.size} coordinates, inversion is {a.size}-dimensional")
    v = p - a
    q = float(v @ v)
    if q == 0.0:
        raise CenterSingularity("point coincides with the inversion center")
    return spec.radius ** 2 * v / q + np.asarray(spec.offset)


def kelvin_transform(spec: InversionSpec, field: Callable, r) -> complex:
    """|r - a|^{-(N-2)} field(invert_point(spec, r)); the prefactor is 1 for N = 2."""
    p = _point(None, r)
    image = invert_point(spec, p)
    n = p.size
    dist = float(np.linalg.norm(p - np.asarray(spec.center)))
    return complex(field(image)) / dist ** (n - 2)


def image_point(m: Medium, r_src) -> np.ndarray:
    """Second focus -r' rho^2 / r'^2 of a source at r' != 0."""
    p = _point(m, r_src)
    q = float(p @ p)
    if q == 0.0:
        raise CenterSingularity("a source at the origin has its image at infinity")
    return -p * m.rho ** 2 / q


def fisheye_inversion(m: Medium, center) -> InversionSpec:
    """Inversion about ``center`` a with radius sqrt(rho^2 + a^2) and b = a.

    This is the family that maps fish-eye solutions to fish-eye solutions.
    With center ``image_point(m, r')`` it carries the central source to r'.
    """
    a = _point(m, center)
    return InversionSpec(tuple(a), tuple(a), math.sqrt(m.rho ** 2 + float(a @ a)))


def _radical_sq(m: Medium, p: np.ndarray, q: np.ndarray) -> float:
    # D = |q| |p + q rho^2/q^2|, anchored on the longer vector so the result is
    # exactly symmetric and stays accurate next to the image point.
    np2, nq2 = float(p @ p), float(q @ q)
    # equal norms: order by components so the anchor choice is still canonical
    if (nq2, tuple(q)) < (np2, tuple(p)):
        p, q, np2, nq2 = q, p, nq2, np2
    if nq2 == 0.0:
        return m.rho ** 4
    v = p + q * (m.rho ** 2 / nq2)
    return nq2 * float(v @ v)


def symmetric_radical(m: Medium, r, r_src) -> float:
    """sqrt(r^2 r'^2 + 2 rho^2 r.r' + rho^4), never negative."""
    return math.sqrt(_radical_sq(m, _point(m, r), _point(m, r_src)))


def chi_split(m: Medium, r, r_src) -> tuple[float, float]:
    """Exact pair ((1 - chi)/2, (1 + chi)/2) for the Green's-function argument.

    ``t = D^2/(A B)`` and ``s = rho^2 |r - r'|^2/(A B)`` with
    ``A = r^2 + rho^2`` and ``B = r'^2 + rho^2``. Both stay accurate at the
    source (s -> 0) and at the image point (t -> 0).
    """
    p, q = _point(m, r), _point(m, r_src)
    ab = (float(p @ p) + m.rho ** 2) * (float(q @ q) + m.rho ** 2)
    diff = p - q
    s = m.rho ** 2 * float(diff @ diff) / ab
    t = _radical_sq(m, p, q) / ab
    return t, s


def chi(m: Medium, r, r_src) -> float:
    """chi = -1 + 2 rho^2 |r - r'|^2 / ((r^2 + rho^2)(r'^2 + rho^2)), in [-1, 1]."""
    t, s = chi_split(m, r, r_src)
    # s - t rather than 2s - 1 keeps both ends exact.
    return min(1.0, max(-1.0, s - t))


def sphere_area(N: int) -> float:
    """Area 2 pi^{N/2}/Gamma(N/2) of the unit sphere in R^N."""
    if int(N) != N or N < 2:
        raise BadDimension(f"N must be an integer >= 2, got {N!r}")
    return 2.0 * math.pi ** (N / 2) / math.gamma(N / 2)
