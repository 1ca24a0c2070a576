"""Balls, annuli, and Robin problems on them.

Geometry is exact: volumes and surface measures come from the closed
forms ``|B_r| = omega_d r^d`` and ``sigma(dB_r) = d omega_d r^{d-1}``
with ``omega_d = pi^{d/2} / Gamma(1 + d/2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Ball",
    "Annulus",
    "RobinProblem",
    "ModeSpec",
    "measures",
    "unit_ball_volume",
    "unit_sphere_area",
    "spherical_harmonic_dim",
]


def unit_ball_volume(d: int) -> float:
    """omega_d, the volume of the unit ball in R^d."""
    return math.pi ** (d / 2.0) / math.gamma(1.0 + d / 2.0)


def unit_sphere_area(d: int) -> float:
    """Surface measure of the unit sphere S^{d-1} in R^d."""
    return d * unit_ball_volume(d)


@dataclass(frozen=True)
class Ball:
    """Open ball of radius r in R^d."""

    d: int
    r: float

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"dimension must be >= 2, got {self.d}")
        if not (self.r > 0 and math.isfinite(self.r)):
            raise ValueError(f"radius must be positive, got {self.r!r}")

    @property
    def volume(self) -> float:
        return unit_ball_volume(self.d) * self.r ** self.d

    @property
    def surface(self) -> float:
        return unit_sphere_area(self.d) * self.r ** (self.d - 1)

    @property
    def r_inner(self) -> float:
        return 0.0

    @property
    def r_outer(self) -> float:
        return self.r


@dataclass(frozen=True)
class Annulus:
    """Annulus B_{r2} minus the closed ball of radius r1, 0 < r1 < r2."""

    d: int
    r1: float
    r2: float

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"dimension must be >= 2, got {self.d}")
        if not (0 < self.r1 < self.r2) or not math.isfinite(self.r2):
            raise ValueError(
                f"annulus requires 0 < r1 < r2, got r1={self.r1!r}, r2={self.r2!r}"
            )

    @property
    def volume(self) -> float:
        return unit_ball_volume(self.d) * (self.r2 ** self.d - self.r1 ** self.d)

    @property
    def surface(self) -> float:
        a = unit_sphere_area(self.d)
        return a * (self.r2 ** (self.d - 1) + self.r1 ** (self.d - 1))

    @property
    def r_inner(self) -> float:
        return self.r1

    @property
    def r_outer(self) -> float:
        return self.r2


Domain = Ball | Annulus


def measures(domain: Domain) -> dict[str, float]:
    """Exact volume and boundary surface measure of a ball or annulus."""
    return {"volume": domain.volume, "surface": domain.surface}


@dataclass(frozen=True)
class RobinProblem:
    """A domain together with the boundary parameter alpha > 0.

    The eigenproblem is -Δu = λu in Ω with ∂u/∂ν = αu on ∂Ω, so the
    first eigenvalue is negative for every alpha > 0.
    """

    domain: Domain
    alpha: float

    def __post_init__(self):
        if not (self.alpha > 0 and math.isfinite(self.alpha)):
            raise ValueError(f"alpha must be positive, got {self.alpha!r}")

    @property
    def d(self) -> int:
        return self.domain.d


def spherical_harmonic_dim(d: int, ell: int) -> int:
    """Dimension of the degree-ell spherical harmonic space on S^{d-1}."""
    if ell < 0:
        raise ValueError(f"ell must be >= 0, got {ell}")
    if ell == 0:
        return 1
    n0 = math.comb(ell + d - 1, d - 1)
    n1 = math.comb(ell + d - 3, d - 1) if ell + d - 3 >= d - 1 else 0
    return n0 - n1


@dataclass(frozen=True)
class ModeSpec:
    """Angular mode: separation index ell on a domain of dimension d.

    The radial ODE for mode ell carries the effective Bessel order
    ell + (d-2)/2; the eigenvalue repeats with the multiplicity of the
    spherical-harmonic space.
    """

    d: int
    ell: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"dimension must be >= 2, got {self.d}")
        if self.ell < 0:
            raise ValueError(f"ell must be >= 0, got {self.ell}")

    @property
    def effective_order(self) -> float:
        return self.ell + (self.d - 2) / 2.0

    @property
    def angular_multiplicity(self) -> int:
        return spherical_harmonic_dim(self.d, self.ell)

    @property
    def angular_coefficient(self) -> float:
        """ell (ell + d - 2), the coefficient of the 1/rho^2 potential term."""
        return float(self.ell * (self.ell + self.d - 2))
