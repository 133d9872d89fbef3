"""Numerical Weierstrass machinery: the elliptic function of a lattice, its
half-period values, and branch loci.

The elliptic sums are square-cutoff lattice sums (|n|, |m| <= R of the
regularized terms).  A single cutoff carries a systematic bias of order
1/R^2 from the incomplete w^-4 shell; evaluating at R, R/2, R/4 and
combining with weights (32, -12, 1)/21 cancels the 1/R^2 and 1/R^3 terms,
leaving a tail of order 1/R^4.  This keeps the half-period identities
(e1 + e2 + e3 = 0, the cubic differential equation, lattice invariance)
well below 1e-6 at the default radius.
"""

from __future__ import annotations

import dataclasses
import math

from . import _backend
from .errors import PoleProximity

DEFAULT_RADIUS = 60
POLE_TOLERANCE = 1e-8


def _lattice_distance(z: complex, tau: complex) -> float:
    """Distance from z to the lattice Z + tau Z."""
    m = z.imag / tau.imag
    n = z.real - m * tau.real
    best = math.inf
    for dm in (math.floor(m), math.ceil(m)):
        for dn in (math.floor(n), math.ceil(n)):
            best = min(best, abs(z - (dn + dm * tau)))
    return best


def _check_args(zeta: complex, tau: complex, radius: int) -> None:
    if tau.imag <= 0:
        raise ValueError("tau must have positive imaginary part")
    if radius < 10:
        raise ValueError("truncation radius must be >= 10")
    if _lattice_distance(zeta, tau) < POLE_TOLERANCE:
        raise PoleProximity(f"{zeta} is within {POLE_TOLERANCE} of a lattice point")


def _reduce_cell(zeta: complex, tau: complex) -> complex:
    """Translate zeta by a lattice vector into the cell around the origin.

    The function is exactly periodic, so this costs nothing and keeps the
    cutoff box centered on the evaluation point.
    """
    m = round(zeta.imag / tau.imag)
    n = round(zeta.real - m * tau.real)
    return zeta - n - m * tau


def _extrapolate(sum_at, radius: int) -> complex:
    s1 = sum_at(radius)
    s2 = sum_at(radius // 2)
    s3 = sum_at(radius // 4)
    return (32 * s1 - 12 * s2 + s3) / 21


def wp(zeta: complex, tau: complex, radius: int = DEFAULT_RADIUS) -> complex:
    """The Weierstrass function of Z + tau Z at zeta."""
    zeta, tau = complex(zeta), complex(tau)
    _check_args(zeta, tau, radius)
    zred = _reduce_cell(zeta, tau)
    return _extrapolate(lambda r: _backend.wp_sum(zred, tau, r), radius)


def wp_prime(zeta: complex, tau: complex, radius: int = DEFAULT_RADIUS) -> complex:
    """Derivative of the Weierstrass function: -2 sum 1/(zeta - w)^3."""
    zeta, tau = complex(zeta), complex(tau)
    _check_args(zeta, tau, radius)
    zred = _reduce_cell(zeta, tau)
    return _extrapolate(lambda r: _backend.wp_prime_sum(zred, tau, r), radius)


def e_values(tau: complex, radius: int = DEFAULT_RADIUS) -> tuple[complex, complex, complex]:
    """The half-period values (wp(1/2), wp(tau/2), wp((1+tau)/2))."""
    tau = complex(tau)
    return (
        wp(0.5, tau, radius),
        wp(tau / 2, tau, radius),
        wp((1 + tau) / 2, tau, radius),
    )


@dataclasses.dataclass(frozen=True)
class LatticeSpec:
    """The lattice alpha (Z + tau Z), with Im(tau) > 0."""

    alpha: complex
    tau: complex

    def __post_init__(self) -> None:
        if self.alpha == 0:
            raise ValueError("alpha must be nonzero")
        if complex(self.tau).imag <= 0:
            raise ValueError("tau must have positive imaginary part")
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "tau", complex(self.tau))

    @staticmethod
    def from_generators(a: complex, b: complex, condition: bool = True) -> "LatticeSpec":
        """The lattice a Z + b Z, normalized so Im(tau) > 0.

        With condition=True the modulus is moved toward the standard
        fundamental domain by unimodular steps, which never change the
        lattice: tau -> tau - round(Re tau) keeps alpha, tau -> -1/tau
        rescales alpha by tau.
        """
        a, b = complex(a), complex(b)
        if a == 0 or b == 0:
            raise ValueError("generators must be nonzero")
        tau = b / a
        if tau.imag == 0:
            raise ValueError("generators are collinear")
        alpha = a
        if tau.imag < 0:
            tau = a / b
            alpha = b
        if condition:
            for _ in range(64):
                shift = round(tau.real)
                if shift:
                    tau = tau - shift
                if abs(tau) < 1 - 1e-12:
                    alpha = alpha * tau
                    tau = -1 / tau
                else:
                    break
        return LatticeSpec(alpha, tau)


@dataclasses.dataclass(frozen=True)
class BranchLocus:
    """The finite branch points {e1, e2, e3} of the degree-2 covering of the
    sphere by the torus of the lattice."""

    e: tuple[complex, complex, complex]

    def as_set_distance(self, other: "BranchLocus") -> float:
        """Hausdorff distance between the two unordered triples."""
        d1 = max(min(abs(a - b) for b in other.e) for a in self.e)
        d2 = max(min(abs(b - a) for a in self.e) for b in other.e)
        return max(d1, d2)

    def min_separation(self) -> float:
        (x, y, z) = self.e
        return min(abs(x - y), abs(x - z), abs(y - z))

    def as_dict(self) -> dict:
        return {"e": [[v.real, v.imag] for v in self.e]}


def branch_locus(spec: LatticeSpec, radius: int = DEFAULT_RADIUS) -> BranchLocus:
    """alpha^-2 scaling of the half-period values of tau: covariant by
    construction under rescaling the lattice."""
    scale = spec.alpha ** -2
    e1, e2, e3 = e_values(spec.tau, radius)
    return BranchLocus((scale * e1, scale * e2, scale * e3))


def ode_residual(tau: complex, zeta: complex, radius: int = DEFAULT_RADIUS) -> float:
    """Normalized residual of (wp')^2 = 4 (wp - e1)(wp - e2)(wp - e3):
    |lhs - rhs| / (1 + |wp'|^2).  A convergence diagnostic, not an identity
    check against ground truth."""
    tau, zeta = complex(tau), complex(zeta)
    p = wp(zeta, tau, radius)
    pp = wp_prime(zeta, tau, radius)
    e1, e2, e3 = e_values(tau, radius)
    lhs = pp * pp
    rhs = 4 * (p - e1) * (p - e2) * (p - e3)
    return abs(lhs - rhs) / (1 + abs(pp) ** 2)
