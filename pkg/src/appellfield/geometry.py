"""Body specifications, field samples, and the auxiliary geometric quantities
shared by the closed-form potentials and the brute-force oracles.

Units: 4*pi*eps0 = 1 throughout, so [phi] = charge/length and [psi] = charge.
"""

import math
from dataclasses import dataclass

from .errors import DomainError

INSIDE_CHARGE_MARKER = "undefined(inside-charge)"


@dataclass(frozen=True)
class CylinderSpec:
    """Uniformly charged solid cylinder: radius R, half-height Z, volume
    density rho0."""

    R: float
    Z: float
    rho0: float

    def __post_init__(self):
        _check_body(self.R, self.Z)

    @property
    def total_charge(self):
        return 2.0 * math.pi * self.R ** 2 * self.Z * self.rho0


@dataclass(frozen=True)
class TubeSpec:
    """Uniformly charged tube (cylindrical shell of negligible thickness):
    radius R, half-height Z, surface density sigma0."""

    R: float
    Z: float
    sigma0: float

    def __post_init__(self):
        _check_body(self.R, self.Z)

    @property
    def total_charge(self):
        return 4.0 * math.pi * self.R * self.Z * self.sigma0


@dataclass(frozen=True)
class DiskSpec:
    """Uniformly charged disk in the z = 0 plane: radius R, surface density
    sigma."""

    R: float
    sigma: float

    def __post_init__(self):
        if not (math.isfinite(self.R) and self.R > 0.0):
            raise DomainError("DiskSpec.R must be finite and positive")

    @property
    def total_charge(self):
        return math.pi * self.R ** 2 * self.sigma


@dataclass(frozen=True)
class PointCharges:
    """On-axis point charges: tuple of (charge, z offset) pairs."""

    charges: tuple

    def __post_init__(self):
        object.__setattr__(self, "charges", tuple((float(q), float(z)) for q, z in self.charges))


def _check_body(R, Z):
    if not (math.isfinite(R) and R > 0.0 and math.isfinite(Z) and Z > 0.0):
        raise DomainError("body radius and half-height must be finite and positive")


@dataclass(frozen=True)
class FieldSample:
    """One field evaluation: phi, psi (None marks a point inside the closed
    charged region where the field-line potential has no formula), and the
    requested branch index (meaningful for the tube psi only)."""

    phi: float
    psi: float | None
    branch: int = 0

    @property
    def psi_defined(self):
        return self.psi is not None


@dataclass(frozen=True)
class AuxGeometry:
    """Derived quantities for a (source radius r, axial offset z; observation
    radius r0) triple, in the slot convention of the indefinite integrals:

        L0 = sqrt((r+r0)^2 + z^2),  m = 4 r r0 / L0^2,  A = z / L0,
        n_pm = 2 r0 / (r0 +- sqrt(r0^2 + z^2)),
        s_pm = sgn(sqrt(r0^2 + z^2) -+ r).

    n_minus is computed as -2 r0 (r0 + rho)/z^2 (exact rearrangement), which
    survives the z -> 0 cancellation; it is -inf at z = 0 exactly.
    """

    r: float
    z: float
    r0: float
    L0: float
    m: float
    A: float
    n_plus: float
    n_minus: float
    s_plus: float
    s_minus: float

    def L(self, theta):
        """Distance kernel sqrt(r^2 + r0^2 + 2 r r0 cos(theta) + z^2)."""
        return math.sqrt(self.r ** 2 + self.r0 ** 2
                         + 2.0 * self.r * self.r0 * math.cos(theta) + self.z ** 2)

    def bracket(self, sign):
        """1 - (n/2)(1 + r/r0) for n = n_plus (sign=+1) or n_minus (sign=-1),
        in the cancellation-free form (+-rho - r)/(r0 +- rho)."""
        rho = math.hypot(self.r0, self.z)
        if sign > 0:
            return (rho - self.r) / (self.r0 + rho)
        if self.z == 0.0:
            raise DomainError("bracket(-1) is undefined at z = 0")
        # (-(rho) - r)/(r0 - rho) = (rho + r)(rho + r0)/z^2
        return (rho + self.r) * (rho + self.r0) / (self.z * self.z)

    def bracket_alt(self, sign):
        """The same bracket via (L0/(2 r0)) s_pm sqrt(n_pm (n_pm - m))."""
        n = self.n_plus if sign > 0 else self.n_minus
        s = self.s_plus if sign > 0 else self.s_minus
        return self.L0 / (2.0 * self.r0) * s * math.sqrt(n * (n - self.m))


def aux(r, z, r0):
    """Auxiliary geometry for slots (r, z; r0); see AuxGeometry."""
    if r < 0.0 or r0 < 0.0:
        raise DomainError("aux requires nonnegative radii")
    if r == 0.0 and r0 == 0.0 and z == 0.0:
        raise DomainError("aux: degenerate geometry r = r0 = z = 0")
    L0 = math.sqrt((r + r0) ** 2 + z * z)
    m = 4.0 * r * r0 / (L0 * L0)
    A = z / L0
    rho = math.hypot(r0, z)
    n_plus = 2.0 * r0 / (r0 + rho) if rho + r0 > 0.0 else 0.0
    if z == 0.0:
        n_minus = -math.inf
    else:
        n_minus = -2.0 * r0 * (r0 + rho) / (z * z)
    s_plus = math.copysign(1.0, rho - r) if rho != r else 0.0
    s_minus = 1.0
    return AuxGeometry(r, z, r0, L0, m, A, n_plus, n_minus, s_plus, s_minus)
