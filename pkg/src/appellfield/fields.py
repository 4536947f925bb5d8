"""Closed-form electric potentials phi and field-line potentials psi for
uniformly charged cylinders, tubes, disks, and on-axis point charges.

Conventions: units with 4*pi*eps0 = 1; observation points are (r, z) in
cylindrical coordinates; Heaviside H(0) = 1/2 and sgn(0) = 0, the symmetric
choices matching the continuity of phi across the charged surfaces. The
field-line potential psi is conjugate to phi through psi_r = r phi_z,
psi_z = -r phi_r, is defined only outside charged regions, and for the tube
is multivalued with branch increment 8 pi R Z sigma0.
"""

import math

from . import elliptic, hypergeom
from .errors import DomainError, SingularityError
from .geometry import AuxGeometry, CylinderSpec, FieldSample, TubeSpec, aux

_EDGE_BAND = 1e-9      # exclusion radius around the cylinder edge circle, in units of R
_SURFACE_SNAP = 1e-9   # m + A^2 beyond 1 - this: boundary value via i_hyg_surface
_PI_STAR_BAND = 1e-12  # 1 - n* below this: replace (r-r0)*Pi(n*) by its limit


def heaviside(x):
    """Heaviside step with the symmetric convention H(0) = 1/2."""
    if x > 0.0:
        return 1.0
    if x < 0.0:
        return 0.0
    return 0.5


def _sgn(x):
    return math.copysign(1.0, x) if x != 0.0 else 0.0


# ---------------------------------------------------------------------------
# indefinite integrals, general theta (oracle probes; assemblies use theta=pi)

def i_cyl_trig(r, theta, z, r0):
    """Elementary part of the cylinder triple indefinite integral."""
    a = aux(r, z, r0)
    L = a.L(theta)
    t1 = -(r0 * r0 * math.sin(2.0 * theta) / 4.0) * math.atanh(z / L) if z != 0.0 else 0.0
    t2 = -z * r0 * math.sin(theta) * math.atanh((r + r0 * math.cos(theta)) / L) if z != 0.0 else 0.0
    num = L * r0 * math.sin(theta)
    den = z * (r + r0 * math.cos(theta))
    if den != 0.0:
        at = math.atan(num / den)
    else:
        at = math.copysign(math.pi / 2.0, num) if num != 0.0 else 0.0
    t3 = (r0 * r0 * math.cos(2.0 * theta) / 4.0) * at
    return t1 + t2 + t3


def i_cyl_ell(r, theta, z, r0):
    """Elliptic part of the cylinder triple indefinite integral."""
    a = aux(r, z, r0)
    if z == 0.0:
        return 0.0
    phi = theta / 2.0
    F = elliptic.ellip_f(phi, a.m)
    E = elliptic.ellip_e(phi, a.m)
    t1 = -3.0 * z * (r0 * r0 + z * z) / (4.0 * a.L0) * F
    t2 = 3.0 * z * a.L0 / 4.0 * E
    if r != r0:
        n_star = 4.0 * r * r0 / (r + r0) ** 2
        t3 = z * r * r * (r - r0) / (4.0 * a.L0 * (r + r0)) * elliptic.ellip_pi(n_star, phi, a.m)
    else:
        t3 = 0.0
    nsum = a.bracket(+1) * elliptic.ellip_pi(a.n_plus, phi, a.m) \
        + a.bracket(-1) * elliptic.ellip_pi(a.n_minus, phi, a.m)
    t4 = z * (2.0 * z * z - r0 * r0) / (4.0 * a.L0) * nsum
    return t1 + t2 + t3 + t4


def i_cyl_hyg(r, theta, z, r0, ctl=None):
    """Hypergeometric part (r^2/2) I(m, A; theta) of the cylinder integral."""
    a = aux(r, z, r0)
    if a.A == 0.0:
        return 0.0
    return r * r / 2.0 * hypergeom.i_hyg(hypergeom.IhygArgs(a.m, a.A, theta), ctl)


def j_cyl_trig(r, theta, z, r0):
    """Elementary part of the cylinder field-line indefinite integral."""
    a = aux(r, z, r0)
    L = a.L(theta)
    st, ct = math.sin(theta), math.cos(theta)
    t1 = ((3.0 * r0 ** 3 - 4.0 * r0 * z * z) * st - r0 ** 3 * math.sin(3.0 * theta)) / 8.0 \
        * math.atanh((r + r0 * ct) / L)
    t2 = -(r0 * r0 * z * math.sin(2.0 * theta) / 2.0) * math.atanh(z / L) if z != 0.0 else 0.0
    num = L * r0 * st
    den = z * (r + r0 * ct)
    if den != 0.0:
        at = math.atan(num / den)
    else:
        at = math.copysign(math.pi / 2.0, num) if num != 0.0 else 0.0
    t3 = (r0 * r0 * z * math.cos(2.0 * theta) / 2.0) * at
    t4 = L * r0 * st * (-r + 3.0 * r0 * ct) / 6.0
    return t1 + t2 + t3 + t4


def j_cyl_ell(r, theta, z, r0):
    """Elliptic part of the cylinder field-line indefinite integral."""
    a = aux(r, z, r0)
    phi = theta / 2.0
    F = elliptic.ellip_f(phi, a.m)
    E = elliptic.ellip_e(phi, a.m)
    t1 = a.L0 * (z * z - 2.0 * (r * r + r0 * r0)) / 6.0 * E
    t2 = (2.0 * (r * r - r0 * r0) ** 2 + z * z * (r0 * r0 - 2.0 * r * r - z * z)) \
        / (6.0 * a.L0) * F
    if z == 0.0:
        return t1 + t2
    if r != r0:
        n_star = 4.0 * r * r0 / (r + r0) ** 2
        t3 = z * z * r * r * (r - r0) / (2.0 * a.L0 * (r + r0)) * elliptic.ellip_pi(n_star, phi, a.m)
    else:
        t3 = 0.0
    nsum = a.bracket(+1) * elliptic.ellip_pi(a.n_plus, phi, a.m) \
        + a.bracket(-1) * elliptic.ellip_pi(a.n_minus, phi, a.m)
    t4 = -r0 * r0 * z * z / (2.0 * a.L0) * nsum
    return t1 + t2 + t3 + t4


def i_tube(r, theta, z, r0, ctl=None):
    """Tube double indefinite integral: I(m, A; theta)."""
    a = aux(r, z, r0)
    if a.A == 0.0:
        return 0.0
    return hypergeom.i_hyg(hypergeom.IhygArgs(a.m, a.A, theta), ctl)


def j_tube(r, theta, z, r0):
    """Tube field-line indefinite integral."""
    a = aux(r, z, r0)
    phi = theta / 2.0
    F = elliptic.ellip_f(phi, a.m)
    E = elliptic.ellip_e(phi, a.m)
    out = (r * r - r0 * r0) / a.L0 * F - a.L0 * E
    if z != 0.0 and r != r0:
        n_star = 4.0 * r * r0 / (r + r0) ** 2
        out += z * z / a.L0 * (r - r0) / (r + r0) * elliptic.ellip_pi(n_star, phi, a.m)
    return out


# ---------------------------------------------------------------------------
# theta = pi building blocks (complete integrals, singular limits resolved)

def _pi_star_times_dr(a: AuxGeometry):
    """(r - r0) * Pi(4 r r0/(r+r0)^2 | m), with the one-sided limit
    sgn(r-r0) (pi/2)(r+r0) L0/|z| inside the singular-characteristic band
    (and the symmetric value 0 at r = r0 exactly). The complements
    1 - n* = ((r-r0)/(r+r0))^2 and 1 - m = ((r-r0)^2 + z^2)/L0^2 are formed
    exactly, so no precision is lost as r -> r0."""
    r, r0 = a.r, a.r0
    if r == r0:
        return 0.0
    one_minus_n = ((r - r0) / (r + r0)) ** 2
    if one_minus_n < _PI_STAR_BAND:
        return math.copysign(1.0, r - r0) * (math.pi / 2.0) * (r + r0) * a.L0 / abs(a.z)
    n_star = 4.0 * r * r0 / (r + r0) ** 2
    one_minus_m = ((r - r0) ** 2 + a.z * a.z) / (a.L0 * a.L0)
    pi_star = elliptic.comp_k(a.m) + (n_star / 3.0) * elliptic.carlson_rj(
        0.0, one_minus_m, 1.0, one_minus_n)
    return (r - r0) * pi_star


def _complete_ke(a: AuxGeometry):
    """Complete K(m), E(m) with the parameter complement
    1 - m = ((r-r0)^2 + z^2)/L0^2 formed exactly, so the rim limit m -> 1
    stays evaluable; at the exact rim K is +inf (its prefactors vanish there)
    and E is 1."""
    omm = ((a.r - a.r0) ** 2 + a.z * a.z) / (a.L0 * a.L0)
    if omm == 0.0:
        return math.inf, 1.0
    K = elliptic.carlson_rf(0.0, omm, 1.0)
    E = K - a.m / 3.0 * elliptic.carlson_rd(0.0, omm, 1.0)
    return K, E


def _nsum_regular_pi(a: AuxGeometry, K):
    """K + Pi-star term of the characteristic-sum identity; the remaining
    (pi L0/|z|) H(r0 - r) piece is folded into each caller's z prefactor."""
    return K + _pi_star_times_dr(a) / (a.r + a.r0)


def _i_cyl_ell_pi(a: AuxGeometry):
    z, r, r0, L0 = a.z, a.r, a.r0, a.L0
    if z == 0.0:
        return 0.0
    K, E = _complete_ke(a)
    out = -3.0 * z * (r0 * r0 + z * z) / (4.0 * L0) * K + 3.0 * z * L0 / 4.0 * E
    out += z * r * r / (4.0 * L0 * (r + r0)) * _pi_star_times_dr(a)
    out += z * (2.0 * z * z - r0 * r0) / (4.0 * L0) * _nsum_regular_pi(a, K)
    out += _sgn(z) * math.pi * (2.0 * z * z - r0 * r0) / 4.0 * heaviside(r0 - r)
    return out


def _j_cyl_ell_pi(a: AuxGeometry):
    z, r, r0, L0 = a.z, a.r, a.r0, a.L0
    K, E = _complete_ke(a)
    out = L0 * (z * z - 2.0 * (r * r + r0 * r0)) / 6.0 * E
    kcoef = (2.0 * (r * r - r0 * r0) ** 2
             + z * z * (r0 * r0 - 2.0 * r * r - z * z)) / (6.0 * L0)
    if kcoef != 0.0:
        out += kcoef * K
    if z == 0.0:
        return out
    out += z * z * r * r / (2.0 * L0 * (r + r0)) * _pi_star_times_dr(a)
    out += -r0 * r0 * z * z / (2.0 * L0) * _nsum_regular_pi(a, K)
    out += -math.pi * r0 * r0 * abs(z) / 2.0 * heaviside(r0 - r)
    return out


def _j_tube_pi(a: AuxGeometry):
    z, r, r0, L0 = a.z, a.r, a.r0, a.L0
    K, E = _complete_ke(a)
    out = -L0 * E
    kcoef = (r * r - r0 * r0) / L0
    if kcoef != 0.0:
        out += kcoef * K
    if z != 0.0:
        out += z * z / (L0 * (r + r0)) * _pi_star_times_dr(a)
    return out


def _i_hyg_pi_signed(a: AuxGeometry, ctl):
    """I(m, A; pi) with the exact boundary (and a narrow snap band around it)
    routed through the surface value of Eq-15 type (its fast quadrature
    route; the public i_hyg_surface additionally cross-checks both routes)."""
    if a.A == 0.0:
        return 0.0
    if a.m >= 1.0:
        return 0.0  # rim limit: the boundary value itself tends to 0
    if a.m + a.A * a.A > 1.0 - _SURFACE_SNAP:
        return math.copysign(1.0, a.A) * hypergeom._i_hyg_surface_quad(a.m)
    return hypergeom.i_hyg_pi(a.m, a.A, ctl)


# ---------------------------------------------------------------------------
# potentials

def _check_point(point):
    r, z = float(point[0]), float(point[1])
    if not (math.isfinite(r) and math.isfinite(z)) or r < 0.0:
        raise DomainError(f"observation point must have finite r >= 0, z (got {point})")
    return r, z


def phi_cyl_terms(point, spec: CylinderSpec, ctl=None):
    """The three parts (phi_hyg, phi_ell, phi_corr) of the cylinder potential;
    each part separately satisfies a Laplace/Poisson equation away from the
    surfaces r = R, z = +-Z."""
    r, z = _check_point(point)
    R, Z, rho0 = spec.R, spec.Z, spec.rho0
    if abs(r - R) < _EDGE_BAND * R and abs(abs(z) - Z) < _EDGE_BAND * R:
        raise SingularityError("phi_cyl: edge circle (r, |z|) = (R, Z) is excluded")
    p_hyg = 0.0
    p_ell = 0.0
    for beta in (1.0, -1.0):
        a = aux(R, beta * Z - z, r)
        p_hyg += rho0 * 2.0 * beta * (R * R / 2.0) * _i_hyg_pi_signed(a, ctl)
        p_ell += rho0 * 2.0 * beta * _i_cyl_ell_pi(a)
    p_corr = math.pi * rho0 * (r * r * heaviside(r - R) - 2.0 * (z * z + Z * Z)) \
        * heaviside(Z - abs(z)) - 4.0 * math.pi * rho0 * Z * abs(z) * heaviside(abs(z) - Z)
    return p_hyg, p_ell, p_corr


def phi_cyl(point, spec: CylinderSpec, ctl=None):
    """Electric potential of the uniformly charged cylinder; C^1 across the
    surface, -> Q/sqrt(r^2+z^2) with Q = 2 pi R^2 Z rho0 at infinity."""
    return sum(phi_cyl_terms(point, spec, ctl))


def psi_cyl(point, spec: CylinderSpec, ctl=None):
    """Field-line potential of the cylinder. Points inside the closed body
    {r <= R, |z| <= Z} carry the inside-charge marker (psi = None);
    psi -> Q z/sqrt(r^2+z^2) at infinity and is odd in z."""
    r, z = _check_point(point)
    R, Z, rho0 = spec.R, spec.Z, spec.rho0
    phi = phi_cyl(point, spec, ctl)
    if r <= R and abs(z) <= Z:
        return FieldSample(phi, None, 0)
    total = 0.0
    for beta in (1.0, -1.0):
        total += rho0 * 2.0 * beta * _j_cyl_ell_pi(aux(R, beta * Z - z, r))
    total += -2.0 * math.pi * rho0 * r * r * z * heaviside(Z - abs(z))
    total += 2.0 * math.pi * rho0 * Z * _sgn(z) * (-r * r + R * R * heaviside(R - r)) \
        * heaviside(abs(z) - Z)
    return FieldSample(phi, total, 0)


def phi_tube(point, spec: TubeSpec, ctl=None):
    """Electric potential of the charged tube; continuous everywhere, with a
    derivative corner across r = R for |z| < Z; -> Q/sqrt(r^2+z^2) with
    Q = 4 pi R Z sigma0 at infinity."""
    r, z = _check_point(point)
    R, Z, sigma0 = spec.R, spec.Z, spec.sigma0
    total = 0.0
    for beta in (1.0, -1.0):
        total += sigma0 * R * 2.0 * beta * _i_hyg_pi_signed(aux(R, beta * Z - z, r), ctl)
    return total


def tube_branch_jump(spec: TubeSpec):
    """Branch increment of the multivalued tube psi: 8 pi R Z sigma0 = 2Q."""
    return 8.0 * math.pi * spec.R * spec.Z * spec.sigma0


def psi_tube(point, spec: TubeSpec, branch=0, ctl=None):
    """Field-line potential of the tube on the requested branch
    (psi + branch * 8 pi R Z sigma0). The open charged sheet
    {r = R, |z| < Z} is excluded; the branch-0 cut lies on the disk
    {z = 0, r < R}."""
    r, z = _check_point(point)
    R, Z, sigma0 = spec.R, spec.Z, spec.sigma0
    if abs(r - R) < 1e-12 * R and abs(z) < Z:
        raise SingularityError("psi_tube: point on the charged tube surface")
    total = 0.0
    for beta in (1.0, -1.0):
        total += sigma0 * R * 2.0 * beta * _j_tube_pi(aux(R, beta * Z - z, r))
    total += 4.0 * math.pi * sigma0 * R * Z * _sgn(z) * heaviside(R - r)
    if branch:
        total += branch * tube_branch_jump(spec)
    return FieldSample(phi_tube(point, spec, ctl), total, int(branch))


def phi_disk(point, R, sigma, form="lass_blitzer"):
    """Electric potential of a uniformly charged disk of radius R in the
    z = 0 plane, in either of two equivalent closed forms.

    'lass_blitzer' is the compact shifted-coordinate expression;
    'takahashi' carries the characteristic pair n_pm = 2r/(r +- sqrt(r^2+z^2))
    and needs either z = 0 exactly (limit path) or |z| outside the singular
    band of n_plus. The disk edge (r, z) = (R, 0) is excluded.
    """
    r, z = _check_point(point)
    if not (math.isfinite(R) and R > 0.0):
        raise DomainError("phi_disk requires finite R > 0")
    if math.hypot(r - R, z) < _EDGE_BAND * R:
        raise SingularityError("phi_disk: disk edge (r, z) = (R, 0) is excluded")
    L0 = math.sqrt((R + r) ** 2 + z * z)
    m = 4.0 * r * R / (L0 * L0)
    K = elliptic.comp_k(m)
    E = elliptic.comp_e(m)
    if form == "lass_blitzer":
        a = aux(R, z, r)  # slots (source radius R, z; observation r)
        # -(r-R)/(r+R) z^2 Pi(4 r R/(r+R)^2 | m) == +(R-r)(...) via the slot order
        pi_term = z * z / (R + r) * _pi_star_times_dr(a) if z != 0.0 else 0.0
        return sigma * (2.0 / L0 * (L0 * L0 * E + (R * R - r * r) * K + pi_term)
                        - 2.0 * math.pi * abs(z) * heaviside(R - r))
    if form != "takahashi":
        raise DomainError(f"phi_disk: unknown form {form!r}")
    if z == 0.0:
        nsum_term = 0.0
    else:
        a = aux(R, z, r)
        # Pi(n+ | m) with the complements 1 - n+ = z^2/(r + rho)^2 and
        # 1 - m = ((R-r)^2 + z^2)/L0^2 formed exactly (n+ -> 1 as z -> 0)
        rho = math.hypot(r, z)
        one_minus_np = (z / (r + rho)) ** 2
        one_minus_m = ((R - r) ** 2 + z * z) / (L0 * L0)
        pi_plus = K + (a.n_plus / 3.0) * elliptic.carlson_rj(
            0.0, one_minus_m, 1.0, one_minus_np)
        nsum = a.bracket(+1) * pi_plus + a.bracket(-1) * elliptic.comp_pi(a.n_minus, m)
        nsum_term = z * z * nsum
    return sigma * (2.0 / L0 * (L0 * L0 * E + (R * R - r * r - z * z) * K + nsum_term)
                    - 2.0 * math.pi * abs(z))


def psi_point(point, q, z_offset=0.0):
    """Field-line potential of a point charge q at (0, z_offset):
    q (z - z_offset)/sqrt(r^2 + (z - z_offset)^2). Superposes linearly."""
    r, z = _check_point(point)
    d = math.hypot(r, z - z_offset)
    if d == 0.0:
        raise SingularityError("psi_point: observation point coincides with the charge")
    return q * (z - z_offset) / d


def pi_identity_residual(r, r0, z):
    """Absolute residual of the complete-integral characteristic identity

        sum_a [1 - (n_a/2)(1 + r/r0)] Pi(n_a | m)
            = K(m) + ((r-r0)/(r+r0)) Pi(4 r r0/(r+r0)^2 | m)
              + (pi L0/|z|) H(r0 - r),

    with both sides evaluated independently. Requires z != 0 and r != r0."""
    if z == 0.0:
        raise DomainError("pi_identity_residual requires z != 0")
    if r == r0:
        raise DomainError("pi_identity_residual requires r != r0")
    a = aux(r, z, r0)
    lhs = a.bracket(+1) * elliptic.comp_pi(a.n_plus, a.m) \
        + a.bracket(-1) * elliptic.comp_pi(a.n_minus, a.m)
    rhs = elliptic.comp_k(a.m) \
        + (r - r0) / (r + r0) * elliptic.comp_pi(4.0 * r * r0 / (r + r0) ** 2, a.m) \
        + math.pi * a.L0 / abs(z) * (1.0 if r0 > r else 0.0)
    return abs(lhs - rhs)
