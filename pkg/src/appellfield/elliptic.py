"""Legendre elliptic integrals in the *parameter* convention, built on
Carlson symmetric forms.

All public functions take the parameter ``m`` (= k**2), never the modulus k.
Incomplete integrals accept any real amplitude; amplitudes beyond |phi| = pi/2
are reduced with the additive quasi-periodicity F(phi + k*pi | m) =
2k*K(m) + F(phi | m) and its analogues, using exact integer multiples of the
complete integrals.
"""

import math

from .errors import ConvergenceError, DomainError, SingularityError

# Duplication stops once the scaled argument spread is below this; the
# seventh-order tail series then contributes < 1 ulp in float64.
_RF_TOL = 2.5e-13
_MAX_DUPLICATIONS = 200

# Characteristics inside [1 - this, 1] are rejected rather than regularized;
# callers in `fields` eliminate those terms analytically.
_PI_SINGULAR_BAND = 1e-12


def carlson_rf(x, y, z):
    """Symmetric integral R_F(x,y,z) = 1/2 * int_0^inf dt / sqrt((t+x)(t+y)(t+z)).

    Requires x, y, z >= 0 with at most one of them zero.
    """
    if x < 0.0 or y < 0.0 or z < 0.0:
        raise DomainError("carlson_rf requires nonnegative arguments")
    if (x == 0.0) + (y == 0.0) + (z == 0.0) >= 2:
        raise DomainError("carlson_rf: at most one argument may be zero")
    xm, ym, zm = float(x), float(y), float(z)
    A0 = Am = (xm + ym + zm) / 3.0
    Q = (3.0 * _RF_TOL) ** (-1.0 / 6.0) * max(abs(A0 - xm), abs(A0 - ym), abs(A0 - zm))
    pow4 = 1.0
    for _ in range(_MAX_DUPLICATIONS):
        if pow4 * Q < abs(Am):
            break
        sx, sy, sz = math.sqrt(xm), math.sqrt(ym), math.sqrt(zm)
        lam = sx * sy + sx * sz + sy * sz
        xm = (xm + lam) * 0.25
        ym = (ym + lam) * 0.25
        zm = (zm + lam) * 0.25
        Am = (Am + lam) * 0.25
        pow4 *= 0.25
    else:
        raise ConvergenceError("carlson_rf: duplication failed to converge")
    t = pow4 / Am
    X = (A0 - x) * t
    Y = (A0 - y) * t
    Z = -X - Y
    E2 = X * Y - Z * Z
    E3 = X * Y * Z
    return (9240.0 - 924.0 * E2 + 385.0 * E2 * E2 + 660.0 * E3 - 630.0 * E2 * E3) / (
        9240.0 * math.sqrt(Am)
    )


def carlson_rc(x, y):
    """Degenerate integral R_C(x,y) = R_F(x,y,y).

    x >= 0 and y != 0; the Cauchy principal value is returned for y < 0.
    """
    if x < 0.0:
        raise DomainError("carlson_rc requires x >= 0")
    if y == 0.0:
        raise DomainError("carlson_rc requires y != 0")
    if y < 0.0:
        # principal value (DLMF 19.2.20)
        return math.sqrt(x / (x - y)) * carlson_rc(x - y, -y)
    xm, ym = float(x), float(y)
    A0 = Am = (xm + 2.0 * ym) / 3.0
    Q = (3.0 * _RF_TOL) ** (-1.0 / 6.0) * abs(A0 - xm)
    pow4 = 1.0
    for _ in range(_MAX_DUPLICATIONS):
        if pow4 * Q < abs(Am):
            break
        lam = 2.0 * math.sqrt(xm) * math.sqrt(ym) + ym
        xm = (xm + lam) * 0.25
        ym = (ym + lam) * 0.25
        Am = (Am + lam) * 0.25
        pow4 *= 0.25
    else:
        raise ConvergenceError("carlson_rc: duplication failed to converge")
    s = (y - A0) * pow4 / Am
    # tail series, DLMF 19.36.2 truncated at s^7
    poly = 1.0 + s * s * (0.3 + s * (1.0 / 7.0 + s * (0.375 + s * (9.0 / 22.0 + s * (159.0 / 208.0 + s * 9.0 / 8.0)))))
    return poly / math.sqrt(Am)


def carlson_rd(x, y, z):
    """Degenerate integral R_D(x,y,z) = R_J(x,y,z,z); z > 0, at most one of x,y zero."""
    if x < 0.0 or y < 0.0 or z <= 0.0:
        raise DomainError("carlson_rd requires x, y >= 0 and z > 0")
    if x == 0.0 and y == 0.0:
        raise DomainError("carlson_rd: x and y may not both be zero")
    xm, ym, zm = float(x), float(y), float(z)
    A0 = Am = (xm + ym + 3.0 * zm) / 5.0
    Q = (0.25 * _RF_TOL) ** (-1.0 / 6.0) * max(abs(A0 - xm), abs(A0 - ym), abs(A0 - zm))
    pow4 = 1.0
    acc = 0.0
    for _ in range(_MAX_DUPLICATIONS):
        if pow4 * Q < abs(Am):
            break
        sx, sy, sz = math.sqrt(xm), math.sqrt(ym), math.sqrt(zm)
        lam = sx * sy + sx * sz + sy * sz
        acc += pow4 / (sz * (zm + lam))
        xm = (xm + lam) * 0.25
        ym = (ym + lam) * 0.25
        zm = (zm + lam) * 0.25
        Am = (Am + lam) * 0.25
        pow4 *= 0.25
    else:
        raise ConvergenceError("carlson_rd: duplication failed to converge")
    t = pow4 / Am
    X = (A0 - x) * t
    Y = (A0 - y) * t
    Z = -(X + Y) / 3.0
    XY = X * Y
    ZZ = Z * Z
    E2 = XY - 6.0 * ZZ
    E3 = (3.0 * XY - 8.0 * ZZ) * Z
    E4 = 3.0 * (XY - ZZ) * ZZ
    E5 = XY * ZZ * Z
    series = (
        1.0
        - 3.0 * E2 / 14.0
        + E3 / 6.0
        + 9.0 * E2 * E2 / 88.0
        - 3.0 * E4 / 22.0
        - 9.0 * E2 * E3 / 52.0
        + 3.0 * E5 / 26.0
    )
    return pow4 * series / (Am * math.sqrt(Am)) + 3.0 * acc


def carlson_rj(x, y, z, p):
    """Symmetric integral R_J(x,y,z,p) = 3/2 * int_0^inf dt / ((t+p) sqrt((t+x)(t+y)(t+z))).

    x, y, z >= 0 with at most one zero; p != 0. For p < 0 the Cauchy
    principal value is computed through the standard reduction to R_C.
    """
    if x < 0.0 or y < 0.0 or z < 0.0:
        raise DomainError("carlson_rj requires nonnegative x, y, z")
    if (x == 0.0) + (y == 0.0) + (z == 0.0) >= 2:
        raise DomainError("carlson_rj: at most one of x, y, z may be zero")
    if p == 0.0:
        raise DomainError("carlson_rj requires p != 0")
    if p < 0.0:
        # principal value via DLMF 19.20.14 / Carlson (1995) eq. 4.6
        x, y, z = sorted((float(x), float(y), float(z)))
        q = -float(p)
        gamma = y + (z - y) * (y - x) / (y + q)
        num = (
            (gamma - y) * carlson_rj(x, y, z, gamma)
            - 3.0 * carlson_rf(x, y, z)
            + 3.0 * carlson_rc(x * z / y, p * gamma / y)
        )
        return num / (y + q)
    xm, ym, zm, pm = float(x), float(y), float(z), float(p)
    A0 = Am = (xm + ym + zm + 2.0 * pm) / 5.0
    delta = (pm - xm) * (pm - ym) * (pm - zm)
    Q = (0.25 * _RF_TOL) ** (-1.0 / 6.0) * max(
        abs(A0 - xm), abs(A0 - ym), abs(A0 - zm), abs(A0 - pm)
    )
    pow4 = 1.0
    acc = 0.0
    for _ in range(_MAX_DUPLICATIONS):
        if pow4 * Q < abs(Am):
            break
        sx, sy, sz, sp = math.sqrt(xm), math.sqrt(ym), math.sqrt(zm), math.sqrt(pm)
        lam = sx * sy + sx * sz + sy * sz
        dm = (sp + sx) * (sp + sy) * (sp + sz)
        em = delta * pow4 ** 3 / (dm * dm)
        acc += carlson_rc(1.0, 1.0 + em) * pow4 / dm
        xm = (xm + lam) * 0.25
        ym = (ym + lam) * 0.25
        zm = (zm + lam) * 0.25
        pm = (pm + lam) * 0.25
        Am = (Am + lam) * 0.25
        pow4 *= 0.25
    else:
        raise ConvergenceError("carlson_rj: duplication failed to converge")
    t = pow4 / Am
    X = (A0 - x) * t
    Y = (A0 - y) * t
    Z = (A0 - z) * t
    P = (-X - Y - Z) / 2.0
    PP = P * P
    E2 = X * Y + X * Z + Y * Z - 3.0 * PP
    E3 = X * Y * Z + 2.0 * E2 * P + 4.0 * PP * P
    E4 = (2.0 * X * Y * Z + E2 * P + 3.0 * PP * P) * P
    E5 = X * Y * Z * PP
    series = (
        24024.0
        - 5148.0 * E2
        + 2457.0 * E2 * E2
        + 4004.0 * E3
        - 4158.0 * E2 * E3
        - 3276.0 * E4
        + 2772.0 * E5
    ) / 24024.0
    return pow4 * series / (Am * math.sqrt(Am)) + 6.0 * acc


def _reduce_amplitude(phi):
    """Split phi = k*pi + phi_r with |phi_r| <= pi/2, k integer."""
    k = math.floor(phi / math.pi + 0.5)
    return k, phi - k * math.pi


def _check_param(phi, m):
    s = math.sin(phi)
    if m * s * s > 1.0:
        raise DomainError(f"parameter m = {m} gives m*sin^2(phi) > 1")


def ellip_f(phi, m):
    """Incomplete elliptic integral of the first kind F(phi | m); odd in phi."""
    if phi == 0.0:
        return 0.0
    if phi < 0.0:
        return -ellip_f(-phi, m)
    if m == 0.0:
        return float(phi)
    k, phi_r = _reduce_amplitude(phi)
    _check_param(phi_r, m)
    s, c = math.sin(phi_r), math.cos(phi_r)
    shift = 2.0 * k * comp_k(m) if k else 0.0
    if phi_r == 0.0:
        return shift
    sgn = 1.0 if phi_r > 0 else -1.0
    sa = abs(s)
    return shift + sgn * sa * carlson_rf(c * c, 1.0 - m * s * s, 1.0)


def ellip_e(phi, m):
    """Incomplete elliptic integral of the second kind E(phi | m); odd in phi."""
    if phi == 0.0:
        return 0.0
    if phi < 0.0:
        return -ellip_e(-phi, m)
    if m == 0.0:
        return float(phi)
    k, phi_r = _reduce_amplitude(phi)
    _check_param(phi_r, m)
    shift = 2.0 * k * comp_e(m) if k else 0.0
    if phi_r == 0.0:
        return shift
    s, c = math.sin(phi_r), math.cos(phi_r)
    sgn = 1.0 if phi_r > 0 else -1.0
    sa = abs(s)
    y = 1.0 - m * s * s
    val = sa * carlson_rf(c * c, y, 1.0) - (m / 3.0) * sa ** 3 * carlson_rd(c * c, y, 1.0)
    return shift + sgn * val


def ellip_pi(n, phi, m):
    """Incomplete elliptic integral of the third kind Pi(n; phi | m); odd in phi.

    Rejects singular characteristics n*sin^2(phi) within 1e-12 of (or past) 1.
    """
    if phi == 0.0:
        return 0.0
    if phi < 0.0:
        return -ellip_pi(n, -phi, m)
    if n == 0.0:
        return ellip_f(phi, m)
    k, phi_r = _reduce_amplitude(phi)
    _check_param(phi_r, m)
    if k:
        s_max = 1.0
    else:
        s_max = math.sin(phi_r) ** 2
    if n * s_max >= 1.0 - _PI_SINGULAR_BAND:
        raise SingularityError(f"ellip_pi: characteristic n = {n} is singular on the path")
    shift = 2.0 * k * comp_pi(n, m) if k else 0.0
    if phi_r == 0.0:
        return shift
    s, c = math.sin(phi_r), math.cos(phi_r)
    sgn = 1.0 if phi_r > 0 else -1.0
    sa = abs(s)
    s2 = s * s
    val = sa * carlson_rf(c * c, 1.0 - m * s2, 1.0) + (n / 3.0) * sa ** 3 * carlson_rj(
        c * c, 1.0 - m * s2, 1.0, 1.0 - n * s2
    )
    return shift + sgn * val


def comp_k(m):
    """Complete elliptic integral of the first kind K(m); diverges as m -> 1."""
    if m >= 1.0:
        raise DomainError(f"comp_k diverges for m >= 1 (got m = {m})")
    return carlson_rf(0.0, 1.0 - m, 1.0)


def comp_e(m):
    """Complete elliptic integral of the second kind E(m), for m <= 1."""
    if m > 1.0:
        raise DomainError(f"comp_e requires m <= 1 (got m = {m})")
    if m == 1.0:
        return 1.0
    y = 1.0 - m
    return carlson_rf(0.0, y, 1.0) - (m / 3.0) * carlson_rd(0.0, y, 1.0)


def comp_pi(n, m):
    """Complete elliptic integral of the third kind Pi(n | m); n < 1, m < 1."""
    if m >= 1.0:
        raise DomainError(f"comp_pi diverges for m >= 1 (got m = {m})")
    if n >= 1.0 - _PI_SINGULAR_BAND:
        raise SingularityError(f"comp_pi diverges as n -> 1 (got n = {n})")
    if n == 0.0:
        return comp_k(m)
    return comp_k(m) + (n / 3.0) * carlson_rj(0.0, 1.0 - m, 1.0, 1.0 - n)
