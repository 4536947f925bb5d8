"""Pochhammer symbol, Gauss 2F1, generalized 4F3, Appell F1/F2 double series,
and the hypergeometric integral

    I(m, A; theta) = int_0^theta atanh( A / sqrt(1 - m sin^2(t/2)) ) dt

in all its closed forms, with parameter derivatives.

Series conventions: Appell F2 converges for |x|+|y| < 1; negative arguments
are first mapped into the convergence region by the Euler-type transformation
F2(a; b, b'; g, g'; x, y) = (1-x)^(-a) F2(a; g-b, b'; g, g'; x/(x-1), y/(1-x))
(and its y-counterpart). Double series are summed along anti-diagonals
j + l = N, which keeps terms of comparable magnitude near the boundary.
"""

import math
import os
from dataclasses import dataclass, field

import numpy as np

from . import elliptic, oracle
from .errors import ConvergenceError, DomainError

# Below this |sin(theta/2)| the Eq-series route for i_hyg loses accuracy to
# cancellation, and direct quadrature of the defining integral takes over.
SMALL_S_THRESHOLD = 0.05


def _default_max_terms():
    env = os.environ.get("APPELLFIELD_MAX_TERMS")
    if env is not None:
        return int(env)
    return 6000


@dataclass(frozen=True)
class SeriesControl:
    """Relative tolerance and per-index term cap for all infinite series."""

    rel_tol: float = 1e-12
    max_terms: int = field(default_factory=_default_max_terms)

    def __post_init__(self):
        if not 0.0 < self.rel_tol <= 1e-4:
            raise DomainError("SeriesControl.rel_tol must be in (0, 1e-4]")
        if self.max_terms < 64:
            raise DomainError("SeriesControl.max_terms must be >= 64")


DEFAULT_CONTROL = SeriesControl()


@dataclass(frozen=True)
class IhygArgs:
    """Arguments (m, A, theta) of the hypergeometric integral."""

    m: float
    A: float
    theta: float

    def __post_init__(self):
        if not (math.isfinite(self.m) and math.isfinite(self.A) and math.isfinite(self.theta)):
            raise DomainError("IhygArgs requires finite values")
        if not 0.0 <= self.m <= 1.0:
            raise DomainError(f"IhygArgs.m must lie in [0, 1] (got {self.m})")
        if abs(self.theta) > math.pi + 1e-12:
            raise DomainError("IhygArgs.theta is restricted to [-pi, pi]")
        s2 = math.sin(self.theta / 2.0) ** 2
        if self.m * s2 >= 1.0:
            raise DomainError("IhygArgs: m*sin^2(theta/2) must stay below 1")
        # worst case of the path condition A^2 < 1 - m*sin^2(t/2), at t = pi
        if self.A * self.A > 1.0 - self.m:
            raise DomainError("IhygArgs: A^2 must not exceed 1 - m")


def pochhammer(x, k):
    """Rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1."""
    if k < 0 or k != int(k):
        raise DomainError("pochhammer requires a nonnegative integer k")
    out = 1.0
    for i in range(int(k)):
        out *= x + i
    return out


def _digamma(x):
    # recurrence up to x >= 8, then the standard asymptotic expansion
    acc = 0.0
    while x < 8.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    return acc + math.log(x) - 0.5 / x - inv2 * (
        1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 / 240.0)))


def _gauss_2f1_series(a, b, c, x, ctl):
    term = 1.0
    total = 1.0
    small = 0
    # the geometric tail is term/(1-|x|); 0.02 covers |x| up to 0.95
    cut = 0.02 * ctl.rel_tol
    for k in range(ctl.max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x
        total += term
        if abs(term) <= cut * max(abs(total), 1e-300):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
    raise ConvergenceError(f"gauss_2f1 series did not converge at x = {x}")


def _gauss_2f1_log_near_one(a, b, c, x, ctl):
    # connection formula for c = a + b (logarithmic case), valid for 0 < 1-x < 1
    u = 1.0 - x
    front = math.gamma(c) / (math.gamma(a) * math.gamma(b))
    lg = -math.log(u)
    coef = 1.0
    total = 0.0
    small = 0
    for n in range(ctl.max_terms):
        bracket = 2.0 * _digamma(n + 1.0) - _digamma(a + n) - _digamma(b + n) + lg
        term = coef * bracket
        total += term
        if abs(term) <= 0.02 * ctl.rel_tol * max(abs(total), 1e-300):
            small += 1
            if small >= 2:
                return front * total
        else:
            small = 0
        coef *= (a + n) * (b + n) / ((n + 1.0) ** 2) * u
    raise ConvergenceError("gauss_2f1: logarithmic connection series did not converge")


def gauss_2f1(a, b, c, x, ctl=None):
    """Gauss hypergeometric series 2F1(a, b; c; x).

    Direct series for 0 <= x < 1, Pfaff transformation for x < 0, and the
    logarithmic z -> 1-z connection formula when c = a + b and x is close
    to 1. Raises ConvergenceError for |x| >= 1.
    """
    ctl = ctl or DEFAULT_CONTROL
    if c <= 0.0 and c == int(c):
        raise DomainError("gauss_2f1: c must not be a nonpositive integer")
    if x == 0.0:
        return 1.0
    if x >= 1.0:
        raise ConvergenceError(f"gauss_2f1 series diverges at x >= 1 (got {x})")
    if x < 0.0:
        return (1.0 - x) ** (-a) * gauss_2f1(a, c - b, c, x / (x - 1.0), ctl)
    if x > 0.95 and abs(c - a - b) < 1e-12 and a > 0 and b > 0:
        return _gauss_2f1_log_near_one(a, b, c, x, ctl)
    return _gauss_2f1_series(a, b, c, x, ctl)


def pfq_4f3(a, b, x, ctl=None):
    """Generalized hypergeometric series 4F3(a1..a4; b1..b3; x).

    ``a`` and ``b`` are sequences of length 4 and 3. Converges for |x| < 1,
    and at x = -1 when sum(b) > sum(a) - 1.
    """
    ctl = ctl or DEFAULT_CONTROL
    a = tuple(float(v) for v in a)
    b = tuple(float(v) for v in b)
    if len(a) != 4 or len(b) != 3:
        raise DomainError("pfq_4f3 expects 4 numerator and 3 denominator parameters")
    for bv in b:
        if bv <= 0.0 and bv == int(bv):
            raise DomainError("pfq_4f3: denominator parameters must not be nonpositive integers")
    if x == 0.0:
        return 1.0
    if abs(x) > 1.0 or x == 1.0:
        raise ConvergenceError(f"pfq_4f3 series diverges at x = {x}")
    if x == -1.0 and sum(b) - sum(a) <= 0.0:
        raise ConvergenceError("pfq_4f3 series diverges at x = -1 for these parameters")
    term = 1.0
    total = 1.0
    small = 0
    for k in range(ctl.max_terms):
        num = (a[0] + k) * (a[1] + k) * (a[2] + k) * (a[3] + k)
        den = (b[0] + k) * (b[1] + k) * (b[2] + k) * (k + 1.0)
        term *= num / den * x
        total += term
        if abs(term) <= 0.02 * ctl.rel_tol * max(abs(total), 1e-300):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise ConvergenceError("pfq_4f3 series did not converge within the term cap")


def _antidiagonal_sum(l_ratio, j_edge_ratio, ctl, name):
    """Sum t(j, l) over j, l >= 0 along anti-diagonals N = j + l.

    ``l_ratio(N, j)`` maps row-N entries (j, l = N - j) to row N+1 entries
    (j, l + 1); ``j_edge_ratio(j)`` is t(j+1, 0)/t(j, 0). t(0, 0) = 1.
    Stops once three consecutive anti-diagonal sums fall below rel_tol times
    the accumulated total.
    """
    row = np.array([1.0])
    total = 1.0
    small = 0
    for N in range(ctl.max_terms):
        j = np.arange(N + 1, dtype=float)
        nxt = np.empty(N + 2)
        nxt[: N + 1] = row * l_ratio(N, j)
        nxt[N + 1] = row[N] * j_edge_ratio(N)
        row = nxt
        d = float(row.sum())
        total += d
        if abs(d) <= 0.02 * ctl.rel_tol * max(abs(total), 1e-300):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise ConvergenceError(f"{name}: anti-diagonal sum did not converge")


def _appell_f2_direct(alpha, beta, beta2, gamma, gamma2, x, y, ctl):
    # valid for |x| + |y| < 1; terms t = (a)_{j+l}(b)_j(b')_l x^j y^l /((g)_j (g')_l j! l!)
    def l_ratio(N, j):
        lidx = N - j
        return (alpha + N) * (beta2 + lidx) * y / ((gamma2 + lidx) * (lidx + 1.0))

    def j_edge(j):
        return (alpha + j) * (beta + j) * x / ((gamma + j) * (j + 1.0))

    return _antidiagonal_sum(l_ratio, j_edge, ctl, "appell_f2")


def appell_f2(alpha, beta, beta2, gamma, gamma2, x, y, ctl=None):
    """Appell double hypergeometric series F2(alpha; beta, beta2; gamma, gamma2; x, y).

    Symmetric under (beta, gamma, x) <-> (beta2, gamma2, y). Negative
    arguments are mapped into the convergence region |x|+|y| < 1 by the
    Euler-type transformations; near the boundary, parameter families with
    gamma2 = 3/2 and beta2 in {1/2, 1} are accelerated by an inner-2F1
    recurrence. Raises ConvergenceError when no implemented transformation
    reaches a convergent regime.
    """
    ctl = ctl or DEFAULT_CONTROL
    for g in (gamma, gamma2):
        if g <= 0.0 and g == int(g):
            raise DomainError("appell_f2: gamma parameters must not be nonpositive integers")
    if x == 0.0 and y == 0.0:
        return 1.0
    if y < 0.0:
        if _inner_family(alpha, beta2, gamma2) and 0.0 <= x < 1.0 - 1e-12:
            return _f2_inner_sum(alpha, beta, gamma, beta2, x, y, ctl)
        return (1.0 - y) ** (-alpha) * appell_f2(
            alpha, beta, gamma2 - beta2, gamma, gamma2, x / (1.0 - y), y / (y - 1.0), ctl)
    if x < 0.0:
        if _inner_family(alpha, beta, gamma) and 0.0 <= y < 1.0 - 1e-12:
            return _f2_inner_sum(alpha, beta2, gamma2, beta, y, x, ctl)
        return (1.0 - x) ** (-alpha) * appell_f2(
            alpha, gamma - beta, beta2, gamma, gamma2, x / (x - 1.0), y / (1.0 - x), ctl)
    if x + y < 0.85:
        return _f2_direct_or_raise(alpha, beta, beta2, gamma, gamma2, x, y, ctl)
    # near the |x|+|y| = 1 boundary: pick the accelerated ordering with the
    # smallest series ratio among the parameter families available
    candidates = []
    if _inner_family(alpha, beta2, gamma2) and y < 1.0 - 1e-12 \
            and x / (1.0 - y) < 1.0 - 1e-12:
        candidates.append((x / (1.0 - y),
                           lambda: _f2_inner_sum(alpha, beta, gamma, beta2, x, y, ctl)))
    if _inner_family(alpha, beta, gamma) and x < 1.0 - 1e-12 \
            and y / (1.0 - x) < 1.0 - 1e-12:
        candidates.append((y / (1.0 - x),
                           lambda: _f2_inner_sum(alpha, beta2, gamma2, beta, y, x, ctl)))
    if _ke_family(alpha, beta, gamma) and x < 1.0 - 1e-12 \
            and y / (1.0 - x) < 1.0 - 1e-12:
        candidates.append((y / (1.0 - x),
                           lambda: _f2_ke_sum(beta2, gamma2, x, y, ctl)))
    if _ke_family(alpha, beta2, gamma2) and y < 1.0 - 1e-12 \
            and x / (1.0 - y) < 1.0 - 1e-12:
        candidates.append((x / (1.0 - y),
                           lambda: _f2_ke_sum(beta, gamma, y, x, ctl)))
    if candidates:
        candidates.sort(key=lambda c: c[0])
        return candidates[0][1]()
    return _f2_direct_or_raise(alpha, beta, beta2, gamma, gamma2, x, y, ctl)


def _ke_family(alpha, beta, gamma):
    # inner 2F1(1/2 + l, 1/2; 1; x) has complete-elliptic seeds and a stable
    # three-term recurrence in its first parameter
    return alpha == 0.5 and beta == 0.5 and gamma == 1.0


def _f2_ke_sum(beta2, gamma2, x, y, ctl):
    # F2(1/2; 1/2, b'; 1, g'; x, y) = sum_l (1/2)_l (b')_l /((g')_l l!) y^l
    #   * 2F1(1/2 + l, 1/2; 1; x),
    # with the inner function scaled by (1-x)^l: seeds (2/pi) K(x) and
    # (2/pi) E(x), then hhat_{l+1} = ((1/2 - l)(1-x) hhat_{l-1}
    #   + l (2-x) hhat_l)/(1/2 + l). Converges at ratio y/(1-x).
    u = 1.0 - x
    ratio = y / u
    h_prev = 2.0 / math.pi * elliptic.comp_k(x)
    total = h_prev
    if y == 0.0:
        return total
    h_cur = 2.0 / math.pi * elliptic.comp_e(x)
    coef = 1.0
    small = 0
    for l in range(1, ctl.max_terms):
        coef *= (l - 0.5) * (beta2 + l - 1.0) / ((gamma2 + l - 1.0) * l) * ratio
        term = coef * h_cur
        total += term
        if abs(term) <= 0.02 * ctl.rel_tol * max(abs(total), 1e-300):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
        h_next = ((0.5 - l) * u * h_prev + l * (2.0 - x) * h_cur) / (0.5 + l)
        h_prev, h_cur = h_cur, h_next
    raise ConvergenceError("appell_f2: K/E-seeded series did not converge")


def _inner_family(alpha, beta2, gamma2):
    # parameter families whose inner 2F1(alpha+j, beta2; gamma2; y) has a
    # stable two-term recurrence with elementary seeds
    return alpha == 0.5 and gamma2 == 1.5 and beta2 in (0.5, 1.0)


def _f2_direct_or_raise(alpha, beta, beta2, gamma, gamma2, x, y, ctl):
    if abs(x) + abs(y) >= 1.0 - 1e-12:
        raise ConvergenceError(
            f"appell_f2 does not converge at |x|+|y| = {abs(x) + abs(y)}")
    return _appell_f2_direct(alpha, beta, beta2, gamma, gamma2, x, y, ctl)


def _f2_inner_sum(alpha, beta, gamma, beta2, x, y, ctl):
    # sum_j (1/2)_j (beta)_j /((gamma)_j j!) x^j 2F1(1/2+j, beta2; 3/2; y),
    # the inner 2F1 by a two-term recurrence in its first parameter, scaled
    # by (1-y)^j. Handles 0 <= y < 1 near the |x|+|y| = 1 boundary and all
    # y < 0 (there 1-y is exact, so no cancellation); needs x/(1-y) < 1.
    u = 1.0 - y
    ratio = x / u
    if y > 0.0:
        sq = math.sqrt(y)
        fhat = math.atanh(sq) / sq if beta2 == 1.0 else math.asin(sq) / sq
    elif y < 0.0:
        sq = math.sqrt(-y)
        fhat = math.atan(sq) / sq if beta2 == 1.0 else math.asinh(sq) / sq
    else:
        fhat = 1.0
    coef = 1.0
    upow = 1.0  # (1-y)^j for y > 0, (1-y)^(-1/2-j)*(scale) folded below for y < 0
    total = fhat
    small = 0
    sqrt_u = math.sqrt(u)
    inv_u = 1.0 / u
    upow_neg = sqrt_u * inv_u  # u^(-1/2) precursor for the y < 0 recurrences
    for j in range(ctl.max_terms):
        a = 0.5 + j
        if y >= 0.0:
            if beta2 == 1.0:
                # Fhat_{j+1} = ((2a-1) Fhat_j + (1-y)^j) / (2a)
                fhat = ((2.0 * a - 1.0) * fhat + upow) / (2.0 * a)
            else:
                # Ghat_{j+1} = (sqrt(1-y) + (2a-1)(1-y) Ghat_j) / (2a)
                fhat = (sqrt_u + (2.0 * a - 1.0) * u * fhat) / (2.0 * a)
            upow *= u
        else:
            if beta2 == 1.0:
                # F_{a+1} = ((2a-1) F_a + 1) / (2a (1-y)); fhat is 2F1 itself
                fhat = ((2.0 * a - 1.0) * fhat + 1.0) / (2.0 * a * u)
            else:
                # G_{a+1} = (u^(-a) + (2a-1) G_a) / (2a)
                fhat = (upow_neg + (2.0 * a - 1.0) * fhat) / (2.0 * a)
            upow_neg *= inv_u
        coef *= (0.5 + j) * (beta + j) / ((gamma + j) * (j + 1.0)) * (ratio if y >= 0.0 else x)
        term = coef * fhat
        total += term
        if abs(term) <= 0.02 * ctl.rel_tol * max(abs(total), 1e-300):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise ConvergenceError("appell_f2: inner-2F1 accelerated series did not converge")


def appell_f1(alpha, beta, beta2, gamma, x, y, ctl=None):
    """Appell double hypergeometric series F1(alpha; beta, beta2; gamma; x, y),
    convergent for |x| < 1 and |y| < 1."""
    ctl = ctl or DEFAULT_CONTROL
    if gamma <= 0.0 and gamma == int(gamma):
        raise DomainError("appell_f1: gamma must not be a nonpositive integer")
    if abs(x) >= 1.0 or abs(y) >= 1.0:
        raise ConvergenceError("appell_f1 requires |x| < 1 and |y| < 1")
    if x == 0.0 and y == 0.0:
        return 1.0

    def l_ratio(N, j):
        lidx = N - j
        return (alpha + N) * (beta2 + lidx) * y / ((gamma + N) * (lidx + 1.0))

    def j_edge(j):
        return (alpha + j) * (beta + j) * x / ((gamma + j) * (j + 1.0))

    return _antidiagonal_sum(l_ratio, j_edge, ctl, "appell_f1")


def _i_hyg_series(m, A, s, ctl):
    # Eq-series route: pi A sgn(s) F2(1/2;1/2,1;1,3/2; m, A^2) minus the
    # k-sum, the latter collapsed analytically to
    # 2As sqrt(1-s^2) sum_{j,l} (1/2)_{j+l} m^j phi_j A^(2l) / (j! (3/2)_l)
    # where phi_j = s^(2j) 2F1(j+1, 1; 3/2; 1-s^2) stays bounded.
    y = A * A
    term1 = math.pi * A * math.copysign(1.0, s) * appell_f2(
        0.5, 0.5, 1.0, 1.0, 1.5, m, y, ctl)
    s2 = s * s
    w = 1.0 - s2
    if w <= 0.0:
        return term1
    sa = abs(s)
    # phi_0 = asin(sqrt(w)) / (sqrt(w) |s|)
    sw = math.sqrt(w)
    phis = [math.asin(sw) / (sw * sa)]
    spow = [1.0]  # s^(2j)

    def l_ratio(N, j):
        lidx = N - j
        return (0.5 + N) * y / (1.5 + lidx)

    def j_edge(j):
        ji = int(j)
        while len(phis) <= ji + 1:
            jj = len(phis) - 1
            phis.append(((2.0 * jj + 1.0) * phis[jj] + spow[jj]) / (2.0 * (jj + 1.0)))
            spow.append(spow[jj] * s2)
        return (0.5 + j) * m * phis[ji + 1] / ((j + 1.0) * phis[ji])

    coupled = _antidiagonal_sum(l_ratio, j_edge, ctl, "i_hyg")
    term2 = 2.0 * A * s * math.sqrt(w) * phis[0] * coupled
    return term1 - term2


def i_hyg(args, ctl=None):
    """The integral int_0^theta atanh(A / sqrt(1 - m sin^2(t/2))) dt.

    Odd in both A and theta. Strictly interior arguments m + A^2 < 1 only;
    the convergence boundary is the business of i_hyg_surface. Below
    |sin(theta/2)| = SMALL_S_THRESHOLD the series converges too slowly and
    the defining integral is evaluated by adaptive quadrature instead.
    """
    ctl = ctl or DEFAULT_CONTROL
    if not isinstance(args, IhygArgs):
        raise DomainError("i_hyg expects an IhygArgs record")
    m, A, theta = args.m, args.A, args.theta
    if theta == 0.0 or A == 0.0:
        return 0.0
    if m + A * A > 1.0 - 1e-9:
        raise DomainError(
            "i_hyg: m + A^2 within 1e-9 of the convergence boundary; "
            "use i_hyg_surface for the boundary value")
    s = math.sin(theta / 2.0)
    if abs(s) < SMALL_S_THRESHOLD:
        return _i_hyg_quadrature(m, A, theta, ctl)
    return _i_hyg_series(m, A, s, ctl)


def _i_hyg_quadrature(m, A, theta, ctl):
    spec = oracle.QuadratureSpec(abs_tol=1e-14, rel_tol=min(ctl.rel_tol, 1e-11))

    def integrand(t):
        return np.arctanh(A / np.sqrt(1.0 - m * np.sin(t / 2.0) ** 2))

    val, _ = oracle.quad_1d(integrand, 0.0, theta, spec, vectorized=True)
    return val


def i_hyg_pi(m, A, ctl=None):
    """Definite integral i_hyg(m, A, pi): only the first closed-form term
    survives. Odd in A."""
    ctl = ctl or DEFAULT_CONTROL
    if not 0.0 <= m <= 1.0:
        raise DomainError(f"i_hyg_pi requires m in [0, 1] (got {m})")
    if A == 0.0:
        return 0.0
    if m + A * A > 1.0 - 1e-9:
        raise DomainError(
            "i_hyg_pi: m + A^2 within 1e-9 of the boundary; use i_hyg_surface")
    y = A * A
    if m + y >= 0.85 and 0.0 < m < 1.0:
        # with both F2 series ratios near 1 the closed form is impractical;
        # integrate the exact A-derivative in from the known boundary value
        ratio = min(m / (1.0 - y), y / (1.0 - m))
        if ratio > 0.995:
            return math.copysign(1.0, A) * _i_hyg_pi_from_boundary(m, abs(A))
    return math.pi * A * appell_f2(0.5, 0.5, 1.0, 1.0, 1.5, m, A * A, ctl)


def _i_hyg_pi_from_boundary(m, A_abs):
    # I(m, A) = I(m, sqrt(1-m)) - int_A^A0 dI/dA' dA', substituted A' = A0 - u^2;
    # the integrable 1/sqrt singularity of the characteristic-1 limit of Pi
    # disappears in the substitution. Everything is cancellation-free in u.
    A0 = math.sqrt(1.0 - m)
    surf = _i_hyg_surface_quad(m)
    span = A0 - A_abs
    if span <= 0.0:
        return surf
    K = elliptic.comp_k(m)

    def integrand(u):
        ap = A0 - u * u
        oma2 = m + u * u * (2.0 * A0 - u * u)  # 1 - A'^2, exactly
        n = m / oma2
        one_minus_n = u * u * (2.0 * A0 - u * u) / oma2
        if one_minus_n < 1e-11:
            piv = math.pi / (2.0 * math.sqrt(one_minus_n) * ap)
        else:
            piv = K + (n / 3.0) * elliptic.carlson_rj(0.0, 1.0 - m, 1.0, one_minus_n)
        return (2.0 * K + 2.0 * ap * ap / oma2 * piv) * 2.0 * u

    spec = oracle.QuadratureSpec(abs_tol=1e-12, rel_tol=1e-11)
    val, _ = oracle.quad_1d(integrand, 0.0, math.sqrt(span), spec)
    return surf - val


def _f43_log_continued(mu, spec):
    # 4F3(1,1,3/2,3/2; 2,2,2; mu) = int_0^1 int_0^1 2F1(3/2,3/2;2; mu t u) dt du,
    # with the 2F1 evaluated through Pfaff + the logarithmic connection formula;
    # valid for all mu < 0.
    tight = SeriesControl(rel_tol=1e-13, max_terms=DEFAULT_CONTROL.max_terms)

    def inner(t):
        def f(u):
            arg = mu * t * u
            if arg == 0.0:
                return 1.0
            return gauss_2f1(1.5, 1.5, 2.0, arg, tight)
        val, _ = oracle.quad_1d(f, 0.0, 1.0, spec)
        return val

    val, _ = oracle.quad_1d(inner, 0.0, 1.0, oracle.QuadratureSpec(
        abs_tol=spec.abs_tol * 10.0, rel_tol=spec.rel_tol * 10.0,
        max_subdivisions=spec.max_subdivisions))
    return val


def i_hyg_surface(m, ctl=None):
    """Boundary value i_hyg(m, sqrt(1-m), pi) for m in (0, 1).

    Evaluated along two independent routes, the quadrature of
    int_m^1 K(t) dt / (t sqrt(1-t)) and the 4F3-log closed form at
    mu = m/(m-1); their agreement is asserted internally and the quadrature
    value is returned.
    """
    ctl = ctl or DEFAULT_CONTROL
    if not 0.0 < m < 1.0:
        raise DomainError(f"i_hyg_surface requires m in (0, 1) (got {m})")
    quad_val = _i_hyg_surface_quad(m)
    f43_val = _i_hyg_surface_f43(m, ctl)
    scale = max(abs(quad_val), 1.0)
    if abs(quad_val - f43_val) > 1e-7 * scale:
        raise ConvergenceError(
            f"i_hyg_surface: internal cross-check failed at m = {m}: "
            f"{quad_val} vs {f43_val}")
    return quad_val


def _k_minus_log(v):
    # K(1 - v^2) - ln(4/v) by the near-one logarithmic series
    #   sum_{n>=1} ((1/2)_n/n!)^2 v^(2n) (ln(4/v) - b_n),
    # b_n = sum_{j<=n} 2/((2j-1) 2j); cancellation-free for v^2 < 1.
    L = math.log(4.0 / v)
    v2 = v * v
    total = 0.0
    coef = 1.0
    bn = 0.0
    for n in range(1, 64):
        coef *= ((n - 0.5) / n) ** 2 * v2
        bn += 2.0 / ((2.0 * n - 1.0) * 2.0 * n)
        term = coef * (L - bn)
        total += term
        if abs(term) < 1e-18 * max(abs(total), 1e-30):
            break
    return total


def _i_hyg_surface_quad(m):
    # substitute t = 1 - v^2 and split off the K(1-v^2) ~ ln(4/v) endpoint:
    # I = 2 b (ln(4/b) + 1) + int_0^b [2K(1-v^2)/(1-v^2) - 2 ln(4/v)] dv
    b = math.sqrt(1.0 - m)

    def remainder(v):
        if v == 0.0:
            return 0.0
        L = math.log(4.0 / v)
        if v < 0.35:
            # 2 [ (K - L) + L v^2 ] / (1 - v^2), with K - L from the log series
            return 2.0 * (_k_minus_log(v) + L * v * v) / (1.0 - v * v)
        return 2.0 * elliptic.comp_k(1.0 - v * v) / (1.0 - v * v) - 2.0 * L

    spec = oracle.QuadratureSpec(abs_tol=1e-12, rel_tol=1e-11)
    rem, _ = oracle.quad_1d(remainder, 0.0, b, spec)
    return 2.0 * b * (math.log(4.0 / b) + 1.0) + rem


def _i_hyg_surface_f43(m, ctl):
    mu = m / (m - 1.0)
    if abs(mu) <= 0.5:
        f43 = pfq_4f3((1.0, 1.0, 1.5, 1.5), (2.0, 2.0, 2.0), mu,
                      SeriesControl(rel_tol=min(ctl.rel_tol, 1e-13),
                                    max_terms=ctl.max_terms))
    else:
        f43 = _f43_log_continued(mu, oracle.QuadratureSpec(abs_tol=1e-12, rel_tol=1e-10))
    return -math.pi * mu / 8.0 * f43 - math.pi / 2.0 * math.log(-mu / 16.0)


def di_hyg_dA(m, A, theta, ctl=None):
    """Closed-form derivative of i_hyg with respect to A:
    2 F(theta/2 | m) + (2A^2/(1-A^2)) Pi(m/(1-A^2); theta/2 | m)."""
    if A * A >= 1.0:
        raise DomainError("di_hyg_dA requires A^2 < 1")
    F = elliptic.ellip_f(theta / 2.0, m)
    if A == 0.0:
        return 2.0 * F
    n = m / (1.0 - A * A)
    return 2.0 * F + (2.0 * A * A / (1.0 - A * A)) * elliptic.ellip_pi(n, theta / 2.0, m)


def di_hyg_dm(m, A, theta, ctl=None):
    """Closed-form derivative of i_hyg with respect to m:
    (A/m) [Pi(m/(1-A^2); theta/2 | m) - F(theta/2 | m)]."""
    if not 0.0 < m < 1.0:
        raise DomainError("di_hyg_dm requires m in (0, 1)")
    if A * A >= 1.0:
        raise DomainError("di_hyg_dm requires A^2 < 1")
    F = elliptic.ellip_f(theta / 2.0, m)
    if A == 0.0:
        return 0.0
    n = m / (1.0 - A * A)
    return (A / m) * (elliptic.ellip_pi(n, theta / 2.0, m) - F)


def lauricella_f11_triple(m, A, s, ctl=None):
    """Truncated triple series for i_hyg in powers of (m s^2, A^2, s^2);
    an oracle for small arguments."""
    ctl = ctl or DEFAULT_CONTROL
    x, y, w = m * s * s, A * A, s * s
    for arg, nm in ((x, "m*s^2"), (y, "A^2"), (w, "s^2")):
        if not 0.0 <= arg < 1.0:
            raise ConvergenceError(f"lauricella_f11_triple requires 0 <= {nm} < 1")

    def cap(arg):
        if arg == 0.0:
            return 1
        n = int(math.log(1e-18) / math.log(arg)) + 8 if arg > 1e-18 else 2
        return min(max(n, 8), 600)

    nl, nj, nk = cap(x), cap(y), cap(w)
    if max(nl, nj, nk) >= 600:
        raise ConvergenceError("lauricella_f11_triple: arguments too close to 1")
    half = 0.5
    idx = np.arange(nl + max(nj, nk) + 1, dtype=float)
    poch_half = np.cumprod(np.concatenate(([1.0], half + idx[:-1])))  # (1/2)_n
    poch_ratio = poch_half / np.cumprod(np.concatenate(([1.0], 1.5 + idx[:-1])))  # (1/2)_n/(3/2)_n
    l_idx = np.arange(nl, dtype=float)
    j_idx = np.arange(nj, dtype=float)
    k_idx = np.arange(nk, dtype=float)
    # a_j = (1)_j A^(2j) / ((3/2)_j j!) = A^(2j) / (3/2)_j
    a = y ** j_idx / np.cumprod(np.concatenate(([1.0], 1.5 + j_idx[:-1])))
    # b_k = (1/2)_k s^(2k) / k!
    b = poch_half[:nk] * w ** k_idx / np.cumprod(np.concatenate(([1.0], 1.0 + k_idx[:-1])))
    # c_l = (m s^2)^l / l!
    c = x ** l_idx / np.cumprod(np.concatenate(([1.0], 1.0 + l_idx[:-1])))
    P = np.array([np.dot(a, poch_half[l:l + nj]) for l in range(nl)])
    Qv = np.array([np.dot(b, poch_ratio[l:l + nk]) for l in range(nl)])
    return 2.0 * A * s * float(np.dot(c, P * Qv))


def i_hyg_alt(variant, m, A, s, ctl=None):
    """Alternative single-index series for i_hyg obtained by performing two of
    the three summations; used for cross-validation on interior arguments.

    variant 1: series in (m s^2)^l of 2F1 x 2F1 products;
    variant 2: series in (A^2)^j of Appell F1 values;
    variant 3: series in (s^2)^k of Appell F2 values.
    """
    ctl = ctl or DEFAULT_CONTROL
    if variant not in (1, 2, 3):
        raise DomainError("i_hyg_alt variant must be 1, 2 or 3")
    if A == 0.0 or s == 0.0:
        return 0.0
    x, y, w = m * s * s, A * A, s * s
    pref = 2.0 * A * s
    total = 0.0
    small = 0
    coef = 1.0
    for idx in range(ctl.max_terms):
        if variant == 1:
            term = coef / (2.0 * idx + 1.0) * gauss_2f1(1.0, 0.5 + idx, 1.5, y, ctl) \
                * gauss_2f1(0.5, 0.5 + idx, 1.5 + idx, w, ctl)
            coef *= (0.5 + idx) / (idx + 1.0) * x
        elif variant == 2:
            term = coef * appell_f1(0.5, 0.5 + idx, 0.5, 1.5, x, w, ctl)
            coef *= (0.5 + idx) / (1.5 + idx) * y
        else:
            term = coef * appell_f2(0.5, 0.5 + idx, 1.0, 1.5 + idx, 1.5, x, y, ctl)
            coef *= (0.5 + idx) ** 2 / ((1.5 + idx) * (idx + 1.0)) * w
        total += term
        if abs(term) <= 0.02 * ctl.rel_tol * max(abs(total), 1e-300):
            small += 1
            if small >= 3:
                return pref * total
        else:
            small = 0
    raise ConvergenceError(f"i_hyg_alt variant {variant} did not converge")
