import math

import pytest
from hypothesis import given, settings, strategies as st

from appellfield import elliptic, jacobi as jc, oracle
from appellfield.errors import DomainError, SingularityError

SC_1_085 = 1.2235495251841479
ZETA_07_085 = 0.28269006353134067
THETA4_0_05 = 0.91357913815611682
THETA4_06_07 = 0.90809774063580783
INTZSC_15_085 = 0.4037322023824837
# continuous integral of Z*sc from 0 to 3.0 at m = 0.85 (crosses u = K)
INTZSC_30_085_CONT = 1.59384783341518


@given(st.floats(-8.0, 8.0), st.floats(0.0, 0.99))
@settings(max_examples=80, deadline=None)
def test_jacobi_identities(u, m):
    sn, cn, dn = jc.jacobi_sn(u, m), jc.jacobi_cn(u, m), jc.jacobi_dn(u, m)
    assert sn * sn + cn * cn == pytest.approx(1.0, abs=1e-12)
    assert dn * dn + m * sn * sn == pytest.approx(1.0, abs=1e-12)


def test_degenerate_parameter():
    assert jc.jacobi_sn(1.3, 0.0) == math.sin(1.3)
    assert jc.jacobi_dn(0.0, 0.77) == 1.0
    assert jc.jacobi_am(0.9, 0.0) == 0.9


def test_amplitude_quasi_periodicity():
    m = 0.6
    K = elliptic.comp_k(m)
    assert jc.jacobi_am(0.8 + 2 * K, m) == pytest.approx(
        jc.jacobi_am(0.8, m) + math.pi, abs=1e-12)


def test_sc_value_and_pole():
    assert jc.jacobi_sc(1.0, 0.85) == pytest.approx(SC_1_085, rel=1e-13)
    K = elliptic.comp_k(0.85)
    with pytest.raises(SingularityError):
        jc.jacobi_sc(K, 0.85)
    with pytest.raises(SingularityError):
        jc.jacobi_sc(3.0 * K + 1e-14, 0.85)


def test_zeta_zeros_and_value():
    m = 0.85
    assert jc.jacobi_zeta(0.0, m) == 0.0
    assert jc.jacobi_zeta(elliptic.comp_k(m), m) == pytest.approx(0.0, abs=1e-13)
    assert jc.jacobi_zeta(0.7, m) == pytest.approx(ZETA_07_085, rel=1e-12)


def test_zeta_against_quadrature():
    m, u = 0.85, 0.7
    ratio = elliptic.comp_e(m) / elliptic.comp_k(m)
    spec = oracle.QuadratureSpec(abs_tol=1e-13, rel_tol=1e-12)
    ref, _ = oracle.quad_1d(lambda t: jc.jacobi_dn(t, m) ** 2 - ratio, 0.0, u, spec)
    assert jc.jacobi_zeta(u, m) == pytest.approx(ref, rel=1e-11)


@given(st.floats(-3.0, 3.0), st.floats(-3.0, 3.0), st.floats(0.05, 0.95))
@settings(max_examples=60, deadline=None)
def test_zeta_addition_formula(u, v, m):
    sn, cn, dn = jc.jacobi_sn(u, m), jc.jacobi_cn(u, m), jc.jacobi_dn(u, m)
    snv = jc.jacobi_sn(v, m)
    lhs = (jc.jacobi_zeta(u + v, m) + jc.jacobi_zeta(u - v, m)
           - 2.0 * jc.jacobi_zeta(u, m))
    rhs = -2.0 * m * sn * cn * dn * snv * snv / (1.0 - m * sn * sn * snv * snv)
    assert lhs == pytest.approx(rhs, abs=1e-10)


@given(st.floats(-3.0, 3.0), st.floats(0.05, 0.95))
@settings(max_examples=60, deadline=None)
def test_zeta_quasi_periodicity(v, m):
    K = elliptic.comp_k(m)
    assert jc.jacobi_zeta(v + 2 * K, m) == pytest.approx(
        jc.jacobi_zeta(v, m), abs=1e-10)
    shift = -m * jc.jacobi_sn(v, m) * jc.jacobi_cn(v, m) / jc.jacobi_dn(v, m)
    assert jc.jacobi_zeta(v + K, m) == pytest.approx(
        jc.jacobi_zeta(v, m) + shift, abs=1e-10)


def test_theta_values():
    assert jc.theta(1, 0.0, 0.4) == 0.0
    assert jc.theta(4, 0.0, 0.5) == pytest.approx(THETA4_0_05, rel=1e-13)
    assert jc.theta(4, 0.6, 0.7) == pytest.approx(THETA4_06_07, rel=1e-13)
    with pytest.raises(DomainError):
        jc.theta(5, 0.1, 0.5)


def test_zeta_equals_log_theta4_derivative():
    u, m = 0.5, 0.5
    h = 1e-5
    fd = (math.log(jc.theta(4, u + h, m)) - math.log(jc.theta(4, u - h, m))) / (2 * h)
    assert jc.jacobi_zeta(u, m) == pytest.approx(fd, abs=1e-9)


def test_int_z_sc_values():
    assert jc.int_z_sc(0.0, 0.85) == 0.0
    assert jc.int_z_sc(1.5, 0.85) == pytest.approx(INTZSC_15_085, rel=1e-10)
    assert jc.int_z_sc(-1.5, 0.85) == pytest.approx(-INTZSC_15_085, rel=1e-10)


def test_int_z_sc_against_quadrature():
    m = 0.5
    spec = oracle.QuadratureSpec(abs_tol=1e-13, rel_tol=1e-11)
    for u in (0.4, 1.1, -0.8):
        ref, _ = oracle.quad_1d(
            lambda t: jc.jacobi_zeta(t, m) * jc.jacobi_sc(t, m), 0.0, u, spec)
        assert jc.int_z_sc(u, m) == pytest.approx(ref, abs=1e-10)


def test_int_z_sc_jump_and_branches():
    m = 0.85
    K = elliptic.comp_k(m)
    delta = 1e-8
    measured = jc.int_z_sc(K - delta, m) - jc.int_z_sc(K + delta, m)
    assert measured == pytest.approx(5.33, rel=5e-3)
    assert measured == pytest.approx(jc.zsc_branch_jump(m), rel=1e-6)
    # branch 1 continues the integral across u = K
    assert jc.int_z_sc(3.0, m, branch=1) == pytest.approx(
        INTZSC_30_085_CONT, rel=1e-9)
    with pytest.raises(SingularityError):
        jc.int_z_sc(K, m)


def test_euler_transformed_closed_form_identity():
    # sc * F2(1/2;1/2,1;1,3/2; m, (m-1)sc^2)
    #   == sc*|cd| * F2(1/2;1/2,1/2;1,3/2; m cd^2, (1-m) sd^2),
    # both sides by the plain anti-diagonal sum where it converges
    from appellfield import hypergeom as hg
    for (u, m) in ((0.3, 0.4), (0.5, 0.2), (-0.4, 0.6)):
        sn, cn, dn = jc.jacobi_sn(u, m), jc.jacobi_cn(u, m), jc.jacobi_dn(u, m)
        sc, cd, sd = sn / cn, cn / dn, sn / dn
        lhs = sc * hg._appell_f2_direct(0.5, 0.5, 1.0, 1.0, 1.5,
                                        m, (m - 1.0) * sc * sc, hg.DEFAULT_CONTROL)
        rhs = sc * abs(cd) * hg._appell_f2_direct(0.5, 0.5, 0.5, 1.0, 1.5,
                                                  m * cd * cd, (1.0 - m) * sd * sd,
                                                  hg.DEFAULT_CONTROL)
        assert lhs == pytest.approx(rhs, rel=1e-10)
