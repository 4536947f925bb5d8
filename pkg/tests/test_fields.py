import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from appellfield import fields as fl
from appellfield import oracle as oc
from appellfield.errors import DomainError, SingularityError
from appellfield.geometry import CylinderSpec, TubeSpec, aux

CYL = CylinderSpec(R=1.0, Z=0.7, rho0=1.0)
TUBE = TubeSpec(R=1.0, Z=0.7, sigma0=1.0)

# brute-force Coulomb/kernel integrals, frozen
PHI_CYL_15_03 = 2.911761508333128
PHI_CYL_06_02 = 5.632388647431276
PSI_CYL_05_12 = 4.121993274197439
PHI_TUBE_15_03 = 6.086693309552363
PSI_TUBE_15_03 = 1.9884147301598052
PHI_DISK_13_04 = 2.425062662470501


def test_aux_plugin_arithmetic():
    a = aux(0.0, 1.0, 1.0)
    assert a.m == 0.0
    assert a.A == pytest.approx(1.0 / math.sqrt(2.0), rel=1e-15)
    assert a.n_plus == pytest.approx(2.0 / (1.0 + math.sqrt(2.0)), rel=1e-15)
    assert a.n_minus == pytest.approx(-2.0 * (1.0 + math.sqrt(2.0)), rel=1e-15)


def test_aux_boundary_at_equal_radii():
    a = aux(1.0, 0.7, 1.0)
    assert a.m + a.A ** 2 == pytest.approx(1.0, abs=1e-15)
    assert 0.0 < a.n_plus < 1.0


@given(st.floats(0.1, 3.0), st.floats(0.1, 3.0), st.floats(-2.0, 2.0))
@settings(max_examples=60, deadline=None)
def test_alternate_prefactor_identity(r, r0, z):
    if abs(z) < 1e-3:
        z = 0.5
    a = aux(r, z, r0)
    for sign in (+1, -1):
        assert a.bracket(sign) == pytest.approx(a.bracket_alt(sign),
                                                rel=1e-12, abs=1e-12)


def test_aux_degenerate():
    with pytest.raises(DomainError):
        aux(0.0, 0.0, 0.0)


def _mixed_partial_3(f, r, th, z, h):
    # d^3 f / dr dth dz by nested central differences
    total = 0.0
    for sr in (1, -1):
        for sth in (1, -1):
            for sz in (1, -1):
                total += sr * sth * sz * f(r + sr * h, th + sth * h, z + sz * h)
    return total / (8.0 * h ** 3)


def test_cylinder_indefinite_integral_probe():
    # d^3 I / dr dth dz must reproduce the integrand r / L
    r, th, z, r0 = 1.1, 2.0, 0.6, 0.8
    f = lambda rr, tt, zz: (fl.i_cyl_trig(rr, tt, zz, r0)
                            + fl.i_cyl_ell(rr, tt, zz, r0)
                            + fl.i_cyl_hyg(rr, tt, zz, r0))
    L = math.sqrt(r * r + r0 * r0 + 2 * r * r0 * math.cos(th) + z * z)
    probe = _mixed_partial_3(f, r, th, z, 2e-2)
    assert probe == pytest.approx(r / L, rel=2e-3)


def test_cylinder_fieldline_integral_probe():
    r, th, z, r0 = 1.1, 2.0, 0.6, 0.8
    f = lambda rr, tt, zz: fl.j_cyl_trig(rr, tt, zz, r0) + fl.j_cyl_ell(rr, tt, zz, r0)
    L = math.sqrt(r * r + r0 * r0 + 2 * r * r0 * math.cos(th) + z * z)
    integrand = -r0 * z * (r0 + r * math.cos(th)) * r / (L * (L * L - z * z))
    probe = _mixed_partial_3(f, r, th, z, 2e-2)
    assert probe == pytest.approx(integrand, rel=2e-3)


def test_tube_indefinite_integral_probes():
    r, th, z, r0 = 1.3, 1.8, 0.5, 0.9
    h = 2e-2

    def mixed2(f):
        return (f(th + h, z + h) - f(th + h, z - h)
                - f(th - h, z + h) + f(th - h, z - h)) / (4.0 * h * h)

    L = math.sqrt(r * r + r0 * r0 + 2 * r * r0 * math.cos(th) + z * z)
    probe_i = mixed2(lambda tt, zz: fl.i_tube(r, tt, zz, r0))
    assert probe_i == pytest.approx(1.0 / L, rel=2e-3)
    probe_j = mixed2(lambda tt, zz: fl.j_tube(r, tt, zz, r0))
    integrand = -r0 * z * (r0 + r * math.cos(th)) / (L * (L * L - z * z))
    assert probe_j == pytest.approx(integrand, rel=2e-3)


def test_phi_cyl_frozen_points():
    assert fl.phi_cyl((1.5, 0.3), CYL) == pytest.approx(PHI_CYL_15_03, rel=1e-9)
    assert fl.phi_cyl((0.6, 0.2), CYL) == pytest.approx(PHI_CYL_06_02, rel=1e-9)


def test_phi_cyl_on_axis_elementary():
    def phi_axis(z, R=CYL.R, Z=CYL.Z, rho0=CYL.rho0):
        def G(u):
            return (u * math.hypot(R, u) + R * R * math.asinh(u / R)) / 2 - u * abs(u) / 2
        return 2 * math.pi * rho0 * (G(Z - z) - G(-Z - z))

    for z in (2.0, 0.3, -1.1, 0.0):
        assert fl.phi_cyl((0.0, z), CYL) == pytest.approx(phi_axis(z), rel=1e-10)


def test_phi_cyl_far_field():
    d = 100.0
    val = fl.phi_cyl((d / math.sqrt(2), d / math.sqrt(2)), CYL)
    assert val * d / CYL.total_charge == pytest.approx(1.0, abs=1e-3)


def test_far_field_error_decays_monotonically():
    # |phi sqrt(r^2+z^2)/Q - 1| must fall off along a radial ray
    direction = (0.6, 0.8)
    errs = []
    for d in (8.0, 16.0, 32.0, 64.0, 128.0):
        r, z = d * direction[0], d * direction[1]
        errs.append(abs(fl.phi_cyl((r, z), CYL) * d / CYL.total_charge - 1.0))
    assert all(a > b for a, b in zip(errs, errs[1:]))
    # quadrupole-type decay: quartering with each doubling, within slack
    assert errs[-1] < errs[0] / 100.0


def test_phi_cyl_continuity_and_smoothness_across_surface():
    eps = 1e-6
    # C0 across r = R and across z = Z
    assert fl.phi_cyl((1.0 - eps, 0.3), CYL) == pytest.approx(
        fl.phi_cyl((1.0 + eps, 0.3), CYL), abs=1e-4)
    assert fl.phi_cyl((0.5, 0.7 - eps), CYL) == pytest.approx(
        fl.phi_cyl((0.5, 0.7 + eps), CYL), abs=1e-4)
    # C1 in z across z = Z: one-sided slopes agree
    h = 1e-4
    s_in = (fl.phi_cyl((0.5, 0.7 - h), CYL) - fl.phi_cyl((0.5, 0.7 - 3 * h), CYL)) / (2 * h)
    s_out = (fl.phi_cyl((0.5, 0.7 + 3 * h), CYL) - fl.phi_cyl((0.5, 0.7 + h), CYL)) / (2 * h)
    assert s_in == pytest.approx(s_out, abs=5e-3)


def test_phi_cyl_edge_circle_excluded():
    with pytest.raises(SingularityError):
        fl.phi_cyl((1.0, 0.7), CYL)


def test_psi_cyl_marker_and_values():
    assert fl.psi_cyl((0.5, 0.2), CYL).psi is None
    assert fl.psi_cyl((1.0, 0.3), CYL).psi is None  # closed-region boundary
    s = fl.psi_cyl((0.5, 1.2), CYL)
    assert s.psi == pytest.approx(PSI_CYL_05_12, rel=1e-8)
    assert s.branch == 0


def test_psi_cyl_odd_in_z():
    up = fl.psi_cyl((1.5, 0.9), CYL).psi
    down = fl.psi_cyl((1.5, -0.9), CYL).psi
    assert up == pytest.approx(-down, rel=1e-12)


def test_psi_cyl_far_field():
    r, z = 40.0, 60.0
    d = math.hypot(r, z)
    assert fl.psi_cyl((r, z), CYL).psi == pytest.approx(
        CYL.total_charge * z / d, rel=1e-3)


def test_phi_tube_values_and_surface():
    assert fl.phi_tube((1.5, 0.3), TUBE) == pytest.approx(PHI_TUBE_15_03, rel=1e-9)
    # on the charged sheet phi is finite and continuous
    inner = fl.phi_tube((1.0 - 1e-7, 0.3), TUBE)
    on = fl.phi_tube((1.0, 0.3), TUBE)
    outer = fl.phi_tube((1.0 + 1e-7, 0.3), TUBE)
    assert min(inner, outer) - 1e-3 < on < max(inner, outer) + 1e-3


def test_phi_tube_surface_against_quadrature():
    # z' integrated in closed form, theta by quadrature (the on-surface kernel
    # leaves an integrable log endpoint at theta = pi)
    z_obs = 0.3

    def integrand(th):
        a = 2.0 * np.abs(np.cos(th / 2.0))
        return np.arcsinh((z_obs + TUBE.Z) / a) - np.arcsinh((z_obs - TUBE.Z) / a)

    spec = oc.QuadratureSpec(abs_tol=1e-11, rel_tol=1e-9,
                             singular_endpoints=(False, True))
    val, _ = oc.quad_1d(integrand, 0.0, math.pi, spec, vectorized=True)
    ref = 2.0 * TUBE.sigma0 * TUBE.R * val
    assert fl.phi_tube((1.0, z_obs), TUBE) == pytest.approx(ref, rel=1e-8)


def test_psi_tube_branches_and_jump():
    base = fl.psi_tube((1.5, 0.3), TUBE)
    assert base.psi == pytest.approx(PSI_TUBE_15_03, rel=1e-9)
    jump = fl.tube_branch_jump(TUBE)
    assert jump == pytest.approx(8.0 * math.pi * 0.7, rel=1e-15)
    assert jump == pytest.approx(17.593, abs=1e-3)
    shifted = fl.psi_tube((1.5, 0.3), TUBE, branch=1)
    assert shifted.psi == pytest.approx(base.psi + jump, rel=1e-12)
    assert shifted.branch == 1
    # odd symmetry on branch 0 outside
    assert fl.psi_tube((1.5, -0.3), TUBE).psi == pytest.approx(-base.psi, rel=1e-12)


def test_psi_tube_surface_excluded():
    with pytest.raises(SingularityError):
        fl.psi_tube((1.0, 0.3), TUBE)
    # but defined on r = R beyond the sheet
    assert fl.psi_tube((1.0, 1.1), TUBE).psi is not None


def test_disk_forms_and_axis():
    R, sigma = 1.0, 1.0
    lb = fl.phi_disk((1.3, 0.4), R, sigma, "lass_blitzer")
    tk = fl.phi_disk((1.3, 0.4), R, sigma, "takahashi")
    assert lb == pytest.approx(PHI_DISK_13_04, rel=1e-10)
    assert lb == pytest.approx(tk, rel=1e-12)
    for z in (0.5, -1.2):
        exact = 2 * math.pi * sigma * (math.hypot(R, z) - abs(z))
        assert fl.phi_disk((0.0, z), R, sigma) == pytest.approx(exact, rel=1e-12)
    with pytest.raises(SingularityError):
        fl.phi_disk((1.0, 0.0), R, sigma)
    with pytest.raises(DomainError):
        fl.phi_disk((0.5, 0.5), R, sigma, "unknown")


def test_disk_far_field_multipole():
    R, sigma = 1.0, 1.0
    r, z = 60.0, 80.0
    d = math.hypot(r, z)
    assert fl.phi_disk((r, z), R, sigma) == pytest.approx(
        math.pi * R * R * sigma / d, rel=1e-3)


@given(st.floats(0.05, 2.5), st.floats(-2.0, 2.0))
@settings(max_examples=50, deadline=None)
def test_disk_forms_agree_everywhere(r, z):
    if abs(r - 1.0) < 0.02 and abs(z) < 0.02:
        return  # edge neighborhood excluded
    if abs(z) < 1e-6:
        z = 0.0  # exercise the exact z = 0 limit path
    lb = fl.phi_disk((r, z), 1.0, 1.0, "lass_blitzer")
    tk = fl.phi_disk((r, z), 1.0, 1.0, "takahashi")
    assert lb == pytest.approx(tk, rel=1e-10)


def test_tube_and_disk_exterior_laplace_residual():
    # five-point Laplacian -> 0 at O(h^2) away from the charge
    cases = [
        (lambda r, z: fl.phi_tube((r, z), TUBE), [(1.6, 0.4), (0.5, 1.3), (2.2, -0.8)]),
        (lambda r, z: fl.phi_disk((r, z), 1.0, 1.0), [(1.6, 0.4), (0.5, 0.9), (2.0, -1.1)]),
    ]
    for f, pts in cases:
        for (r, z) in pts:
            e1 = abs(oc.fd_laplacian_cyl(f, r, z, 0.02))
            e2 = abs(oc.fd_laplacian_cyl(f, r, z, 0.01))
            assert e2 < 1e-2  # residual is pure truncation, O(h^2)
            if e2 > 1e-8:
                assert math.log2(e1 / e2) > 1.7


def test_psi_point():
    assert fl.psi_point((0.0, 1.0), 1.0) == 1.0
    assert fl.psi_point((1.0, 0.0), 1.0) == 0.0
    # superposition of two charges at z = +-a
    r, z, a = 0.8, 0.4, 0.6
    total = fl.psi_point((r, z), 2.0, a) + fl.psi_point((r, z), -1.0, -a)
    expect = 2.0 * (z - a) / math.hypot(r, z - a) - (z + a) / math.hypot(r, z + a)
    assert total == pytest.approx(expect, rel=1e-15)
    with pytest.raises(SingularityError):
        fl.psi_point((0.0, 0.5), 1.0, 0.5)


def test_pi_identity_residual():
    assert fl.pi_identity_residual(2.0, 1.0, 0.5) < 1e-9
    assert fl.pi_identity_residual(1.0, 2.0, 0.5) < 1e-9
    with pytest.raises(DomainError):
        fl.pi_identity_residual(1.0, 1.0, 0.5)
    with pytest.raises(DomainError):
        fl.pi_identity_residual(2.0, 1.0, 0.0)


def test_tube_psi_reconstructed_from_phi():
    # integrate psi_r = r * phi_z radially at fixed z, outside the charge
    z = 1.1
    r1, r2 = 0.4, 1.8
    h = 1e-4

    def integrand(r):
        return r * (fl.phi_tube((r, z + h), TUBE)
                    - fl.phi_tube((r, z - h), TUBE)) / (2.0 * h)

    spec = oc.QuadratureSpec(abs_tol=1e-9, rel_tol=1e-7)
    delta, _ = oc.quad_1d(integrand, r1, r2, spec)
    expect = fl.psi_tube((r2, z), TUBE).psi - fl.psi_tube((r1, z), TUBE).psi
    assert delta == pytest.approx(expect, abs=1e-6)
