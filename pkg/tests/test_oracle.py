import math

import numpy as np
import pytest

from appellfield import oracle as oc
from appellfield.errors import ConvergenceError, DomainError
from appellfield.geometry import PointCharges, TubeSpec


def test_quad_1d_basic():
    v, e = oc.quad_1d(np.sin, 0.0, math.pi, vectorized=True)
    assert v == pytest.approx(2.0, rel=1e-12)
    assert abs(v - 2.0) <= e


def test_quad_1d_endpoint_singularity():
    spec = oc.QuadratureSpec(singular_endpoints=(True, False))
    v, _ = oc.quad_1d(lambda x: 1.0 / np.sqrt(x), 0.0, 1.0, spec, vectorized=True)
    assert v == pytest.approx(2.0, rel=1e-9)


def test_quad_1d_oscillatory_analytic():
    b = 40.0
    v, _ = oc.quad_1d(lambda x: np.exp(x) * np.sin(b * x), 0.0, 3.0,
                      oc.QuadratureSpec(abs_tol=1e-12, rel_tol=1e-11),
                      vectorized=True)
    exact = (math.exp(3.0) * (math.sin(3 * b) - b * math.cos(3 * b)) + b) / (1 + b * b)
    assert v == pytest.approx(exact, rel=1e-10)


def test_quad_1d_reversed_and_empty():
    v, _ = oc.quad_1d(np.cos, 1.0, 0.0, vectorized=True)
    assert v == pytest.approx(-math.sin(1.0), rel=1e-10)
    assert oc.quad_1d(np.cos, 2.0, 2.0) == (0.0, 0.0)


def test_error_estimate_tracks_requested_tolerance():
    # quartering rel_tol must shrink the reported estimate by >= 4x
    f = lambda x: np.exp(x) * np.sin(7.0 * x)
    prev = None
    for rel in (1e-4, 2.5e-5, 6.25e-6):
        _, est = oc.quad_1d(f, 0.0, 2.0, oc.QuadratureSpec(abs_tol=1e-15, rel_tol=rel),
                            vectorized=True)
        if prev is not None:
            assert prev / est >= 4.0 * 0.999
        prev = est


def test_quad_1d_nonintegrable_raises():
    spec = oc.QuadratureSpec(max_subdivisions=200)
    with pytest.raises(ConvergenceError):
        oc.quad_1d(lambda x: 1.0 / x, 0.0, 1.0, spec, vectorized=True)


def test_quad_2d_3d():
    assert oc.quad_2d(lambda x, y: 1.0 + 0.0 * y, ((0, 1), (0, 1)),
                      vectorized_inner=True) == pytest.approx(1.0, rel=1e-12)
    assert oc.quad_3d(lambda x, y, z: 1.0 + 0.0 * z, ((0, 1), (0, 1), (0, 1)),
                      vectorized_inner=True) == pytest.approx(1.0, rel=1e-10)


def test_quad_2d_disk_potential_on_axis():
    # phi(0, z) of a unit-density disk: 2 pi (sqrt(R^2+z^2) - |z|)
    R, z = 1.0, 0.5
    val = 2.0 * oc.quad_2d(
        lambda rp, th: rp / np.sqrt(rp * rp + z * z),
        ((0.0, R), (0.0, math.pi)),
        oc.QuadratureSpec(abs_tol=1e-11, rel_tol=1e-9), vectorized_inner=True)
    assert val == pytest.approx(2.0 * math.pi * (math.hypot(R, z) - abs(z)), rel=1e-8)


def test_fd_operators_trivial():
    assert oc.fd_laplacian_cyl(lambda r, z: r * r, 1.3, 0.2, 1e-3) == pytest.approx(
        4.0, abs=1e-6)
    assert oc.fd_laplacian_cyl(lambda r, z: z, 1.3, 0.2, 1e-3) == pytest.approx(
        0.0, abs=1e-9)
    assert oc.fd_psi_operator(lambda r, z: r * r, 1.3, 0.2, 1e-3) == pytest.approx(
        0.0, abs=1e-6)
    with pytest.raises(DomainError):
        oc.fd_laplacian_cyl(lambda r, z: r, 0.01, 0.0, 0.05)


def test_fd_operator_convergence_order():
    f = lambda r, z: math.sin(r) * math.exp(z) + r ** 3 * z * z
    exact = (-math.sin(1.3) + math.cos(1.3) / 1.3 + math.sin(1.3)) * math.exp(0.4) \
        + (6 * 1.3 + 3 * 1.3) * 0.4 ** 2 + 2 * 1.3 ** 3
    e1 = abs(oc.fd_laplacian_cyl(f, 1.3, 0.4, 0.1) - exact)
    e2 = abs(oc.fd_laplacian_cyl(f, 1.3, 0.4, 0.05) - exact)
    order = math.log2(e1 / e2)
    assert 1.8 <= order <= 2.2


def test_loop_integral_single_valued_function():
    f = lambda r, z: r * r * z + math.sin(z)
    loop = [(1.5 + 0.4 * math.cos(t), 0.4 * math.sin(t))
            for t in np.linspace(0, 2 * math.pi, 600, endpoint=False)]
    assert abs(oc.loop_integral_grad(f, loop, 1e-4)) < 1e-6


def test_brute_psi_point_charge():
    pc = PointCharges(((1.0, 0.0),))
    r, z = 1.0, 0.7
    assert oc.brute_psi((r, z), pc) == pytest.approx(z / math.hypot(r, z), rel=1e-14)
    two = PointCharges(((1.0, 0.5), (-2.0, -0.5)))
    expect = (z - 0.5) / math.hypot(r, z - 0.5) - 2.0 * (z + 0.5) / math.hypot(r, z + 0.5)
    assert oc.brute_psi((r, z), two) == pytest.approx(expect, rel=1e-14)


def test_brute_psi_mirror_antisymmetry():
    tube = TubeSpec(1.0, 0.7, 1.0)
    spec = oc.QuadratureSpec(abs_tol=1e-10, rel_tol=1e-8)
    up = oc.brute_psi((1.4, 0.6), tube, spec)
    down = oc.brute_psi((1.4, -0.6), tube, spec)
    assert up == pytest.approx(-down, rel=1e-8)


def test_quadrature_spec_validation():
    with pytest.raises(DomainError):
        oc.QuadratureSpec(abs_tol=0.0)
    with pytest.raises(DomainError):
        oc.QuadratureSpec(max_subdivisions=8)
