"""Sections, kernel/divided-difference identities, and empirical radius scans."""

import math

import numpy as np
import pytest

from harmsect.harmonic import (
    ExtremalCoefficients,
    HarmonicPolynomial,
    IdentityCoefficients,
    ProbeGrid,
    divided_difference,
    empirical_radius,
    empirical_scan,
    evaluate,
    jacobian,
    kernel,
    kernel_min_modulus,
    section,
)
from harmsect.radius import (
    FamilyClass,
    distortion_floor_general,
    solve_radius,
)
from harmsect.tails import TailClass, tail_weighted

GENERAL = ExtremalCoefficients(FamilyClass.GENERAL)
CONVEX = ExtremalCoefficients(FamilyClass.CONVEX)
IDENTITY = IdentityCoefficients()


def random_polynomial(rng, n=None, m=None):
    n = n or int(rng.integers(2, 12))
    m = m or int(rng.integers(2, 12))
    a = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / 2.0
    b = (rng.standard_normal(m) + 1j * rng.standard_normal(m)) / 2.0
    a[0] = 1.0
    b[0] = 0.0
    return HarmonicPolynomial(a=a, b=b)


class TestSection:
    def test_general_extremal_orders_two(self):
        p = section(GENERAL, 2, 2)
        assert np.allclose(p.a, [1.0, 2.5])
        assert np.allclose(p.b, [0.0, 0.5])

    def test_convex_extremal_orders_three(self):
        p = section(CONVEX, 3, 3)
        assert np.allclose(p.a, [1.0, 1.5, 2.0])
        assert np.allclose(p.b, [0.0, 0.5, 1.0])

    def test_identity_source(self):
        p = section(IDENTITY, 4, 3)
        assert np.allclose(p.a, [1.0, 0.0, 0.0, 0.0])
        assert np.allclose(p.b, [0.0, 0.0, 0.0])

    def test_truncating_a_polynomial(self):
        p = section(GENERAL, 6, 6)
        q = section(p, 3, 2)
        assert np.allclose(q.a, p.a[:3])
        assert np.allclose(q.b, p.b[:2])

    def test_order_guard(self):
        with pytest.raises(ValueError):
            section(GENERAL, 0, 2)

    def test_normalization_enforced(self):
        with pytest.raises(ValueError):
            HarmonicPolynomial(a=np.array([2.0 + 0j]), b=np.array([0j]))
        with pytest.raises(ValueError):
            HarmonicPolynomial(a=np.array([1.0 + 0j]), b=np.array([0.5 + 0j]))


class TestEvaluate:
    def test_identity(self):
        p = section(IDENTITY, 1, 1)
        z = 0.3 + 0.4j
        assert evaluate(p, z) == pytest.approx(z)

    def test_real_axis_with_co_analytic(self):
        p = HarmonicPolynomial(a=np.array([1.0 + 0j]), b=np.array([0.0, 0.5]))
        r = 0.37
        assert evaluate(p, r) == pytest.approx(r + 0.5 * r**2)

    def test_general_section_at_real_point(self):
        p = section(GENERAL, 2, 2)
        # 0.1 + 2.5*0.01 + conj(0.5*0.01)
        assert evaluate(p, 0.1) == pytest.approx(0.13)

    def test_array_input(self):
        p = section(GENERAL, 3, 3)
        zs = np.array([0.1, 0.1j, -0.2 + 0.05j])
        vals = evaluate(p, zs)
        assert vals.shape == zs.shape
        assert vals[0] == pytest.approx(evaluate(p, 0.1))


class TestJacobian:
    def test_identity(self):
        p = section(IDENTITY, 1, 1)
        for z in (0.0, 0.3 + 0.4j, -0.9j):
            assert jacobian(p, z) == pytest.approx(1.0)

    def test_at_origin(self):
        p = HarmonicPolynomial(a=np.array([1.0 + 0j]), b=np.array([0.0, 0.5]))
        assert jacobian(p, 0.0) == pytest.approx(1.0)

    def test_known_vanishing_point(self):
        # h' = 1 + 5z, g' = z for the order-2 general extremal section:
        # the jacobian first vanishes on the negative real axis at r = 1/6
        p = section(GENERAL, 2, 2)
        assert jacobian(p, -1.0 / 6.0) == pytest.approx(0.0, abs=1e-14)
        assert jacobian(p, -1.0 / 6.0 + 1e-3) > 0

    @pytest.mark.parametrize(
        "family,n", [(FamilyClass.GENERAL, 2), (FamilyClass.GENERAL, 8), (FamilyClass.CONVEX, 6)]
    )
    def test_positive_inside_certified_radius(self, family, n):
        certified = solve_radius(family, n, n).radius
        p = section(ExtremalCoefficients(family), n, n)
        grid = ProbeGrid(radius=0.95 * certified)
        assert np.all(jacobian(p, grid.z_points()) > 0)


class TestKernel:
    def test_identity_is_z(self):
        p = section(IDENTITY, 1, 1)
        for t in (0.0, 0.3, math.pi / 2):
            for z in (0.5, 0.1 - 0.6j):
                assert kernel(p, z, t) == pytest.approx(z)

    def test_t_zero_extension(self):
        rng = np.random.default_rng(42)
        p = random_polynomial(rng)
        z = 0.4 - 0.2j
        ks = np.arange(1, p.a.size + 1)
        kb = np.arange(1, p.b.size + 1)
        expected = np.sum(ks * p.a * z**ks) - np.conj(np.sum(kb * p.b * z**kb))
        assert kernel(p, z, 0.0) == pytest.approx(expected)

    def test_second_order_terms_drop_at_right_endpoint(self):
        # sin(2t)/sin(t) vanishes at t = pi/2
        p = section(GENERAL, 2, 2)
        z = 0.3 + 0.1j
        assert kernel(p, z, math.pi / 2) == pytest.approx(z)

    def test_domain_guards(self):
        p = section(IDENTITY, 1, 1)
        with pytest.raises(ValueError):
            kernel(p, 0.5, -0.1)
        with pytest.raises(ValueError):
            kernel(p, 0.5, 2.0)
        with pytest.raises(ValueError):
            kernel(p, 1.2, 0.3)


class TestDividedDifferenceIdentity:
    def test_kernel_is_z_times_divided_difference(self):
        rng = np.random.default_rng(42)
        for _ in range(25):
            p = random_polynomial(rng)
            for _ in range(25):
                r = rng.uniform(0.05, 0.95)
                psi = rng.uniform(0.0, 2.0 * math.pi)
                t = rng.uniform(1e-6, math.pi / 2)
                eta = psi + 2.0 * t
                z = r * math.e ** (1j * (eta + psi) / 2.0)
                dd = divided_difference(p, r, eta, psi)
                kv = kernel(p, z, t)
                assert abs(kv - z * dd) <= 1e-10 * (1.0 + abs(kv))

    def test_analytic_reduction(self):
        # with b = 0 the kernel over z reproduces the analytic
        # divided-difference criterion
        rng = np.random.default_rng(7)
        for _ in range(10):
            a = (rng.standard_normal(8) + 1j * rng.standard_normal(8)) / 2.0
            a[0] = 1.0
            p = HarmonicPolynomial(a=a, b=np.zeros(1, dtype=complex))
            for _ in range(10):
                r = rng.uniform(0.05, 0.95)
                psi = rng.uniform(0.0, 2.0 * math.pi)
                t = rng.uniform(1e-6, math.pi / 2)
                eta = psi + 2.0 * t
                z = r * math.e ** (1j * (eta + psi) / 2.0)
                dd = divided_difference(p, r, eta, psi)
                kv = kernel(p, z, t)
                assert abs(kv - z * dd) <= 1e-10 * (1.0 + abs(kv))

    def test_coincident_points_rejected(self):
        p = section(GENERAL, 2, 2)
        with pytest.raises(ValueError):
            divided_difference(p, 0.5, 1.0, 1.0)

    @pytest.mark.parametrize("r", [0.05, 0.1])
    def test_two_point_floor_for_large_section(self, r):
        # sampled chords of the order-60 general extremal section stay above
        # the family floor once the (astronomically small) tail correction
        # is taken out
        p = section(GENERAL, 60, 60)
        etas = np.linspace(0.0, 2.0 * math.pi, 121)
        psis = np.linspace(0.0, 2.0 * math.pi, 121)
        eta_grid, psi_grid = np.meshgrid(etas, psis)
        mask = np.abs(np.exp(1j * eta_grid) - np.exp(1j * psi_grid)) > 1e-9
        dd = np.abs(divided_difference(p, r, eta_grid[mask], psi_grid[mask]))
        floor = distortion_floor_general(r)
        tails = tail_weighted(TailClass.GENERAL_ANALYTIC, 60, r) + tail_weighted(
            TailClass.GENERAL_CO_ANALYTIC, 60, r
        )
        eps_tail = tails / floor
        assert dd.min() >= floor * (1.0 - eps_tail)


class TestProbeGrid:
    def test_validation(self):
        with pytest.raises(ValueError):
            ProbeGrid(radial_points=4)
        with pytest.raises(ValueError):
            ProbeGrid(radius=1.0)
        with pytest.raises(ValueError):
            ProbeGrid(radius=0.0)

    def test_z_points_exclude_origin(self):
        grid = ProbeGrid(radial_points=8, angular_points=8, t_points=8, radius=0.5)
        zs = grid.z_points()
        assert zs.size == 64
        assert np.min(np.abs(zs)) > 0

    def test_scaled(self):
        grid = ProbeGrid().scaled(2)
        assert grid.radial_points == 128
        assert grid.angular_points == 512
        assert grid.t_points == 256
        with pytest.raises(ValueError):
            ProbeGrid().scaled(0)


class TestKernelScan:
    def test_identity_min_is_smallest_radius(self):
        grid = ProbeGrid(radius=0.9)
        scan = kernel_min_modulus(section(IDENTITY, 1, 1), grid)
        assert scan.min_modulus == pytest.approx(0.9 / grid.radial_points, rel=1e-12)

    def test_inside_certified_radius(self):
        p = section(GENERAL, 2, 2)
        scan = kernel_min_modulus(p, ProbeGrid(radius=0.9 * 0.108193))
        assert scan.min_modulus > 1e-3

    def test_near_violation_far_outside(self):
        # sections are not univalent in the full disk: at radius 0.999 the
        # grid passes close to a kernel zero
        p = section(GENERAL, 2, 2)
        scan = kernel_min_modulus(p, ProbeGrid(radius=0.999))
        assert scan.min_modulus < 1e-3


class TestEmpiricalRadius:
    def test_identity_reaches_the_rim(self):
        value = empirical_radius(section(IDENTITY, 1, 1), ProbeGrid())
        assert value == pytest.approx(1.0, abs=2e-3)

    def test_general_order_two(self):
        p = section(GENERAL, 2, 2)
        scan = empirical_scan(p, ProbeGrid())
        # the jacobian zero at r = 1/6 binds before the kernel zero at 1/4
        assert scan.binding == "jacobian"
        assert scan.radius == pytest.approx(1.0 / 6.0, abs=5e-3)
        assert scan.radius >= 0.108193 - 1e-3

    @pytest.mark.parametrize(
        "family,n",
        [(FamilyClass.GENERAL, 5), (FamilyClass.CONVEX, 5)],
    )
    def test_dominates_certified_radius(self, family, n):
        certified = solve_radius(family, n, n).radius
        p = section(ExtremalCoefficients(family), n, n)
        assert empirical_radius(p, ProbeGrid()) >= certified - 1e-3

    def test_convex_dominates_close_to_convex_radius(self):
        from harmsect.radius import close_to_convex_radius

        p = section(CONVEX, 5, 5)
        assert empirical_radius(p, ProbeGrid()) >= close_to_convex_radius(5) - 1e-3
