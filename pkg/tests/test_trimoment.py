"""
Tests for the third-moment machinery
Cap thresholds, the Gegenbauer cap integral, Bessel cross integrals and the bound
"""

import math
import unittest
import warnings

import numpy as np
from scipy.integrate import quad
from scipy.special import eval_legendre, jv

from wavecrest.specfun import calibrated
from wavecrest.trimoment import (
    CapPair, bessel_cross_integral, cap_gegenbauer_integral, cap_gegenbauer_integral_mc,
    cap_threshold, cross_decay_bound, cross_integrals, default_k_max, sphere_area,
    third_moment_bound, third_moment_mc, third_moment_sweep, third_moment_terms
)
from wavecrest.utils.validators import DomainError, TruncationWarning


def legendre_cap_product(k: int, t_a: float, t_b: float) -> float:
    """Zonal Funk-Hecke value of the normalized n = 3 cap integral"""
    def band(t: float) -> float:
        return eval_legendre(k - 1, t) - eval_legendre(k + 1, t)
    return band(t_a) * band(t_b) / (4.0 * (2 * k + 1) ** 2)


class TestCapGeometry(unittest.TestCase):
    """Cosine thresholds of concentric caps"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "=" * 60)
        print("THIRD MOMENT")
        print("=" * 60)

    def test_01_threshold_values(self):
        """Full, empty and interior thresholds"""
        print("\n→ Test: Cap thresholds")
        self.assertEqual(cap_threshold(0.5, 0.5), -1.0)
        self.assertEqual(cap_threshold(0.5, 1.5), 1.0)
        self.assertAlmostEqual(cap_threshold(0.5, 1.2), 0.575, places=12)
        self.assertEqual(cap_threshold(0.0, 0.8), -1.0)
        self.assertEqual(cap_threshold(0.0, 1.0), -1.0)
        with self.assertRaises(DomainError):
            cap_threshold(1.5, 0.5)
        with self.assertRaises(DomainError):
            cap_threshold(0.5, 1.6)
        print("  ✓ Thresholds verified")

    def test_02_monotone(self):
        """Larger distances give smaller caps"""
        print("\n→ Test: Threshold monotonicity")
        values = [cap_threshold(0.7, x) for x in np.linspace(0.31, 1.7, 50)]
        self.assertTrue(all(b >= a for a, b in zip(values, values[1:])))
        print("  ✓ Monotone")

    def test_03_from_thresholds(self):
        """from_thresholds inverts cap_threshold"""
        print("\n→ Test: Threshold round trip")
        for t_a, t_b in ((0.3, -0.2), (0.9, 0.1), (-0.5, 0.5)):
            caps = CapPair.from_thresholds(t_a, t_b, w=0.6, rT=7.0)
            got_a, got_b = caps.thresholds
            self.assertAlmostEqual(got_a, t_a, places=12)
            self.assertAlmostEqual(got_b, t_b, places=12)
            self.assertEqual(caps.swapped().thresholds, (got_b, got_a))
        with self.assertRaises(DomainError):
            CapPair(0.5, 2.0, 1.0, 1.0)
        print("  ✓ Round trip verified")

    def test_04_sphere_area(self):
        """Surface measures of S^1, S^2, S^3"""
        print("\n→ Test: Sphere areas")
        self.assertAlmostEqual(sphere_area(0), 2.0, places=13)
        self.assertAlmostEqual(sphere_area(1), 2.0 * math.pi, places=13)
        self.assertAlmostEqual(sphere_area(2), 4.0 * math.pi, places=13)
        self.assertAlmostEqual(sphere_area(3), 2.0 * math.pi ** 2, places=12)
        print("  ✓ Areas verified")


class TestCapIntegral(unittest.TestCase):
    """Double integral of C_k^nu over two concentric caps"""

    def test_01_full_sphere(self):
        """A full-sphere cap annihilates every k >= 1"""
        print("\n→ Test: Full sphere")
        caps = CapPair(0.5, 0.9, 0.25, 1.0)
        self.assertEqual(cap_gegenbauer_integral(3, 2, caps), 0.0)
        empty = CapPair(0.5, 0.9, 1.5, 1.0)
        self.assertEqual(cap_gegenbauer_integral(4, 1, empty), 0.0)
        print("  ✓ Degenerate caps verified")

    def test_02_funk_hecke_n3(self):
        """n = 3 matches the zonal Legendre formula"""
        print("\n→ Test: n = 3 closed form")
        caps = CapPair.from_thresholds(0.5, 0.2)
        for k in (1, 2, 5, 10):
            exact = legendre_cap_product(k, 0.5, 0.2)
            value = cap_gegenbauer_integral(3, k, caps)
            self.assertAlmostEqual(value, exact, delta=1e-9 * abs(exact) + 1e-14, msg=f"k={k}")
        self.assertAlmostEqual(legendre_cap_product(1, 0.5, 0.2), 0.75 * 0.96 / 16.0, places=14)
        print("  ✓ Closed form matched")

    def test_03_funk_hecke_n4(self):
        """n = 4, k = 1 matches 2 (2/(3 pi))^2 (sin a sin b)^3"""
        print("\n→ Test: n = 4 closed form")
        t_a, t_b = 0.5, 0.2
        exact = 2.0 * (2.0 / (3.0 * math.pi)) ** 2 * ((1 - t_a ** 2) * (1 - t_b ** 2)) ** 1.5
        value = cap_gegenbauer_integral(4, 1, CapPair.from_thresholds(t_a, t_b))
        self.assertAlmostEqual(value, exact, delta=1e-9 * exact)
        print("  ✓ Closed form matched")

    def test_04_wide_caps(self):
        """Caps past the equator still match the closed form"""
        print("\n→ Test: Wide caps")
        caps = CapPair.from_thresholds(0.3, -0.2)
        for k in (1, 2, 3):
            exact = legendre_cap_product(k, 0.3, -0.2)
            self.assertAlmostEqual(cap_gegenbauer_integral(3, k, caps), exact,
                                   delta=1e-3 * abs(exact) + 1e-8, msg=f"k={k}")
        print("  ✓ Wide caps verified")

    def test_05_swap_symmetry(self):
        """Exchanging the caps leaves the integral unchanged"""
        print("\n→ Test: Swap symmetry")
        caps = CapPair.from_thresholds(0.6, 0.1, w=0.8, rT=3.0)
        self.assertEqual(cap_gegenbauer_integral(5, 3, caps),
                         cap_gegenbauer_integral(5, 3, caps.swapped()))
        print("  ✓ Symmetric")

    def test_06_monte_carlo(self):
        """Quadrature agrees with uniform-pair Monte Carlo"""
        print("\n→ Test: Quadrature against Monte Carlo")
        caps = CapPair.from_thresholds(0.3, -0.2)
        for n, k in ((3, 2), (5, 3)):
            value = cap_gegenbauer_integral(n, k, caps)
            mc = cap_gegenbauer_integral_mc(n, k, caps, 200_000, seed=k)
            self.assertLessEqual(abs(mc.estimate - value), 3.0 * mc.std_error + 1e-5,
                                 msg=f"n={n}, k={k}: {mc.estimate} vs {value}")
        print("  ✓ Routes agree")

    def test_07_decay(self):
        """n = 3 cap integrals sit under the calibrated k^(n/2 - 3) envelope"""
        print("\n→ Test: Decay in k")
        constant = calibrated('cap_integral')
        caps = CapPair.from_thresholds(0.5, 0.2)
        for k in (1, 2, 5, 10, 20):
            value = abs(cap_gegenbauer_integral(3, k, caps))
            self.assertLessEqual(value, constant * k ** -1.5, msg=f"k={k}")
        print("  ✓ Decay verified")

    def test_08_domain(self):
        """n >= 3 and k >= 1"""
        print("\n→ Test: Cap integral domain")
        caps = CapPair.from_thresholds(0.5, 0.2)
        with self.assertRaises(DomainError):
            cap_gegenbauer_integral(2, 1, caps)
        with self.assertRaises(DomainError):
            cap_gegenbauer_integral(3, 0, caps)
        print("  ✓ Domain enforced")


class TestBesselCross(unittest.TestCase):
    """int_0^X u J_nu(u) J_m(u) du"""

    @staticmethod
    def reference(nu: float, m: float, X: float) -> float:
        value, _ = quad(lambda u: u * jv(nu, u) * jv(m, u), 0.0, X,
                        epsabs=1e-13, epsrel=1e-12, limit=2000)
        return value

    def test_01_positive_diagonal(self):
        """nu = m integrals are positive and increasing in X"""
        print("\n→ Test: Diagonal integrals")
        values = [bessel_cross_integral(1.0, 1.0, X) for X in (5.0, 10.0, 20.0, 40.0)]
        self.assertGreater(values[0], 0.0)
        self.assertTrue(all(b > a for a, b in zip(values, values[1:])))
        print("  ✓ Positive and increasing")

    def test_02_reference(self):
        """Panel quadrature matches adaptive quadrature"""
        print("\n→ Test: Cross integrals against scipy quad")
        for nu, m, X in ((0.0, 0.0, 30.0), (1.0, 3.0, 60.0), (2.0, 7.5, 45.0), (0.5, 60.0, 50.0)):
            self.assertAlmostEqual(bessel_cross_integral(nu, m, X), self.reference(nu, m, X),
                                   delta=1e-9, msg=f"nu={nu}, m={m}, X={X}")
        print("  ✓ Reference matched")

    def test_03_high_order(self):
        """Orders far past X contribute nothing"""
        print("\n→ Test: High order")
        self.assertLess(abs(bessel_cross_integral(0.0, 45.0, 10.0)), 1e-8)
        print("  ✓ Negligible")

    def test_04_decay_law(self):
        """For m > 2X the cross integral stays under exp(-c m^(1/2))"""
        print("\n→ Test: Cross-integral decay")
        c = calibrated('bessel_cross_decay')
        for X in (2.0, 5.0, 10.0):
            for nu in (0.0, 1.0, 2.0):
                for m in range(int(2 * X) + 1, 101, 3):
                    bound = cross_decay_bound(m)
                    self.assertAlmostEqual(bound, math.exp(-c * math.sqrt(m)), places=15)
                    self.assertLessEqual(abs(bessel_cross_integral(nu, float(m), X)), bound,
                                         msg=f"X={X}, nu={nu}, m={m}")
        with self.assertRaises(DomainError):
            cross_decay_bound(-1.0)
        print("  ✓ Decay bounded")

    def test_05_batched(self):
        """cross_integrals agrees with the scalar routine for any thread count"""
        print("\n→ Test: Batched cross integrals")
        g1 = cross_integrals(0.5, 30.0, 70, threads=1)
        g3 = cross_integrals(0.5, 30.0, 70, threads=3)
        self.assertEqual(len(g1), 71)
        np.testing.assert_array_equal(g1, g3)
        for k in (0, 7, 40):
            self.assertAlmostEqual(g1[k], bessel_cross_integral(0.5, 0.5 + k, 30.0), places=12)
        print("  ✓ Batched values verified")

    def test_06_domain(self):
        """m < nu and X outside (0, 1e5] are rejected"""
        print("\n→ Test: Cross integral domain")
        for args in ((2.0, 1.0, 10.0), (0.0, 1.0, 0.0), (0.0, 1.0, 2.e5)):
            with self.assertRaises(DomainError, msg=str(args)):
                bessel_cross_integral(*args)
        print("  ✓ Domain enforced")


class TestThirdMomentBound(unittest.TestCase):
    """Assembled bound and its Monte Carlo oracle"""

    def test_01_default_truncation(self):
        """Default k_max leaves a negligible last term and no warning"""
        print("\n→ Test: Default truncation")
        self.assertEqual(default_k_max(20.0), 95)
        terms = third_moment_terms(3, 20.0)
        self.assertEqual(len(terms), 96)
        self.assertTrue(np.all(terms >= 0.0))
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            bound = third_moment_bound(3, 20.0)
        self.assertFalse([w for w in caught if issubclass(w.category, TruncationWarning)])
        self.assertLess(terms[-1], 1e-12 * bound)
        self.assertAlmostEqual(bound, float(np.sum(terms)), places=15)
        print(f"  ✓ Bound {bound:.4e}")

    def test_02_short_truncation(self):
        """k_max below ceil(2 rT) + 20 is refused"""
        print("\n→ Test: Short truncation")
        with self.assertRaises(DomainError):
            third_moment_bound(3, 20.0, k_max=50)
        with self.assertRaises(DomainError):
            third_moment_bound(2, 20.0)
        print("  ✓ Refused")

    def test_03_decreasing(self):
        """The bound decreases in rT"""
        print("\n→ Test: Bound decay")
        values = [third_moment_bound(3, rT) for rT in (10.0, 20.0, 40.0)]
        self.assertTrue(all(b < a for a, b in zip(values, values[1:])))
        print("  ✓ Decreasing")

    def test_04_small_scale_limit(self):
        """The triple integral tends to 1 as rT tends to 0"""
        print("\n→ Test: Monte Carlo small-scale limit")
        mc = third_moment_mc(3, 1e-3, 10_000, seed=2)
        self.assertAlmostEqual(mc.estimate, 1.0, delta=1e-5)
        with self.assertRaises(DomainError):
            third_moment_mc(3, 20.0, 9_999)
        print("  ✓ Limit verified")

    def test_05_dominance(self):
        """Monte Carlo third moment lies under the bound"""
        print("\n→ Test: Bound dominates Monte Carlo")
        bound = third_moment_bound(3, 20.0)
        mc = third_moment_mc(3, 20.0, 200_000, seed=5)
        self.assertLessEqual(abs(mc.estimate), bound + 3.0 * mc.std_error)
        print(f"  ✓ |MC| {abs(mc.estimate):.3e} <= bound {bound:.3e}")

    def test_06_sweep(self):
        """A short sweep reports one row per rT and a falling slope"""
        print("\n→ Test: Sweep")
        sweep = third_moment_sweep(3, [10.0, 20.0], 100_000, seed=3)
        self.assertEqual([row.rT for row in sweep.rows], [10.0, 20.0])
        self.assertTrue(all(row.seed == 3 for row in sweep.rows))
        self.assertLess(sweep.slope, 0.0)
        print(f"  ✓ Slope {sweep.slope:.3f}")


if __name__ == '__main__':
    unittest.main(verbosity=2)
