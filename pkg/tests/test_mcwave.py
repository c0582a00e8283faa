"""
Tests for the Monte Carlo layer
Standardized samples, CLT and tail experiments, result files and direct synthesis
"""

import json
import math
import tempfile
import unittest
from pathlib import Path

import numpy as np
from scipy import stats

from wavecrest import version_string
from wavecrest.mcwave import (
    CharfnPoint, MCResult, TailRow, cap_grid, clopper_pearson_upper, clt_experiment,
    direct_cap_energy, empirical_charfn, fit_tail_exponent, ks_distance, real_harmonics,
    restandardize, sample_standardized, tail_experiment, write_charfn_csv, write_tail_csv
)
from wavecrest.quadform import Spectrum, qf_mean, qf_variance, sample_qf
from wavecrest.specfun import calibrated
from wavecrest.sphere2 import SphereSpec, spectrum
from wavecrest.utils.streams import generators
from wavecrest.utils.validators import DomainError


class TestSampling(unittest.TestCase):
    """Standardized local-energy samples"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "=" * 60)
        print("MONTE CARLO")
        print("=" * 60)

    def test_01_chi_square_skewness(self):
        """A one-term form has skewness 2 sqrt(2)"""
        print("\n→ Test: Chi-square skewness")
        z = sample_standardized(Spectrum.from_values([1.0]), 200_000, seed=4)
        cubes = z ** 3
        tolerance = 3.0 * cubes.std() / math.sqrt(len(z))
        self.assertAlmostEqual(float(cubes.mean()), 2.0 * math.sqrt(2.0), delta=tolerance)
        print("  ✓ Skewness verified")

    def test_02_reproducible(self):
        """Same seed, same samples, whatever the thread count"""
        print("\n→ Test: Reproducibility")
        spec = Spectrum.uniform(600)
        a = sample_standardized(spec, 5000, seed=7, threads=1)
        b = sample_standardized(spec, 5000, seed=7, threads=4)
        np.testing.assert_array_equal(a, b)
        self.assertFalse(np.array_equal(a, sample_standardized(spec, 5000, seed=8)))
        with self.assertRaises(DomainError):
            sample_standardized(spec, 999, seed=7)
        print("  ✓ Reproducible")

    def test_03_sphere_moments(self):
        """Sample mean and variance match the spectrum at m = 8, kappa = 4"""
        print("\n→ Test: Sample moments on S^2")
        spec = spectrum(SphereSpec.from_kappa(8, 4.0))
        x = sample_qf(spec, seed=12, count=100_000)
        mean_se = x.std() / math.sqrt(len(x))
        self.assertAlmostEqual(float(x.mean()), qf_mean(spec), delta=3.0 * mean_se)
        self.assertAlmostEqual(float(x.var()) / qf_variance(spec), 1.0, delta=0.05)
        print("  ✓ Moments verified")

    def test_04_charfn_and_ks(self):
        """Conjugate symmetry of the empirical charfn; KS is affine invariant after restandardizing"""
        print("\n→ Test: Empirical charfn and KS")
        z = sample_standardized(Spectrum.uniform(50), 20_000, seed=1)
        phi = empirical_charfn(z, 0.8)
        self.assertAlmostEqual(empirical_charfn(z, -0.8), phi.conjugate(), places=14)
        self.assertEqual(empirical_charfn(z, 0.0), 1.0)
        base = ks_distance(restandardize(z))
        self.assertAlmostEqual(ks_distance(restandardize(3.0 * z + 11.0)), base, places=10)
        self.assertAlmostEqual(float(restandardize(5.0 * z).std()), 1.0, places=12)
        print("  ✓ Symmetry and invariance verified")


class TestCltExperiment(unittest.TestCase):
    """Distance to the Gaussian at large and small kappa"""

    def test_01_large_kappa(self):
        """kappa = 60: KS under the calibrated threshold, charfn within sampling error"""
        print("\n→ Test: CLT at kappa = 60")
        n = 10_000
        spec = spectrum(SphereSpec.from_kappa(256, 60.0))
        result = clt_experiment(spec, n, seed=0, t_grid=[0.5, 1.0, 2.0])
        self.assertLess(result.ks_distance, calibrated('ks_clt_threshold'))
        for point in result.charfn_grid:
            self.assertLess(abs(point.empirical - point.exact), 4.0 / math.sqrt(n), msg=f"t={point.t}")
            self.assertAlmostEqual(point.gaussian, math.exp(-0.5 * point.t ** 2), places=15)
        self.assertEqual(result.n_samples, n)
        self.assertEqual(result.metadata['version'], version_string())
        print(f"  ✓ KS {result.ks_distance:.4f}")

    def test_02_outside_series_domain(self):
        """t beyond the charfn radius fails before any sampling"""
        print("\n→ Test: Charfn domain")
        with self.assertRaises(DomainError):
            clt_experiment(Spectrum.from_values([1.0]), 1000, seed=0, t_grid=[1.0])
        print("  ✓ Domain enforced")

    def test_03_wave_scale(self):
        """kappa = 2 stays far from Gaussian"""
        print("\n→ Test: CLT failure at the wave scale")
        spec = spectrum(SphereSpec.from_kappa(64, 2.0))
        result = clt_experiment(spec, 10_000, seed=0, t_grid=[0.5])
        self.assertGreater(result.ks_distance, calibrated('ks_wave_floor'))
        print(f"  ✓ KS {result.ks_distance:.4f}")

    def test_04_doubling_samples(self):
        """Doubling n_samples keeps every charfn discrepancy inside its 3 / sqrt(n) band"""
        print("\n→ Test: Charfn band under doubling")
        spec = spectrum(SphereSpec.from_kappa(256, 60.0))
        t_grid = [0.5, 1.0, 2.0]
        for n in (10_000, 20_000):
            result = clt_experiment(spec, n, seed=0, t_grid=t_grid)
            band = 3.0 / math.sqrt(n)
            for point in result.charfn_grid:
                gap = abs(point.empirical - point.exact)
                self.assertLessEqual(gap, band, msg=f"n={n}, t={point.t}")
        print("  ✓ Within band at n and 2n")


class TestTailExperiment(unittest.TestCase):
    """Exceedance frequencies against Chernoff bounds"""

    Y_GRID = (1.0, 1.5, 2.0, 2.5, 3.0)

    def test_01_tail(self):
        """Frequencies are plausible, bounded and fall like exp(-c y^2)"""
        print("\n→ Test: Tail frequencies at kappa = 60")
        spec = spectrum(SphereSpec.from_kappa(256, 60.0))
        result = tail_experiment(spec, 100_000, seed=0, y_grid=self.Y_GRID)
        first = result.tail_rows[0]
        self.assertGreater(first.frequency, 0.25)
        self.assertLess(first.frequency, 0.40)
        for row in result.tail_rows:
            self.assertLessEqual(row.frequency, row.chernoff + 0.01, msg=f"y={row.y}")
            self.assertGreaterEqual(row.upper_95, row.frequency)
        self.assertLessEqual(fit_tail_exponent(result.tail_rows), -calibrated('tail_exponent_floor'))
        print("  ✓ Tail verified")

    def test_02_sample_floor(self):
        """y <= 3 needs at least 1e5 samples"""
        print("\n→ Test: Tail sample floor")
        with self.assertRaises(DomainError):
            tail_experiment(Spectrum.uniform(100), 50_000, seed=0, y_grid=[2.0])
        with self.assertRaises(DomainError):
            tail_experiment(Spectrum.uniform(100), 100_000, seed=0, y_grid=[0.0])
        print("  ✓ Floor enforced")

    def test_03_clopper_pearson(self):
        """Zero exceedances in 1e5 draws give about 3e-5"""
        print("\n→ Test: Clopper-Pearson bound")
        self.assertAlmostEqual(clopper_pearson_upper(0, 100_000) / 2.9957e-5, 1.0, delta=1e-4)
        self.assertEqual(clopper_pearson_upper(10, 10), 1.0)
        self.assertGreater(clopper_pearson_upper(5, 1000), 0.005)
        print("  ✓ Bound verified")

    def test_04_fit(self):
        """Exact Gaussian-like rows fit slope -1/2; empty rows are skipped"""
        print("\n→ Test: Tail exponent fit")
        rows = [TailRow(y, math.exp(-0.5 * y * y), 1.0, 1.0) for y in self.Y_GRID]
        rows.append(TailRow(6.0, 0.0, 1.0, 1.0))
        self.assertAlmostEqual(fit_tail_exponent(rows), -0.5, places=10)
        with self.assertRaises(DomainError):
            fit_tail_exponent(rows[:1] + rows[-1:])
        print("  ✓ Fit verified")


class TestResults(unittest.TestCase):
    """JSON and CSV encodings of MCResult"""

    def setUp(self):
        self.result = MCResult(
            n_samples=1000,
            seed=3,
            ks_distance=0.01,
            charfn_grid=[CharfnPoint(1.0, 0.5 + 0.25j, 0.6 - 0.1j, math.exp(-0.5))],
            tail_rows=[TailRow(2.0, 0.05, 0.5, 0.06)],
            metadata={'version': 'v1.0.0'},
        )

    def test_01_json(self):
        """Complex values become [re, im] pairs"""
        print("\n→ Test: JSON result")
        data = json.loads(self.result.to_json())
        self.assertEqual(data['charfn_grid'][0]['empirical'], [0.5, 0.25])
        self.assertEqual(data['charfn_grid'][0]['exact'], [0.6, -0.1])
        self.assertEqual(data['tail_rows'][0]['y'], 2.0)
        self.assertEqual(data['seed'], 3)
        self.assertEqual(self.result.to_json(), self.result.to_json())
        print("  ✓ JSON verified")

    def test_02_csv(self):
        """CSV rows carry seed and version"""
        print("\n→ Test: CSV result files")
        with tempfile.TemporaryDirectory() as tmp:
            charfn = write_charfn_csv(self.result, Path(tmp) / 'charfn.csv').read_text(encoding='utf-8')
            tail = write_tail_csv(self.result, Path(tmp) / 'tail.csv').read_text(encoding='utf-8')
        lines = charfn.splitlines()
        self.assertEqual(lines[0], 't,empirical_re,empirical_im,exact_re,exact_im,gaussian,seed,version')
        self.assertTrue(lines[1].startswith('1,0.5,0.25,0.59999999999999998,'))
        self.assertTrue(lines[1].endswith(',3,v1.0.0'))
        self.assertEqual(tail.splitlines(), ['y,frequency,chernoff,upper_95,seed,version',
                                             '2,0.050000000000000003,0.5,0.059999999999999998,3,v1.0.0'])
        print("  ✓ CSV verified")


class TestDirectSynthesis(unittest.TestCase):
    """Brute-force cap energies from synthesized waves"""

    def test_01_harmonics_orthonormal(self):
        """Real harmonics are orthonormal under the full-sphere product rule"""
        print("\n→ Test: Real harmonics")
        m = 6
        x, phi, weights = cap_grid(m, -1.0)
        basis = real_harmonics(m, x, phi)
        self.assertEqual(basis.shape, (len(x) * len(phi), 2 * m + 1))
        np.testing.assert_allclose(basis.T @ (weights[:, None] * basis), np.eye(2 * m + 1), atol=1e-12)
        print("  ✓ Orthonormal")

    def test_02_full_sphere(self):
        """Over the whole sphere the energy is sum c_j^2 / (4 pi)"""
        print("\n→ Test: Full-sphere energy")
        m, n = 5, 200
        values = direct_cap_energy(m, math.pi, seed=11, n_samples=n)
        c = generators(11, 1)[0].standard_normal((n, 2 * m + 1)) / math.sqrt(2 * m + 1)
        np.testing.assert_allclose(values, np.sum(c * c, axis=1) / (4.0 * math.pi), atol=1e-9)
        print("  ✓ Energy verified")

    def test_03_cap_mean(self):
        """Mean cap energy is 1 / (4 pi)"""
        print("\n→ Test: Cap energy mean")
        values = direct_cap_energy(16, 0.4, seed=2, n_samples=2000)
        se = values.std() / math.sqrt(len(values))
        self.assertAlmostEqual(float(values.mean()), 1.0 / (4.0 * math.pi), delta=3.0 * se)
        print("  ✓ Mean verified")

    def test_04_matches_diagonal_sampler(self):
        """Direct synthesis and the eigenvalue sampler draw the same law"""
        print("\n→ Test: Direct against diagonalized sampler")
        spec = SphereSpec(16, 0.4)
        direct = direct_cap_energy(spec.m, spec.r, seed=21, n_samples=2000)
        diagonal = sample_qf(spectrum(spec), seed=22, count=2000)
        self.assertGreater(stats.ks_2samp(direct, diagonal).pvalue, 0.001)
        print("  ✓ Same distribution")

    def test_05_domain(self):
        """Degree, radius and sample count are checked"""
        print("\n→ Test: Synthesis domain")
        for args in ((33, 0.4, 0, 100), (4, 0.0, 0, 100), (4, 0.4, 0, 99)):
            with self.assertRaises(DomainError, msg=str(args)):
                direct_cap_energy(*args)
        print("  ✓ Domain enforced")


if __name__ == '__main__':
    unittest.main(verbosity=2)
