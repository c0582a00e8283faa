"""
Tests for the shared utilities and design patterns
Validators, JSON/CSV output, quadrature, seeded streams, estimates,
the singleton metaclass and the assertion board
"""

import io
import json
import math
import tempfile
import time
import unittest
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from wavecrest.patterns import AssertionBoard, ConsoleObserver, SingletonMeta, SummaryObserver
from wavecrest.utils.csv_io import format_value, read_rows, write_rows
from wavecrest.utils.estimates import (
    MonteCarloEstimate, check_budget, loglog_slope, summarize, uniform_ball, uniform_sphere
)
from wavecrest.utils.json_encoder import json_dumps_numpy
from wavecrest.utils.quadrature import adaptive_panels, integrate_panels, panel_rule, panels_for_width
from wavecrest.utils.streams import block_layout, generators, resolve_threads, sample_blocks
from wavecrest.utils.validators import (
    BudgetError, ConfigError, DomainError, ExperimentValidator, QuadratureError,
    ValidationError, require
)


class TestValidators(unittest.TestCase):
    """Error hierarchy and experiment configuration validation"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "=" * 60)
        print("VALIDATORS")
        print("=" * 60)

    def test_01_error_hierarchy(self):
        """DomainError is both a ValidationError and a ValueError"""
        print("\n→ Test: Error hierarchy")
        self.assertTrue(issubclass(DomainError, ValidationError))
        self.assertTrue(issubclass(DomainError, ValueError))
        self.assertTrue(issubclass(ConfigError, ValidationError))
        self.assertFalse(issubclass(ConfigError, ValueError))
        with self.assertRaises(DomainError):
            require(False, "always fails")
        require(True, "never raised")
        print("  ✓ Hierarchy verified")

    def test_02_experiment_names(self):
        """Names are normalized; unknown names raise ConfigError"""
        print("\n→ Test: Experiment names")
        self.assertEqual(ExperimentValidator.validate_experiment('  Semicircle '), 'semicircle')
        for bad in ('', None, 'semicircles', 'run'):
            with self.assertRaises(ConfigError):
                ExperimentValidator.validate_experiment(bad)
        print("  ✓ Names validated")

    def test_03_defaults_complete_params(self):
        """Missing keys take the experiment defaults"""
        print("\n→ Test: Default completion")
        params = ExperimentValidator.validate_params('semicircle', {})
        self.assertEqual(params, ExperimentValidator.DEFAULTS['semicircle'])
        params = ExperimentValidator.validate_params('clt', {'samples': '2000', 'kappa': '8'})
        self.assertEqual(params['samples'], 2000)
        self.assertIsInstance(params['samples'], int)
        self.assertEqual(params['kappa'], 8.0)
        self.assertEqual(params['m'], 256)
        print("  ✓ Defaults applied, strings coerced")

    def test_04_unknown_key(self):
        """A key the experiment does not take is a ConfigError"""
        print("\n→ Test: Unknown key")
        with self.assertRaises(ConfigError) as ctx:
            ExperimentValidator.validate_params('semicircle', {'samples': 10})
        self.assertIn('samples', str(ctx.exception))
        print("  ✓ Unknown key rejected")

    def test_05_bad_values(self):
        """Non-integers, non-finite floats and out-of-range values are rejected"""
        print("\n→ Test: Bad values")
        bad = [
            ('clt', {'samples': '1.5'}),
            ('clt', {'kappa': 'nan'}),
            ('clt', {'kappa': 'abc'}),
            ('clt', {'m': 0}),
            ('clt', {'r': 4.0}),
            ('clt', {'seed': -1}),
            ('scaling3', {'n': 2}),
            ('scaling3', {'k_max': -1}),
            ('kernelcheck', {'n': 0}),
            ('scaling2', {'rT': 0}),
        ]
        for experiment, params in bad:
            with self.assertRaises(ConfigError, msg=f"{experiment} {params}"):
                ExperimentValidator.validate_params(experiment, params)
        print(f"  ✓ {len(bad)} invalid parameter sets rejected")

    def test_06_scaling2_sweep_dimension(self):
        """n = 0 is the scaling2 sweep over n in {2, 3, 4}"""
        print("\n→ Test: scaling2 n = 0")
        self.assertEqual(ExperimentValidator.validate_params('scaling2', {'n': '0'})['n'], 0)
        self.assertEqual(ExperimentValidator.validate_params('scaling2', {'n': 3})['n'], 3)
        print("  ✓ Sweep dimension accepted")


class TestSerialization(unittest.TestCase):
    """JSON and CSV output"""

    def test_01_json_numpy_and_complex(self):
        """numpy scalars, arrays and complex numbers serialize; keys are sorted"""
        print("\n→ Test: JSON encoding")
        text = json_dumps_numpy({'z': np.float64(0.5), 'a': np.arange(3), 'c': 1 - 2j,
                                 'b': np.bool_(True)})
        self.assertEqual(text, '{"a": [0, 1, 2], "b": true, "c": [1.0, -2.0], "z": 0.5}')
        self.assertEqual(json.loads(text)['c'], [1.0, -2.0])
        print("  ✓ JSON encoding verified")

    def test_02_csv_format(self):
        """Floats keep 17 significant digits, booleans are lower case"""
        print("\n→ Test: CSV cell format")
        self.assertEqual(format_value(0.1), '0.10000000000000001')
        self.assertEqual(format_value(np.int64(7)), '7')
        self.assertEqual(format_value(True), 'true')
        self.assertEqual(format_value(float('nan')), 'nan')
        self.assertEqual(float(format_value(1 / 3)), 1 / 3)
        print("  ✓ Cell format verified")

    def test_03_csv_file(self):
        """write_rows creates parents, uses LF endings and checks row widths"""
        print("\n→ Test: CSV file")
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'nested' / 'out.csv'
            write_rows(path, ['k', 'value'], [[0, 0.25], [1, 1e-300]])
            raw = path.read_bytes()
            self.assertNotIn(b'\r', raw)
            self.assertTrue(raw.startswith(b'k,value\n0,0.25\n'))
            rows = read_rows(path)
            self.assertEqual(float(rows[1]['value']), 1e-300)
            with self.assertRaises(ValueError):
                write_rows(path, ['k', 'value'], [[0]])
        print("  ✓ CSV file verified")


class TestQuadrature(unittest.TestCase):
    """Panel Gauss-Legendre quadrature"""

    def test_01_panel_rule_exactness(self):
        """Order-16 panels integrate polynomials of degree 31 exactly"""
        print("\n→ Test: Panel rule exactness")
        nodes, weights = panel_rule(-1.0, 2.0, 3, order=16)
        self.assertEqual(nodes.shape, (48,))
        self.assertAlmostEqual(float(weights.sum()), 3.0, places=13)
        value = float(np.dot(weights, nodes ** 31))
        self.assertAlmostEqual(value / ((2.0 ** 32 - 1.0) / 32.0), 1.0, places=12)
        self.assertEqual(panels_for_width(0.0, 1.0, 0.3), 4)
        self.assertEqual(panels_for_width(1.0, 1.0, 0.3), 1)
        print("  ✓ Exactness verified")

    def test_02_oscillatory_integral(self):
        """int_0^{20 pi} x sin(x)^2 dx = 100 pi^2"""
        print("\n→ Test: Oscillatory integral")
        value = integrate_panels(lambda x: x * np.sin(x) ** 2, 0.0, 20 * math.pi, 0.5 * math.pi)
        self.assertAlmostEqual(value / (100 * math.pi ** 2), 1.0, places=12)
        self.assertEqual(integrate_panels(np.cos, 2.0, 2.0, 1.0), 0.0)
        print("  ✓ Oscillatory integral verified")

    def test_03_adaptive_refinement(self):
        """Refinement settles on smooth integrands and raises when it cannot"""
        print("\n→ Test: Adaptive refinement")
        self.assertAlmostEqual(adaptive_panels(np.sin, 0.0, math.pi, 1.0), 2.0, places=12)
        with self.assertRaises(QuadratureError):
            adaptive_panels(lambda x: np.sqrt(np.abs(x - 1.0 / 3.0)), 0.0, 1.0, 1.0,
                            rel_err=1e-15, abs_err=0.0, max_refinements=1)
        print("  ✓ Refinement verified")


class TestStreams(unittest.TestCase):
    """Seeded block streams"""

    def test_01_block_layout(self):
        """Blocks cover the request in order"""
        print("\n→ Test: Block layout")
        layout = block_layout(10, width=1 << 19)
        self.assertEqual(layout, [(0, 2), (2, 2), (4, 2), (6, 2), (8, 2)])
        layout = block_layout(5000, width=1)
        self.assertEqual(layout, [(0, 5000)])
        print("  ✓ Layout verified")

    def test_02_thread_count_invariance(self):
        """Draws depend on the seed only, never on the worker count"""
        print("\n→ Test: Thread-count invariance")

        def draw(rng, rows):
            return rng.standard_normal((rows, 600))

        one = sample_blocks(11, 5000, 600, draw, threads=1)
        four = sample_blocks(11, 5000, 600, draw, threads=4)
        self.assertGreater(len(block_layout(5000, 600)), 1)
        np.testing.assert_array_equal(one, four)
        other = sample_blocks(12, 5000, 600, draw, threads=1)
        self.assertFalse(np.array_equal(one, other))
        print("  ✓ Invariance verified")

    def test_03_generators(self):
        """Spawned generators are reproducible and distinct"""
        print("\n→ Test: Generators")
        a = [g.random() for g in generators(3, 3)]
        b = [g.random() for g in generators(3, 3)]
        self.assertEqual(a, b)
        self.assertEqual(len(set(a)), 3)
        self.assertEqual(resolve_threads(3), 3)
        self.assertGreaterEqual(resolve_threads(None), 1)
        self.assertGreaterEqual(resolve_threads(0), 1)
        print("  ✓ Generators verified")


class TestEstimates(unittest.TestCase):
    """Monte Carlo estimates and sampling helpers"""

    def test_01_summarize_and_scale(self):
        """Mean, standard error and scaling"""
        print("\n→ Test: summarize")
        result = summarize(np.array([1.0, 2.0, 3.0, 4.0]), seed=5)
        self.assertEqual(result.estimate, 2.5)
        self.assertAlmostEqual(result.std_error, math.sqrt(5.0 / 3.0) / 2.0, places=14)
        self.assertEqual(result.samples, 4)
        scaled = result.scaled(-2.0)
        self.assertEqual(scaled.estimate, -5.0)
        self.assertAlmostEqual(scaled.std_error, 2.0 * result.std_error, places=14)
        self.assertEqual(result.to_dict()['seed'], 5)
        self.assertEqual(float(result), 2.5)
        print("  ✓ Estimates verified")

    def test_02_budget_check(self):
        """Too-noisy estimates raise BudgetError unless below the floor"""
        print("\n→ Test: Budget check")
        noisy = MonteCarloEstimate(1.0, 0.2, 100, 0)
        with self.assertRaises(BudgetError):
            check_budget(noisy, 0.05)
        self.assertIs(check_budget(noisy, 0.5), noisy)
        tiny = MonteCarloEstimate(1e-10, 1e-9, 100, 0)
        self.assertIs(check_budget(tiny, 0.05, floor=1e-8), tiny)
        print("  ✓ Budget check verified")

    def test_03_uniform_points(self):
        """Ball points lie inside the ball, sphere points on the sphere"""
        print("\n→ Test: Uniform points")
        rng = generators(0, 1)[0]
        ball = uniform_ball(rng, (20000,), 3)
        radius = np.linalg.norm(ball, axis=1)
        self.assertTrue(np.all(radius <= 1.0))
        # P(|x| <= 1/2) = 1/8 in three dimensions
        self.assertAlmostEqual(float(np.mean(radius <= 0.5)), 0.125, delta=0.01)
        sphere = uniform_sphere(rng, (100, 2), 4)
        np.testing.assert_allclose(np.linalg.norm(sphere, axis=-1), 1.0, rtol=1e-14)
        print("  ✓ Uniform points verified")

    def test_04_loglog_slope(self):
        """Slope of an exact power law"""
        print("\n→ Test: log-log slope")
        x = [1.0, 3.0, 9.0, 27.0]
        self.assertAlmostEqual(loglog_slope(x, [v ** -1.5 for v in x]), -1.5, places=12)
        print("  ✓ Slope verified")


class TestPatterns(unittest.TestCase):
    """Singleton metaclass and the assertion board"""

    def test_01_singleton(self):
        """Same instance until reset"""
        print("\n→ Test: Singleton")

        class Table(metaclass=SingletonMeta):
            def __init__(self):
                self.value = object()

        first = Table()
        self.assertIs(first, Table())
        Table.reset()
        self.assertIsNot(first, Table())
        print("  ✓ Singleton verified")

    def test_02_assertion_board(self):
        """Outcomes reach every observer; failures are counted"""
        print("\n→ Test: Assertion board")
        board = AssertionBoard()
        stream = io.StringIO()
        console = ConsoleObserver(stream)
        summary = SummaryObserver()
        board.attach(console)
        board.attach(summary)

        self.assertTrue(board.check('tail', 'exponent', True, 'slope -0.6'))
        self.assertTrue(board.all_passed)
        self.assertFalse(board.check('clt', 'gaussian_fit', np.bool_(False), 'KS 0.1'))
        self.assertFalse(board.all_passed)

        lines = stream.getvalue().splitlines()
        self.assertEqual(len(lines), 2)
        self.assertIn('PASS', lines[0])
        self.assertIn('tail.exponent', lines[0])
        self.assertIn('FAIL', lines[1])
        self.assertEqual(summary.for_experiment('clt'),
                         [{'experiment': 'clt', 'name': 'gaussian_fit', 'passed': False,
                           'detail': 'KS 0.1'}])

        board.detach(console)
        board.check('tail', 'chernoff_y=1', True, 'ok')
        self.assertEqual(len(stream.getvalue().splitlines()), 2)
        self.assertEqual(len(summary.for_experiment('tail')), 2)
        print("  ✓ Board verified")

    def test_03_singleton_threads(self):
        """Threads asking for the table at once share one construction"""
        print("\n→ Test: Singleton under threads")
        built = []

        class Table(metaclass=SingletonMeta):
            def __init__(self):
                time.sleep(0.01)
                built.append(self)

        try:
            with ThreadPoolExecutor(max_workers=8) as pool:
                tables = list(pool.map(lambda _: Table(), range(32)))
        finally:
            Table.reset()
        self.assertEqual(len(built), 1)
        self.assertTrue(all(table is built[0] for table in tables))
        print("  ✓ Built once")


if __name__ == '__main__':
    unittest.main(verbosity=2)
