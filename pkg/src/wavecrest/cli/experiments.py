"""
Named experiments
Each experiment runs library operations, publishes its built-in assertions
on the board and returns the rows and summary the runner writes out
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from ..kernel.moments import normalized_second_moment, second_moment_mc, second_moment_sweep
from ..kernel.trace import cap_volume, kernel_trace_integral
from ..mcwave.experiments import (
    clt_experiment, fit_tail_exponent, ks_distance, sample_standardized, tail_experiment
)
from ..mcwave.results import CHARFN_COLUMNS, TAIL_COLUMNS, charfn_table, tail_table
from ..patterns.observer import AssertionBoard
from ..quadform.statistics import (
    charfn_radius, gaussian_charfn_gap_bound, lyapunov_ratio, qf_charfn_standardized, qf_variance
)
from ..specfun.asymptotics import addition_formula_residual
from ..specfun.calibration import calibrated
from ..sphere2.spectra import SphereSpec, bessel_tail_bound, semicircle_table, spectrum
from ..sphere2.wavescale import (
    RATIO_FLOOR, wave_scale_contrast, wave_scale_diagnostic, wave_scale_shares
)
from ..trimoment.bound import bessel_cross_integral, cross_decay_bound, third_moment_sweep
from ..trimoment.caps import CapPair, cap_gegenbauer_integral, cap_gegenbauer_integral_mc
from ..utils.streams import generators
from ..utils.validators import ConfigError

CLT_T_GRID = (0.5, 1.0, 2.0)
TAIL_Y_GRID = (1.0, 1.5, 2.0, 2.5, 3.0)
SUM_RULE_TOLERANCE = 1.e-8
ADDITION_TOLERANCE = 1.e-9
ORTHOGONALITY_TOLERANCE = 1.e-10
ADDITION_ORDERS = (0.5, 1.0, 1.5)
ADDITION_RADIUS = 40.0
DECAY_DEGREES = (1, 2, 3, 5, 10, 20, 50, 100)
CROSS_DECAY_X = (2.0, 5.0, 10.0)
CROSS_DECAY_ORDERS = (0.0, 1.0, 2.0)
CROSS_DECAY_M_MAX = 100
CAP_PAIRS = 20
CAP_MC_SAMPLES = 20_000
# scaled radius for the Monte Carlo cross-check of I2; MC variance grows like (rT)^n
MC_CHECK_RT = 5.0


@dataclass
class ExperimentOutput:
    """CSV grid (header and rows) plus the JSON summary of one experiment"""
    header: List[str]
    rows: List[List[Any]]
    summary: Dict[str, Any] = field(default_factory=dict)


ExperimentFn = Callable[[Dict[str, Any], AssertionBoard, Optional[int]], ExperimentOutput]


def _sphere_spec(params: Dict[str, Any]) -> SphereSpec:
    # r = 0 derives the radius from kappa
    if params.get('r', 0.0) > 0:
        return SphereSpec(params['m'], params['r'])
    return SphereSpec.from_kappa(params['m'], params['kappa'])


def run_semicircle(params: Dict[str, Any], board: AssertionBoard,
                   threads: Optional[int] = 1) -> ExperimentOutput:
    """Exact, Bessel and semicircle eigenvalues of the S^2 cap spectrum"""
    spec = _sphere_spec(params)
    kappa = spec.kappa
    table = semicircle_table(spec)
    exact = np.array([row[1] for row in table])

    bulk = [abs(e - semi) / semi for k, e, _, semi in table if k <= 0.8 * kappa and semi > 0]
    bulk_error = max(bulk) if bulk else 0.0
    board.check('semicircle', 'bulk', bulk_error < 0.15,
                f"max relative error {bulk_error:.4f} < 0.15 for k <= 0.8 kappa")

    cutoff = kappa + 3.0 * kappa ** (1.0 / 3.0)
    beyond = [exact[k] / exact[0] for k in range(spec.m + 1) if k > cutoff]
    if beyond:
        worst = max(beyond)
        board.check('semicircle', 'decay', worst < 1.e-6,
                    f"max lambda_k / lambda_0 = {worst:.3e} < 1e-6 for k > {cutoff:.2f}")

    tail = [(k, bessel / bessel_tail_bound(k, kappa))
            for k, _, bessel, _ in table if k >= 2.0 * kappa]
    if tail:
        k_worst, ratio = max(tail, key=lambda item: item[1])
        board.check('semicircle', 'bessel_tail', ratio <= 1.0,
                    f"lambda_bessel / (exp(-c k^(1/2)) / kappa^2) = {ratio:.3e} <= 1 "
                    f"for k >= 2 kappa (worst k = {k_worst})")

    s = spectrum(spec)
    total = s.power_sum(1)
    drift = abs(total - 1.0 / (4.0 * math.pi))
    board.check('semicircle', 'sum_rule', drift <= SUM_RULE_TOLERANCE,
                f"|sum lambda - 1/(4 pi)| = {drift:.2e} <= {SUM_RULE_TOLERANCE:g}")

    # sigma^2 pi^4 kappa tends to 2/3 once m >= 4 kappa
    variance_scaled = qf_variance(s) * math.pi ** 4 * kappa * 1.5
    if spec.m >= 4 * kappa:
        board.check('semicircle', 'variance', 0.9 <= variance_scaled <= 1.1,
                    f"1.5 sigma^2 pi^4 kappa = {variance_scaled:.4f} in [0.9, 1.1]")

    return ExperimentOutput(
        header=['k', 'lambda_exact', 'lambda_bessel', 'semicircle'],
        rows=[list(row) for row in table],
        summary={
            'm': spec.m,
            'r': spec.r,
            'kappa': kappa,
            'sum_lambda': total,
            'bulk_relative_error': bulk_error,
            'variance_scaled': variance_scaled,
        },
    )


def run_clt(params: Dict[str, Any], board: AssertionBoard,
            threads: Optional[int] = 1) -> ExperimentOutput:
    """KS distance and characteristic function of the standardized cap energy"""
    spec = _sphere_spec(params)
    s = spectrum(spec)
    radius = charfn_radius(s)
    t_grid = [t for t in CLT_T_GRID if t < radius]
    dropped = [t for t in CLT_T_GRID if t >= radius]
    if dropped:
        logging.warning(f"Dropping charfn grid points {dropped}: series radius is {radius:.4g}")

    result = clt_experiment(s, params['samples'], params['seed'], t_grid, threads)
    if radius > 1.0:
        gap = abs(qf_charfn_standardized(s, 1.0) - math.exp(-0.5))
        allowed = gaussian_charfn_gap_bound(s)
        board.check('clt', 'charfn_gaussian', gap <= allowed,
                    f"|phi(1) - exp(-1/2)| = {gap:.4f} <= C * Lyapunov ratio = {allowed:.4f}")
    threshold = calibrated('ks_clt_threshold')
    board.check('clt', 'gaussian_fit', result.ks_distance < threshold,
                f"KS distance {result.ks_distance:.4f} < {threshold:g} "
                f"(m={spec.m}, kappa={spec.kappa:g})")

    tolerance = 3.0 / math.sqrt(params['samples'])
    for point in result.charfn_grid:
        gap = abs(point.empirical - point.exact)
        board.check('clt', f"charfn_t={point.t:g}", gap <= tolerance,
                    f"|empirical - exact| = {gap:.4f} <= {tolerance:.4f}")

    return ExperimentOutput(
        header=list(CHARFN_COLUMNS),
        rows=charfn_table(result),
        summary={
            'm': spec.m,
            'kappa': spec.kappa,
            'lyapunov_ratio': lyapunov_ratio(s),
            'charfn_radius': radius,
            'result': result.to_dict(),
        },
    )


def run_scaling2(params: Dict[str, Any], board: AssertionBoard,
                 threads: Optional[int] = 1) -> ExperimentOutput:
    """Second-moment decay in rT by radial quadrature, with a Monte Carlo cross-check"""
    dimensions = [2, 3, 4] if params['n'] == 0 else [params['n']]
    rT_values = np.geomspace(params['rT'] / 16.0, params['rT'], 5)
    rows = []
    slopes = {}
    checks = {}
    for n in dimensions:
        sweep = second_moment_sweep(n, rT_values)
        rows.extend([n, rT, value] for rT, value in sweep.points)
        slopes[n] = sweep.slope
        target = -(n - 1.0)
        board.check('scaling2', f"slope_n={n}", abs(sweep.slope - target) <= 0.15,
                    f"slope {sweep.slope:.4f} within 0.15 of {target:g}")

        quad = normalized_second_moment(n, MC_CHECK_RT)
        mc = second_moment_mc(n, MC_CHECK_RT, params['samples'], params['seed'], threads)
        board.check('scaling2', f"mc_n={n}", abs(mc.estimate - quad) <= 3.0 * mc.std_error,
                    f"MC {mc.estimate:.6e} +/- {mc.std_error:.1e} vs quadrature {quad:.6e} "
                    f"at rT={MC_CHECK_RT:g}")
        checks[n] = {'rT': MC_CHECK_RT, 'quadrature': quad, 'monte_carlo': mc.to_dict()}

    return ExperimentOutput(
        header=['n', 'rT', 'I2'],
        rows=rows,
        summary={'slopes': slopes, 'mc_checks': checks},
    )


def run_scaling3(params: Dict[str, Any], board: AssertionBoard,
                 threads: Optional[int] = 1) -> ExperimentOutput:
    """Third-moment bound decay in rT, dominated Monte Carlo values"""
    n = params['n']
    rT_values = np.geomspace(params['rT'] / 8.0, params['rT'], 4)
    sweep = third_moment_sweep(n, rT_values, params['samples'], params['seed'],
                               params['k_max'] or None, threads)

    # m3 / m2^(3/2) ~ (rT)^(-1/2) with m2 ~ (rT)^(1-n)
    target = -(3.0 * n - 2.0) / 2.0
    if n == 3:
        board.check('scaling3', 'slope', abs(sweep.slope - target) <= 0.3,
                    f"slope {sweep.slope:.4f} within 0.3 of {target:g}")
    else:
        # the pre-asymptotic fit is steeper for n >= 4
        board.check('scaling3', 'slope', sweep.slope <= target + 0.3,
                    f"slope {sweep.slope:.4f} <= {target + 0.3:g}")
    for row in sweep.rows:
        board.check('scaling3', f"dominated_rT={row.rT:g}",
                    abs(row.mc_estimate) <= row.bound + 3.0 * row.mc_std_error,
                    f"|MC| {abs(row.mc_estimate):.4e} <= bound {row.bound:.4e}")

    return ExperimentOutput(
        header=['n', 'rT', 'k_max', 'bound', 'mc_estimate', 'mc_std_error'],
        rows=[[r.n, r.rT, r.k_max, r.bound, r.mc_estimate, r.mc_std_error] for r in sweep.rows],
        summary={'n': n, 'slope': sweep.slope, 'target_slope': target},
    )


def run_tail(params: Dict[str, Any], board: AssertionBoard,
             threads: Optional[int] = 1) -> ExperimentOutput:
    """Two-sided exceedance frequencies against Chernoff bounds"""
    spec = _sphere_spec(params)
    n_samples = params['samples']
    result = tail_experiment(spectrum(spec), n_samples, params['seed'], TAIL_Y_GRID, threads)

    for row in result.tail_rows:
        slack = 3.0 * math.sqrt(row.frequency * (1.0 - row.frequency) / n_samples)
        board.check('tail', f"chernoff_y={row.y:g}", row.frequency <= row.chernoff + slack,
                    f"frequency {row.frequency:.4e} <= bound {row.chernoff:.4e} + {slack:.1e}")
        if row.y == 1.0:
            board.check('tail', 'gaussian_y=1', 0.25 <= row.frequency <= 0.40,
                        f"frequency {row.frequency:.4f} in [0.25, 0.40]")

    slope = fit_tail_exponent(result.tail_rows)
    floor = calibrated('tail_exponent_floor')
    board.check('tail', 'exponent', slope <= -floor,
                f"log-frequency slope in y^2 {slope:.4f} <= -{floor:g}")

    return ExperimentOutput(
        header=list(TAIL_COLUMNS),
        rows=tail_table(result),
        summary={'m': spec.m, 'kappa': spec.kappa, 'tail_slope': slope, 'result': result.to_dict()},
    )


def run_gegencheck(params: Dict[str, Any], board: AssertionBoard,
                   threads: Optional[int] = 1) -> ExperimentOutput:
    """Addition-formula residuals and cap-integral orthogonality, decay and MC agreement"""
    rng = generators(params['seed'], 1)[0]
    count = params['samples']
    nu = rng.choice(ADDITION_ORDERS, count)
    # radii in (0, 40]
    u = ADDITION_RADIUS - rng.uniform(0.0, ADDITION_RADIUS, count)
    v = ADDITION_RADIUS - rng.uniform(0.0, ADDITION_RADIUS, count)
    theta = rng.uniform(0.0, math.pi, count)
    rows = [
        ['addition', i, nu[i], u[i], v[i], theta[i],
         addition_formula_residual(nu[i], u[i], v[i], theta[i])]
        for i in range(count)
    ]
    worst = max(row[-1] for row in rows)
    board.check('gegencheck', 'addition', worst <= ADDITION_TOLERANCE,
                f"max residual {worst:.2e} <= {ADDITION_TOLERANCE:g} over {count} triples")

    full = CapPair.from_thresholds(0.3, -1.0, w=0.5)
    leak = max(abs(cap_gegenbauer_integral(n, k, full)) for n in (3, 4, 5) for k in (1, 2, 7))
    board.check('gegencheck', 'orthogonality', leak <= ORTHOGONALITY_TOLERANCE,
                f"full-sphere cap integral {leak:.2e} <= {ORTHOGONALITY_TOLERANCE:g}")

    caps = CapPair.from_thresholds(0.3, -0.2, w=0.5)
    scaled = []
    for n in (3, 4, 5):
        for k in DECAY_DEGREES:
            value = cap_gegenbauer_integral(n, k, caps)
            scaled.append(abs(value) * k ** (3.0 - 0.5 * n))
            rows.append(['decay', k, n, caps.u, caps.v, caps.w, value])
    constant = calibrated('cap_integral')
    board.check('gegencheck', 'decay', max(scaled) <= constant,
                f"max |I| k^(3 - n/2) = {max(scaled):.4f} <= {constant:g}")

    cross_ratio = 0.0
    for X in CROSS_DECAY_X:
        for order in CROSS_DECAY_ORDERS:
            for m in range(int(2.0 * X) + 1, CROSS_DECAY_M_MAX + 1):
                value = bessel_cross_integral(order, float(m), X)
                bound = cross_decay_bound(m)
                cross_ratio = max(cross_ratio, abs(value) / bound)
                rows.append(['cross_decay', m, order, X, bound, 0.0, value])
    board.check('gegencheck', 'cross_decay', cross_ratio <= 1.0,
                f"max |int u J_nu J_m| / exp(-c m^(1/2)) = {cross_ratio:.3e} <= 1 for m > 2X")

    agree = 0
    for i in range(CAP_PAIRS):
        t_a, t_b = rng.uniform(-0.9, 0.9, 2)
        pair = CapPair.from_thresholds(t_a, t_b, w=rng.uniform(0.2, 1.0))
        exact = cap_gegenbauer_integral(3, 2, pair)
        mc = cap_gegenbauer_integral_mc(3, 2, pair, CAP_MC_SAMPLES, params['seed'] + i, threads)
        agree += abs(exact - mc.estimate) <= 3.0 * mc.std_error + 1.e-12
        rows.append(['mc', i, 3, pair.u, pair.v, pair.w, exact - mc.estimate])
    board.check('gegencheck', 'cap_mc', agree == CAP_PAIRS,
                f"{agree}/{CAP_PAIRS} cap pairs agree with Monte Carlo at 3 sigma")

    return ExperimentOutput(
        header=['check', 'index', 'a', 'b', 'c', 'd', 'value'],
        rows=rows,
        summary={'max_addition_residual': worst, 'max_scaled_cap_integral': max(scaled),
                 'max_cross_decay_ratio': cross_ratio,
                 'cap_pairs_agreeing': agree},
    )


def run_kernelcheck(params: Dict[str, Any], board: AssertionBoard,
                    threads: Optional[int] = 1) -> ExperimentOutput:
    """Second moment and cap kernel traces, each by two independent routes"""
    if params['r'] <= 0:
        raise ConfigError("kernelcheck needs r > 0")
    n, rT, m, r = params['n'], params['rT'], params['m'], params['r']
    budget, seed = params['samples'], params['seed']

    quad = normalized_second_moment(n, rT)
    mc = second_moment_mc(n, rT, budget, seed, threads)
    board.check('kernelcheck', 'second_moment', abs(mc.estimate - quad) <= 3.0 * mc.std_error,
                f"MC {mc.estimate:.6e} +/- {mc.std_error:.1e} vs quadrature {quad:.6e}")
    rows = [['second_moment', n, rT, quad, mc.estimate, mc.std_error]]

    s = spectrum(SphereSpec(m, r))
    for p in (2, 3):
        exact = ((2 * m + 1) * cap_volume(r)) ** p * s.power_sum(p)
        trace = kernel_trace_integral(p, m, r, budget, seed, threads)
        board.check('kernelcheck', f"trace_p={p}", abs(trace.estimate - exact) <= 3.0 * trace.std_error,
                    f"MC {trace.estimate:.6e} +/- {trace.std_error:.1e} vs spectrum {exact:.6e}")
        rows.append([f"trace_p{p}", m, r, exact, trace.estimate, trace.std_error])

    return ExperimentOutput(
        header=['check', 'a', 'b', 'reference', 'mc_estimate', 'mc_std_error'],
        rows=rows,
        summary={'second_moment': quad},
    )


def run_wavescale(params: Dict[str, Any], board: AssertionBoard,
                  threads: Optional[int] = 1) -> ExperimentOutput:
    """Fixed-kappa spectra stay non-Gaussian as m grows"""
    c = params['kappa']
    m_top = params['m']
    m_list = sorted({max(1, m_top // 4), max(1, m_top // 2), m_top})
    ratios = dict(wave_scale_diagnostic(c, m_list))
    shares = dict(wave_scale_shares(c, m_list))
    floor = calibrated('ks_wave_floor')

    rows = []
    for m in m_list:
        z = sample_standardized(spectrum(SphereSpec.from_kappa(m, c)), params['samples'],
                                params['seed'], threads)
        ks = ks_distance(z)
        board.check('wavescale', f"ratio_m={m}", ratios[m] > RATIO_FLOOR,
                    f"Lyapunov ratio {ratios[m]:.4f} > {RATIO_FLOOR:g}")
        board.check('wavescale', f"non_gaussian_m={m}", ks > floor,
                    f"KS distance {ks:.4f} > {floor:g}")
        rows.append([m, c, ratios[m], shares[m], ks])

    contrast = wave_scale_contrast(m_list)
    return ExperimentOutput(
        header=['m', 'kappa', 'lyapunov_ratio', 'lambda0_share', 'ks_distance'],
        rows=rows,
        summary={
            'kappa': c,
            'contrast_rows': [list(row) for row in contrast.rows],
            'contrast_slope': contrast.slope,
        },
    )


EXPERIMENTS: Dict[str, ExperimentFn] = {
    'semicircle': run_semicircle,
    'clt': run_clt,
    'scaling2': run_scaling2,
    'scaling3': run_scaling3,
    'tail': run_tail,
    'gegencheck': run_gegencheck,
    'kernelcheck': run_kernelcheck,
    'wavescale': run_wavescale,
}
