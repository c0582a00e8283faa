"""
Command-line entry point
Runs named wavecrest experiments and reports PASS/FAIL per assertion
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv

from .. import version_string
from ..specfun.calibration import CalibrationTable
from ..utils.validators import ConfigError, ExperimentValidator
from .config import Config
from .runner import ExperimentRunner

# config/.env at the repository root, loaded on every run
DEFAULT_ENV_FILE = Path(__file__).parent.parent.parent.parent / 'config' / '.env'

# flag dest -> experiment parameter key
PARAM_FLAGS = {
    'm': 'm',
    'r': 'r',
    'kappa': 'kappa',
    'n': 'n',
    'rT': 'rT',
    'samples': 'samples',
    'k_max': 'k_max',
    'seed': 'seed',
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='wavecrest',
        description='Random-wave central limit experiments',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Experiments:
  semicircle, clt, scaling2, scaling3, tail, gegencheck, kernelcheck, wavescale

Examples:
  %(prog)s semicircle --m 128 --kappa 51.857
  %(prog)s clt --kappa 60 --m 256 --samples 10000
  %(prog)s --experiment tail --threads 1
  %(prog)s run --config experiments.ini
        """
    )
    parser.add_argument('experiment', nargs='?',
                        help="Experiment name, or 'run' to execute every section of --config")
    parser.add_argument('--experiment', dest='experiment_flag', help='Experiment name')
    parser.add_argument('--config', help='Experiment config file ([section] per experiment)')
    parser.add_argument('--seed', type=int, help='Root seed (default: 0)')
    parser.add_argument('--threads', type=int,
                        help='Worker threads (default: WAVECREST_THREADS or machine parallelism)')
    parser.add_argument('--out', help='Output directory (default: WAVECREST_OUT or results/)')
    parser.add_argument('--m', type=int, help='Spherical harmonic degree')
    parser.add_argument('--r', type=float, help='Cap radius (0 derives it from kappa)')
    parser.add_argument('--kappa', type=float, help='Scale r (m + 1/2)')
    parser.add_argument('--n', type=int, help='Dimension (scaling2: 0 sweeps 2, 3, 4)')
    parser.add_argument('--rT', type=float, help='Largest scaled radius of a sweep')
    parser.add_argument('--samples', type=int, help='Monte Carlo samples')
    parser.add_argument('--k-max', dest='k_max', type=int, help='Series truncation (0: automatic)')
    parser.add_argument('-v', '--verbose', action='store_true', help='Enable verbose (DEBUG) logging')
    parser.add_argument('--env-file', help='Path to .env file for configuration')
    parser.add_argument('--version', action='version', version=f"%(prog)s {version_string()}")
    return parser


def flag_params(args: argparse.Namespace) -> Dict[str, Any]:
    """Parameters given explicitly on the command line"""
    return {key: getattr(args, dest) for dest, key in PARAM_FLAGS.items()
            if getattr(args, dest) is not None}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit status"""
    args = build_parser().parse_args(argv)
    default_env = DEFAULT_ENV_FILE if DEFAULT_ENV_FILE.exists() else None
    if default_env:
        load_dotenv(default_env)

    try:
        Config.from_env(args.env_file)
        Config.validate()
    except ConfigError as e:
        print(f"❌ Configuration error: {e}", file=sys.stderr, flush=True)
        return Config.EXIT_CONFIG

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else getattr(logging, Config.LOG_LEVEL.upper()),
        format=Config.LOG_FORMAT
    )
    if default_env:
        logging.debug(f"Loaded environment variables from {default_env}")
    # a changed WAVECREST_CALIBRATION takes effect on the next lookup
    CalibrationTable.reset()

    threads = args.threads if args.threads is not None else Config.THREADS
    out_dir = args.out or Config.OUT_DIR
    print(f"⚙️  wavecrest {version_string()}: output to {out_dir}", flush=True)

    try:
        if args.threads is not None and args.threads < 0:
            raise ConfigError("--threads must be >= 0")
        runner = ExperimentRunner(out_dir, threads or None)
        experiment = args.experiment_flag or args.experiment
        if experiment == 'run' or (experiment is None and args.config):
            if not args.config:
                raise ConfigError("'run' needs --config FILE")
            passed = runner.run_config(args.config)
        elif experiment is None:
            raise ConfigError(
                f"No experiment given. Valid experiments: "
                f"{', '.join(ExperimentValidator.VALID_EXPERIMENTS)}"
            )
        else:
            passed = runner.run(experiment, flag_params(args))
    except ConfigError as e:
        logging.error(f"Configuration error: {e}")
        print(f"❌ Configuration error: {e}", file=sys.stderr, flush=True)
        return Config.EXIT_CONFIG
    except KeyboardInterrupt:
        print("\n⚠️  Interrupted", flush=True)
        logging.info("Run interrupted by user")
        return Config.EXIT_FAILED
    except Exception as e:
        logging.error(f"Fatal error: {e}", exc_info=True)
        print(f"\n❌ Fatal error: {e}", file=sys.stderr, flush=True)
        return Config.EXIT_FAILED

    if passed:
        print("✅ All assertions passed", flush=True)
        return Config.EXIT_OK
    print("❌ Some assertions failed", flush=True)
    return Config.EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
