"""
Experiment runner
Validates configurations, runs experiments and writes their CSV / JSON artifacts
"""

import configparser
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO

from .. import version_string
from ..patterns.observer import AssertionBoard, ConsoleObserver, SummaryObserver
from ..utils.csv_io import write_rows
from ..utils.json_encoder import json_dumps_numpy
from ..utils.validators import ConfigError, ExperimentValidator
from .experiments import EXPERIMENTS


@dataclass(frozen=True)
class ExperimentConfig:
    """
    One validated experiment run: name plus its complete parameter set

    Build through from_mapping so defaults are filled in and unknown keys rejected.
    """
    experiment: str
    params: Dict[str, Any]

    @classmethod
    def from_mapping(cls, experiment: str, params: Optional[Dict[str, Any]] = None) -> 'ExperimentConfig':
        """
        Raises:
            ConfigError: On an unknown experiment, unknown keys or invalid values
        """
        name = ExperimentValidator.validate_experiment(experiment)
        return cls(name, ExperimentValidator.validate_params(name, dict(params or {})))

    @property
    def seed(self) -> int:
        return self.params['seed']


def load_config(path: str) -> List[ExperimentConfig]:
    """
    Read an experiment config file: one [section] per experiment, key = value lines

    Every section is validated before anything runs.

    Returns:
        One ExperimentConfig per section, in file order

    Raises:
        ConfigError: On a missing or unreadable file, unknown sections or keys
    """
    if not Path(path).is_file():
        raise ConfigError(f"Config file not found: {path}")
    parser = configparser.ConfigParser()
    # keys are case-sensitive (rT)
    parser.optionxform = str
    try:
        parser.read(path, encoding='utf-8')
    except configparser.Error as e:
        raise ConfigError(f"Cannot parse config file {path}: {e}")
    if not parser.sections():
        raise ConfigError(f"Config file {path} has no experiment sections")

    return [ExperimentConfig.from_mapping(section, dict(parser.items(section)))
            for section in parser.sections()]


class ExperimentRunner:
    """
    Runs named experiments and records their assertion outcomes

    Outputs go to <out_dir>/<experiment>.csv and <experiment>.json; the
    params key out_path overrides out_dir for one experiment. Every CSV row
    carries the seed and the version string; nothing time-dependent is written.
    """

    def __init__(self, out_dir: str, threads: Optional[int] = None, stream: Optional[TextIO] = None):
        self.out_dir = Path(out_dir)
        self.threads = threads
        self.board = AssertionBoard()
        self.summary = SummaryObserver()
        self.board.attach(ConsoleObserver(stream))
        self.board.attach(self.summary)
        logging.info(f"ExperimentRunner writing to {self.out_dir} ({threads or 'all'} threads)")

    def run(self, experiment: str, params: Optional[Dict[str, Any]] = None) -> bool:
        """
        Validate and run one experiment

        Args:
            experiment: Experiment name
            params: Raw parameters; missing keys take the experiment defaults

        Returns:
            True if every assertion of the experiment passed

        Raises:
            ConfigError: On an invalid experiment or parameter set
        """
        return self.execute(ExperimentConfig.from_mapping(experiment, params))

    def run_config(self, path: str) -> bool:
        """Run every section of a config file; True if all assertions passed"""
        runs = load_config(path)
        logging.info(f"Running {len(runs)} experiments from {path}")
        results = [self.execute(config) for config in runs]
        return all(results)

    def execute(self, config: ExperimentConfig) -> bool:
        """Run a validated configuration and write its artifacts"""
        name, params = config.experiment, config.params
        logging.info(f"Experiment {name}: {params}")
        output = EXPERIMENTS[name](params, self.board, self.threads)
        out_dir = Path(params['out_path']) if params['out_path'] else self.out_dir
        seed = config.seed
        version = version_string()

        assertions = self.summary.for_experiment(name)
        passed = all(a['passed'] for a in assertions)
        csv_path = write_rows(
            out_dir / f"{name}.csv",
            list(output.header) + ['seed', 'version'],
            [list(row) + [seed, version] for row in output.rows],
        )
        document = {
            'experiment': name,
            'params': {k: v for k, v in params.items() if k != 'out_path'},
            'seed': seed,
            'version': version,
            'passed': passed,
            'assertions': assertions,
            'summary': output.summary,
        }
        json_path = out_dir / f"{name}.json"
        json_path.write_text(json_dumps_numpy(document, indent=2) + '\n', encoding='utf-8')
        logging.info(f"Experiment {name} {'passed' if passed else 'FAILED'}: "
                     f"wrote {csv_path} and {json_path}")
        return passed
