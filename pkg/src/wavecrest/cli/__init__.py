"""
CLI Module
Configuration, named experiments and the batch runner
"""

from .config import Config
from .experiments import EXPERIMENTS, ExperimentOutput
from .runner import ExperimentConfig, ExperimentRunner, load_config
from .main import main

__all__ = [
    'Config',
    'EXPERIMENTS',
    'ExperimentConfig',
    'ExperimentOutput',
    'ExperimentRunner',
    'load_config',
    'main',
]
