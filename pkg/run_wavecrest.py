#!/usr/bin/env python3
"""
wavecrest - random-wave central limit experiments

Runs one named experiment, or every section of a config file, writing
<experiment>.csv and <experiment>.json to the output directory.

Usage:
    python run_wavecrest.py <experiment> [--m M] [--kappa K] [--samples N] [-v]
    python run_wavecrest.py run --config experiments.ini
"""

import sys
from pathlib import Path

# Put src on the path so the package runs without installation
sys.path.insert(0, str(Path(__file__).parent / 'src'))

from wavecrest.cli.main import main

if __name__ == '__main__':
    sys.exit(main())
