#!/usr/bin/env python3
"""
Installation check
Verifies the Python version, the numerical stack, the calibration fixture
and write access to the output directory
"""

import importlib
import importlib.util
import os
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / 'src'))


class InstallationVerifier:
    """Runs the checks and collects successes, warnings and errors"""

    PACKAGES = {
        'numpy': 'arrays, recurrences, Philox streams',
        'scipy': 'Bessel functions, special functions, statistics',
        'dotenv': 'config/.env loading (python-dotenv)',
    }
    TEST_PACKAGES = {
        'pytest': 'test runner',
        'coverage': 'coverage measurement',
        'hypothesis': 'property-based tests',
    }

    def __init__(self):
        self.errors = []
        self.warnings = []
        self.success = []

    def print_header(self, title):
        print("\n" + "=" * 60)
        print(f" {title}")
        print("=" * 60)

    def check_python_version(self):
        print("\n🐍 Python version...")
        version = sys.version_info
        version_str = f"{version.major}.{version.minor}.{version.micro}"
        if version < (3, 8):
            self.errors.append(f"Python {version_str} is not supported; 3.8+ is required")
            print(f"   ❌ Python {version_str} - 3.8 or newer required")
        else:
            self.success.append(f"Python {version_str}")
            print(f"   ✅ Python {version_str}")

    def check_packages(self):
        print("\n📦 Packages...")
        for packages, required in ((self.PACKAGES, True), (self.TEST_PACKAGES, False)):
            for package, description in packages.items():
                if importlib.util.find_spec(package) is None:
                    if required:
                        self.errors.append(f"Package {package} not installed")
                        print(f"   ❌ {package} - NOT INSTALLED ({description})")
                    else:
                        self.warnings.append(f"Test package {package} not installed")
                        print(f"   ⚠️  {package} - not installed ({description})")
                    continue
                module = importlib.import_module(package)
                version = getattr(module, '__version__', 'unknown')
                self.success.append(f"{package} {version}")
                print(f"   ✅ {package} {version} - {description}")

    def check_calibration(self):
        print("\n📐 Calibration fixture...")
        try:
            from wavecrest.specfun.calibration import CalibrationTable
            table = CalibrationTable()
            self.success.append(f"Calibration {table.path}")
            print(f"   ✅ {len(table.names())} constants from {table.path}")
        except Exception as e:
            self.errors.append(f"Calibration fixture unusable: {e}")
            print(f"   ❌ {e}")

    def check_output_dir(self):
        print("\n📝 Output directory...")
        out = Path(os.environ.get('WAVECREST_OUT', 'results'))
        try:
            out.mkdir(parents=True, exist_ok=True)
            probe = out / '.write_probe'
            probe.write_text('ok')
            probe.unlink()
            self.success.append(f"Writable {out}")
            print(f"   ✅ {out} is writable")
        except OSError as e:
            self.errors.append(f"Cannot write to {out}: {e}")
            print(f"   ❌ Cannot write to {out}: {e}")

    def print_summary(self):
        self.print_header("SUMMARY")
        print(f"\n   ✅ Passed: {len(self.success)}")
        print(f"   ⚠️  Warnings: {len(self.warnings)}")
        print(f"   ❌ Errors: {len(self.errors)}")
        for error in self.errors:
            print(f"   • {error}")
        for warning in self.warnings:
            print(f"   • {warning}")
        print("\n" + "=" * 60)
        if self.errors:
            print("❌ wavecrest is NOT ready to run")
            return False
        print("✅ wavecrest is ready: python run_wavecrest.py semicircle")
        return True

    def run_verification(self):
        self.print_header("WAVECREST INSTALLATION CHECK")
        self.check_python_version()
        self.check_packages()
        if not self.errors:
            self.check_calibration()
        self.check_output_dir()
        return self.print_summary()


def main():
    if not InstallationVerifier().run_verification():
        sys.exit(1)


if __name__ == '__main__':
    main()
