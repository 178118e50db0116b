#!/usr/bin/env python3
"""
Validation script to check code quality without running the test suite.
Useful for quick validation during development.
"""

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

CHECKS = [
    ("python3 -m compileall -q core tests", "Python Syntax Check"),
    ("black --check --quiet core tests", "Formatting Check"),
    ("isort --check-only --profile black core tests", "Import Order Check"),
    ("flake8 --max-line-length 100 core tests", "Lint Check"),
    ("finite-duality sweep --max-size 1 --quiet", "Sweep Smoke Test"),
]


def run_command(cmd, description):
    """Run a command from the repository root and report the result."""
    print(f"\n{'='*60}")
    print(f"Running: {description}")
    print(f"{'='*60}")

    try:
        result = subprocess.run(
            cmd,
            shell=True,  # nosec B602 - commands are hardcoded, not user input
            capture_output=True,
            text=True,
            cwd=ROOT,
        )
    except OSError as e:
        print(f"✗ {description} failed with exception: {e}")
        return False

    if result.returncode == 0:
        print(f"✓ {description} passed")
        if result.stdout:
            print(result.stdout[:500])
        return True
    print(f"✗ {description} failed")
    print(f"Error: {(result.stderr or result.stdout)[:500]}")
    return False


def main():
    """Run all validation checks."""
    print("Finite-Duality Code Validation")
    print("=" * 60)

    results = [run_command(cmd, desc) for cmd, desc in CHECKS]

    print("\n" + "=" * 60)
    print("Validation Summary")
    print("=" * 60)

    passed = sum(results)
    total = len(results)
    print(f"Passed: {passed}/{total}")

    if passed == total:
        print("✓ All validation checks passed!")
        return 0
    print(f"✗ {total - passed} checks failed")
    return 1


if __name__ == "__main__":
    sys.exit(main())
