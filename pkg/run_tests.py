#!/usr/bin/env python
"""
Simple script to run the bs-decomp test suite.

This script runs the unit tests and, on request, the exhaustive acceptance
checks, writing an HTML report and a coverage report.
"""

import argparse
import os
import sys

import pytest


def run_tests(exhaustive=False, sweep_max_degree=None):
    """
    Run the bs-decomp tests.

    Args:
        exhaustive: Whether to include the tests marked exhaustive
        sweep_max_degree: Largest base degree for the exhaustive tests
    """
    sys.path.insert(0, os.path.abspath(os.path.dirname(__file__)))

    print("Testing bs-decomp...")

    report_dir = "test_reports"
    os.makedirs(report_dir, exist_ok=True)

    args = [
        "-v",
        f"--html={report_dir}/report.html",
        "--self-contained-html",
        "--cov=bs_decomp",
        f"--cov-report=html:{report_dir}/coverage",
        "--cov-report=term",
    ]
    if not exhaustive:
        args += ["-m", "not exhaustive"]
    if sweep_max_degree is not None:
        args.append(f"--sweep-max-degree={sweep_max_degree}")
    args.append("tests")

    result = pytest.main(args)

    print("\n=== Test Summary ===")
    print(f"Result: {'SUCCESS' if result == 0 else 'FAILURE'}")
    print("===================\n")

    return 0 if result == 0 else 1


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Run the bs-decomp tests")
    parser.add_argument(
        "--exhaustive", "-e",
        action="store_true",
        help="Also run the exhaustive acceptance checks"
    )
    parser.add_argument(
        "--sweep-max-degree",
        type=int,
        default=None,
        help="Largest base degree for the exhaustive checks"
    )
    args = parser.parse_args()

    sys.exit(run_tests(exhaustive=args.exhaustive, sweep_max_degree=args.sweep_max_degree))
