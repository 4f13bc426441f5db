"""Acceptance gate: one test per verification family, exact equality only.

Each test runs the corresponding battery from motivesums.verify, asserts
that every sub-check passed, and enforces the family's runtime budget.
"""
import time

import pytest

from motivesums import verify


def run_within(check, budget_seconds):
    start = time.monotonic()
    results = check()
    elapsed = time.monotonic() - start
    failures = [label for label, ok in results if not ok]
    assert not failures, f"failed checks: {failures}"
    assert elapsed < budget_seconds, f"took {elapsed:.1f}s, budget {budget_seconds}s"
    return results


def test_trivial_l_values_are_one():
    run_within(verify.check_trivial_l_values, 1)


def test_class_sums_over_split_line_are_one():
    run_within(verify.check_unit_class_sums, 10)


def test_symplectic_census_matches_tables():
    run_within(verify.check_table_census, 60)


def test_counting_formulas_match_enumeration():
    run_within(verify.check_counting_formulas, 30)


def test_prime_degree_certificates():
    run_within(verify.check_sl_prime_certificates, 30)


def test_special_linear_integrality_certificates():
    run_within(verify.check_sl_integrality, 120)


def test_symplectic_certificates():
    run_within(verify.check_sp_certificates, 120)


def test_base_change_polynomial_law():
    run_within(verify.check_base_change_polynomial, 10)


def test_exponential_sum_transforms():
    run_within(verify.check_lefschetz_transforms, 10)


def test_conditional_multiplicity_counts():
    run_within(verify.check_multiplicity_counts, 10)


def test_suites_cover_every_check():
    assert set(verify.SUITES["all"]) == set(verify.CHECKS)
    assert set(verify.SUITES["tables"]) | set(verify.SUITES["identities"]) == set(
        verify.CHECKS
    )
