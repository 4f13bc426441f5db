"""Tests for the brute-force finite-field oracles."""
import math

import pytest

from motivesums.classtypes import (
    SLType,
    count_sl,
    count_sp,
    s_count,
    table_goldens,
)
from motivesums.oracle import (
    BudgetError,
    FiniteField,
    factor_monic,
    irreducible_monics,
    matrix_census_tiny,
    self_reciprocal_irreducible_census,
    sl_census,
    sp_census,
)

F2 = FiniteField(2)
F3 = FiniteField(3)
F4 = FiniteField(2, 2)
F5 = FiniteField(5)
F8 = FiniteField(2, 3)
F9 = FiniteField(3, 2)


# ---------------------------------------------------------------------------
# field arithmetic
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("field", [F2, F3, F4, F5, F8, F9], ids=lambda f: f"q{f.q}")
def test_field_axioms(field):
    q = field.q
    for a in range(q):
        assert field.add(a, 0) == a
        assert field.mul(a, 1) == a
        assert field.add(a, field.neg(a)) == 0
        if a:
            assert field.mul(a, field.inv(a)) == 1
    # multiplicative group order
    for a in range(1, q):
        assert field.power(a, q - 1) == 1


def test_field_construction_validation():
    with pytest.raises(ValueError):
        FiniteField(4)
    with pytest.raises(ValueError):
        FiniteField(2, 17)


def test_extension_modulus_shape_and_rootlessness():
    for field in (F4, F8, F9):
        assert len(field.modulus) == field.k + 1 and field.modulus[-1] == 1
        for r in range(field.p):
            assert sum(c * r**i for i, c in enumerate(field.modulus)) % field.p != 0


# ---------------------------------------------------------------------------
# irreducibles
# ---------------------------------------------------------------------------


def test_irreducible_monics_examples():
    assert irreducible_monics(F2, 2, 1) == [(1, 1, 1)]
    assert irreducible_monics(F3, 1, -1) == [(2, 1)]
    assert irreducible_monics(F2, 1) == [(0, 1), (1, 1)]


@pytest.mark.parametrize("field", [F2, F3], ids=lambda f: f"q{f.q}")
@pytest.mark.parametrize("big_d", [1, 2, 3, 4, 5, 6])
def test_gauss_degree_identity(field, big_d):
    total = sum(
        d * len(irreducible_monics(field, d)) for d in range(1, big_d + 1) if big_d % d == 0
    )
    assert total == field.q**big_d


def test_factor_monic_roundtrip():
    for field in (F2, F3, F4):
        # x^4 - 1 style product reassembles
        poly = (field.embed(-1), 0, 0, 0, 1)
        factors = factor_monic(field, poly)
        acc = (1,)
        for p, mult in factors.items():
            for _ in range(mult):
                acc = field.poly_mul(acc, p)
        assert acc == poly


def test_budget_errors():
    with pytest.raises(BudgetError):
        irreducible_monics(F9, 9)
    with pytest.raises(BudgetError):
        sp_census(9, F9)


# ---------------------------------------------------------------------------
# censuses against the counting formulas
# ---------------------------------------------------------------------------


def test_sl_census_small_examples():
    census = sl_census(2, F3)
    assert census[SLType([(1, 2)])] == 2
    assert census[SLType([(2, 1)])] == 1
    assert census[SLType([(1, 1), (1, 1)])] == 0
    assert sum(census.values()) == 3
    assert sum(sl_census(2, F2).values()) == 2


@pytest.mark.parametrize("field", [F2, F3, F4, F5], ids=lambda f: f"q{f.q}")
@pytest.mark.parametrize("n", [2, 3, 4])
def test_sl_census_total_is_q_power(n, field):
    assert sum(sl_census(n, field).values()) == field.q ** (n - 1)


@pytest.mark.parametrize("field", [F2, F3, F4, F5, F8], ids=lambda f: f"q{f.q}")
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_count_sl_matches_census(n, field):
    if math.gcd(n, field.q - 1) != 1:
        pytest.skip("outside the coprime regime exercised here")
    census = sl_census(n, field)
    for d in (x for x in range(1, n + 1) if n % x == 0):
        assert census[SLType([(d, n // d)])] == count_sl(n, d, field.q), (n, d, field.q)


def test_count_sl_matches_census_noncoprime():
    # the norm-fiber formula also holds when gcd(n, q-1) > 1
    for n, field in ((2, F3), (4, F3), (3, F4), (2, F5)):
        census = sl_census(n, field)
        for d in (x for x in range(1, n + 1) if n % x == 0):
            assert census[SLType([(d, n // d)])] == count_sl(n, d, field.q)


@pytest.mark.parametrize("field", [F2, F3, F4, F5], ids=lambda f: f"q{f.q}")
@pytest.mark.parametrize("n", [1, 2, 3])
def test_sp_census_matches_count_sp(n, field):
    for shape, value in sp_census(n, field).items():
        assert value == count_sp(shape, field.q), (field.q, shape.label())


def test_sp_census_matches_tables():
    for row in table_goldens()[(2, "odd")]:
        assert sp_census(2, F3)[row.sp_type] == row.count(3), row.label
    for row in table_goldens()[(2, "even")]:
        assert sp_census(2, F2)[row.sp_type] == row.count(2), row.label


def test_sp_census_rank_one_matches_sl():
    # the rank-1 symplectic and special linear censuses count the same classes
    for field in (F2, F3, F5):
        assert sum(sp_census(1, field).values()) == sum(sl_census(2, field).values())


@pytest.mark.parametrize("field", [F2, F3, F4, F5], ids=lambda f: f"q{f.q}")
@pytest.mark.parametrize("two_n", [2, 4, 6, 8])
def test_self_reciprocal_census_matches_formula(two_n, field):
    assert self_reciprocal_irreducible_census(field, two_n) == s_count(two_n, field.q)


def test_self_reciprocal_examples():
    assert self_reciprocal_irreducible_census(F3, 2) == 1
    assert self_reciprocal_irreducible_census(F2, 4) == 1
    assert self_reciprocal_irreducible_census(F5, 4) == 6


# ---------------------------------------------------------------------------
# matrix-level census
# ---------------------------------------------------------------------------


def test_matrix_census_sl2():
    classes = matrix_census_tiny({"SL": 2}, F3)
    assert len(classes) == 3
    assert all(v == 1 for v in classes.values())
    assert len(matrix_census_tiny({"SL": 2}, F2)) == 2


def test_matrix_census_sp2_equals_sl2():
    assert matrix_census_tiny({"Sp": 2}, F3) == matrix_census_tiny({"SL": 2}, F3)


def test_matrix_census_rejects_higher_rank():
    with pytest.raises(ValueError):
        matrix_census_tiny({"SL": 3}, F2)
