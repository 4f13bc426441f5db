"""Tests for conjugacy-class types, their centralizer data, and counts."""
from fractions import Fraction

import pytest

from motivesums.classtypes import (
    SLType,
    SpType,
    count_sl,
    count_sp,
    enumerate_sl_types,
    enumerate_sp_types,
    irreducible_count,
    moebius,
    ratio_at_one,
    s_count,
    sl_centralizer_motive,
    sp_centralizer_motive,
    table_goldens,
)
from motivesums.exactalg import RationalFunction, SymbolicPolynomial


def test_moebius_small():
    assert [moebius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


# ---------------------------------------------------------------------------
# SL types
# ---------------------------------------------------------------------------


def test_enumerate_sl_types_counts():
    assert len(enumerate_sl_types(1)) == 1
    assert len(enumerate_sl_types(2)) == 3
    assert len(enumerate_sl_types(3)) == 5
    for n in (2, 3, 4, 5):
        for t in enumerate_sl_types(n):
            assert t.n == n


def test_sl_types_are_multisets():
    assert SLType([(2, 1), (1, 1)]) == SLType([(1, 1), (2, 1)])
    assert SLType([(1, 1), (1, 1)]).pairs == ((1, 1), (1, 1))


def test_sl_centralizer_det_single_block():
    # type n = 2, one degree-2 eigenvalue: det = (1 + t)(1 - t^2 q^2) / kept pieces
    t = SLType([(2, 1)])
    det = sl_centralizer_motive(t).frobenius_det()
    assert det.substitute({"t": 1, "q": 3}).evaluate({}) == 2
    assert det.substitute({"t": 1, "q": 5}).evaluate({}) == 2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ratio_at_one_matches_symbolic_det(n):
    for t in enumerate_sl_types(n):
        det = sl_centralizer_motive(t).frobenius_det()
        num = det.substitute({"t": 1})
        den = det.substitute({"t": SymbolicPolynomial.variable("q")})
        assert RationalFunction(num, den) == ratio_at_one(t)


def test_count_sl_degree_one():
    for n in (2, 3, 4, 5, 6):
        for q in (2, 3, 4, 5, 7, 8, 9):
            import math

            assert count_sl(n, 1, q) == math.gcd(n, q - 1)


def test_count_sl_examples():
    assert count_sl(2, 2, 3) == 1
    assert count_sl(2, 2, 2) == 1
    assert count_sl(3, 3, 2) == 2
    # over F_3 all three monic irreducible quadratics satisfy P(0)^2 = 1
    assert count_sl(4, 2, 3) == 3


def test_count_sl_coprime_regime_moebius_formula():
    # when gcd(n, q - 1) = 1 the count collapses to the plain Moebius form
    for n, q in ((3, 3), (5, 2), (2, 2), (4, 2)):
        import math

        if math.gcd(n, q - 1) != 1:
            continue
        for d in (x for x in range(1, n + 1) if n % x == 0):
            direct = sum(
                moebius(e) * (q ** (d // e) - 1) // (q - 1)
                for e in range(1, d + 1)
                if d % e == 0
            )
            assert d * count_sl(n, d, q) == direct


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_count_sl_sum_identity(n, q):
    total = Fraction(0)
    for d in (x for x in range(1, n + 1) if n % x == 0):
        total += Fraction(d * count_sl(n, d, q) * (1 - q), 1 - q**n)
    assert total == 1


# ---------------------------------------------------------------------------
# Sp types
# ---------------------------------------------------------------------------


def test_enumerate_sp_types_counts():
    assert len(enumerate_sp_types(2, q_even=False)) == 6
    assert len(enumerate_sp_types(2, q_even=True)) == 5
    assert len(enumerate_sp_types(3, q_even=False)) == 12
    assert len(enumerate_sp_types(3, q_even=True)) == 10
    for t in enumerate_sp_types(3, q_even=False):
        assert t.half_dimension == 3


def test_sp_type_canonicalizes_sign_blocks():
    assert SpType(1, 2) == SpType(2, 1)


def test_enumerate_sp_types_with_gl_blocks():
    full = enumerate_sp_types(2, q_even=False, include_gl=True)
    plain = enumerate_sp_types(2, q_even=False)
    assert set(plain) <= set(full)
    assert SpType(0, 0, (), [(1, 2)]) in full
    assert SpType(0, 0, [(1, 1)], [(1, 1)]) in full


def test_s_count_values():
    assert s_count(2, 3) == 1  # x^2 + 1
    assert s_count(2, 5) == 2
    assert s_count(4, 3) == 2
    assert s_count(4, 2) == 1  # x^4 + x^3 + x^2 + x + 1
    assert s_count(2, 2) == 1  # x^2 + x + 1
    assert s_count(6, 3) == (27 - 3) // 6


def test_irreducible_count():
    assert irreducible_count(1, 2) == 2
    assert irreducible_count(2, 2) == 1
    assert irreducible_count(3, 2) == 2
    assert irreducible_count(2, 3) == 3


@pytest.mark.parametrize("key", [(2, "odd"), (2, "even"), (3, "odd"), (3, "even")])
def test_table_counts_match_count_sp(key):
    n, parity = key
    qs = (3, 5, 7, 9) if parity == "odd" else (2, 4, 8)
    for row in table_goldens()[key]:
        for q in qs:
            assert count_sp(row.sp_type, q) == row.count(q), (row.label, q)


@pytest.mark.parametrize("key", [(2, "odd"), (2, "even"), (3, "odd"), (3, "even")])
def test_table_dets_match_centralizer_motive(key):
    for row in table_goldens()[key]:
        det = sp_centralizer_motive(row.sp_type).frobenius_det()
        assert det == row.det, row.label


@pytest.mark.parametrize("key", [(2, "odd"), (3, "odd")])
def test_table_types_cover_enumeration(key):
    n, _ = key
    assert {row.sp_type for row in table_goldens()[key]} == set(
        enumerate_sp_types(n, q_even=False)
    )


def test_count_sp_rejects_parity_mismatch():
    with pytest.raises(ValueError):
        count_sp(SpType(1, 1), 2)


def test_count_sp_gl_blocks():
    # q = 3, degree 1: irreducibles with nonzero constant term = {x-1, x+1},
    # both self-reciprocal, so no reciprocal pairs exist
    assert count_sp(SpType(0, 0, (), [(1, 2)]), 3) == 0
    # q = 5: {x-2, x-3} is the unique reciprocal pair
    assert count_sp(SpType(0, 0, (), [(1, 2)]), 5) == 1
    assert count_sp(SpType(0, 0, (), [(1, 1), (1, 1)]), 5) == 0
