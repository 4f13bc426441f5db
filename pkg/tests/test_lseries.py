"""Tests for L-values, the base-change polynomial, and exponential fits."""
from fractions import Fraction

import pytest

from motivesums.curves import CurveDatum
from motivesums.exactalg import IntPolynomial, SymbolicPolynomial
from motivesums.lefschetz import CyclotomicRational, LefschetzFunction
from motivesums.lseries import (
    NotPolynomial,
    evaluate_with_weil_roots,
    j_variable_names,
    l_value,
    lefschetz_fit,
    multiplicity_sum,
    symmetric_pair_eval,
    z_polynomial,
)
from motivesums.motives import motive_of


def projective_line(q, s=(1,), t=(1,)):
    return CurveDatum(q=q, weil_numerator=[1], s_degrees=s, t_degrees=t)


def elliptic_q2(s=(1,), t=(1,)):
    return CurveDatum(q=2, weil_numerator=[1, -1, 2], s_degrees=s, t_degrees=t)


GROUPS = [{"SL": n} for n in (2, 3, 4, 5)] + [
    {"Sp": 4},
    {"Sp": 6},
    {"GL": 3},
    {"Res": [2, {"U": 2}]},
]


@pytest.mark.parametrize("spec", GROUPS, ids=str)
@pytest.mark.parametrize("q", [2, 3, 5])
def test_trivial_l_value(spec, q):
    assert l_value(motive_of(spec), projective_line(q)) == 1


def test_central_ratio_sp4():
    # independent per-eigenvalue product: (1-q)(1-q^3) / ((1-q^2)(1-q^4))
    curve = projective_line(3, s=(1, 1), t=())
    assert l_value(motive_of({"Sp": 4}), curve) == Fraction(52, 640)
    for q in (2, 5, 7):
        curve = projective_line(q, s=(1, 1), t=())
        expected = Fraction((1 - q) * (1 - q**3), (1 - q**2) * (1 - q**4))
        assert l_value(motive_of({"Sp": 4}), curve) == expected


def test_gl_type_vanishing_without_twisting():
    curve = projective_line(3, s=(1, 1), t=())
    assert l_value(motive_of({"GL": 2}), curve) == 0
    assert l_value(motive_of({"Res": [2, {"GL": 1}]}), curve) == 0


def test_single_splitting_place_survives():
    # one copy of the trivial eigenvalue cancels; value is finite and nonzero
    curve = projective_line(3, s=(1,), t=())
    v = l_value(motive_of({"Sp": 2}), curve)
    assert v == Fraction(1, 1 - 9)


def test_l_value_with_weil_roots():
    # elliptic curve, inverse roots a, b with a+b = 1, ab = 2
    curve = elliptic_q2()
    m = motive_of({"SL": 2})
    # F1 = (1 - a*2)(1 - b*2) = 1 - 2(a+b) + 4ab = 7; F2 = 1; F3 = 1/(1 - 8)... times h0 quotient
    # S = T = {1}: F2 and F3 quotients are 1, so value = F1 = 7
    assert l_value(m, curve) == 7


# ---------------------------------------------------------------------------
# z_polynomial
# ---------------------------------------------------------------------------


def test_z_trivial():
    z = z_polynomial(motive_of({"SL": 2}), projective_line(2))
    assert z == 1


def test_z_matches_l_value_numerically():
    for spec in ({"SL": 3}, {"Sp": 4}, {"Res": [2, {"U": 2}]}):
        m = motive_of(spec)
        curve = projective_line(3, s=(1, 1), t=(1,))
        z = z_polynomial(m, curve, symbolic_j=0)
        assert z.evaluate({"x": 3}) == l_value(m, curve)


def test_z_rational_without_twisting():
    with pytest.raises(NotPolynomial):
        z_polynomial(motive_of({"Sp": 4}), projective_line(3, s=(1, 1), t=()))


def test_z_empty_motive():
    assert z_polynomial(motive_of({"SL": 1}), projective_line(2)) == 1


@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("spec", [{"SL": 2}, {"Sp": 4}], ids=str)
def test_base_change_law_projective_line(spec, m):
    # degree-1 places keep every section eigenvalue trivial, so powering
    # the J-variables is a no-op and the law reduces to x -> q^m
    curve = projective_line(3, s=(1, 1), t=(1,))
    z = z_polynomial(motive_of(spec), curve, symbolic_j=0)
    lhs = l_value(motive_of(spec), curve.base_change(m))
    assert lhs == z.evaluate({"x": 3**m})


@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("spec", [{"SL": 2}, {"Sp": 4}], ids=str)
def test_base_change_law_elliptic(spec, m):
    curve = elliptic_q2(s=(1, 1), t=(1,))
    names = j_variable_names(2)
    z = z_polynomial(motive_of(spec), curve, symbolic_j=2)
    changed = curve.base_change(m)
    lhs = l_value(motive_of(spec), changed)
    rhs = evaluate_with_weil_roots(z, changed, 2**m, names)
    assert lhs == rhs


# ---------------------------------------------------------------------------
# symmetric pair evaluation
# ---------------------------------------------------------------------------


def test_symmetric_pair_eval_elementary():
    a = SymbolicPolynomial.variable("a")
    b = SymbolicPolynomial.variable("b")
    w = IntPolynomial((2, -1, 1))  # roots a+b = 1, ab = 2
    assert symmetric_pair_eval(a + b, ("a", "b"), w) == 1
    assert symmetric_pair_eval(a * b, ("a", "b"), w) == 2
    assert symmetric_pair_eval(a**2 + b**2, ("a", "b"), w) == -3
    assert symmetric_pair_eval((1 - 2 * a) * (1 - 2 * b), ("a", "b"), w) == 7


def test_symmetric_pair_eval_rejects_asymmetric():
    a = SymbolicPolynomial.variable("a")
    b = SymbolicPolynomial.variable("b")
    w = IntPolynomial((2, -1, 1))
    with pytest.raises(ValueError):
        symmetric_pair_eval(a - b, ("a", "b"), w)


def test_symmetric_pair_eval_with_extra_vars():
    a = SymbolicPolynomial.variable("a")
    b = SymbolicPolynomial.variable("b")
    x = SymbolicPolynomial.variable("x")
    w = IntPolynomial((2, -1, 1))
    assert symmetric_pair_eval(x * (a + b) + a * b, ("a", "b"), w, {"x": 5}) == 7


# ---------------------------------------------------------------------------
# multiplicity sums
# ---------------------------------------------------------------------------


def test_multiplicity_fixed_character():
    assert multiplicity_sum({"SL": 2}, projective_line(3)) == 1
    assert multiplicity_sum({"Sp": 4}, projective_line(3)) == 1


def test_multiplicity_all_characters():
    assert multiplicity_sum({"SL": 2}, projective_line(3), fixed_chi=False) == 4
    assert multiplicity_sum({"SL": 3}, projective_line(4), fixed_chi=False) == 9
    assert multiplicity_sum({"Sp": 4}, projective_line(2), fixed_chi=False) == 1


def test_multiplicity_requires_twisting():
    with pytest.raises(ValueError):
        multiplicity_sum({"SL": 2}, projective_line(3, t=()))


# ---------------------------------------------------------------------------
# exponential fitting
# ---------------------------------------------------------------------------


def test_fit_alternating():
    values = [Fraction(2 if m % 2 == 0 else 0) for m in range(1, 7)]
    bases = [CyclotomicRational.from_rational(1), CyclotomicRational.from_rational(-1)]
    fitted = lefschetz_fit(values, bases)
    assert fitted is not None
    assert sorted(c for c, _ in fitted.terms) == [1, 1]


def test_fit_zero():
    values = [Fraction(0)] * 5
    fitted = lefschetz_fit(values, [CyclotomicRational.from_rational(1)])
    assert fitted is not None and fitted.terms == ()


def test_fit_geometric():
    values = [Fraction(3**m) for m in range(1, 6)]
    fitted = lefschetz_fit(values, [CyclotomicRational.from_rational(3)])
    assert fitted is not None
    assert fitted.terms == ((Fraction(1), CyclotomicRational.from_rational(3)),)


def test_fit_rejects_wrong_model():
    values = [Fraction(m * m) for m in range(1, 8)]
    bases = [CyclotomicRational.from_rational(1), CyclotomicRational.from_rational(2)]
    assert lefschetz_fit(values, bases) is None


def test_fit_with_extra_bases():
    f = LefschetzFunction.chi(2)
    values = [f.evaluate_rational(m) for m in range(1, 9)]
    bases = [
        CyclotomicRational.from_rational(1),
        CyclotomicRational.from_rational(-1),
        CyclotomicRational.from_rational(3),
    ]
    fitted = lefschetz_fit(values, bases)
    assert fitted is not None
    for m in range(1, 9):
        assert fitted.evaluate_rational(m) == values[m - 1]
