"""Tests for curve data and base change."""
import pytest

from motivesums.curves import CurveDatum, charpoly_of_power, h0_det
from motivesums.exactalg import IntPolynomial, SymbolicPolynomial
from motivesums.motives import motive_of


def projective_line(q, s=(1, 1), t=()):
    return CurveDatum(q=q, weil_numerator=[1], s_degrees=s, t_degrees=t)


def elliptic_q2():
    # point count 2 over the field with 2 elements
    return CurveDatum(q=2, weil_numerator=[1, -1, 2], s_degrees=(1,), t_degrees=())


def test_from_json():
    c = CurveDatum.from_json('{"q":2,"weil_numerator":[1,-1,2],"s_degrees":[1,1],"t_degrees":[]}')
    assert c.q == 2
    assert c.weil_numerator.coeffs == (1, -1, 2)
    assert c.genus == 1
    assert c.t_degrees == ()


def test_validation():
    with pytest.raises(ValueError):
        CurveDatum(q=1, weil_numerator=[1], s_degrees=(1,))
    with pytest.raises(ValueError):
        CurveDatum(q=2, weil_numerator=[2], s_degrees=(1,))
    with pytest.raises(ValueError):
        CurveDatum(q=2, weil_numerator=[1, 1], s_degrees=(1,))
    with pytest.raises(ValueError):
        CurveDatum(q=2, weil_numerator=[1], s_degrees=())
    with pytest.raises(ValueError):
        CurveDatum(q=2, weil_numerator=[1], s_degrees=(0,))


def test_base_change_elliptic():
    c2 = elliptic_q2().base_change(2)
    assert c2.q == 4
    assert c2.weil_numerator.coeffs == (1, 3, 4)


def test_base_change_identity_and_composition():
    c = elliptic_q2()
    assert c.base_change(1) is c
    assert c.base_change(2).base_change(3).weil_numerator == c.base_change(6).weil_numerator
    assert c.base_change(2).base_change(3).q == c.base_change(6).q


def test_base_change_splits_places():
    c = CurveDatum(q=3, weil_numerator=[1], s_degrees=(1, 2, 3), t_degrees=(6,))
    c2 = c.base_change(2)
    assert sorted(c2.s_degrees) == [1, 1, 1, 3]
    assert sorted(c2.t_degrees) == [3, 3]
    c3 = c.base_change(3)
    assert sorted(c3.s_degrees) == [1, 1, 1, 1, 2]
    assert sorted(c3.t_degrees) == [2, 2, 2]


def test_charpoly_of_power():
    # inverse roots of 1 - u are {1}; powering keeps them
    assert charpoly_of_power(IntPolynomial((1, -1)), 5).coeffs == (1, -1)
    # inverse roots of 1 + u are {-1}; squaring gives {1}
    assert charpoly_of_power(IntPolynomial((1, 1)), 2).coeffs == (1, -1)
    # inverse roots i, -i of 1 + u^2 square to -1 twice
    assert charpoly_of_power(IntPolynomial((1, 0, 1)), 2).coeffs == (1, 2, 1)


def test_h0_det_degree_one_matches_frobenius_det():
    m = motive_of({"Sp": 4})
    assert h0_det([1], m) == m.frobenius_det()


def test_h0_det_two_points():
    m = motive_of({"Sp": 4})
    assert h0_det([1, 1], m) == m.frobenius_det() ** 2


def test_h0_det_degree_two_place():
    t = SymbolicPolynomial.variable("t")
    q = SymbolicPolynomial.variable("q")
    m = motive_of({"Sp": 4})
    expected = (1 - t**2 * q**2) * (1 - t**2 * q**6)
    assert h0_det([2], m) == expected


def test_h0_det_unitary_degree_two():
    t = SymbolicPolynomial.variable("t")
    m = motive_of({"U": 1})
    # inverse root -1 squared is 1
    assert h0_det([2], m) == 1 - t**2
