"""L-values of weight-graded Frobenius data over curve data.

The value at the central point factors as F1 * F2 * F3: a product over the
curve's Weil inverse roots, a global-sections quotient for the splitting
places evaluated at t = 1, and a twisted quotient for the twisting places
evaluated at t = q.  Both quotients are exact polynomial divisions performed
before evaluation, so vanishing emerges from the arithmetic rather than from
special cases.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .curves import CurveDatum, h0_det
from .exactalg import (
    InexactDivision,
    IntPolynomial,
    SymbolicPolynomial,
    resultant,
    to_int_poly,
)
from .lefschetz import CyclotomicRational, LefschetzFunction
from .motives import ArtinTateMotive, motive_of, parse_group_spec


class NotPolynomial(ArithmeticError):
    """Raised when a quantity guaranteed polynomial only under extra
    hypotheses turns out rational."""


def weil_root_product(curve: CurveDatum, poly: IntPolynomial) -> int:
    """Product of poly over the inverse roots of the curve's Weil numerator,
    computed exactly as a resultant against the monic reciprocal."""
    w = curve.weil_reciprocal()
    if w.degree == 0:
        return 1
    return resultant(w, poly)


def l_value(motive: ArtinTateMotive, curve: CurveDatum) -> Fraction:
    """Exact central L-value of the motive over the curve datum."""
    q = curve.q
    det = motive.frobenius_det()
    det_q = to_int_poly(det.substitute({"q": q}), "t")

    f1 = weil_root_product(curve, det_q)

    h0s = to_int_poly(h0_det(curve.s_degrees, motive).substitute({"q": q}), "t")
    f2_poly = h0s / det_q
    f2 = f2_poly.evaluate(Fraction(1))

    if curve.t_degrees:
        h0t = to_int_poly(h0_det(curve.t_degrees, motive).substitute({"q": q}), "t")
        f3 = (h0t / det_q).evaluate(Fraction(q))
    else:
        denom = det_q.evaluate(Fraction(q))
        assert denom != 0, "weight >= 1 eigenvalues cannot hit 1 at t = q"
        f3 = Fraction(1) / denom
    return Fraction(f1) * f2 * f3


def j_variable_names(arity: int) -> tuple[str, ...]:
    return tuple(f"a{i + 1}" for i in range(arity))


def z_polynomial(
    motive: ArtinTateMotive, curve: CurveDatum, symbolic_j: int = 0
) -> SymbolicPolynomial:
    """The L-value with q replaced by the variable x and the curve's Weil
    inverse roots by symbolic variables a1..ar; integral whenever both place
    lists are nonempty.

    Raises NotPolynomial when the twisting list is empty and the value is
    genuinely rational.
    """
    x = SymbolicPolynomial.variable("x")
    det = motive.frobenius_det()
    det_x = det.substitute({"q": x})

    f1 = SymbolicPolynomial.constant(1)
    for name in j_variable_names(symbolic_j):
        a = SymbolicPolynomial.variable(name)
        f1 = f1 * det.substitute({"q": x, "t": a})

    h0s = h0_det(curve.s_degrees, motive).substitute({"q": x})
    quo_s = h0s.exact_div(det_x, "t") if not det_x.is_constant() else _const_div(h0s, det_x)
    f2 = quo_s.substitute({"t": 1})

    if curve.t_degrees:
        h0t = h0_det(curve.t_degrees, motive).substitute({"q": x})
        quo_t = h0t.exact_div(det_x, "t") if not det_x.is_constant() else _const_div(h0t, det_x)
        f3 = quo_t.substitute({"t": x})
    elif det_x == 1:
        f3 = SymbolicPolynomial.constant(1)
    else:
        raise NotPolynomial("rational, not polynomial: empty twisting list")
    return f1 * f2 * f3


def _const_div(num: SymbolicPolynomial, den: SymbolicPolynomial) -> SymbolicPolynomial:
    if den == 1:
        return num
    raise NotPolynomial("rational, not polynomial: constant determinant")


def symmetric_pair_eval(
    poly: SymbolicPolynomial,
    pair: tuple[str, str],
    monic_quadratic: IntPolynomial,
    assignment: dict | None = None,
) -> Fraction:
    """Evaluate a polynomial that is symmetric in a conjugate pair of
    variables at the two roots of a monic integer quadratic, with all other
    variables given rational values.  Works in Q[y]/(w) and requires the
    result to be constant there."""
    if monic_quadratic.degree != 2 or not monic_quadratic.is_monic():
        raise ValueError("conjugate pair requires a monic quadratic")
    w0, w1 = Fraction(monic_quadratic.coeffs[0]), Fraction(monic_quadratic.coeffs[1])
    assignment = assignment or {}
    na, nb = pair

    def mul(u, v):
        c0 = u[0] * v[0]
        c1 = u[0] * v[1] + u[1] * v[0]
        c2 = u[1] * v[1]
        # reduce y^2 = -w1*y - w0
        return (c0 - c2 * w0, c1 - c2 * w1)

    def power(u, e):
        acc = (Fraction(1), Fraction(0))
        while e:
            if e & 1:
                acc = mul(acc, u)
            u = mul(u, u)
            e >>= 1
        return acc

    root = (Fraction(0), Fraction(1))
    conj = (-w1, Fraction(-1))
    total = (Fraction(0), Fraction(0))
    for exps, coeff in poly.terms.items():
        term = (Fraction(coeff), Fraction(0))
        for var, e in zip(poly.vars, exps):
            if not e:
                continue
            if var == na:
                term = mul(term, power(root, e))
            elif var == nb:
                term = mul(term, power(conj, e))
            else:
                term = (term[0] * Fraction(assignment[var]) ** e, term[1] * Fraction(assignment[var]) ** e)
        total = (total[0] + term[0], total[1] + term[1])
    if total[1] != 0:
        raise ValueError("expression is not symmetric in the conjugate pair")
    return total[0]


def evaluate_with_weil_roots(
    poly: SymbolicPolynomial, curve: CurveDatum, x_value: int, j_names: Sequence[str]
) -> Fraction:
    """Evaluate a polynomial in x and the J-variables at x = x_value and the
    J-variables at the curve's Weil inverse roots, handling the rational and
    conjugate-quadratic cases exactly."""
    w = curve.weil_reciprocal()
    if len(j_names) != w.degree:
        raise ValueError("arity does not match the number of Weil roots")
    if w.degree == 0:
        return poly.evaluate({"x": x_value})
    if w.degree == 2:
        disc = w.coeffs[1] ** 2 - 4 * w.coeffs[0]
        root = math.isqrt(abs(disc))
        if disc >= 0 and root * root == disc:
            r1 = Fraction(-w.coeffs[1] + root, 2)
            r2 = Fraction(-w.coeffs[1] - root, 2)
            return poly.evaluate({"x": x_value, j_names[0]: r1, j_names[1]: r2})
        return symmetric_pair_eval(poly, (j_names[0], j_names[1]), w, {"x": x_value})
    raise ValueError("only genus 0 and 1 evaluations are supported")


_CENTER_ORDERS = {
    "SL": lambda n, size: math.gcd(n, size - 1),
    "Sp": lambda n, size: math.gcd(2, size - 1),
}
_RANKS = {"SL": lambda n: n - 1, "Sp": lambda n: n // 2}


def multiplicity_sum(spec, curve: CurveDatum, fixed_chi: bool = True) -> Fraction:
    """Signed L-value giving the conditional count of cuspidal objects with
    the prescribed local behavior; with fixed_chi False the count is summed
    over central characters, multiplying in the center orders at the
    twisting places."""
    spec = parse_group_spec(spec)
    (kind, n), = spec.items()
    if kind not in _RANKS:
        raise ValueError("multiplicity sums are defined for SL and Sp only")
    if not curve.t_degrees:
        raise ValueError("twisting places required; use the class-sum path instead")
    rank = _RANKS[kind](n)
    sign = (-1) ** ((len(curve.s_degrees) + len(curve.t_degrees)) * rank)
    value = sign * l_value(motive_of(spec), curve)
    if not fixed_chi:
        for d in curve.t_degrees:
            size = curve.q**d
            value *= _CENTER_ORDERS[kind](n, size) * (size - 1)
    return value


def lefschetz_fit(
    values: Sequence[Fraction], candidate_bases: Sequence[CyclotomicRational]
) -> LefschetzFunction | None:
    """Fit values(m), m = 1..M, as an exact exponential sum over the given
    bases: solve on the first |bases| points, verify on the rest.  Returns
    None when the held-out points reject the fit."""
    bases: list[CyclotomicRational] = []
    for b in candidate_bases:
        b = CyclotomicRational._coerce(b)
        if not any(b == seen for seen in bases):
            bases.append(b)
    k = len(bases)
    if len(values) < k + 1:
        raise ValueError("need at least one held-out point beyond the solve block")
    rows = [[b ** (m + 1) for b in bases] for m in range(k)]
    rhs = [CyclotomicRational.from_rational(v) for v in values[:k]]
    coeffs = _solve_exact(rows, rhs)
    if coeffs is None:
        raise ValueError("singular system: candidate bases do not separate the points")
    terms = []
    for c, b in zip(coeffs, bases):
        if not c.is_rational():
            return None
        if c.as_rational() != 0:
            terms.append((c.as_rational(), b))
    fitted = LefschetzFunction(terms)
    for m in range(k + 1, len(values) + 1):
        if fitted.evaluate(m) != Fraction(values[m - 1]):
            return None
    return fitted


def _solve_exact(rows: list[list[CyclotomicRational]], rhs: list[CyclotomicRational]):
    n = len(rows)
    mat = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not mat[r][col].is_zero()), None)
        if piv is None:
            return None
        mat[col], mat[piv] = mat[piv], mat[col]
        inv = mat[col][col].inverse()
        mat[col] = [v * inv for v in mat[col]]
        for r in range(n):
            if r != col and not mat[r][col].is_zero():
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
    return [mat[i][n] for i in range(n)]
