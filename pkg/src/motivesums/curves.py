"""Function-field curve data: base field size, Weil numerator, marked places.

A curve datum holds q, the numerator P(t) of the curve's zeta function with
P(0) = 1 and even degree, and two lists of marked place degrees (splitting
places S, twisting places T).  Base change to the degree-m extension raises
q to the m-th power, powers the inverse roots of P, and splits each place of
degree d into gcd(d, m) places of degree d / gcd(d, m).
"""
from __future__ import annotations

import dataclasses
import json
import math
from typing import Iterable

from .exactalg import IntPolynomial, SymbolicPolynomial, root_power_transform
from .motives import ArtinTateMotive


@dataclasses.dataclass(frozen=True)
class CurveDatum:
    q: int
    weil_numerator: IntPolynomial
    s_degrees: tuple[int, ...]
    t_degrees: tuple[int, ...]

    def __init__(self, q: int, weil_numerator, s_degrees: Iterable[int], t_degrees: Iterable[int] = ()):
        if q < 2:
            raise ValueError("base field size must be at least 2")
        p = weil_numerator if isinstance(weil_numerator, IntPolynomial) else IntPolynomial(weil_numerator)
        if p.is_zero() or p.coeffs[0] != 1:
            raise ValueError("Weil numerator must have constant term 1")
        if p.degree % 2:
            raise ValueError("Weil numerator must have even degree")
        s = tuple(s_degrees)
        t = tuple(t_degrees)
        if not s:
            raise ValueError("at least one splitting place is required")
        if any(d < 1 for d in s + t):
            raise ValueError("place degrees must be positive")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "weil_numerator", p)
        object.__setattr__(self, "s_degrees", s)
        object.__setattr__(self, "t_degrees", t)

    @staticmethod
    def from_json(text: str | dict) -> "CurveDatum":
        data = json.loads(text) if isinstance(text, str) else text
        return CurveDatum(
            q=data["q"],
            weil_numerator=data["weil_numerator"],
            s_degrees=data["s_degrees"],
            t_degrees=data.get("t_degrees", ()),
        )

    @property
    def genus(self) -> int:
        return self.weil_numerator.degree // 2

    def weil_reciprocal(self) -> IntPolynomial:
        """Monic polynomial whose roots are the inverse roots of the Weil
        numerator: t^deg * P(1/t)."""
        return self.weil_numerator.reversed_coeffs()

    def base_change(self, m: int) -> "CurveDatum":
        """Curve datum over the degree-m constant extension."""
        if m < 1:
            raise ValueError("extension degree must be positive")
        if m == 1:
            return self
        w_m = root_power_transform(self.weil_reciprocal(), m)
        return CurveDatum(
            q=self.q**m,
            weil_numerator=w_m.reversed_coeffs(),
            s_degrees=_split_places(self.s_degrees, m),
            t_degrees=_split_places(self.t_degrees, m),
        )


def _split_places(degrees: tuple[int, ...], m: int) -> tuple[int, ...]:
    out: list[int] = []
    for d in degrees:
        g = math.gcd(d, m)
        out.extend([d // g] * g)
    return tuple(out)


def charpoly_of_power(c: IntPolynomial, e: int) -> IntPolynomial:
    """Given c(u) with c(0) = 1 and inverse roots l_i, return the polynomial
    with constant term 1 whose inverse roots are l_i^e."""
    if e == 1:
        return c
    monic = c.reversed_coeffs()
    powered = root_power_transform(monic, e)
    out = powered.reversed_coeffs()
    if out.coeffs[0] != 1:
        raise ArithmeticError("powered characteristic polynomial lost its normalization")
    return out


def h0_det(degrees: Iterable[int], motive: ArtinTateMotive) -> SymbolicPolynomial:
    """Frobenius determinant on global sections over the listed places.

    For a place of degree e and a graded piece (d, c_d), the factor is the
    degree-e inverse-root power of c_d evaluated at t^e * q^(e*(d-1)).
    The result is a polynomial in t and q.
    """
    t = SymbolicPolynomial.variable("t")
    q = SymbolicPolynomial.variable("q")
    acc = SymbolicPolynomial.constant(1)
    for e in degrees:
        for p in motive.pieces:
            powered = charpoly_of_power(p.charpoly, e)
            arg = t**e * q ** (e * (p.weight - 1))
            acc = acc * SymbolicPolynomial.from_int_poly(powered, "u").substitute({"u": arg})
    return acc
