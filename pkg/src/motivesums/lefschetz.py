"""Exponential-sum functions with exact cyclotomic bases.

A Lefschetz-type function is a finite sum m -> sum_i n_i * alpha_i^m with
rational coefficients n_i and bases alpha_i lying in some cyclotomic field
extended by rational scalars.  The algebra here keeps everything exact:
bases are elements of Q(zeta_N) in the power basis modulo the N-th
cyclotomic polynomial, so equality, products, inverses, and coordinate-wise
integer divisibility are all decidable.
"""
from __future__ import annotations

import dataclasses
import functools
import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .exactalg import cyclotomic

RationalLike = Union[int, Fraction]


@functools.cache
def _phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@functools.cache
def _modulus(n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in cyclotomic(n).coeffs)


def _poly_trim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_rem(a: list[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and any(a):
        _poly_trim(a)
        if len(a) - 1 < db:
            break
        f = a[-1] / lead
        shift = len(a) - 1 - db
        for j, bc in enumerate(b):
            a[shift + j] -= f * bc
        a.pop()
    return _poly_trim(a)


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_ext_gcd(a: list[Fraction], b: list[Fraction]):
    """Return (g, s) with s*a = g mod b, g the monic gcd."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], []
    while r1:
        q: list[Fraction] = [Fraction(0)] * max(0, len(r0) - len(r1) + 1)
        rem = list(r0)
        while len(rem) >= len(r1) and any(rem):
            _poly_trim(rem)
            if len(rem) < len(r1):
                break
            f = rem[-1] / r1[-1]
            q[len(rem) - len(r1)] = f
            for j, bc in enumerate(r1):
                rem[len(rem) - len(r1) + j] -= f * bc
            rem.pop()
        r0, r1 = r1, _poly_trim(rem)
        s0, s1 = s1, _poly_trim([x - y for x, y in _zip_pad(s0, _poly_mul(q, s1))])
    if not r0:
        raise ZeroDivisionError("gcd of zero polynomials")
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0]


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return zip(a, b)


@dataclasses.dataclass(frozen=True)
class CyclotomicRational:
    """Element of Q(zeta_n) in coordinates over the power basis
    1, zeta, ..., zeta^(phi(n)-1), reduced modulo the n-th cyclotomic
    polynomial."""

    conductor: int
    coords: tuple[Fraction, ...]

    def __init__(self, conductor: int, coords: Iterable[RationalLike]):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        cs = [Fraction(c) for c in coords]
        phi = _phi(conductor)
        if len(cs) > phi:
            cs = _poly_rem(cs, _modulus(conductor))
        cs += [Fraction(0)] * (phi - len(cs))
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coords", tuple(cs))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(v: RationalLike) -> "CyclotomicRational":
        return CyclotomicRational(1, (Fraction(v),))

    @staticmethod
    def root_of_unity(n: int, k: int = 1) -> "CyclotomicRational":
        k %= n
        return CyclotomicRational(n, tuple(Fraction(int(i == k)) for i in range(k + 1)))

    # -- coercion ------------------------------------------------------------

    @staticmethod
    def _coerce(v) -> "CyclotomicRational":
        if isinstance(v, CyclotomicRational):
            return v
        if isinstance(v, (int, Fraction)):
            return CyclotomicRational.from_rational(v)
        raise TypeError(f"cannot coerce {v!r}")

    def promoted(self, target: int) -> "CyclotomicRational":
        if target % self.conductor:
            raise ValueError("target conductor must be a multiple")
        if target == self.conductor:
            return self
        step = target // self.conductor
        out = [Fraction(0)] * ((len(self.coords) - 1) * step + 1)
        for i, c in enumerate(self.coords):
            out[i * step] = c
        return CyclotomicRational(target, out)

    def _common(self, other: "CyclotomicRational"):
        n = math.lcm(self.conductor, other.conductor)
        return self.promoted(n), other.promoted(n)

    # -- field operations ------------------------------------------------------

    def __add__(self, other) -> "CyclotomicRational":
        a, b = self._common(self._coerce(other))
        return CyclotomicRational(a.conductor, tuple(x + y for x, y in zip(a.coords, b.coords)))

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicRational":
        return CyclotomicRational(self.conductor, tuple(-c for c in self.coords))

    def __sub__(self, other) -> "CyclotomicRational":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CyclotomicRational":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "CyclotomicRational":
        if isinstance(other, (int, Fraction)):
            return CyclotomicRational(self.conductor, tuple(c * other for c in self.coords))
        a, b = self._common(self._coerce(other))
        return CyclotomicRational(a.conductor, _poly_mul(a.coords, b.coords))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CyclotomicRational":
        if n < 0:
            return self.inverse() ** (-n)
        result = CyclotomicRational.from_rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "CyclotomicRational":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        mod = [Fraction(c) for c in cyclotomic(self.conductor).coeffs]
        g, s = _poly_ext_gcd(list(self.coords), mod)
        if len(g) != 1:
            raise ArithmeticError("element is a zero divisor; cyclotomic modulus not coprime")
        return CyclotomicRational(self.conductor, [c / g[0] for c in s])

    def __truediv__(self, other) -> "CyclotomicRational":
        return self * self._coerce(other).inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CyclotomicRational.from_rational(other)
        if not isinstance(other, CyclotomicRational):
            return NotImplemented
        a, b = self._common(other)
        return a.coords == b.coords

    def __hash__(self):
        return hash(self.as_rational()) if self.is_rational() else hash((self.conductor, self.coords))

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def is_integral(self) -> bool:
        """True when all power-basis coordinates are integers (the power
        basis is an integral basis for cyclotomic fields)."""
        return all(c.denominator == 1 for c in self.coords)

    def divided_exactly(self, k: int) -> "CyclotomicRational":
        """Divide by the integer k, asserting coordinate-wise divisibility."""
        out = []
        for c in self.coords:
            if c.denominator != 1 or c.numerator % k:
                raise ArithmeticError(f"coordinate {c} not divisible by {k}")
            out.append(Fraction(c.numerator // k))
        return CyclotomicRational(self.conductor, out)

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.coords[0])
        parts = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            z = "" if i == 0 else (f"z{self.conductor}" if i == 1 else f"z{self.conductor}^{i}")
            parts.append(f"{c}" + (f"*{z}" if z else ""))
        return " + ".join(parts)


ZERO = CyclotomicRational.from_rational(0)
ONE = CyclotomicRational.from_rational(1)


@dataclasses.dataclass(frozen=True)
class LefschetzFunction:
    """Finite formal sum of (coefficient, base) pairs over cyclotomic
    rationals, evaluated as m -> sum coeff * base^m.  Terms with equal bases
    are merged and zero terms dropped."""

    terms: tuple[tuple[Fraction, CyclotomicRational], ...]

    def __init__(self, terms: Iterable[tuple[RationalLike, CyclotomicRational]] = ()):
        pending = [(Fraction(c), b) for c, b in terms]
        pending = [(c, b) for c, b in pending if c != 0 and not b.is_zero()]
        common = math.lcm(*(b.conductor for _, b in pending)) if pending else 1
        merged: dict[tuple[Fraction, ...], tuple[Fraction, CyclotomicRational]] = {}
        for coeff, base in pending:
            key = base.promoted(common).coords
            if key in merged:
                c0, b0 = merged[key]
                merged[key] = (c0 + coeff, b0)
            else:
                merged[key] = (coeff, base)
        object.__setattr__(
            self, "terms", tuple((c, b) for c, b in merged.values() if c != 0)
        )

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(v: RationalLike) -> "LefschetzFunction":
        return LefschetzFunction([(Fraction(v), ONE)])

    @staticmethod
    def single(coeff: RationalLike, base) -> "LefschetzFunction":
        return LefschetzFunction([(Fraction(coeff), CyclotomicRational._coerce(base))])

    @staticmethod
    def chi(n: int) -> "LefschetzFunction":
        """The indicator-style function with chi(m) = n when n divides m and
        0 otherwise, realized with the n-th roots of unity as bases."""
        return LefschetzFunction(
            [(Fraction(1), CyclotomicRational.root_of_unity(n, i)) for i in range(n)]
        )

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "LefschetzFunction") -> "LefschetzFunction":
        return LefschetzFunction(self.terms + other.terms)

    def __neg__(self) -> "LefschetzFunction":
        return LefschetzFunction([(-c, b) for c, b in self.terms])

    def __sub__(self, other: "LefschetzFunction") -> "LefschetzFunction":
        return self + (-other)

    def __mul__(self, other: "LefschetzFunction") -> "LefschetzFunction":
        return LefschetzFunction(
            [(c1 * c2, b1 * b2) for c1, b1 in self.terms for c2, b2 in other.terms]
        )

    def __pow__(self, n: int) -> "LefschetzFunction":
        if n < 0:
            raise ValueError("negative power")
        result = LefschetzFunction.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def compose_scale(self, k: int) -> "LefschetzFunction":
        """The function m -> f(k*m): every base is raised to the k-th power."""
        return LefschetzFunction([(c, b**k) for c, b in self.terms])

    def divided_exactly(self, k: int) -> "LefschetzFunction":
        out = []
        for c, b in self.terms:
            if c.denominator != 1 or c.numerator % k:
                raise ArithmeticError(f"coefficient {c} not divisible by {k}")
            out.append((Fraction(c.numerator // k), b))
        return LefschetzFunction(out)

    def evaluate(self, m: int) -> CyclotomicRational:
        acc = ZERO
        for c, b in self.terms:
            acc = acc + b**m * c
        return acc

    def evaluate_rational(self, m: int) -> Fraction:
        return self.evaluate(m).as_rational()

    def is_integer_valued(self, up_to: int | None = None) -> bool:
        """Pointwise check that f(m) is a rational integer for
        m = 1 .. up_to (default: the number of terms)."""
        bound = up_to if up_to is not None else max(1, len(self.terms))
        for m in range(1, bound + 1):
            v = self.evaluate(m)
            if not v.is_rational() or v.as_rational().denominator != 1:
                return False
        return True

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*({b})^m" for c, b in self.terms)


def f_N_transform(f: LefschetzFunction, n: int) -> LefschetzFunction:
    """The transform sending f to m -> f(lcm(n, m))^gcd(n, m), built by the
    prime-power recursion f_(l^e) = g_(l^(e-1)) + chi(l^e) * h with
    g(m) = f(l*m) and l^e * h = f^(l^e) - g^(l^(e-1)), every division
    exact."""
    if n < 1:
        raise ValueError("transform index must be positive")
    result = f
    remaining = n
    p = 2
    while remaining > 1:
        if remaining % p == 0:
            e = 0
            while remaining % p == 0:
                remaining //= p
                e += 1
            result = _prime_power_transform(result, p, e)
        p += 1 if p == 2 else 2
    return result


def _prime_power_transform(f: LefschetzFunction, ell: int, e: int) -> LefschetzFunction:
    if e == 0:
        return f
    g = f.compose_scale(ell)
    tail = _prime_power_transform(g, ell, e - 1)
    h = (f ** (ell**e) - g ** (ell ** (e - 1))).divided_exactly(ell**e)
    return tail + LefschetzFunction.chi(ell**e) * h


def place_product(f: LefschetzFunction, degrees: Iterable[int]) -> LefschetzFunction:
    """For a multiset of place degrees, the function
    m -> product over places v of f(m * deg w) over the places w above v in
    the degree-m extension; equals the product of the degree transforms."""
    acc = LefschetzFunction.constant(1)
    for d in degrees:
        acc = acc * f_N_transform(f, d)
    return acc
