"""Brute-force ground truth over small finite fields.

Everything here is exhaustive enumeration: monic polynomials are listed,
factored by trial division against cached irreducible lists, and tallied
into conjugacy types.  The counting formulas elsewhere in the package are
validated against these censuses, never the other way around.
"""
from __future__ import annotations

import itertools
from typing import Iterable

from .classtypes import SLType, SpType, enumerate_sl_types, enumerate_sp_types
from .motives import parse_group_spec


class BudgetError(RuntimeError):
    """Raised when an enumeration would exceed its budget; use the closed
    counting formulas instead."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class FiniteField:
    """The field with p^k elements; elements are integers 0 <= a < p^k whose
    base-p digits are the coordinates in the power basis of the modulus."""

    def __init__(self, p: int, k: int = 1):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1 or p**k > 2**16:
            raise ValueError("field size must be a prime power at most 2^16")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = self._first_irreducible_modulus()
        self._reduction = self._power_reductions()
        self._mul_memo: dict[tuple[int, int], int] = {}
        self._irr_cache: dict[int, list[tuple[int, ...]]] = {}

    # -- construction ------------------------------------------------------

    def _first_irreducible_modulus(self) -> tuple[int, ...]:
        if self.k == 1:
            return (0, 1)
        for digits in itertools.product(range(self.p), repeat=self.k):
            candidate = digits + (1,)
            if self._prime_field_irreducible(candidate):
                return candidate
        raise AssertionError("no irreducible modulus found")

    def _prime_field_irreducible(self, poly: tuple[int, ...]) -> bool:
        # trial division over Z/p by all monic polynomials of low degree
        deg = len(poly) - 1
        for d in range(1, deg // 2 + 1):
            for digits in itertools.product(range(self.p), repeat=d):
                div = digits + (1,)
                if self._prime_field_rem(poly, div) == ():
                    return False
        if deg >= 1 and any(self._prime_field_rem(poly, (c, 1)) == () for c in range(self.p)):
            return deg == 1
        return True

    def _prime_field_rem(self, f, g) -> tuple[int, ...]:
        rem = list(f)
        dg = len(g) - 1
        while len(rem) - 1 >= dg and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dg:
                break
            head = rem[-1]  # divisor monic
            shift = len(rem) - 1 - dg
            for i, c in enumerate(g):
                rem[shift + i] = (rem[shift + i] - head * c) % self.p
        while rem and rem[-1] == 0:
            rem.pop()
        return tuple(rem)

    def _power_reductions(self) -> list[tuple[int, ...]]:
        # digits of x^(k+i) reduced modulo the modulus, i = 0 .. k-2
        rows = []
        current = [(-c) % self.p for c in self.modulus[:-1]]
        for _ in range(max(0, self.k - 1)):
            rows.append(tuple(current))
            shifted = [0] + current[:-1]
            head = current[-1]
            current = [(s + head * r) % self.p for s, r in zip(shifted, rows[0])]
        return rows

    # -- element arithmetic --------------------------------------------------

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _from_digits(self, ds: Iterable[int]) -> int:
        acc = 0
        for d in reversed(list(ds)):
            acc = acc * self.p + d % self.p
        return acc

    def embed(self, v: int) -> int:
        return v % self.p

    def add(self, a: int, b: int) -> int:
        return self._from_digits(x + y for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        return self._from_digits(-x for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        key = (a, b) if a <= b else (b, a)
        cached = self._mul_memo.get(key)
        if cached is not None:
            return cached
        da, db = self.digits(a), self.digits(b)
        conv = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] += x * y
        result = conv[: self.k]
        for i, row in enumerate(self._reduction):
            excess = conv[self.k + i] if self.k + i < len(conv) else 0
            if excess:
                result = [(r + excess * c) for r, c in zip(result, row)]
        value = self._from_digits(result)
        self._mul_memo[key] = value
        return value

    def power(self, a: int, e: int) -> int:
        acc = 1
        while e:
            if e & 1:
                acc = self.mul(acc, a)
            a = self.mul(a, a)
            e >>= 1
        return acc

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.power(a, self.q - 2)

    # -- polynomials over the field -----------------------------------------

    def poly_rem(self, f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
        """Remainder of f by monic g."""
        rem = list(f)
        dg = len(g) - 1
        while len(rem) - 1 >= dg and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dg:
                break
            head = rem[-1]
            shift = len(rem) - 1 - dg
            for i, c in enumerate(g):
                rem[shift + i] = self.sub(rem[shift + i], self.mul(head, c))
        while rem and rem[-1] == 0:
            rem.pop()
        return tuple(rem)

    def poly_div_exact(self, f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
        rem = list(f)
        dg = len(g) - 1
        quo = [0] * (len(f) - dg)
        while len(rem) - 1 >= dg and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dg:
                break
            head = rem[-1]
            shift = len(rem) - 1 - dg
            quo[shift] = head
            for i, c in enumerate(g):
                rem[shift + i] = self.sub(rem[shift + i], self.mul(head, c))
        assert not any(rem), "exact division expected"
        return tuple(quo)

    def poly_mul(self, f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * (len(f) + len(g) - 1)
        for i, x in enumerate(f):
            if x:
                for j, y in enumerate(g):
                    out[i + j] = self.add(out[i + j], self.mul(x, y))
        return tuple(out)

    def reciprocal(self, f: tuple[int, ...]) -> tuple[int, ...]:
        """Monic reversal x^deg f(1/x) / f(0); requires f(0) nonzero."""
        c0 = f[0]
        inv = self.inv(c0)
        return tuple(self.mul(c, inv) for c in reversed(f))


# ---------------------------------------------------------------------------
# irreducibles and factorization
# ---------------------------------------------------------------------------

_ENUM_BUDGET = 10**7


def _monic_polys(field: FiniteField, d: int):
    for digits in itertools.product(range(field.q), repeat=d):
        yield digits + (1,)


def _irreducibles_up_to(field: FiniteField, d: int) -> None:
    for e in range(1, d + 1):
        if e in field._irr_cache:
            continue
        found = []
        for cand in _monic_polys(field, e):
            if _is_irreducible_cached(field, cand):
                found.append(cand)
        field._irr_cache[e] = found


def _is_irreducible_cached(field: FiniteField, poly: tuple[int, ...]) -> bool:
    deg = len(poly) - 1
    if deg == 1:
        return True
    for e in range(1, deg // 2 + 1):
        for p in field._irr_cache[e]:
            if field.poly_rem(poly, p) == ():
                return False
    return True


def irreducible_monics(field: FiniteField, d: int, constant: int | None = None):
    """Exhaustive list of irreducible monic polynomials of degree d,
    optionally restricted by constant term (given as an integer embedded
    through the prime subfield)."""
    if d < 1:
        raise ValueError("degree must be positive")
    if field.q**d > _ENUM_BUDGET:
        raise BudgetError("enumeration over budget; use the counting formulas")
    _irreducibles_up_to(field, d)
    polys = field._irr_cache[d]
    if constant is None:
        return list(polys)
    target = field.embed(constant)
    return [p for p in polys if p[0] == target]


def factor_monic(field: FiniteField, poly: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Factorization into monic irreducibles by trial division."""
    deg = len(poly) - 1
    out: dict[tuple[int, ...], int] = {}
    rest = poly
    for e in range(1, deg + 1):
        if len(rest) - 1 < 2 * e:
            break
        _irreducibles_up_to(field, e)
        for p in field._irr_cache[e]:
            while len(rest) > len(p) - 1 and field.poly_rem(rest, p) == ():
                out[p] = out.get(p, 0) + 1
                rest = field.poly_div_exact(rest, p)
        if len(rest) - 1 == 0:
            break
    if len(rest) - 1 > 0:
        out[rest] = out.get(rest, 0) + 1
    return out


# ---------------------------------------------------------------------------
# censuses
# ---------------------------------------------------------------------------


def sl_census(n: int, field: FiniteField) -> dict[SLType, int]:
    """Tally of semisimple class types: monic degree-n polynomials with
    constant term (-1)^n, keyed by factorization shape."""
    if field.q ** (n - 1) > _ENUM_BUDGET:
        raise BudgetError("enumeration over budget; use the counting formulas")
    tally = {t: 0 for t in enumerate_sl_types(n)}
    constant = field.embed((-1) ** n)
    for digits in itertools.product(range(field.q), repeat=n - 1):
        poly = (constant,) + digits + (1,)
        factors = factor_monic(field, poly)
        shape = SLType((len(p) - 1, mult) for p, mult in factors.items())
        tally[shape] += 1
    return tally


def sp_census(n: int, field: FiniteField) -> dict[SpType, int]:
    """Tally of symplectic class types: monic palindromic degree-2n
    polynomials whose multiplicity at x - 1 and x + 1 is even."""
    if field.q**n > 10**6:
        raise BudgetError("enumeration over budget; use the counting formulas")
    q_even = field.p == 2
    tally = {t: 0 for t in enumerate_sp_types(n, q_even=q_even, include_gl=True)}
    one = 1
    minus_one = field.embed(-1)
    plus_root = (minus_one, one)  # x - 1
    minus_root = (one, one)  # x + 1
    for digits in itertools.product(range(field.q), repeat=n):
        # palindromic: coefficients c_1..c_n free, mirrored to c_{2n-1}..c_n
        coeffs = (1,) + digits + tuple(reversed(digits[:-1])) + (1,)
        factors = factor_monic(field, coeffs)
        a_plus = factors.pop(plus_root, 0)
        a_minus = 0 if q_even else factors.pop(minus_root, 0)
        if a_plus % 2 or a_minus % 2:
            continue
        unitary = []
        gl = []
        seen = set()
        ok = True
        for p, mult in factors.items():
            if p in seen:
                continue
            recip = field.reciprocal(p)
            if recip == p:
                d = (len(p) - 1) // 2
                if (len(p) - 1) % 2:
                    ok = False
                    break
                unitary.append((d, mult))
            else:
                if factors.get(recip) != mult:
                    ok = False
                    break
                seen.add(recip)
                gl.append((len(p) - 1, mult))
            seen.add(p)
        if not ok:
            continue
        shape = SpType(a_plus // 2, a_minus // 2, unitary, gl)
        tally[shape] += 1
    return tally


def self_reciprocal_irreducible_census(field: FiniteField, two_n: int) -> int:
    """Exhaustive count of self-reciprocal irreducible monic polynomials of
    even degree two_n."""
    if two_n < 2 or two_n % 2:
        raise ValueError("degree must be even and at least 2")
    n = two_n // 2
    if field.q**n > 10**6:
        raise BudgetError("enumeration over budget; use the counting formulas")
    _irreducibles_up_to(field, n)
    count = 0
    for digits in itertools.product(range(field.q), repeat=n):
        coeffs = (1,) + digits + tuple(reversed(digits[:-1])) + (1,)
        if _is_irreducible_cached(field, coeffs):
            count += 1
    return count


# ---------------------------------------------------------------------------
# tiny matrix census
# ---------------------------------------------------------------------------


def matrix_census_tiny(spec, field: FiniteField) -> dict[tuple[int, ...], int]:
    """Conjugacy classes of semisimple elements of the rank-1 group over the
    field, keyed by characteristic polynomial; asserts agreement with the
    polynomial-level census."""
    spec = parse_group_spec(spec)
    ((kind, size),) = spec.items()
    if kind not in ("SL", "Sp") or size != 2:
        raise ValueError("matrix census is implemented for SL(2) = Sp(2) only")
    q = field.q
    order = q * (q * q - 1)
    if order > 10**5:
        raise BudgetError("group order over budget")
    group = []
    for a, b, c, d in itertools.product(range(q), repeat=4):
        det = field.sub(field.mul(a, d), field.mul(b, c))
        if det == 1:
            group.append((a, b, c, d))
    assert len(group) == order

    def mat_mul(m1, m2):
        a, b, c, d = m1
        e, f, g, h = m2
        return (
            field.add(field.mul(a, e), field.mul(b, g)),
            field.add(field.mul(a, f), field.mul(b, h)),
            field.add(field.mul(c, e), field.mul(d, g)),
            field.add(field.mul(c, f), field.mul(d, h)),
        )

    identity = (1, 0, 0, 1)

    def element_order(m):
        acc, e = m, 1
        while acc != identity:
            acc = mat_mul(acc, m)
            e += 1
        return e

    def inverse(m):
        a, b, c, d = m  # determinant is 1
        return (d, field.neg(b), field.neg(c), a)

    semisimple = [m for m in group if element_order(m) % field.p != 0]
    classes: dict[tuple[int, ...], int] = {}
    visited = set()
    for m in semisimple:
        if m in visited:
            continue
        orbit = {mat_mul(mat_mul(g, m), inverse(g)) for g in group}
        visited |= orbit
        a, b, c, d = m
        charpoly = (
            field.sub(field.mul(a, d), field.mul(b, c)),
            field.neg(field.add(a, d)),
            1,
        )
        classes[charpoly] = classes.get(charpoly, 0) + 1
    total_polys = sum(sl_census(2, field).values())
    assert sum(classes.values()) == total_polys, "class/polynomial census mismatch"
    return classes
