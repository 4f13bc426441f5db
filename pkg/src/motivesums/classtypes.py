"""Semisimple conjugacy-class types for SL_n and Sp_2n.

A type records the shape of a characteristic polynomial factorization:
for SL_n a multiset of (degree, multiplicity) pairs summing to n; for Sp_2n
the eigenvalue-1/-1 block halves, the self-reciprocal (unitary) blocks, and
the reciprocal-pair (general-linear) blocks.  The centralizer of a semisimple
element depends only on the type, so class counts and centralizer Frobenius
data are computed per type.
"""
from __future__ import annotations

import dataclasses
import functools
import math
from fractions import Fraction
from typing import Iterable

from .exactalg import RationalFunction, SymbolicPolynomial
from .motives import ArtinTateMotive, motive_of


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("argument must be positive")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# ---------------------------------------------------------------------------
# SL types
# ---------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class SLType:
    """Multiset of (degree, multiplicity) pairs with sum degree*multiplicity
    equal to n."""

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs: Iterable[tuple[int, int]]):
        ps = tuple(sorted(tuple(p) for p in pairs))
        if not ps or any(d < 1 or a < 1 for d, a in ps):
            raise ValueError("pairs must be positive (degree, multiplicity) tuples")
        object.__setattr__(self, "pairs", ps)

    @property
    def n(self) -> int:
        return sum(d * a for d, a in self.pairs)

    def label(self) -> str:
        return "+".join(f"{a}x{d}" for d, a in self.pairs)


def enumerate_sl_types(n: int) -> list[SLType]:
    """All multisets of (degree, multiplicity) pairs of total size n."""
    if n < 1:
        raise ValueError("n must be positive")
    out: list[SLType] = []

    def rec(remaining: int, chosen: list[tuple[int, int]], floor: tuple[int, int]):
        if remaining == 0:
            out.append(SLType(chosen))
            return
        for d in range(1, remaining + 1):
            for a in range(1, remaining // d + 1):
                if (d, a) < floor:
                    continue
                if d * a <= remaining:
                    rec(remaining - d * a, chosen + [(d, a)], (d, a))

    rec(n, [], (1, 1))
    return out


def sl_centralizer_motive(t: SLType) -> ArtinTateMotive:
    """Frobenius data of the centralizer: the direct sum of degree-d scalar
    restrictions of GL(a) blocks with one trivial weight-1 eigenvalue
    removed."""
    acc = motive_of({"Res": [t.pairs[0][0], {"GL": t.pairs[0][1]}]})
    for d, a in t.pairs[1:]:
        acc = acc.direct_sum(motive_of({"Res": [d, {"GL": a}]}))
    return acc.quotient_trivial()


def ratio_at_one(t: SLType) -> RationalFunction:
    """Value of the centralizer Frobenius determinant ratio det(t=1)/det(t=q)
    as a rational function of q: d*(1-q)/(1-q^n) for a single-block type and
    0 otherwise."""
    q = SymbolicPolynomial.variable("q")
    if len(t.pairs) > 1:
        return RationalFunction(SymbolicPolynomial.constant(0))
    d, _ = t.pairs[0]
    return RationalFunction(d * (1 - q), 1 - q**t.n)


def count_sl(n: int, d: int, q: int) -> int:
    """Number of monic irreducible degree-d polynomials P over the field of
    q elements with P(0)^(n/d) = (-1)^n, via norm-fiber Moebius counting."""
    if n % d:
        raise ValueError("degree must divide n")
    total = 0
    for e in divisors(d):
        total += moebius(d // e) * math.gcd(n // e, q - 1) * (q**e - 1) // (q - 1)
    quot, rem = divmod(total, d)
    if rem or quot < 0:
        raise ArithmeticError("class count must be a nonnegative integer")
    return quot


# ---------------------------------------------------------------------------
# Sp types
# ---------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class SpType:
    """Half-dimension data (a_plus, a_minus; unitary (d, b) blocks;
    general-linear (e, c) blocks); a_plus >= a_minus canonically."""

    a_plus: int
    a_minus: int
    unitary_pairs: tuple[tuple[int, int], ...]
    gl_pairs: tuple[tuple[int, int], ...]

    def __init__(self, a_plus: int, a_minus: int = 0, unitary_pairs=(), gl_pairs=()):
        if a_plus < 0 or a_minus < 0:
            raise ValueError("eigenvalue block halves must be nonnegative")
        if a_plus < a_minus:
            a_plus, a_minus = a_minus, a_plus
        up = tuple(sorted(tuple(p) for p in unitary_pairs))
        gp = tuple(sorted(tuple(p) for p in gl_pairs))
        if any(d < 1 or b < 1 for d, b in up + gp):
            raise ValueError("blocks must be positive (degree, multiplicity) tuples")
        object.__setattr__(self, "a_plus", a_plus)
        object.__setattr__(self, "a_minus", a_minus)
        object.__setattr__(self, "unitary_pairs", up)
        object.__setattr__(self, "gl_pairs", gp)

    @property
    def half_dimension(self) -> int:
        return (
            self.a_plus
            + self.a_minus
            + sum(d * b for d, b in self.unitary_pairs)
            + sum(e * c for e, c in self.gl_pairs)
        )

    def label(self) -> str:
        parts = [f"{self.a_plus}.{self.a_minus}"]
        parts.append("u" + "+".join(f"{b}x{d}" for d, b in self.unitary_pairs))
        parts.append("g" + "+".join(f"{c}x{e}" for e, c in self.gl_pairs))
        return "|".join(parts)


def enumerate_sp_types(n: int, q_even: bool, include_gl: bool = False) -> list[SpType]:
    """All types of half-dimension n; a_minus = 0 when the field has even
    size.  General-linear blocks are excluded by default because their
    L-values vanish; include_gl=True gives the full census universe."""
    if n < 1:
        raise ValueError("n must be positive")
    out: list[SpType] = []
    seen: set = set()

    def pair_multisets(remaining: int):
        # multisets of (degree, multiplicity) with sum degree*multiplicity <= remaining
        def rec(rem: int, chosen: list[tuple[int, int]], floor: tuple[int, int]):
            yield tuple(chosen)
            for d in range(1, rem + 1):
                for b in range(1, rem // d + 1):
                    if (d, b) < floor:
                        continue
                    yield from rec(rem - d * b, chosen + [(d, b)], (d, b))

        yield from rec(remaining, [], (1, 1))

    for a_plus in range(n + 1):
        minus_range = [0] if q_even else range(a_plus + 1)
        for a_minus in minus_range:
            rest = n - a_plus - a_minus
            if rest < 0:
                continue
            for up in pair_multisets(rest):
                used = sum(d * b for d, b in up)
                leftover = rest - used
                if include_gl:
                    for gp in pair_multisets(leftover):
                        if sum(e * c for e, c in gp) == leftover:
                            t = SpType(a_plus, a_minus, up, gp)
                            key = (t.a_plus, t.a_minus, t.unitary_pairs, t.gl_pairs)
                            if key not in seen:
                                seen.add(key)
                                out.append(t)
                elif leftover == 0:
                    t = SpType(a_plus, a_minus, up, ())
                    key = (t.a_plus, t.a_minus, t.unitary_pairs, t.gl_pairs)
                    if key not in seen:
                        seen.add(key)
                        out.append(t)
    return out


def sp_centralizer_motive(t: SpType) -> ArtinTateMotive:
    """Frobenius data of Sp(2a+) x Sp(2a-) x scalar-restricted unitary and
    general-linear blocks."""
    specs = []
    if t.a_plus:
        specs.append({"Sp": 2 * t.a_plus})
    if t.a_minus:
        specs.append({"Sp": 2 * t.a_minus})
    for d, b in t.unitary_pairs:
        specs.append({"Res": [d, {"U": b}]})
    for e, c in t.gl_pairs:
        specs.append({"Res": [e, {"GL": c}]})
    if not specs:
        return ArtinTateMotive(())
    acc = motive_of(specs[0])
    for s in specs[1:]:
        acc = acc.direct_sum(motive_of(s))
    return acc


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------


def s_count(two_n: int, q: int) -> int:
    """Number of self-reciprocal irreducible monic polynomials of the given
    even degree over the field with q elements."""
    if two_n < 2 or two_n % 2:
        raise ValueError("degree must be even and at least 2")
    n = two_n // 2
    if q % 2 == 1 and n & (n - 1) == 0:
        num, rem = divmod(q**n - 1, 2 * n)
    else:
        total = sum(moebius(d) * q ** (n // d) for d in divisors(n) if d % 2)
        num, rem = divmod(total, 2 * n)
    if rem:
        raise ArithmeticError("self-reciprocal count must be an integer")
    return num


def irreducible_count(e: int, q: int) -> int:
    total = sum(moebius(d) * q ** (e // d) for d in divisors(e))
    quot, rem = divmod(total, e)
    assert rem == 0
    return quot


def _reciprocal_pair_count(e: int, q: int) -> int:
    """Unordered pairs {Q, Q*} of distinct degree-e irreducible monics with
    nonzero constant term that are mutual reciprocals."""
    irr = irreducible_count(e, q) - (1 if e == 1 else 0)  # exclude x itself
    if e == 1:
        self_rec = 2 if q % 2 else 1  # x - 1 and, for odd q, x + 1
    elif e % 2 == 0:
        self_rec = s_count(e, q)
    else:
        self_rec = 0
    pairs, rem = divmod(irr - self_rec, 2)
    assert rem == 0
    return pairs


def _falling(base: Fraction, k: int) -> Fraction:
    acc = Fraction(1)
    for i in range(k):
        acc *= base - i
    return acc


def count_sp(t: SpType, q: int) -> int:
    """Number of semisimple classes of the given type over the field with q
    elements, as an exact integer."""
    if q % 2 == 0 and t.a_minus:
        raise ValueError("eigenvalue -1 blocks require odd field size")
    value = Fraction(2 if t.a_plus != t.a_minus and q % 2 else 1)
    for blocks, counter in (
        (t.unitary_pairs, lambda d: Fraction(s_count(2 * d, q))),
        (t.gl_pairs, lambda e: Fraction(_reciprocal_pair_count(e, q))),
    ):
        by_degree: dict[int, list[int]] = {}
        for d, b in blocks:
            by_degree.setdefault(d, []).append(b)
        for d, bs in by_degree.items():
            value *= _falling(counter(d), len(bs))
            for mult in set(bs):
                value /= math.factorial(bs.count(mult))
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"class count {value} is not a nonnegative integer")
    return int(value)


# ---------------------------------------------------------------------------
# golden table data
# ---------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class TableRow:
    label: str
    sp_type: SpType
    count: "object"  # callable q -> Fraction
    det: SymbolicPolynomial


def _det(*factors) -> SymbolicPolynomial:
    acc = SymbolicPolynomial.constant(1)
    for f in factors:
        acc = acc * f
    return acc


@functools.cache
def table_goldens() -> dict[tuple[int, str], tuple[TableRow, ...]]:
    """Embedded per-type class counts and centralizer determinants for
    Sp_4 and Sp_6 at both field parities; consumed by tests and the
    verification suite."""
    t = SymbolicPolynomial.variable("t")
    q = SymbolicPolynomial.variable("q")
    one_plus_t = 1 + t
    m1 = 1 - t * q
    m3 = 1 - t * q**3
    m5 = 1 - t * q**5
    p2 = 1 + t**2
    p3 = 1 + t**3
    pq2 = 1 + t * q**2

    def row(label, tp, count, det):
        return TableRow(label, tp, count, det)

    sp4_odd = (
        row("t1", SpType(2), lambda v: Fraction(2), _det(m1, m3)),
        row("t2", SpType(1, 1), lambda v: Fraction(1), _det(m1, m1)),
        row("t3", SpType(1, 0, [(1, 1)]), lambda v: Fraction(v - 1), _det(m1, one_plus_t)),
        row("t4", SpType(0, 0, [(1, 2)]), lambda v: Fraction(v - 1, 2), _det(one_plus_t, m1)),
        row(
            "t5",
            SpType(0, 0, [(1, 1), (1, 1)]),
            lambda v: Fraction((v - 1) * (v - 3), 8),
            _det(one_plus_t, one_plus_t),
        ),
        row("t6", SpType(0, 0, [(2, 1)]), lambda v: Fraction(v**2 - 1, 4), p2),
    )
    sp4_even = (
        row("t1", SpType(2), lambda v: Fraction(1), _det(m1, m3)),
        row("t3", SpType(1, 0, [(1, 1)]), lambda v: Fraction(v, 2), _det(m1, one_plus_t)),
        row("t4", SpType(0, 0, [(1, 2)]), lambda v: Fraction(v, 2), _det(one_plus_t, m1)),
        row(
            "t5",
            SpType(0, 0, [(1, 1), (1, 1)]),
            lambda v: Fraction(v * (v - 2), 8),
            _det(one_plus_t, one_plus_t),
        ),
        row("t6", SpType(0, 0, [(2, 1)]), lambda v: Fraction(v**2, 4), p2),
    )
    sp6_odd = (
        row("t1", SpType(3), lambda v: Fraction(2), _det(m1, m3, m5)),
        row("t2", SpType(2, 1), lambda v: Fraction(2), _det(m1, m1, m3)),
        row("t3", SpType(2, 0, [(1, 1)]), lambda v: Fraction(v - 1), _det(one_plus_t, m1, m3)),
        row("t4", SpType(1, 1, [(1, 1)]), lambda v: Fraction(v - 1, 2), _det(one_plus_t, m1, m1)),
        row("t5", SpType(1, 0, [(1, 2)]), lambda v: Fraction(v - 1), _det(one_plus_t, m1, m1)),
        row(
            "t6",
            SpType(1, 0, [(1, 1), (1, 1)]),
            lambda v: Fraction((v - 1) * (v - 3), 4),
            _det(one_plus_t, one_plus_t, m1),
        ),
        row("t7", SpType(1, 0, [(2, 1)]), lambda v: Fraction(v**2 - 1, 2), _det(p2, m1)),
        row("t8", SpType(0, 0, [(1, 3)]), lambda v: Fraction(v - 1, 2), _det(one_plus_t, m1, pq2)),
        row(
            "t9",
            SpType(0, 0, [(1, 2), (1, 1)]),
            lambda v: Fraction((v - 1) * (v - 3), 4),
            _det(one_plus_t, one_plus_t, m1),
        ),
        row(
            "t10",
            SpType(0, 0, [(1, 1), (1, 1), (1, 1)]),
            lambda v: Fraction((v - 1) * (v - 3) * (v - 5), 48),
            _det(one_plus_t, one_plus_t, one_plus_t),
        ),
        row(
            "t11",
            SpType(0, 0, [(2, 1), (1, 1)]),
            lambda v: Fraction((v - 1) * (v**2 - 1), 8),
            _det(one_plus_t, p2),
        ),
        row("t12", SpType(0, 0, [(3, 1)]), lambda v: Fraction(v**3 - v, 6), p3),
    )
    sp6_even = (
        row("t1", SpType(3), lambda v: Fraction(1), _det(m1, m3, m5)),
        row("t3", SpType(2, 0, [(1, 1)]), lambda v: Fraction(v, 2), _det(one_plus_t, m1, m3)),
        row("t5", SpType(1, 0, [(1, 2)]), lambda v: Fraction(v, 2), _det(one_plus_t, m1, m1)),
        row(
            "t6",
            SpType(1, 0, [(1, 1), (1, 1)]),
            lambda v: Fraction(v * (v - 2), 8),
            _det(one_plus_t, one_plus_t, m1),
        ),
        row("t7", SpType(1, 0, [(2, 1)]), lambda v: Fraction(v**2, 4), _det(p2, m1)),
        row("t8", SpType(0, 0, [(1, 3)]), lambda v: Fraction(v, 2), _det(one_plus_t, m1, pq2)),
        row(
            "t9",
            SpType(0, 0, [(1, 2), (1, 1)]),
            lambda v: Fraction(v * (v - 2), 4),
            _det(one_plus_t, one_plus_t, m1),
        ),
        row(
            "t10",
            SpType(0, 0, [(1, 1), (1, 1), (1, 1)]),
            lambda v: Fraction(v * (v - 2) * (v - 4), 48),
            _det(one_plus_t, one_plus_t, one_plus_t),
        ),
        row(
            "t11",
            SpType(0, 0, [(2, 1), (1, 1)]),
            lambda v: Fraction(v**3, 8),
            _det(one_plus_t, p2),
        ),
        row("t12", SpType(0, 0, [(3, 1)]), lambda v: Fraction(v**3 - v, 6), p3),
    )
    return {
        (2, "odd"): sp4_odd,
        (2, "even"): sp4_even,
        (3, "odd"): sp6_odd,
        (3, "even"): sp6_even,
    }
