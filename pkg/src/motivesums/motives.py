"""Weight-graded Frobenius data attached to split reductive groups.

A graded piece carries a weight d and a characteristic polynomial c_d(u) in Z[u]
with c_d(0) = 1 whose inverse roots are roots of unity.  A group's data is the
multiset of pieces coming from its invariant-degree exponents; products add
piece-wise and restriction of scalars rescales the Frobenius variable.
"""
from __future__ import annotations

import dataclasses
import json
from typing import Union

from .exactalg import IntPolynomial, SymbolicPolynomial


@dataclasses.dataclass(frozen=True)
class GradedPiece:
    """One weight-graded Frobenius factor: weight and characteristic
    polynomial of Frobenius acting on that graded slot, as an IntPolynomial
    in the Frobenius variable u with constant term 1."""

    weight: int
    charpoly: IntPolynomial

    def __post_init__(self):
        if self.weight < 0:
            raise ValueError("weight must be nonnegative")
        if self.charpoly.is_zero() or self.charpoly.coeffs[0] != 1:
            raise ValueError("characteristic polynomial must have constant term 1")

    def merged_with(self, other: "GradedPiece") -> "GradedPiece":
        if other.weight != self.weight:
            raise ValueError("can only merge pieces of equal weight")
        return GradedPiece(self.weight, self.charpoly * other.charpoly)


@dataclasses.dataclass(frozen=True)
class ArtinTateMotive:
    """Finite multiset of graded pieces, stored merged by weight and sorted."""

    pieces: tuple[GradedPiece, ...]

    def __init__(self, pieces):
        merged: dict[int, GradedPiece] = {}
        for p in pieces:
            merged[p.weight] = merged[p.weight].merged_with(p) if p.weight in merged else p
        object.__setattr__(
            self, "pieces", tuple(merged[w] for w in sorted(merged))
        )

    def direct_sum(self, other: "ArtinTateMotive") -> "ArtinTateMotive":
        return ArtinTateMotive(self.pieces + other.pieces)

    def induce(self, d: int) -> "ArtinTateMotive":
        """Restriction of scalars along a degree-d extension: each
        characteristic polynomial c(u) becomes c(u^d); weights are kept."""
        if d < 1:
            raise ValueError("induction degree must be positive")
        return ArtinTateMotive(
            GradedPiece(p.weight, p.charpoly.substitute_power(d)) for p in self.pieces
        )

    def piece_of_weight(self, weight: int) -> IntPolynomial:
        for p in self.pieces:
            if p.weight == weight:
                return p.charpoly
        return IntPolynomial((1,))

    def quotient_trivial(self) -> "ArtinTateMotive":
        """Remove one trivial Frobenius eigenvalue in weight 1, dividing the
        weight-1 characteristic polynomial by 1 - u exactly."""
        out = []
        seen = False
        for p in self.pieces:
            if p.weight == 1:
                seen = True
                quotient = p.charpoly / IntPolynomial((1, -1))
                if not quotient.is_zero() and quotient != IntPolynomial((1,)):
                    out.append(GradedPiece(1, quotient))
            else:
                out.append(p)
        if not seen:
            raise ValueError("no weight-1 piece to divide the trivial factor from")
        return ArtinTateMotive(out)

    def frobenius_det(self) -> SymbolicPolynomial:
        """Graded Frobenius determinant: the product over pieces of
        c_d(t * q^(d-1)) as a polynomial in t and q."""
        t = SymbolicPolynomial.variable("t")
        q = SymbolicPolynomial.variable("q")
        acc = SymbolicPolynomial.constant(1)
        for p in self.pieces:
            arg = t * q ** (p.weight - 1)
            acc = acc * SymbolicPolynomial.from_int_poly(p.charpoly, "u").substitute({"u": arg})
        return acc

    def frobenius_det_factors(self) -> list[SymbolicPolynomial]:
        """Per-piece factors of frobenius_det, in weight order."""
        t = SymbolicPolynomial.variable("t")
        q = SymbolicPolynomial.variable("q")
        return [
            SymbolicPolynomial.from_int_poly(p.charpoly, "u").substitute(
                {"u": t * q ** (p.weight - 1)}
            )
            for p in self.pieces
        ]


GroupSpec = Union[dict, str]


def parse_group_spec(spec: GroupSpec) -> dict:
    """Accept a JSON string or an already-parsed dict describing a group.

    Recognized shapes: {"GL": n}, {"SL": n}, {"U": n}, {"Sp": 2n},
    {"SO": 2n+1}, {"Res": [d, inner]}, {"Product": [inner, ...]}.
    """
    if isinstance(spec, str):
        spec = json.loads(spec)
    if not isinstance(spec, dict) or len(spec) != 1:
        raise ValueError("group description must be a single-key object")
    return spec


ONE_MINUS_U = IntPolynomial((1, -1))
ONE_PLUS_U = IntPolynomial((1, 1))


def motive_of(spec: GroupSpec) -> ArtinTateMotive:
    """Weight-graded Frobenius data of a group given by a nested description.

    >>> [p.weight for p in motive_of({"Sp": 4}).pieces]
    [2, 4]
    >>> motive_of({"GL": 2}).piece_of_weight(1).coeffs
    (1, -1)
    """
    spec = parse_group_spec(spec)
    (kind, arg), = spec.items()
    if kind == "GL":
        n = _positive_int(arg, "GL rank")
        return ArtinTateMotive(GradedPiece(d, ONE_MINUS_U) for d in range(1, n + 1))
    if kind == "SL":
        n = _positive_int(arg, "SL rank")
        return ArtinTateMotive(GradedPiece(d, ONE_MINUS_U) for d in range(2, n + 1))
    if kind == "U":
        n = _positive_int(arg, "unitary rank")
        return ArtinTateMotive(
            GradedPiece(d, ONE_MINUS_U if d % 2 == 0 else ONE_PLUS_U)
            for d in range(1, n + 1)
        )
    if kind == "Sp":
        n = _positive_int(arg, "symplectic size")
        if n % 2:
            raise ValueError("symplectic size must be even")
        return ArtinTateMotive(GradedPiece(d, ONE_MINUS_U) for d in range(2, n + 1, 2))
    if kind == "SO":
        n = _positive_int(arg, "orthogonal size")
        if n % 2 == 0:
            raise ValueError("only odd orthogonal sizes are supported")
        return ArtinTateMotive(GradedPiece(d, ONE_MINUS_U) for d in range(2, n, 2))
    if kind == "Res":
        if not isinstance(arg, list) or len(arg) != 2:
            raise ValueError("scalar restriction takes [degree, group]")
        d, inner = arg
        return motive_of(inner).induce(_positive_int(d, "restriction degree"))
    if kind == "Product":
        if not isinstance(arg, list) or not arg:
            raise ValueError("product takes a nonempty list of groups")
        acc = motive_of(arg[0])
        for inner in arg[1:]:
            acc = acc.direct_sum(motive_of(inner))
        return acc
    raise ValueError(f"unknown group kind {kind!r}")


def _positive_int(v, label: str) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise ValueError(f"{label} must be a positive integer, got {v!r}")
    return v


def weights_vector(motive: ArtinTateMotive) -> list[tuple[int, tuple[int, ...]]]:
    """Compact weight/coefficient listing, handy for table displays."""
    return [(p.weight, p.charpoly.coeffs) for p in motive.pieces]
