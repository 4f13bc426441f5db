"""Command-line front door: every computation as a batch command.

Inputs that start with "{" are parsed as inline JSON; anything else is
treated as a path to a JSON file.  All output is exact: rationals print as
"a/b" (denominator omitted when 1) and polynomials print in ascending
exponent order with explicit "*" and "^".

Exit codes: 0 success, 1 certificate or verification failure, 2 malformed
input, 3 enumeration budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from .classsums import (
    CertificateError,
    class_sum,
    sl_prime_certificate,
    sl_script_p,
    sp_certificate,
)
from .curves import CurveDatum
from .lefschetz import LefschetzFunction, f_N_transform, place_product
from .lseries import l_value
from .motives import motive_of
from .oracle import BudgetError, FiniteField, sl_census, sp_census
from .verify import run_suite


def _load_json(source: str):
    if source.lstrip().startswith("{"):
        return json.loads(source)
    try:
        with open(source, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise _InputError(f"cannot read {source}: {exc}") from exc


class _InputError(Exception):
    pass


def _parse_group(text: str) -> dict:
    kind, _, rank = text.partition(":")
    if kind not in ("SL", "Sp", "GL") or not rank.isdigit():
        raise _InputError(f"group must look like SL:n or Sp:2n, got {text!r}")
    return {kind: int(rank)}


def _curve_from(source: str, q_override: int | None = None) -> CurveDatum:
    data = _load_json(source)
    if not isinstance(data, dict):
        raise _InputError("curve description must be a JSON object")
    if q_override is not None:
        data = dict(data, q=q_override)
    try:
        return CurveDatum.from_json(data)
    except KeyError as exc:
        raise _InputError(f"curve description is missing {exc}") from exc


def _field_of(q: int) -> FiniteField:
    for p in (2, 3, 5, 7, 11, 13):
        k = 0
        m = q
        while m % p == 0:
            m //= p
            k += 1
        if m == 1:
            return FiniteField(p, k)
    return FiniteField(q)


def _parse_base_function(text: str) -> LefschetzFunction:
    kind, _, arg = text.partition(":")
    if not arg.lstrip("-").isdigit():
        raise _InputError(f"function must look like chi:N, const:C, or base:B, got {text!r}")
    value = int(arg)
    if kind == "chi":
        return LefschetzFunction.chi(value)
    if kind == "const":
        return LefschetzFunction.constant(value)
    if kind == "base":
        return LefschetzFunction.single(1, value)
    raise _InputError(f"unknown function kind {kind!r}")


# -- subcommand handlers -----------------------------------------------------


def _cmd_motive(args) -> int:
    motive = motive_of(_load_json(args.groupspec))
    factors = motive.frobenius_det_factors()
    print("".join(f"({f})" for f in factors) if factors else "1")
    return 0


def _cmd_lfun(args) -> int:
    curve = _curve_from(args.curve)
    motive = motive_of(_load_json(args.groupspec))
    print(l_value(motive, curve))
    return 0


def _cmd_class_sum(args) -> int:
    curve = _curve_from(args.curve, args.q)
    if args.base_change > 1:
        curve = curve.base_change(args.base_change)
    print(class_sum(_parse_group(args.group), curve))
    return 0


def _cmd_certificate(args) -> int:
    params = _load_json(args.params)
    if not isinstance(params, dict):
        raise _InputError("--params must be a JSON object")
    try:
        if args.family == "sl-prime":
            cert = sl_prime_certificate(params["l"], params.get("r", 0))
        elif args.family == "sl-general":
            cert = sl_script_p(
                params["n"],
                params.get("r", 0),
                params.get("n_prime", 1),
                params.get("d_prime", 1),
            )
        else:
            cert = sp_certificate(params["n"], params["parity"], params.get("r", 0))
    except KeyError as exc:
        raise _InputError(f"--params is missing {exc}") from exc
    print(json.dumps(cert.as_json_dict(), indent=2))
    return 0


def _cmd_census(args) -> int:
    spec = _parse_group(args.group)
    field = _field_of(args.q)
    (kind, rank), = spec.items()
    if kind == "SL":
        census = sl_census(rank, field)
    elif kind == "Sp":
        if rank % 2:
            raise _InputError("symplectic size must be even")
        census = sp_census(rank // 2, field)
    else:
        raise _InputError("census supports SL:n and Sp:2n only")
    print("type,count")
    for shape, count in census.items():
        # general-linear blocks are census-internal; the tabulated universe
        # for Sp is the unitary/central one
        if kind == "Sp" and shape.gl_pairs:
            continue
        print(f"{shape.label()},{count}")
    return 0


def _cmd_lefschetz(args) -> int:
    if args.op == "chi":
        fn = LefschetzFunction.chi(args.n)
    elif args.op == "fN":
        fn = f_N_transform(_parse_base_function(args.f), args.n)
    else:
        degrees = [int(d) for d in args.degrees.split(",") if d]
        if not degrees:
            raise _InputError("--degrees must list place degrees, e.g. 2,3")
        fn = place_product(_parse_base_function(args.f), degrees)
    print("m,value")
    for m in range(1, args.m_max + 1):
        print(f"{m},{fn.evaluate(m)}")
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.suite)
    failures = 0
    for label, passed in results:
        print(f"{label}: {'PASS' if passed else 'FAIL'}")
        failures += not passed
    print(f"{len(results) - failures} passed, {failures} failed")
    return 1 if failures else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motivesums",
        description="Exact class sums, L-values, and verification certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("motive", help="print the graded Frobenius determinant")
    p.add_argument("groupspec", help="group description (JSON file or inline)")
    p.set_defaults(handler=_cmd_motive)

    p = sub.add_parser("lfun", help="print an exact L-value")
    p.add_argument("curve", help="curve datum (JSON file or inline)")
    p.add_argument("groupspec", help="group description (JSON file or inline)")
    p.set_defaults(handler=_cmd_lfun)

    p = sub.add_parser("class-sum", help="sum of L-values over semisimple types")
    p.add_argument("curve", help="curve datum (JSON file or inline)")
    p.add_argument("--group", required=True, help="SL:n or Sp:2n")
    p.add_argument("--base-change", type=int, default=1, metavar="M")
    p.add_argument("--q", type=int, default=None, help="override the base field size")
    p.set_defaults(handler=_cmd_class_sum)

    p = sub.add_parser("certificate", help="build and print a verified certificate")
    p.add_argument("--family", required=True, choices=("sl-prime", "sl-general", "sp"))
    p.add_argument("--params", required=True, help="family parameters (JSON)")
    p.set_defaults(handler=_cmd_certificate)

    p = sub.add_parser("census", help="exhaustive finite-field class census (CSV)")
    p.add_argument("--group", required=True, help="SL:n or Sp:2n")
    p.add_argument("--q", required=True, type=int)
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser("lefschetz", help="exponential-sum transforms (CSV of values)")
    p.add_argument("--op", required=True, choices=("chi", "fN", "place-product"))
    p.add_argument("--n", type=int, default=1, help="index for chi and fN")
    p.add_argument("--f", default="chi:2", help="base function: chi:N, const:C, or base:B")
    p.add_argument("--degrees", default="", help="place degrees for place-product, e.g. 2,3")
    p.add_argument("--m-max", type=int, default=8)
    p.set_defaults(handler=_cmd_lefschetz)

    p = sub.add_parser("verify", help="run the verification battery")
    p.add_argument("--suite", default="all", choices=("all", "tables", "identities"))
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (json.JSONDecodeError, _InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CertificateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
