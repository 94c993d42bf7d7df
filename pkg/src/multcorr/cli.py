"""Command-line surface: every computation with machine-readable output.

Subcommands: density, kappa, verify, spectrum, construct, closure, series.
Results always carry the exact rational as "num/den" next to a decimal
rendering (12 significant digits by default), either as plain text or as one
JSON object per invocation with --json.  Series output is CSV with header
``x,sum,average`` or JSON records.

Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
3 resource cap (prime budget, degree cap).
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .core import BudgetError, PrimeSet, ShiftSet
from .density import local_density, local_density_trace
from .gf2 import closure_membership, family_from_generators, pow_t_mod, two_element_member
from .sieve import DEFAULT_SEGMENT_LENGTH, SieveConfig, running_average
from .spectrum import (
    construct_prime_set,
    correlation,
    describe_spectrum,
    truncated_correlation,
)

DEFAULT_DIGITS = 12


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the exit-code protocol reserves 2 for
    # verification failures, so remap usage errors to 1.
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_int_list(text: str, what: str) -> list[int]:
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            values.append(int(token))
        except ValueError:
            raise ValueError(f"invalid {what} token '{token}'") from None
    return values


def _parse_fraction(text: str, what: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"invalid {what} token '{text}'") from None


def rational_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def short_rational(q: Fraction) -> str:
    """Rational without the redundant unit denominator, for compact lines."""
    return str(q.numerator) if q.denominator == 1 else rational_str(q)


def decimal_str(q: Fraction, digits: int = DEFAULT_DIGITS) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(q.numerator) / Decimal(q.denominator))


def _value_fields(q: Fraction, digits: int) -> dict:
    return {"rational": rational_str(q), "decimal": decimal_str(q, digits)}


def _emit(record: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(record, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _cmd_density(args) -> int:
    shifts = ShiftSet(_parse_int_list(args.shifts, "shift"))
    value = local_density(args.prime, shifts)
    lines = [f"eta={rational_str(value)} decimal={decimal_str(value, args.digits)}"]
    record = {
        "command": "density",
        "inputs": {"p": args.prime, "H": list(shifts)},
        "result": {"eta": _value_fields(value, args.digits)},
    }
    if args.trace:
        trace = local_density_trace(args.prime, shifts).lines()
        lines = trace + lines
        record["result"]["trace"] = trace
    _emit(record, args.json, lines)
    return 0


def _cmd_kappa(args) -> int:
    pset = PrimeSet(_parse_int_list(args.primes, "prime"))
    shifts = ShiftSet(_parse_int_list(args.shifts, "shift"))
    record = {
        "command": "kappa",
        "inputs": {"P": list(pset), "H": list(shifts)},
    }
    if args.tail_sum is None:
        corr = correlation(pset, shifts)
        lines = [f"kappa={rational_str(corr.value)} decimal={decimal_str(corr.value, args.digits)}"]
        record["result"] = {
            "kappa": _value_fields(corr.value, args.digits),
            "factors": [[p, rational_str(f)] for p, f in corr.factors],
        }
    else:
        tail = _parse_fraction(args.tail_sum, "tail-sum")
        box = truncated_correlation(pset, tail, shifts)
        lines = [
            f"center={rational_str(box.center)} radius={rational_str(box.radius)} "
            f"interval=[{rational_str(box.lower)},{rational_str(box.upper)}]"
        ]
        record["inputs"]["tail_sum"] = rational_str(tail)
        record["result"] = {
            "center": _value_fields(box.center, args.digits),
            "radius": _value_fields(box.radius, args.digits),
            "lower": rational_str(box.lower),
            "upper": rational_str(box.upper),
        }
    _emit(record, args.json, lines)
    return 0


def _cmd_verify(args) -> int:
    pset = PrimeSet(_parse_int_list(args.primes, "prime"))
    shifts = ShiftSet(_parse_int_list(args.shifts, "shift"))
    tol = _parse_fraction(args.tol, "tolerance")
    if tol < 0:
        raise ValueError(f"invalid tolerance token '{args.tol}'")
    exact = correlation(pset, shifts).value
    cfg = SieveConfig(x_max=args.x, segment_length=args.segment_length)
    sieved = running_average(pset, shifts, cfg, threads=args.threads).final.average
    diff = abs(sieved - exact)
    ok = diff <= tol
    lines = [
        f"exact={rational_str(exact)} sieve={rational_str(sieved)} "
        f"diff={decimal_str(diff, args.digits)} tol={rational_str(tol)} "
        f"status={'pass' if ok else 'fail'}"
    ]
    record = {
        "command": "verify",
        "inputs": {"P": list(pset), "H": list(shifts), "x": args.x, "tol": rational_str(tol)},
        "result": {
            "exact": _value_fields(exact, args.digits),
            "sieve": _value_fields(sieved, args.digits),
            "diff": _value_fields(diff, args.digits),
            "status": "pass" if ok else "fail",
        },
    }
    _emit(record, args.json, lines)
    return 0 if ok else 2


def _cmd_spectrum(args) -> int:
    shifts = ShiftSet(_parse_int_list(args.shifts, "shift"))
    desc = describe_spectrum(shifts)
    lines = [
        f"alpha={short_rational(desc.floor)} witness={desc.witness} "
        f"interval=[{short_rational(desc.lo)},{short_rational(desc.hi)}]"
    ]
    record = {
        "command": "spectrum",
        "inputs": {"H": list(shifts)},
        "result": {
            "alpha": _value_fields(desc.floor, args.digits),
            "witness": desc.witness,
            "interval": [rational_str(desc.lo), rational_str(desc.hi)],
        },
    }
    _emit(record, args.json, lines)
    return 0


def _cmd_construct(args) -> int:
    shifts = ShiftSet(_parse_int_list(args.shifts, "shift"))
    target = _parse_fraction(args.target, "target")
    eps = _parse_fraction(args.eps, "eps")
    pset = construct_prime_set(shifts, target, eps, floor=args.floor, budget=args.budget)
    achieved = correlation(pset, shifts).value
    lines = [
        f"primes={','.join(str(p) for p in pset)} "
        f"kappa={rational_str(achieved)} decimal={decimal_str(achieved, args.digits)} "
        f"target={rational_str(target)} eps={rational_str(eps)}"
    ]
    record = {
        "command": "construct",
        "inputs": {
            "H": list(shifts),
            "target": rational_str(target),
            "eps": rational_str(eps),
        },
        "result": {
            "primes": list(pset),
            "kappa": _value_fields(achieved, args.digits),
        },
    }
    _emit(record, args.json, lines)
    return 0


def _cmd_closure(args) -> int:
    sets = [ShiftSet(_parse_int_list(g, "shift")) for g in args.generators]
    fam = family_from_generators(sets)
    member = two_element_member(fam)
    big_d = member.shifts[-1]
    certified = pow_t_mod(big_d, fam.generator).bits == 1 and closure_membership(fam, member)
    member_str = "{" + ",".join(str(h) for h in member) + "}"
    lines = [
        f"generator={fam.generator} member={member_str} "
        f"certificate={'ok' if certified else 'FAILED'}"
    ]
    record = {
        "command": "closure",
        "inputs": {"generators": [list(s) for s in sets]},
        "result": {
            "generator": str(fam.generator),
            "member": list(member),
            "certified": certified,
        },
    }
    _emit(record, args.json, lines)
    return 0 if certified else 2


def _cmd_series(args) -> int:
    pset = PrimeSet(_parse_int_list(args.primes, "prime"))
    shifts = ShiftSet(_parse_int_list(args.shifts, "shift"))
    cfg = SieveConfig(
        x_max=args.x_max,
        segment_length=args.segment_length,
        sample_stride=args.stride,
    )
    series = running_average(pset, shifts, cfg, threads=args.threads)
    if args.json:
        record = {
            "command": "series",
            "inputs": {"P": list(pset), "H": list(shifts), "x_max": args.x_max},
            "samples": [
                {
                    "x": s.x,
                    "sum": s.signed_sum,
                    "average": rational_str(s.average),
                    "decimal": decimal_str(s.average, args.digits),
                }
                for s in series
            ],
        }
        print(json.dumps(record, sort_keys=True))
    else:
        print("x,sum,average")
        for s in series:
            print(f"{s.x},{s.signed_sum},{decimal_str(s.average, args.digits)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="multcorr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        p.add_argument("--digits", type=int, default=DEFAULT_DIGITS, help="decimal digits")

    p = sub.add_parser("density", help="exact local density at one prime")
    p.add_argument("-p", "--prime", type=int, required=True)
    p.add_argument("-H", "--shifts", required=True, help="comma-separated shifts")
    p.add_argument("--trace", action="store_true", help="print the recursion steps")
    common(p)
    p.set_defaults(run=_cmd_density)

    p = sub.add_parser("kappa", help="exact correlation product over a prime set")
    p.add_argument("-P", "--primes", required=True, help="comma-separated primes ('' = empty)")
    p.add_argument("-H", "--shifts", required=True)
    p.add_argument("--tail-sum", help="tail bound on sum 1/(p+1) for a truncated set")
    common(p)
    p.set_defaults(run=_cmd_kappa)

    p = sub.add_parser("verify", help="cross-check the exact value against the sieve")
    p.add_argument("-P", "--primes", required=True)
    p.add_argument("-H", "--shifts", required=True)
    p.add_argument("-x", type=int, required=True, help="sieve up to x")
    p.add_argument("--tol", required=True, help="allowed |sieve - exact|")
    p.add_argument("--segment-length", type=int, default=DEFAULT_SEGMENT_LENGTH)
    p.add_argument("--threads", type=int, default=1)
    common(p)
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("spectrum", help="floor, witness prime, attainable interval")
    p.add_argument("-H", "--shifts", required=True)
    common(p)
    p.set_defaults(run=_cmd_spectrum)

    p = sub.add_parser("construct", help="prime set achieving a target correlation")
    p.add_argument("-H", "--shifts", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--eps", required=True)
    p.add_argument("--floor", type=int, default=None, help="scan primes above this")
    p.add_argument("--budget", type=int, default=10**6, help="max primes scanned")
    common(p)
    p.set_defaults(run=_cmd_construct)

    p = sub.add_parser("closure", help="two-element member of a closure family")
    p.add_argument(
        "-G",
        "--generator",
        dest="generators",
        action="append",
        required=True,
        help="comma-separated shift set; repeat for several generators",
    )
    common(p)
    p.set_defaults(run=_cmd_closure)

    p = sub.add_parser("series", help="running averages as CSV or JSON")
    p.add_argument("-P", "--primes", required=True)
    p.add_argument("-H", "--shifts", required=True)
    p.add_argument("--x-max", type=int, required=True)
    p.add_argument("--stride", type=int, default=None)
    p.add_argument("--segment-length", type=int, default=DEFAULT_SEGMENT_LENGTH)
    p.add_argument("--threads", type=int, default=1)
    common(p)
    p.set_defaults(run=_cmd_series)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except BudgetError as exc:
        print(f"multcorr: resource cap: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        print(f"multcorr: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
