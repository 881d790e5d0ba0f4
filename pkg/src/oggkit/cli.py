"""Command-line front end.

Subcommands: validate, check, levels, product, verify, enumerate, hunt.
Exit codes: 0 = pass/true, 1 = fail/false (a witness is printed),
2 = usage or input error.  Verdict lines are stable and line-oriented::

    PASS|FAIL|VACUOUS <claim> [witness=<...>]

so they can serve as golden files.  --porcelain emits the same fields
tab-separated.  The OGGKIT_MAX_N environment variable raises the
enumeration caps.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import enumeration, fileformat, fuzzy, structures, theorems
from .errors import OggkitError, ParseError, ValidationError
from .structures import FAIL

CRISP_KINDS = {
    "left-ideal": structures.is_left_ideal,
    "right-ideal": structures.is_right_ideal,
    "ideal": structures.is_ideal,
    "prime": structures.is_prime_subset,
    "semiprime": structures.is_semiprime_subset,
}
FUZZY_KINDS = {
    "fuzzy-left-ideal": fuzzy.is_fuzzy_left_ideal,
    "fuzzy-right-ideal": fuzzy.is_fuzzy_right_ideal,
    "fuzzy-ideal": fuzzy.is_fuzzy_ideal,
    "fuzzy-prime": fuzzy.is_fuzzy_prime,
    "fuzzy-semiprime": fuzzy.is_fuzzy_semiprime,
}


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise OggkitError(f"cannot read {path}: {exc}") from None


def _load_structure(path: str):
    return fileformat.parse_structure(_read(path))


def _load_fuzzy(path: str, G):
    return fileformat.parse_fuzzy(_read(path), carrier=G.carrier)


def _verdict_line(v, porcelain: bool) -> str:
    status = v.status.upper()
    if porcelain:
        parts = [status, v.claim]
        if v.witness is not None:
            parts.append(v.witness)
        return "\t".join(parts)
    line = f"{status} {v.claim}"
    if v.witness is not None:
        line += f" witness={v.witness}"
    return line


def _set_text(G, members) -> str:
    ordered = [x for x in G.carrier if x in members]
    return "{" + ",".join(ordered) + "}"


def cmd_validate(args) -> int:
    # Grammar errors are input errors (exit 2); a well-formed document that
    # fails the axioms is this command's "false" answer (exit 1).
    try:
        G = _load_structure(args.file)
    except ValidationError as exc:
        msg = f"{type(exc).__name__}: {exc}"
        print(f"INVALID\t{msg}" if args.porcelain else f"INVALID {msg}")
        return 1
    n, k = len(G.carrier), len(G.gammas)
    if args.porcelain:
        print(f"VALID\t{n}\t{k}")
    else:
        print(f"VALID elements={n} gammas={k}")
    return 0


def cmd_check(args) -> int:
    G = _load_structure(args.file)
    if args.kind in CRISP_KINDS:
        members = [m for m in (args.subset or "").split(",") if m]
        verdict = CRISP_KINDS[args.kind](G, members)
    else:
        if not args.fuzzy:
            raise OggkitError(f"kind {args.kind} needs --fuzzy FILE")
        mu = _load_fuzzy(args.fuzzy, G)
        verdict = FUZZY_KINDS[args.kind](G, mu)
    # Predicate verdicts reuse the kind token as their claim name.
    print(_verdict_line(verdict, args.porcelain))
    return 1 if verdict.failed else 0


def cmd_levels(args) -> int:
    G = _load_structure(args.file)
    mu = _load_fuzzy(args.fuzzy, G)
    if args.t is not None:
        try:
            t = fuzzy.parse_grade(args.t)
        except ValueError as exc:
            raise OggkitError(str(exc)) from None
        print(_set_text(G, fuzzy.level_cut(mu, t)))
        return 0
    for t in fuzzy.membership_image(mu):
        cut = _set_text(G, fuzzy.level_cut(mu, t))
        print(f"{t}\t{cut}" if args.porcelain else f"t={t} {cut}")
    return 0


def cmd_product(args) -> int:
    from .product import direct_square, fuzzy_product

    G = _load_structure(args.file)
    square = direct_square(G)
    sys.stdout.write(fileformat.serialize_structure(square))
    if args.fuzzy:
        mu = _load_fuzzy(args.fuzzy, G)
        sigma = _load_fuzzy(args.fuzzy2, G) if args.fuzzy2 else mu
        print()
        sys.stdout.write(fileformat.serialize_fuzzy(fuzzy_product(mu, sigma)))
    return 0


def cmd_verify(args) -> int:
    if bool(args.claim) == bool(args.all):
        raise OggkitError("verify needs exactly one of --claim ID or --all")
    G = _load_structure(args.file)
    mu = _load_fuzzy(args.fuzzy, G)
    sigma = _load_fuzzy(args.fuzzy2, G) if args.fuzzy2 else None
    try:
        if args.all:
            reports = theorems.verify_all(G, mu, sigma)
        else:
            reports = [theorems.verify_claim(args.claim, G, mu, sigma)]
    except ValueError as exc:
        raise OggkitError(str(exc)) from None
    some_fail = False
    for report in reports:
        for v in report.verdicts:
            print(_verdict_line(v, args.porcelain))
            some_fail = some_fail or v.failed
    return 1 if some_fail else 0


def _bounds_from(args) -> enumeration.EnumBounds:
    try:
        return enumeration.EnumBounds(
            n=args.size,
            k=args.gammas,
            grid=tuple(getattr(args, "grid", "0,1/2,1").split(",")),
            assoc_only=getattr(args, "assoc", False),
            order_mode=args.order,
        )
    except ValueError as exc:
        raise OggkitError(str(exc)) from None


def cmd_enumerate(args) -> int:
    bounds = _bounds_from(args)
    count = 0
    for G in enumeration.enumerate_structures(bounds):
        count += 1
        if not args.count_only:
            if count > 1:
                print()
            sys.stdout.write(fileformat.serialize_structure(G))
    if args.count_only:
        print(count)
    return 0


def cmd_hunt(args) -> int:
    bounds = _bounds_from(args)
    try:
        result = enumeration.hunt(args.claim, bounds)
    except ValueError as exc:
        raise OggkitError(str(exc)) from None
    if isinstance(result, enumeration.NotFound):
        if args.porcelain:
            print(f"NOTFOUND\t{result.claim}\t{result.searched}")
        else:
            print(f"NOTFOUND {result.claim} searched={result.searched}")
        return 0
    if args.porcelain:
        print(f"COUNTEREXAMPLE\t{result.claim}\t{result.witness}")
    else:
        print(f"COUNTEREXAMPLE {result.claim} witness={result.witness}")
    print()
    sys.stdout.write(result.structure_text)
    print()
    sys.stdout.write(result.mu_text)
    if result.sigma_text is not None:
        print()
        sys.stdout.write(result.sigma_text)
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oggkit",
        description="Validate, analyze, and refute claims about finite ordered Gamma-groupoids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--porcelain", action="store_true", help="tab-separated machine output"
    )

    p = sub.add_parser("validate", parents=[common], help="validate a structure file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check", parents=[common], help="decide one predicate")
    p.add_argument("--kind", required=True, choices=sorted(CRISP_KINDS) + sorted(FUZZY_KINDS))
    p.add_argument("file")
    p.add_argument("--subset", default="", help="comma-separated members (crisp kinds)")
    p.add_argument("--fuzzy", help="fuzzy file (fuzzy kinds)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("levels", parents=[common], help="print level cuts")
    p.add_argument("file")
    p.add_argument("--fuzzy", required=True)
    p.add_argument("--t", help="threshold p/q; omit to print all attained cuts")
    p.set_defaults(func=cmd_levels)

    p = sub.add_parser("product", parents=[common], help="serialize the direct square")
    p.add_argument("file")
    p.add_argument("--fuzzy", help="also emit the fuzzy product")
    p.add_argument("--fuzzy2", help="second factor (defaults to --fuzzy)")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", parents=[common], help="check registry claims")
    p.add_argument("--claim", help="one of " + ", ".join(theorems.CLAIM_ORDER))
    p.add_argument("--all", action="store_true", help="check every claim")
    p.add_argument("file")
    p.add_argument("--fuzzy", required=True)
    p.add_argument("--fuzzy2")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="stream structures in bounds")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--gammas", type=int, default=1)
    p.add_argument("--order", choices=["trivial", "all"], default="all")
    p.add_argument("--assoc", action="store_true", help="associative structures only")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("hunt", parents=[common], help="search for a counterexample")
    p.add_argument("--claim", required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--gammas", type=int, default=1)
    p.add_argument("--grid", default="0,1/2,1", help="comma-separated rationals")
    p.add_argument("--order", choices=["trivial", "all"], default="all")
    p.set_defaults(func=cmd_hunt)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OggkitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
