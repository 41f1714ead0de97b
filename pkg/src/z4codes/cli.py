"""Command-line entry point: ``python -m z4codes <subcommand> ...``."""

from __future__ import annotations

import argparse
import sys

from .classify import ClassificationError, classify_hadamard, classify_perfect, perfect_rank, verify_suite
from .codefam import (
    SizeCapError,
    binary_image,
    code_header,
    code_lines,
    family_code,
    hadamard_code,
)
from .constructions import plotkin_double, quadruple, recurrent_build
from .invariants import (
    even_projection,
    is_linear,
    kernel,
    min_distance,
    odd_projection,
    rank,
    weight_distribution,
)
from .qmatrix import build_A

FORMAT_HEADER = "# format=1"


def _params(parser: argparse.ArgumentParser, family: bool = True) -> None:
    parser.add_argument("--r1", type=int, required=True)
    parser.add_argument("--r2", type=int, required=True)
    if family:
        parser.add_argument("--family", choices=["H", "C"], required=True)


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="write to this path instead of stdout")
    parser.add_argument("--format", choices=["text"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="z4codes", description="Z4-linear Hadamard and extended perfect codes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="print A^{r1,r2}")
    _params(p, family=False)
    _common(p)

    p = sub.add_parser("code", help="list the codewords of H^{r1,r2} or C^{r1,r2}")
    _params(p)
    p.add_argument("--alphabet", choices=["quaternary", "binary"], default="quaternary")
    _common(p)

    p = sub.add_parser("invariants", help="kernel, rank, distance and weights of a family code")
    _params(p)
    p.add_argument("--rank", action="store_true")
    p.add_argument("--kernel", action="store_true")
    p.add_argument("--distance", action="store_true")
    p.add_argument("--weights", action="store_true")
    p.add_argument("--linear", action="store_true")
    p.add_argument("--strategy", choices=["auto", "enumeration", "generator_span"], default="auto")
    p.add_argument("--slow", action="store_true", help="allow 2^26-word enumerations")
    _common(p)

    p = sub.add_parser("project", help="even/odd projection of a binary family code")
    _params(p)
    p.add_argument("--side", choices=["even", "odd"], required=True)
    p.add_argument("--slow", action="store_true")
    _common(p)

    p = sub.add_parser("construct", help="doubling, quadrupling or recurrent build")
    p.add_argument("op", choices=["double", "quadruple", "recurrent"])
    _params(p, family=False)
    p.add_argument("--family", choices=["H"], default="H")
    p.add_argument("--alphabet", choices=["quaternary", "binary"], default="quaternary")
    _common(p)

    p = sub.add_parser("classify", help="equivalence classes by length")
    p.add_argument("--family", choices=["H", "C"], required=True)
    p.add_argument("--max-k", type=int, default=7)
    p.add_argument("--slow", action="store_true")
    _common(p)

    p = sub.add_parser("verify", help="run every reproduction check")
    p.add_argument("--max-k", type=int, default=5)
    p.add_argument("--slow", action="store_true")
    _common(p)
    return parser


def _enumeration_allowed(C, slow: bool) -> bool:
    return C.log2_cardinality <= 16 or (slow and C.log2_cardinality <= 26)


def _cmd_matrix(args) -> tuple[list[str], int]:
    return build_A(args.r1, args.r2).to_text().splitlines(), 0


def _cmd_code(args) -> tuple[list[str], int]:
    C = family_code(args.family, (args.r1, args.r2))
    header = code_header(args.family, args.r1, args.r2, C.length, args.alphabet)
    return [header, *code_lines(C, args.alphabet)], 0


def _cmd_invariants(args) -> tuple[list[str], int]:
    C = family_code(args.family, (args.r1, args.r2))
    B = binary_image(C)
    selected = [args.rank, args.kernel, args.distance, args.weights, args.linear]
    want_all = not any(selected)
    enumerable = _enumeration_allowed(C, args.slow)
    lines = [f"family={args.family}", f"r1={args.r1}", f"r2={args.r2}", f"N={B.length}", f"cardinality={C.cardinality}"]
    if (args.distance or want_all) and enumerable:
        lines.append(f"min_distance={min_distance(B)}")
    elif args.distance:
        raise SizeCapError("minimum distance of this code needs --slow")
    if args.kernel or (want_all and C.log2_cardinality <= 16):
        lines.append(f"kernel_size={kernel(B).cardinality}")
    if args.rank or args.linear or want_all:
        strategy = args.strategy
        if strategy == "enumeration" and not enumerable:
            raise SizeCapError("enumerating this code needs --slow")
        if args.family == "C":
            if strategy == "auto" and args.slow and C.log2_cardinality <= 26:
                strategy = "enumeration"
            r = perfect_rank((args.r1, args.r2), strategy)
        else:
            r = rank(B, "enumeration" if strategy == "auto" else strategy)
        if args.rank or want_all:
            lines.append(f"rank={r}")
        # additive images are linear exactly when they fill their span
        if args.linear or want_all:
            lines.append(f"linear={str(r == C.log2_cardinality).lower()}")
    if args.weights or (want_all and enumerable):
        if not enumerable:
            raise SizeCapError("weight distribution of this code needs --slow")
        wd = weight_distribution(B)
        lines.append("weight_distribution=" + ",".join(f"{w}:{c}" for w, c in wd.items()))
    return lines, 0


def _cmd_project(args) -> tuple[list[str], int]:
    C = family_code(args.family, (args.r1, args.r2))
    if not _enumeration_allowed(C, args.slow):
        raise SizeCapError("projection of this code needs --slow")
    B = binary_image(C)
    P = even_projection(B) if args.side == "even" else odd_projection(B)
    header = code_header(args.family, args.r1, args.r2, P.length // 2, "binary", projection=args.side)
    return [header, *code_lines(P, "binary")], 0


def _cmd_construct(args) -> tuple[list[str], int]:
    p = (args.r1, args.r2)
    if args.op == "recurrent":
        C = recurrent_build(p)
    else:
        C = (plotkin_double if args.op == "double" else quadruple)(hadamard_code(p))
    header = code_header(args.family, args.r1, args.r2, C.length, args.alphabet, construction=args.op)
    return [header, *code_lines(C, args.alphabet)], 0


def _cmd_classify(args) -> tuple[list[str], int]:
    lines = []
    if args.family == "H":
        for k in range(3, args.max_k + 1):
            lines += classify_hadamard(k).to_lines()
    else:
        for k in range(4, args.max_k + 1):
            strategy = "enumeration" if args.slow and k == 5 else "auto"
            lines += classify_perfect(k, strategy).to_lines()
    return lines, 0


def _cmd_verify(args) -> tuple[list[str], int]:
    report = verify_suite(args.max_k, args.slow)
    lines = report.text().splitlines()[1:]
    return lines, 0 if report.ok else 1


COMMANDS = {
    "matrix": _cmd_matrix,
    "code": _cmd_code,
    "invariants": _cmd_invariants,
    "project": _cmd_project,
    "construct": _cmd_construct,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        lines, status = COMMANDS[args.command](args)
    except (ValueError, OSError, ClassificationError) as exc:
        print(f"z4codes {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text = "\n".join([FORMAT_HEADER, *lines]) + "\n"
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"z4codes {args.command}: error: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
