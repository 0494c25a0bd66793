"""Command line interface.

One subcommand per computation, plain deterministic output, and stable exit
codes: 0 success, 1 invalid input, 2 internal assertion failure (a checked
equivalence or a filling lemma failed, which indicates a bug rather than bad
input).
"""

from __future__ import annotations

import argparse
import sys

from . import classify, orthodontia, perms, poly, tableaux, weyl

__all__ = ["main", "run"]


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CliError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="zeroone", description=__doc__)
    parser.add_argument("--structured", action="store_true",
                        help="emit polynomials as (exponent vector, coefficient) records")
    parser.add_argument("--checked", action="store_true",
                        help="abort loudly when equivalent predicates disagree")
    parser.add_argument("--limit", type=int, default=None,
                        help="override the module size limits")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="Schubert polynomial of a permutation")
    p.add_argument("perm")
    p.add_argument("--method", choices=["classic", "orthodontia", "tableaux", "weyl"],
                   default="classic")

    p = sub.add_parser("orthodontia", help="orthodontic sequence (i, k, m)")
    p.add_argument("perm")
    p.add_argument("--trace", action="store_true", help="print the intermediate diagrams")

    p = sub.add_parser("tableaux", help="tableau words of a permutation")
    p.add_argument("perm")
    p.add_argument("--stage", type=int, default=0)
    p.add_argument("--check", action="store_true",
                   help="verify every word reads into its diagram as a valid filling")

    p = sub.add_parser("char", help="dual character of a diagram file")
    p.add_argument("diagram", help="path to a diagram file, or - for stdin")

    p = sub.add_parser("dominance", help="coefficientwise dominance after a row/column deletion")
    p.add_argument("diagram", help="path to a diagram file, or - for stdin")
    p.add_argument("--row", type=int, required=True)
    p.add_argument("--col", type=int, required=True)
    p.add_argument("--show-remainder", action="store_true")

    p = sub.add_parser("zero-one", help="is the Schubert polynomial zero-one?")
    p.add_argument("perm")
    p.add_argument("--all-methods", action="store_true",
                   help="also expand the polynomial (slower)")

    p = sub.add_parser("survey", help="classify all of S_n")
    p.add_argument("n", type=int)
    p.add_argument("--methods", choices=["fast", "all"], default="fast")
    p.add_argument("--workers", type=int, default=1)
    return parser


def _format_tuple(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _print_poly(f: poly.Polynomial, out, structured: bool):
    if structured:
        print(f"nvars {f.nvars}", file=out)
        for e, c in f.sorted_terms():
            print("term " + ",".join(str(x) for x in e) + f" {c}", file=out)
    else:
        print(str(f), file=out)


def _read_diagram(source: str) -> perms.Diagram:
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ValueError(f"cannot read diagram file {source}: {exc}") from exc
    return perms.parse_diagram(text)


def _cmd_expand(args, out) -> int:
    w = perms.parse_permutation(args.perm)
    if args.method == "classic":
        f = poly.schubert_classic(w)
    elif args.method == "orthodontia":
        f = orthodontia.schubert_orthodontic(w)
    elif args.method == "tableaux":
        f = tableaux.schubert_from_tableaux(w)
    else:
        limit = args.limit if args.limit is not None else weyl.DEFAULT_SIZE_LIMIT
        f = weyl.dual_character(perms.rothe_diagram(w), limit=limit)
    _print_poly(f, out, args.structured)
    return 0


def _cmd_orthodontia(args, out) -> int:
    w = perms.parse_permutation(args.perm)
    trace = orthodontia.orthodontic_sequence(w)
    print(f"i {_format_tuple(trace.i)}", file=out)
    print(f"k {_format_tuple(trace.k)}", file=out)
    print(f"m {_format_tuple(trace.m)}", file=out)
    if args.trace:
        for r in range(trace.length + 1):
            print(f"stage {r}", file=out)
            print(str(trace.stage(r)), file=out)
    return 0


def _cmd_tableaux(args, out) -> int:
    w = perms.parse_permutation(args.perm)
    stages = tableaux.tableaux_stages(w)
    if not 0 <= args.stage < len(stages):
        raise ValueError(f"stage {args.stage} out of range 0..{len(stages) - 1}")
    words = sorted(stages[args.stage])
    if args.check:
        trace = orthodontia.orthodontic_sequence(w)
        for word in words:
            tableaux.read_into_diagram(word, w, args.stage, trace=trace)
    for word in words:
        print(tableaux.format_word(word), file=out)
    return 0


def _cmd_char(args, out) -> int:
    d = _read_diagram(args.diagram)
    limit = args.limit if args.limit is not None else weyl.DEFAULT_SIZE_LIMIT
    f = weyl.dual_character(d, limit=limit)
    _print_poly(f, out, args.structured)
    return 0


def _cmd_dominance(args, out) -> int:
    d = _read_diagram(args.diagram)
    limit = args.limit if args.limit is not None else weyl.DEFAULT_SIZE_LIMIT
    result = weyl.pattern_dominance_check(d, args.row, args.col, limit=limit)
    print(f"M {result.monomial}", file=out)
    print(f"ok {'true' if result.ok else 'false'}", file=out)
    if args.show_remainder:
        if args.structured:
            for e, c in result.remainder.sorted_terms():
                print("F_term " + ",".join(str(x) for x in e) + f" {c}", file=out)
        else:
            print(f"F {result.remainder}", file=out)
    return 0


def _cmd_zero_one(args, out) -> int:
    w = perms.parse_permutation(args.perm)
    status = classify.zero_one_status(
        w, include_expansion=args.all_methods, checked=args.checked
    )
    verdict = status.verdict()
    print("true" if verdict else "false", file=out)
    if not verdict:
        witness = classify.witness_pattern(w)
        if witness is not None:
            print(f"witness {witness[0]}", file=out)
    if args.all_methods:
        print(f"by_patterns {'true' if status.by_patterns else 'false'}", file=out)
        print(f"by_configurations {'true' if status.by_configurations else 'false'}", file=out)
        print(f"by_multiplicity_free {'true' if status.by_multiplicity_free else 'false'}",
              file=out)
        print(f"by_expansion {'true' if status.by_expansion else 'false'}", file=out)
    return 0


def _cmd_survey(args, out) -> int:
    summary = classify.survey(
        args.n, methods=args.methods, workers=args.workers, limit=args.limit
    )
    print(f"n {summary.n}", file=out)
    print(f"total {summary.total}", file=out)
    print(f"zero_one {summary.zero_one}", file=out)
    print(f"disagreements {summary.disagreements}", file=out)
    return 0


_COMMANDS = {
    "expand": _cmd_expand,
    "orthodontia": _cmd_orthodontia,
    "tableaux": _cmd_tableaux,
    "char": _cmd_char,
    "dominance": _cmd_dominance,
    "zero-one": _cmd_zero_one,
    "survey": _cmd_survey,
}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = _build_parser().parse_args(argv)
    except _CliError as exc:
        print(f"error: {exc}", file=err)
        return 1
    try:
        return _COMMANDS[args.command](args, out)
    except (tableaux.FillingError, AssertionError) as exc:
        print(f"internal-error: {exc}", file=err)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return 1


def main(argv: list[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
