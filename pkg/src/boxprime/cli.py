"""Batch command-line front end.

Six subcommands expose the library as reproducible batch jobs:

  census     per-degree counts S, S_plus, S_box for one instance
  factor     prime factorizations of graph6 inputs
  wright     truncated expansion sums checked against exact counts
  bounds     finite-degree inequality and growth-ratio reports
  functions  population statistics of arithmetic functions
  semiring   closure, monotonicity, and self-complementarity reports

All arithmetic is exact; output is a pure function of the arguments, so
identical invocations produce byte-identical text.  Exit codes: 0 success,
2 capacity exceeded, 3 domain error, 4 parse error.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter

from .bounds import (additive_gap_sandwich, cut_bound,
                     growth_ratio_diagnostics, leading_term_check,
                     multiplicative_gap_sandwich, prime_gap_bound)
from .counting import graph_connected_totals, graph_totals, inversion_coefficients
from .errors import CapacityError, DomainError, ParseError
from .expansion import connected_series_polynomial, expansion_error_report
from .factor import factorize
from .graph6 import encode_graph6, parse_graph6
from .graphs import DEFAULT_ENUM_CAP, canonical_key
from .functions import REGISTRY, population_stats
from .semiring import (INSTANCE_BUILDERS, build_instance, closure_check,
                       monotonicity_report, self_complementary_identity)
from .serialize import rows_to_csv, rows_to_json


def parse_degree_range(text: str) -> list[int]:
    """Parse 'N' or 'A..B' into an inclusive list of degrees."""
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise ParseError(f"bad degree range {text!r}; expected N or A..B") from None
    if hi < lo:
        raise ParseError(f"empty degree range {text!r}")
    if lo < 0:
        raise ParseError(f"negative degree in range {text!r}")
    return list(range(lo, hi + 1))


def write_text(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii") as handle:
            handle.write(text)


def emit(rows, columns, args) -> None:
    if args.format == "csv":
        text = rows_to_csv(rows, columns)
    else:
        text = rows_to_json(rows, columns)
    write_text(text, args.out)


def cmd_census(args) -> int:
    inst = build_instance(args.instance, enum_cap=args.enum_cap)
    rows = []
    for n in parse_degree_range(args.n):
        # the empty graph is a member but has no connectivity or primality
        if n == 0:
            rows.append({"n": n, "S": inst.S(0), "S_plus": None, "S_box": None})
        else:
            rows.append({"n": n, "S": inst.S(n), "S_plus": inst.S_plus(n),
                         "S_box": inst.S_box(n)})
    emit(rows, ["n", "S", "S_plus", "S_box"], args)
    return 0


def cmd_factor(args) -> int:
    texts = list(args.graphs)
    if not texts:
        texts = [line.strip() for line in sys.stdin.read().splitlines()
                 if line.strip()]
    lines = []
    for text in texts:
        g = parse_graph6(text)
        if g.n == 1:
            lines.append(f"{text}: UNIT")
            continue
        factors = factorize(g, args.enum_cap)
        counts = Counter(factors)
        parts = [f"{encode_graph6(f)} x {counts[f]}"
                 for f in sorted(counts, key=canonical_key)]
        line = f"{text}: " + ", ".join(parts)
        if len(factors) == 1:
            line += " PRIME"
        lines.append(line)
    write_text("\n".join(lines) + "\n", args.out)
    return 0


def cmd_wright(args) -> int:
    ns = parse_degree_range(args.n)
    order = args.R
    if order < 1:
        raise DomainError("truncation order R must be positive")
    top = max(ns)
    totals = graph_totals(top)
    coeffs = inversion_coefficients(totals, max(order, 1))
    polys = [connected_series_polynomial(s, coeffs) for s in range(order)]
    rows = expansion_error_report(graph_connected_totals(top), polys, ns, order)
    emit(rows, ["n", "R", "truncated", "true", "remainder", "bound", "ratio"],
         args)
    return 0


def cmd_bounds(args) -> int:
    inst = build_instance(args.instance, enum_cap=args.enum_cap)
    ns = parse_degree_range(args.n)
    check = args.check
    if check == "eq1":
        rows = [additive_gap_sandwich(inst, n) for n in ns]
        columns = ["n", "lower", "middle", "upper", "holds", "middle_plain"]
    elif check == "eq2":
        rows = [multiplicative_gap_sandwich(inst, n) for n in ns]
        columns = ["n", "lower", "middle", "upper", "holds", "middle_plain"]
    elif check == "lem2":
        rows = [cut_bound(inst, n, args.D) for n in ns]
        columns = ["n", "depth", "middle", "upper", "holds"]
    elif check == "gap":
        rows = [prime_gap_bound(inst, n) for n in ns]
        columns = ["n", "lhs", "rhs", "holds"]
    elif check == "leading":
        rows = [leading_term_check(inst, n) for n in ns]
        columns = ["n", "pn", "gap", "leading", "residual"]
    else:
        rows = [row for row in growth_ratio_diagnostics(inst, max(ns))
                if row["n"] >= min(ns)]
        columns = list(rows[0].keys()) if rows else ["n"]
    emit(rows, columns, args)
    return 0


def cmd_functions(args) -> int:
    inst = build_instance(args.instance, enum_cap=args.enum_cap)
    rows = [population_stats(args.fn, inst, n, args.population,
                             cap=args.enum_cap)
            for n in parse_degree_range(args.n)]
    emit(rows, ["n", "population", "count", "sum", "mean", "variance", "max"],
         args)
    return 0


def cmd_semiring(args) -> int:
    inst = build_instance(args.instance, enum_cap=args.enum_cap)
    if args.monotonicity:
        rows = monotonicity_report(inst, args.n_max)
        columns = ["n", "S_plus", "S_plus_next"]
    elif args.closure:
        result = closure_check(inst, args.n_max)
        rows = [{
            "instance": result["instance"],
            "n_max": result["n_max"],
            "closed": result["closed"],
            "operation": result["operation"],
            "left": encode_graph6(result["left"]) if result["left"] else None,
            "right": encode_graph6(result["right"]) if result["right"] else None,
        }]
        columns = ["instance", "n_max", "closed", "operation", "left", "right"]
    elif args.self_complementary:
        rows = []
        for n in range(1, args.n_max + 1):
            lhs, rhs, equal = self_complementary_identity(n, cap=args.enum_cap)
            rows.append({"n": n, "identity": lhs, "enumerated": rhs,
                         "equal": equal})
        columns = ["n", "identity", "enumerated", "equal"]
    else:
        rows = [{"n": n, "S": inst.S(n), "S_plus": inst.S_plus(n),
                 "S_box": inst.S_box(n), "p": inst.p}
                for n in range(1, args.n_max + 1)]
        columns = ["n", "S", "S_plus", "S_box", "p"]
    emit(rows, columns, args)
    return 0


def _add_output_flags(sub) -> None:
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out", default=None, help="write to a file instead of stdout")
    sub.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP,
                     help="enumeration order limit")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxprime",
        description="Exact counting, factorization, and inequality reports "
                    "for graph semirings.")
    subs = parser.add_subparsers(dest="command", required=True)

    census = subs.add_parser("census", help="per-degree counts S, S_plus, S_box")
    census.add_argument("--instance", choices=sorted(INSTANCE_BUILDERS),
                        default="graphs")
    census.add_argument("--n", required=True, help="degree N or range A..B")
    _add_output_flags(census)
    census.set_defaults(func=cmd_census)

    factor = subs.add_parser("factor",
                             help="prime factorizations of graph6 inputs")
    factor.add_argument("graphs", nargs="*",
                        help="graph6 strings; stdin lines when omitted")
    factor.add_argument("--out", default=None)
    factor.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    factor.set_defaults(func=cmd_factor)

    wright = subs.add_parser("wright",
                             help="truncated expansion sums vs exact counts")
    wright.add_argument("--R", type=int, required=True,
                        help="truncation order")
    wright.add_argument("--n", required=True, help="degree N or range A..B")
    _add_output_flags(wright)
    wright.set_defaults(func=cmd_wright)

    bounds = subs.add_parser("bounds",
                             help="inequality and growth-ratio reports")
    bounds.add_argument("--check", required=True,
                        choices=("eq1", "eq2", "lem2", "gap", "leading",
                                 "axioms"))
    bounds.add_argument("--n", required=True, help="degree N or range A..B")
    bounds.add_argument("--D", type=int, default=3,
                        help="cut depth for --check lem2")
    bounds.add_argument("--instance", choices=sorted(INSTANCE_BUILDERS),
                        default="graphs")
    _add_output_flags(bounds)
    bounds.set_defaults(func=cmd_bounds)

    functions = subs.add_parser("functions",
                                help="population statistics of one function")
    functions.add_argument("--fn", required=True, choices=sorted(REGISTRY))
    functions.add_argument("--n", required=True, help="degree N or range A..B")
    functions.add_argument("--population", choices=("add", "mult"),
                           default="mult")
    functions.add_argument("--instance", choices=sorted(INSTANCE_BUILDERS),
                           default="graphs")
    _add_output_flags(functions)
    functions.set_defaults(func=cmd_functions)

    semiring = subs.add_parser("semiring",
                               help="instance summaries and structural checks")
    semiring.add_argument("--instance", choices=sorted(INSTANCE_BUILDERS),
                          default="graphs")
    semiring.add_argument("--n-max", type=int, default=8)
    picker = semiring.add_mutually_exclusive_group()
    picker.add_argument("--monotonicity", action="store_true",
                        help="degrees where the connected count drops")
    picker.add_argument("--closure", action="store_true",
                        help="membership closure under union and product")
    picker.add_argument("--self-complementary", action="store_true",
                        help="self-complementarity count identity per degree")
    _add_output_flags(semiring)
    semiring.set_defaults(func=cmd_semiring)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain: {exc}", file=sys.stderr)
        return 3
    except ParseError as exc:
        print(f"parse: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
