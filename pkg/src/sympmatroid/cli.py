"""Command-line entry point.

Exit codes: 0 = property holds / success, 1 = property fails,
2 = input or usage error.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import enumeration
from .axioms import (
    axiom_holds,
    downward_closure,
    find_counterexample,
    IndependenceFamily,
    is_symplectic_matroid_by_definition,
    maximal_sets,
    _verify_witness,
)
from .greedy import (
    BasisFamily,
    greedy_solution,
    sampled_threshold_agreement,
    trace_lines,
)
from .orderings import all_admissible_orderings, parse_top_row
from .signed_sets import (
    FamilyFormatError,
    format_family,
    format_set,
    format_set_braced,
    parse_family,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class InputError(Exception):
    pass


def _load_family(path: str, n: Optional[int]) -> tuple[int, list[frozenset[int]]]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return parse_family(text, n)
    except (FamilyFormatError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_bases(path: str, n: Optional[int]) -> BasisFamily:
    n, sets = _load_family(path, n)
    try:
        return BasisFamily(n, sets)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_independent(path: str, n: Optional[int]) -> IndependenceFamily:
    n, sets = _load_family(path, n)
    try:
        return IndependenceFamily(n, sets)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _cmd_check_bases(args) -> int:
    family = _load_bases(args.file, args.n)
    ok = is_symplectic_matroid_by_definition(family)
    print(f"symplectic matroid: {'yes' if ok else 'no'}")
    print(f"rank: {family.rank}")
    print(f"lagrangian: {'yes' if family.rank == family.n else 'no'}")
    if args.samples:
        agree = all(
            sampled_threshold_agreement(family, o, args.samples, args.seed)
            for o in all_admissible_orderings(family.n)
        )
        print(f"sampled weights agree: {'yes' if agree else 'no'}")
        if not agree:
            return EXIT_FAIL
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_check_independent(args) -> int:
    ind = _load_independent(args.file, args.n)
    result = axiom_holds(ind)
    print(f"axiom holds: {'yes' if result.holds else 'no'}")
    if result.violation is not None:
        v = result.violation
        print(f"violating I: {format_set(v.smaller)}")
        print(f"violating J: {format_set(v.larger)}")
        print(f"failure kind: {v.failure_kind}")
    return EXIT_OK if result.holds else EXIT_FAIL


def _cmd_independent_sets(args) -> int:
    family = _load_bases(args.file, args.n)
    sys.stdout.write(format_family(downward_closure(family).sets))
    return EXIT_OK


def _cmd_bases(args) -> int:
    ind = _load_independent(args.file, args.n)
    sys.stdout.write(format_family(maximal_sets(ind.sets)))
    return EXIT_OK


def _cmd_greedy(args) -> int:
    family = _load_bases(args.file, args.n)
    try:
        o = parse_top_row(args.ordering, family.n)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    trace = greedy_solution(family, o)
    for line in trace_lines(trace):
        print(line)
    print(format_set(trace.chosen))
    return EXIT_OK


def _cmd_witness(args) -> int:
    family = _load_bases(args.file, args.n)
    if args.ordering is not None:
        try:
            o = parse_top_row(args.ordering, family.n)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        witness = None
        for k in range(2 * family.n + 1):
            if _verify_witness(family, o, k):
                witness = (o, k)
                break
    else:
        witness = find_counterexample(family, use_wxyz=args.wxyz)
    if witness is None:
        print("no counterexample: greedy is optimal", file=sys.stderr)
        return EXIT_FAIL
    o, k = witness
    from .orderings import threshold_weight
    from .greedy import weight_of
    w = threshold_weight(o, k)
    chosen = greedy_solution(family, o).chosen
    beating = max(family.sets, key=lambda b: weight_of(b, w))
    print(f"ordering: {' '.join(map(str, o.top_row))}")
    print(f"threshold: {k}")
    print(f"greedy: {format_set(chosen)}")
    print(f"beaten-by: {format_set(beating)}")
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    try:
        if args.catalog:
            with open(args.catalog, "w", encoding="utf-8") as fh:
                count = enumeration.catalog(args.n, args.k, fh)
            report = enumeration.sweep_basis_families(args.n, args.k)
            print(f"catalog written: {count}")
        else:
            report = enumeration.sweep_basis_families(args.n, args.k)
    except (enumeration.BudgetExceededError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    for line in report.lines():
        print(line)
    return EXIT_OK if not report.mismatches else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympmatroid",
        description="Symplectic matroid checks: greedy definition, "
        "independence axiom, witnesses, exhaustive sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_file(p):
        p.add_argument("file", help="family file, one set per line")
        p.add_argument("--n", type=int, default=None,
                       help="ground size (default: largest magnitude in file)")

    p = sub.add_parser("check-bases", help="is the family a symplectic matroid?")
    add_file(p)
    p.add_argument("--samples", type=int, default=0,
                   help="also cross-check with N random compatible weights per ordering")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled weights")
    p.set_defaults(func=_cmd_check_bases)

    p = sub.add_parser("check-independent",
                       help="does the independence axiom hold for the family?")
    add_file(p)
    p.set_defaults(func=_cmd_check_independent)

    p = sub.add_parser("independent-sets",
                       help="print the downward closure of a basis family")
    add_file(p)
    p.set_defaults(func=_cmd_independent_sets)

    p = sub.add_parser("bases",
                       help="print the maximal members of an independence family")
    add_file(p)
    p.set_defaults(func=_cmd_bases)

    p = sub.add_parser("greedy", help="trace the greedy pass under an ordering")
    add_file(p)
    p.add_argument("--ordering", required=True,
                   help='top row largest first, e.g. "-2 1 3"')
    p.set_defaults(func=_cmd_greedy)

    p = sub.add_parser("witness",
                       help="find an (ordering, threshold) defeating greedy")
    add_file(p)
    p.add_argument("--ordering", default=None,
                   help="restrict the search to this ordering's thresholds")
    p.add_argument("--wxyz", action="store_true",
                   help="trace the proof's WXYZ repositioning construction first")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("enumerate", help="exhaustive definition-vs-axiom sweep")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--catalog", default=None,
                   help="also write every matroid found to this path")
    p.set_defaults(func=_cmd_enumerate)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
