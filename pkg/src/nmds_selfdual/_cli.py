"""Command-line front end: ``nmds-selfdual <command> [flags]``."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from math import comb
from pathlib import Path

from nmds_selfdual._codes import EvalSet, build_code, classify_by_ranks, has_zero_sum_k_subset
from nmds_selfdual._config import Budgets
from nmds_selfdual._exceptions import EXIT_INVALID, EXIT_VERIFICATION, InvalidParams, NmdsError, exit_code_for
from nmds_selfdual._exchange import load_document, make_document, verify_document
from nmds_selfdual._field import GaloisField
from nmds_selfdual._multipliers import pipeline
from nmds_selfdual._selfcheck import run_selfcheck
from nmds_selfdual._version import __version__
from nmds_selfdual.constructions import build_from_recipe, field_for_recipe, scan_lengths, validate_recipe
from nmds_selfdual.types._documents import FAMILIES, THEOREMS, Recipe

logger = logging.getLogger("nmds_selfdual")

_PARAM_FLAGS = ("q", "n", "r", "e", "f", "t", "s", "ell", "p", "m")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part, 10) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated decimal integers, got {text!r}") from None


def _budgets(args: argparse.Namespace) -> Budgets:
    budgets = Budgets.from_env()
    overrides = {
        name: getattr(args, name)
        for name in ("codeword_budget", "subset_budget")
        if getattr(args, name, None) is not None
    }
    return budgets.model_copy(update=overrides) if overrides else budgets


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_construct(args: argparse.Namespace) -> int:
    params = {name: getattr(args, name) for name in _PARAM_FLAGS if getattr(args, name) is not None}
    family = args.family or THEOREMS[args.theorem]
    recipe = Recipe(family=family, params=params, indices=args.indices, modulus=args.modulus)
    validate_recipe(recipe)
    budgets = _budgets(args)

    field = field_for_recipe(recipe, table_threshold=budgets.table_threshold)
    eval_set = build_from_recipe(field, recipe, search_budget=budgets.search_budget)
    code, classification = pipeline(eval_set, budgets)
    document = make_document(code, classification, budgets)
    text = document.to_json()

    distance = classification.d if document.transcript and document.transcript.distance != "skipped" else None
    summary = f"[{code.n},{code.k}{',' + str(distance) if distance is not None else ''}] "
    summary += f"{classification.verdict} self-dual code over F_{field.q}"
    if args.output:
        Path(args.output).write_text(text + "\n", encoding="utf-8")
        print(f"{summary} written to {args.output}")
    else:
        print(text)
        print(summary, file=sys.stderr)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    document = load_document(args.path)
    report = verify_document(document, _budgets(args))
    for line in report.checks:
        print(f"{'ok  ' if line.passed else 'FAIL'} {line.name}: {line.detail}")
    return 0 if report.passed else EXIT_VERIFICATION


def cmd_classify_set(args: argparse.Namespace) -> int:
    budgets = _budgets(args)
    field = GaloisField.from_order(args.q, args.modulus, table_threshold=budgets.table_threshold)
    eval_set = EvalSet.create(field, args.elements)
    k = args.k
    if not 1 <= k < eval_set.n:
        raise InvalidParams(f"k={k} must lie in [1, {eval_set.n - 1}]")

    subset = has_zero_sum_k_subset(eval_set, k, budget=budgets.search_budget)
    expected = "MDS" if subset is None else "NMDS"
    if subset is None:
        structure = f"{k}-zero-sum free"
    else:
        structure = "zero-sum subset {" + ", ".join(str(eval_set.elements[i]) for i in subset) + "}"

    if max(comb(eval_set.n, k), comb(eval_set.n, k + 1)) > budgets.subset_budget:
        print(f"{structure}; rank scan skipped")
        return 0
    verdict = classify_by_ranks(build_code(eval_set, k), budget=budgets.subset_budget).verdict
    print(f"{structure}; {verdict}")
    if verdict != expected:
        print(f"FAIL rank scan says {verdict}, zero-sum structure says {expected}", file=sys.stderr)
        return EXIT_VERIFICATION
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    scan = scan_lengths(args.q)
    if args.json:
        print(scan.model_dump_json(indent=2))
        return 0
    for family in scan.families:
        print(f"{family.family:>13}: {family.count} lengths")
    print(f"{'union':>13}: N={scan.union_count} over n <= {scan.max_length}, N/q={scan.ratio:.2%}")
    if scan.reference is not None:
        agreement = "agrees" if scan.discrepancy == 0 else f"discrepancy {scan.discrepancy:+d}"
        print(f"{'reference':>13}: {scan.reference} ({agreement})")
    return 0


def cmd_selfcheck(args: argparse.Namespace) -> int:
    results = run_selfcheck()
    for result in results:
        print(f"{'ok  ' if result.passed else 'FAIL'} {result.name}: {result.detail}")
    return 0 if all(result.passed for result in results) else EXIT_VERIFICATION


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_budget_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--distance-budget", dest="codeword_budget", type=int, help="maximum q^k to enumerate")
    parser.add_argument("--subset-budget", type=int, help="maximum column subsets per size for the rank scan")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nmds-selfdual",
        description="Construct and verify NMDS self-dual codes over odd-characteristic finite fields.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    construct = commands.add_parser("construct", help="build a code from a construction family")
    which = construct.add_mutually_exclusive_group(required=True)
    which.add_argument("--family", choices=FAMILIES)
    which.add_argument("--theorem", choices=tuple(THEOREMS), help="published construction label, e.g. 3.5")
    for name in _PARAM_FLAGS:
        construct.add_argument(f"--{name}", type=int)
    construct.add_argument("--indices", type=_int_list, help="coset indices for the cosets family")
    construct.add_argument("--modulus", type=_int_list, help="defining polynomial, low degree first")
    construct.add_argument("-o", "--output", help="write the document here instead of stdout")
    _add_budget_flags(construct)
    construct.set_defaults(handler=cmd_construct)

    verify = commands.add_parser("verify", help="re-check a code document")
    verify.add_argument("path")
    _add_budget_flags(verify)
    verify.set_defaults(handler=cmd_verify)

    classify = commands.add_parser("classify-set", help="compare zero-sum structure with the rank verdict")
    classify.add_argument("--q", type=int, required=True)
    classify.add_argument("--elements", type=_int_list, required=True)
    classify.add_argument("--k", type=int, required=True)
    classify.add_argument("--modulus", type=_int_list)
    _add_budget_flags(classify)
    classify.set_defaults(handler=cmd_classify_set)

    scan = commands.add_parser("scan", help="count achievable lengths for a field order")
    scan.add_argument("--q", type=int, required=True)
    scan.add_argument("--json", action="store_true", help="print the full scan as JSON")
    scan.set_defaults(handler=cmd_scan)

    selfcheck = commands.add_parser("selfcheck", help="run the built-in invariant suites")
    selfcheck.set_defaults(handler=cmd_selfcheck)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.handler(args)
    except NmdsError as exc:
        code = exit_code_for(exc)
        label = "invalid input" if code == EXIT_INVALID else "verification failed"
        print(f"{label}: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
