"""Build, document and re-verify one code per construction family.

Each instance goes through the full construct -> make_document -> JSON ->
verify_document path, which is what a user of the CLI exercises. Budgets come
from the NMDS_* environment variables.

Usage:
    python PRODUCTION_TESTS/replicate_instances.py
"""

import json
import sys
import time

from nmds_selfdual import Budgets, make_document, pipeline, verify_document
from nmds_selfdual.constructions import build_from_recipe, field_for_recipe
from nmds_selfdual.types import CodeDocument, Recipe

INSTANCES: list[Recipe] = [
    Recipe(family="cyclic", params={"q": 13, "n": 6}),
    Recipe(family="cyclic", params={"q": 37, "n": 12}),
    Recipe(family="cosets", params={"r": 5, "e": 4, "f": 6, "t": 1}),
    Recipe(family="mixed-cosets", params={"r": 3, "s": 1, "t": 1}),
    Recipe(family="mixed-cosets", params={"r": 5, "s": 2, "t": 1}),
    Recipe(family="subspace", params={"q": 9, "r": 3, "ell": 1, "t": 1}),
    Recipe(family="trace", params={"p": 3, "m": 1, "t": 2, "s": 0}),
]


def main() -> None:
    budgets = Budgets.from_env()

    print("=" * 60)
    print("  INSTANCE REPLICATION")
    print("=" * 60)
    print(f"  Instances:   {len(INSTANCES)}")
    print(f"  Budgets:     {budgets.model_dump()}")
    print("=" * 60)
    print()

    failures: list[str] = []
    total = 0.0

    for recipe in INSTANCES:
        label = f"{recipe.family} {recipe.params}"
        t0 = time.perf_counter()
        field = field_for_recipe(recipe, table_threshold=budgets.table_threshold)
        eval_set = build_from_recipe(field, recipe, search_budget=budgets.search_budget)
        code, classification = pipeline(eval_set, budgets)
        document = make_document(code, classification, budgets)
        reloaded = CodeDocument.model_validate(json.loads(document.to_json()))
        report = verify_document(reloaded, budgets)
        elapsed = time.perf_counter() - t0
        total += elapsed

        status = "ok" if report.passed else "FAIL"
        print(f"  {status:<5} [{code.n},{code.k},{classification.d}] {classification.verdict:<5} {label}  {elapsed:.2f}s")
        if not report.passed:
            failures.append(label)
            for line in report.checks:
                if not line.passed:
                    print(f"        {line.name}: {line.detail}")

    print()
    print("=" * 60)
    print(f"  {'total:' :<25} {total:>6.2f}s")
    print("=" * 60)

    if failures:
        print(f"  {len(failures)} instance(s) failed verification")
        sys.exit(1)


if __name__ == "__main__":
    main()
