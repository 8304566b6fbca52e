"""Compare scan_lengths() against the published length counts.

Scans every field order in REFERENCE_COUNTS (or the orders given in
NMDS_SCAN_ORDERS, comma separated) and prints the per-family counts, the
union and the difference from the published figure.

Usage:
    python PRODUCTION_TESTS/validate_length_table.py
    NMDS_SCAN_ORDERS=10201,39601 python PRODUCTION_TESTS/validate_length_table.py
"""

import os
import sys
import time

from nmds_selfdual.constructions import REFERENCE_COUNTS, scan_lengths


def selected_orders() -> list[int]:
    raw = os.environ.get("NMDS_SCAN_ORDERS")
    if not raw:
        return sorted(REFERENCE_COUNTS)
    try:
        return [int(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        print(f"ERROR: NMDS_SCAN_ORDERS must be comma-separated integers, got {raw!r}")
        sys.exit(1)


def main() -> None:
    orders = selected_orders()

    print("=" * 60)
    print("  LENGTH TABLE VALIDATION")
    print("=" * 60)
    print(f"  Orders:      {', '.join(str(q) for q in orders)}")
    print("=" * 60)
    print()

    mismatches: list[int] = []
    timings: dict[int, float] = {}

    for q in orders:
        print("-" * 60)
        print(f"  F_{q}")
        print("-" * 60)
        t0 = time.perf_counter()
        scan = scan_lengths(q)
        timings[q] = time.perf_counter() - t0

        for family in scan.families:
            print(f"  {family.family + ':' :<16} {family.count:>6}")
        print(f"  {'union:' :<16} {scan.union_count:>6}  (N/q = {scan.ratio:.3f})")
        if scan.reference is None:
            print("  reference:       none published")
        elif scan.discrepancy == 0:
            print(f"  reference:       {scan.reference}  (agrees)")
        else:
            print(f"  reference:       {scan.reference}  (differs by {scan.discrepancy:+d})")
            mismatches.append(q)
        print()

    print("=" * 60)
    print("  TIMING SUMMARY")
    print("=" * 60)
    for q, elapsed in timings.items():
        print(f"  {'F_' + str(q) + ':' :<25} {elapsed:>6.2f}s")
    print("=" * 60)

    if mismatches:
        print(f"  Differences at q = {', '.join(str(q) for q in mismatches)}")
        sys.exit(1)


if __name__ == "__main__":
    main()
