"""Count the lengths every construction family reaches for a given ``q``.

Everything here is integer arithmetic on the family parameters; no field
is built.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator

from sympy import divisors

from nmds_selfdual._exceptions import InvalidParams
from nmds_selfdual.constructions._base import MIN_LENGTH, odd_prime_power
from nmds_selfdual.constructions._cosets import coset_count
from nmds_selfdual.constructions._mixed_cosets import mixed_length, parity_holds
from nmds_selfdual.constructions._subspace import subspace_length
from nmds_selfdual.constructions._trace import subspace_dimension, trace_length
from nmds_selfdual.types._documents import FamilyLengths, LengthScan

logger = logging.getLogger("nmds_selfdual")

#: Published counts of achievable lengths for three square orders.
REFERENCE_COUNTS: dict[int, int] = {10201: 1528, 11449: 1586, 39601: 5211}


def _cyclic_lengths(p: int, m: int) -> Iterator[int]:
    q = p**m
    if q % 4 != 1:
        return
    for n in divisors(q - 1):
        if n % 2 == 0 and MIN_LENGTH <= n < q - 1:
            yield int(n)


def _cosets_lengths(p: int, m: int) -> Iterator[int]:
    if m % 2:
        return
    q, r = p**m, p ** (m // 2)
    for f in divisors(q - 1):
        f = int(f)
        if ((q - 1) // f) % 2 or f < 2:
            continue
        for t in range(1, coset_count(r, f) + 1):
            n = t * f
            if n % 2 or n < MIN_LENGTH or (t % 2 and f < 4):
                continue
            yield n


def _mixed_cosets_lengths(p: int, m: int) -> Iterator[int]:
    if m % 2:
        return
    r = p ** (m // 2)
    for s in range(1, (r + 1) // 2 + 1):
        if not parity_holds(r, s):
            continue
        for t in range(1, (r - 1) // 2 + 1):
            yield mixed_length(r, s, t)


def _subspace_lengths(p: int, m: int) -> Iterator[int]:
    if m % 2:
        return
    for degree in divisors(m // 2):
        r = p ** int(degree)
        for ell in range(m // int(degree)):
            for t in range(1, (r - 1) // 2 + 1):
                n = subspace_length(r, ell, t)
                if n >= MIN_LENGTH:
                    yield n


def _trace_lengths(p: int, m: int) -> Iterator[int]:
    if m % 2:
        return
    half = m // 2
    r = p**half
    for t in range(2, r + 1, 2):
        top = p ** (half - subspace_dimension(p, t)) - 1
        for s in range(0, top + 1, 2):
            yield trace_length(p, half, t, s)


_FAMILY_LENGTHS: dict[str, Callable[[int, int], Iterator[int]]] = {
    "cyclic": _cyclic_lengths,
    "cosets": _cosets_lengths,
    "mixed-cosets": _mixed_cosets_lengths,
    "subspace": _subspace_lengths,
    "trace": _trace_lengths,
}


def scan_lengths(q: int) -> LengthScan:
    """All even lengths ``4 <= n <= 2q + 2`` reached by some family over F_q.

    Lengths reached by several families are counted once in the union;
    the per-family lists are kept alongside.

    Raises:
        InvalidParams: If ``q`` is not an odd prime power.
    """
    try:
        p, m = odd_prime_power(q, "q")
    except InvalidParams:
        raise InvalidParams(f"q={q} must be an odd prime power") from None
    limit = 2 * q + 2

    families = []
    union: set[int] = set()
    for family, lengths in _FAMILY_LENGTHS.items():
        found = sorted({n for n in lengths(p, m) if n % 2 == 0 and MIN_LENGTH <= n <= limit})
        union.update(found)
        families.append(FamilyLengths(family=family, count=len(found), lengths=tuple(found)))
        logger.debug("%s family reaches %d lengths over F_%d", family, len(found), q)

    reference = REFERENCE_COUNTS.get(q)
    return LengthScan(
        q=q,
        max_length=limit,
        families=tuple(families),
        union=tuple(sorted(union)),
        union_count=len(union),
        ratio=len(union) / q,
        reference=reference,
        discrepancy=len(union) - reference if reference is not None else None,
    )
