"""Integer partitions.

A partition is a plain tuple of weakly decreasing positive integers, e.g.
``(3, 2)``.  Diagrams are drawn in French notation: row 1 is the bottom
row.  A cell is a ``(row, col)`` pair, both 1-based.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

from .errors import DomainError

Partition = tuple[int, ...]
Cell = tuple[int, int]

__all__ = [
    "Partition",
    "Cell",
    "make_partition",
    "is_partition",
    "conjugate",
    "dominates",
    "partitions_of",
    "cells",
    "arm",
    "leg",
    "content",
    "hook_length",
    "z_lambda",
    "lambda_factorial",
    "parse_partition",
]


def is_partition(parts: Sequence[int]) -> bool:
    return all(isinstance(p, int) and p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def make_partition(parts: Sequence[int]) -> Partition:
    """Validate and return ``parts`` as a partition tuple (trailing zeros dropped)."""
    t = tuple(int(p) for p in parts)
    while t and t[-1] == 0:
        t = t[:-1]
    if not is_partition(t):
        raise DomainError(f"{parts!r} is not a partition")
    return t


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1,1"`` (or ``"[3,1,1]"``) into a partition."""
    text = text.strip().strip("[]()")
    if not text:
        return ()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise DomainError(f"cannot parse {text!r} as a partition") from exc
    return make_partition(parts)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def dominates(mu: Partition, lam: Partition) -> bool:
    """True iff every prefix sum of ``mu`` is at least that of ``lam``."""
    if sum(mu) != sum(lam):
        raise DomainError(f"sizes differ: |{mu}| != |{lam}|")
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu[i] if i < len(mu) else 0
        b += lam[i] if i < len(lam) else 0
        if a < b:
            return False
    return True


def _partitions_bounded(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(_partitions_bounded(n, n))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, (n) first."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    return list(_partitions_cached(n))


def cells(lam: Partition) -> Iterator[Cell]:
    for r, length in enumerate(lam, start=1):
        for c in range(1, length + 1):
            yield (r, c)


def _check_cell(lam: Partition, s: Cell) -> None:
    r, c = s
    if not (1 <= r <= len(lam) and 1 <= c <= lam[r - 1]):
        raise DomainError(f"cell {s} is not in the diagram of {lam}")


def arm(lam: Partition, s: Cell) -> int:
    """Cells strictly right of ``s`` in its row."""
    _check_cell(lam, s)
    return lam[s[0] - 1] - s[1]


def leg(lam: Partition, s: Cell) -> int:
    """Cells strictly above ``s`` in its column."""
    _check_cell(lam, s)
    return sum(1 for part in lam[s[0]:] if part >= s[1])


def content(s: Cell) -> int:
    """Cartesian content x - y = col - row of a cell."""
    return s[1] - s[0]


def hook_length(lam: Partition, s: Cell) -> int:
    return arm(lam, s) + leg(lam, s) + 1


def z_lambda(lam: Partition) -> int:
    """Size of the centralizer of a permutation of cycle type ``lam``."""
    return prod(i**m * factorial(m) for i, m in Counter(lam).items())


def lambda_factorial(lam: Partition) -> int:
    return prod(factorial(p) for p in lam)
