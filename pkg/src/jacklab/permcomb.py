"""Permutation statistics, Eulerian and Stirling numbers, set partitions."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Iterator, Sequence

from .errors import DomainError, ResourceError
from .partitions import Partition

Perm = tuple[int, ...]
SetPartition = tuple[tuple[int, ...], ...]

MAX_SET_PARTITION_N = 12
_ENUMERATE_EULERIAN_UP_TO = 9

__all__ = [
    "Perm",
    "SetPartition",
    "des",
    "descent_positions",
    "all_perms",
    "eulerian",
    "restricted_perms",
    "restricted_eulerian",
    "stirling2",
    "set_partitions",
    "bell",
    "f_beta",
]


def des(perm: Sequence[int]) -> int:
    return sum(1 for a, b in zip(perm, perm[1:]) if a > b)


def descent_positions(perm: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(perm)) if perm[i - 1] > perm[i])


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    return tuple(permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def _eulerian_row(n: int) -> tuple[int, ...]:
    if n <= _ENUMERATE_EULERIAN_UP_TO:
        row = [0] * max(n, 1)
        for p in all_perms(n):
            row[des(p)] += 1
        return tuple(row)
    prev = _eulerian_row(n - 1)
    row = []
    for k in range(n):
        a = (k + 1) * prev[k] if k < len(prev) else 0
        b = (n - k) * prev[k - 1] if 0 < k <= len(prev) else 0
        row.append(a + b)
    return tuple(row)


def eulerian(n: int, k: int) -> int:
    """Number of permutations of [n] with k descents."""
    if n == 0:
        return 1 if k == 0 else 0
    row = _eulerian_row(n)
    return row[k] if 0 <= k < len(row) else 0


def restricted_perms(lam: Partition) -> Iterator[Perm]:
    """Permutations in which each block of consecutive values
    ``1..lam_1``, ``lam_1+1..lam_1+lam_2``, ... appears in increasing order.

    Generated as shuffles: choose the positions of each block in turn.
    """
    n = sum(lam)
    blocks = []
    start = 1
    for part in lam:
        blocks.append(list(range(start, start + part)))
        start += part
    word = [0] * n

    def rec(b: int, free: list[int]) -> Iterator[Perm]:
        if b == len(blocks):
            yield tuple(word)
            return
        for chosen in combinations(free, len(blocks[b])):
            for pos, v in zip(chosen, blocks[b]):
                word[pos] = v
            chosen_set = set(chosen)
            yield from rec(b + 1, [p for p in free if p not in chosen_set])

    yield from rec(0, list(range(n)))


@lru_cache(maxsize=None)
def _restricted_row(lam: Partition) -> tuple[int, ...]:
    n = sum(lam)
    row = [0] * max(n, 1)
    for p in restricted_perms(lam):
        row[des(p)] += 1
    return tuple(row)


def restricted_eulerian(lam: Partition, k: int) -> int:
    row = _restricted_row(tuple(lam))
    return row[k] if 0 <= k < len(row) else 0


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def set_partitions(n: int) -> list[SetPartition]:
    """All set partitions of {1..n}, blocks sorted, blocks ordered by minimum."""
    if n > MAX_SET_PARTITION_N:
        raise ResourceError(f"set partitions of {n} elements exceed the bound {MAX_SET_PARTITION_N}")
    if n < 0:
        raise DomainError("n must be nonnegative")
    return list(_set_partitions(n))


@lru_cache(maxsize=None)
def _set_partitions(n: int) -> tuple[SetPartition, ...]:
    out: list[SetPartition] = []
    blocks: list[list[int]] = []

    def rec(x: int) -> None:
        if x > n:
            out.append(tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            b.append(x)
            rec(x + 1)
            b.pop()
        blocks.append([x])
        rec(x + 1)
        blocks.pop()

    rec(1)
    return tuple(out)


def bell(n: int) -> int:
    return sum(stirling2(n, k) for k in range(n + 1))


def f_beta(perm: Sequence[int], beta: SetPartition) -> Perm:
    """Sort each block's values into increasing order within the positions
    those values occupy."""
    where = {v: i for i, v in enumerate(perm)}
    flat = sorted(v for b in beta for v in b)
    if flat != sorted(where) or len(where) != len(perm):
        raise DomainError("beta must be a set partition of the values of perm")
    out = list(perm)
    for block in beta:
        slots = sorted(where[v] for v in block)
        for pos, v in zip(slots, sorted(block)):
            out[pos] = v
    return tuple(out)


def multinomial(n: int, parts: Sequence[int]) -> int:
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out
