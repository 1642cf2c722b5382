"""Ferrers boards, rook numbers and hit numbers.

A board ``B(c_1, ..., c_n)`` sits in the n x n grid with column i holding
the cells of rows 1..c_i.  A full rook placement is a permutation: the
rook of column i sits in row ``perm[i]``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DomainError, InternalInconsistencyError, ResourceError
from .exactmath import AlphaPoly, binomial_shift_expand
from .partitions import Partition, cells, content, make_partition

MAX_HIT_ENUMERATION_N = 9

__all__ = [
    "FerrersBoard",
    "rook_numbers",
    "hit_numbers",
    "hit_numbers_enumerated",
    "hit_numbers_from_product",
    "gjw_product",
    "hook_boards",
    "content_board",
    "all_boards",
    "random_board",
]


@dataclass(frozen=True)
class FerrersBoard:
    n: int
    heights: tuple[int, ...]

    def __post_init__(self):
        h = tuple(int(x) for x in self.heights)
        object.__setattr__(self, "heights", h)
        if len(h) != self.n:
            raise DomainError(f"expected {self.n} column heights, got {len(h)}")
        if any(not 0 <= x <= self.n for x in h):
            raise DomainError(f"heights {h} leave the {self.n}x{self.n} grid")
        if any(a > b for a, b in zip(h, h[1:])):
            raise DomainError(f"heights {h} are not weakly increasing")

    @classmethod
    def of(cls, heights: Sequence[int]) -> FerrersBoard:
        return cls(len(heights), tuple(heights))

    def cell_count(self) -> int:
        return sum(self.heights)

    def to_json(self) -> dict:
        return {"n": self.n, "heights": list(self.heights)}

    @classmethod
    def from_json(cls, data: dict) -> FerrersBoard:
        return cls(data["n"], tuple(data["heights"]))

    def __str__(self) -> str:
        lines = []
        for row in range(self.n, 0, -1):
            lines.append("".join("#" if h >= row else "." for h in self.heights))
        return "\n".join(lines)


def rook_numbers(board: FerrersBoard) -> list[int]:
    """r_0..r_n: placements of k nonattacking rooks on the board."""
    R = [1] + [0] * board.n
    for c in board.heights:
        new = list(R)
        for j in range(1, board.n + 1):
            new[j] += R[j - 1] * max(c - (j - 1), 0)
        R = new
    return R


def gjw_product(board: FerrersBoard) -> AlphaPoly:
    """prod_i (alpha + c_i - i + 1)."""
    return prod(
        (AlphaPoly((c - i + 1, 1)) for i, c in enumerate(board.heights, start=1)),
        start=AlphaPoly.const(1),
    )


@lru_cache(maxsize=None)
def _perm_array(n: int) -> np.ndarray:
    # rows of 0-based row indices, one row per permutation
    return np.array(list(permutations(range(n))), dtype=np.int8).reshape(-1, n)


def hit_numbers_enumerated(board: FerrersBoard) -> list[int]:
    """h_0..h_n by exhausting all n! full placements."""
    n = board.n
    if n > MAX_HIT_ENUMERATION_N:
        raise ResourceError(f"hit enumeration limited to n <= {MAX_HIT_ENUMERATION_N}")
    if n == 0:
        return [1]
    perms = _perm_array(n)
    heights = np.array(board.heights, dtype=np.int8)
    hits = (perms < heights).sum(axis=1)
    return [int(x) for x in np.bincount(hits, minlength=n + 1)]


def hit_numbers_from_product(board: FerrersBoard) -> list[int]:
    """h_0..h_n read off the C(alpha+k, n) expansion of the product."""
    coeffs = binomial_shift_expand(gjw_product(board), board.n)
    if any(c.denominator != 1 for c in coeffs):
        raise InternalInconsistencyError(f"non-integral hit number for {board}")
    return [int(c) for c in coeffs]


def hit_numbers(board: FerrersBoard) -> list[int]:
    """h_0..h_n, computed two ways that must agree."""
    direct = hit_numbers_enumerated(board)
    via = hit_numbers_from_product(board)
    if direct != via:
        raise InternalInconsistencyError(f"hit numbers disagree for {board}: {direct} vs {via}")
    return direct


def _clamped(heights: list[int], label: str) -> tuple[int, ...]:
    if any(h < 0 for h in heights):
        warnings.warn(f"{label}: clamping negative heights {heights} to 0", stacklevel=3)
    return tuple(max(h, 0) for h in heights)


def hook_boards(n: int, ell: int) -> tuple[FerrersBoard, FerrersBoard]:
    """The two boards attached to the hook (n - ell, 1^ell)."""
    if not 0 <= ell <= n - 1:
        raise DomainError(f"hook leg {ell} out of range for n={n}")
    c = [n - ell - 2] * (n - ell - 1) + [n - ell - 1 + i for i in range(ell + 1)]
    d = [n - ell - 1] * (n - ell) + [n - ell - 1 + i for i in range(1, ell + 1)]
    return FerrersBoard(n, _clamped(c, "C")), FerrersBoard(n, _clamped(d, "D"))


def content_board(lam: Iterable[int]) -> FerrersBoard:
    """Board whose product gives prod over cells of (alpha + content)."""
    lam = make_partition(lam)
    vals = sorted((content(s) for s in cells(lam)), reverse=True)
    heights = [v + i for i, v in enumerate(vals)]
    if any(a > b for a, b in zip(heights, heights[1:])) or any(
        not 0 <= h <= len(heights) for h in heights
    ):
        raise InternalInconsistencyError(f"content board of {lam} is not a Ferrers board: {heights}")
    return FerrersBoard(len(heights), tuple(heights))


def all_boards(n: int) -> Iterator[FerrersBoard]:
    for h in combinations_with_replacement(range(n + 1), n):
        yield FerrersBoard(n, h)


def random_board(n: int, rng) -> FerrersBoard:
    """Uniform weakly increasing heights in [0, n] (``rng``: random.Random)."""
    return FerrersBoard(n, tuple(sorted(rng.randint(0, n) for _ in range(n))))
