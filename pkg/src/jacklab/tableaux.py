"""Young tableaux in French notation.

Rows are stored bottom row first.  "Weakly left" is read as a column
comparison: entry ``a`` is weakly left of entry ``b`` when
``col(a) <= col(b)``.  In a semistandard tableau, a value class forms a
horizontal strip, so this matches "above, or above and to the left".
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import DomainError
from .partitions import Partition, conjugate, make_partition

__all__ = [
    "Tableau",
    "enumerate_ssyt",
    "enumerate_syt",
    "kostka",
    "descent_set",
    "runs",
    "is_quasi_yamanouchi",
    "destandardize",
    "standardize",
    "enumerate_qyt",
    "qyt_distribution",
    "qyt_count",
    "rsk",
    "dual_equiv",
    "reading_word",
    "syt_count",
]


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = tuple(len(r) for r in rows)
        if any(len(r) == 0 for r in rows) or list(shape) != sorted(shape, reverse=True):
            raise DomainError(f"row lengths {shape} do not form a partition")
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v < 1:
                    raise DomainError("entries must be positive")
                if c and row[c - 1] > v:
                    raise DomainError(f"row {r + 1} is not weakly increasing")
                if r and rows[r - 1][c] >= v:
                    raise DomainError(f"column {c + 1} is not strictly increasing")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> Tableau:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def max_entry(self) -> int:
        return max((max(r) for r in self.rows), default=0)

    def weight(self) -> tuple[int, ...]:
        cnt = Counter(v for r in self.rows for v in r)
        return tuple(cnt.get(i, 0) for i in range(1, self.max_entry() + 1))

    def is_standard(self) -> bool:
        return sorted(v for r in self.rows for v in r) == list(range(1, self.size + 1))

    def positions(self) -> dict[int, list[tuple[int, int]]]:
        """value -> list of (row, col), 1-based, sorted by column."""
        pos: dict[int, list[tuple[int, int]]] = {}
        for r, row in enumerate(self.rows, start=1):
            for c, v in enumerate(row, start=1):
                pos.setdefault(v, []).append((r, c))
        for v in pos:
            pos[v].sort(key=lambda rc: rc[1])
        return pos

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        width = len(str(self.max_entry()))
        return "\n".join(" ".join(f"{v:>{width}}" for v in row) for row in reversed(self.rows))


# --- enumeration --------------------------------------------------------

def enumerate_ssyt(shape: Sequence[int], max_entry: int) -> list[Tableau]:
    """All SSYT of ``shape`` with entries <= ``max_entry``.

    Ordered lexicographically by the bottom-up row reading.
    """
    shape = make_partition(shape)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    out: list[Tableau] = []

    def fill(k: int) -> None:
        if k == len(cells):
            out.append(Tableau(tuple(tuple(row) for row in grid)))
            return
        r, c = cells[k]
        lo = 1
        if c:
            lo = max(lo, grid[r][c - 1])
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        # column above needs room for strictly larger entries
        hi = max_entry - (sum(1 for part in shape[r + 1:] if part > c))
        for v in range(lo, hi + 1):
            grid[r][c] = v
            fill(k + 1)
        grid[r][c] = 0

    fill(0)
    return out


@lru_cache(maxsize=None)
def _syt_cached(shape: Partition) -> tuple[Tableau, ...]:
    n = sum(shape)
    if n == 0:
        return (Tableau(()),)
    out = []
    # remove the corner holding n
    for r in range(len(shape)):
        if r == len(shape) - 1 or shape[r] > shape[r + 1]:
            smaller = list(shape)
            smaller[r] -= 1
            smaller = tuple(p for p in smaller if p)
            for t in _syt_cached(smaller):
                rows = [list(row) for row in t.rows]
                if r == len(rows):
                    rows.append([n])
                else:
                    rows[r].append(n)
                out.append(Tableau(tuple(tuple(x) for x in rows)))
    out.sort(key=lambda t: t.rows)
    return tuple(out)


def enumerate_syt(shape: Sequence[int]) -> list[Tableau]:
    return list(_syt_cached(make_partition(shape)))


def syt_count(shape: Sequence[int]) -> int:
    return len(_syt_cached(make_partition(shape)))


def _horizontal_strips(inner: Partition, outer: Partition) -> Iterator[Partition]:
    """Partitions k with inner <= k <= outer and k/inner a horizontal strip."""
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    choice = [0] * len(outer)

    def rec(r: int) -> Iterator[Partition]:
        if r == len(outer):
            yield tuple(p for p in choice if p)
            return
        top = outer[r] if r == 0 else min(outer[r], inner[r - 1])
        for v in range(inner[r], top + 1):
            choice[r] = v
            yield from rec(r + 1)

    yield from rec(0)


@lru_cache(maxsize=None)
def _kostka(nu: Partition, weight: tuple[int, ...]) -> int:
    if not weight:
        return 1 if not nu else 0
    last = weight[-1]
    rest = weight[:-1]
    total = 0
    # nu / kappa must be a horizontal strip of size `last`
    size = sum(nu) - last
    for kappa in _horizontal_strips_down(nu):
        if sum(kappa) == size:
            total += _kostka(kappa, rest)
    return total


def _horizontal_strips_down(nu: Partition) -> Iterator[Partition]:
    """Partitions kappa <= nu with nu/kappa a horizontal strip."""
    ext = tuple(nu) + (0,)
    choice = [0] * len(nu)

    def rec(r: int) -> Iterator[Partition]:
        if r == len(nu):
            yield tuple(p for p in choice if p)
            return
        for v in range(ext[r + 1], nu[r] + 1):
            choice[r] = v
            yield from rec(r + 1)

    yield from rec(0)


def kostka(nu: Sequence[int], lam: Sequence[int]) -> int:
    """Number of SSYT of shape ``nu`` and weight ``lam``."""
    nu, lam = make_partition(nu), tuple(int(x) for x in lam)
    if sum(nu) != sum(lam):
        raise DomainError(f"sizes differ: |{nu}| != |{lam}|")
    return _kostka(nu, lam)


# --- descents and destandardization ------------------------------------

def _require_standard(t: Tableau) -> None:
    if not t.is_standard():
        raise DomainError("tableau is not standard")


def descent_set(t: Tableau) -> frozenset[int]:
    """Entries i such that i+1 is weakly left of i."""
    _require_standard(t)
    col = {v: c for v, [(r, c)] in t.positions().items()}
    return frozenset(i for i in range(1, t.size) if col[i + 1] <= col[i])


def runs(t: Tableau) -> list[frozenset[int]]:
    des = sorted(descent_set(t))
    bounds = [0] + des + [t.size]
    return [frozenset(range(bounds[i] + 1, bounds[i + 1] + 1)) for i in range(len(bounds) - 1)]


def is_quasi_yamanouchi(t: Tableau) -> bool:
    pos = t.positions()
    for i in pos:
        if i == 1:
            continue
        if i - 1 not in pos:
            return False
        if pos[i][0][1] > pos[i - 1][-1][1]:
            return False
    return True


def _decrementable(pos: dict[int, list[tuple[int, int]]]) -> int | None:
    for i in sorted(pos):
        if i == 1:
            continue
        if i - 1 not in pos or pos[i][0][1] > pos[i - 1][-1][1]:
            return i
    return None


def destandardize(t: Tableau) -> Tableau:
    """Repeatedly merge a value class into the one below while allowed."""
    rows = [list(r) for r in t.rows]
    while True:
        tt = Tableau(tuple(tuple(r) for r in rows))
        i = _decrementable(tt.positions())
        if i is None:
            return tt
        rows = [[v - 1 if v == i else v for v in r] for r in rows]


def standardize(t: Tableau) -> Tableau:
    """Relabel each value class left to right by consecutive integers."""
    pos = t.positions()
    rows = [list(r) for r in t.rows]
    label = 0
    for v in sorted(pos):
        for r, c in pos[v]:
            label += 1
            rows[r - 1][c - 1] = label
    return Tableau(tuple(tuple(r) for r in rows))


# --- quasi-Yamanouchi tableaux -----------------------------------------

def _qy_steps(shape: Partition, inner: Partition, last_right: int | None):
    """Nonempty strips inner -> kappa satisfying the QY link to the
    previous strip; yields (kappa, added cells, rightmost column)."""
    padded = tuple(inner) + (0,) * (len(shape) - len(inner))
    for kappa in _horizontal_strips(inner, shape):
        kp = tuple(kappa) + (0,) * (len(shape) - len(kappa))
        added = [(r, c) for r in range(len(shape)) for c in range(padded[r], kp[r])]
        if not added:
            continue
        left = min(c for _, c in added)
        if last_right is not None and left > last_right:
            continue
        yield kappa, added, max(c for _, c in added)


def enumerate_qyt(shape: Sequence[int]) -> list[Tableau]:
    """All quasi-Yamanouchi tableaux of ``shape``, built strip by strip."""
    shape = make_partition(shape)
    out: list[Tableau] = []
    grid = [[0] * length for length in shape]

    def rec(inner: Partition, value: int, last_right: int | None) -> None:
        if inner == shape:
            out.append(Tableau(tuple(tuple(r) for r in grid)))
            return
        for kappa, added, right in _qy_steps(shape, inner, last_right):
            for r, c in added:
                grid[r][c] = value
            rec(kappa, value + 1, right)
            for r, c in added:
                grid[r][c] = 0

    rec((), 1, None)
    out.sort(key=lambda t: (t.max_entry(), t.rows))
    return out


@lru_cache(maxsize=None)
def qyt_distribution(shape: Partition) -> tuple[int, ...]:
    """``d[m]`` = number of QYT of ``shape`` with maximum entry exactly m."""
    shape = make_partition(shape)
    n = sum(shape)

    @lru_cache(maxsize=None)
    def count(inner: Partition, last_right: int | None) -> tuple[int, ...]:
        # result[j] = completions using exactly j more strips
        if inner == shape:
            return (1,)
        acc = [0] * (n + 2)
        for kappa, _, right in _qy_steps(shape, inner, last_right):
            for j, c in enumerate(count(kappa, right)):
                acc[j + 1] += c
        while len(acc) > 1 and acc[-1] == 0:
            acc.pop()
        return tuple(acc)

    dist = list(count((), None)) + [0] * (n + 1)
    return tuple(dist[: n + 1])


def qyt_count(shape: Sequence[int], m: int) -> int:
    """Number of QYT of ``shape`` with maximum entry exactly ``m``."""
    dist = qyt_distribution(make_partition(shape))
    return dist[m] if 0 <= m < len(dist) else 0


# --- RSK and dual equivalence -------------------------------------------

def _check_perm(perm: Sequence[int]) -> tuple[int, ...]:
    p = tuple(perm)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise DomainError(f"{perm!r} is not a permutation")
    return p


def rsk(perm: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row-insertion RSK: returns (insertion tableau, recording tableau)."""
    perm = _check_perm(perm)
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(perm, start=1):
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[r]
            # first entry strictly greater than x
            lo, hi = 0, len(row)
            while lo < hi:
                mid = (lo + hi) // 2
                if row[mid] > x:
                    hi = mid
                else:
                    lo = mid + 1
            if lo == len(row):
                row.append(x)
                Q[r].append(step)
                break
            row[lo], x = x, row[lo]
            r += 1
    return Tableau(tuple(map(tuple, P))), Tableau(tuple(map(tuple, Q)))


def insertion_descents(perm: Sequence[int]) -> frozenset[int]:
    """Descent set of the RSK insertion tableau of ``perm``."""
    return descent_set(rsk(perm)[0])


def dual_equiv(perm: Sequence[int], i: int) -> tuple[int, ...]:
    """Elementary dual equivalence involution d_i.

    Fixes ``perm`` when i sits between i-1 and i+1; otherwise swaps i with
    whichever of i-1, i+1 is farther from it.
    """
    perm = _check_perm(perm)
    n = len(perm)
    if not 1 < i < n:
        raise DomainError(f"d_{i} undefined on S_{n}")
    where = {v: k for k, v in enumerate(perm)}
    a, b, c = where[i - 1], where[i], where[i + 1]
    if min(a, c) < b < max(a, c):
        return perm
    other = i - 1 if abs(a - b) > abs(c - b) else i + 1
    out = list(perm)
    out[b], out[where[other]] = other, i
    return tuple(out)


def reading_word(t: Tableau) -> tuple[int, ...]:
    """Rows read left to right, from the top row down."""
    return tuple(v for row in reversed(t.rows) for v in row)


def conjugate_tableau(t: Tableau) -> Tableau:
    shape = conjugate(t.shape)
    return Tableau(tuple(tuple(t.rows[r][c] for r in range(shape[c])) for c in range(len(shape))))
