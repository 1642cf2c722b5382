import random
from itertools import combinations, permutations
from math import comb, factorial

import pytest

from jacklab.errors import DomainError
from jacklab.exactmath import binomial_shift_expand, falling_factorial_full
from jacklab.permcomb import stirling2
from jacklab.rook import (
    FerrersBoard,
    all_boards,
    content_board,
    gjw_product,
    hit_numbers,
    hit_numbers_enumerated,
    hit_numbers_from_product,
    hook_boards,
    random_board,
    rook_numbers,
)


def board_cells(b):
    return {(c, r) for c, h in enumerate(b.heights) for r in range(h)}


def brute_rooks(b):
    cells = sorted(board_cells(b))
    out = [0] * (b.n + 1)
    for k in range(b.n + 1):
        for pick in combinations(cells, k):
            if len({c for c, _ in pick}) == k and len({r for _, r in pick}) == k:
                out[k] += 1
    return out


def brute_hits(b):
    cells = board_cells(b)
    out = [0] * (b.n + 1)
    for p in permutations(range(b.n)):
        out[sum((c, p[c]) in cells for c in range(b.n))] += 1
    return out


def test_validation():
    with pytest.raises(DomainError):
        FerrersBoard(3, (0, 2, 1))
    with pytest.raises(DomainError):
        FerrersBoard(2, (0, 3))
    with pytest.raises(DomainError):
        FerrersBoard(3, (1, 1))
    b = FerrersBoard.of((0, 1, 2))
    assert FerrersBoard.from_json(b.to_json()) == b and b.cell_count() == 3


@pytest.mark.parametrize("n", range(1, 6))
def test_rook_and_hit_numbers_brute_force(n):
    for b in all_boards(n):
        assert rook_numbers(b) == brute_rooks(b)
        assert hit_numbers(b) == brute_hits(b)


def test_full_board_and_staircase():
    for n in range(1, 8):
        assert rook_numbers(FerrersBoard.of([n] * n)) == [comb(n, k) ** 2 * factorial(k) for k in range(n + 1)]
        stair = FerrersBoard.of(range(n))
        assert rook_numbers(stair) == [stirling2(n, n - k) for k in range(n + 1)]
        assert hit_numbers(FerrersBoard.of([0] * n)) == [factorial(n)] + [0] * n


@pytest.mark.parametrize("n", range(1, 7))
def test_product_expansions(n):
    for b in all_boards(n):
        p = gjw_product(b)
        assert binomial_shift_expand(p, n) == hit_numbers_enumerated(b)
        assert hit_numbers_from_product(b) == hit_numbers_enumerated(b)
        r = rook_numbers(b)
        assert falling_factorial_full(p, n) == r[::-1]


def test_random_boards():
    rng = random.Random(5)
    for n in (7, 8):
        for _ in range(25):
            b = random_board(n, rng)
            assert hit_numbers_from_product(b) == hit_numbers_enumerated(b)


def test_hook_boards_example():
    C, D = hook_boards(4, 1)
    assert C.heights == (1, 1, 2, 3)
    assert D.heights == (2, 2, 2, 3)


def test_hook_boards_edges():
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for n in range(1, 9):
            C, D = hook_boards(n, 0)
            assert D.heights == (n - 1,) * n
            C, D = hook_boards(n, n - 1)
            assert min(C.heights) >= 0
    C, D = hook_boards(2, 1)
    assert C.heights == (0, 1) and D.heights == (0, 1)
    with pytest.raises(DomainError):
        hook_boards(3, 3)


def test_content_board_example():
    assert content_board((3, 2)).heights == (2, 2, 2, 3, 3)
    assert content_board((1,)).heights == (0,)
    for n in range(1, 8):
        assert content_board((n,)).heights == (n - 1,) * n
        assert content_board((1,) * n).heights == (0,) * n
