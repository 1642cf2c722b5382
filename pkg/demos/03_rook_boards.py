"""
Ferrers boards, rook numbers and hit numbers
============================================

The product prod(alpha + c_i - i + 1) expands in C(alpha+k, n) with hit
numbers as coefficients, and in falling factorials with rook numbers.
Content boards turn Schur coefficients of J~_(n) into hit numbers.
"""

import random

import numpy as np

from jacklab import a_coeffs, binomial_shift_expand
from jacklab.rook import content_board, gjw_product, hit_numbers, hook_boards, random_board, rook_numbers
from jacklab.tableaux import kostka

board = content_board((3, 2))
print(board, "\nheights", board.heights)
print("rooks", rook_numbers(board), "hits", hit_numbers(board))
print("product", gjw_product(board), "->", [int(x) for x in binomial_shift_expand(gjw_product(board), 5)])

# compare with the Schur coefficient of J~_(5)
lam = (3, 2)
print("a_k((5),(3,2))          =", [int(x) for x in a_coeffs((5,), lam)])
print("K_{lam,1^5} * hit nums   =", [kostka(lam, (1,) * 5) * h for h in hit_numbers(board)])

C, D = hook_boards(4, 1)
print("\nhook boards for (3,1):", C.heights, D.heights)

# hit-number distribution over random boards of size 7
rng = random.Random(0)
hits = np.array([hit_numbers(random_board(7, rng)) for _ in range(50)])
print("\nmean hit numbers over 50 random 7-boards:", np.round(hits.mean(axis=0), 1))
print("every row sums to 7! :", bool((hits.sum(axis=1) == 5040).all()))
