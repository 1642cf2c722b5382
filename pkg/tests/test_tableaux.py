from collections import Counter, deque
from math import factorial

import pytest

from jacklab.errors import DomainError
from jacklab.partitions import conjugate, partitions_of
from jacklab.permcomb import all_perms
from jacklab.tableaux import (
    Tableau,
    conjugate_tableau,
    descent_set,
    destandardize,
    dual_equiv,
    enumerate_qyt,
    enumerate_ssyt,
    enumerate_syt,
    insertion_descents,
    is_quasi_yamanouchi,
    kostka,
    qyt_count,
    qyt_distribution,
    reading_word,
    rsk,
    runs,
    standardize,
    syt_count,
)

EXAMPLE_SYT = Tableau.from_rows([[1, 2, 3, 6, 8], [4, 5, 7, 11], [9, 10, 12]])


def test_tableau_validation():
    with pytest.raises(DomainError):
        Tableau.from_rows([[1, 2], [1]])
    with pytest.raises(DomainError):
        Tableau.from_rows([[2, 1]])
    with pytest.raises(DomainError):
        Tableau.from_rows([[1], [2, 3]])
    t = Tableau.from_rows([[1, 1, 2], [2, 3]])
    assert t.shape == (3, 2) and t.weight() == (2, 2, 1) and not t.is_standard()


def test_example_descents_and_runs():
    assert descent_set(EXAMPLE_SYT) == {3, 6, 8, 11}
    r = runs(EXAMPLE_SYT)
    assert len(r) == 5
    assert r[0] == {1, 2, 3} and r[3] == {9, 10, 11}


def test_descent_requires_standard():
    with pytest.raises(DomainError):
        descent_set(Tableau.from_rows([[1, 1]]))


def test_example_qyt_221():
    got = {tuple(map(tuple, t.rows)) for t in enumerate_qyt((2, 2, 1))}
    want = {
        ((1, 1), (2, 2), (3,)),
        ((1, 1), (2, 3), (3,)),
        ((1, 2), (2, 3), (3,)),
        ((1, 2), (2, 3), (4,)),
        ((1, 3), (2, 4), (3,)),
    }
    assert got == want
    assert qyt_count((2, 2, 1), 3) == 3 and qyt_count((2, 2, 1), 4) == 2


def brute_qyt(shape):
    n = sum(shape)
    return Counter(t.max_entry() for t in enumerate_ssyt(shape, n) if is_quasi_yamanouchi(t))


@pytest.mark.parametrize("n", range(1, 7))
def test_qyt_against_ssyt_filter(n):
    for lam in partitions_of(n):
        brute = brute_qyt(lam)
        dist = qyt_distribution(lam)
        assert {m: c for m, c in enumerate(dist) if c} == dict(brute)
        assert len(enumerate_qyt(lam)) == sum(brute.values())


def test_qyt_totals_and_conjugate_symmetry():
    for n in range(1, 9):
        for lam in partitions_of(n):
            dist = qyt_distribution(lam)
            assert sum(dist) == syt_count(lam)
            lc = conjugate(lam)
            for k in range(1, n + 1):
                assert qyt_count(lam, k) == qyt_count(lc, n + 1 - k)


def test_syt_hook_length_and_square_sum():
    for n in range(1, 9):
        assert sum(syt_count(lam) ** 2 for lam in partitions_of(n)) == factorial(n)
    assert syt_count((3, 2)) == 5
    assert len(enumerate_syt((2, 2, 1))) == 5


def test_kostka_small():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (2, 1)) == 1
    assert kostka((2, 1), (3,)) == 0
    assert kostka((3, 2), (2, 2, 1)) == 2
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert kostka(lam, (1,) * n) == syt_count(lam)


@pytest.mark.parametrize("n", range(1, 8))
def test_destandardization_is_a_bijection(n):
    for lam in partitions_of(n):
        qyts = set()
        for t in enumerate_syt(lam):
            q = destandardize(t)
            assert is_quasi_yamanouchi(q)
            # the number of runs becomes the largest entry
            assert q.max_entry() == len(runs(t))
            assert standardize(q) == t
            qyts.add(q)
        assert qyts == set(enumerate_qyt(lam))
        for q in qyts:
            assert destandardize(standardize(q)) == q


def test_rsk_bijection():
    for n in range(1, 8):
        seen = set()
        for p in all_perms(n):
            P, Q = rsk(p)
            assert P.is_standard() and Q.is_standard() and P.shape == Q.shape
            seen.add((P, Q))
        assert len(seen) == factorial(n)
    P, Q = rsk((2, 4, 5, 3, 1))
    assert P.shape == (3, 1, 1)


def test_rsk_inverse_symmetry():
    for p in all_perms(6):
        inv = [0] * 6
        for i, v in enumerate(p):
            inv[v - 1] = i + 1
        P, Q = rsk(p)
        assert rsk(tuple(inv)) == (Q, P)


def test_reading_word_inserts_to_itself():
    for lam in partitions_of(6):
        for t in enumerate_syt(lam):
            assert rsk(reading_word(t))[0] == t


def test_conjugate_tableau_descents_complement():
    for lam in partitions_of(6):
        for t in enumerate_syt(lam):
            tc = conjugate_tableau(t)
            assert descent_set(tc) == set(range(1, 6)) - descent_set(t)


def test_dual_equiv_examples_and_errors():
    assert dual_equiv((2, 1, 3), 2) == (3, 1, 2)
    assert dual_equiv((1, 2, 3), 2) == (1, 2, 3)
    with pytest.raises(DomainError):
        dual_equiv((1, 2, 3), 1)
    with pytest.raises(DomainError):
        dual_equiv((1, 2, 2), 2)


@pytest.mark.parametrize("n", range(3, 8))
def test_dual_equiv_involution_preserves_recording(n):
    for p in all_perms(n):
        Q = rsk(p)[1]
        for i in range(2, n):
            q = dual_equiv(p, i)
            assert dual_equiv(q, i) == p
            assert rsk(q)[1] == Q


@pytest.mark.parametrize("n", range(3, 7))
def test_dual_equiv_classes_are_recording_classes(n):
    perms = all_perms(n)
    seen = set()
    classes = 0
    for start in perms:
        if start in seen:
            continue
        classes += 1
        comp, todo = {start}, deque([start])
        while todo:
            p = todo.popleft()
            for i in range(2, n):
                q = dual_equiv(p, i)
                if q not in comp:
                    comp.add(q)
                    todo.append(q)
        seen |= comp
        # one class per recording tableau, containing every insertion tableau of its shape
        assert len({rsk(p)[1] for p in comp}) == 1
        assert len(comp) == syt_count(rsk(start)[0].shape)
    assert classes == sum(syt_count(lam) for lam in partitions_of(n))


def test_insertion_descents():
    assert insertion_descents((2, 1, 3)) == {1}
    assert insertion_descents((1, 2, 3)) == frozenset()
