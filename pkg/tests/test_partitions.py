from math import factorial, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacklab.errors import DomainError
from jacklab.partitions import (
    arm,
    cells,
    conjugate,
    content,
    dominates,
    hook_length,
    is_partition,
    lambda_factorial,
    leg,
    make_partition,
    parse_partition,
    partitions_of,
    z_lambda,
)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

partitions = st.integers(1, 9).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def test_counts_and_order():
    for n, c in enumerate(PARTITION_COUNTS[1:], start=1):
        ps = partitions_of(n)
        assert len(ps) == c
        assert ps == sorted(ps, reverse=True)
        assert ps[0] == (n,) and ps[-1] == (1,) * n
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_parse_and_validate():
    assert parse_partition("3,1") == (3, 1)
    assert parse_partition("2, 2, 0") == (2, 2)
    assert make_partition([2, 1, 0]) == (2, 1)
    assert not is_partition([1, 2])
    assert parse_partition("") == ()
    for bad in ("1,2", "a", "-1", "2,0,1"):
        with pytest.raises(DomainError):
            parse_partition(bad)


@given(partitions)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


def test_dominance_reverses_under_conjugation():
    for n in range(1, 9):
        ps = partitions_of(n)
        for a in ps:
            assert dominates(a, a)
            for b in ps:
                assert dominates(a, b) == dominates(conjugate(b), conjugate(a))
                if dominates(a, b) and dominates(b, a):
                    assert a == b
                # reverse-lex refines dominance
                if dominates(a, b):
                    assert a >= b


def test_dominance_size_mismatch():
    with pytest.raises(DomainError):
        dominates((2,), (1, 1, 1))


@given(partitions)
def test_hooks(lam):
    n = sum(lam)
    cs = list(cells(lam))
    assert len(cs) == n
    # hook length formula against the conjugate
    lam_c = conjugate(lam)
    for (r, c) in cs:
        assert arm(lam, (r, c)) == leg(lam_c, (c, r))
        assert hook_length(lam, (r, c)) == arm(lam, (r, c)) + leg(lam, (r, c)) + 1
    assert sum(arm(lam, s) for s in cs) == sum(leg(lam_c, s) for s in cells(lam_c))


def test_contents_example():
    assert sorted(content(s) for s in cells((3, 2))) == [-1, 0, 0, 1, 2]
    assert content((1, 3)) == 2


def test_cell_outside_shape():
    with pytest.raises(DomainError):
        arm((2, 1), (2, 2))


def test_z_lambda_class_sizes():
    for n in range(1, 8):
        assert sum(factorial(n) // z_lambda(lam) for lam in partitions_of(n)) == factorial(n)
    assert z_lambda((2, 1, 1)) == 2 * 2
    assert lambda_factorial((3, 2)) == 12
    assert lambda_factorial((1, 1, 1)) == prod([1, 1, 1])
