import math

import pytest

from cosasym.combinatorics import (
    IndexPartition,
    SignPattern,
    enumerate_partitions,
    enumerate_signs,
    odd_set,
)


class TestOddSet:
    @pytest.mark.parametrize("d, expected", [(1, [1]), (2, [1]), (5, [1, 3, 5]), (8, [1, 3, 5, 7])])
    def test_values(self, d, expected):
        assert odd_set(d) == expected

    def test_invalid(self):
        with pytest.raises(ValueError):
            odd_set(0)


class TestPartitions:
    def test_counts_match_binomial(self):
        for d in range(1, 9):
            for m in range(1, d + 1):
                assert len(enumerate_partitions(d, m)) == math.comb(d, m)

    def test_d2_m1_order(self):
        parts = enumerate_partitions(2, 1)
        assert [(p.head, p.tail) for p in parts] == [((1,), (2,)), ((2,), (1,))]

    def test_full_block(self):
        (p,) = enumerate_partitions(3, 3)
        assert p.head == (1, 2, 3) and p.tail == ()

    def test_each_is_permutation(self):
        for d in range(1, 7):
            for m in range(1, d + 1):
                for p in enumerate_partitions(d, m):
                    assert sorted(p.head + p.tail) == list(range(1, d + 1))
                    assert p.dimension == d

    def test_range_errors(self):
        with pytest.raises(ValueError):
            enumerate_partitions(3, 0)
        with pytest.raises(ValueError):
            enumerate_partitions(3, 4)

    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            IndexPartition((2, 1), (3,))  # not increasing
        with pytest.raises(ValueError):
            IndexPartition((1,), (3,))  # not a partition of {1..d}
        with pytest.raises(ValueError):
            IndexPartition((), (1, 2))  # empty head


class TestSigns:
    def test_counts_and_uniqueness(self):
        for m in range(1, 6):
            pats = enumerate_signs(m)
            assert len(pats) == 2**m
            assert len({p.signs for p in pats}) == 2**m
        assert enumerate_signs(1)[0].signs == (1,)

    def test_invalid(self):
        with pytest.raises(ValueError):
            enumerate_signs(0)
        with pytest.raises(ValueError):
            SignPattern((1, 0))


def test_shell_count_identity():
    # 2 * sum over odd m of C(d,m) (2n)^(d-m) == (2n+1)^d - (2n-1)^d, exactly
    for d in range(1, 7):
        for n in range(1, 11):
            lhs = 2 * sum(math.comb(d, m) * (2 * n) ** (d - m) for m in odd_set(d))
            rhs = (2 * n + 1) ** d - (2 * n - 1) ** d
            assert lhs == rhs
