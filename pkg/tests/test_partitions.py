import pytest

from wilson_super.partitions import (
    Partition,
    count_partitions,
    partitions_of,
    partitions_with_length,
    pfs,
)
from wilson_super.reference_tables import PF_FIRST_30, PFS_30, PFS_FIRST_16


def as_tuples(parts):
    return [tuple(q) for q in parts]


def test_enumeration_order_small():
    assert as_tuples(partitions_of(0)) == [()]
    assert as_tuples(partitions_of(1)) == [(1,)]
    assert as_tuples(partitions_of(3)) == [(1, 1, 1), (1, 2), (3,)]
    assert as_tuples(partitions_of(4)) == [
        (1, 1, 1, 1),
        (1, 1, 2),
        (2, 2),
        (1, 3),
        (4,),
    ]


def test_enumeration_order_is_lex_on_descending_form():
    for n in range(1, 12):
        seen = as_tuples(partitions_of(n))
        keyed = sorted(seen, key=lambda q: tuple(reversed(q)))
        assert seen == keyed


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((2, 1))
    with pytest.raises(ValueError):
        Partition((0, 1))
    with pytest.raises(ValueError):
        Partition((-1,))


def test_partition_accessors():
    q = Partition((1, 1, 2, 4))
    assert q.length == 4
    assert q.weight == 8
    assert q.multiplicities() == {1: 2, 2: 1, 4: 1}
    assert list(q) == [1, 1, 2, 4]
    assert len(q) == 4


def test_count_matches_enumeration():
    for n in range(1, 31):
        parts = partitions_of(n)
        assert count_partitions(n) == len(parts)
        for q in parts:
            assert q.weight == n


def test_count_by_length_matches_enumeration():
    for n in range(1, 21):
        by_length = {}
        for q in partitions_of(n):
            by_length[q.length] = by_length.get(q.length, 0) + 1
        for k in range(1, n + 1):
            assert count_partitions(n, k) == by_length.get(k, 0)


def test_length_counts_sum_to_total():
    for n in range(1, 31):
        total = sum(count_partitions(n, k) for k in range(1, n + 1))
        assert total == count_partitions(n)


def test_count_examples():
    assert count_partitions(1) == 1
    assert count_partitions(4) == 5
    assert count_partitions(4, 2) == 2
    assert count_partitions(30) == 5604
    assert count_partitions(7, 9) == 0


def test_count_rejects_bad_arguments():
    with pytest.raises(ValueError):
        count_partitions(0)
    with pytest.raises(ValueError):
        count_partitions(-3)
    with pytest.raises(ValueError):
        count_partitions(5, 0)


def test_first_30_counts_frozen():
    assert tuple(count_partitions(n) for n in range(1, 31)) == PF_FIRST_30


def test_pfs_is_running_sum():
    assert pfs(1) == 1
    for n in range(2, 31):
        assert pfs(n) - pfs(n - 1) == count_partitions(n)
    with pytest.raises(ValueError):
        pfs(0)


def test_pfs_frozen_values():
    assert tuple(pfs(n) for n in range(1, 17)) == PFS_FIRST_16
    assert pfs(30) == PFS_30


def test_partitions_with_length_matches_filter():
    for n in range(1, 13):
        for k in range(1, n + 1):
            direct = list(partitions_with_length(n, k))
            filtered = [tuple(q) for q in partitions_of(n) if q.length == k]
            assert sorted(direct) == sorted(filtered)
            assert direct == sorted(direct)


def test_partitions_with_length_min_part():
    assert list(partitions_with_length(6, 2, min_part=2)) == [(2, 4), (3, 3)]
    assert list(partitions_with_length(4, 3, min_part=2)) == []
