"""Integer partitions and skew shapes."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinonchars.partitions import (
    Partition,
    SkewShape,
    all_partitions_upto,
    partitions_of,
)


def test_partition_normalizes_and_validates():
    assert Partition([3, 2, 0, 0]).parts == (3, 2)
    with pytest.raises(ValueError):
        Partition([2, 3])
    with pytest.raises(ValueError):
        Partition([2, -1])


def test_indexing_is_one_based_with_zero_tail():
    p = Partition([4, 2, 1])
    assert (p[1], p[2], p[3], p[4]) == (4, 2, 1, 0)


def test_conjugate_is_involution():
    for p in all_partitions_upto(7):
        assert p.conjugate().conjugate() == p
        assert p.conjugate().size() == p.size()


def test_conjugate_pinned():
    assert Partition([3, 1]).conjugate().parts == (2, 1, 1)


def test_multiplicities():
    assert Partition([3, 2, 2, 1]).multiplicities() == {3: 1, 2: 2, 1: 1}


def test_partitions_of_counts():
    # p(0..9) = 1,1,2,3,5,7,11,15,22,30
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    for n, count in enumerate(expected):
        assert len(list(partitions_of(n))) == count


def test_partitions_of_respects_bounds():
    for p in partitions_of(8, max_part=3, max_len=4):
        assert len(p) <= 4 and (not p.parts or p.parts[0] <= 3)


def test_containment():
    assert Partition([3, 2]).contains(Partition([2, 2]))
    assert not Partition([3, 2]).contains(Partition([1, 1, 1]))


def test_skew_shape_cells_and_columns():
    shape = SkewShape(Partition([2, 2]), Partition([1]))
    assert sorted(shape.cells()) == [(0, 1), (1, 0), (1, 1)]
    assert shape.size() == 3
    assert shape.column_heights() == (1, 2)  # left-to-right


def test_skew_shape_requires_containment():
    with pytest.raises(ValueError):
        SkewShape(Partition([1]), Partition([2]))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(1, 6), min_size=0, max_size=5))
def test_sorted_lists_make_partitions(parts):
    p = Partition(sorted(parts, reverse=True))
    assert p.size() == sum(parts)
    assert len(p.conjugate()) == (max(parts) if parts else 0)
