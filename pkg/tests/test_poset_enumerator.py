import pytest

from basic_groupoid.canonical_form import canonical_form
from basic_groupoid.errors import SizeOutOfRange
from basic_groupoid.order_structures import try_meets_joins
from basic_groupoid.poset_enumerator import (
    count_bounded_posets,
    enumerate_bounded_lattices,
    enumerate_bounded_posets,
    posets_with_antitone_involution,
)

# 유계 순서집합 수 (= 내부 순서집합 수) 와 격자 수
BOUNDED_POSET_COUNTS = {2: 1, 3: 1, 4: 2, 5: 5, 6: 16}
LATTICE_COUNTS = {2: 1, 3: 1, 4: 2, 5: 5, 6: 15}


@pytest.mark.parametrize("size, expected", BOUNDED_POSET_COUNTS.items())
def test_bounded_poset_counts(size, expected):
    assert count_bounded_posets(size) == expected


@pytest.mark.parametrize("size, expected", LATTICE_COUNTS.items())
def test_lattice_counts(size, expected):
    assert len(list(enumerate_bounded_lattices(size))) == expected


@pytest.mark.slow
def test_bounded_poset_counts_for_large_sizes():
    assert count_bounded_posets(7) == 63
    assert count_bounded_posets(8) == 318
    assert len(list(enumerate_bounded_lattices(8))) == 222


@pytest.mark.parametrize("size", [2, 3, 4, 5, 6])
def test_posets_are_bounded_and_pairwise_non_isomorphic(size):
    posets = list(enumerate_bounded_posets(size))
    for poset in posets:
        assert (poset.bottom, poset.top) == (0, size - 1)
        assert poset.leq[0, :].all()
        assert poset.leq[:, size - 1].all()
    assert len({canonical_form(poset) for poset in posets}) == len(posets)


def test_enumeration_order_is_deterministic():
    assert list(enumerate_bounded_posets(6)) == list(enumerate_bounded_posets(6))


def test_small_posets_are_lattices():
    for size in (2, 3, 4, 5):
        assert all(try_meets_joins(poset) is not None for poset in enumerate_bounded_posets(size))


def test_posets_with_antitone_involution():
    # 5원소: 사슬, M3, pentagon 만 가능하고 V, Λ 모양은 불가능
    assert len(list(posets_with_antitone_involution(5))) == 3


@pytest.mark.parametrize("size", [0, 1, 9])
def test_size_out_of_range(size):
    with pytest.raises(SizeOutOfRange):
        list(enumerate_bounded_posets(size))
