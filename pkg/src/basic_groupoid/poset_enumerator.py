"""
크기 n 의 유계 순서집합을 동형 사본 없이 열거하는 모듈입니다.

유계 n-순서집합은 (n-2)-순서집합에 bottom 과 top 을 붙인 것이므로,
자연 번호가 붙은 내부 순서집합을 원소 하나씩 (아래 집합을 골라) 키운 뒤
관계표의 정규형으로 중복을 제거합니다.
"""

import logging
from functools import lru_cache
from typing import Iterator, List, Tuple

import numpy as np

from .canonical_form import _relation_minimizers
from .configuration import MAXIMUM_SEARCH_SIZE, MINIMUM_SEARCH_SIZE
from .data_models import BoundedLattice, FinitePoset, freeze_table
from .errors import SizeOutOfRange
from .order_structures import admits_antitone_involution, try_meets_joins

# 로깅 설정
logger = logging.getLogger(__name__)


def _check_size(size: int) -> None:
    if not MINIMUM_SEARCH_SIZE <= size <= MAXIMUM_SEARCH_SIZE:
        raise SizeOutOfRange(size, MINIMUM_SEARCH_SIZE, MAXIMUM_SEARCH_SIZE)


def _naturally_labeled_orders(count: int) -> Iterator[List[int]]:
    """
    {0..count-1} 위의 자연 번호 순서들 (i < j 이면 j ≰ i).

    각 원소 k 의 엄격한 아래 집합을 비트마스크 below[k] 로 표현합니다.
    """

    def extend(below: List[int]) -> Iterator[List[int]]:
        element = len(below)
        if element == count:
            yield list(below)
            return
        for mask in range(1 << element):
            members = [j for j in range(element) if mask >> j & 1]
            if all(below[j] & ~mask == 0 for j in members):
                below.append(mask)
                yield from extend(below)
                below.pop()

    yield from extend([])


def _bounded_relation(below: List[int], size: int) -> np.ndarray:
    leq = np.eye(size, dtype=bool)
    leq[0, :] = True
    leq[:, size - 1] = True
    for upper, mask in enumerate(below):
        for lower in range(len(below)):
            if mask >> lower & 1:
                leq[lower + 1, upper + 1] = True
    return leq


@lru_cache(maxsize=None)
def _bounded_poset_catalog(size: int) -> Tuple[FinitePoset, ...]:
    representatives = {}
    for below in _naturally_labeled_orders(size - 2):
        leq = _bounded_relation(below, size)
        encoding, _ = _relation_minimizers(leq.tobytes(), size, 0, size - 1)
        if encoding not in representatives:
            canonical = np.frombuffer(encoding, dtype=np.uint8).reshape(size, size)
            representatives[encoding] = FinitePoset(
                freeze_table(canonical, dtype=bool), 0, size - 1
            )
    ordered = tuple(representatives[key] for key in sorted(representatives))
    logger.info(f"크기 {size}의 유계 순서집합 {len(ordered)}개를 열거했습니다")
    return ordered


def enumerate_bounded_posets(size: int) -> Iterator[FinitePoset]:
    """
    크기 size 의 유계 순서집합을 동형류마다 하나씩 결정적 순서로 생성합니다.

    Raises:
        SizeOutOfRange: 2..8 밖의 크기
    """
    _check_size(size)
    yield from _bounded_poset_catalog(size)


def enumerate_bounded_lattices(size: int) -> Iterator[BoundedLattice]:
    """enumerate_bounded_posets 중 격자인 것들"""
    for poset in enumerate_bounded_posets(size):
        lattice = try_meets_joins(poset)
        if lattice is not None:
            yield lattice


def count_bounded_posets(size: int) -> int:
    _check_size(size)
    return len(_bounded_poset_catalog(size))


def posets_with_antitone_involution(size: int) -> Iterator[FinitePoset]:
    """반순서 involution 을 허용하는 유계 순서집합들"""
    for poset in enumerate_bounded_posets(size):
        if admits_antitone_involution(poset):
            yield poset
