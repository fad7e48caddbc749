"""
유한 유계 순서집합, 격자, 직교격자와 section involution 족을 다루는 모듈입니다.

모든 검증은 사전식으로 첫 번째인 위반을 witness 로 보고합니다.
"""

import logging
from typing import Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from .data_models import (
    BoundedLattice,
    FinitePoset,
    OrthoLattice,
    OrthoLatticeReport,
    SectionInvolutionFamily,
    freeze_table,
)
from .errors import (
    BoundsViolated,
    MalformedTable,
    NoJoin,
    NoMeet,
    NotAntisymmetric,
    NotAntitone,
    NotInvolutive,
    NotIntoSection,
    NotReflexive,
    NotTransitive,
    StructureError,
)

# 로깅 설정
logger = logging.getLogger(__name__)


def _first_true(mask: np.ndarray) -> Optional[Tuple[int, ...]]:
    """C 순서(사전식)로 첫 번째 True 위치"""
    positions = np.argwhere(mask)
    if positions.size == 0:
        return None
    return tuple(int(value) for value in positions[0])


def validate_finite_poset(
    leq_table, bottom: int = 0, top: Optional[int] = None
) -> FinitePoset:
    """
    관계표를 유계 순서집합으로 검증합니다.

    Args:
        leq_table: n×n 0/1 (또는 bool) 관계표, leq_table[x][y] 는 x <= y
        bottom: 최소원 인덱스
        top: 최대원 인덱스 (기본값 n-1)

    Returns:
        FinitePoset: 검증된 순서집합

    Raises:
        NotReflexive, NotAntisymmetric, NotTransitive, BoundsViolated
    """
    raw = np.asarray(leq_table)
    if raw.ndim != 2 or raw.shape[0] != raw.shape[1] or raw.shape[0] == 0:
        raise MalformedTable(f"relation table must be square, got shape {raw.shape}")
    if not np.isin(raw, (0, 1)).all():
        raise MalformedTable("relation table entries must be 0 or 1")
    leq = raw.astype(bool)
    size = leq.shape[0]
    top = size - 1 if top is None else top
    if not (0 <= bottom < size and 0 <= top < size):
        raise MalformedTable(f"bounds ({bottom}, {top}) outside 0..{size - 1}")

    witness = _first_true(~np.diag(leq))
    if witness is not None:
        raise NotReflexive(witness[0])

    witness = _first_true(leq & leq.T & ~np.eye(size, dtype=bool))
    if witness is not None:
        raise NotAntisymmetric(*witness)

    # broken[x, y, z]: x <= y, y <= z 인데 x <= z 가 아님
    broken = leq[:, :, None] & leq[None, :, :] & ~leq[:, None, :]
    witness = _first_true(broken)
    if witness is not None:
        raise NotTransitive(*witness)

    witness = _first_true(~(leq[bottom, :] & leq[:, top]))
    if witness is not None:
        raise BoundsViolated(witness[0])

    return FinitePoset(freeze_table(leq, dtype=bool), int(bottom), int(top))


def greatest_in_sets(leq: np.ndarray, members: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    members[..., c] 로 주어진 부분집합들의 최대원을 한꺼번에 찾습니다.

    Returns:
        (최대원 인덱스 배열, 최대원 존재 여부 배열), 둘 다 members.shape[:-1] 모양
    """
    # greatest[..., m]: m 이 집합에 있고 모든 원소 c 가 c <= m
    dominated = ~members[..., :, None] | leq
    greatest = members & dominated.all(axis=-2)
    return greatest.argmax(axis=-1), greatest.any(axis=-1)


def _greatest_bounds(leq: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """모든 쌍의 최대 하계를 계산합니다. (값 표, 존재 여부 표)"""
    # lower[x, y, c]: c <= x 이고 c <= y
    lower = leq.T[:, None, :] & leq.T[None, :, :]
    return greatest_in_sets(leq, lower)


def meets_joins(poset: FinitePoset) -> BoundedLattice:
    """
    하계/상계 집합을 훑어 meet 과 join 표를 계산합니다.

    Raises:
        NoMeet: 최대 하계가 없는 첫 번째 쌍
        NoJoin: 최소 상계가 없는 첫 번째 쌍
    """
    leq = np.asarray(poset.leq, dtype=bool)
    meet, has_meet = _greatest_bounds(leq)
    witness = _first_true(~has_meet)
    if witness is not None:
        raise NoMeet(*witness)

    join, has_join = _greatest_bounds(leq.T)
    witness = _first_true(~has_join)
    if witness is not None:
        raise NoJoin(*witness)

    return BoundedLattice(poset, freeze_table(meet), freeze_table(join))


def try_meets_joins(poset: FinitePoset) -> Optional[BoundedLattice]:
    """격자가 아니면 None 을 반환합니다."""
    try:
        return meets_joins(poset)
    except (NoMeet, NoJoin):
        return None


def least_upper_bound(poset: FinitePoset, elements: Sequence[int]) -> Optional[int]:
    """원소 집합의 최소 상계 (없으면 None, 빈 집합이면 bottom)"""
    leq = poset.leq
    upper = np.ones(poset.size, dtype=bool)
    for element in elements:
        upper &= leq[element, :]
    for candidate in np.flatnonzero(upper):
        if (~upper | leq[candidate, :]).all():
            return int(candidate)
    return None


def greatest_lower_bound(poset: FinitePoset, elements: Sequence[int]) -> Optional[int]:
    """원소 집합의 최대 하계 (없으면 None, 빈 집합이면 top)"""
    leq = poset.leq
    lower = np.ones(poset.size, dtype=bool)
    for element in elements:
        lower &= leq[:, element]
    for candidate in np.flatnonzero(lower):
        if (~lower | leq[:, candidate]).all():
            return int(candidate)
    return None


def hasse_covers(poset: FinitePoset) -> List[Tuple[int, int]]:
    """덮개 관계 (x, y) 목록: x < y 이고 사이에 원소가 없음"""
    strict_order = nx.DiGraph()
    strict_order.add_nodes_from(range(poset.size))
    strict_order.add_edges_from(
        (int(x), int(y))
        for x, y in np.argwhere(poset.leq & ~np.eye(poset.size, dtype=bool))
    )
    covers = nx.transitive_reduction(strict_order)
    return sorted(covers.edges())


def build_involution_family(
    lattice: BoundedLattice, kind: str, section_map
) -> SectionInvolutionFamily:
    """section_map(a, x) 로 주어진 족을 -1 로 채워진 표로 만듭니다."""
    if kind not in ("filters", "ideals"):
        raise MalformedTable(f"unknown involution family kind '{kind}'")
    size = lattice.size
    maps = np.full((size, size), -1, dtype=np.int64)
    leq = lattice.poset.leq
    for a in range(size):
        for x in range(size):
            inside = leq[a, x] if kind == "filters" else leq[x, a]
            if inside:
                maps[a, x] = section_map(a, x)
    return SectionInvolutionFamily(lattice, kind, freeze_table(maps))


def validate_involution_family(family: SectionInvolutionFamily) -> SectionInvolutionFamily:
    """
    각 원소 a 마다 section 위의 사상이 section 안으로 가고,
    반순서이며, involution 인지 확인합니다.

    Raises:
        NotIntoSection, NotAntitone, NotInvolutive: 첫 번째 실패 (a, x)
    """
    if family.kind not in ("filters", "ideals"):
        raise MalformedTable(f"unknown involution family kind '{family.kind}'")
    leq = family.lattice.poset.leq
    maps = family.maps
    for a in range(family.size):
        section = family.section(a)
        members = set(section)
        for x in section:
            if int(maps[a, x]) not in members:
                raise NotIntoSection(a, x)
        for x in section:
            for y in section:
                if leq[x, y] and not leq[maps[a, y], maps[a, x]]:
                    raise NotAntitone(a, x, y)
        for x in section:
            if maps[a, maps[a, x]] != x:
                raise NotInvolutive(a, x)
    return family


def dualize_involution_family(family: SectionInvolutionFamily) -> SectionInvolutionFamily:
    """
    필터 위의 족을 아이디얼 위의 족으로 (또는 그 반대로) 옮깁니다.

    필터 → 아이디얼: δ_a(x) = γ_0(γ_{γ_0(a)}(γ_0(x) ∨ γ_0(a)))
    아이디얼 → 필터: γ_a(x) = δ_1(δ_{δ_1(a)}(δ_1(x) ∧ δ_1(a)))
    """
    lattice = family.lattice
    maps = family.maps
    if family.kind == "filters":
        negation = maps[lattice.poset.bottom]

        def section_map(a: int, x: int) -> int:
            na = negation[a]
            return int(negation[maps[na, lattice.join[negation[x], na]]])

        dual = build_involution_family(lattice, "ideals", section_map)
    else:
        negation = maps[lattice.poset.top]

        def section_map(a: int, x: int) -> int:
            na = negation[a]
            return int(negation[maps[na, lattice.meet[negation[x], na]]])

        dual = build_involution_family(lattice, "filters", section_map)
    logger.debug(f"{family.kind} 족을 {dual.kind} 족으로 변환했습니다")
    return validate_involution_family(dual)


def iter_section_antitone_involutions(
    poset: FinitePoset, section: Sequence[int]
) -> Iterator[Tuple[int, ...]]:
    """
    section 위의 모든 반순서 involution 을 사전식 순서로 생성합니다.

    Yields:
        section 의 각 원소에 대한 상 (section 순서와 같은 순서)
    """
    elements = list(section)
    leq = poset.leq
    image = {}

    def compatible(source: int, target: int) -> bool:
        for assigned, assigned_image in image.items():
            if leq[source, assigned] and not leq[assigned_image, target]:
                return False
            if leq[assigned, source] and not leq[target, assigned_image]:
                return False
        return True

    def extend(position: int) -> Iterator[Tuple[int, ...]]:
        while position < len(elements) and elements[position] in image:
            position += 1
        if position == len(elements):
            yield tuple(image[x] for x in elements)
            return
        x = elements[position]
        for y in elements:
            if y in image:
                continue
            if not compatible(x, y) or not compatible(y, x):
                continue
            image[x] = y
            image[y] = x
            yield from extend(position + 1)
            del image[x]
            image.pop(y, None)

    yield from extend(0)


def admits_antitone_involution(poset: FinitePoset) -> bool:
    """순서집합 전체 위에 반순서 involution 이 있는지 확인합니다."""
    section = tuple(range(poset.size))
    return next(iter_section_antitone_involutions(poset, section), None) is not None


def validate_ortholattice(ortho: OrthoLattice) -> OrthoLatticeReport:
    """
    직교격자 조건과 직교모듈러 조건을 판정합니다.

    Returns:
        OrthoLatticeReport: 두 플래그와 각각의 첫 번째 반례
    """
    lattice = ortho.lattice
    leq = lattice.poset.leq
    perp = np.asarray(ortho.perp)
    bottom, top = lattice.poset.bottom, lattice.poset.top
    elements = np.arange(lattice.size)

    if perp.shape != (lattice.size,) or not ((perp >= 0) & (perp < lattice.size)).all():
        return OrthoLatticeReport(False, False, "perp is not a total unary table")

    checks = (
        ("involution", ~(perp[perp] == elements)),
        ("antitone", leq & ~leq[perp[None, :], perp[:, None]]),
        ("complement meet", ~(lattice.meet[elements, perp] == bottom)),
        ("complement join", ~(lattice.join[elements, perp] == top)),
    )
    for name, failures in checks:
        witness = _first_true(failures)
        if witness is not None:
            logger.debug(f"직교격자 조건 실패: {name} at {witness}")
            return OrthoLatticeReport(False, False, name, witness)

    # x <= y 이면 x ∨ (x⊥ ∧ y) = y
    restored = lattice.join[elements[:, None], lattice.meet[perp[:, None], elements[None, :]]]
    witness = _first_true(leq & ~(restored == elements[None, :]))
    if witness is not None:
        return OrthoLatticeReport(True, False, orthomodular_witness=witness)
    return OrthoLatticeReport(True, True)


def lattice_law_violations(lattice: BoundedLattice) -> List[str]:
    """meet/join 의 교환, 결합, 흡수 법칙 위반 목록 (테스트 보조)"""
    meet, join = lattice.meet, lattice.join
    x, y, z = np.indices((lattice.size,) * 3)
    failures = []
    if not np.array_equal(meet, meet.T) or not np.array_equal(join, join.T):
        failures.append("commutative")
    if not (meet[meet[x, y], z] == meet[x, meet[y, z]]).all():
        failures.append("meet associative")
    if not (join[join[x, y], z] == join[x, join[y, z]]).all():
        failures.append("join associative")
    a, b = np.indices((lattice.size,) * 2)
    if not ((meet[a, join[a, b]] == a) & (join[a, meet[a, b]] == a)).all():
        failures.append("absorptive")
    return failures


__all__ = [
    "StructureError",
    "validate_finite_poset",
    "greatest_in_sets",
    "meets_joins",
    "try_meets_joins",
    "least_upper_bound",
    "greatest_lower_bound",
    "hasse_covers",
    "build_involution_family",
    "validate_involution_family",
    "dualize_involution_family",
    "iter_section_antitone_involutions",
    "admits_antitone_involution",
    "validate_ortholattice",
    "lattice_law_violations",
]
