"""
basic algebra, 왼쪽 잉여 po-groupoid, contrapositional groupoid 를
검증하고 유도 구조를 계산하는 모듈입니다.
"""

import logging
from itertools import combinations
from typing import Dict, Iterator, Tuple

import numpy as np

from .data_models import (
    BasicAlgebraModel,
    BoundedLattice,
    ContrapositionalGroupoid,
    FinitePoset,
    LeftResiduatedGroupoid,
    LemmaRuleReport,
    RightResiduumResult,
    Verdict,
    freeze_table,
)
from .errors import (
    AxiomFailed,
    ConditionAFailed,
    ConditionBFailed,
    IdentityFailed,
    MalformedTable,
    NoResiduum,
    ResiduationFailed,
    StructureError,
)
from .law_checker import catalog_law, check_formula
from .order_structures import (
    greatest_in_sets,
    greatest_lower_bound,
    least_upper_bound,
    validate_finite_poset,
)

# 로깅 설정
logger = logging.getLogger(__name__)

BASIC_AXIOMS: Tuple[Tuple[int, str], ...] = ((1, "ba1"), (2, "ba2"), (3, "ba3"), (4, "ba4"))
LEMMA_RULE_FAMILY_SIZE = 3


def _binary_table(values, size: int, name: str) -> np.ndarray:
    table = np.asarray(values)
    if table.shape != (size, size):
        raise MalformedTable(f"{name} table must be {size}x{size}, got {table.shape}")
    if not ((table >= 0) & (table < size)).all():
        raise MalformedTable(f"{name} table has entries outside 0..{size - 1}")
    return freeze_table(table)


def _unary_table(values, size: int, name: str) -> np.ndarray:
    table = np.asarray(values)
    if table.shape != (size,):
        raise MalformedTable(f"{name} table must have length {size}, got {table.shape}")
    if not ((table >= 0) & (table < size)).all():
        raise MalformedTable(f"{name} table has entries outside 0..{size - 1}")
    return freeze_table(table)


def _first_failure(mask: np.ndarray):
    positions = np.argwhere(mask)
    if positions.shape[0] == 0:
        return None
    return tuple(int(value) for value in positions[0])


def validate_basic_algebra(oplus, neg, zero: int = 0) -> BasicAlgebraModel:
    """
    (⊕, ¬, 0) 표가 basic algebra 공리 (1)–(4) 를 만족하는지 검증합니다.

    Args:
        oplus: n×n ⊕ 표
        neg: 길이 n 의 ¬ 표
        zero: 상수 0 의 인덱스

    Returns:
        BasicAlgebraModel: 검증된 모델

    Raises:
        AxiomFailed: 첫 번째로 실패한 공리와 사전식 첫 번째 대입
    """
    negation = np.asarray(neg)
    size = negation.shape[0] if negation.ndim == 1 else 0
    if size == 0:
        raise MalformedTable("negation table must be a non-empty vector")
    if not 0 <= zero < size:
        raise MalformedTable(f"zero {zero} outside 0..{size - 1}")
    candidate = BasicAlgebraModel(
        _binary_table(oplus, size, "oplus"), _unary_table(negation, size, "neg"), int(zero)
    )
    for axiom, law_name in BASIC_AXIOMS:
        verdict = check_formula(catalog_law(law_name), candidate)
        if not verdict.holds:
            raise AxiomFailed(axiom, verdict.witness)

    # x ⊕ ¬0 = ¬0 = ¬0 ⊕ x 는 (1)–(4) 에서 따라나옴
    verdict = check_formula(catalog_law("ba_top"), candidate)
    if not verdict.holds:
        logger.error(f"공리 (1)–(4) 를 통과했지만 ba_top 이 실패했습니다: {verdict}")
        raise AxiomFailed("ba_top", verdict.witness)
    logger.debug(f"{size}원소 basic algebra 검증 완료")
    return candidate


def basic_induced_order(algebra: BasicAlgebraModel) -> BoundedLattice:
    """
    x <= y ⇔ ¬x ⊕ y = 1 로 유도된 순서와 (10) 의 격자 연산을 계산합니다.

    Returns:
        BoundedLattice: poset 필드가 유도된 순서 (bottom = 0, top = ¬0)
    """
    oplus, negation = np.asarray(algebra.oplus), np.asarray(algebra.neg)
    elements = np.arange(algebra.size)
    one = algebra.one
    implication = oplus[negation, :]
    try:
        poset = validate_finite_poset(implication == one, bottom=algebra.zero, top=one)
    except StructureError as error:
        logger.critical(f"검증된 basic algebra 의 유도 순서가 순서가 아닙니다: {error}")
        raise

    mult = negation[oplus[negation[:, None], negation[None, :]]]
    right_division = oplus[:, negation]
    join = implication[implication, elements[None, :]]
    meet = mult[right_division, elements[None, :]]
    return BoundedLattice(poset, freeze_table(meet), freeze_table(join))


def _check_identity(poset: FinitePoset, mult: np.ndarray) -> None:
    top = poset.top
    elements = np.arange(poset.size)
    failing = ~((mult[top, :] == elements) & (mult[:, top] == elements))
    witness = _first_failure(failing)
    if witness is not None:
        raise IdentityFailed(witness[0])


def validate_lrpg(poset: FinitePoset, mult, res) -> LeftResiduatedGroupoid:
    """
    왼쪽 잉여 법칙 (7) x·y <= z ⇔ x <= z/y 와 항등원 1 을 검증합니다.

    저장된 / 표는 신뢰하지 않고 모든 (x, y, z) 에 대해 다시 확인합니다.

    Raises:
        IdentityFailed: 1 이 양쪽 항등원이 아닌 첫 원소
        ResiduationFailed: (7) 이 깨지는 첫 번째 (x, y, z)
    """
    size = poset.size
    mult = _binary_table(mult, size, "mult")
    res = _binary_table(res, size, "res")
    leq = poset.leq
    _check_identity(poset, mult)

    elements = np.arange(size)
    product_below = leq[mult[:, :, None], elements[None, None, :]]
    below_quotient = leq[elements[:, None, None], res.T[None, :, :]]
    witness = _first_failure(product_below != below_quotient)
    if witness is not None:
        raise ResiduationFailed(*witness)
    return LeftResiduatedGroupoid(poset, mult, res)


def residuum_from_mult(poset: FinitePoset, mult) -> np.ndarray:
    """
    z/y = max{x : x·y <= z} 로 / 표 전체를 계산합니다.

    Raises:
        NoResiduum: 최대원이 없는 첫 번째 (z, y)
    """
    size = poset.size
    mult = _binary_table(mult, size, "mult")
    elements = np.arange(size)
    # members[z, y, x]: x·y <= z
    members = poset.leq[mult.T[None, :, :], elements[:, None, None]]
    values, exists = greatest_in_sets(poset.leq, members)
    witness = _first_failure(~exists)
    if witness is not None:
        raise NoResiduum(*witness)
    return freeze_table(values)


def find_right_residuum(groupoid: LeftResiduatedGroupoid, x: int, z: int) -> RightResiduumResult:
    """
    x\\z = max{y : x·y <= z} 를 찾습니다. 없으면 극대원소들을 돌려줍니다.
    """
    leq = groupoid.poset.leq
    members = leq[groupoid.mult[x, :], z]
    candidates = [int(y) for y in np.flatnonzero(members)]
    maximal = tuple(
        y for y in candidates if not any(u != y and leq[y, u] for u in candidates)
    )
    if len(maximal) == 1:
        return RightResiduumResult(maximal[0], maximal)
    return RightResiduumResult(None, maximal)


def validate_cpg(poset: FinitePoset, mult, imp) -> ContrapositionalGroupoid:
    """
    조건 (a) 1→x = x 와 (b) x·y <= z ⇔ x <= ~z → ~y 를 검증합니다.

    Raises:
        IdentityFailed, ConditionAFailed, ConditionBFailed
    """
    size = poset.size
    mult = _binary_table(mult, size, "mult")
    imp = _binary_table(imp, size, "imp")
    leq = poset.leq
    _check_identity(poset, mult)

    elements = np.arange(size)
    witness = _first_failure(imp[poset.top, :] != elements)
    if witness is not None:
        raise ConditionAFailed(witness[0])

    tilde = imp[:, poset.bottom]
    product_below = leq[mult[:, :, None], elements[None, None, :]]
    # contrapositive[y, z] = ~z → ~y
    contrapositive = imp[tilde[None, :], tilde[:, None]]
    below_implication = leq[elements[:, None, None], contrapositive[None, :, :]]
    witness = _first_failure(product_below != below_implication)
    if witness is not None:
        raise ConditionBFailed(*witness)
    return ContrapositionalGroupoid(poset, mult, imp)


def _element_families(size: int) -> Iterator[Tuple[int, ...]]:
    for family_size in range(1, LEMMA_RULE_FAMILY_SIZE + 1):
        yield from combinations(range(size), family_size)


def _family_witness(family: Tuple[int, ...], y: int) -> Dict[str, int]:
    witness = {f"x{position + 1}": element for position, element in enumerate(family)}
    witness["y"] = y
    return witness


def _check_join_distribution(groupoid: LeftResiduatedGroupoid) -> Verdict:
    """(⋁ x_i)·y = ⋁ (x_i·y), ⋁ x_i 가 있을 때"""
    poset, mult = groupoid.poset, groupoid.mult
    for family in _element_families(poset.size):
        family_join = least_upper_bound(poset, family)
        if family_join is None:
            continue
        for y in range(poset.size):
            expected = least_upper_bound(poset, [int(mult[x, y]) for x in family])
            if expected is None or expected != mult[family_join, y]:
                return Verdict(False, _family_witness(family, y))
    return Verdict(True)


def _check_meet_distribution(groupoid: LeftResiduatedGroupoid) -> Verdict:
    """(⋀ x_i)/y = ⋀ (x_i/y), ⋀ x_i 가 있을 때"""
    poset, res = groupoid.poset, groupoid.res
    for family in _element_families(poset.size):
        family_meet = greatest_lower_bound(poset, family)
        if family_meet is None:
            continue
        for y in range(poset.size):
            expected = greatest_lower_bound(poset, [int(res[x, y]) for x in family])
            if expected is None or expected != res[family_meet, y]:
                return Verdict(False, _family_witness(family, y))
    return Verdict(True)


def check_lemma_rules(groupoid: LeftResiduatedGroupoid) -> LemmaRuleReport:
    """
    잉여 법칙의 기본 결과 (a)–(i) 를 규칙별로 판정합니다.

    (h), (i) 는 크기 3 이하의 모든 원소 족 중 join/meet 이 있는 것에 대해 확인합니다.
    """
    verdicts = {
        rule: check_formula(catalog_law(f"lemma_{rule}"), groupoid) for rule in "abcdefg"
    }
    verdicts["h"] = _check_join_distribution(groupoid)
    verdicts["i"] = _check_meet_distribution(groupoid)
    report = LemmaRuleReport(verdicts)
    if not report.all_hold:
        logger.error(f"검증된 groupoid 에서 규칙 {report.failing_rules()} 이 실패했습니다")
    return report


def divisibility_conditions(groupoid: LeftResiduatedGroupoid) -> Dict[str, bool]:
    """
    나눗셈 법칙과 동치인 세 조건을 각각 따로 계산합니다.

    Returns:
        {"div": (11) 성립,
         "factorization": x <= y ⇔ 어떤 z 에 대해 x = z·y,
         "meet_semilattice": meet 이 모두 있고 x∧y = (x/y)·y}
    """
    poset, mult, res = groupoid.poset, groupoid.mult, groupoid.res
    leq = poset.leq
    elements = np.arange(poset.size)

    factorizable = (mult[:, None, :] == elements[None, :, None]).any(axis=0)

    lower = leq.T[:, None, :] & leq.T[None, :, :]
    meet, has_meet = greatest_in_sets(leq, lower)
    meet_formula = mult[res, elements[None, :]]

    return {
        "div": check_formula(catalog_law("div"), groupoid).holds,
        "factorization": bool(np.array_equal(factorizable, leq)),
        "meet_semilattice": bool(has_meet.all() and np.array_equal(meet, meet_formula)),
    }
