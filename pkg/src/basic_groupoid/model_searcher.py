"""
필수/금지 법칙을 만족하는 유한 모델을 동형 사본 없이 찾는 모듈입니다.

순서집합을 먼저 고정하고 (격자, 반순서 involution 필터), 그 위에서
곱셈표를 열(column) 단위로 채웁니다. 열 y 의 사상 x ↦ x·y 가
잉여(residuated)이려면 모든 {x : x·y <= z} 가 주 아이디얼이어야 하므로,
각 열의 후보는 순서집합만으로 미리 계산할 수 있습니다.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import product
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from .algebra_validator import validate_basic_algebra, validate_lrpg
from .canonical_form import canonical_form
from .configuration import (
    ANTITONE_NEGATION_LAWS,
    BRUTE_FORCE_CHUNK_SIZE,
    DEBUG_SEARCH_MAXIMUM_SIZE,
    INVOLUTIVE_NEGATION_LAWS,
    LATTICE_FORCING_LAWS,
    MAXIMUM_SEARCH_SIZE,
    MINIMUM_SEARCH_SIZE,
    SEARCH_CLASSES,
    SEARCH_MODEL_INDEX_FILE_NAME,
    SEARCH_SUMMARY_FILE_NAME,
)
from .data_models import (
    BasicAlgebraModel,
    BoundedLattice,
    FinitePoset,
    LeftResiduatedGroupoid,
    SearchResult,
    SearchSpec,
    SectionInvolutionFamily,
    freeze_table,
)
from .errors import (
    ModelFileParseError,
    SignatureMismatch,
    SizeOutOfRange,
    StructureError,
    TimeBudgetExceeded,
)
from .law_checker import (
    ModelSignature,
    catalog_law,
    check_formula,
    check_law,
    formula_status,
    groupoid_tables,
)
from .law_parser import Formula
from .model_file_io import dump_model, load_poset
from .order_structures import (
    admits_antitone_involution,
    greatest_in_sets,
    iter_section_antitone_involutions,
    try_meets_joins,
)
from .poset_enumerator import enumerate_bounded_posets
from .structure_converter import basic_from_filter_involutions

# 로깅 설정
logger = logging.getLogger(__name__)

LATTICE_OPERATORS = frozenset({"join", "meet"})


class _DeadlineReached(Exception):
    pass


@dataclass
class _PosetOutcome:
    """순서집합 하나에 대한 탐색 결과"""

    models: List[Tuple[bytes, object]] = field(default_factory=list)
    pruned: int = 0
    timed_out: bool = False
    limit_reached: bool = False


@dataclass(frozen=True)
class _LawSet:
    required: Tuple[Formula, ...]
    forbidden: Tuple[Formula, ...]

    @classmethod
    def of(cls, spec: SearchSpec) -> "_LawSet":
        return cls(
            tuple(catalog_law(name) for name in spec.require),
            tuple(catalog_law(name) for name in spec.forbid),
        )

    @property
    def uses_lattice_operations(self) -> bool:
        return any(f.operators & LATTICE_OPERATORS for f in self.required + self.forbidden)

    @property
    def prunable(self) -> Tuple[Formula, ...]:
        """부분 표에서 판정할 수 있는 필수 법칙들 (\\ 는 표가 다 차야 정해짐)"""
        return tuple(f for f in self.required if "lres" not in f.operators)


def _law_holds(formula: Formula, model) -> bool:
    try:
        return check_formula(formula, model).holds
    except SignatureMismatch:
        # 오른쪽 잉여가 없는 모델에서 \ 를 쓰는 법칙은 성립하지 않는 것으로 봄
        if "lres" in formula.operators:
            return False
        raise


def _accepts(laws: _LawSet, model) -> bool:
    if not all(_law_holds(formula, model) for formula in laws.required):
        return False
    return not any(_law_holds(formula, model) for formula in laws.forbidden)


# ---------------------------------------------------------------------------
# 탐색 조건 검증과 순서집합 선택
# ---------------------------------------------------------------------------


def _validate_spec(spec: SearchSpec) -> _LawSet:
    if spec.model_class not in SEARCH_CLASSES:
        raise StructureError(
            f"unknown search class '{spec.model_class}' (expected one of {', '.join(SEARCH_CLASSES)})"
        )
    if not MINIMUM_SEARCH_SIZE <= spec.size <= MAXIMUM_SEARCH_SIZE:
        raise SizeOutOfRange(spec.size, MINIMUM_SEARCH_SIZE, MAXIMUM_SEARCH_SIZE)
    if spec.debug and spec.size > DEBUG_SEARCH_MAXIMUM_SIZE:
        raise SizeOutOfRange(spec.size, MINIMUM_SEARCH_SIZE, DEBUG_SEARCH_MAXIMUM_SIZE)
    if spec.poset is not None and spec.poset.size != spec.size:
        raise StructureError(
            f"fixed poset has {spec.poset.size} elements but the search size is {spec.size}"
        )
    if spec.jobs < 1:
        raise StructureError(f"worker count must be positive, got {spec.jobs}")
    if spec.max_models is not None and spec.max_models < 1:
        raise StructureError(f"model limit must be positive, got {spec.max_models}")
    return _LawSet.of(spec)


def _negation_is_involutive(spec: SearchSpec) -> bool:
    return bool(INVOLUTIVE_NEGATION_LAWS & set(spec.require))


def _negation_is_antitone(spec: SearchSpec) -> bool:
    return _negation_is_involutive(spec) and bool(ANTITONE_NEGATION_LAWS & set(spec.require))


def _needs_lattice(spec: SearchSpec, laws: _LawSet) -> bool:
    if laws.uses_lattice_operations:
        return True
    if spec.debug:
        return False
    return spec.model_class == "basic" or bool(LATTICE_FORCING_LAWS & set(spec.require))


def _candidate_posets(spec: SearchSpec, laws: _LawSet) -> Iterator[FinitePoset]:
    """탐색할 순서집합들 (고정 모드이면 하나)"""
    posets = [spec.poset] if spec.poset is not None else enumerate_bounded_posets(spec.size)
    needs_lattice = _needs_lattice(spec, laws)
    antitone = _negation_is_antitone(spec) and not spec.debug
    for poset in posets:
        if needs_lattice and try_meets_joins(poset) is None:
            continue
        if antitone and not admits_antitone_involution(poset):
            continue
        yield poset


# ---------------------------------------------------------------------------
# 곱셈표의 열 후보
# ---------------------------------------------------------------------------


def _principal_maxima(leq: np.ndarray, members: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    members[..., x] 집합마다 최대원 m 과 '집합 = ↓m' 여부를 계산합니다.
    """
    values, exists = greatest_in_sets(leq, members)
    principal = exists & (members == leq.T[values]).all(axis=-1)
    return values, principal


def _linear_extension(poset: FinitePoset) -> List[int]:
    below_counts = np.asarray(poset.leq).sum(axis=0)
    return sorted(range(poset.size), key=lambda x: (int(below_counts[x]), x))


def column_candidates(
    poset: FinitePoset, y: int, lattice: Optional[BoundedLattice] = None
) -> List[Tuple[np.ndarray, np.ndarray]]:
    """
    열 y 의 가능한 (x ↦ x·y, z ↦ z/y) 쌍들을 결정적 순서로 반환합니다.

    1·y = y, x·y <= y 이고 모든 {x : x·y <= z} 가 주 아이디얼인 단조 사상만
    남깁니다. lattice 가 주어지면 (z/y)·y = z ∧ y 인 것만 남깁니다.
    """
    leq = np.asarray(poset.leq)
    size, bottom, top = poset.size, poset.bottom, poset.top
    if y == top:
        identity = np.arange(size)
        return [(identity, identity.copy())]

    order = [x for x in _linear_extension(poset) if x not in (bottom, top)]
    below_y = np.flatnonzero(leq[:, y])
    image = np.full(size, -1, dtype=np.int64)
    image[bottom] = bottom
    image[top] = y
    elements = np.arange(size)
    found = []

    def finish() -> None:
        # members[z, x]: x·y <= z
        members = leq[image[None, :], elements[:, None]]
        quotient, principal = _principal_maxima(leq, members)
        if not principal.all():
            return
        if lattice is not None and not np.array_equal(image[quotient], lattice.meet[:, y]):
            return
        found.append((image.copy(), quotient))

    def extend(position: int) -> None:
        if position == len(order):
            finish()
            return
        x = order[position]
        lower = [image[u] for u in range(size) if leq[u, x] and u != x and image[u] >= 0]
        for value in below_y:
            if all(leq[floor, value] for floor in lower):
                image[x] = value
                extend(position + 1)
        image[x] = -1

    extend(0)
    return found


def _involutions_swapping_bounds(poset: FinitePoset) -> Iterator[Tuple[int, ...]]:
    """bottom 과 top 을 맞바꾸는 모든 involution"""
    image = {poset.bottom: poset.top, poset.top: poset.bottom}

    def extend(rest: List[int]) -> Iterator[Tuple[int, ...]]:
        if not rest:
            yield tuple(image[x] for x in range(poset.size))
            return
        first = rest[0]
        for partner in rest:
            image[first] = partner
            image[partner] = first
            yield from extend([x for x in rest if x not in (first, partner)])
            del image[first]
            image.pop(partner, None)

    yield from extend([x for x in range(poset.size) if x not in (poset.bottom, poset.top)])


def _negation_choices(spec: SearchSpec, poset: FinitePoset) -> Iterator[Optional[Tuple[int, ...]]]:
    if not _negation_is_involutive(spec):
        yield None
    elif _negation_is_antitone(spec):
        yield from iter_section_antitone_involutions(poset, range(poset.size))
    else:
        yield from _involutions_swapping_bounds(poset)


# ---------------------------------------------------------------------------
# 한 순서집합 위의 탐색
# ---------------------------------------------------------------------------


class _PosetSearch:
    """순서집합 하나 위에서 모델을 찾는 깊이 우선 탐색"""

    def __init__(self, spec: SearchSpec, laws: _LawSet, poset: FinitePoset, deadline: float, limit: Optional[int]):
        self.spec = spec
        self.laws = laws
        self.poset = poset
        self.lattice = try_meets_joins(poset)
        self.deadline = deadline
        self.limit = limit
        self.outcome = _PosetOutcome()
        self.seen = set()

    def _tick(self) -> None:
        if time.time() > self.deadline:
            raise _DeadlineReached()

    def _emit(self, model) -> bool:
        """새 모델이면 기록하고, 한도에 도달하면 True"""
        form = canonical_form(model)
        if form not in self.seen:
            self.seen.add(form)
            self.outcome.models.append((form, model))
        if self.limit is not None and len(self.outcome.models) >= self.limit:
            self.outcome.limit_reached = True
            return True
        return False

    def run(self) -> _PosetOutcome:
        try:
            if self.spec.model_class == "basic":
                if self.spec.debug:
                    self._brute_force_basic()
                else:
                    self._search_basic()
            elif self.spec.debug:
                self._brute_force_groupoids()
            else:
                self._search_groupoids()
        except _DeadlineReached:
            self.outcome.timed_out = True
            logger.warning(f"시간 예산 초과로 순서집합 탐색을 중단했습니다 (크기 {self.poset.size})")
        return self.outcome

    # lrpg ------------------------------------------------------------------

    def _signature(self, mult: np.ndarray, res: np.ndarray, complete: bool) -> ModelSignature:
        poset = self.poset
        tables = groupoid_tables(poset, mult, res, self.lattice, with_right_residuum=complete)
        return ModelSignature("lrpg", poset.size, poset.leq, poset.bottom, poset.top, tables)

    def _search_groupoids(self) -> None:
        poset = self.poset
        divisible = bool(LATTICE_FORCING_LAWS & set(self.spec.require))
        columns = [y for y in range(poset.size) if y != poset.top]
        groups: Dict[int, Dict[int, list]] = {}
        for y in columns:
            self._tick()
            grouped: Dict[int, list] = {}
            for candidate in column_candidates(poset, y, self.lattice if divisible else None):
                grouped.setdefault(int(candidate[1][poset.bottom]), []).append(candidate)
            groups[y] = grouped

        for negation in _negation_choices(self.spec, poset):
            if negation is None:
                candidates = {y: [c for group in groups[y].values() for c in group] for y in columns}
            else:
                candidates = {y: groups[y].get(negation[y], []) for y in columns}
            if any(not options for options in candidates.values()):
                continue
            logger.debug(
                f"¬ = {negation}: 열 후보 수 {[len(candidates[y]) for y in columns]}"
            )
            if self._fill_columns(columns, candidates):
                return

    def _fill_columns(self, columns: Sequence[int], candidates) -> bool:
        poset = self.poset
        size, top = poset.size, poset.top
        mult = np.full((size, size), -1, dtype=np.int64)
        res = np.full((size, size), -1, dtype=np.int64)
        mult[:, top] = np.arange(size)
        res[:, top] = np.arange(size)
        mult[top, :] = np.arange(size)
        res[top, :] = top
        prunable = self.laws.prunable

        def descend(depth: int) -> bool:
            self._tick()
            if depth == len(columns):
                return self._complete_groupoid(mult, res)
            y = columns[depth]
            for image, quotient in candidates[y]:
                mult[:, y] = image
                res[:, y] = quotient
                if depth + 1 < len(columns) and prunable:
                    signature = self._signature(mult, res, complete=False)
                    if any(formula_status(formula, signature) == 0 for formula in prunable):
                        self.outcome.pruned += 1
                        continue
                if descend(depth + 1):
                    return True
            mult[:, y] = -1
            res[:, y] = -1
            res[top, y] = top
            mult[top, y] = y
            return False

        return descend(0)

    def _complete_groupoid(self, mult: np.ndarray, res: np.ndarray) -> bool:
        signature = self._signature(mult, res, complete=True)
        if not _accepts(self.laws, signature):
            return False
        model = LeftResiduatedGroupoid(self.poset, freeze_table(mult), freeze_table(res))
        return self._emit(model)

    def _brute_force_groupoids(self) -> None:
        """가지치기 없이 1 을 항등원으로 하는 모든 곱셈표를 훑습니다."""
        poset = self.poset
        size, top = poset.size, poset.top
        leq = np.asarray(poset.leq)
        free = [(x, y) for x in range(size) for y in range(size) if top not in (x, y)]
        rows = np.array([cell[0] for cell in free], dtype=np.int64)
        cols = np.array([cell[1] for cell in free], dtype=np.int64)
        powers = size ** np.arange(len(free), dtype=np.int64)
        total = size ** len(free)
        elements = np.arange(size)

        for start in range(0, total, BRUTE_FORCE_CHUNK_SIZE):
            self._tick()
            codes = np.arange(start, min(start + BRUTE_FORCE_CHUNK_SIZE, total), dtype=np.int64)
            mult = np.empty((codes.size, size, size), dtype=np.int64)
            mult[:, top, :] = elements
            mult[:, :, top] = elements
            mult[:, rows, cols] = (codes[:, None] // powers[None, :]) % size
            # members[b, z, y, x]: x·y <= z
            members = leq[mult.transpose(0, 2, 1)[:, None, :, :], elements[None, :, None, None]]
            quotient, principal = _principal_maxima(leq, members)
            for index in np.flatnonzero(principal.all(axis=(1, 2))):
                signature = self._signature(mult[index], quotient[index], complete=True)
                if not _accepts(self.laws, signature):
                    continue
                model = LeftResiduatedGroupoid(
                    poset, freeze_table(mult[index]), freeze_table(quotient[index])
                )
                if self._emit(model):
                    return

    # basic -----------------------------------------------------------------

    def _search_basic(self) -> None:
        """격자의 모든 필터 위 반순서 involution 족에서 basic algebra 를 만듭니다."""
        poset, lattice = self.poset, self.lattice
        size = poset.size
        sections = [poset.up_set(a) for a in range(size)]
        choices = []
        for section in sections:
            options = list(iter_section_antitone_involutions(poset, section))
            if not options:
                return
            choices.append(options)

        for family_images in product(*choices):
            self._tick()
            maps = np.full((size, size), -1, dtype=np.int64)
            for a, (section, images) in enumerate(zip(sections, family_images)):
                maps[a, list(section)] = images
            family = SectionInvolutionFamily(lattice, "filters", freeze_table(maps))
            try:
                algebra = basic_from_filter_involutions(family)
            except StructureError as error:
                logger.debug(f"involution 족이 basic algebra 를 만들지 않습니다: {error}")
                self.outcome.pruned += 1
                continue
            if _accepts(self.laws, algebra) and self._emit(algebra):
                return

    def _brute_force_basic(self) -> None:
        """
        ¬ 는 bottom ↔ top 인 involution, ⊕ 는 x⊕0 = x 와 1 의 행/열만 고정하고
        나머지 칸을 모두 훑습니다. 유도 순서가 이 순서집합과 같은 것만 남깁니다.
        """
        poset = self.poset
        size, bottom, top = poset.size, poset.bottom, poset.top
        elements = np.arange(size)
        free = [
            (x, y) for x in range(size) for y in range(size)
            if x != top and y not in (bottom, top)
        ]
        rows = np.array([cell[0] for cell in free], dtype=np.int64)
        cols = np.array([cell[1] for cell in free], dtype=np.int64)
        powers = size ** np.arange(len(free), dtype=np.int64)
        total = size ** len(free)

        for negation_images in _involutions_swapping_bounds(poset):
            negation = np.array(negation_images, dtype=np.int64)
            for start in range(0, total, BRUTE_FORCE_CHUNK_SIZE):
                self._tick()
                codes = np.arange(start, min(start + BRUTE_FORCE_CHUNK_SIZE, total), dtype=np.int64)
                oplus = np.empty((codes.size, size, size), dtype=np.int64)
                oplus[:, :, bottom] = elements
                oplus[:, top, :] = top
                oplus[:, :, top] = top
                oplus[:, rows, cols] = (codes[:, None] // powers[None, :]) % size
                accepted = _batched_basic_axioms(oplus, negation, bottom)
                induced = oplus[:, negation, :] == top
                accepted &= (induced == np.asarray(poset.leq)).all(axis=(1, 2))
                for index in np.flatnonzero(accepted):
                    algebra = BasicAlgebraModel(freeze_table(oplus[index]), freeze_table(negation), bottom)
                    if _accepts(self.laws, algebra) and self._emit(algebra):
                        return


def _batched_basic_axioms(oplus: np.ndarray, negation: np.ndarray, zero: int) -> np.ndarray:
    """⊕ 표 묶음 각각이 공리 (1)–(4) 를 만족하는지 (¬ 는 공통)"""
    count, size = oplus.shape[0], oplus.shape[1]
    elements = np.arange(size)
    one = negation[zero]
    holds = (oplus[:, :, zero] == elements).all(axis=1)
    holds &= bool((negation[negation] == elements).all())

    batch = np.arange(count)[:, None, None]
    x, y = elements[None, :, None], elements[None, None, :]
    left = oplus[batch, negation[oplus[batch, negation[x], y]], y]
    holds &= (left == left.transpose(0, 2, 1)).all(axis=(1, 2))

    batch = np.arange(count)[:, None, None, None]
    x = elements[None, :, None, None]
    y = elements[None, None, :, None]
    z = elements[None, None, None, :]
    inner = oplus[batch, negation[oplus[batch, x, y]], y]
    outer = oplus[batch, negation[inner], z]
    value = oplus[batch, negation[outer], oplus[batch, x, z]]
    holds &= (value == one).all(axis=(1, 2, 3))
    return holds


def _search_one_poset(spec: SearchSpec, poset: FinitePoset, deadline: float, limit: Optional[int]) -> _PosetOutcome:
    laws = _LawSet.of(spec)
    return _PosetSearch(spec, laws, poset, deadline, limit).run()


# ---------------------------------------------------------------------------
# 공개 API
# ---------------------------------------------------------------------------


def _verify_emitted(spec: SearchSpec, laws: _LawSet, model) -> None:
    """탐색 중의 가지치기를 믿지 않고 방출된 모델을 다시 검증합니다."""
    if isinstance(model, LeftResiduatedGroupoid):
        validate_lrpg(model.poset, model.mult, model.res)
    else:
        validate_basic_algebra(model.oplus, model.neg, model.zero)
        failed = [name for name, ok in mv_cross_check(model).items() if not ok]
        if failed:
            logger.error(f"basic algebra 교차 검사 실패 {failed}: 탐색기 버그일 가능성이 큽니다")
    if not _accepts(laws, model):
        logger.critical(f"방출된 모델이 법칙 조건을 만족하지 않습니다: {spec.require} / {spec.forbid}")
        raise StructureError("search emitted a model that fails its law constraints")


def _run_sequential(spec: SearchSpec, posets: List[FinitePoset], deadline: float):
    outcomes = []
    found = 0
    for index, poset in enumerate(posets):
        remaining = None if spec.max_models is None else spec.max_models - found
        outcome = _search_one_poset(spec, poset, deadline, remaining)
        logger.debug(f"순서집합 {index + 1}/{len(posets)}: 모델 {len(outcome.models)}개")
        outcomes.append(outcome)
        found += len(outcome.models)
        if outcome.timed_out or outcome.limit_reached:
            break
    return outcomes


def _run_parallel(spec: SearchSpec, posets: List[FinitePoset], deadline: float):
    with ProcessPoolExecutor(max_workers=spec.jobs) as executor:
        futures = [
            executor.submit(_search_one_poset, spec, poset, deadline, spec.max_models)
            for poset in posets
        ]
        return [future.result() for future in futures]


def search_models(spec: SearchSpec) -> SearchResult:
    """
    조건에 맞는 모델을 동형류마다 하나씩 찾습니다.

    결과의 모델 순서는 (순서집합 순서, 깊이 우선 순서) 이며 작업자 수와 무관합니다.

    Raises:
        SizeOutOfRange: 지원하지 않는 크기
        UnknownLaw: 카탈로그에 없는 법칙 이름
        TimeBudgetExceeded: 시간 예산 초과 (partial_result 에 그때까지의 결과)
    """
    laws = _validate_spec(spec)
    started = time.monotonic()
    deadline = time.time() + spec.time_budget_seconds
    posets = list(_candidate_posets(spec, laws))
    logger.info(
        f"탐색 시작: 크기 {spec.size}, {spec.model_class}, 순서집합 {len(posets)}개, "
        f"필수 {list(spec.require)}, 금지 {list(spec.forbid)}"
    )

    if spec.jobs > 1 and len(posets) > 1:
        outcomes = _run_parallel(spec, posets, deadline)
    else:
        outcomes = _run_sequential(spec, posets, deadline)

    models, forms = [], []
    for outcome in outcomes:
        for form, model in outcome.models:
            if form in forms:
                continue
            models.append(model)
            forms.append(form)
    limit_reached = any(outcome.limit_reached for outcome in outcomes)
    if spec.max_models is not None and len(models) >= spec.max_models:
        models, forms = models[: spec.max_models], forms[: spec.max_models]
        limit_reached = True

    for model in models:
        _verify_emitted(spec, laws, model)

    timed_out = any(outcome.timed_out for outcome in outcomes)
    result = SearchResult(
        spec=spec,
        models=tuple(models),
        canonical_forms=tuple(forms),
        posets_tried=len(outcomes),
        partial_tables_pruned=sum(outcome.pruned for outcome in outcomes),
        exhausted=not (timed_out or limit_reached),
        elapsed_seconds=time.monotonic() - started,
        budget_exceeded=timed_out,
    )
    logger.info(f"탐색 완료: 모델 {result.models_emitted}개, {result.elapsed_seconds:.2f}초")
    if timed_out:
        logger.warning(f"시간 예산 {spec.time_budget_seconds}초를 넘었습니다. 결과는 부분적입니다")
        raise TimeBudgetExceeded(spec.time_budget_seconds, result)
    return result


def mv_cross_check(algebra: BasicAlgebraModel) -> Dict[str, bool]:
    """
    유한 basic algebra 에 대해 알려진 함의들을 확인합니다.

    단조 → MV, 결합 → 가환, 증가(x <= x⊕y) → MV. 하나라도 False 면 버그입니다.
    """
    commutative = check_law("comm_oplus", algebra).holds
    associative = check_law("assoc_oplus", algebra).holds
    is_mv = commutative and associative
    return {
        "monotone_implies_mv": is_mv or not check_law("monotone", algebra).holds,
        "associative_implies_commutative": commutative or not associative,
        "increasing_implies_mv": is_mv or not check_law("increasing", algebra).holds,
    }


# ---------------------------------------------------------------------------
# 탐색 조건 파일과 결과 저장
# ---------------------------------------------------------------------------


def _split_names(value: str) -> Tuple[str, ...]:
    return tuple(name.strip() for name in value.split(",") if name.strip())


def _parse_flag(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: '{value}'")


def load_search_spec(spec_file_path: Path) -> SearchSpec:
    """
    key=value 형식의 탐색 조건 파일을 읽습니다.

    키: size, class, require, forbid, poset, limit, budget, jobs, debug.
    poset 경로는 조건 파일 기준의 상대 경로로 해석합니다.

    Raises:
        ModelFileParseError: 알 수 없는 키나 잘못된 값
    """
    spec_file_path = Path(spec_file_path)
    values: Dict[str, object] = {}
    with spec_file_path.open("r", encoding="utf-8") as spec_file:
        for line_number, raw_line in enumerate(spec_file, start=1):
            line = raw_line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ModelFileParseError(line_number, "expected 'key = value'")
            key, value = (part.strip() for part in line.split("=", 1))
            try:
                if key == "size":
                    values["size"] = int(value)
                elif key == "class":
                    values["model_class"] = value
                elif key in ("require", "forbid"):
                    values[key] = _split_names(value)
                elif key == "poset":
                    values["poset"] = load_poset(spec_file_path.parent / value)
                elif key == "limit":
                    values["max_models"] = int(value)
                elif key == "budget":
                    values["time_budget_seconds"] = float(value)
                elif key == "jobs":
                    values["jobs"] = int(value)
                elif key == "debug":
                    values["debug"] = _parse_flag(value)
                else:
                    raise ModelFileParseError(line_number, f"unknown key '{key}'")
            except ValueError as error:
                if isinstance(error, StructureError):
                    raise
                raise ModelFileParseError(line_number, str(error)) from error

    if "size" not in values:
        if "poset" not in values:
            raise ModelFileParseError(0, "missing 'size'")
        values["size"] = values["poset"].size
    logger.debug(f"탐색 조건 파일을 읽었습니다: {spec_file_path}")
    return SearchSpec(**values)


def search_summary_frame(result: SearchResult) -> pd.DataFrame:
    """탐색 결과 요약 한 줄짜리 DataFrame"""
    spec = result.spec
    return pd.DataFrame(
        [
            {
                "size": spec.size,
                "class": spec.model_class,
                "mode": spec.mode,
                "require": ",".join(spec.require),
                "forbid": ",".join(spec.forbid),
                "posets_tried": result.posets_tried,
                "partial_tables_pruned": result.partial_tables_pruned,
                "models_emitted": result.models_emitted,
                "exhausted": result.exhausted,
                "elapsed_seconds": round(result.elapsed_seconds, 3),
            }
        ]
    )


def write_search_results(result: SearchResult, output_directory: Path) -> List[Path]:
    """
    모델마다 파일 하나와 summary.csv, models.csv 를 저장합니다.

    Returns:
        저장된 모델 파일 경로 목록
    """
    output_directory = Path(output_directory)
    output_directory.mkdir(parents=True, exist_ok=True)
    written = []
    index_rows = []
    for number, (model, form) in enumerate(zip(result.models, result.canonical_forms), start=1):
        model_file_path = output_directory / f"model_{number:03d}.{model.model_class}"
        dump_model(model, model_file_path)
        written.append(model_file_path)
        index_rows.append(
            {"file": model_file_path.name, "size": model.size, "canonical_form": form.hex()}
        )

    search_summary_frame(result).to_csv(output_directory / SEARCH_SUMMARY_FILE_NAME, index=False)
    pd.DataFrame(index_rows, columns=["file", "size", "canonical_form"]).to_csv(
        output_directory / SEARCH_MODEL_INDEX_FILE_NAME, index=False
    )
    logger.info(f"모델 {len(written)}개를 {output_directory} 에 저장했습니다")
    return written


def with_overrides(spec: SearchSpec, **changes) -> SearchSpec:
    """None 이 아닌 값만 덮어쓴 새 탐색 조건"""
    return replace(spec, **{key: value for key, value in changes.items() if value is not None})
