"""
basic-groupoid 프로젝트의 데이터 모델을 정의하는 모듈입니다.

원소는 0..n-1 의 정수 인덱스이고, 모든 순서 관계와 연산표는
읽기 전용 numpy 배열로 저장됩니다.
"""

from dataclasses import dataclass, field, fields
from typing import ClassVar, Dict, Optional, Tuple

import numpy as np

from .configuration import (
    DEFAULT_SEARCH_TIME_BUDGET_SECONDS,
    DEFAULT_SEARCH_WORKER_COUNT,
)


def freeze_table(values, dtype=np.int64) -> np.ndarray:
    """연산표를 복사해서 읽기 전용 numpy 배열로 만듭니다."""
    table = np.array(values, dtype=dtype)
    table.setflags(write=False)
    return table


class TableBackedModel:
    """numpy 연산표 필드를 값으로 비교하는 모델들의 공통 기반"""

    model_class: ClassVar[str] = ""

    def _comparable_values(self) -> tuple:
        return tuple(getattr(self, item.name) for item in fields(self))

    def __eq__(self, other) -> bool:
        if type(self) is not type(other):
            return NotImplemented
        for mine, theirs in zip(self._comparable_values(), other._comparable_values()):
            if isinstance(mine, np.ndarray):
                if mine.shape != theirs.shape or not np.array_equal(mine, theirs):
                    return False
            elif mine != theirs:
                return False
        return True

    def __setstate__(self, state: dict) -> None:
        # 작업자 프로세스에서 돌아온 표도 읽기 전용
        for value in state.values():
            if isinstance(value, np.ndarray):
                value.setflags(write=False)
        self.__dict__.update(state)

    def __hash__(self) -> int:
        parts = []
        for value in self._comparable_values():
            if isinstance(value, np.ndarray):
                parts.append((value.shape, value.tobytes()))
            else:
                parts.append(value)
        return hash((type(self).__name__, tuple(parts)))


@dataclass(frozen=True, eq=False)
class FinitePoset(TableBackedModel):
    """유계 유한 순서집합 (n×n 관계표 전체를 저장)"""

    leq: np.ndarray  # leq[x, y] 가 True 이면 x <= y
    bottom: int
    top: int

    model_class: ClassVar[str] = "poset"

    @property
    def size(self) -> int:
        return int(self.leq.shape[0])

    def le(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y])

    def down_set(self, x: int) -> Tuple[int, ...]:
        """주 아이디얼 (x] 의 원소들 (오름차순 인덱스)"""
        return tuple(int(u) for u in np.flatnonzero(self.leq[:, x]))

    def up_set(self, x: int) -> Tuple[int, ...]:
        """주 필터 [x) 의 원소들 (오름차순 인덱스)"""
        return tuple(int(u) for u in np.flatnonzero(self.leq[x, :]))


@dataclass(frozen=True, eq=False)
class BoundedLattice(TableBackedModel):
    """meet/join 표를 함께 가진 유계 격자"""

    poset: FinitePoset
    meet: np.ndarray
    join: np.ndarray

    model_class: ClassVar[str] = "lattice"

    @property
    def size(self) -> int:
        return self.poset.size

    @property
    def leq(self) -> np.ndarray:
        return self.poset.leq


@dataclass(frozen=True, eq=False)
class SectionInvolutionFamily(TableBackedModel):
    """주 필터 [a) 또는 주 아이디얼 (a] 위의 반순서 involution 족

    maps[a, x] 는 x 가 a 의 section 에 있을 때의 상이고, section 밖은 -1 입니다.
    """

    lattice: BoundedLattice
    kind: str  # "filters" 또는 "ideals"
    maps: np.ndarray

    model_class: ClassVar[str] = "involutions"

    @property
    def size(self) -> int:
        return self.lattice.size

    @property
    def file_section_name(self) -> str:
        return "gamma" if self.kind == "filters" else "delta"

    def section(self, a: int) -> Tuple[int, ...]:
        if self.kind == "filters":
            return self.lattice.poset.up_set(a)
        return self.lattice.poset.down_set(a)


@dataclass(frozen=True, eq=False)
class OrthoLattice(TableBackedModel):
    """직교여원(perp)을 가진 유계 격자"""

    lattice: BoundedLattice
    perp: np.ndarray

    model_class: ClassVar[str] = "ortho"

    @property
    def size(self) -> int:
        return self.lattice.size


@dataclass(frozen=True)
class OrthoLatticeReport:
    """validate_ortholattice 의 판정 결과"""

    is_ortholattice: bool
    is_orthomodular: bool
    ortholattice_failure: Optional[str] = None
    ortholattice_witness: Optional[Tuple[int, ...]] = None
    orthomodular_witness: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True, eq=False)
class BasicAlgebraModel(TableBackedModel):
    """(⊕, ¬, 0) 표로 주어진 basic algebra"""

    oplus: np.ndarray
    neg: np.ndarray
    zero: int = 0

    model_class: ClassVar[str] = "basic"

    @property
    def size(self) -> int:
        return int(self.neg.shape[0])

    @property
    def one(self) -> int:
        return int(self.neg[self.zero])


@dataclass(frozen=True, eq=False)
class LeftResiduatedGroupoid(TableBackedModel):
    """왼쪽 잉여 po-groupoid: 순서, 곱셈(·), 오른쪽 나눗셈(/)

    res[z, y] 는 z/y 입니다.
    """

    poset: FinitePoset
    mult: np.ndarray
    res: np.ndarray

    model_class: ClassVar[str] = "lrpg"

    @property
    def size(self) -> int:
        return self.poset.size

    @property
    def zero(self) -> int:
        return self.poset.bottom

    @property
    def one(self) -> int:
        return self.poset.top

    @property
    def negation(self) -> np.ndarray:
        """¬x = 0/x"""
        return self.res[self.zero, :]


@dataclass(frozen=True, eq=False)
class ContrapositionalGroupoid(TableBackedModel):
    """contrapositionally residuated po-groupoid: 순서, 곱셈(·), 함의(→)"""

    poset: FinitePoset
    mult: np.ndarray
    imp: np.ndarray

    model_class: ClassVar[str] = "cpg"

    @property
    def size(self) -> int:
        return self.poset.size

    @property
    def tilde(self) -> np.ndarray:
        """~x = x → 0"""
        return self.imp[:, self.poset.bottom]


@dataclass(frozen=True)
class Verdict:
    """법칙 검사 결과: 성립 여부와 사전식 첫 번째 반례"""

    holds: bool
    witness: Optional[Dict[str, int]] = None

    def __str__(self) -> str:
        if self.holds:
            return "holds"
        assignment = ", ".join(f"{name}={value}" for name, value in self.witness.items())
        return f"fails at {assignment}"


@dataclass(frozen=True)
class RightResiduumResult:
    """x\\z 탐색 결과: 최댓값 또는 극대원소 반사슬"""

    value: Optional[int]
    maximal_elements: Tuple[int, ...]

    @property
    def exists(self) -> bool:
        return self.value is not None


@dataclass(frozen=True)
class LemmaRuleReport:
    """잉여 법칙의 기본 결과 규칙 (a)–(i) 의 규칙별 판정"""

    verdicts: Dict[str, Verdict]

    @property
    def all_hold(self) -> bool:
        return all(verdict.holds for verdict in self.verdicts.values())

    def failing_rules(self) -> Tuple[str, ...]:
        return tuple(rule for rule, verdict in self.verdicts.items() if not verdict.holds)


@dataclass(frozen=True)
class RoundTripReport:
    """구조 왕복 변환 결과 보고서"""

    source_class: str
    law_verdicts: Dict[str, Verdict]
    divisibility_hypotheses: bool  # div ∧ jk
    involution_hypotheses: bool  # dneg ∧ w
    basic_roundtrip_identical: Optional[bool] = None  # A(G(A)) = A
    groupoid_roundtrip_identical: Optional[bool] = None  # G(A(G)) = G
    order_coincides: Optional[bool] = None
    contrapositional_roundtrip_identical: Optional[bool] = None

    @property
    def all_identical(self) -> bool:
        flags = (
            self.basic_roundtrip_identical,
            self.groupoid_roundtrip_identical,
            self.order_coincides,
            self.contrapositional_roundtrip_identical,
        )
        return all(flag is not False for flag in flags)

    def __str__(self) -> str:
        def describe(flag: Optional[bool]) -> str:
            return "n/a" if flag is None else ("identical" if flag else "DIFFERENT")

        lines = [f"source class        : {self.source_class}"]
        for law, verdict in self.law_verdicts.items():
            lines.append(f"law {law:<16}: {verdict}")
        lines += [
            f"div and jk          : {'holds' if self.divisibility_hypotheses else 'fails'}",
            f"dneg and w          : {'holds' if self.involution_hypotheses else 'fails'}",
            f"A(G(A)) = A         : {describe(self.basic_roundtrip_identical)}",
            f"G(A(G)) = G         : {describe(self.groupoid_roundtrip_identical)}",
            f"induced order       : {describe(self.order_coincides)}",
            f"lrpg <-> cpg        : {describe(self.contrapositional_roundtrip_identical)}",
        ]
        return "\n".join(lines)


@dataclass(frozen=True)
class SearchSpec:
    """모델 탐색 조건"""

    size: int
    model_class: str = "lrpg"
    require: Tuple[str, ...] = ()
    forbid: Tuple[str, ...] = ()
    poset: Optional[FinitePoset] = None  # 주어지면 fixed-poset 모드
    max_models: Optional[int] = None
    time_budget_seconds: float = DEFAULT_SEARCH_TIME_BUDGET_SECONDS
    jobs: int = DEFAULT_SEARCH_WORKER_COUNT
    debug: bool = False  # 가지치기 없는 전수 대입

    @property
    def mode(self) -> str:
        return "fixed-poset" if self.poset is not None else "enumerate-posets"


@dataclass(frozen=True)
class SearchResult:
    """모델 탐색 결과 (동형 사본은 제거됨)"""

    spec: SearchSpec
    models: Tuple[TableBackedModel, ...]
    canonical_forms: Tuple[bytes, ...]
    posets_tried: int
    partial_tables_pruned: int
    exhausted: bool
    elapsed_seconds: float = 0.0
    budget_exceeded: bool = False

    @property
    def models_emitted(self) -> int:
        return len(self.models)

    def __str__(self) -> str:
        return (
            f"size={self.spec.size} class={self.spec.model_class} "
            f"require={','.join(self.spec.require) or '-'} "
            f"forbid={','.join(self.spec.forbid) or '-'}\n"
            f"posets tried         : {self.posets_tried}\n"
            f"partial tables pruned: {self.partial_tables_pruned}\n"
            f"models emitted       : {self.models_emitted}\n"
            f"exhausted            : {self.exhausted}\n"
            f"elapsed              : {self.elapsed_seconds:.2f}s"
        )


@dataclass(frozen=True)
class ContinuumResiduumWitness:
    """연속체 예제에서 x\\y 가 존재하지 않음을 보이는 증명서"""

    x: float
    y: float  # 1 - ¬x
    negation_of_x: float
    product_at_one: float  # x·1 = x
    sampled_points: int
    largest_sampled_product: float  # z < 1 에서 x·z 의 최댓값
    excludes_one: bool  # x·1 > y
    bounds_all_samples: bool  # 모든 z < 1 에서 x·z <= y (허용오차 안)

    @property
    def is_valid(self) -> bool:
        return self.excludes_one and self.bounds_all_samples

    def __str__(self) -> str:
        return (
            f"x                 : {self.x:.6f}\n"
            f"¬x                : {self.negation_of_x:.6f}\n"
            f"y = 1 - ¬x        : {self.y:.6f}\n"
            f"x·1               : {self.product_at_one:.6f} (> y: {self.excludes_one})\n"
            f"max x·z over z<1  : {self.largest_sampled_product:.6f} "
            f"(<= y: {self.bounds_all_samples}, {self.sampled_points} samples)\n"
            f"certificate       : {'valid' if self.is_valid else 'INVALID'}"
        )


@dataclass(frozen=True)
class MonotoneGridReport:
    """격자점 위에서의 왼쪽 단조성(z·x <= z·y) 검사 결과"""

    grid_points: int
    triples_checked: int
    max_violation: float
    violations_above_tolerance: int
    tolerance: float
    worst_triple: Optional[Tuple[float, float, float]] = field(default=None)

    @property
    def holds(self) -> bool:
        return self.violations_above_tolerance == 0

    def __str__(self) -> str:
        return (
            f"grid points        : {self.grid_points}\n"
            f"triples checked    : {self.triples_checked}\n"
            f"max violation      : {self.max_violation:.3e}\n"
            f"violations > {self.tolerance:.0e}: {self.violations_above_tolerance}"
        )
