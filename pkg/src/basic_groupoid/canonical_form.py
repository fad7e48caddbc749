"""
유한 모델의 정규형(canonical form)과 동형 판정을 담당하는 모듈입니다.

정규형은 bottom 과 top 을 고정하는 모든 원소 재배치 중에서
(관계표, 연산표들) 을 이어 붙인 바이트열의 사전식 최솟값입니다.
관계표가 맨 앞이므로 먼저 관계표를 최소로 만드는 재배치들만 남기고
그 안에서 연산표를 비교합니다.
"""

import logging
from functools import lru_cache
from itertools import permutations
from typing import List, Sequence, Tuple

import numpy as np

from .data_models import (
    BasicAlgebraModel,
    BoundedLattice,
    ContrapositionalGroupoid,
    FinitePoset,
    LeftResiduatedGroupoid,
    OrthoLattice,
    SectionInvolutionFamily,
    freeze_table,
)
from .errors import ClassMismatch, StructureError

# 로깅 설정
logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def interior_permutations(size: int) -> np.ndarray:
    """0 과 size-1 을 고정하는 모든 순열 (각 행: 새 인덱스 → 옛 인덱스)"""
    interior = range(1, size - 1)
    rows = [(0,) + order + (size - 1,) for order in permutations(interior)]
    table = np.array(rows, dtype=np.int64).reshape(len(rows), size)
    table.setflags(write=False)
    return table


def lexicographic_minimum_rows(rows: np.ndarray) -> np.ndarray:
    """사전식으로 가장 작은 행들의 인덱스 (동률이면 모두)"""
    candidates = np.arange(rows.shape[0])
    for column in range(rows.shape[1]):
        values = rows[candidates, column]
        candidates = candidates[values == values.min()]
        if candidates.size == 1:
            break
    return candidates


def _endpoint_fixing_permutations(size: int, bottom: int, top: int) -> np.ndarray:
    """bottom → 0, top → size-1 로 보내는 모든 순열 (새 → 옛)"""
    if size == 1:
        return np.zeros((1, 1), dtype=np.int64)
    others = [element for element in range(size) if element not in (bottom, top)]
    base = np.array([bottom] + others + [top], dtype=np.int64)
    return base[interior_permutations(size)]


def _relabel_relation(leq: np.ndarray, new_to_old: np.ndarray) -> np.ndarray:
    return leq[new_to_old[:, :, None], new_to_old[:, None, :]]


def _relabel_values(values: np.ndarray, old_to_new: np.ndarray) -> np.ndarray:
    """배치된 값들에 원소 이름 바꾸기를 적용합니다 (-1 은 유지)"""
    count = values.shape[0]
    flat = values.reshape(count, -1)
    mapped = np.take_along_axis(old_to_new, np.maximum(flat, 0), axis=1)
    return np.where(flat < 0, -1, mapped).reshape(values.shape)


@lru_cache(maxsize=4096)
def _relation_minimizers(leq_bytes: bytes, size: int, bottom: int, top: int) -> Tuple[bytes, np.ndarray]:
    leq = np.frombuffer(leq_bytes, dtype=bool).reshape(size, size)
    new_to_old = _endpoint_fixing_permutations(size, bottom, top)
    rows = _relabel_relation(leq, new_to_old).reshape(len(new_to_old), -1).astype(np.uint8)
    best = lexicographic_minimum_rows(rows)
    return rows[best[0]].tobytes(), new_to_old[best]


def _model_parts(model) -> Tuple[bytes, FinitePoset, List[np.ndarray], List[np.ndarray], List[np.ndarray]]:
    """(머리말, 순서, 이항 표들, 단항 표들, section 표들)"""
    if isinstance(model, FinitePoset):
        return b"poset", model, [], [], []
    if isinstance(model, BoundedLattice):
        return b"lattice", model.poset, [], [], []
    if isinstance(model, OrthoLattice):
        return b"ortho", model.lattice.poset, [], [np.asarray(model.perp)], []
    if isinstance(model, SectionInvolutionFamily):
        header = f"involutions-{model.kind}".encode()
        return header, model.lattice.poset, [], [], [np.asarray(model.maps)]
    if isinstance(model, BasicAlgebraModel):
        oplus, negation = np.asarray(model.oplus), np.asarray(model.neg)
        leq = oplus[negation, :] == model.one
        poset = FinitePoset(freeze_table(leq, dtype=bool), model.zero, model.one)
        return b"basic", poset, [oplus], [negation], []
    if isinstance(model, LeftResiduatedGroupoid):
        return b"lrpg", model.poset, [np.asarray(model.mult), np.asarray(model.res)], [], []
    if isinstance(model, ContrapositionalGroupoid):
        return b"cpg", model.poset, [np.asarray(model.mult), np.asarray(model.imp)], [], []
    raise StructureError(f"no canonical form for {type(model).__name__}")


def _best_relabeling(model) -> Tuple[bytes, np.ndarray]:
    header, poset, binary, unary, sectional = _model_parts(model)
    leq = np.ascontiguousarray(poset.leq, dtype=bool)
    relation_bytes, new_to_old = _relation_minimizers(
        leq.tobytes(), poset.size, poset.bottom, poset.top
    )
    old_to_new = np.argsort(new_to_old, axis=1)
    blocks = []
    for table in binary + sectional:
        arranged = _relabel_relation(table, new_to_old)
        blocks.append(_relabel_values(arranged, old_to_new).reshape(len(new_to_old), -1))
    for table in unary:
        arranged = table[new_to_old]
        blocks.append(_relabel_values(arranged, old_to_new))
    if blocks:
        rows = (np.concatenate(blocks, axis=1) + 1).astype(np.uint8)
        best = int(lexicographic_minimum_rows(rows)[0])
        operation_bytes = rows[best].tobytes()
    else:
        best, operation_bytes = 0, b""
    prefix = header + f":{poset.size}:".encode()
    return prefix + relation_bytes + operation_bytes, new_to_old[best]


def canonical_form(model) -> bytes:
    """
    모델의 정규형 바이트열을 반환합니다.

    같은 종류, 같은 크기의 두 모델은 동형일 때에만 정규형이 같습니다.
    """
    return _best_relabeling(model)[0]


def canonical_relabeling(model) -> np.ndarray:
    """정규형을 만드는 재배치 (옛 인덱스 → 새 인덱스)"""
    return np.argsort(_best_relabeling(model)[1])


def is_isomorphic(left, right) -> bool:
    """
    두 모델이 동형인지 정규형으로 판정합니다.

    Raises:
        ClassMismatch: 종류나 크기가 다른 모델
    """
    if left.model_class != right.model_class or left.size != right.size:
        raise ClassMismatch(
            f"{left.model_class}/{left.size}", f"{right.model_class}/{right.size}"
        )
    return canonical_form(left) == canonical_form(right)


def _relabel_binary(table, old_to_new: np.ndarray, new_to_old: np.ndarray) -> np.ndarray:
    arranged = np.asarray(table)[np.ix_(new_to_old, new_to_old)]
    return freeze_table(np.where(arranged < 0, -1, old_to_new[np.maximum(arranged, 0)]))


def relabel_model(model, old_to_new: Sequence[int]):
    """
    원소 이름을 old_to_new 로 바꾼 같은 종류의 모델을 만듭니다.
    """
    old_to_new = np.asarray(old_to_new, dtype=np.int64)
    new_to_old = np.argsort(old_to_new)
    if isinstance(model, FinitePoset):
        leq = np.asarray(model.leq)[np.ix_(new_to_old, new_to_old)]
        return FinitePoset(
            freeze_table(leq, dtype=bool), int(old_to_new[model.bottom]), int(old_to_new[model.top])
        )
    if isinstance(model, BoundedLattice):
        return BoundedLattice(
            relabel_model(model.poset, old_to_new),
            _relabel_binary(model.meet, old_to_new, new_to_old),
            _relabel_binary(model.join, old_to_new, new_to_old),
        )
    if isinstance(model, OrthoLattice):
        perp = old_to_new[np.asarray(model.perp)[new_to_old]]
        return OrthoLattice(relabel_model(model.lattice, old_to_new), freeze_table(perp))
    if isinstance(model, SectionInvolutionFamily):
        return SectionInvolutionFamily(
            relabel_model(model.lattice, old_to_new),
            model.kind,
            _relabel_binary(model.maps, old_to_new, new_to_old),
        )
    if isinstance(model, BasicAlgebraModel):
        negation = old_to_new[np.asarray(model.neg)[new_to_old]]
        return BasicAlgebraModel(
            _relabel_binary(model.oplus, old_to_new, new_to_old),
            freeze_table(negation),
            int(old_to_new[model.zero]),
        )
    if isinstance(model, LeftResiduatedGroupoid):
        return LeftResiduatedGroupoid(
            relabel_model(model.poset, old_to_new),
            _relabel_binary(model.mult, old_to_new, new_to_old),
            _relabel_binary(model.res, old_to_new, new_to_old),
        )
    if isinstance(model, ContrapositionalGroupoid):
        return ContrapositionalGroupoid(
            relabel_model(model.poset, old_to_new),
            _relabel_binary(model.mult, old_to_new, new_to_old),
            _relabel_binary(model.imp, old_to_new, new_to_old),
        )
    raise StructureError(f"cannot relabel {type(model).__name__}")


def canonical_representative(model):
    """정규형 재배치를 적용한 대표 모델"""
    return relabel_model(model, canonical_relabeling(model))
