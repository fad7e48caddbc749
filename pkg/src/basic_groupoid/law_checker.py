"""
유한 모델 위에서 법칙 수식을 전수 평가하는 모듈입니다.

모든 변수 대입을 numpy 격자 하나로 만들어 한 번에 평가하며,
정의되지 않은 표 칸(-1)은 3치 논리의 '모름'으로 전파됩니다.
부분적으로 채워진 표에 대한 가지치기 판단도 같은 평가기를 씁니다.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, Mapping, Optional, Tuple

import numpy as np

from .configuration import LAW_CATALOG_FILE
from .data_models import (
    BasicAlgebraModel,
    BoundedLattice,
    ContrapositionalGroupoid,
    FinitePoset,
    LeftResiduatedGroupoid,
    OrthoLattice,
    Verdict,
)
from .errors import SignatureMismatch, StructureError, UnknownLaw
from .law_parser import (
    BinaryOperation,
    Connective,
    Constant,
    Formula,
    Relation,
    UnaryOperation,
    Variable,
    parse_law_file,
)
from .order_structures import greatest_in_sets, try_meets_joins

# 로깅 설정
logger = logging.getLogger(__name__)

UNKNOWN = -1


@dataclass(frozen=True, eq=False)
class ModelSignature:
    """평가에 쓰이는 연산표 모음 (-1 은 아직 정해지지 않은 칸)"""

    model_class: str
    size: int
    leq: np.ndarray
    zero: int
    one: int
    tables: Mapping[str, np.ndarray]


def _lookup(table: np.ndarray, *indices):
    """표 조회; 인덱스나 표 값이 -1 이면 결과도 -1"""
    undefined = np.zeros(np.broadcast(*indices).shape, dtype=bool)
    for index in indices:
        undefined = undefined | (np.asarray(index) < 0)
    values = table[tuple(np.maximum(index, 0) for index in indices)]
    return np.where(undefined, UNKNOWN, values)


def right_residuum_table(leq: np.ndarray, mult: np.ndarray) -> Optional[np.ndarray]:
    """x\\z = max{y : x·y <= z} 표, 하나라도 없으면 None"""
    size = leq.shape[0]
    # members[x, z, y]: x·y <= z
    members = leq[mult[:, None, :], np.arange(size)[None, :, None]]
    values, exists = greatest_in_sets(leq, members)
    if not exists.all():
        return None
    return values


def groupoid_tables(
    poset: FinitePoset,
    mult: np.ndarray,
    res: np.ndarray,
    lattice: Optional[BoundedLattice] = None,
    with_right_residuum: bool = True,
) -> Dict[str, np.ndarray]:
    """(·, /) 로부터 ¬, →, ⊕, ~ 와 (가능하면) ∨, ∧, \\ 를 유도합니다."""
    negation = np.asarray(res)[poset.bottom, :]
    implication = _lookup(res, negation[:, None], negation[None, :])
    tables = {
        "mult": np.asarray(mult),
        "rres": np.asarray(res),
        "neg": negation,
        "imp": implication,
        "oplus": _lookup(negation, _lookup(mult, negation[:, None], negation[None, :])),
        "tilde": implication[:, poset.bottom],
    }
    if lattice is not None:
        tables["join"] = lattice.join
        tables["meet"] = lattice.meet
    if with_right_residuum and (np.asarray(mult) >= 0).all():
        right_residuum = right_residuum_table(np.asarray(poset.leq), np.asarray(mult))
        if right_residuum is not None:
            tables["lres"] = right_residuum
    return tables


def _basic_signature(model: BasicAlgebraModel) -> ModelSignature:
    oplus, negation = np.asarray(model.oplus), np.asarray(model.neg)
    size = model.size
    elements = np.arange(size)
    one = int(negation[model.zero])
    mult = negation[oplus[negation[:, None], negation[None, :]]]
    right_division = oplus[:, negation]
    implication = oplus[negation, :]
    leq = implication == one
    tables = {
        "oplus": oplus,
        "neg": negation,
        "mult": mult,
        "rres": right_division,
        "imp": implication,
        "tilde": implication[:, model.zero],
        "join": implication[implication, elements[None, :]],
        "meet": mult[right_division, elements[None, :]],
    }
    right_residuum = right_residuum_table(leq, mult)
    if right_residuum is not None:
        tables["lres"] = right_residuum
    return ModelSignature("basic", size, leq, model.zero, one, tables)


def _contrapositional_signature(model: ContrapositionalGroupoid) -> ModelSignature:
    poset = model.poset
    tilde = np.asarray(model.tilde)
    right_division = np.asarray(model.imp)[tilde[:, None], tilde[None, :]]
    tables = groupoid_tables(poset, model.mult, right_division, try_meets_joins(poset))
    tables["imp"] = np.asarray(model.imp)
    tables["tilde"] = tilde
    return ModelSignature("cpg", model.size, poset.leq, poset.bottom, poset.top, tables)


def signature_of(model) -> ModelSignature:
    """
    모델 종류에 맞는 평가용 시그니처를 만듭니다.

    Raises:
        SignatureMismatch: 연산이 없는 모델 종류
    """
    if isinstance(model, ModelSignature):
        return model
    return _cached_signature(model)


@lru_cache(maxsize=512)
def _cached_signature(model) -> ModelSignature:
    if isinstance(model, BasicAlgebraModel):
        return _basic_signature(model)
    if isinstance(model, LeftResiduatedGroupoid):
        poset = model.poset
        tables = groupoid_tables(poset, model.mult, model.res, try_meets_joins(poset))
        return ModelSignature("lrpg", model.size, poset.leq, poset.bottom, poset.top, tables)
    if isinstance(model, ContrapositionalGroupoid):
        return _contrapositional_signature(model)
    if isinstance(model, OrthoLattice):
        lattice = model.lattice
        poset = lattice.poset
        tables = {"join": lattice.join, "meet": lattice.meet, "neg": model.perp}
        return ModelSignature("ortho", model.size, poset.leq, poset.bottom, poset.top, tables)
    if isinstance(model, BoundedLattice):
        poset = model.poset
        tables = {"join": model.join, "meet": model.meet}
        return ModelSignature("lattice", model.size, poset.leq, poset.bottom, poset.top, tables)
    raise SignatureMismatch("any", getattr(model, "model_class", type(model).__name__))


def ensure_signature(formula: Formula, signature: ModelSignature) -> None:
    """수식의 모든 연산이 시그니처에 있는지 확인합니다."""
    for operator in sorted(formula.operators):
        if operator == "leq":
            continue
        if operator not in signature.tables:
            raise SignatureMismatch(operator, signature.model_class)


def _evaluate_term(node, signature: ModelSignature, grids: Dict[str, np.ndarray], shape):
    if isinstance(node, Variable):
        return grids[node.name]
    if isinstance(node, Constant):
        value = signature.zero if node.value == 0 else signature.one
        return np.full(shape, value, dtype=np.int64)
    if isinstance(node, UnaryOperation):
        operand = _evaluate_term(node.operand, signature, grids, shape)
        return _lookup(signature.tables[node.operator], operand)
    if isinstance(node, BinaryOperation):
        left = _evaluate_term(node.left, signature, grids, shape)
        right = _evaluate_term(node.right, signature, grids, shape)
        return _lookup(signature.tables[node.operator], left, right)
    raise StructureError(f"unexpected term node {node!r}")


def _evaluate_node(node, signature: ModelSignature, grids, shape) -> np.ndarray:
    """관계/연결사 노드를 1(참), 0(거짓), -1(모름) 배열로 평가합니다."""
    if isinstance(node, Relation):
        left = _evaluate_term(node.left, signature, grids, shape)
        right = _evaluate_term(node.right, signature, grids, shape)
        defined = (left >= 0) & (right >= 0)
        if node.relation == "eq":
            truth = left == right
        else:
            truth = signature.leq[np.maximum(left, 0), np.maximum(right, 0)]
        return np.where(defined, truth.astype(np.int8), np.int8(UNKNOWN))

    operands = [_evaluate_node(item, signature, grids, shape) for item in node.operands]
    if node.connective == "and":
        stacked = np.stack(operands)
        return np.where(
            (stacked == 0).any(axis=0),
            np.int8(0),
            np.where((stacked == 1).all(axis=0), np.int8(1), np.int8(UNKNOWN)),
        )
    premise, conclusion = operands
    if node.connective == "implies":
        return np.where(
            (premise == 0) | (conclusion == 1),
            np.int8(1),
            np.where((premise == 1) & (conclusion == 0), np.int8(0), np.int8(UNKNOWN)),
        )
    known = (premise >= 0) & (conclusion >= 0)
    return np.where(known, (premise == conclusion).astype(np.int8), np.int8(UNKNOWN))


def evaluate_formula(formula: Formula, model) -> np.ndarray:
    """
    모든 대입에 대한 진리값 배열을 반환합니다.

    배열의 축 순서는 formula.variables (알파벳순) 이며 첫 변수가 가장 바깥 축입니다.
    """
    signature = signature_of(model)
    ensure_signature(formula, signature)
    variable_count = len(formula.variables)
    shape = (signature.size,) * variable_count
    grid = np.indices(shape) if variable_count else np.zeros((0,), dtype=np.int64)
    grids = {name: grid[position] for position, name in enumerate(formula.variables)}
    values = _evaluate_node(formula.root, signature, grids, shape)
    return np.broadcast_to(values, shape)


def formula_status(formula: Formula, model) -> int:
    """부분 표 위에서: 0 어딘가 거짓, 1 전부 참, -1 아직 모름"""
    values = evaluate_formula(formula, model)
    if (values == 0).any():
        return 0
    if (values == 1).all():
        return 1
    return UNKNOWN


def check_formula(formula: Formula, model) -> Verdict:
    """
    수식을 모든 |M|^k 대입에 대해 평가합니다.

    Returns:
        Verdict: 성립 여부와 사전식 첫 번째 반례 대입

    Raises:
        SignatureMismatch: 모델에 없는 연산을 쓰는 수식
    """
    values = evaluate_formula(formula, model)
    if (values == UNKNOWN).any():
        raise StructureError(f"formula '{formula}' touches undefined table cells")
    if values.ndim == 0:
        return Verdict(True) if int(values) == 1 else Verdict(False, {})
    failures = np.argwhere(values == 0)
    if failures.shape[0] == 0:
        return Verdict(True)
    witness = {name: int(value) for name, value in zip(formula.variables, failures[0])}
    return Verdict(False, witness)


def evaluate_at(formula: Formula, model, assignment: Mapping[str, int]) -> bool:
    """하나의 대입에서 수식을 평가합니다."""
    signature = signature_of(model)
    ensure_signature(formula, signature)
    grids = {name: np.asarray(int(assignment[name]), dtype=np.int64) for name in formula.variables}
    return bool(_evaluate_node(formula.root, signature, grids, ()) == 1)


@lru_cache(maxsize=None)
def load_law_catalog(path: Path = LAW_CATALOG_FILE) -> Dict[str, Formula]:
    """이름 붙은 법칙 카탈로그를 읽습니다 (캐시됨)."""
    return parse_law_file(path)


def catalog_law(name: str) -> Formula:
    """
    카탈로그에서 이름으로 법칙을 찾습니다.

    Raises:
        UnknownLaw: 카탈로그에 없는 이름
    """
    catalog = load_law_catalog()
    if name not in catalog:
        raise UnknownLaw(name)
    return catalog[name]


def catalog_law_names() -> Tuple[str, ...]:
    return tuple(load_law_catalog())


def check_law(name: str, model) -> Verdict:
    """카탈로그 법칙 이름으로 check_formula 를 호출합니다."""
    return check_formula(catalog_law(name), model)
