"""
모델 파일(.basic, .lrpg, .cpg, .lattice, .ortho, .involutions)을
읽고 쓰는 모듈입니다.

형식:
    class lrpg
    size 8
    leq
    1 1 1 1 1 1 1 1
    ...
    mult
    ...

머리말(class, size) 뒤에 섹션 이름 줄과 그 행들이 옵니다.
행렬 섹션은 n 행, neg/perp 는 1 행입니다. '#' 뒤는 주석입니다.
"""

import logging
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from .algebra_validator import (
    basic_induced_order,
    validate_basic_algebra,
    validate_cpg,
    validate_lrpg,
)
from .configuration import (
    CANONICAL_SECTION_ORDER,
    INVOLUTION_SECTIONS,
    MODEL_CLASSES,
    REQUIRED_MODEL_SECTIONS,
    VECTOR_SECTIONS,
)
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
from .errors import ModelFileParseError, StructureError
from .order_structures import (
    meets_joins,
    validate_finite_poset,
    validate_involution_family,
    validate_ortholattice,
)

# 로깅 설정
logger = logging.getLogger(__name__)


def _tokens(line: str, line_number: int) -> List[int]:
    try:
        return [int(token) for token in line.split()]
    except ValueError as error:
        raise ModelFileParseError(line_number, f"non-integer entry ({error})") from error


def _content_lines(text: str) -> Iterable[Tuple[int, str]]:
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if line:
            yield line_number, line


def parse_model_text(text: str) -> Tuple[str, int, Dict[str, np.ndarray]]:
    """
    모델 파일 내용을 (class, size, 섹션별 배열) 로 나눕니다. 검증은 하지 않습니다.

    Raises:
        ModelFileParseError: 머리말, 섹션 이름, 행 길이, 행 수, 값 범위 오류
    """
    lines = list(_content_lines(text))
    model_class: Optional[str] = None
    size: Optional[int] = None
    position = 0
    while position < len(lines) and (model_class is None or size is None):
        line_number, line = lines[position]
        keyword, _, value = line.partition(" ")
        value = value.strip()
        if keyword == "class":
            if value not in MODEL_CLASSES:
                raise ModelFileParseError(line_number, f"unknown model class '{value}'")
            model_class = value
        elif keyword == "size":
            if not value.isdigit() or int(value) < 1:
                raise ModelFileParseError(line_number, f"invalid size '{value}'")
            size = int(value)
        else:
            raise ModelFileParseError(line_number, "expected 'class <name>' and 'size <n>' header lines")
        position += 1
    if model_class is None or size is None:
        raise ModelFileParseError(len(text.splitlines()), "missing 'class' or 'size' header")

    sections: Dict[str, np.ndarray] = {}
    while position < len(lines):
        line_number, name = lines[position]
        position += 1
        if name not in CANONICAL_SECTION_ORDER:
            raise ModelFileParseError(line_number, f"unknown section '{name}'")
        if name in sections:
            raise ModelFileParseError(line_number, f"duplicate section '{name}'")
        row_count = 1 if name in VECTOR_SECTIONS else size
        rows = []
        for _ in range(row_count):
            if position >= len(lines):
                raise ModelFileParseError(line_number, f"section '{name}' needs {row_count} rows")
            row_number, row_text = lines[position]
            row = _tokens(row_text, row_number)
            if len(row) != size:
                raise ModelFileParseError(
                    row_number, f"section '{name}' row has {len(row)} entries, expected {size}"
                )
            rows.append(row)
            position += 1
        table = np.array(rows[0] if name in VECTOR_SECTIONS else rows, dtype=np.int64)
        _check_range(name, table, size, line_number)
        sections[name] = table

    _check_sections(model_class, sections)
    return model_class, size, sections


def _check_range(name: str, table: np.ndarray, size: int, line_number: int) -> None:
    if name == "leq":
        valid = np.isin(table, (0, 1))
    elif name in INVOLUTION_SECTIONS:
        valid = (table >= -1) & (table < size)
    else:
        valid = (table >= 0) & (table < size)
    if not valid.all():
        raise ModelFileParseError(line_number, f"section '{name}' has entries out of range")


def _check_sections(model_class: str, sections: Dict[str, np.ndarray]) -> None:
    expected = set(REQUIRED_MODEL_SECTIONS[model_class])
    present = set(sections)
    if model_class == "involutions":
        involution_sections = present & set(INVOLUTION_SECTIONS)
        if len(involution_sections) != 1:
            raise ModelFileParseError(0, "involutions file needs exactly one of 'gamma' or 'delta'")
        expected |= involution_sections
    missing = expected - present
    if missing:
        raise ModelFileParseError(0, f"missing sections for class '{model_class}': {sorted(missing)}")
    extra = present - expected
    if extra:
        raise ModelFileParseError(0, f"sections not used by class '{model_class}': {sorted(extra)}")


def _bounds(leq: np.ndarray) -> Tuple[int, int]:
    """모든 원소 아래/위에 있는 원소 (없으면 0 과 n-1, 검증에서 걸러짐)"""
    relation = leq.astype(bool)
    bottoms = np.flatnonzero(relation.all(axis=1))
    tops = np.flatnonzero(relation.all(axis=0))
    bottom = int(bottoms[0]) if bottoms.size else 0
    top = int(tops[0]) if tops.size else relation.shape[0] - 1
    return bottom, top


def _poset(leq: np.ndarray, raw: bool) -> FinitePoset:
    bottom, top = _bounds(leq)
    if raw:
        return FinitePoset(freeze_table(leq, dtype=bool), bottom, top)
    return validate_finite_poset(leq, bottom, top)


def build_model(model_class: str, sections: Dict[str, np.ndarray], raw: bool = False):
    """
    섹션 배열들로 모델 객체를 만들고 (raw 가 아니면) 검증합니다.

    raw 모드는 basic, lrpg, cpg 의 표 검증을 건너뜁니다.
    격자 기반 클래스는 meet/join 계산이 필요하므로 항상 격자여야 합니다.
    """
    if model_class == "basic":
        if raw:
            return BasicAlgebraModel(freeze_table(sections["oplus"]), freeze_table(sections["neg"]), 0)
        return validate_basic_algebra(sections["oplus"], sections["neg"], 0)

    poset = _poset(sections["leq"], raw)
    if model_class == "lrpg":
        if raw:
            return LeftResiduatedGroupoid(poset, freeze_table(sections["mult"]), freeze_table(sections["res"]))
        return validate_lrpg(poset, sections["mult"], sections["res"])
    if model_class == "cpg":
        if raw:
            return ContrapositionalGroupoid(poset, freeze_table(sections["mult"]), freeze_table(sections["imp"]))
        return validate_cpg(poset, sections["mult"], sections["imp"])

    lattice = meets_joins(poset)
    if model_class == "lattice":
        return lattice
    if model_class == "ortho":
        ortho = OrthoLattice(lattice, freeze_table(sections["perp"]))
        if not raw:
            report = validate_ortholattice(ortho)
            if not report.is_ortholattice:
                raise StructureError(
                    f"not an ortholattice: {report.ortholattice_failure} at {report.ortholattice_witness}",
                    report.ortholattice_witness,
                )
        return ortho

    section_name = "gamma" if "gamma" in sections else "delta"
    kind = "filters" if section_name == "gamma" else "ideals"
    family = SectionInvolutionFamily(lattice, kind, freeze_table(sections[section_name]))
    return family if raw else validate_involution_family(family)


def parse_model(text: str, raw: bool = False):
    model_class, _, sections = parse_model_text(text)
    return build_model(model_class, sections, raw)


def load_model(model_file_path: Path, raw: bool = False):
    """
    모델 파일을 읽고 클래스에 맞는 검증기를 거친 모델을 반환합니다.

    Args:
        model_file_path: 모델 파일 경로
        raw: True 이면 표 검증을 건너뜀 (A(G) 처럼 유효하지 않을 수 있는 표)

    Raises:
        ModelFileParseError: 파일 형식 오류
        StructureError: 검증 실패 (하위 클래스 그대로 전달)
    """
    model_file_path = Path(model_file_path)
    text = model_file_path.read_text(encoding="utf-8")
    model = parse_model(text, raw)
    logger.debug(f"{model.model_class} 모델을 읽었습니다: {model_file_path} (raw={raw})")
    return model


def load_poset(model_file_path: Path) -> FinitePoset:
    """모델 파일이 담고 있는 순서집합 (basic 은 유도 순서)"""
    model = load_model(model_file_path)
    if isinstance(model, FinitePoset):
        return model
    if isinstance(model, BasicAlgebraModel):
        return basic_induced_order(model).poset
    if isinstance(model, BoundedLattice):
        return model.poset
    if isinstance(model, (OrthoLattice, SectionInvolutionFamily)):
        return model.lattice.poset
    return model.poset


def _model_sections(model) -> Tuple[str, Dict[str, np.ndarray]]:
    if isinstance(model, BasicAlgebraModel):
        if model.zero != 0:
            raise StructureError(f"basic algebra files fix 0 at index 0, got zero={model.zero}")
        return "basic", {"oplus": model.oplus, "neg": model.neg}
    if isinstance(model, LeftResiduatedGroupoid):
        return "lrpg", {"leq": model.poset.leq, "mult": model.mult, "res": model.res}
    if isinstance(model, ContrapositionalGroupoid):
        return "cpg", {"leq": model.poset.leq, "mult": model.mult, "imp": model.imp}
    if isinstance(model, BoundedLattice):
        return "lattice", {"leq": model.poset.leq}
    if isinstance(model, OrthoLattice):
        return "ortho", {"leq": model.lattice.poset.leq, "perp": model.perp}
    if isinstance(model, SectionInvolutionFamily):
        return "involutions", {"leq": model.lattice.poset.leq, model.file_section_name: model.maps}
    raise StructureError(f"cannot serialise {type(model).__name__}")


def _format_row(values) -> str:
    return " ".join(str(int(value)) for value in values)


def format_model(model) -> str:
    """정규 섹션 순서, 공백 하나 구분, 마지막 줄바꿈을 가진 파일 내용"""
    model_class, sections = _model_sections(model)
    lines = [f"class {model_class}", f"size {model.size}"]
    for name in CANONICAL_SECTION_ORDER:
        if name not in sections:
            continue
        lines.append(name)
        table = np.asarray(sections[name])
        if table.ndim == 1:
            lines.append(_format_row(table))
        else:
            lines.extend(_format_row(row) for row in table)
    return "\n".join(lines) + "\n"


def dump_model(model, model_file_path: Path) -> Path:
    """
    모델을 파일로 저장합니다. 같은 모델은 항상 바이트 단위로 같은 파일이 됩니다.
    """
    model_file_path = Path(model_file_path)
    model_file_path.parent.mkdir(parents=True, exist_ok=True)
    model_file_path.write_text(format_model(model), encoding="utf-8")
    logger.debug(f"모델을 저장했습니다: {model_file_path}")
    return model_file_path
