"""
basic-groupoid: 유한 basic algebra 와 왼쪽 잉여 po-groupoid 를 다루는 패키지
"""

# 버전 정보
__version__ = "0.1.0"
__author__ = "basic-groupoid contributors"

from .data_models import (
    BasicAlgebraModel,
    BoundedLattice,
    ContrapositionalGroupoid,
    FinitePoset,
    LeftResiduatedGroupoid,
    OrthoLattice,
    SearchResult,
    SearchSpec,
    SectionInvolutionFamily,
    Verdict,
)
from .errors import StructureError
from .order_structures import (
    hasse_covers,
    meets_joins,
    validate_finite_poset,
    validate_involution_family,
    validate_ortholattice,
)
from .algebra_validator import (
    basic_induced_order,
    check_lemma_rules,
    find_right_residuum,
    validate_basic_algebra,
    validate_cpg,
    validate_lrpg,
)
from .structure_converter import (
    basic_from_filter_involutions,
    basic_from_ideal_involutions,
    basic_from_oml,
    basic_of_groupoid,
    cpg_from_lrpg,
    groupoid_of_basic,
    lrpg_from_cpg,
    roundtrip_check,
)
from .law_parser import parse_formula
from .law_checker import catalog_law, check_formula, check_law
from .canonical_form import canonical_form, is_isomorphic
from .poset_enumerator import enumerate_bounded_lattices, enumerate_bounded_posets
from .model_searcher import search_models
from .model_file_io import dump_model, load_model

# Note: chart_generator 는 matplotlib 백엔드를 설정하므로 여기서 import 하지 않습니다.
# 필요하면 basic_groupoid.chart_generator 에서 직접 import 하세요.

# 주요 기능들
__all__ = [
    # 데이터 클래스
    "BasicAlgebraModel",
    "BoundedLattice",
    "ContrapositionalGroupoid",
    "FinitePoset",
    "LeftResiduatedGroupoid",
    "OrthoLattice",
    "SearchResult",
    "SearchSpec",
    "SectionInvolutionFamily",
    "Verdict",
    "StructureError",
    # 순서 구조
    "hasse_covers",
    "meets_joins",
    "validate_finite_poset",
    "validate_involution_family",
    "validate_ortholattice",
    # 대수 검증
    "basic_induced_order",
    "check_lemma_rules",
    "find_right_residuum",
    "validate_basic_algebra",
    "validate_cpg",
    "validate_lrpg",
    # 구조 변환
    "basic_from_filter_involutions",
    "basic_from_ideal_involutions",
    "basic_from_oml",
    "basic_of_groupoid",
    "cpg_from_lrpg",
    "groupoid_of_basic",
    "lrpg_from_cpg",
    "roundtrip_check",
    # 법칙 언어
    "parse_formula",
    "catalog_law",
    "check_formula",
    "check_law",
    # 동형과 탐색
    "canonical_form",
    "is_isomorphic",
    "enumerate_bounded_lattices",
    "enumerate_bounded_posets",
    "search_models",
    # 파일 입출력
    "dump_model",
    "load_model",
]
