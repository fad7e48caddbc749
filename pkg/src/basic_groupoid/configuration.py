"""
basic-groupoid 프로젝트의 설정과 상수들을 정의하는 모듈입니다.
"""

from pathlib import Path
from typing import Dict, FrozenSet, Tuple

# 파일 경로 설정
CURRENT_MODULE_DIRECTORY = Path(__file__).resolve().parent
BUNDLED_FIXTURE_DIRECTORY = CURRENT_MODULE_DIRECTORY / "fixtures"
LAW_CATALOG_FILE = CURRENT_MODULE_DIRECTORY / "laws" / "catalog.laws"
LAW_CATALOG_VERSION = "1.0"

# 모델 파일 형식
MODEL_CLASSES: Tuple[str, ...] = (
    "basic",
    "lrpg",
    "cpg",
    "lattice",
    "ortho",
    "involutions",
)
REQUIRED_MODEL_SECTIONS: Dict[str, Tuple[str, ...]] = {
    "basic": ("oplus", "neg"),
    "lrpg": ("leq", "mult", "res"),
    "cpg": ("leq", "mult", "imp"),
    "lattice": ("leq",),
    "ortho": ("leq", "perp"),
    # involutions 는 gamma 또는 delta 중 정확히 하나를 추가로 가집니다
    "involutions": ("leq",),
}
INVOLUTION_SECTIONS: Tuple[str, ...] = ("gamma", "delta")
CANONICAL_SECTION_ORDER: Tuple[str, ...] = (
    "leq",
    "mult",
    "res",
    "imp",
    "oplus",
    "neg",
    "perp",
    "gamma",
    "delta",
)
VECTOR_SECTIONS: FrozenSet[str] = frozenset({"neg", "perp"})
BUNDLED_FIXTURE_SUFFIXES: Tuple[str, ...] = tuple(f".{name}" for name in MODEL_CLASSES)

# 8원소 반례의 원소 이름 (파일 인덱스 0..7)
COUNTEREXAMPLE_ELEMENT_LABELS: Tuple[str, ...] = ("0", "a", "b", "c", "d", "e", "f", "1")

# 모델 탐색 설정
MINIMUM_SEARCH_SIZE = 2
MAXIMUM_SEARCH_SIZE = 8
DEBUG_SEARCH_MAXIMUM_SIZE = 4
DEFAULT_SEARCH_TIME_BUDGET_SECONDS = 600.0
DEFAULT_SEARCH_WORKER_COUNT = 1
SEARCH_CLASSES: Tuple[str, ...] = ("lrpg", "basic")
BRUTE_FORCE_CHUNK_SIZE = 65536

# 부정(¬)을 involution 으로 강제하는 법칙들 (y=1 대입으로 dneg 이 따라나옴)
INVOLUTIVE_NEGATION_LAWS: FrozenSet[str] = frozenset(
    {"dneg", "jk", "contraposition", "skew_div"}
)
# dneg 과 함께 있으면 ¬ 를 반순서(antitone)로 만드는 법칙들
ANTITONE_NEGATION_LAWS: FrozenSet[str] = frozenset(
    {"jk", "w", "contraposition", "skew_div"}
)
# 격자 순서를 강제하는 법칙들
LATTICE_FORCING_LAWS: FrozenSet[str] = frozenset({"div"})

# 연속체 예제 설정
CONTINUUM_TOLERANCE = 1e-12
DEFAULT_CONTINUUM_GRID_STEP = 0.01
DEFAULT_CONTINUUM_SAMPLE_COUNT = 1000
CONTINUUM_CHART_LEFT_FACTORS: Tuple[float, ...] = (0.2, 0.5, 0.8)
CONTINUUM_CHART_FILE_NAME = "continuum_multiplication.png"

# 탐색 결과 파일
SEARCH_SUMMARY_FILE_NAME = "summary.csv"
SEARCH_MODEL_INDEX_FILE_NAME = "models.csv"

# CLI 종료 코드
EXIT_CODE_SUCCESS = 0
EXIT_CODE_FAILURE = 1
EXIT_CODE_USAGE_ERROR = 2
EXIT_CODE_BUDGET_EXCEEDED = 3

# 로깅 설정
LOG_MESSAGE_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
