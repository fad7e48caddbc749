"""
실수 단위구간 [0, 1] 위의 단조 basic algebra 를 계산하는 모듈입니다.

¬x = √(1−x²) (δ_1), a < 1 이면 δ_a(x) = a − x 인 아이디얼 involution 족에서
    x·y = x                 (y = 1)
    x·y = max(y − ¬x, 0)    (y < 1)
    x⊕y = ¬(¬x·¬y)
가 나옵니다. y = 1 에서 불연속이므로 경우 구분은 정확한 비교로 합니다.
"""

import logging
from typing import Iterable, Optional, Tuple

import numpy as np

from .configuration import (
    CONTINUUM_TOLERANCE,
    DEFAULT_CONTINUUM_GRID_STEP,
    DEFAULT_CONTINUUM_SAMPLE_COUNT,
)
from .data_models import ContinuumResiduumWitness, MonotoneGridReport
from .errors import ContinuumDomainError

# 로깅 설정
logger = logging.getLogger(__name__)

NONASSOCIATIVITY_THRESHOLD = 1e-6


def _unit_values(values) -> np.ndarray:
    array = np.asarray(values, dtype=float)
    outside = ~((array >= 0.0) & (array <= 1.0))
    if outside.any():
        raise ContinuumDomainError(array[outside].flat[0])
    return array


def negation(x):
    """¬x = √((1−x)(1+x)), x = 0, 1 에서 정확히 1, 0"""
    x = _unit_values(x)
    return np.sqrt(np.minimum((1.0 - x) * (1.0 + x), 1.0))


def multiply(x, y):
    """x·y, numpy 배열끼리는 원소별로 계산"""
    x, y = np.broadcast_arrays(_unit_values(x), _unit_values(y))
    return np.where(y == 1.0, x, np.maximum(y - negation(x), 0.0))


def oplus(x, y):
    return negation(multiply(negation(x), negation(y)))


_OPERATIONS = {"neg": (negation, 1), "mult": (multiply, 2), "oplus": (oplus, 2)}


def ua_eval(operation: str, *arguments: float) -> float:
    """
    연산 하나를 스칼라 인자로 계산합니다.

    Args:
        operation: "neg", "mult", "oplus" 중 하나
        arguments: [0, 1] 안의 실수들

    Raises:
        ContinuumDomainError: 알 수 없는 연산, 인자 개수 오류, [0, 1] 밖의 인자
    """
    if operation not in _OPERATIONS:
        raise ContinuumDomainError(operation, "unknown operation")
    function, arity = _OPERATIONS[operation]
    if len(arguments) != arity:
        raise ContinuumDomainError(arguments, f"'{operation}' takes {arity} argument(s)")
    return float(function(*arguments))


def unit_grid(step: float) -> np.ndarray:
    """0 과 1 을 정확히 포함하는 간격 약 step 의 격자"""
    if not 0.0 < step < 1.0:
        raise ContinuumDomainError(step, "grid step must lie strictly between 0 and 1")
    return np.linspace(0.0, 1.0, int(round(1.0 / step)) + 1)


def check_monotone_on_points(points: Iterable[float], tolerance: float = CONTINUUM_TOLERANCE) -> MonotoneGridReport:
    """
    주어진 점들에서 x <= y 이면 z·x <= z·y (+ 허용오차) 인지 확인합니다.

    z 를 고정하면 정렬된 x 에 대해 z·x 의 누적 최댓값과의 차이가
    모든 x <= y 쌍의 위반량을 한 번에 줍니다.
    """
    grid = np.unique(_unit_values(list(points)))
    count = grid.size
    products = multiply(grid[:, None], grid[None, :])  # products[z, x] = z·x
    running_maximum = np.maximum.accumulate(products, axis=1)
    violation = running_maximum - products
    worst = np.unravel_index(int(violation.argmax()), violation.shape)
    max_violation = float(violation[worst])

    worst_triple: Optional[Tuple[float, float, float]] = None
    if max_violation > 0.0:
        z_index, y_index = int(worst[0]), int(worst[1])
        x_index = int(products[z_index, : y_index + 1].argmax())
        worst_triple = (float(grid[z_index]), float(grid[x_index]), float(grid[y_index]))

    report = MonotoneGridReport(
        grid_points=count,
        triples_checked=count * count * (count + 1) // 2,
        max_violation=max_violation,
        violations_above_tolerance=int((violation > tolerance).sum()),
        tolerance=tolerance,
        worst_triple=worst_triple,
    )
    logger.debug(f"단조성 격자 검사: {count}점, 최대 위반 {max_violation:.3e}")
    return report


def check_monotone_grid(step: float = DEFAULT_CONTINUUM_GRID_STEP) -> MonotoneGridReport:
    """간격 step 의 격자에서 단조성을 확인합니다. 증명이 아니라 수치적 근거입니다."""
    return check_monotone_on_points(unit_grid(step))


def double_negation_error(step: float) -> float:
    """격자 위에서 |¬¬x − x| 의 최댓값"""
    grid = unit_grid(step)
    return float(np.abs(negation(negation(grid)) - grid).max())


def witness_no_right_residuum(
    x: float,
    sample_count: int = DEFAULT_CONTINUUM_SAMPLE_COUNT,
    tolerance: float = CONTINUUM_TOLERANCE,
) -> ContinuumResiduumWitness:
    """
    y = 1 − ¬x 에 대해 {z : x·z <= y} 가 모든 z < 1 을 포함하지만 1 은
    포함하지 않음을 보여서 x\\y 가 없다는 증명서를 만듭니다.

    Raises:
        ContinuumDomainError: x 가 (0, 1) 밖에 있는 경우
    """
    if not 0.0 < x < 1.0:
        raise ContinuumDomainError(x, "the witness needs 0 < x < 1")
    negation_of_x = float(negation(x))
    y = 1.0 - negation_of_x
    product_at_one = float(multiply(x, 1.0))
    samples = np.linspace(0.0, 1.0, sample_count, endpoint=False)
    largest = float(multiply(x, samples).max())

    witness = ContinuumResiduumWitness(
        x=float(x),
        y=y,
        negation_of_x=negation_of_x,
        product_at_one=product_at_one,
        sampled_points=int(sample_count),
        largest_sampled_product=largest,
        excludes_one=product_at_one > y,
        bounds_all_samples=largest <= y + tolerance,
    )
    if not witness.is_valid:
        logger.error(f"x = {x} 에서 증명서가 성립하지 않습니다:\n{witness}")
    return witness


def find_oplus_nonassociativity(
    step: float = 0.1, threshold: float = NONASSOCIATIVITY_THRESHOLD
) -> Optional[Tuple[float, float, float, float, float]]:
    """
    격자에서 (x⊕y)⊕z 와 x⊕(y⊕z) 가 threshold 보다 크게 다른 첫 삼중쌍.

    Returns:
        (x, y, z, (x⊕y)⊕z, x⊕(y⊕z)) 또는 None
    """
    grid = unit_grid(step)
    x, y, z = np.meshgrid(grid, grid, grid, indexing="ij")
    left = oplus(oplus(x, y), z)
    right = oplus(x, oplus(y, z))
    positions = np.argwhere(np.abs(left - right) > threshold)
    if positions.shape[0] == 0:
        return None
    i, j, k = (int(value) for value in positions[0])
    return (
        float(grid[i]),
        float(grid[j]),
        float(grid[k]),
        float(left[i, j, k]),
        float(right[i, j, k]),
    )
