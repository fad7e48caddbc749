"""
단위구간 basic algebra 의 연산 그래프를 생성하는 모듈입니다.
"""

import logging
from pathlib import Path
from typing import Sequence

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
from matplotlib.axes import Axes
from matplotlib.figure import Figure

from .configuration import CONTINUUM_CHART_LEFT_FACTORS, DEFAULT_CONTINUUM_GRID_STEP
from .continuum_algebra import multiply, negation, oplus, unit_grid

# 로깅 설정
logger = logging.getLogger(__name__)


def draw_multiplication_curves(
    chart_axes: Axes, left_factors: Sequence[float], grid: np.ndarray
) -> None:
    """
    고정된 x 마다 y ↦ x·y 곡선을 그립니다. y = 1 의 값은 따로 점으로 표시합니다.

    Args:
        chart_axes: 그래프를 그릴 Matplotlib Axes 객체
        left_factors: 곡선을 그릴 x 값들
        grid: y 축 표본점 (마지막 점은 1)
    """
    below_one = grid[grid < 1.0]
    for x in left_factors:
        line = chart_axes.plot(below_one, multiply(x, below_one), label=f"x = {x:g}")[0]
        chart_axes.scatter([1.0], [float(multiply(x, 1.0))], color=line.get_color(), marker="o")
        # x·y 의 상한 1 − ¬x 가 x·1 = x 보다 작음
        chart_axes.axhline(1.0 - float(negation(x)), color=line.get_color(), linestyle=":", linewidth=0.8)
    chart_axes.set_xlabel("y")
    chart_axes.set_ylabel("x · y")
    chart_axes.set_title("Multiplication: jump at y = 1 (no right residuum)")
    chart_axes.legend(loc="upper left")
    chart_axes.grid(True)


def draw_negation_and_sum(chart_axes: Axes, grid: np.ndarray) -> None:
    """¬x 와 x⊕x 곡선을 그립니다."""
    chart_axes.plot(grid, negation(grid), label="¬x = sqrt(1 - x²)", color="purple")
    chart_axes.plot(grid, oplus(grid, grid), label="x ⊕ x", color="red", linestyle="--")
    chart_axes.set_xlabel("x")
    chart_axes.set_title("Negation and x ⊕ x")
    chart_axes.legend(loc="lower left")
    chart_axes.grid(True)


def generate_continuum_chart(
    output_chart_image_file: Path,
    left_factors: Sequence[float] = CONTINUUM_CHART_LEFT_FACTORS,
    step: float = DEFAULT_CONTINUUM_GRID_STEP,
) -> Path:
    """
    연속체 예제의 두 그래프를 하나의 그림 파일로 저장합니다.

    Returns:
        저장된 그림 파일 경로
    """
    output_chart_image_file = Path(output_chart_image_file)
    output_chart_image_file.parent.mkdir(parents=True, exist_ok=True)
    grid = unit_grid(step)

    chart_figure: Figure
    chart_axes_list: list[Axes]
    chart_figure, chart_axes_list = plt.subplots(nrows=1, ncols=2, figsize=(12, 5))
    draw_multiplication_curves(chart_axes_list[0], left_factors, grid)
    draw_negation_and_sum(chart_axes_list[1], grid)

    plt.tight_layout()
    chart_figure.savefig(output_chart_image_file)
    plt.close(chart_figure)
    logger.info(f"연속체 그래프 저장 완료: {output_chart_image_file}")
    return output_chart_image_file
