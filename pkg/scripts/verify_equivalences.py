#!/usr/bin/env python
"""
작은 크기에서 basic algebra 와 groupoid 의 대응을 전수로 확인하는 스크립트

크기마다 basic algebra, {div, jk} groupoid, {dneg, w} groupoid 를 탐색하고
세 집합이 A(G)/G(A) 로 일대일 대응하는지 확인한 뒤 표로 저장합니다.
"""

import argparse
import logging
import sys
from pathlib import Path

import pandas as pd

# Setup paths
project_root = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(project_root / "src"))

from basic_groupoid.canonical_form import canonical_form
from basic_groupoid.configuration import LOG_MESSAGE_FORMAT, MINIMUM_SEARCH_SIZE
from basic_groupoid.data_models import SearchSpec
from basic_groupoid.model_searcher import search_models
from basic_groupoid.structure_converter import groupoid_of_basic

# Configure logging
logging.basicConfig(level=logging.INFO, format=LOG_MESSAGE_FORMAT)
logger = logging.getLogger(__name__)


def verify_size(size: int, jobs: int) -> dict:
    algebras = search_models(SearchSpec(size=size, model_class="basic", jobs=jobs))
    divisible = search_models(SearchSpec(size=size, require=("div", "jk"), jobs=jobs))
    involutive = search_models(SearchSpec(size=size, require=("dneg", "w"), jobs=jobs))

    images = {canonical_form(groupoid_of_basic(algebra)) for algebra in algebras.models}
    return {
        "size": size,
        "basic_algebras": algebras.models_emitted,
        "div_jk_groupoids": divisible.models_emitted,
        "dneg_w_groupoids": involutive.models_emitted,
        "g_of_a_matches_div_jk": images == set(divisible.canonical_forms),
        "div_jk_equals_dneg_w": set(divisible.canonical_forms) == set(involutive.canonical_forms),
    }


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Exhaustively verify the basic algebra correspondence.")
    parser.add_argument("--max-size", type=int, default=5)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("-o", "--output", type=Path, help="CSV file for the summary table")
    arguments = parser.parse_args()

    rows = []
    for size in range(MINIMUM_SEARCH_SIZE, arguments.max_size + 1):
        logger.info(f"크기 {size} 확인 중...")
        rows.append(verify_size(size, arguments.jobs))
    summary = pd.DataFrame(rows)
    print(summary.to_string(index=False))

    if arguments.output:
        summary.to_csv(arguments.output, index=False)
        logger.info(f"요약 표 저장 완료: {arguments.output}")

    verified = summary["g_of_a_matches_div_jk"].all() and summary["div_jk_equals_dneg_w"].all()
    sys.exit(0 if verified else 1)
