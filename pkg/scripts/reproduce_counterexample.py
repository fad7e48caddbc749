#!/usr/bin/env python
"""
8원소 반례 재현 스크립트

8원소 반례인 왼쪽 잉여 po-groupoid 가 divisibility, double negation 과
(cap) 조건은 만족하지만 jk 법칙을 만족하지 않으며, 그 A(G) 가 basic algebra 가
아니라는 것을 확인합니다. --search 를 주면 모든 8원소 순서집합에 대한 탐색으로
이 모델을 다시 찾습니다.
"""

import argparse
import logging
import sys
from pathlib import Path

# Setup paths
project_root = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(project_root / "src"))

from basic_groupoid.algebra_validator import find_right_residuum, validate_basic_algebra
from basic_groupoid.canonical_form import canonical_form
from basic_groupoid.configuration import (
    BUNDLED_FIXTURE_DIRECTORY,
    COUNTEREXAMPLE_ELEMENT_LABELS,
    LOG_MESSAGE_FORMAT,
)
from basic_groupoid.data_models import SearchSpec
from basic_groupoid.errors import AxiomFailed
from basic_groupoid.law_checker import check_law
from basic_groupoid.model_file_io import load_model
from basic_groupoid.model_searcher import search_models
from basic_groupoid.structure_converter import basic_of_groupoid

# Configure logging
logging.basicConfig(level=logging.INFO, format=LOG_MESSAGE_FORMAT)
logger = logging.getLogger(__name__)

EXPECTED_LAWS = {"div": True, "dneg": True, "cap": True, "lres": True, "jk": False}


def labelled(witness) -> str:
    return ", ".join(f"{name}={COUNTEREXAMPLE_ELEMENT_LABELS[value]}" for name, value in witness.items())


def reproduce(search: bool) -> bool:
    counterexample = load_model(BUNDLED_FIXTURE_DIRECTORY / "counterexample8.lrpg")
    reproduced = True

    for law, expected in EXPECTED_LAWS.items():
        verdict = check_law(law, counterexample)
        detail = "" if verdict.holds else f" ({labelled(verdict.witness)})"
        print(f"{law:5s}: {'holds' if verdict.holds else 'fails'}{detail}")
        reproduced &= verdict.holds is expected

    residuum = find_right_residuum(counterexample, 1, 0)
    maxima = " ".join(COUNTEREXAMPLE_ELEMENT_LABELS[m] for m in residuum.maximal_elements)
    print(f"a\\0  : {'exists' if residuum.exists else f'missing, maximal elements {maxima}'}")
    reproduced &= not residuum.exists

    candidate = basic_of_groupoid(counterexample)
    try:
        validate_basic_algebra(candidate.oplus, candidate.neg, candidate.zero)
        print("A(G) : basic algebra")
        reproduced = False
    except AxiomFailed as error:
        print(f"A(G) : axiom ({error.axiom}) fails at {labelled(error.witness)}")

    if search:
        logger.info("모든 8원소 순서집합에서 div, dneg 를 만족하고 jk 를 만족하지 않는 모델을 찾습니다")
        result = search_models(SearchSpec(size=8, require=("div", "dneg"), forbid=("jk",)))
        found = canonical_form(counterexample) in result.canonical_forms
        print(
            f"search: {result.posets_tried} poset(s), {result.models_emitted} model(s), "
            f"exhausted={result.exhausted}, counterexample {'found' if found else 'NOT found'}"
        )
        reproduced &= found and result.exhausted
    return reproduced


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Reproduce the 8-element counterexample.")
    parser.add_argument("--search", action="store_true", help="rediscover the model by search")
    arguments = parser.parse_args()

    if reproduce(arguments.search):
        print("반례가 재현되었습니다")
        sys.exit(0)
    logger.error("반례 재현 실패: 위의 판정을 확인해주세요")
    sys.exit(1)
