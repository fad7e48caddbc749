"""
basic-groupoid 명령행 도구 모듈입니다.

하위 명령: validate, check, construct, roundtrip, search, continuum, laws
종료 코드: 0 성공/성립, 1 실패/반례, 2 사용법 오류, 3 시간 예산 초과
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, Optional, Sequence, Tuple

import pandas as pd

from .algebra_validator import basic_induced_order, check_lemma_rules
from .chart_generator import generate_continuum_chart
from .configuration import (
    DEFAULT_CONTINUUM_GRID_STEP,
    DEFAULT_CONTINUUM_SAMPLE_COUNT,
    EXIT_CODE_BUDGET_EXCEEDED,
    EXIT_CODE_FAILURE,
    EXIT_CODE_SUCCESS,
    EXIT_CODE_USAGE_ERROR,
    LOG_MESSAGE_FORMAT,
    SEARCH_CLASSES,
)
from .continuum_algebra import check_monotone_grid, witness_no_right_residuum
from .data_models import (
    BasicAlgebraModel,
    ContrapositionalGroupoid,
    LeftResiduatedGroupoid,
    LemmaRuleReport,
    OrthoLattice,
    SearchResult,
    SearchSpec,
    SectionInvolutionFamily,
    Verdict,
)
from .errors import (
    ClassMismatch,
    ContinuumDomainError,
    HypothesesFailed,
    LawSyntaxError,
    ModelFileParseError,
    SignatureMismatch,
    SizeOutOfRange,
    StructureError,
    TimeBudgetExceeded,
    UnknownLaw,
)
from .law_checker import catalog_law, check_formula, load_law_catalog
from .law_parser import parse_formula
from .model_file_io import dump_model, format_model, load_model, load_poset
from .model_searcher import (
    load_search_spec,
    search_models,
    with_overrides,
    write_search_results,
)
from .order_structures import hasse_covers, validate_ortholattice
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

# 로깅 설정
logger = logging.getLogger(__name__)

# 레시피 이름 → (입력 모델 타입, 변환 함수)
CONSTRUCTION_RECIPES: Dict[str, Tuple[type, Callable]] = {
    "g-of-a": (BasicAlgebraModel, groupoid_of_basic),
    "a-of-g": (LeftResiduatedGroupoid, basic_of_groupoid),
    "from-filter-inv": (SectionInvolutionFamily, basic_from_filter_involutions),
    "from-ideal-inv": (SectionInvolutionFamily, basic_from_ideal_involutions),
    "from-oml": (OrthoLattice, basic_from_oml),
    "cpg-of-lrpg": (LeftResiduatedGroupoid, cpg_from_lrpg),
    "lrpg-of-cpg": (ContrapositionalGroupoid, lrpg_from_cpg),
}


def _error(message: str) -> None:
    print(message, file=sys.stderr)


def _format_witness(witness) -> str:
    if isinstance(witness, dict):
        return ", ".join(f"{name}={value}" for name, value in witness.items())
    return str(witness)


def _comma_list(value: str) -> Tuple[str, ...]:
    return tuple(name.strip() for name in value.split(",") if name.strip())


# ---------------------------------------------------------------------------
# 하위 명령
# ---------------------------------------------------------------------------


def lemma_report_frame(report: LemmaRuleReport) -> pd.DataFrame:
    """규칙별 판정을 표로 만듭니다."""
    return pd.DataFrame(
        [
            {"rule": rule, "holds": verdict.holds, "witness": _format_witness(verdict.witness or "")}
            for rule, verdict in report.verdicts.items()
        ]
    )


def run_validate(arguments: argparse.Namespace) -> int:
    model = load_model(arguments.model_file)
    print(f"valid {model.model_class} model, size {model.size}")
    if isinstance(model, BasicAlgebraModel):
        poset = basic_induced_order(model).poset
    elif isinstance(model, (OrthoLattice, SectionInvolutionFamily)):
        poset = model.lattice.poset
    else:
        poset = getattr(model, "poset", model)
    print(f"covers: {' '.join(f'{x}<{y}' for x, y in hasse_covers(poset))}")

    if isinstance(model, OrthoLattice):
        report = validate_ortholattice(model)
        print(f"orthomodular: {report.is_orthomodular}")
        if not report.is_orthomodular:
            _error(f"orthomodular law fails at {report.orthomodular_witness}")
    if isinstance(model, LeftResiduatedGroupoid):
        print(f"negation: {' '.join(str(int(value)) for value in model.negation)}")
        if arguments.lemmas:
            print(lemma_report_frame(check_lemma_rules(model)).to_string(index=False))
    return EXIT_CODE_SUCCESS


def run_check(arguments: argparse.Namespace) -> int:
    model = load_model(arguments.model_file, raw=arguments.raw)
    if arguments.formula:
        formulas = [parse_formula(arguments.formula, name="formula")]
    else:
        formulas = [catalog_law(name) for name in arguments.law]

    failures = 0
    for formula in formulas:
        verdict: Verdict = check_formula(formula, model)
        if verdict.holds:
            print(f"{formula.name}: holds")
        else:
            failures += 1
            print(f"{formula.name}: fails")
            _error(f"{formula.name}: counterexample {_format_witness(verdict.witness)}")
    return EXIT_CODE_FAILURE if failures else EXIT_CODE_SUCCESS


def run_construct(arguments: argparse.Namespace) -> int:
    expected_type, construction = CONSTRUCTION_RECIPES[arguments.recipe]
    model = load_model(arguments.model_file)
    if not isinstance(model, expected_type):
        raise ClassMismatch(expected_type.model_class, model.model_class)
    constructed = construction(model)
    if arguments.output:
        dump_model(constructed, arguments.output)
        print(f"wrote {constructed.model_class} model to {arguments.output}")
    else:
        sys.stdout.write(format_model(constructed))
    return EXIT_CODE_SUCCESS


def run_roundtrip(arguments: argparse.Namespace) -> int:
    model = load_model(arguments.model_file)
    if not isinstance(model, (BasicAlgebraModel, LeftResiduatedGroupoid)):
        raise ClassMismatch("basic|lrpg", model.model_class)
    try:
        report = roundtrip_check(model)
    except HypothesesFailed as error:
        print(f"hypotheses fail: {error.law}")
        _error(f"{error.law}: counterexample {_format_witness(error.witness)}")
        return EXIT_CODE_FAILURE
    print(report)
    return EXIT_CODE_SUCCESS if report.all_identical else EXIT_CODE_FAILURE


def _search_spec(arguments: argparse.Namespace) -> SearchSpec:
    if arguments.spec:
        spec = load_search_spec(arguments.spec)
    else:
        poset = load_poset(arguments.poset) if arguments.poset else None
        size = arguments.size if arguments.size is not None else poset.size
        spec = SearchSpec(size=size, poset=poset)
    return with_overrides(
        spec,
        size=arguments.size,
        model_class=arguments.model_class,
        require=_comma_list(arguments.require) if arguments.require is not None else None,
        forbid=_comma_list(arguments.forbid) if arguments.forbid is not None else None,
        poset=load_poset(arguments.poset) if arguments.poset and arguments.spec else None,
        max_models=arguments.limit,
        time_budget_seconds=arguments.budget,
        jobs=arguments.jobs,
        debug=True if arguments.debug else None,
    )


def _report_search(result: SearchResult, output: Optional[Path]) -> None:
    print(result)
    if output:
        written = write_search_results(result, output)
        print(f"wrote {len(written)} model file(s) to {output}")


def run_search(arguments: argparse.Namespace) -> int:
    if not (arguments.spec or arguments.size or arguments.poset):
        _error("error: search needs --size, --poset or --spec")
        return EXIT_CODE_USAGE_ERROR
    spec = _search_spec(arguments)
    try:
        result = search_models(spec)
    except TimeBudgetExceeded as error:
        _error(str(error))
        _report_search(error.partial_result, arguments.output)
        return EXIT_CODE_BUDGET_EXCEEDED
    _report_search(result, arguments.output)
    return EXIT_CODE_SUCCESS


def run_continuum(arguments: argparse.Namespace) -> int:
    witness = witness_no_right_residuum(arguments.x, arguments.samples)
    print(witness)
    report = check_monotone_grid(arguments.step)
    print(report)
    if arguments.chart:
        generate_continuum_chart(arguments.chart, step=arguments.step)
        print(f"chart saved to {arguments.chart}")
    if not report.holds:
        _error(f"monotonicity violated at {report.worst_triple}")
    return EXIT_CODE_SUCCESS if witness.is_valid and report.holds else EXIT_CODE_FAILURE


def run_laws(arguments: argparse.Namespace) -> int:
    for name, formula in load_law_catalog().items():
        print(f"{name} : {formula}")
    return EXIT_CODE_SUCCESS


# ---------------------------------------------------------------------------
# 인자 처리
# ---------------------------------------------------------------------------


def build_argument_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="basic-groupoid",
        description="Validate, convert, check and search finite basic algebras and residuated po-groupoids.",
    )
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser("validate", help="validate a model file")
    validate.add_argument("model_file", type=Path)
    validate.add_argument("--lemmas", action="store_true", help="also print the lemma rule table (lrpg)")
    validate.set_defaults(handler=run_validate)

    check = commands.add_parser("check", help="check named laws or a formula on a model")
    check.add_argument("model_file", type=Path)
    which = check.add_mutually_exclusive_group(required=True)
    which.add_argument("--law", nargs="+", help="catalog law names")
    which.add_argument("--formula", help="formula text, e.g. '(x/y)*y = (y/x)*x'")
    check.add_argument("--raw", action="store_true", help="skip model validation")
    check.set_defaults(handler=run_check)

    construct = commands.add_parser("construct", help="convert a model into another class")
    construct.add_argument("recipe", choices=sorted(CONSTRUCTION_RECIPES))
    construct.add_argument("model_file", type=Path)
    construct.add_argument("-o", "--output", type=Path)
    construct.set_defaults(handler=run_construct)

    roundtrip = commands.add_parser("roundtrip", help="round-trip report for a basic algebra or lrpg")
    roundtrip.add_argument("model_file", type=Path)
    roundtrip.set_defaults(handler=run_roundtrip)

    search = commands.add_parser("search", help="search models up to isomorphism")
    search.add_argument("--size", type=int)
    search.add_argument("--class", dest="model_class", choices=SEARCH_CLASSES)
    search.add_argument("--require", help="comma-separated law names")
    search.add_argument("--forbid", help="comma-separated law names")
    search.add_argument("--poset", type=Path, help="model file whose order is fixed")
    search.add_argument("--limit", type=int)
    search.add_argument("--budget", type=float, help="time budget in seconds")
    search.add_argument("--jobs", type=int)
    search.add_argument("--debug", action="store_true", help="exhaustive search without pruning (size <= 4)")
    search.add_argument("--spec", type=Path, help="key=value search spec file")
    search.add_argument("-o", "--output", type=Path, help="directory for model files and summaries")
    search.set_defaults(handler=run_search)

    continuum = commands.add_parser("continuum", help="unit interval example")
    continuum.add_argument("--x", type=float, default=0.6)
    continuum.add_argument("--step", type=float, default=DEFAULT_CONTINUUM_GRID_STEP)
    continuum.add_argument("--samples", type=int, default=DEFAULT_CONTINUUM_SAMPLE_COUNT)
    continuum.add_argument("--chart", type=Path, help="save a chart of the operations")
    continuum.set_defaults(handler=run_continuum)

    laws = commands.add_parser("laws", help="list the law catalog")
    laws.set_defaults(handler=run_laws)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    명령행 진입점

    Returns:
        종료 코드
    """
    parser = build_argument_parser()
    try:
        arguments = parser.parse_args(argv)
    except SystemExit as exit_request:
        return int(exit_request.code or EXIT_CODE_SUCCESS)

    logging.basicConfig(
        level=logging.DEBUG if arguments.verbose else logging.WARNING,
        format=LOG_MESSAGE_FORMAT,
    )

    try:
        return arguments.handler(arguments)
    except (
        UnknownLaw,
        LawSyntaxError,
        SignatureMismatch,
        ClassMismatch,
        ContinuumDomainError,
        SizeOutOfRange,
    ) as usage_error:
        _error(f"error: {usage_error}")
        return EXIT_CODE_USAGE_ERROR
    except ModelFileParseError as parse_error:
        _error(f"parse error: {parse_error}")
        return EXIT_CODE_FAILURE
    except StructureError as structure_error:
        print(f"invalid: {type(structure_error).__name__}")
        _error(f"{structure_error} (witness: {_format_witness(structure_error.witness)})")
        return EXIT_CODE_FAILURE
    except FileNotFoundError as missing:
        _error(f"error: {missing}")
        return EXIT_CODE_USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
