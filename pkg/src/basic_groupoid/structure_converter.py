"""
구조 사이의 변환을 담당하는 모듈입니다.

basic algebra ↔ 왼쪽 잉여 po-groupoid, section involution 족 → basic algebra,
직교모듈러 격자 → basic algebra, lrpg ↔ cpg, 그리고 왕복 변환 검사를 제공합니다.
구조의 같음은 동형이 아니라 같은 인덱스 위의 표 전체 일치를 뜻합니다.
"""

import logging
from typing import Dict, Tuple, Union

import numpy as np

from .algebra_validator import (
    basic_induced_order,
    validate_basic_algebra,
    validate_cpg,
    validate_lrpg,
)
from .data_models import (
    BasicAlgebraModel,
    ContrapositionalGroupoid,
    LeftResiduatedGroupoid,
    OrthoLattice,
    RoundTripReport,
    SectionInvolutionFamily,
    Verdict,
    freeze_table,
)
from .errors import (
    ConstructionMismatch,
    DoubleNegationFails,
    HypothesesFailed,
    MalformedTable,
    NotOrthomodular,
)
from .law_checker import catalog_law, check_formula
from .order_structures import (
    build_involution_family,
    validate_involution_family,
    validate_ortholattice,
)

# 로깅 설정
logger = logging.getLogger(__name__)

ROUNDTRIP_LAWS: Tuple[str, ...] = ("div", "jk", "dneg", "w")


def groupoid_of_basic(algebra: BasicAlgebraModel) -> LeftResiduatedGroupoid:
    """
    G(A): x·y = ¬(¬x⊕¬y), x/y = x⊕¬y, 순서는 유도 순서.
    """
    lattice = basic_induced_order(algebra)
    oplus, negation = np.asarray(algebra.oplus), np.asarray(algebra.neg)
    mult = negation[oplus[negation[:, None], negation[None, :]]]
    res = oplus[:, negation]
    return validate_lrpg(lattice.poset, mult, res)


def basic_of_groupoid(groupoid: LeftResiduatedGroupoid) -> BasicAlgebraModel:
    """
    A(G): ¬x = 0/x, x⊕y = ¬(¬x·¬y).

    결과는 검증하지 않습니다. basic algebra 가 아닐 수 있는 후보 표입니다.
    """
    negation = np.asarray(groupoid.res)[groupoid.zero, :]
    oplus = negation[np.asarray(groupoid.mult)[negation[:, None], negation[None, :]]]
    return BasicAlgebraModel(freeze_table(oplus), freeze_table(negation), groupoid.zero)


def involution_families_of_basic(
    algebra: BasicAlgebraModel,
) -> Tuple[SectionInvolutionFamily, SectionInvolutionFamily]:
    """
    basic algebra 가 정하는 γ_a(x) = ¬x⊕a (필터) 와 δ_a(x) = ¬(x⊕¬a) (아이디얼)
    """
    lattice = basic_induced_order(algebra)
    oplus, negation = algebra.oplus, algebra.neg
    filters = build_involution_family(
        lattice, "filters", lambda a, x: int(oplus[negation[x], a])
    )
    ideals = build_involution_family(
        lattice, "ideals", lambda a, x: int(negation[oplus[x, negation[a]]])
    )
    return validate_involution_family(filters), validate_involution_family(ideals)


def _require_kind(family: SectionInvolutionFamily, kind: str) -> None:
    if family.kind != kind:
        raise MalformedTable(f"expected a family on {kind}, got {family.kind}")


def basic_from_filter_involutions(family: SectionInvolutionFamily) -> BasicAlgebraModel:
    """
    (5): ¬x = γ_0(x), x⊕y = γ_y(¬x ∨ y)

    Raises:
        ConstructionMismatch: 결과에서 다시 유도한 γ 족이 입력과 다른 경우
    """
    _require_kind(family, "filters")
    lattice = family.lattice
    maps = np.asarray(family.maps)
    negation = maps[lattice.poset.bottom]
    elements = np.arange(family.size)
    oplus = maps[elements[None, :], lattice.join[negation[:, None], elements[None, :]]]
    algebra = validate_basic_algebra(oplus, negation, lattice.poset.bottom)

    rederived, _ = involution_families_of_basic(algebra)
    if not np.array_equal(rederived.maps, family.maps):
        raise ConstructionMismatch("γ_a(x) = x→a does not reproduce the input family")
    return algebra


def basic_from_ideal_involutions(family: SectionInvolutionFamily) -> BasicAlgebraModel:
    """
    (6): ¬x = δ_1(x), x⊕y = ¬δ_{¬y}(x ∧ ¬y)
    """
    _require_kind(family, "ideals")
    lattice = family.lattice
    maps = np.asarray(family.maps)
    negation = maps[lattice.poset.top]
    elements = np.arange(family.size)
    oplus = negation[
        maps[negation[None, :], lattice.meet[elements[:, None], negation[None, :]]]
    ]
    algebra = validate_basic_algebra(oplus, negation, lattice.poset.bottom)

    _, rederived = involution_families_of_basic(algebra)
    if not np.array_equal(rederived.maps, family.maps):
        raise ConstructionMismatch("δ_a(x) = ¬(x⊕¬a) does not reproduce the input family")
    return algebra


def oml_involution_family(ortho: OrthoLattice, kind: str = "filters") -> SectionInvolutionFamily:
    """γ_a(x) = x⊥ ∨ a 또는 δ_a(x) = x⊥ ∧ a"""
    lattice, perp = ortho.lattice, ortho.perp
    if kind == "filters":
        family = build_involution_family(lattice, kind, lambda a, x: int(lattice.join[perp[x], a]))
    else:
        family = build_involution_family(lattice, kind, lambda a, x: int(lattice.meet[perp[x], a]))
    return validate_involution_family(family)


def basic_from_oml(ortho: OrthoLattice) -> BasicAlgebraModel:
    """
    직교모듈러 격자에서 ¬x = x⊥, x⊕y = (x∧y⊥)∨y 로 basic algebra 를 만듭니다.

    Raises:
        NotOrthomodular: 직교모듈러 조건의 반례가 있는 경우
    """
    report = validate_ortholattice(ortho)
    if not report.is_orthomodular:
        raise NotOrthomodular(report.orthomodular_witness or report.ortholattice_witness)
    lattice = ortho.lattice
    perp = np.asarray(ortho.perp)
    elements = np.arange(ortho.size)
    oplus = lattice.join[lattice.meet[elements[:, None], perp[None, :]], elements[None, :]]
    return validate_basic_algebra(oplus, perp, lattice.poset.bottom)


def cpg_from_lrpg(groupoid: LeftResiduatedGroupoid) -> ContrapositionalGroupoid:
    """
    x→y = ¬x/¬y 로 contrapositional groupoid 를 만듭니다.

    Raises:
        DoubleNegationFails: ¬¬x ≠ x 인 첫 원소
    """
    negation = np.asarray(groupoid.negation)
    failing = np.flatnonzero(negation[negation] != np.arange(groupoid.size))
    if failing.size:
        raise DoubleNegationFails(int(failing[0]))
    implication = np.asarray(groupoid.res)[negation[:, None], negation[None, :]]
    return validate_cpg(groupoid.poset, groupoid.mult, implication)


def lrpg_from_cpg(groupoid: ContrapositionalGroupoid) -> LeftResiduatedGroupoid:
    """x/y = ~x → ~y 로 왼쪽 잉여 groupoid 를 만듭니다."""
    tilde = np.asarray(groupoid.tilde)
    res = np.asarray(groupoid.imp)[tilde[:, None], tilde[None, :]]
    return validate_lrpg(groupoid.poset, groupoid.mult, res)


def _contrapositional_roundtrip(groupoid: LeftResiduatedGroupoid) -> bool:
    return lrpg_from_cpg(cpg_from_lrpg(groupoid)) == groupoid


def _law_verdicts(groupoid: LeftResiduatedGroupoid) -> Dict[str, Verdict]:
    return {law: check_formula(catalog_law(law), groupoid) for law in ROUNDTRIP_LAWS}


def roundtrip_check(model: Union[BasicAlgebraModel, LeftResiduatedGroupoid]) -> RoundTripReport:
    """
    두 정리의 왕복 변환과 lrpg ↔ cpg 왕복을 표 단위로 비교합니다.

    groupoid 입력은 먼저 {div, jk} 또는 {dneg, w} 가설을 확인합니다.

    Raises:
        HypothesesFailed: 두 가설 모두 실패할 때, {div, jk} 중 첫 실패 법칙과 반례
    """
    if isinstance(model, BasicAlgebraModel):
        groupoid = groupoid_of_basic(model)
        verdicts = _law_verdicts(groupoid)
        recovered = basic_of_groupoid(groupoid)
        rebuilt = groupoid_of_basic(validate_basic_algebra(recovered.oplus, recovered.neg, recovered.zero))
        report = RoundTripReport(
            source_class="basic",
            law_verdicts=verdicts,
            divisibility_hypotheses=verdicts["div"].holds and verdicts["jk"].holds,
            involution_hypotheses=verdicts["dneg"].holds and verdicts["w"].holds,
            basic_roundtrip_identical=recovered == model,
            groupoid_roundtrip_identical=rebuilt == groupoid,
            order_coincides=rebuilt.poset == groupoid.poset,
            contrapositional_roundtrip_identical=_contrapositional_roundtrip(groupoid),
        )
    else:
        verdicts = _law_verdicts(model)
        divisible = verdicts["div"].holds and verdicts["jk"].holds
        involutive = verdicts["dneg"].holds and verdicts["w"].holds
        if not (divisible or involutive):
            law = "div" if not verdicts["div"].holds else "jk"
            logger.info(f"왕복 가설 실패: {law} {verdicts[law]}")
            raise HypothesesFailed(law, verdicts[law].witness)
        algebra = basic_of_groupoid(model)
        validated = validate_basic_algebra(algebra.oplus, algebra.neg, algebra.zero)
        rebuilt = groupoid_of_basic(validated)
        report = RoundTripReport(
            source_class="lrpg",
            law_verdicts=verdicts,
            divisibility_hypotheses=divisible,
            involution_hypotheses=involutive,
            basic_roundtrip_identical=basic_of_groupoid(rebuilt) == validated,
            groupoid_roundtrip_identical=rebuilt == model,
            order_coincides=rebuilt.poset == model.poset,
            contrapositional_roundtrip_identical=_contrapositional_roundtrip(model),
        )
    logger.debug(f"왕복 검사 완료 ({report.source_class}): {report.all_identical}")
    return report
