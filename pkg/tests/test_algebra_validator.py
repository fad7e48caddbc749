import numpy as np
import pytest

from basic_groupoid.algebra_validator import (
    basic_induced_order,
    check_lemma_rules,
    divisibility_conditions,
    find_right_residuum,
    residuum_from_mult,
    validate_basic_algebra,
    validate_cpg,
    validate_lrpg,
)
from basic_groupoid.configuration import BUNDLED_FIXTURE_DIRECTORY
from basic_groupoid.errors import (
    AxiomFailed,
    ConditionAFailed,
    IdentityFailed,
    MalformedTable,
    NoResiduum,
    ResiduationFailed,
)
from basic_groupoid.model_file_io import load_model
from basic_groupoid.order_structures import validate_finite_poset

# 8원소 반례의 원소 인덱스
ZERO, A, B, C, D, E, F, ONE = range(8)

CHAIN3_LEQ = [[1, 1, 1], [0, 1, 1], [0, 0, 1]]
L3_OPLUS = [[0, 1, 2], [1, 2, 2], [2, 2, 2]]
L3_NEG = [2, 1, 0]
HEYTING3_MULT = [[0, 0, 0], [0, 1, 1], [0, 1, 2]]
HEYTING3_IMP = [[2, 2, 2], [0, 2, 2], [0, 2, 2]]


def counterexample():
    return load_model(BUNDLED_FIXTURE_DIRECTORY / "counterexample8.lrpg")


def test_two_element_boolean_is_basic():
    algebra = validate_basic_algebra([[0, 1], [1, 1]], [1, 0])
    assert algebra.one == 1


def test_l3_is_basic():
    algebra = validate_basic_algebra(L3_OPLUS, L3_NEG)
    assert algebra.size == 3


def test_non_involutive_negation_fails_axiom_2():
    with pytest.raises(AxiomFailed) as error:
        validate_basic_algebra(L3_OPLUS, [2, 2, 0])
    assert error.value.axiom == 2


def test_wrong_shape_is_malformed():
    with pytest.raises(MalformedTable):
        validate_basic_algebra([[0, 1, 2], [1, 2, 2]], L3_NEG)


def test_l3_induced_order_is_chain():
    lattice = basic_induced_order(validate_basic_algebra(L3_OPLUS, L3_NEG))
    assert lattice.poset.leq.astype(int).tolist() == CHAIN3_LEQ
    assert lattice.join.tolist() == [[0, 1, 2], [1, 1, 2], [2, 2, 2]]
    assert lattice.meet.tolist() == [[0, 0, 0], [0, 1, 1], [0, 1, 2]]


@pytest.mark.parametrize("file_name", ["l2.basic", "l3.basic", "l4.basic", "boolean4.basic", "mo2.basic"])
def test_zero_is_below_everything(file_name):
    lattice = basic_induced_order(load_model(BUNDLED_FIXTURE_DIRECTORY / file_name))
    assert lattice.poset.leq[0, :].all()


def test_mo2_basic_algebra_has_mo2_order():
    lattice = basic_induced_order(load_model(BUNDLED_FIXTURE_DIRECTORY / "mo2.basic"))
    assert lattice == load_model(BUNDLED_FIXTURE_DIRECTORY / "mo2.ortho").lattice


def test_counterexample_is_left_residuated():
    groupoid = counterexample()
    assert groupoid.negation.tolist() == [7, 6, 5, 3, 4, 2, 1, 0]


def test_boolean_meet_groupoid_is_left_residuated():
    poset = validate_finite_poset([[1, 1], [0, 1]])
    groupoid = validate_lrpg(poset, [[0, 0], [0, 1]], [[1, 0], [1, 1]])
    assert groupoid.negation.tolist() == [1, 0]


def test_changed_product_breaks_residuation():
    groupoid = counterexample()
    mult = np.array(groupoid.mult)
    mult[C, B] = ONE
    with pytest.raises(ResiduationFailed):
        validate_lrpg(groupoid.poset, mult, groupoid.res)


def test_top_must_be_identity():
    poset = validate_finite_poset(CHAIN3_LEQ)
    with pytest.raises(IdentityFailed) as error:
        validate_lrpg(poset, [[0, 0, 0], [0, 0, 0], [0, 1, 2]], [[2, 2, 2], [2, 2, 2], [2, 2, 2]])
    assert error.value.witness == (1,)


def test_residuum_from_mult_matches_stored_table():
    groupoid = counterexample()
    res = residuum_from_mult(groupoid.poset, groupoid.mult)
    assert np.array_equal(res, groupoid.res)
    assert res[C, B] == E
    assert (res[:, ONE] == np.arange(8)).all()


def test_l3_residuum_of_half():
    l3 = load_model(BUNDLED_FIXTURE_DIRECTORY / "l3.lrpg")
    assert residuum_from_mult(l3.poset, l3.mult)[0, 1] == 1


def test_missing_residuum_is_reported():
    poset = validate_finite_poset([[1, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]])
    # 열 2: 1·2 = 2·2 = 0 이므로 {x : x·2 <= 0} = {0, 1, 2} 는 최대원이 없음
    mult = [[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 0, 2], [0, 1, 2, 3]]
    with pytest.raises(NoResiduum) as error:
        residuum_from_mult(poset, mult)
    assert error.value.witness == (0, 2)


def test_right_residuum_missing_in_counterexample():
    result = find_right_residuum(counterexample(), A, ZERO)
    assert not result.exists
    assert result.maximal_elements == (C, F)


def test_right_residuum_of_top_is_argument():
    groupoid = counterexample()
    for z in range(8):
        assert find_right_residuum(groupoid, ONE, z).value == z


def test_l3_right_residuum_equals_division():
    l3 = load_model(BUNDLED_FIXTURE_DIRECTORY / "l3.lrpg")
    assert find_right_residuum(l3, 1, 0).value == 1


def test_cpg_of_l3_is_valid():
    cpg = load_model(BUNDLED_FIXTURE_DIRECTORY / "l3.cpg")
    assert cpg.tilde.tolist() == [2, 1, 0]


def test_boolean_cpg_is_valid():
    cpg = load_model(BUNDLED_FIXTURE_DIRECTORY / "boolean2.cpg")
    assert cpg.size == 2


def test_heyting_chain_fails_condition_a():
    poset = validate_finite_poset(CHAIN3_LEQ)
    with pytest.raises(ConditionAFailed) as error:
        validate_cpg(poset, HEYTING3_MULT, HEYTING3_IMP)
    assert error.value.witness == (1,)


def test_lemma_rules_hold_on_counterexample():
    report = check_lemma_rules(counterexample())
    assert sorted(report.verdicts) == list("abcdefghi")
    assert report.all_hold
    assert report.failing_rules() == ()


@pytest.mark.parametrize("file_name", ["l3.lrpg", "heyting3.lrpg"])
def test_lemma_rules_hold_on_chains(file_name):
    assert check_lemma_rules(load_model(BUNDLED_FIXTURE_DIRECTORY / file_name)).all_hold


def test_divisibility_conditions_agree():
    for file_name in ("counterexample8.lrpg", "l3.lrpg", "heyting3.lrpg"):
        conditions = divisibility_conditions(load_model(BUNDLED_FIXTURE_DIRECTORY / file_name))
        assert conditions == {"div": True, "factorization": True, "meet_semilattice": True}
