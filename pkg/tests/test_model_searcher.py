import pickle

import pandas as pd
import pytest

from basic_groupoid.algebra_validator import validate_basic_algebra
from basic_groupoid.canonical_form import canonical_form
from basic_groupoid.configuration import BUNDLED_FIXTURE_DIRECTORY, DEFAULT_SEARCH_TIME_BUDGET_SECONDS
from basic_groupoid.data_models import SearchSpec
from basic_groupoid.errors import (
    ModelFileParseError,
    SizeOutOfRange,
    StructureError,
    TimeBudgetExceeded,
    UnknownLaw,
)
from basic_groupoid.law_checker import check_law
from basic_groupoid.model_file_io import load_model
from basic_groupoid.model_searcher import (
    column_candidates,
    load_search_spec,
    mv_cross_check,
    search_models,
    search_summary_frame,
    with_overrides,
    write_search_results,
)
from basic_groupoid.order_structures import validate_finite_poset
from basic_groupoid.structure_converter import basic_of_groupoid, groupoid_of_basic

CHAIN3_LEQ = [[1, 1, 1], [0, 1, 1], [0, 0, 1]]
DIVISIBILITY_LAWS = ("div", "jk")
DOUBLE_NEGATION_LAWS = ("dneg", "w")


def fixture(file_name):
    return load_model(BUNDLED_FIXTURE_DIRECTORY / file_name)


def test_two_element_groupoid_is_unique():
    result = search_models(SearchSpec(size=2, require=DIVISIBILITY_LAWS))
    assert result.models_emitted == 1
    assert result.exhausted
    assert result.models[0].mult.tolist() == [[0, 0], [0, 1]]


def test_three_element_basic_algebra_is_lukasiewicz():
    result = search_models(SearchSpec(size=3, model_class="basic"))
    assert result.models_emitted == 1
    assert result.models[0] == fixture("l3.basic")


def test_forbidden_law_removes_models():
    everything = search_models(SearchSpec(size=3, require=("div",)))
    commutative = search_models(SearchSpec(size=3, require=("div", "comm_mult")))
    non_commutative = search_models(SearchSpec(size=3, require=("div",), forbid=("comm_mult",)))
    assert everything.models_emitted == commutative.models_emitted + non_commutative.models_emitted
    for model in non_commutative.models:
        assert not check_law("comm_mult", model).holds


def test_emitted_models_are_pairwise_non_isomorphic():
    result = search_models(SearchSpec(size=4, require=("div", "dneg")))
    assert len(set(result.canonical_forms)) == result.models_emitted
    assert [canonical_form(model) for model in result.models] == list(result.canonical_forms)


@pytest.mark.parametrize(
    "size, model_class, require",
    [
        (2, "lrpg", ()),
        (3, "lrpg", ()),
        (3, "lrpg", ("div",)),
        (3, "lrpg", ("div", "dneg")),
        (3, "lrpg", ("jk",)),
        (4, "lrpg", ("div", "dneg")),
        (3, "basic", ()),
        (4, "basic", ()),
        (4, "basic", ("comm_oplus",)),
    ],
)
def test_pruned_search_matches_brute_force(size, model_class, require):
    spec = SearchSpec(size=size, model_class=model_class, require=require)
    pruned = search_models(spec)
    brute_force = search_models(with_overrides(spec, debug=True))
    assert set(pruned.canonical_forms) == set(brute_force.canonical_forms)


@pytest.mark.parametrize("size", [2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_groupoids_with_basic_laws_correspond_to_basic_algebras(size):
    groupoids = search_models(SearchSpec(size=size, require=DIVISIBILITY_LAWS))
    algebras = search_models(SearchSpec(size=size, model_class="basic"))
    assert groupoids.models_emitted == algebras.models_emitted
    for groupoid in groupoids.models:
        algebra = basic_of_groupoid(groupoid)
        validate_basic_algebra(algebra.oplus, algebra.neg, algebra.zero)
        assert groupoid_of_basic(algebra) == groupoid


@pytest.mark.parametrize("size", [2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_double_negation_and_w_give_the_same_groupoids(size):
    divisible = search_models(SearchSpec(size=size, require=DIVISIBILITY_LAWS))
    involutive = search_models(SearchSpec(size=size, require=DOUBLE_NEGATION_LAWS))
    assert set(divisible.canonical_forms) == set(involutive.canonical_forms)


def test_parallel_search_finds_the_same_models():
    spec = SearchSpec(size=4, require=("div", "dneg"))
    sequential = search_models(spec)
    parallel = search_models(with_overrides(spec, jobs=2))
    assert set(parallel.canonical_forms) == set(sequential.canonical_forms)


def test_model_limit_stops_search():
    result = search_models(SearchSpec(size=4, max_models=1))
    assert result.models_emitted == 1
    assert not result.exhausted


def test_fixed_poset_mode():
    poset = validate_finite_poset(CHAIN3_LEQ)
    result = search_models(SearchSpec(size=3, require=("div",), poset=poset))
    assert result.posets_tried == 1
    assert result.spec.mode == "fixed-poset"
    assert result.models_emitted >= 2


def test_time_budget_raises_with_partial_result():
    with pytest.raises(TimeBudgetExceeded) as error:
        search_models(SearchSpec(size=6, time_budget_seconds=0))
    partial = error.value.partial_result
    assert partial.budget_exceeded
    assert not partial.exhausted


@pytest.mark.parametrize(
    "spec, error_type",
    [
        (SearchSpec(size=9), SizeOutOfRange),
        (SearchSpec(size=5, debug=True), SizeOutOfRange),
        (SearchSpec(size=3, require=("nosuch",)), UnknownLaw),
        (SearchSpec(size=3, model_class="ortho"), StructureError),
        (SearchSpec(size=3, jobs=0), StructureError),
    ],
)
def test_invalid_search_specs(spec, error_type):
    with pytest.raises(error_type):
        search_models(spec)


def test_column_candidates_of_chain():
    poset = validate_finite_poset(CHAIN3_LEQ)
    top_column = column_candidates(poset, 2)
    assert len(top_column) == 1
    assert top_column[0][0].tolist() == [0, 1, 2]
    for image, quotient in column_candidates(poset, 1):
        assert image[2] == 1
        assert quotient[2] == 2


@pytest.mark.parametrize("file_name", ["l3.basic", "l4.basic", "boolean4.basic", "mo2.basic"])
def test_mv_cross_check(file_name):
    assert all(mv_cross_check(fixture(file_name)).values())


def test_load_search_spec(tmp_path):
    spec_file = tmp_path / "search.spec"
    spec_file.write_text(
        "# 3원소 MV 탐색\n"
        "size = 3\n"
        "class = basic\n"
        "require = comm_oplus, assoc_oplus\n"
        "limit = 5\n"
        "budget = 30\n"
        "debug = no\n",
        encoding="utf-8",
    )
    spec = load_search_spec(spec_file)
    assert spec == SearchSpec(
        size=3,
        model_class="basic",
        require=("comm_oplus", "assoc_oplus"),
        max_models=5,
        time_budget_seconds=30.0,
        debug=False,
    )


def test_search_spec_with_poset_takes_its_size(tmp_path):
    spec_file = tmp_path / "pentagon.spec"
    spec_file.write_text(f"poset = {BUNDLED_FIXTURE_DIRECTORY / 'pentagon.lattice'}\n", encoding="utf-8")
    spec = load_search_spec(spec_file)
    assert spec.size == 5
    assert spec.mode == "fixed-poset"


def test_search_spec_unknown_key(tmp_path):
    spec_file = tmp_path / "bad.spec"
    spec_file.write_text("size = 3\ncolour = red\n", encoding="utf-8")
    with pytest.raises(ModelFileParseError) as error:
        load_search_spec(spec_file)
    assert error.value.line == 2


def test_write_search_results(tmp_path):
    result = search_models(SearchSpec(size=3, model_class="basic"))
    written = write_search_results(result, tmp_path / "out")
    assert [path.name for path in written] == ["model_001.basic"]
    assert load_model(written[0]) == result.models[0]

    summary = pd.read_csv(tmp_path / "out" / "summary.csv")
    assert summary.loc[0, "models_emitted"] == 1
    assert summary.loc[0, "class"] == "basic"
    index = pd.read_csv(tmp_path / "out" / "models.csv")
    assert index.loc[0, "canonical_form"] == result.canonical_forms[0].hex()


def test_summary_frame_columns():
    frame = search_summary_frame(search_models(SearchSpec(size=2)))
    assert list(frame.columns) == [
        "size",
        "class",
        "mode",
        "require",
        "forbid",
        "posets_tried",
        "partial_tables_pruned",
        "models_emitted",
        "exhausted",
        "elapsed_seconds",
    ]


def test_overrides_skip_missing_values():
    spec = SearchSpec(size=4, require=("div",))
    assert with_overrides(spec, size=None, jobs=3) == SearchSpec(size=4, require=("div",), jobs=3)


@pytest.mark.slow
def test_counterexample_is_found_by_divisibility_search():
    counterexample = fixture("counterexample8.lrpg")
    result = search_models(SearchSpec(size=8, require=("div", "dneg"), forbid=("jk",)))
    assert result.spec.mode == "enumerate-posets"
    assert result.exhausted
    assert result.elapsed_seconds < DEFAULT_SEARCH_TIME_BUDGET_SECONDS
    assert canonical_form(counterexample) in result.canonical_forms


@pytest.mark.parametrize("size", [2, 3, 4, 5])
def test_mv_cross_check_on_every_basic_algebra(size):
    for algebra in search_models(SearchSpec(size=size, model_class="basic")).models:
        assert all(mv_cross_check(algebra).values()), algebra.oplus.tolist()


def test_parallel_search_models_are_read_only():
    result = search_models(SearchSpec(size=4, require=("div", "dneg"), jobs=2))
    assert result.models_emitted >= 1
    for model in result.models:
        assert not model.mult.flags.writeable
        assert not model.res.flags.writeable
        assert not model.poset.leq.flags.writeable


def test_unpickled_model_stays_read_only():
    restored = pickle.loads(pickle.dumps(fixture("counterexample8.lrpg")))
    assert restored == fixture("counterexample8.lrpg")
    assert not restored.mult.flags.writeable
    assert not restored.poset.leq.flags.writeable
