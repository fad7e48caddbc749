import pytest

from basic_groupoid.canonical_form import relabel_model
from basic_groupoid.configuration import BUNDLED_FIXTURE_DIRECTORY
from basic_groupoid.data_models import BasicAlgebraModel, LeftResiduatedGroupoid
from basic_groupoid.errors import AxiomFailed, ModelFileParseError, StructureError
from basic_groupoid.model_file_io import (
    dump_model,
    format_model,
    load_model,
    load_poset,
    parse_model,
    parse_model_text,
)
from basic_groupoid.structure_converter import basic_of_groupoid

L2_BASIC_TEXT = "class basic\nsize 2\noplus\n0 1\n1 1\nneg\n1 0\n"
COUNTEREXAMPLE_FILE = BUNDLED_FIXTURE_DIRECTORY / "counterexample8.lrpg"


def test_counterexample_loads():
    counterexample = load_model(COUNTEREXAMPLE_FILE)
    assert isinstance(counterexample, LeftResiduatedGroupoid)
    assert counterexample.size == 8
    assert (counterexample.poset.bottom, counterexample.poset.top) == (0, 7)


def test_parse_text_with_comments():
    text = "# 두 원소 Boolean\nclass basic\nsize 2\noplus   # x ⊕ y\n0 1\n1 1\n\nneg\n1 0\n"
    model_class, size, sections = parse_model_text(text)
    assert (model_class, size) == ("basic", 2)
    assert sections["neg"].tolist() == [1, 0]
    assert parse_model(text) == parse_model(L2_BASIC_TEXT)


def test_dropped_row_is_a_parse_error():
    lines = COUNTEREXAMPLE_FILE.read_text(encoding="utf-8").splitlines()
    del lines[lines.index("mult") + 1]
    with pytest.raises(ModelFileParseError) as error:
        parse_model("\n".join(lines))
    assert error.value.line == 19


@pytest.mark.parametrize(
    "text, line",
    [
        ("class ring\nsize 2\n", 1),
        ("class basic\nsize two\n", 2),
        ("class basic\nsize 2\noplus\n0 1\n1\nneg\n1 0\n", 5),
        ("class basic\nsize 2\noplus\n0 1\n1 1\nneg\n1 2\n", 6),
        ("class basic\nsize 2\nplus\n0 1\n1 1\n", 3),
        ("class basic\nsize 2\noplus\n0 1\n1 1\n", 0),
        ("class basic\nsize 2\noplus\n0 1\n1 1\nneg\n1 0\nperp\n1 0\n", 0),
        ("class lattice\nsize 2\nleq\n1 2\n0 1\n", 3),
    ],
)
def test_parse_errors_report_line(text, line):
    with pytest.raises(ModelFileParseError) as error:
        parse_model_text(text)
    assert error.value.line == line


def test_involutions_need_one_map_section():
    text = "class involutions\nsize 2\nleq\n1 1\n0 1\n"
    with pytest.raises(ModelFileParseError):
        parse_model_text(text)


def test_validation_errors_pass_through(tmp_path):
    candidate = basic_of_groupoid(load_model(COUNTEREXAMPLE_FILE))
    model_file = dump_model(candidate, tmp_path / "a_of_counterexample.basic")
    with pytest.raises(AxiomFailed):
        load_model(model_file)
    assert load_model(model_file, raw=True) == candidate


def test_raw_groupoid_skips_residuation(tmp_path):
    text = COUNTEREXAMPLE_FILE.read_text(encoding="utf-8")
    lines = text.splitlines()
    row = lines.index("mult") + 4
    values = lines[row].split()
    values[2] = "7"
    lines[row] = " ".join(values)
    with pytest.raises(StructureError):
        parse_model("\n".join(lines))
    assert isinstance(parse_model("\n".join(lines), raw=True), LeftResiduatedGroupoid)


def test_l2_dump_text(tmp_path):
    model_file = dump_model(load_model(BUNDLED_FIXTURE_DIRECTORY / "l2.basic"), tmp_path / "l2.basic")
    assert model_file.read_text(encoding="utf-8") == L2_BASIC_TEXT


@pytest.mark.parametrize("model_file", sorted(BUNDLED_FIXTURE_DIRECTORY.iterdir()), ids=lambda path: path.name)
def test_fixtures_are_in_canonical_format(model_file):
    assert format_model(load_model(model_file)) == model_file.read_text(encoding="utf-8")


def test_dump_creates_parent_directories(tmp_path):
    counterexample = load_model(COUNTEREXAMPLE_FILE)
    model_file = dump_model(counterexample, tmp_path / "nested" / "models" / "counterexample8.lrpg")
    assert load_model(model_file) == counterexample


def test_basic_files_fix_zero_at_index_zero():
    reversed_l3 = relabel_model(load_model(BUNDLED_FIXTURE_DIRECTORY / "l3.basic"), [2, 1, 0])
    assert isinstance(reversed_l3, BasicAlgebraModel)
    assert reversed_l3.zero == 2
    with pytest.raises(StructureError):
        format_model(reversed_l3)


def test_load_poset_from_any_class():
    assert load_poset(BUNDLED_FIXTURE_DIRECTORY / "l3.basic").leq.tolist() == [
        [True, True, True],
        [False, True, True],
        [False, False, True],
    ]
    assert load_poset(COUNTEREXAMPLE_FILE) == load_model(COUNTEREXAMPLE_FILE).poset
    assert load_poset(BUNDLED_FIXTURE_DIRECTORY / "pentagon.lattice").size == 5
