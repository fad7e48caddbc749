from unittest.mock import patch

from basic_groupoid.cli import main
from basic_groupoid.configuration import BUNDLED_FIXTURE_DIRECTORY
from basic_groupoid.data_models import SearchResult, SearchSpec
from basic_groupoid.errors import TimeBudgetExceeded

COUNTEREXAMPLE_FILE = str(BUNDLED_FIXTURE_DIRECTORY / "counterexample8.lrpg")
L3_BASIC_FILE = str(BUNDLED_FIXTURE_DIRECTORY / "l3.basic")
COUNTEREXAMPLE_COVERS = "covers: 0<1 0<2 1<3 1<6 2<4 3<5 4<6 5<7 6<7"


def test_laws_lists_catalog(capsys):
    assert main(["laws"]) == 0
    output = capsys.readouterr().out
    assert "div : (x/y)*y = (y/x)*x" in output
    assert "jk : x*y = n(n(x)/y)" in output


def test_validate_counterexample(capsys):
    assert main(["validate", COUNTEREXAMPLE_FILE]) == 0
    output = capsys.readouterr().out
    assert "valid lrpg model, size 8" in output
    assert COUNTEREXAMPLE_COVERS in output
    assert "negation: 7 6 5 3 4 2 1 0" in output


def test_validate_with_lemma_table(capsys):
    assert main(["validate", COUNTEREXAMPLE_FILE, "--lemmas"]) == 0
    output = capsys.readouterr().out
    assert "rule" in output
    assert "False" not in output


def test_validate_benzene_ring(capsys):
    assert main(["validate", str(BUNDLED_FIXTURE_DIRECTORY / "o6.ortho")]) == 0
    captured = capsys.readouterr()
    assert "orthomodular: False" in captured.out
    assert "(1, 2)" in captured.err


def test_validate_parse_error(tmp_path, capsys):
    broken = tmp_path / "broken.basic"
    broken.write_text("class basic\nsize 2\noplus\n0 1\n1\nneg\n1 0\n", encoding="utf-8")
    assert main(["validate", str(broken)]) == 1
    assert "line 5" in capsys.readouterr().err


def test_validate_missing_file(tmp_path):
    assert main(["validate", str(tmp_path / "missing.lrpg")]) == 2


def test_validate_invalid_model(tmp_path, capsys):
    model_file = tmp_path / "a_of_counterexample.basic"
    assert main(["construct", "a-of-g", COUNTEREXAMPLE_FILE, "-o", str(model_file)]) == 0
    assert main(["validate", str(model_file)]) == 1
    assert "invalid: AxiomFailed" in capsys.readouterr().out


def test_check_reports_counterexample(capsys):
    assert main(["check", COUNTEREXAMPLE_FILE, "--law", "div", "jk"]) == 1
    captured = capsys.readouterr()
    assert "div: holds" in captured.out
    assert "jk: fails" in captured.out
    assert "jk: counterexample x=1, y=3" in captured.err


def test_check_formula_holds(capsys):
    assert main(["check", L3_BASIC_FILE, "--formula", "x + y = y + x"]) == 0
    assert "formula: holds" in capsys.readouterr().out


def test_check_raw_model(tmp_path, capsys):
    model_file = tmp_path / "a_of_counterexample.basic"
    main(["construct", "a-of-g", COUNTEREXAMPLE_FILE, "-o", str(model_file)])
    assert main(["check", str(model_file), "--raw", "--law", "ba1", "ba3"]) == 1
    assert "ba3: counterexample x=1, y=2" in capsys.readouterr().err


def test_check_usage_errors():
    assert main(["check", COUNTEREXAMPLE_FILE, "--law", "nosuch"]) == 2
    assert main(["check", COUNTEREXAMPLE_FILE, "--formula", "x + foo = x"]) == 2
    pentagon = str(BUNDLED_FIXTURE_DIRECTORY / "pentagon.lattice")
    assert main(["check", pentagon, "--formula", "x + y = y + x"]) == 2
    assert main(["check", COUNTEREXAMPLE_FILE]) == 2


def test_construct_writes_to_stdout(capsys):
    assert main(["construct", "a-of-g", COUNTEREXAMPLE_FILE]) == 0
    assert capsys.readouterr().out.startswith("class basic\nsize 8\noplus\n")


def test_construct_groupoid_of_l3(tmp_path):
    output = tmp_path / "l3.lrpg"
    assert main(["construct", "g-of-a", L3_BASIC_FILE, "-o", str(output)]) == 0
    expected = (BUNDLED_FIXTURE_DIRECTORY / "l3.lrpg").read_text(encoding="utf-8")
    assert output.read_text(encoding="utf-8") == expected


def test_construct_wrong_input_class():
    assert main(["construct", "g-of-a", COUNTEREXAMPLE_FILE]) == 2


def test_roundtrip_counterexample_fails_hypotheses(capsys):
    assert main(["roundtrip", COUNTEREXAMPLE_FILE]) == 1
    assert "hypotheses fail: jk" in capsys.readouterr().out


def test_roundtrip_l3(capsys):
    assert main(["roundtrip", L3_BASIC_FILE]) == 0
    assert "source class" in capsys.readouterr().out


def test_search_three_element_basic(tmp_path, capsys):
    output = tmp_path / "search"
    assert main(["search", "--size", "3", "--class", "basic", "-o", str(output)]) == 0
    assert "models emitted       : 1" in capsys.readouterr().out
    assert (output / "model_001.basic").exists()
    assert (output / "summary.csv").exists()


def test_search_from_spec_file(tmp_path, capsys):
    spec_file = tmp_path / "search.spec"
    spec_file.write_text("size = 2\nrequire = div, jk\n", encoding="utf-8")
    assert main(["search", "--spec", str(spec_file)]) == 0
    assert "require=div,jk" in capsys.readouterr().out


def test_search_usage_errors():
    assert main(["search"]) == 2
    assert main(["search", "--size", "9"]) == 2
    assert main(["search", "--size", "3", "--require", "nosuch"]) == 2


@patch("basic_groupoid.cli.search_models")
def test_search_budget_exceeded(mock_search_models, capsys):
    spec = SearchSpec(size=6, time_budget_seconds=1.0)
    partial = SearchResult(spec, (), (), 1, 0, False, budget_exceeded=True)
    mock_search_models.side_effect = TimeBudgetExceeded(1.0, partial)
    assert main(["search", "--size", "6", "--budget", "1"]) == 3
    captured = capsys.readouterr()
    assert "time budget" in captured.err
    assert "exhausted            : False" in captured.out


def test_continuum_witness(tmp_path, capsys):
    chart = tmp_path / "continuum.png"
    assert main(["continuum", "--x", "0.8", "--step", "0.05", "--chart", str(chart)]) == 0
    output = capsys.readouterr().out
    assert "y = 1 - ¬x        : 0.400000" in output
    assert "certificate       : valid" in output
    assert chart.exists()


def test_continuum_rejects_endpoint():
    assert main(["continuum", "--x", "1"]) == 2


def test_unknown_command():
    assert main(["frobnicate"]) == 2
