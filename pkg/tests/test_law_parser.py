import pytest

from basic_groupoid.errors import LawSyntaxError, UnknownLaw
from basic_groupoid.law_checker import catalog_law, catalog_law_names, load_law_catalog
from basic_groupoid.law_parser import (
    BinaryOperation,
    Connective,
    Constant,
    Relation,
    UnaryOperation,
    Variable,
    parse_formula,
    parse_law_lines,
)

DIVISIBILITY_TEXT = "(x/y)*y = (y/x)*x"


def test_divisibility_law_tree():
    formula = parse_formula(DIVISIBILITY_TEXT)
    assert formula.root == Relation(
        "eq",
        BinaryOperation("mult", BinaryOperation("rres", Variable("x"), Variable("y")), Variable("y")),
        BinaryOperation("mult", BinaryOperation("rres", Variable("y"), Variable("x")), Variable("x")),
    )
    assert formula.variables == ("x", "y")
    assert formula.operators == frozenset({"mult", "rres"})


def test_trivial_equation():
    formula = parse_formula("x = x")
    assert formula.root == Relation("eq", Variable("x"), Variable("x"))
    assert formula.variables == ("x",)


def test_chained_relation_is_rejected():
    with pytest.raises(LawSyntaxError):
        parse_formula("x*y <= z <=> x <= z/y")


def test_parenthesised_biconditional():
    formula = parse_formula("(x*y <= z) <=> (x <= z/y)")
    assert isinstance(formula.root, Connective)
    assert formula.root.connective == "iff"
    assert formula.operators == frozenset({"mult", "rres", "leq"})


def test_precedence_and_associativity():
    root = parse_formula("x*y + z -> y -> z = 1").root
    assert root.right == Constant(1)
    implication = root.left
    assert implication.operator == "imp"
    assert implication.left == BinaryOperation(
        "oplus", BinaryOperation("mult", Variable("x"), Variable("y")), Variable("z")
    )
    assert implication.right == BinaryOperation("imp", Variable("y"), Variable("z"))


def test_division_is_left_associative():
    root = parse_formula("x/y/z = x").root
    assert root.left == BinaryOperation(
        "rres", BinaryOperation("rres", Variable("x"), Variable("y")), Variable("z")
    )


def test_lattice_and_left_division_symbols():
    formula = parse_formula(r"(x \/ y) /\ z = x \ z")
    assert formula.operators == frozenset({"join", "meet", "lres"})


def test_negation_and_tilde():
    root = parse_formula("n(t(x)) = x").root
    assert root.left == UnaryOperation("neg", UnaryOperation("tilde", Variable("x")))


def test_numbered_variables():
    assert parse_formula("x1 + x2 = x2 + x1").variables == ("x1", "x2")


def test_unbound_name_reports_offset():
    with pytest.raises(LawSyntaxError) as error:
        parse_formula("x + foo = x")
    assert error.value.offset == 4
    assert "unbound" in str(error.value)


def test_reserved_name_is_unbound():
    with pytest.raises(LawSyntaxError):
        parse_formula("x + t = x")


def test_unknown_operator():
    with pytest.raises(LawSyntaxError) as error:
        parse_formula("x % y = x")
    assert isinstance(error.value.offset, int)


def test_law_lines_report_line_numbers():
    lines = ["# comment", "", "good : x = x", "bad : x +* y = x"]
    with pytest.raises(LawSyntaxError) as error:
        parse_law_lines(lines)
    assert error.value.line == 4


def test_duplicate_law_name():
    with pytest.raises(LawSyntaxError) as error:
        parse_law_lines(["same : x = x", "same : y = y"])
    assert error.value.line == 2


def test_law_lines_keep_names():
    laws = parse_law_lines(["refl : x <= x   # trivial"])
    assert laws["refl"].name == "refl"
    assert laws["refl"].text == "x <= x"


def test_catalog_entries():
    assert catalog_law("div").text == DIVISIBILITY_TEXT
    assert catalog_law("ba1").text == "x + 0 = x"
    assert catalog_law("jk").text == "x*y = n(n(x)/y)"
    assert catalog_law("w").text == "(x->y)->y = (y->x)->x"


def test_unknown_catalog_law():
    with pytest.raises(UnknownLaw):
        catalog_law("nosuch")


def test_catalog_is_complete():
    names = set(catalog_law_names())
    expected = {"ba1", "ba2", "ba3", "ba4", "lres", "div", "dneg", "cap", "jk", "w", "oml_quasi"}
    expected |= {f"lemma_{rule}" for rule in "abcdefghi"}
    assert expected <= names
    assert all(formula.name == name for name, formula in load_law_catalog().items())
