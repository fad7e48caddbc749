"""
법칙 수식 언어의 구문 트리와 pyparsing 문법을 정의하는 모듈입니다.

구문 (결합 세기 순서):
    *  곱셈(·)      /  오른쪽 나눗셈 (z/y)      \\  왼쪽 나눗셈
    +  ⊕
    -> 함의 (오른쪽 결합)
    /\\ meet,  \\/ join
    n(..) ¬,  t(..) ~,  상수 0 1,  변수는 소문자 한 글자 (+숫자)
    관계: =  <=      연결사: &  =>  <=>
연결사 안의 관계 원자는 반드시 괄호로 감싸야 합니다.
"""

import logging
import re
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Tuple, Union

import pyparsing as pp

from .errors import LawSyntaxError

# 로깅 설정
logger = logging.getLogger(__name__)

pp.ParserElement.enable_packrat()


@dataclass(frozen=True)
class Variable:
    name: str

    def render(self) -> str:
        return self.name


@dataclass(frozen=True)
class Constant:
    value: int  # 0 또는 1

    def render(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class UnaryOperation:
    operator: str  # "neg" 또는 "tilde"
    operand: "Term"

    def render(self) -> str:
        symbol = "n" if self.operator == "neg" else "t"
        return f"{symbol}({self.operand.render()})"


@dataclass(frozen=True)
class BinaryOperation:
    operator: str  # oplus, mult, rres, lres, imp, join, meet
    left: "Term"
    right: "Term"

    def render(self) -> str:
        symbol = BINARY_OPERATOR_SYMBOLS[self.operator]
        return f"({self.left.render()} {symbol} {self.right.render()})"


@dataclass(frozen=True)
class UnboundName:
    """변수도 상수도 아닌 0항 이름 (파싱 후 오류로 보고됨)"""

    name: str
    offset: int

    def render(self) -> str:
        return self.name


Term = Union[Variable, Constant, UnaryOperation, BinaryOperation, UnboundName]


@dataclass(frozen=True)
class Relation:
    relation: str  # "eq" 또는 "leq"
    left: Term
    right: Term

    def render(self) -> str:
        symbol = "=" if self.relation == "eq" else "<="
        return f"{self.left.render()} {symbol} {self.right.render()}"


@dataclass(frozen=True)
class Connective:
    connective: str  # "and", "implies", "iff"
    operands: Tuple["FormulaNode", ...]

    def render(self) -> str:
        symbol = {"and": " & ", "implies": " => ", "iff": " <=> "}[self.connective]
        return symbol.join(f"({operand.render()})" for operand in self.operands)


FormulaNode = Union[Relation, Connective]

BINARY_OPERATOR_SYMBOLS: Dict[str, str] = {
    "mult": "*",
    "rres": "/",
    "lres": "\\",
    "oplus": "+",
    "imp": "->",
    "meet": "/\\",
    "join": "\\/",
}
_SYMBOL_TO_OPERATOR = {symbol: name for name, symbol in BINARY_OPERATOR_SYMBOLS.items()}
_KNOWN_OPERATOR_CHARACTERS = set("*/\\+-<>=&()")
_VARIABLE_PATTERN = re.compile(r"[a-z][0-9]*")
_RESERVED_NAMES = frozenset({"n", "t"})


@dataclass(frozen=True)
class Formula:
    """전칭 양화된 법칙: 관계 원자를 연결사로 묶은 트리"""

    root: FormulaNode
    text: str
    name: Optional[str] = None

    @cached_property
    def variables(self) -> Tuple[str, ...]:
        """정렬된 변수 이름 (평가 격자의 축 순서)"""
        return tuple(sorted({node.name for node in iter_nodes(self.root) if isinstance(node, Variable)}))

    @cached_property
    def operators(self) -> FrozenSet[str]:
        used = set()
        for node in iter_nodes(self.root):
            if isinstance(node, (UnaryOperation, BinaryOperation)):
                used.add(node.operator)
            elif isinstance(node, Relation) and node.relation == "leq":
                used.add("leq")
        return frozenset(used)

    def __str__(self) -> str:
        return self.text


def iter_nodes(node) -> Iterator:
    """트리의 모든 노드를 전위 순회합니다."""
    yield node
    if isinstance(node, Connective):
        for operand in node.operands:
            yield from iter_nodes(operand)
    elif isinstance(node, Relation):
        yield from iter_nodes(node.left)
        yield from iter_nodes(node.right)
    elif isinstance(node, BinaryOperation):
        yield from iter_nodes(node.left)
        yield from iter_nodes(node.right)
    elif isinstance(node, UnaryOperation):
        yield from iter_nodes(node.operand)


def _make_name(text: str, offset: int, tokens: pp.ParseResults):
    name = tokens[0]
    if name in ("0", "1"):
        return Constant(int(name))
    if _VARIABLE_PATTERN.fullmatch(name) and name not in _RESERVED_NAMES:
        return Variable(name)
    return UnboundName(name, offset)


def _make_unary(tokens: pp.ParseResults):
    symbol, operand = tokens[0], tokens[1]
    return UnaryOperation("neg" if symbol == "n" else "tilde", operand)


def _fold_left(tokens: pp.ParseResults):
    items = list(tokens[0])
    node = items[0]
    for position in range(1, len(items), 2):
        node = BinaryOperation(_SYMBOL_TO_OPERATOR[items[position]], node, items[position + 1])
    return node


def _fold_right(tokens: pp.ParseResults):
    items = list(tokens[0])
    node = items[-1]
    for position in range(len(items) - 2, 0, -2):
        node = BinaryOperation(_SYMBOL_TO_OPERATOR[items[position]], items[position - 1], node)
    return node


def _make_relation(tokens: pp.ParseResults):
    left, symbol, right = tokens
    return Relation("eq" if symbol == "=" else "leq", left, right)


def _make_conjunction(tokens: pp.ParseResults):
    operands = tuple(tokens)
    if len(operands) == 1:
        return operands[0]
    return Connective("and", operands)


def _make_connective(tokens: pp.ParseResults):
    if len(tokens) == 1:
        return tokens[0]
    left, symbol, right = tokens
    return Connective("implies" if symbol == "=>" else "iff", (left, right))


def _build_grammar() -> pp.ParserElement:
    left_parenthesis, right_parenthesis = map(pp.Suppress, "()")

    term = pp.Forward()
    name = pp.Regex(r"[A-Za-z_][A-Za-z0-9_]*|[0-9]+").set_name("variable or constant")
    name.set_parse_action(_make_name)
    unary = (pp.Keyword("n") | pp.Keyword("t")) + left_parenthesis + term + right_parenthesis
    unary.set_parse_action(_make_unary)
    operand = unary | name

    multiplicative = pp.Regex(r"\*|/(?!\\)|\\(?!/)").set_name("'*', '/' or '\\'")
    term <<= pp.infix_notation(
        operand,
        [
            (multiplicative, 2, pp.OpAssoc.LEFT, _fold_left),
            (pp.Literal("+"), 2, pp.OpAssoc.LEFT, _fold_left),
            (pp.Literal("->"), 2, pp.OpAssoc.RIGHT, _fold_right),
            (pp.Literal("/\\"), 2, pp.OpAssoc.LEFT, _fold_left),
            (pp.Literal("\\/"), 2, pp.OpAssoc.LEFT, _fold_left),
        ],
    ).set_name("term")

    relation_symbol = pp.Regex(r"<=(?!>)|=(?!>)").set_name("'=' or '<='")
    relation = (term + relation_symbol + term).set_parse_action(_make_relation)

    formula = pp.Forward()
    group = left_parenthesis + formula + right_parenthesis
    conjunction = (group + pp.ZeroOrMore(pp.Suppress("&") + group)).set_parse_action(
        _make_conjunction
    )
    connective_symbol = pp.Regex(r"<=>|=>").set_name("'=>' or '<=>'")
    compound = (conjunction + pp.Optional(connective_symbol + conjunction)).set_parse_action(
        _make_connective
    )
    formula <<= relation | compound
    return formula


_FORMULA_GRAMMAR = _build_grammar()


def _byte_offset(text: str, character_offset: int) -> int:
    return len(text[:character_offset].encode("utf-8"))


def _expected_tokens(exception: pp.ParseBaseException) -> Tuple[str, ...]:
    message = str(exception.msg)
    if message.startswith("Expected "):
        message = message[len("Expected "):]
    message = message.split(", found")[0]
    return (message,)


def parse_formula(text: str, name: Optional[str] = None) -> Formula:
    """
    법칙 수식을 파싱합니다.

    Args:
        text: 수식 문자열 (예: "(x/y)*y = (y/x)*x")
        name: 카탈로그 이름 (선택)

    Returns:
        Formula: 구문 트리

    Raises:
        LawSyntaxError: 구문 오류, 알 수 없는 연산자, 묶이지 않은 0항 이름
    """
    try:
        root = _FORMULA_GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as exception:
        location = min(exception.loc, len(text))
        rest = text[location:].lstrip()
        character = rest[:1]
        if character and not character.isalnum() and character not in _KNOWN_OPERATOR_CHARACTERS:
            message = f"unknown operator '{character}'"
        elif rest.startswith("-") and not rest.startswith("->"):
            message = "unknown operator '-'"
        else:
            message = f"syntax error: {exception.msg}"
        raise LawSyntaxError(
            message, _byte_offset(text, location), _expected_tokens(exception)
        ) from None

    for node in iter_nodes(root):
        if isinstance(node, UnboundName):
            raise LawSyntaxError(
                f"unbound nullary name '{node.name}'",
                _byte_offset(text, node.offset),
                ("variable", "0", "1"),
            )
    formula = Formula(root=root, text=text.strip(), name=name)
    logger.debug(f"수식 파싱 완료: {formula.text} (변수 {formula.variables})")
    return formula


def parse_law_lines(lines: Iterable[str]) -> Dict[str, Formula]:
    """
    `name : formula` 형식의 줄들을 파싱합니다. `#` 뒤는 주석입니다.

    Raises:
        LawSyntaxError: 줄 번호(line)가 채워진 오류
    """
    laws: Dict[str, Formula] = {}
    for line_number, raw_line in enumerate(lines, start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        name, separator, text = line.partition(":")
        name = name.strip()
        if not separator or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise LawSyntaxError("expected 'name : formula'", 0, ("name",), line=line_number)
        if name in laws:
            raise LawSyntaxError(f"duplicate law name '{name}'", 0, (), line=line_number)
        try:
            laws[name] = parse_formula(text, name=name)
        except LawSyntaxError as error:
            raise LawSyntaxError(
                str(error.args[0]).rsplit(" (", 1)[0], error.offset, error.expected, line=line_number
            ) from None
    return laws


def parse_law_file(path: Path) -> Dict[str, Formula]:
    """법칙 파일을 읽어 이름 → 수식 사전을 반환합니다."""
    with open(path, "r", encoding="utf-8") as law_file:
        laws = parse_law_lines(law_file)
    logger.info(f"{path.name} 에서 {len(laws)}개의 법칙을 읽었습니다")
    return laws
