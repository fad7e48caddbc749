"""
basic-groupoid 프로젝트의 예외 클래스들을 정의하는 모듈입니다.

모든 예외는 ValueError 를 상속하며, 실패를 재현할 수 있도록
사전식으로 첫 번째인 witness 를 함께 가집니다.
"""

from typing import Any, Optional, Sequence, Tuple


class StructureError(ValueError):
    """구조 검증 실패의 공통 기반 클래스"""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class MalformedTable(StructureError):
    """연산표의 모양이나 값의 범위가 잘못된 경우"""


# 순서 구조
class NotReflexive(StructureError):
    def __init__(self, x: int):
        super().__init__(f"relation is not reflexive at {x}", (x,))


class NotAntisymmetric(StructureError):
    def __init__(self, x: int, y: int):
        super().__init__(f"relation is not antisymmetric at ({x}, {y})", (x, y))


class NotTransitive(StructureError):
    def __init__(self, x: int, y: int, z: int):
        super().__init__(
            f"relation is not transitive at ({x}, {y}, {z}): "
            f"{x} <= {y} <= {z} but not {x} <= {z}",
            (x, y, z),
        )


class BoundsViolated(StructureError):
    def __init__(self, x: int):
        super().__init__(f"element {x} is not between bottom and top", (x,))


class NoMeet(StructureError):
    def __init__(self, x: int, y: int):
        super().__init__(f"no greatest lower bound for ({x}, {y})", (x, y))


class NoJoin(StructureError):
    def __init__(self, x: int, y: int):
        super().__init__(f"no least upper bound for ({x}, {y})", (x, y))


class NotIntoSection(StructureError):
    def __init__(self, a: int, x: int):
        super().__init__(f"map on section of {a} sends {x} outside the section", (a, x))


class NotAntitone(StructureError):
    def __init__(self, a: int, x: int, y: int):
        super().__init__(
            f"map on section of {a} is not antitone at {x} <= {y}", (a, x, y)
        )


class NotInvolutive(StructureError):
    def __init__(self, a: int, x: int):
        super().__init__(f"map on section of {a} is not an involution at {x}", (a, x))


class NotOrthomodular(StructureError):
    def __init__(self, witness: Optional[Tuple[int, ...]]):
        super().__init__(f"ortholattice is not orthomodular (witness {witness})", witness)


# 대수 모델
class AxiomFailed(StructureError):
    def __init__(self, axiom: Any, assignment: dict):
        self.axiom = axiom
        super().__init__(f"axiom ({axiom}) fails at {assignment}", assignment)


class ResiduationFailed(StructureError):
    def __init__(self, x: int, y: int, z: int):
        super().__init__(
            f"left residuation law fails at x={x}, y={y}, z={z}", (x, y, z)
        )


class IdentityFailed(StructureError):
    def __init__(self, x: int):
        super().__init__(f"top is not a two-sided identity at {x}", (x,))


class NoResiduum(StructureError):
    def __init__(self, z: int, y: int):
        super().__init__(f"{{x : x*{y} <= {z}}} has no greatest element", (z, y))


class ConditionAFailed(StructureError):
    def __init__(self, x: int):
        super().__init__(f"1 -> x = x fails at x={x}", (x,))


class ConditionBFailed(StructureError):
    def __init__(self, x: int, y: int, z: int):
        super().__init__(
            f"contrapositional residuation fails at x={x}, y={y}, z={z}", (x, y, z)
        )


# 구조 변환
class DoubleNegationFails(StructureError):
    def __init__(self, x: int):
        super().__init__(f"double negation fails at {x}", (x,))


class HypothesesFailed(StructureError):
    def __init__(self, law: str, witness: Optional[dict]):
        self.law = law
        super().__init__(f"hypothesis '{law}' fails at {witness}", witness)


class ConstructionMismatch(StructureError):
    """구성 결과가 입력을 재현하지 못하는 경우 (검증기 버그 신호)"""


# 법칙 언어
class LawSyntaxError(StructureError):
    def __init__(
        self,
        message: str,
        offset: int,
        expected: Sequence[str] = (),
        line: Optional[int] = None,
    ):
        self.offset = offset
        self.expected = tuple(expected)
        self.line = line
        location = f"line {line}, " if line is not None else ""
        super().__init__(f"{message} ({location}offset {offset})", offset)


class SignatureMismatch(StructureError):
    def __init__(self, operator: str, model_class: str):
        self.operator = operator
        super().__init__(
            f"operator '{operator}' is not available on a {model_class} model", operator
        )


class UnknownLaw(StructureError):
    def __init__(self, name: str):
        super().__init__(f"unknown law '{name}'", name)


# 모델 탐색
class SizeOutOfRange(StructureError):
    def __init__(self, size: int, low: int, high: int):
        super().__init__(f"size {size} is outside the supported range {low}..{high}", size)


class ClassMismatch(StructureError):
    def __init__(self, left: str, right: str):
        super().__init__(f"cannot compare {left} with {right}", (left, right))


class TimeBudgetExceeded(StructureError):
    def __init__(self, budget_seconds: float, partial_result: Any):
        self.partial_result = partial_result
        super().__init__(
            f"search stopped after the {budget_seconds:g}s time budget", budget_seconds
        )


# 파일 입출력
class ModelFileParseError(StructureError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}", line)


# 연속체 예제
class ContinuumDomainError(StructureError):
    def __init__(self, value: Any, reason: str = "argument outside [0, 1]"):
        super().__init__(f"{reason}: {value}", value)
