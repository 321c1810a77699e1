"""Exception hierarchy shared by every module."""

from __future__ import annotations


class GroupError(Exception):
    """Base class for all errors raised by commprob."""


class InvalidTable(GroupError):
    pass


class NoIdentity(InvalidTable):
    def __init__(self, message: str = "table has no two-sided identity"):
        super().__init__(message)


class NoInverse(InvalidTable):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"element {index} has no two-sided inverse")


class NotAssociative(InvalidTable):
    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        a, b, c = triple
        super().__init__(f"({a}*{b})*{c} != {a}*({b}*{c})")


class CapExceeded(GroupError):
    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"group order exceeds cap {cap} (found {size} elements so far)")


class BadParameter(GroupError, ValueError):
    pass


class NotAutomorphism(GroupError):
    def __init__(self, generator: int):
        self.generator = generator
        super().__init__(f"image of generator {generator} is not an automorphism")


class RelationViolated(GroupError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"generator images do not define a homomorphism (conflict at element {element})")


class NotNormal(GroupError):
    pass


class NotNilpotentError(GroupError):
    pass


class NotAbelian(GroupError):
    pass


class Unsupported(GroupError):
    pass


class SearchBudgetExceeded(GroupError):
    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"isomorphism search exceeded node budget {budget}")


class HypothesesNotMet(GroupError):
    def __init__(self, failed: list[str]):
        self.failed = list(failed)
        super().__init__("hypotheses not met: " + "; ".join(self.failed))


class NotClass2PGroup(HypothesesNotMet):
    pass


class NotPrimeIndex(HypothesesNotMet):
    pass


class TrivialGroup(GroupError):
    pass


class UnknownRow(GroupError, KeyError):
    def __str__(self) -> str:
        return f"unknown witness row {self.args[0]!r}"


class ParseError(GroupError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
