"""Exception hierarchy. Every domain error derives from HypertoricError."""

from __future__ import annotations


class HypertoricError(ValueError):
    """Base class for validation and domain errors."""


class NotUnimodular(HypertoricError):
    def __init__(self, msg: str, indices: tuple[int, ...] = ()):
        super().__init__(msg)
        self.indices = indices


class NotSurjective(HypertoricError):
    pass


class RankDeficient(HypertoricError):
    pass


class ZeroBRow(HypertoricError):
    def __init__(self, msg: str, rows: tuple[int, ...] = ()):
        super().__init__(msg)
        self.rows = rows


class NonUnitRatio(HypertoricError):
    pass


class GroundTooLarge(HypertoricError):
    pass


class NoIntegralSolution(HypertoricError):
    pass


class OracleBoundExceeded(HypertoricError):
    pass


class BadParams(HypertoricError):
    pass


class ParseError(HypertoricError):
    def __init__(self, msg: str, line: int = 0, column: int = 0):
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + msg)
        self.line = line
        self.column = column
