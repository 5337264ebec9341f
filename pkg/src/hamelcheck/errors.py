"""Exception types shared across the package."""

from __future__ import annotations


class HamelcheckError(Exception):
    """Base class for all package-specific errors."""


class InvalidIncrement(HamelcheckError, ValueError):
    """An increment is zero, has a negative coordinate, or uses a symbol
    not declared positive."""


class UntabulatedPoint(HamelcheckError, LookupError):
    """A tabulated function was queried outside its table; the scenario
    definition is incomplete."""

    def __init__(self, point: object):
        super().__init__(f"no tabulated value at {point}")
        self.point = point


class NonTerminatingJ(HamelcheckError, ValueError):
    """A closure increment has no strictly positive coordinate, so the
    geometric-series sum would not terminate."""


class EvenOrder(HamelcheckError, ValueError):
    """An even order was supplied where only odd orders are verified."""


class UnknownCandidate(HamelcheckError, ValueError):
    """No documented probe candidate with the requested id."""


class DefinitionError(HamelcheckError):
    """Problem in a scenario definition file."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", col {column}"
            loc += ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column


class ParseError(DefinitionError):
    """Definition file text does not match the grammar."""


class UnknownSymbol(DefinitionError):
    """A definition file refers to an undeclared name."""
