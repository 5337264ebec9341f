"""Formal basis symbols, exact lattice points, and additive functionals.

Symbols are opaque tokens assumed rationally independent; they are never
tied to real-number values, so every computation downstream is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import InvalidIncrement

# Exact rational scalar; stdlib Fraction already guarantees lowest terms
# and a positive denominator.
Rational = Fraction

Scalar = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class Symbol:
    """An abstract basis symbol with a declared (not computed) sign."""

    name: str
    positive: bool = field(default=False, compare=False)

    def __repr__(self) -> str:
        flag = "+" if self.positive else ""
        return f"Symbol({self.name}{flag})"


def symbols(names: str, positive: bool = False) -> list[Symbol]:
    """Declare several symbols at once from a whitespace-separated string."""
    return [Symbol(n, positive) for n in names.split()]


class Point:
    """Finitely supported rational coordinate vector over basis symbols.

    Canonical form: zero coefficients are dropped and terms are sorted by
    symbol, so equality and hashing are structural.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, coords: Mapping[Symbol, Scalar] | Iterable[tuple[Symbol, Scalar]] = ()):
        items = coords.items() if isinstance(coords, Mapping) else coords
        acc: dict[Symbol, Fraction] = {}
        for sym, c in items:
            q = acc.get(sym, _ZERO_Q) + Fraction(c)
            if q:
                acc[sym] = q
            elif sym in acc:
                del acc[sym]
        self._terms = tuple(sorted(acc.items()))
        self._hash = None

    @classmethod
    def _wrap(cls, terms: tuple[tuple[Symbol, Fraction], ...]) -> "Point":
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def _from_dict(cls, acc: dict[Symbol, Fraction]) -> "Point":
        return cls._wrap(tuple(sorted(acc.items())))

    @property
    def terms(self) -> tuple[tuple[Symbol, Fraction], ...]:
        return self._terms

    @property
    def support(self) -> tuple[Symbol, ...]:
        return tuple(s for s, _ in self._terms)

    def coordinate(self, sym: Symbol) -> Fraction:
        for s, c in self._terms:
            if s == sym:
                return c
        return _ZERO_Q

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "Point") -> "Point":
        if not isinstance(other, Point):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for s, c in other._terms:
            q = acc.get(s, _ZERO_Q) + c
            if q:
                acc[s] = q
            elif s in acc:
                del acc[s]
        return Point._from_dict(acc)

    def __sub__(self, other: "Point") -> "Point":
        if not isinstance(other, Point):
            return NotImplemented
        if not other._terms:
            return self
        acc = dict(self._terms)
        for s, c in other._terms:
            q = acc.get(s, _ZERO_Q) - c
            if q:
                acc[s] = q
            elif s in acc:
                del acc[s]
        return Point._from_dict(acc)

    def __neg__(self) -> "Point":
        return Point._wrap(tuple((s, -c) for s, c in self._terms))

    def __mul__(self, scalar: Scalar) -> "Point":
        q = Fraction(scalar)
        if not q:
            return ZERO
        return Point._wrap(tuple((s, c * q) for s, c in self._terms))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Point) and self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash(self._terms)
        return h

    def __iter__(self) -> Iterator[tuple[Symbol, Fraction]]:
        return iter(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for s, c in self._terms:
            mag = -c if c < 0 else c
            t = s.name if mag == 1 else f"{mag}*{s.name}"
            if not parts:
                parts.append(("-" if c < 0 else "") + t)
            else:
                parts.append(("- " if c < 0 else "+ ") + t)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Point({self})"


_ZERO_Q = Fraction(0)

#: The zero point (empty support).
ZERO = Point()


def unit(sym: Symbol) -> Point:
    """The point consisting of a single basis symbol."""
    return Point._wrap(((sym, Fraction(1)),))


def point_combine(terms: Iterable[tuple[Scalar, Point]]) -> Point:
    """Canonical linear combination of points; zero coefficients vanish."""
    acc: dict[Symbol, Fraction] = {}
    for coeff, p in terms:
        q = Fraction(coeff)
        if not q:
            continue
        for s, c in p.terms:
            v = acc.get(s, _ZERO_Q) + q * c
            if v:
                acc[s] = v
            elif s in acc:
                del acc[s]
    return Point._from_dict(acc)


def coordinate(x: Point, sym: Symbol) -> Fraction:
    """Coordinate of ``x`` at ``sym`` (zero outside the support)."""
    return x.coordinate(sym)


class AdditiveFunctional:
    """A rational-linear functional fixed by finitely many basis values.

    Symbols outside the assignment take value zero; evaluation on a point
    is the linear pairing with the point's coordinates.
    """

    __slots__ = ("_values", "_items")

    def __init__(self, values: Mapping[Symbol, Scalar] | Iterable[tuple[Symbol, Scalar]] = ()):
        items = values.items() if isinstance(values, Mapping) else values
        acc: dict[Symbol, Fraction] = {}
        for sym, v in items:
            q = Fraction(v)
            if q:
                acc[sym] = q
            else:
                acc.pop(sym, None)
        self._values = acc
        self._items = tuple(sorted(acc.items()))

    @property
    def values(self) -> tuple[tuple[Symbol, Fraction], ...]:
        return self._items

    def value_on(self, sym: Symbol) -> Fraction:
        return self._values.get(sym, _ZERO_Q)

    def __call__(self, x: Point) -> Fraction:
        total = _ZERO_Q
        get = self._values.get
        for s, c in x.terms:
            v = get(s)
            if v is not None:
                total += v if c == 1 else c * v
        return total

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AdditiveFunctional) and self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        body = ", ".join(f"{s.name}: {v}" for s, v in self._items)
        return f"AdditiveFunctional({{{body}}})"


def additive_eval(a: AdditiveFunctional, x: Point) -> Fraction:
    """Evaluate ``a`` at ``x``: the sum of coordinate * assigned value."""
    return a(x)


def is_positive_increment(p: Point) -> bool:
    """True iff ``p`` is nonzero, has only positive-declared symbols, and
    all coordinates nonnegative (hence, canonically, positive).

    Signs of mixed combinations of unvalued symbols are undecidable, so
    anything else is rejected rather than guessed.
    """
    if p.is_zero():
        return False
    return all(s.positive and c > 0 for s, c in p.terms)


def check_increment(p: Point) -> Point:
    """Validate a single increment, returning it unchanged."""
    if not is_positive_increment(p):
        raise InvalidIncrement(f"not a positive increment: {p}")
    return p
