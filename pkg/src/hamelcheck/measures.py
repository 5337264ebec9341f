"""Atomic signed measures as lazy expression trees with exact pointwise
atom-mass evaluation.

Closure nodes have infinite support, so measures are never materialized;
every query is a finite representation count, bounded through per-symbol
lower bounds on each subtree's support.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import functions
from .basis import Point, Scalar, Symbol, check_increment, is_positive_increment, unit
from .errors import InvalidIncrement, NonTerminatingJ

_ZERO = Fraction(0)

# Optional (node, point) -> Fraction memo, shared across queries by the
# caller. Results are identical with or without it; nodes hash by
# identity, so a cache must not outlive the trees it has seen.
MassCache = dict


class MeasureExpr:
    """Base class; `support_floor` bounds every support coordinate below."""

    support_floor: Point

    def mass(self, x: Point, cache: MassCache | None = None) -> Fraction:
        return atom_mass(self, x, cache)


@dataclass(frozen=True, eq=False)
class Dirac(MeasureExpr):
    """Unit atom at a point."""

    point: Point

    def __post_init__(self) -> None:
        object.__setattr__(self, "support_floor", self.point)


@dataclass(frozen=True, eq=False)
class Shift(MeasureExpr):
    """Translation: mass at x taken from the inner measure at x - step."""

    inner: MeasureExpr
    step: Point

    def __post_init__(self) -> None:
        if not is_positive_increment(self.step):
            raise InvalidIncrement(f"shift step must be a positive increment: {self.step}")
        object.__setattr__(self, "support_floor", self.inner.support_floor + self.step)


@dataclass(frozen=True, eq=False)
class Sum(MeasureExpr):
    terms: tuple[MeasureExpr, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise ValueError("sum of measures needs at least one term")
        floors = [t.support_floor for t in self.terms]
        syms = {s for f in floors for s, _ in f.terms}
        low = {s: min(f.coordinate(s) for f in floors) for s in syms}
        object.__setattr__(self, "support_floor", Point(low))


@dataclass(frozen=True, eq=False)
class Scale(MeasureExpr):
    factor: Fraction
    inner: MeasureExpr

    def __post_init__(self) -> None:
        object.__setattr__(self, "factor", Fraction(self.factor))
        object.__setattr__(self, "support_floor", self.inner.support_floor)


@dataclass(frozen=True, eq=False)
class JClosure(MeasureExpr):
    """Geometric-series closure: the sum of all nonnegative-integer
    multiples of ``step`` applied as translations."""

    inner: MeasureExpr
    step: Point

    def __post_init__(self) -> None:
        if not is_positive_increment(self.step):
            raise NonTerminatingJ(
                f"closure step must be a positive increment: {self.step}"
            )
        # Support only grows upward, so the inner floor is exact.
        object.__setattr__(self, "support_floor", self.inner.support_floor)


def atom_mass(mu: MeasureExpr, x: Point, cache: MassCache | None = None) -> Fraction:
    """Exact signed mass of the atom of ``mu`` at ``x``.

    Closure nodes sum finitely many translates: along any symbol where the
    step is strictly positive, the translate count is capped by the gap
    between the query coordinate and the support floor.
    """
    if cache is None:
        return _mass(mu, x, None)
    return _mass(mu, x, cache)


def _mass(mu: MeasureExpr, x: Point, cache: MassCache | None) -> Fraction:
    if cache is not None:
        key = (mu, x)
        hit = cache.get(key)
        if hit is not None:
            return hit
    kind = type(mu)
    if kind is Dirac:
        out = Fraction(1) if x == mu.point else _ZERO
    elif kind is Shift:
        out = _mass(mu.inner, x - mu.step, cache)
    elif kind is Scale:
        out = mu.factor * _mass(mu.inner, x, cache) if mu.factor else _ZERO
    elif kind is Sum:
        out = _ZERO
        for t in mu.terms:
            out += _mass(t, x, cache)
    elif kind is JClosure:
        out = _closure_mass(mu, x, cache)
    else:
        raise TypeError(f"not a measure expression: {mu!r}")
    if cache is not None:
        cache[key] = out
    return out


def _closure_mass(mu: JClosure, x: Point, cache: MassCache | None) -> Fraction:
    step = mu.step
    floor = mu.inner.support_floor
    kmax: int | None = None
    for s, c in step.terms:
        room = x.coordinate(s) - floor.coordinate(s)
        if room < 0:
            return _ZERO
        k = int(room // c)
        if kmax is None or k < kmax:
            kmax = k
    if kmax is None:
        raise NonTerminatingJ(f"closure step has no positive coordinate: {step}")
    # Coordinates the step never touches must already clear the floor.
    for s, lo in floor.terms:
        if x.coordinate(s) < lo and not step.coordinate(s):
            return _ZERO
    for s, c in x.terms:
        if c < floor.coordinate(s) and not step.coordinate(s):
            return _ZERO
    total = _ZERO
    p = x
    for _ in range(kmax + 1):
        total += _mass(mu.inner, p, cache)
        p = p - step
    return total


def nabla(mu: MeasureExpr, hs: Sequence[Point]) -> MeasureExpr:
    """Iterated difference against the shift: fold of mu - shift(mu, h)."""
    acc = mu
    for h in hs:
        check_increment(h)
        acc = Sum((acc, Scale(Fraction(-1), Shift(acc, h))))
    return acc


def j_op(nu: MeasureExpr, hs: Sequence[Point]) -> MeasureExpr:
    """Nested closures in the given order; the first increment is outermost."""
    acc = nu
    for h in reversed(tuple(hs)):
        acc = JClosure(acc, h)
    return acc


def _unit_increments(syms: Sequence[Symbol]) -> list[Point]:
    if len(set(syms)) != len(syms):
        raise ValueError("basis symbols must be distinct")
    pts = [unit(s) for s in syms]
    for p in pts:
        check_increment(p)
    return pts


def build_mu_i(i: int, syms: Sequence[Symbol]) -> MeasureExpr:
    """Closure of the unit atom at the i-th symbol (1-based) over all of
    the given symbols."""
    if not 1 <= i <= len(syms):
        raise ValueError(f"index {i} out of range 1..{len(syms)}")
    pts = _unit_increments(syms)
    return j_op(Dirac(pts[i - 1]), pts)


def build_mu(syms: Sequence[Symbol]) -> MeasureExpr:
    """Signed combination: the closures of atoms 2..n+1 minus the first."""
    mus = [build_mu_i(i, syms) for i in range(1, len(syms) + 1)]
    return Sum(tuple(mus[1:]) + (Scale(Fraction(-1), mus[0]),))


@dataclass(frozen=True)
class ASets:
    """The 0/1-combination evaluation sets: one per symbol plus the union."""

    sets: tuple[frozenset[Point], ...]
    union: frozenset[Point]


def build_a_sets(syms: Sequence[Symbol]) -> ASets:
    """Enumerate, for each symbol, its unit point plus every 0/1
    combination of the others, and the union over all symbols."""
    pts = _unit_increments(syms)
    parts: list[frozenset[Point]] = []
    for i, base in enumerate(pts):
        others = pts[:i] + pts[i + 1:]
        members = set()
        for mask in range(1 << len(others)):
            p = base
            for j, q in enumerate(others):
                if mask >> j & 1:
                    p = p + q
            members.add(p)
        parts.append(frozenset(members))
    return ASets(tuple(parts), frozenset().union(*parts))


def measure_mass_function(mu: MeasureExpr) -> functions.MeasureMass:
    """Bridge to the function side: x -> atom mass of ``mu`` at x."""
    return functions.MeasureMass(mu)


def sorted_points(points: Iterable[Point]) -> list[Point]:
    """Deterministic ordering for reports and quantified checks."""
    return sorted(points, key=lambda p: tuple((s.name, c) for s, c in p.terms))


def dirac_at(sym_or_point: Symbol | Point) -> Dirac:
    """Unit atom at a symbol's unit point or at a given point."""
    if isinstance(sym_or_point, Symbol):
        return Dirac(unit(sym_or_point))
    return Dirac(sym_or_point)


def scaled(c: Scalar, mu: MeasureExpr) -> Scale:
    return Scale(Fraction(c), mu)
