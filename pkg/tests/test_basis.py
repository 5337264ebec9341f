"""Points, additive functionals, and the exact scalar type."""

import random
from fractions import Fraction

import pytest

from hamelcheck import (
    ZERO,
    AdditiveFunctional,
    InvalidIncrement,
    Point,
    Rational,
    Symbol,
    additive_eval,
    coordinate,
    is_positive_increment,
    point_combine,
    symbols,
    unit,
)
from hamelcheck.basis import check_increment


def test_rational_is_exact_and_canonical():
    # Lowest terms, positive denominator, arbitrary precision.
    q = Rational(6, -4)
    assert (q.numerator, q.denominator) == (-3, 2)
    big = Rational(10**50, 3)
    assert big * 3 == 10**50
    assert Rational(1, 3) + Rational(1, 6) == Rational(1, 2)


def test_symbol_ordering_and_identity():
    a, b = Symbol("a", positive=True), Symbol("b")
    assert a < b
    # The positivity flag is an attribute, not part of identity.
    assert Symbol("a") == Symbol("a", positive=True)


def test_point_combine_sum():
    h1, h2 = symbols("h1 h2", positive=True)
    p = point_combine([(1, unit(h1)), (1, unit(h2))])
    assert p.coordinate(h1) == 1 and p.coordinate(h2) == 1
    assert p == unit(h1) + unit(h2)


def test_point_combine_cancellation():
    (h1,) = symbols("h1", positive=True)
    p = point_combine([(1, unit(h1)), (-1, unit(h1))])
    assert p == ZERO
    assert p.is_zero() and p.terms == ()


def test_point_combine_cube_root_square():
    # (3*cbrt2 - 2)^2 expanded by hand: 9*cbrt4 - 12*cbrt2 + 4.
    one, cbrt2, cbrt4 = symbols("one cbrt2 cbrt4", positive=True)
    p = point_combine([(9, unit(cbrt4)), (-12, unit(cbrt2)), (4, unit(one))])
    assert p.coordinate(cbrt4) == 9
    assert p.coordinate(cbrt2) == -12
    assert p.coordinate(one) == 4
    assert len(p.terms) == 3


def test_coordinate_lookup():
    h1, h2, h3 = symbols("h1 h2 h3", positive=True)
    p = unit(h1) + unit(h2)
    assert coordinate(p, h1) == 1
    assert coordinate(p, h3) == 0
    assert coordinate(ZERO, h1) == 0


def test_point_no_zero_coefficients_stored():
    h1, h2 = symbols("h1 h2")
    p = Point({h1: Fraction(0), h2: Fraction(2)})
    assert p.support == (h2,)
    q = (p - 2 * unit(h2)) + unit(h1)
    assert q.support == (h1,)


def test_point_equality_is_structural():
    h1, h2 = symbols("h1 h2")
    assert Point({h1: 1, h2: 2}) == Point([(h2, 2), (h1, 1)])
    assert hash(Point({h1: 1})) == hash(unit(h1))
    assert Point({h1: 1}) != Point({h1: 2})


def test_point_rendering():
    h1, h2 = symbols("h1 h2")
    assert str(ZERO) == "0"
    assert str(unit(h1) - unit(h2)) == "h1 - h2"
    assert str(Point({h2: Fraction(-3, 2)})) == "-3/2*h2"


def test_additive_eval_forced_value():
    # a(h2+h3+h4) = 3 for the mapping with value 1 on each of h2..h4.
    h1, h2, h3, h4 = symbols("h1 h2 h3 h4", positive=True)
    a = AdditiveFunctional({h1: -1, h2: 1, h3: 1, h4: 1})
    x = unit(h2) + unit(h3) + unit(h4)
    assert additive_eval(a, x) == 3


def test_additive_eval_cancel():
    h1, h2 = symbols("h1 h2", positive=True)
    a = AdditiveFunctional({h1: -1, h2: 1})
    assert a(unit(h1) + unit(h2)) == 0


def test_additive_eval_quadratic_argument():
    # Value at the expanded square 9*cbrt4 - 12*cbrt2 + 4*one with the
    # completion value 4 assigned directly to cbrt4.
    one, sqrt2, cbrt2, cbrt4 = symbols("one sqrt2 cbrt2 cbrt4", positive=True)
    a = AdditiveFunctional({one: -9, sqrt2: 4, cbrt4: 4})
    x = point_combine([(9, unit(cbrt4)), (-12, unit(cbrt2)), (4, unit(one))])
    assert a(x) == 0


def test_additive_eval_linearity_seeded():
    rng = random.Random(101)
    pool = symbols("a b c d e", positive=True)
    for _ in range(200):
        a = AdditiveFunctional(
            {s: Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for s in pool}
        )
        x = Point({s: Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for s in pool})
        y = Point({s: Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for s in pool})
        q = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        assert a(x + y) == a(x) + a(y)
        assert a(q * x) == q * a(x)


def test_point_combine_round_trip_seeded():
    rng = random.Random(202)
    pool = symbols("a b c d", positive=True)
    for _ in range(100):
        coords = {s: Fraction(rng.randint(-4, 4)) for s in pool}
        p = point_combine((c, unit(s)) for s, c in coords.items())
        assert all(p.coordinate(s) == c for s, c in coords.items())
        rebuilt = point_combine((c, unit(s)) for s, c in p.terms)
        assert rebuilt == p


def test_equality_is_congruence_for_combine():
    h1, h2 = symbols("h1 h2")
    p = Point({h1: 1, h2: 1})
    q = unit(h1) + unit(h2)
    assert p == q
    r1 = point_combine([(2, p), (1, unit(h1))])
    r2 = point_combine([(2, q), (1, unit(h1))])
    assert r1 == r2


def test_positive_increment_rules():
    pos, neg = Symbol("p", positive=True), Symbol("m")
    assert is_positive_increment(unit(pos))
    assert is_positive_increment(2 * unit(pos))
    assert not is_positive_increment(ZERO)
    assert not is_positive_increment(unit(neg))  # not declared positive
    assert not is_positive_increment(unit(pos) - unit(pos) * Fraction(2))  # negative coord
    with pytest.raises(InvalidIncrement):
        check_increment(unit(neg))
