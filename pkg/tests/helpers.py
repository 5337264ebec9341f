"""Shared generators for seeded randomized suites."""

from fractions import Fraction

from hamelcheck import (
    AdditiveFunctional,
    Composite,
    PositivePartPower,
    Symbol,
    Tabulated,
    point_combine,
    unit,
)


def standard_function(n):
    """Symbols h1..h(n+1), additive map -1/1/.../1, composed with t_+^n."""
    syms = [Symbol(f"h{i}", positive=True) for i in range(1, n + 2)]
    values = {syms[0]: -1}
    values.update({s: 1 for s in syms[1:]})
    a = AdditiveFunctional(values)
    return syms, a, Composite(PositivePartPower(n), a)


def random_increments(rng, units, k):
    """k positive increments: scaled units or small nonnegative combos."""
    out = []
    for _ in range(k):
        if len(units) == 1 or rng.random() < 0.6:
            out.append(rng.randint(1, 2) * rng.choice(units))
        else:
            coords = [rng.randint(0, 2) for _ in units]
            if not any(coords):
                coords[rng.randrange(len(units))] = 1
            out.append(point_combine(zip(coords, units)))
    return tuple(out)


def random_tabulated_instance(rng, max_increments=5):
    """A tabulated function holding random exact values at precisely the
    subset-sum points needed for a k-fold difference at x."""
    nsym = rng.randint(1, 3)
    units = [unit(Symbol(f"b{i + 1}", positive=True)) for i in range(nsym)]
    k = rng.randint(1, max_increments)
    hs = random_increments(rng, units, k)
    x = point_combine((rng.randint(-2, 2), u) for u in units)
    table = {}
    for mask in range(1 << k):
        p = x
        for i in range(k):
            if mask >> i & 1:
                p = p + hs[i]
        if p not in table:
            table[p] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return Tabulated(table), x, hs


def random_lattice_point(rng, units, lo=0, hi=3):
    return point_combine((rng.randint(lo, hi), u) for u in units)
