"""Exhaustive factor search, used as the irreducibility oracle."""

import itertools

from wsemigroup.gf import FieldPoly


def monic_polys(F, degree):
    for low in itertools.product(range(F.size), repeat=degree):
        yield FieldPoly(F, tuple(low) + (1,))


def reducible_by_search(f):
    """True iff some monic g with 1 <= deg g <= deg f / 2 divides f."""
    d = int(f.degree)
    for e in range(1, d // 2 + 1):
        for g in monic_polys(f.field, e):
            if (f % g).is_zero():
                return True
    return False


def irreducible_factor_degrees(f):
    """Degrees of the irreducible factors of ``f`` (with multiplicity), by trial division."""
    out = []
    f = f.monic()
    e = 1
    while f.degree >= 1:
        if e > f.degree // 2:
            out.append(int(f.degree))
            break
        for g in monic_polys(f.field, e):
            while (f % g).is_zero():
                out.append(e)
                f = f // g
        e += 1
    return out
