import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wsemigroup.errors import (
    ConstantPolynomial,
    DivisionByZeroPoly,
    FieldMismatch,
    InvalidInput,
    NonPrimeP,
)
from wsemigroup.gf import FieldPoly, FiniteField, is_irreducible, poly_arith, poly_gcd, powmod, prime_field

from gf_oracle import monic_polys, reducible_by_search

F2 = prime_field(2)
F3 = prime_field(3)
F8 = FiniteField(2, 3, (1, 1, 0, 1))
F9 = FiniteField(3, 2, (1, 0, 1))  # x^2 + 1 is irreducible over F_3


def P(*c, F=F2):
    return FieldPoly(F, c)


def test_spec_examples():
    assert poly_gcd(P(1, 0, 1), P(1, 1)) == P(1, 1)
    assert divmod(P(1, 1, 0, 1), P(1, 1)) == (P(0, 1, 1), P(1))
    assert is_irreducible(P(1, 1, 0, 1))
    assert not is_irreducible(P(1, 0, 1))
    assert is_irreducible(FieldPoly(F8, (1, 1, 1)))


def test_powmod_frobenius_fixes_x():
    # F_2[x]/(x^3+x+1) is F_8, where every element satisfies z^8 = z
    assert powmod(P(0, 1), 8, P(1, 1, 0, 1)) == P(0, 1)
    assert powmod(P(0, 1), 4, P(1, 1, 0, 1)) == P(0, 1, 1)


def test_poly_arith_dispatch():
    a, b = P(1, 1), P(0, 1)
    assert poly_arith(a, b, "add") == P(1)
    assert poly_arith(a, b, "mul") == P(0, 1, 1)
    assert poly_arith(a, a, "gcd") == a
    assert poly_arith(b, 3, "powmod", P(1, 1, 0, 1)) == P(1, 1)
    with pytest.raises(InvalidInput):
        poly_arith(a, b, "xor")


def test_errors():
    with pytest.raises(DivisionByZeroPoly):
        divmod(P(1, 1), P())
    with pytest.raises(FieldMismatch):
        P(1, 1) + FieldPoly(F3, (1, 1))
    with pytest.raises(ConstantPolynomial):
        is_irreducible(P(1))
    with pytest.raises(InvalidInput):
        FiniteField(2, 2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2
    with pytest.raises(NonPrimeP):
        FiniteField(4, 1, (0, 1))
    assert P().degree == float("-inf")


@pytest.mark.parametrize("F, max_deg", [(F2, 6), (F3, 4), (F8, 2)])
def test_rabin_matches_exhaustive_search(F, max_deg):
    for d in range(1, max_deg + 1):
        for f in monic_polys(F, d):
            assert is_irreducible(f) == (not reducible_by_search(f)), f


def test_irreducible_counts_over_f2():
    # number of monic irreducibles of degree d over F_2
    counts = [sum(is_irreducible(f) for f in monic_polys(F2, d)) for d in range(1, 7)]
    assert counts == [2, 1, 2, 3, 6, 9]


elems = st.integers(0, 7)


@settings(max_examples=200)
@given(elems, elems, elems)
def test_field_axioms_f8(a, b, c):
    F = F8
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1


@settings(max_examples=100)
@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_field_axioms_f9(a, b, c):
    F = F9
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.sub(F.add(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1


poly8 = st.lists(st.integers(0, 7), max_size=6).map(lambda c: FieldPoly(F8, tuple(c)))


@settings(max_examples=100, deadline=None)
@given(poly8, poly8, poly8)
def test_poly_ring_identities(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    if not b.is_zero():
        qt, r = divmod(a, b)
        assert qt * b + r == a and (r.is_zero() or r.degree < b.degree)
        g = poly_gcd(a, b)
        assert (a % g).is_zero() and (b % g).is_zero()


@settings(max_examples=40, deadline=None)
@given(poly8, st.integers(0, 2**10), st.lists(st.integers(0, 7), min_size=2, max_size=4))
def test_powmod_matches_naive(a, e, mod_low):
    mod = FieldPoly(F8, tuple(mod_low) + (1,))
    naive = FieldPoly.const(F8, 1) % mod
    base = a % mod
    for _ in range(e):
        naive = (naive * base) % mod
    assert powmod(a, e, mod) == naive


def test_evaluation():
    f = FieldPoly(F8, (1, 1, 1))
    assert [z for z in F8.elements() if f(z) == 0] == []
    assert FieldPoly(F8, (2, 1))(6) == 4
