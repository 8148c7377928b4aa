import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wsemigroup import D0, QI, RJK, Divisor, PolyP, PolyQ, WitnessExpr, YMinusBeta, build_spec
from wsemigroup.errors import (
    EmptyData,
    GcdViolation,
    IndexOutOfRange,
    NonPrimeP,
    ParameterTooLarge,
    UnsupportedPlace,
)
from wsemigroup.model import divisor_of_witness, principal_divisor, restriction
from wsemigroup.sampling import SweepConfig, random_spec


def test_e1_derived_data(E1):
    assert (E1.q, E1.n0, E1.I, E1.J, E1.m, E1.genus) == (8, -1, (1, 2, 3), (0, 1, 2), 3, 14)
    assert E1.degree_one_places() == [1, 2, 3]


def test_e2_derived_data(E2):
    assert (E2.q, E2.n0, E2.I, E2.J, E2.m, E2.genus) == (4, 3, (0, 1, 2, 3), (1, 2, 3), 6, 12)
    assert E2.n_i(0) == 3 and E2.d_i(0) == 1


def test_hermitian_like_curve():
    # y^2 + y = x^3 over F_4: the Hermitian curve of genus 1
    spec = build_spec(2, 1, [], [(3, 1)])
    assert spec.genus == 1 and spec.I == (0,)


@pytest.mark.parametrize(
    "args, exc",
    [
        ((4, 1, [(1, 1)], []), NonPrimeP),
        ((2, 1, [(2, 1)], []), GcdViolation),
        ((2, 1, [], [(2, 1)]), GcdViolation),
        ((2, 1, [], []), EmptyData),
    ],
)
def test_invalid_specs(args, exc):
    with pytest.raises(exc):
        build_spec(*args)


def test_size_cap():
    with pytest.raises(ParameterTooLarge):
        build_spec(2, 21, [(1, 1)], [])
    assert build_spec(2, 21, [(1, 1)], [], max_q=None).q == 2**21


def test_index_checks(E1):
    with pytest.raises(IndexOutOfRange):
        E1.n_i(0)
    with pytest.raises(IndexOutOfRange):
        principal_divisor(E1, YMinusBeta(9))


def test_principal_divisors_e1(E1):
    assert principal_divisor(E1, PolyP(2)) == Divisor({QI(2): 8, D0: -1})
    dq = principal_divisor(E1, PolyQ(1))
    assert dq[RJK(1, 5)] == 1 and dq[D0] == -1 and len(dq.support) == 9
    dy = principal_divisor(E1, YMinusBeta(3))
    assert dy == Divisor({RJK(0, 3): 1, RJK(1, 3): 1, RJK(2, 3): 1, QI(1): -1, QI(2): -1, QI(3): -1})


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_principal_divisors_have_degree_zero(rng):
    spec = random_spec(rng, SweepConfig(max_q=9))
    factors = [PolyP(i) for i in spec.I] + [PolyQ(j) for j in spec.J]
    factors += [YMinusBeta(k) for k in range(1, spec.q + 1)]
    for f in factors:
        assert principal_divisor(spec, f).degree(spec) == 0


def test_divisor_algebra():
    a = Divisor({QI(1): 3, D0: -1})
    b = Divisor({QI(1): -3, RJK(1, 1): 2})
    assert (a + b) == Divisor({D0: -1, RJK(1, 1): 2})
    assert a - a == Divisor() and not (a - a)
    assert (2 * a)[QI(1)] == 6
    assert a.pole_part() == Divisor({D0: 1})
    assert b.zero_part() == Divisor({RJK(1, 1): 2})
    assert repr(Divisor()) == "Divisor(0)"


def test_witness_expr_prunes_and_adds():
    w = WitnessExpr(1, {1: 0, 2: -1}, {3: 0}, 0) + WitnessExpr(2, {2: 1}, {}, 1)
    assert w == WitnessExpr(3, {}, {}, 1)


def test_ratio_has_no_q_part(E1):
    # (q-1)(y) - sum_{k>=2} (y - beta_k): the Q_i contributions cancel
    d = divisor_of_witness(E1, WitnessExpr(ratio_exp=1))
    assert all(isinstance(pl, RJK) for pl in d.support)
    assert d[RJK(1, 1)] == E1.q - 1 and d[RJK(2, 5)] == -1
    assert d.degree(E1) == 0


def test_restriction(E1):
    assert restriction(E1, Divisor({QI(1): 17, QI(2): -1})) == {1: 2, 2: -1}
    with pytest.raises(UnsupportedPlace):
        restriction(E1, Divisor({D0: 1}))
