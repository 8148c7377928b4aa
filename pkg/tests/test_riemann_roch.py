import doctest
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wsemigroup import riemann_roch
from wsemigroup.errors import DegreeNotOne, DuplicatePlace, IndexOutOfRange, NonPositive
from wsemigroup.riemann_roch import (
    gap_set_oracle,
    is_gap,
    membership_multi,
    rr_basis,
    rr_dimension,
)
from wsemigroup.sampling import SweepConfig, random_spec

import reference_data


def test_doctests():
    assert doctest.testmod(riemann_roch).failed == 0


def test_e1_small_dimensions(E1):
    # gaps at Q_1 are 1..7, so l(a Q_1) = 1 for a < 8
    assert [rr_dimension(E1, {1: a}) for a in range(9)] == [1] * 8 + [2]
    assert rr_dimension(E1, {}) == 1
    assert rr_dimension(E1, {1: -1}) == 0


def test_e1_basis_descriptor(E1):
    basis = rr_basis(E1, {1: 8})
    assert [(b.k, b.num_degree_bound, b.dimension) for b in basis] == [(0, 1, 2)]
    assert basis[0].denom_exp == {1: 1, 2: 0, 3: 0}


@settings(max_examples=80, deadline=None)
@given(st.randoms(use_true_random=False), st.integers(-20, 60))
def test_basis_dimension_sum(rng, a):
    spec = random_spec(rng, SweepConfig(max_q=9))
    coeffs = {i: a + rng.randint(-5, 5) for i in spec.I}
    assert sum(b.dimension for b in rr_basis(spec, coeffs)) == rr_dimension(spec, coeffs)


@settings(max_examples=80, deadline=None)
@given(st.randoms(use_true_random=False))
def test_dimension_is_monotone_with_unit_steps(rng):
    spec = random_spec(rng, SweepConfig(max_q=9))
    l = rng.choice(spec.I)
    base = {i: rng.randint(-3, 15) for i in spec.I}
    bumped = {**base, l: base[l] + 1}
    diff = rr_dimension(spec, bumped) - rr_dimension(spec, base)
    assert 0 <= diff <= spec.d_i(l)


def test_gap_oracle_matches_reference(E1, E2):
    assert set(gap_set_oracle(E1, 2)) == reference_data.E1_GAPS
    assert set(gap_set_oracle(E2, 0)) == reference_data.E2_GAPS_INF
    assert set(gap_set_oracle(E2, 3)) == reference_data.E2_GAPS_L


def test_is_gap_agrees_with_scan(E2):
    for l in E2.I:
        assert {a for a in range(1, 40) if is_gap(E2, l, a)} == set(gap_set_oracle(E2, l))


def test_membership_multi(E1):
    assert membership_multi(E1, [1, 2], (1, 9))
    assert membership_multi(E1, [1, 2], (0, 0))
    assert not membership_multi(E1, [1, 2], (1, 1))


def test_errors(E1):
    with pytest.raises(DuplicatePlace):
        rr_dimension(E1, [(1, 2), (1, 3)])
    with pytest.raises(IndexOutOfRange):
        rr_dimension(E1, {7: 1})
    with pytest.raises(NonPositive):
        is_gap(E1, 1, 0)
    with pytest.raises(IndexOutOfRange):
        membership_multi(E1, [1, 2], (1,))
    spec = random_spec(random.Random(3), SweepConfig(max_pole_degree=1))
    wide = type(spec)(spec.p, spec.n, spec.pole_data + ((1, 2),), spec.zero_data + ((1, 2),))
    with pytest.raises(DegreeNotOne):
        gap_set_oracle(wide, max(wide.I))
