"""Riemann-Roch dimensions for divisors supported on the totally ramified places.

For ``D = sum a_i Q_i`` the space ``L(D)`` splits as a direct sum over the
powers ``y^k`` (``0 <= k < p^n``), and each summand is a Riemann-Roch space of
the rational function field.  That gives the closed dimension formula used by
:func:`rr_dimension`; the gap and multi-place membership oracles below are
built on it alone and never touch the closed-form gap descriptions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .arith import mod_inverse
from .errors import (
    DegreeNotOne,
    DuplicatePlace,
    IndexOutOfRange,
    NonPositive,
    OracleInconsistency,
)
from .model import FieldSpec

CoeffVector = Mapping[int, int] | Iterable[tuple[int, int]]


def _normalize(spec: FieldSpec, coeffs: CoeffVector) -> dict[int, int]:
    items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
    out: dict[int, int] = {}
    for l, a in items:
        if l in out:
            raise DuplicatePlace(f"place {l} listed twice")
        spec.check_I(l)
        out[l] = int(a)
    return out


def _aligned(spec: FieldSpec, coeffs: CoeffVector) -> tuple[int, ...]:
    c = _normalize(spec, coeffs)
    return tuple(c.get(i, 0) for i in spec.I)


@lru_cache(maxsize=1 << 18)
def _dim(q: int, nd: tuple[tuple[int, int], ...], a: tuple[int, ...]) -> int:
    total = 0
    for k in range(q):
        s = 1
        for (ni, di), ai in zip(nd, a):
            s += ((ai - k * ni) // q) * di
        if s > 0:
            total += s
    return total


def _nd(spec: FieldSpec) -> tuple[tuple[int, int], ...]:
    return tuple((spec.n_i(i), spec.d_i(i)) for i in spec.I)


def rr_dimension(spec: FieldSpec, coeffs: CoeffVector) -> int:
    """``l(sum a_i Q_i)``; places of ``I`` not listed get coefficient 0.

    >>> from wsemigroup.model import build_spec
    >>> e1 = build_spec(2, 3, [(1, 1)] * 3, [(1, 1)] * 2)
    >>> rr_dimension(e1, {1: 8})
    2
    """
    return _dim(spec.q, _nd(spec), _aligned(spec, coeffs))


@dataclass(frozen=True)
class BasisDescriptor:
    """One summand ``L(D_k) * y^k`` of the direct-sum decomposition.

    The summand consists of ``h(x) * prod p_i^{mandatory_factor[i]} /
    prod_{c_i > 0} p_i^{c_i} * y^k`` with ``deg h <= num_degree_bound``.
    """

    k: int
    denom_exp: dict[int, int]
    num_degree_bound: int
    mandatory_factor: dict[int, int]

    @property
    def dimension(self) -> int:
        return max(0, self.num_degree_bound + 1)


def rr_basis(spec: FieldSpec, coeffs: CoeffVector) -> list[BasisDescriptor]:
    a = _aligned(spec, coeffs)
    q = spec.q
    out = []
    for k in range(q):
        c = {i: (ai - k * spec.n_i(i)) // q for i, ai in zip(spec.I, a)}
        bound = sum(ci * spec.d_i(i) for i, ci in c.items())
        if bound + 1 <= 0:
            continue
        # p_0 = 1, so the place at infinity only enters through the degree bound
        mandatory = {i: max(0, -ci) for i, ci in c.items() if i != 0}
        out.append(BasisDescriptor(k, c, bound, mandatory))
    return out


def _require_degree_one(spec: FieldSpec, l: int) -> None:
    spec.check_I(l)
    if spec.d_i(l) != 1:
        raise DegreeNotOne(f"Q_{l} has degree {spec.d_i(l)}, not 1")


def is_gap(spec: FieldSpec, l: int, a: int) -> bool:
    """Single-residue gap test at ``Q_l``.

    Only the summand ``y^k`` with ``a = k n_l (mod p^n)`` can jump when the
    pole order goes from ``a - 1`` to ``a``.
    """
    _require_degree_one(spec, l)
    if a <= 0:
        raise NonPositive(f"a = {a} must be positive")
    q = spec.q
    nl = spec.n_i(l)
    k = (a * mod_inverse(nl % q, q)) % q
    s = (a - k * nl) // q
    s += sum(((-k * spec.n_i(i)) // q) * spec.d_i(i) for i in spec.I if i != l)
    return s <= -1


def gap_set_oracle(spec: FieldSpec, l: int) -> list[int]:
    """Gaps at ``Q_l`` found by scanning dimension jumps over ``1..2g-1``."""
    _require_degree_one(spec, l)
    g = spec.genus
    gaps = []
    prev = rr_dimension(spec, {l: 0})
    for a in range(1, 2 * g):
        cur = rr_dimension(spec, {l: a})
        if cur == prev:
            gaps.append(a)
        prev = cur
    if len(gaps) != g:
        raise OracleInconsistency(f"found {len(gaps)} gaps at Q_{l}, expected genus {g}")
    return gaps


def check_places(spec: FieldSpec, places: Sequence[int]) -> tuple[int, ...]:
    places = tuple(places)
    if len(set(places)) != len(places):
        raise DuplicatePlace(f"places {list(places)} are not distinct")
    for l in places:
        _require_degree_one(spec, l)
    return places


def membership_multi(spec: FieldSpec, places: Sequence[int], tup: Sequence[int]) -> bool:
    """Whether ``tup`` lies in ``H(Q_l1, ..., Q_lt)`` (dimension-jump criterion)."""
    places = check_places(spec, places)
    if len(places) != len(tup):
        raise IndexOutOfRange(f"{len(places)} places but tuple of length {len(tup)}")
    if any(a < 0 for a in tup):
        raise NonPositive(f"tuple {tuple(tup)} has negative entries")
    base = dict(zip(places, tup))
    top = rr_dimension(spec, base)
    for l in places:
        lowered = dict(base)
        lowered[l] -= 1
        if rr_dimension(spec, lowered) + 1 != top:
            return False
    return True
