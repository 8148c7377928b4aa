"""Minimal generating sets of Weierstrass semigroups at several places.

``gamma`` gives Gamma(Q_l1, ..., Q_lt) in closed form together with explicit
witness functions; ``gamma_oracle`` recomputes the same set from
Riemann-Roch dimensions only.  ``tilde_gamma``, ``lub`` and
``closure_membership`` rebuild the full semigroup H(Q_l1, ..., Q_lt) from the
Gamma sets of all sub-families.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .arith import ceil_div, floor_div
from .errors import (
    BudgetExceeded,
    EmptyInput,
    FieldTooSmall,
    IndexOutOfRange,
    NotInGamma,
    TooFewPlaces,
    TooManyPlaces,
)
from .model import FieldSpec, WitnessExpr
from .riemann_roch import _dim, _nd, check_places, gap_set_oracle, membership_multi
from .single_place import LambdaArg, gap_set, j_upper, resolve_lambda

DEFAULT_ORACLE_BUDGET = 10**7


@dataclass(frozen=True, order=True)
class GammaTuple:
    values: tuple[int, ...]
    i: int
    j_vec: tuple[int, ...]
    lam: int


@dataclass(frozen=True)
class GammaSet:
    places: tuple[int, ...]
    lam: int
    tuples: tuple[GammaTuple, ...]

    def values(self) -> set[tuple[int, ...]]:
        return {gt.values for gt in self.tuples}

    def __len__(self):
        return len(self.tuples)

    def __iter__(self):
        return iter(self.tuples)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _check_family(spec: FieldSpec, places: Sequence[int], field_size: int | None) -> tuple[int, ...]:
    places = check_places(spec, places)
    t = len(places)
    if t < 2:
        raise TooFewPlaces(f"need at least 2 places, got {t}")
    if t > len(spec.I):
        raise TooManyPlaces(f"{t} places but |I| = {len(spec.I)}")
    if field_size is not None and field_size < t:
        raise FieldTooSmall(f"|K| = {field_size} < t = {t}")
    return places


def _row_data(spec: FieldSpec, places: tuple[int, ...], i: int, lam: int):
    """Lower bounds on ``j_k`` and the prescribed ``sum j_k`` for one ``i``."""
    q = spec.q
    scaled = [i * lam * spec.n_i(l) for l in places]
    lows = [ceil_div(s, q) for s in scaled]
    total = j_upper(spec, i, lam) + sum(floor_div(s, q) for s in scaled)
    return scaled, lows, total


def gamma(
    spec: FieldSpec,
    places: Sequence[int],
    lam: LambdaArg = -1,
    *,
    field_size: int | None = None,
) -> GammaSet:
    """Closed-form Gamma set.

    ``lam="inverse"`` uses the inverse of ``-n_{l_1}`` modulo ``p^n``.
    ``field_size`` is ``|K|`` when known; at most ``|K|`` places are allowed.
    """
    places = _check_family(spec, places, field_size)
    lam = resolve_lambda(spec, places[0], lam)
    q, t = spec.q, len(places)
    out = []
    for i in range(1, q):
        scaled, lows, total = _row_data(spec, places, i, lam)
        slack = total - sum(lows)
        if slack < 0:
            continue
        for extra in _compositions(slack, t):
            js = tuple(lo + e for lo, e in zip(lows, extra))
            vals = tuple(j * q - s for j, s in zip(js, scaled))
            if min(vals) > 0:
                out.append(GammaTuple(vals, i, js, lam))
    out.sort()
    return GammaSet(places, lam, tuple(out))


def gamma_witness(spec: FieldSpec, places: Sequence[int], gt: GammaTuple) -> WitnessExpr:
    """Factored function whose pole divisor is ``sum values[k] * Q_{l_k}``."""
    places = check_places(spec, places)
    q, i, lam = spec.q, gt.i, gt.lam
    if len(gt.values) != len(places) or len(gt.j_vec) != len(places):
        raise IndexOutOfRange("tuple length does not match the number of places")
    if not 1 <= i <= q - 1:
        raise NotInGamma(f"i = {i} outside 1..{q - 1}")
    scaled, lows, total = _row_data(spec, places, i, lam)
    ok = (
        all(j >= lo for j, lo in zip(gt.j_vec, lows))
        and sum(gt.j_vec) == total
        and all(v == j * q - s for v, j, s in zip(gt.values, gt.j_vec, scaled))
        and min(gt.values) > 0
    )
    if not ok:
        raise NotInGamma(f"{gt.values} (i={i}, j={gt.j_vec}, lambda={lam}) is not in Gamma")

    c = ceil_div(i * lam, q)
    p_exp = {l: -j for l, j in zip(places, gt.j_vec)}
    for k in spec.I:
        if k not in p_exp:
            p_exp[k] = -floor_div(i * lam * spec.n_i(k), q)
    q_exp = {k: spec.m_j(k) * c for k in spec.J}
    return WitnessExpr(y_exp=-i * lam, p_exp=p_exp, q_exp=q_exp, ratio_exp=c)


def _dim_fn(spec: FieldSpec, places: tuple[int, ...]):
    pos = [spec.I.index(l) for l in places]
    nd, q, width = _nd(spec), spec.q, len(spec.I)

    def dim(vec: Sequence[int]) -> int:
        a = [0] * width
        for p_, v in zip(pos, vec):
            a[p_] = v
        return _dim(q, nd, tuple(a))

    return dim


def gamma_oracle(
    spec: FieldSpec,
    places: Sequence[int],
    *,
    budget: int | None = DEFAULT_ORACLE_BUDGET,
) -> set[tuple[int, ...]]:
    """Gamma from dimension counts alone.

    Candidates are restricted to products of single-place gaps; a candidate
    is kept when it lies in the semigroup and, for every pair of chosen
    places ``P, Q``, ``l(A) - 1 = l(A - P) = l(A - Q) = l(A - P - Q)``.
    """
    places = _check_family(spec, places, None)
    t = len(places)
    if budget is not None and spec.genus**t > budget:
        raise BudgetExceeded(f"g^t = {spec.genus}^{t} exceeds budget {budget}")
    gaps = [gap_set_oracle(spec, l) for l in places]
    dim = _dim_fn(spec, places)
    unit = [tuple(int(k == r) for k in range(t)) for r in range(t)]

    def minus(a, *rows):
        return tuple(x - sum(u[c] for u in rows) for c, x in enumerate(a))

    out = set()
    for a in itertools.product(*gaps):
        top = dim(a)
        if any(dim(minus(a, e)) != top - 1 for e in unit):
            continue  # not in H
        if all(
            dim(minus(a, unit[r1])) == dim(minus(a, unit[r1], unit[r2]))
            and dim(minus(a, unit[r2])) == dim(minus(a, unit[r1], unit[r2]))
            for r1, r2 in itertools.combinations(range(t), 2)
        ):
            out.add(a)
    return out


def lub(tuples: Sequence[Sequence[int]]) -> tuple[int, ...]:
    if not tuples:
        raise EmptyInput("lub of an empty family")
    width = len(tuples[0])
    if any(len(u) != width for u in tuples):
        raise IndexOutOfRange("tuples have different lengths")
    return tuple(max(col) for col in zip(*tuples))


def _frobenius_or_minus_one(spec: FieldSpec, l: int) -> int:
    gs = gap_set(spec, l)
    return max(gs.elements) if gs.elements else -1


def default_cap(spec: FieldSpec, places: Sequence[int]) -> int:
    return max(_frobenius_or_minus_one(spec, l) for l in places) + spec.q


def tilde_gamma(
    spec: FieldSpec,
    places: Sequence[int],
    lam: LambdaArg = -1,
    *,
    cap: int | None = None,
) -> list[tuple[int, ...]]:
    """Gamma-tilde for the chosen places, sorted.

    Singleton parts ``H(Q_l)`` are infinite and are truncated to values
    ``<= cap`` (default: largest Frobenius number among the places plus
    ``p^n``).
    """
    places = check_places(spec, places)
    if cap is None:
        cap = default_cap(spec, places)
    t = len(places)
    out: set[tuple[int, ...]] = set()
    for r, l in enumerate(places):
        gaps = set(gap_set(spec, l).elements)
        for a in range(cap + 1):
            if a not in gaps:
                out.add(tuple(a if c == r else 0 for c in range(t)))
    out |= set(_multi_part(spec, places, lam))
    return sorted(out)


def _multi_part(spec: FieldSpec, places: tuple[int, ...], lam: LambdaArg):
    t = len(places)
    for size in range(2, t + 1):
        for sub in itertools.combinations(range(t), size):
            sub_places = [places[c] for c in sub]
            for gt in gamma(spec, sub_places, lam).tuples:
                full = [0] * t
                for c, v in zip(sub, gt.values):
                    full[c] = v
                yield tuple(full)


@lru_cache(maxsize=256)
def _closure_index(spec: FieldSpec, places: tuple[int, ...], lam):
    by_coord: list[dict[int, list[tuple[int, ...]]]] = [dict() for _ in places]
    for u in set(_multi_part(spec, places, lam)):
        for c, v in enumerate(u):
            if v > 0:
                by_coord[c].setdefault(v, []).append(u)
    gaps = [frozenset(gap_set(spec, l).elements) for l in places]
    return by_coord, gaps


def closure_membership(
    spec: FieldSpec,
    places: Sequence[int],
    tup: Sequence[int],
    lam: LambdaArg = -1,
) -> bool:
    """Whether ``tup`` is a lub of elements of Gamma-tilde.

    Uses the coordinate-witness form: ``tup`` is such a lub iff for every
    coordinate ``k`` some ``u`` in Gamma-tilde has ``u <= tup`` and
    ``u_k = tup_k``.  The singleton part is tested through the
    single-place gap sets, so no truncation is involved.
    """
    places = check_places(spec, places)
    tup = tuple(tup)
    if len(tup) != len(places):
        raise IndexOutOfRange(f"{len(places)} places but tuple of length {len(tup)}")
    by_coord, gaps = _closure_index(spec, places, lam)
    for c, v in enumerate(tup):
        if v == 0 or v not in gaps[c]:
            continue  # zero tuple or the singleton v*e_c
        if not any(all(x <= y for x, y in zip(u, tup)) for u in by_coord[c].get(v, ())):
            return False
    return True


def brute_gamma(spec: FieldSpec, places: Sequence[int], box: int) -> set[tuple[int, ...]]:
    """Gamma straight from its definition, over ``[0, box]^t`` (tiny cases only).

    A positive ``a`` is kept when it lies in H and, for some coordinate
    ``k``, no other semigroup element ``b <= a`` has ``b_k = a_k``.
    """
    places = check_places(spec, places)
    t = len(places)
    H = {
        a
        for a in itertools.product(range(box + 1), repeat=t)
        if membership_multi(spec, places, a)
    }
    out = set()
    for a in H:
        if 0 in a:
            continue
        below = [b for b in H if b != a and all(x <= y for x, y in zip(b, a))]
        if any(all(b[k] != a[k] for b in below) for k in range(t)):
            out.add(a)
    return out
