"""Gaps and the Weierstrass semigroup at one totally ramified degree-one place.

Every formula here is closed form; :func:`wsemigroup.riemann_roch.gap_set_oracle`
is the independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Literal

from .arith import ceil_div, floor_div, mod_inverse
from .errors import GcdViolation, OracleInconsistency, UndefinedQuantity
from .model import FieldSpec
from .riemann_roch import _require_degree_one

LambdaArg = int | Literal["inverse"]


def resolve_lambda(spec: FieldSpec, l: int, lam: LambdaArg) -> int:
    """Turn a lambda argument into an integer; ``"inverse"`` means ``(-n_l)^{-1} mod p^n``."""
    if lam == "inverse":
        return mod_inverse((-spec.n_i(l)) % spec.q, spec.q)
    lam = int(lam)
    if gcd(lam, spec.p) != 1:
        raise GcdViolation(f"lambda = {lam} is not coprime to p = {spec.p}")
    return lam


def j_upper(spec: FieldSpec, i: int, lam: int) -> int:
    """``m*ceil(i*lam/q) - sum_k floor(i*lam*n_k/q)*d_k`` -- shared by gap and Gamma bounds."""
    q = spec.q
    return spec.m * ceil_div(i * lam, q) - sum(
        floor_div(i * lam * spec.n_i(k), q) * spec.d_i(k) for k in spec.I
    )


@dataclass(frozen=True)
class GapSet:
    place: int
    lam: int
    elements: tuple[int, ...]
    # element -> (i, j) with element = j*p^n - i*lam*n_l
    parameterization: dict[int, tuple[int, int]]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a):
        return a in self.parameterization


def gap_set(spec: FieldSpec, l: int, lam: LambdaArg = -1) -> GapSet:
    _require_degree_one(spec, l)
    lam = resolve_lambda(spec, l, lam)
    q, nl = spec.q, spec.n_i(l)
    params: dict[int, tuple[int, int]] = {}
    for i in range(1, q):
        lo = ceil_div(i * lam * nl, q)
        hi = j_upper(spec, i, lam) + floor_div(i * lam * nl, q) - 1
        for j in range(lo, hi + 1):
            a = j * q - i * lam * nl
            if a in params:
                raise OracleInconsistency(f"gap {a} parameterized twice: {params[a]} and {(i, j)}")
            params[a] = (i, j)
    return GapSet(l, lam, tuple(sorted(params)), params)


def semigroup_generators(spec: FieldSpec, l: int) -> list[int]:
    """A (not necessarily minimal) generating system of ``H(Q_l)``."""
    _require_degree_one(spec, l)
    q, nl = spec.q, spec.n_i(l)
    gens = {q}
    for i in range(1, q):
        c = sum(ceil_div(i * spec.n_i(k), q) * spec.d_i(k) for k in spec.I) - ceil_div(i * nl, q)
        gens.add(c * q + i * nl)
    return sorted(gens)


def semigroup_elements_upto(generators: Iterable[int], bound: int) -> list[bool]:
    """Membership table ``[0..bound]`` of the numerical semigroup spanned by ``generators``."""
    gens = sorted(set(g for g in generators if g > 0))
    table = [False] * (bound + 1)
    table[0] = True
    for a in range(1, bound + 1):
        table[a] = any(g <= a and table[a - g] for g in gens)
    return table


def pruned_generators(generators: Iterable[int]) -> list[int]:
    """Drop generators expressible through smaller ones (post-processing view)."""
    gens = sorted(set(g for g in generators if g > 0))
    kept: list[int] = []
    for g in gens:
        if not semigroup_elements_upto(kept, g)[g]:
            kept.append(g)
    return kept


def multiplicity(spec: FieldSpec, l: int) -> int:
    _require_degree_one(spec, l)
    if len(spec.I) >= 2:
        return spec.q
    return min(spec.q, spec.n_i(l))


def frobenius(spec: FieldSpec, l: int) -> int:
    _require_degree_one(spec, l)
    if spec.genus == 0:
        raise UndefinedQuantity("genus 0: H(Q_l) = N_0 has no gaps")
    q = spec.q
    c = spec.m - sum(floor_div(spec.n_i(k), q) * spec.d_i(k) for k in spec.I)
    c += floor_div(spec.n_i(l), q) - 1
    return c * q - spec.n_i(l)


def is_symmetric(spec: FieldSpec, l: int) -> bool:
    """Symmetry test: every other ramification multiplicity is ``-1 mod p^n``."""
    _require_degree_one(spec, l)
    return all((spec.n_i(k) + 1) % spec.q == 0 for k in spec.I if k != l)


def same_semigroup_criterion(spec: FieldSpec, i: int, j: int) -> bool:
    """Sufficient (not necessary) condition for ``H(Q_i) == H(Q_j)``."""
    _require_degree_one(spec, i)
    _require_degree_one(spec, j)
    return (spec.n_i(i) - spec.n_i(j)) % spec.q == 0


@dataclass(frozen=True)
class SemigroupProfile:
    place: int
    generators: tuple[int, ...]
    multiplicity: int
    frobenius: int | None
    symmetric: bool


def semigroup_profile(spec: FieldSpec, l: int) -> SemigroupProfile:
    return SemigroupProfile(
        place=l,
        generators=tuple(semigroup_generators(spec, l)),
        multiplicity=multiplicity(spec, l),
        frobenius=frobenius(spec, l) if spec.genus else None,
        symmetric=is_symmetric(spec, l),
    )
