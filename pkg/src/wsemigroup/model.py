"""Combinatorial model of a linearized function field ``L(y) = f(x)/g(x)``.

Only the data the gap and semigroup formulas actually depend on is kept:
the characteristic ``p``, the degree ``p**n`` of ``L``, the multiplicities and
degrees of the irreducible factors of the denominator (``pole_data``) and of
the numerator (``zero_data``).  The polynomials themselves live in
:mod:`wsemigroup.fieldcheck`.

Places are symbolic:

* ``QI(i)`` -- the unique place over the zero of ``p_i(x)`` (``i = 0`` is the
  place at infinity when ``n0 > 0``),
* ``RJK(j, k)`` -- the zero of ``y - beta_k`` over the zero of ``q_j(x)``
  (``j = 0`` lies over the pole of ``x`` when ``n0 < 0``),
* ``D0`` -- the conorm of the pole of ``x``, kept as one atomic symbol.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Mapping, Union

from .arith import is_prime
from .errors import (
    EmptyData,
    GcdViolation,
    IndexOutOfRange,
    InvalidInput,
    NonPrimeP,
    ParameterTooLarge,
    UnsupportedPlace,
)

DEFAULT_MAX_Q = 2**20


@dataclass(frozen=True)
class FieldSpec:
    """Validated abstract datum of a linearized function field.

    ``pole_data`` holds ``(n_i, d_i)`` for ``i = 1..s`` and ``zero_data`` holds
    ``(m_j, e_j)`` for ``j = 1..r``.  Everything else is derived.
    """

    p: int
    n: int
    pole_data: tuple[tuple[int, int], ...]
    zero_data: tuple[tuple[int, int], ...]
    max_q: InitVar[int | None] = DEFAULT_MAX_Q

    q: int = field(init=False)
    n0: int = field(init=False)
    I: tuple[int, ...] = field(init=False)
    J: tuple[int, ...] = field(init=False)
    m: int = field(init=False)
    genus: int = field(init=False)

    def __post_init__(self, max_q):
        pole_data = tuple((int(a), int(b)) for a, b in self.pole_data)
        zero_data = tuple((int(a), int(b)) for a, b in self.zero_data)
        object.__setattr__(self, "pole_data", pole_data)
        object.__setattr__(self, "zero_data", zero_data)

        p, n = self.p, self.n
        if not is_prime(p):
            raise NonPrimeP(f"p={p} is not prime")
        if n < 1:
            raise InvalidInput(f"n={n} must be >= 1")
        if not pole_data and not zero_data:
            raise EmptyData("pole_data and zero_data are both empty")
        for label, data in (("pole", pole_data), ("zero", zero_data)):
            for idx, (mult, deg) in enumerate(data, start=1):
                if mult < 1 or deg < 1:
                    raise InvalidInput(
                        f"{label} #{idx}: multiplicity and degree must be >= 1, got ({mult}, {deg})"
                    )
        if max_q is not None and p**n > max_q:
            raise ParameterTooLarge(f"p^n = {p}^{n} exceeds the cap {max_q}")
        q = p**n

        for idx, (ni, _) in enumerate(pole_data, start=1):
            if gcd(ni, p) != 1:
                raise GcdViolation(f"gcd(n_{idx}, p) = gcd({ni}, {p}) != 1")
        n0 = sum(mj * ej for mj, ej in zero_data) - sum(ni * di for ni, di in pole_data)
        if n0 > 0 and gcd(n0, p) != 1:
            raise GcdViolation(f"n0 = {n0} > 0 with gcd(n0, p) != 1")

        s, r = len(pole_data), len(zero_data)
        I = tuple(range(1, s + 1)) if n0 <= 0 else tuple(range(0, s + 1))
        J = tuple(range(1, r + 1)) if n0 >= 0 else tuple(range(0, r + 1))

        object.__setattr__(self, "q", q)
        object.__setattr__(self, "n0", n0)
        object.__setattr__(self, "I", I)
        object.__setattr__(self, "J", J)

        m = sum(self.n_i(i) * self.d_i(i) for i in I)
        m_zero = sum(self.m_j(j) * self.e_j(j) for j in J)
        if m != m_zero:  # pragma: no cover - algebraic identity
            raise AssertionError(f"degree mismatch {m} != {m_zero}")
        object.__setattr__(self, "m", m)

        twice_g = (q - 1) * (m + sum(self.d_i(i) for i in I) - 2)
        if twice_g < 0 or twice_g % 2:  # pragma: no cover - follows from the gcd hypotheses
            raise AssertionError(f"non-integral genus 2g = {twice_g}")
        object.__setattr__(self, "genus", twice_g // 2)

    @cached_property
    def _ram(self) -> dict[int, tuple[int, int]]:
        out = {i: nd for i, nd in enumerate(self.pole_data, start=1)}
        if self.n0 > 0:
            out[0] = (self.n0, 1)
        return out

    @cached_property
    def _zer(self) -> dict[int, tuple[int, int]]:
        out = {j: me for j, me in enumerate(self.zero_data, start=1)}
        if self.n0 < 0:
            out[0] = (-self.n0, 1)
        return out

    def _pole(self, i: int) -> tuple[int, int]:
        try:
            return self._ram[i]
        except KeyError:
            raise IndexOutOfRange(f"place index {i} not in I = {list(self.I)}") from None

    def _zero(self, j: int) -> tuple[int, int]:
        try:
            return self._zer[j]
        except KeyError:
            raise IndexOutOfRange(f"zero index {j} not in J = {list(self.J)}") from None

    def n_i(self, i: int) -> int:
        return self._pole(i)[0]

    def d_i(self, i: int) -> int:
        return self._pole(i)[1]

    def m_j(self, j: int) -> int:
        return self._zero(j)[0]

    def e_j(self, j: int) -> int:
        return self._zero(j)[1]

    def check_I(self, i: int) -> None:
        self._pole(i)

    def check_J(self, j: int) -> None:
        self._zero(j)

    def degree_one_places(self) -> list[int]:
        return [i for i in self.I if self.d_i(i) == 1]


def build_spec(
    p: int,
    n: int,
    pole_data: Iterable[tuple[int, int]],
    zero_data: Iterable[tuple[int, int]],
    *,
    max_q: int | None = DEFAULT_MAX_Q,
) -> FieldSpec:
    return FieldSpec(p, n, tuple(map(tuple, pole_data)), tuple(map(tuple, zero_data)), max_q)


def genus(spec: FieldSpec) -> int:
    """Hurwitz genus ``(p^n - 1)(m + sum d_i - 2) / 2``."""
    return spec.genus


# --- places and divisors ----------------------------------------------------

@dataclass(frozen=True)
class QI:
    i: int

    def __str__(self):
        return f"Q{self.i}"


@dataclass(frozen=True)
class RJK:
    j: int
    k: int

    def __str__(self):
        return f"R{self.j},{self.k}"


@dataclass(frozen=True)
class _D0:
    def __str__(self):
        return "D0"


D0 = _D0()

PlaceId = Union[QI, RJK, _D0]


def place_key(place: PlaceId) -> tuple:
    if isinstance(place, QI):
        return (0, place.i)
    if isinstance(place, RJK):
        return (1, place.j, place.k)
    return (2,)


def place_degree(spec: FieldSpec, place: PlaceId) -> int:
    if isinstance(place, QI):
        return spec.d_i(place.i)
    if isinstance(place, RJK):
        return spec.e_j(place.j)
    return spec.q


class Divisor:
    """Finitely supported integer combination of symbolic places."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[PlaceId, int] | Iterable[tuple[PlaceId, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[PlaceId, int] = {}
        for place, a in items:
            c[place] = c.get(place, 0) + int(a)
        self._c = {k: v for k, v in c.items() if v}

    def __getitem__(self, place: PlaceId) -> int:
        return self._c.get(place, 0)

    def items(self) -> list[tuple[PlaceId, int]]:
        return sorted(self._c.items(), key=lambda kv: place_key(kv[0]))

    @property
    def support(self) -> list[PlaceId]:
        return [p for p, _ in self.items()]

    def __add__(self, other: Divisor) -> Divisor:
        return Divisor(list(self._c.items()) + list(other._c.items()))

    def __neg__(self) -> Divisor:
        return Divisor({k: -v for k, v in self._c.items()})

    def __sub__(self, other: Divisor) -> Divisor:
        return self + (-other)

    def __mul__(self, a: int) -> Divisor:
        return Divisor({k: a * v for k, v in self._c.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    def pole_part(self) -> Divisor:
        """The pole divisor: minus the negative part."""
        return Divisor({k: -v for k, v in self._c.items() if v < 0})

    def zero_part(self) -> Divisor:
        return Divisor({k: v for k, v in self._c.items() if v > 0})

    def degree(self, spec: FieldSpec) -> int:
        return sum(a * place_degree(spec, pl) for pl, a in self._c.items())

    def __repr__(self):
        if not self._c:
            return "Divisor(0)"
        terms = []
        for pl, a in self.items():
            terms.append(f"{a}*{pl}" if a != 1 else str(pl))
        return "Divisor(" + " + ".join(terms).replace("+ -", "- ") + ")"


# --- principal divisors -----------------------------------------------------

@dataclass(frozen=True)
class PolyP:
    i: int


@dataclass(frozen=True)
class PolyQ:
    j: int


@dataclass(frozen=True)
class YMinusBeta:
    k: int


Factor = Union[PolyP, PolyQ, YMinusBeta]


def principal_divisor(spec: FieldSpec, factor: Factor) -> Divisor:
    q = spec.q
    if isinstance(factor, PolyP):
        spec.check_I(factor.i)
        return Divisor({QI(factor.i): q, D0: -spec.d_i(factor.i)})
    if isinstance(factor, PolyQ):
        spec.check_J(factor.j)
        c: dict[PlaceId, int] = {RJK(factor.j, k): 1 for k in range(1, q + 1)}
        c[D0] = -spec.e_j(factor.j)
        return Divisor(c)
    if isinstance(factor, YMinusBeta):
        if not 1 <= factor.k <= q:
            raise IndexOutOfRange(f"root index {factor.k} not in 1..{q}")
        c = {RJK(j, factor.k): spec.m_j(j) for j in spec.J}
        c.update({QI(i): -spec.n_i(i) for i in spec.I})
        return Divisor(c)
    raise TypeError(f"unknown factor {factor!r}")


@dataclass(frozen=True)
class WitnessExpr:
    """Formal product ``y^a * prod p_i^b_i * prod q_j^c_j * (prod_{k>=2} y/(y-beta_k))^e``."""

    y_exp: int = 0
    p_exp: Mapping[int, int] = field(default_factory=dict)
    q_exp: Mapping[int, int] = field(default_factory=dict)
    ratio_exp: int = 0

    def __post_init__(self):
        object.__setattr__(self, "p_exp", {i: e for i, e in sorted(self.p_exp.items()) if e})
        object.__setattr__(self, "q_exp", {j: e for j, e in sorted(self.q_exp.items()) if e})

    def __add__(self, other: WitnessExpr) -> WitnessExpr:
        p = dict(self.p_exp)
        for i, e in other.p_exp.items():
            p[i] = p.get(i, 0) + e
        qd = dict(self.q_exp)
        for j, e in other.q_exp.items():
            qd[j] = qd.get(j, 0) + e
        return WitnessExpr(self.y_exp + other.y_exp, p, qd, self.ratio_exp + other.ratio_exp)


def divisor_of_witness(spec: FieldSpec, w: WitnessExpr) -> Divisor:
    div = Divisor()
    for i, e in w.p_exp.items():
        div = div + e * principal_divisor(spec, PolyP(i))
    for j, e in w.q_exp.items():
        div = div + e * principal_divisor(spec, PolyQ(j))
    if w.y_exp:
        # beta_1 = 0, so y = y - beta_1
        div = div + w.y_exp * principal_divisor(spec, YMinusBeta(1))
    if w.ratio_exp:
        ratio = (spec.q - 1) * principal_divisor(spec, YMinusBeta(1))
        for k in range(2, spec.q + 1):
            ratio = ratio - principal_divisor(spec, YMinusBeta(k))
        div = div + w.ratio_exp * ratio
    return div


def restriction(spec: FieldSpec, D: Divisor) -> dict[int, int]:
    """Restrict a divisor supported on ``{Q_i}`` to the rational field.

    Each ``Q_i`` is the only place over ``P_i`` and has ramification index
    ``p^n``, so the coefficient at ``P_i`` is ``floor(a_i / p^n)``.
    """
    out = {}
    for place, a in D.items():
        if not isinstance(place, QI):
            raise UnsupportedPlace(f"restriction only handles Q_i places, got {place}")
        spec.check_I(place.i)
        out[place.i] = a // spec.q
    return out
