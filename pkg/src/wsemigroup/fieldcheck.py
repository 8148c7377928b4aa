"""Concrete defining equations: parsing, serialization and hypothesis checks.

A concrete specification names the constant field ``K = GF(p^k)``, the
linearized polynomial ``L`` and the factored right-hand side
``alpha * prod q_j^m_j / prod p_i^n_i``.  :func:`validate_concrete` checks
every hypothesis the gap formulas rely on and then forgets the polynomials,
keeping only degrees and multiplicities in a :class:`FieldSpec`.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Sequence

from .errors import (
    AlphaZero,
    InvalidInput,
    SchemaError,
    SpecSyntaxError,
    ValidationFailure,
    WeierstrassError,
)
from .gf import FieldPoly, FiniteField, is_irreducible, powmod
from .model import DEFAULT_MAX_Q, FieldSpec, build_spec


@dataclass(frozen=True)
class ConcreteSpec:
    field: FiniteField
    alpha: int
    L_coeffs: tuple[int, ...]
    numerator_factors: tuple[tuple[FieldPoly, int], ...]
    denominator_factors: tuple[tuple[FieldPoly, int], ...]

    @property
    def n(self) -> int:
        return len(self.L_coeffs) - 1


def linearized_poly(F: FiniteField, L_coeffs: Sequence[int]) -> FieldPoly:
    """``sum alpha_i y^(p^i)`` as an ordinary polynomial in ``y``."""
    coeffs = [0] * (F.p ** (len(L_coeffs) - 1) + 1)
    for i, a in enumerate(L_coeffs):
        coeffs[F.p**i] = a
    return FieldPoly(F, tuple(coeffs))


def splits_in_K(L_coeffs: Sequence[int], F: FiniteField) -> bool:
    """Whether all ``p^n`` roots of ``L`` lie in ``F``.

    ``L`` is separable when ``alpha_0 != 0``, so this holds iff ``L`` divides
    ``y^|F| - y``.
    """
    if not L_coeffs or L_coeffs[0] == 0:
        raise AlphaZero("alpha_0 = 0: L is not separable")
    if L_coeffs[-1] == 0:
        raise AlphaZero("alpha_n = 0")
    L = linearized_poly(F, L_coeffs)
    y = FieldPoly.x(F)
    return powmod(y, F.size, L) == y % L


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_rows(self) -> list[dict[str, Any]]:
        return [{"check": c.name, "status": "PASS" if c.passed else "FAIL", "detail": c.detail}
                for c in self.checks]


def validate_concrete(
    cs: ConcreteSpec,
    *,
    strict: bool = False,
    places_requested: int | None = None,
    max_q: int | None = DEFAULT_MAX_Q,
) -> tuple[FieldSpec | None, ValidationReport]:
    """Check the hypotheses on a concrete equation and derive its :class:`FieldSpec`.

    In strict mode any failed check raises :class:`ValidationFailure`.  In
    non-strict mode failures are only reported; the returned spec is
    ``None`` when the degree data itself is unusable (for example a
    multiplicity divisible by ``p``).
    """
    F = cs.field
    p = F.p
    rep = ValidationReport()

    rep.add("alpha_nonzero", cs.alpha != 0)
    rep.add("L_alpha0_nonzero", bool(cs.L_coeffs) and cs.L_coeffs[0] != 0)
    rep.add("L_alphan_nonzero", bool(cs.L_coeffs) and cs.L_coeffs[-1] != 0)
    rep.add("L_degree", len(cs.L_coeffs) >= 2, f"n = {cs.n}")

    facts = [("num", j, f, m) for j, (f, m) in enumerate(cs.numerator_factors, start=1)]
    facts += [("den", i, f, m) for i, (f, m) in enumerate(cs.denominator_factors, start=1)]
    rep.add("nonempty", bool(facts), f"{len(facts)} factors")
    for side, idx, f, mult in facts:
        label = f"{side}[{idx}]"
        rep.add(f"{label}_multiplicity", mult >= 1, f"mult = {mult}")
        nonconst = not f.is_zero() and f.degree >= 1
        rep.add(f"{label}_nonconstant", nonconst, repr(f))
        rep.add(f"{label}_monic", f.is_monic(), repr(f))
        rep.add(f"{label}_irreducible", nonconst and is_irreducible(f), repr(f))
    distinct = True
    dups = []
    for (s1, i1, f1, _), (s2, i2, f2, _) in itertools.combinations(facts, 2):
        if f1 == f2:
            distinct = False
            dups.append(f"{s1}[{i1}]={s2}[{i2}]")
    rep.add("factors_pairwise_distinct", distinct, ", ".join(dups))

    for i, (f, n_i) in enumerate(cs.denominator_factors, start=1):
        rep.add(f"den[{i}]_gcd_multiplicity_p", gcd(n_i, p) == 1, f"gcd({n_i}, {p})")
    n0 = sum(m * int(f.degree) for f, m in cs.numerator_factors if not f.is_zero()) - sum(
        n * int(f.degree) for f, n in cs.denominator_factors if not f.is_zero()
    )
    rep.add("n0_coprime_p", n0 <= 0 or gcd(n0, p) == 1, f"n0 = {n0}")

    try:
        split = splits_in_K(cs.L_coeffs, F)
        rep.add("L_splits_in_K", split, f"|K| = {F.size}")
    except AlphaZero as exc:
        rep.add("L_splits_in_K", False, str(exc))
    if places_requested is not None:
        rep.add("field_size_for_places", F.size >= places_requested,
                f"|K| = {F.size}, t = {places_requested}")

    spec = None
    try:
        spec = build_spec(
            p,
            max(cs.n, 1),
            [(n, int(f.degree)) for f, n in cs.denominator_factors],
            [(m, int(f.degree)) for f, m in cs.numerator_factors],
            max_q=max_q,
        )
    except (WeierstrassError, TypeError, ValueError) as exc:
        rep.add("abstract_spec", False, str(exc))

    if strict and not rep.ok:
        raise ValidationFailure(rep)
    return spec, rep


# --- spec files -------------------------------------------------------------

def _digits_out(F: FiniteField, a: int) -> list[int]:
    d = F.digits(a)
    while len(d) > 1 and d[-1] == 0:
        d.pop()
    return d


def _require(obj: dict, key: str, path: str):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(path + key, "missing")
    return obj[key]


def _int(v, path: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise SchemaError(path, f"expected an integer, got {v!r}")
    return v


def _pairs(v, path: str) -> list[tuple[int, int]]:
    if not isinstance(v, list):
        raise SchemaError(path, "expected a list of [multiplicity, degree] pairs")
    out = []
    for k, pair in enumerate(v):
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError(f"{path}[{k}]", "expected a pair")
        out.append((_int(pair[0], f"{path}[{k}][0]"), _int(pair[1], f"{path}[{k}][1]")))
    return out


def _element(F: FiniteField, v, path: str) -> int:
    if not isinstance(v, list) or not v:
        raise SchemaError(path, "expected a nonempty list of base-p digits")
    digits = [_int(d, f"{path}[{k}]") for k, d in enumerate(v)]
    try:
        return F.from_digits(digits)
    except InvalidInput as exc:
        raise SchemaError(path, str(exc)) from None


def _poly(F: FiniteField, v, path: str) -> FieldPoly:
    if not isinstance(v, list):
        raise SchemaError(path, "expected a list of coefficients")
    return FieldPoly(F, tuple(_element(F, c, f"{path}[{k}]") for k, c in enumerate(v)))


def _factors(F: FiniteField, v, path: str) -> tuple[tuple[FieldPoly, int], ...]:
    if not isinstance(v, list):
        raise SchemaError(path, "expected a list of {poly, mult} objects")
    out = []
    for k, item in enumerate(v):
        sub = f"{path}[{k}]."
        poly = _poly(F, _require(item, "poly", sub), sub + "poly")
        mult = _int(_require(item, "mult", sub), sub + "mult")
        out.append((poly, mult))
    return tuple(out)


def load_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise SchemaError("<root>", "expected a JSON object")
    return doc


def parse_spec_file(text: str, *, max_q: int | None = DEFAULT_MAX_Q) -> FieldSpec | ConcreteSpec:
    """Parse an abstract or concrete specification document (JSON)."""
    doc = load_document(text)
    mode = _require(doc, "mode", "")
    if mode == "abstract":
        p = _int(_require(doc, "p", ""), "p")
        n = _int(_require(doc, "n", ""), "n")
        poles = _pairs(doc.get("poles", []), "poles")
        zeros = _pairs(doc.get("zeros", []), "zeros")
        return build_spec(p, n, poles, zeros, max_q=max_q)
    if mode == "concrete":
        fd = _require(doc, "field", "")
        p = _int(_require(fd, "p", "field."), "field.p")
        k = _int(_require(fd, "k", "field."), "field.k")
        mod = _require(fd, "modulus", "field.")
        if not isinstance(mod, list):
            raise SchemaError("field.modulus", "expected a list of integers")
        modulus = tuple(_int(c, f"field.modulus[{i}]") for i, c in enumerate(mod))
        if max_q is not None and p**k > max_q:
            raise SchemaError("field", f"|K| = {p}^{k} exceeds the cap {max_q}")
        try:
            F = FiniteField(p, k, modulus)
        except InvalidInput as exc:
            raise SchemaError("field", str(exc)) from None
        alpha = _element(F, _require(doc, "alpha", ""), "alpha")
        Lv = _require(doc, "L", "")
        if not isinstance(Lv, list):
            raise SchemaError("L", "expected a list of field elements")
        L = tuple(_element(F, c, f"L[{i}]") for i, c in enumerate(Lv))
        num = _factors(F, doc.get("numerator", []), "numerator")
        den = _factors(F, doc.get("denominator", []), "denominator")
        return ConcreteSpec(F, alpha, L, num, den)
    raise SchemaError("mode", f"expected 'abstract' or 'concrete', got {mode!r}")


def spec_to_document(obj: FieldSpec | ConcreteSpec) -> dict:
    if isinstance(obj, FieldSpec):
        return {
            "mode": "abstract",
            "p": obj.p,
            "n": obj.n,
            "poles": [list(x) for x in obj.pole_data],
            "zeros": [list(x) for x in obj.zero_data],
        }
    F = obj.field

    def poly(f: FieldPoly):
        return [_digits_out(F, c) for c in f.coeffs]

    return {
        "mode": "concrete",
        "field": {"p": F.p, "k": F.k, "modulus": list(F.modulus)},
        "alpha": _digits_out(F, obj.alpha),
        "L": [_digits_out(F, a) for a in obj.L_coeffs],
        "numerator": [{"poly": poly(f), "mult": m} for f, m in obj.numerator_factors],
        "denominator": [{"poly": poly(f), "mult": m} for f, m in obj.denominator_factors],
    }


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def serialize_spec(obj: FieldSpec | ConcreteSpec) -> str:
    return canonical_json(spec_to_document(obj))


def fingerprint(obj: FieldSpec | ConcreteSpec) -> str:
    return hashlib.sha256(serialize_spec(obj).encode()).hexdigest()
