"""Command-line front end.

Every subcommand builds a payload, which is rendered as a table, canonical
JSON or CSV.  Exit codes: 0 success, 1 strict validation failure, 2 usage
error, 3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from . import multi_place, riemann_roch, single_place
from .errors import BudgetExceeded, OracleInconsistency, ValidationFailure, WeierstrassError
from .fieldcheck import ConcreteSpec, canonical_json, fingerprint, parse_spec_file, validate_concrete
from .model import DEFAULT_MAX_Q, FieldSpec

FORMAT_VERSION = 1
GT_BUDGET = 10**7

EXIT_OK, EXIT_VALIDATION, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class Result:
    """What a subcommand hands to the renderer."""

    payload: dict[str, Any]
    table: list[str]
    csv_header: list[str]
    csv_rows: list[list[Any]]
    exit_code: int = EXIT_OK
    warnings: list[str] = field(default_factory=list)


@dataclass
class Loaded:
    spec: FieldSpec | None
    fingerprint: str
    concrete: ConcreteSpec | None
    report: Any
    warnings: list[str]


def _place(token: str) -> int:
    token = token.strip()
    if token.lower() in ("inf", "infinity", "oo"):
        return 0
    try:
        return int(token)
    except ValueError:
        raise UsageError(f"invalid place {token!r}") from None


def _places(text: str) -> list[int]:
    return [_place(t) for t in text.split(",") if t.strip()]


def _coeffs(text: str) -> list[tuple[int, int]]:
    out = []
    for item in text.split(","):
        if not item.strip():
            continue
        l, sep, a = item.partition(":")
        if not sep:
            raise UsageError(f"coefficient {item!r} is not of the form l:a")
        try:
            out.append((_place(l), int(a)))
        except ValueError:
            raise UsageError(f"invalid coefficient {item!r}") from None
    return out


def _lambda(args) -> int | str:
    if getattr(args, "lambda_preset", None):
        return "inverse"
    lam = getattr(args, "lam", None)
    return -1 if lam is None else lam


def _load(args) -> Loaded:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    max_q = None if args.force else DEFAULT_MAX_Q
    obj = parse_spec_file(text, max_q=max_q)
    if isinstance(obj, FieldSpec):
        return Loaded(obj, fingerprint(obj), None, None, [])
    t = len(_places(args.places)) if getattr(args, "places", None) else None
    spec, report = validate_concrete(obj, strict=args.strict, places_requested=t, max_q=max_q)
    warnings = [f"check {c.name} failed{': ' + c.detail if c.detail else ''}" for c in report.failed()]
    return Loaded(spec, fingerprint(obj), obj, report, warnings)


def _need_spec(ld: Loaded) -> FieldSpec:
    if ld.spec is None:
        raise UsageError("specification has no usable degree data: " + "; ".join(ld.warnings))
    return ld.spec


def _guard_budget(spec: FieldSpec, t: int, force: bool) -> None:
    if not force and spec.genus**t > GT_BUDGET:
        raise BudgetExceeded(f"g^t = {spec.genus}^{t} exceeds {GT_BUDGET}; pass --force")


def _abstract_t_warning(ld: Loaded, t: int) -> list[str]:
    if ld.concrete is None:
        return [f"abstract mode: the constant field is unspecified, t = {t} <= |K| is assumed"]
    return []


def _spec_summary(spec: FieldSpec) -> dict[str, Any]:
    return {
        "p": spec.p,
        "n": spec.n,
        "q": spec.q,
        "n0": spec.n0,
        "I": list(spec.I),
        "J": list(spec.J),
        "m": spec.m,
        "genus": spec.genus,
    }


# --- subcommands ------------------------------------------------------------

def cmd_validate(args, ld: Loaded) -> Result:
    if ld.report is None:
        rows = [["abstract_spec", "PASS", "abstract document parsed"]]
    else:
        rows = [[r["check"], r["status"], r["detail"]] for r in ld.report.as_rows()]
    payload = {
        "mode": "abstract" if ld.concrete is None else "concrete",
        "checks": [{"check": a, "status": b, "detail": c} for a, b, c in rows],
        "spec": _spec_summary(ld.spec) if ld.spec else None,
    }
    table = [f"{a:<32} {b}  {c}".rstrip() for a, b, c in rows]
    if ld.spec:
        table.append(f"genus = {ld.spec.genus}")
    return Result(payload, table, ["check", "status", "detail"], rows)


def cmd_genus(args, ld: Loaded) -> Result:
    spec = _need_spec(ld)
    summary = _spec_summary(spec)
    table = [f"{k:<6} {v}" for k, v in summary.items()]
    return Result(summary, table, ["genus"], [[spec.genus]])


def cmd_gaps(args, ld: Loaded) -> Result:
    spec = _need_spec(ld)
    l = _place(args.place)
    gs = single_place.gap_set(spec, l, _lambda(args))
    payload = {"place": l, "lambda": gs.lam, "gaps": list(gs.elements), "count": len(gs)}
    table = [f"G(Q_{l}) [lambda={gs.lam}, {len(gs)} gaps]: " + " ".join(map(str, gs.elements))]
    return Result(payload, table, ["place", "element"], [[l, a] for a in gs.elements])


def cmd_semigroup(args, ld: Loaded) -> Result:
    spec = _need_spec(ld)
    l = _place(args.place)
    prof = single_place.semigroup_profile(spec, l)
    pruned = single_place.pruned_generators(prof.generators)
    payload = {
        "place": l,
        "generators": list(prof.generators),
        "generators_pruned": pruned,
        "multiplicity": prof.multiplicity,
        "frobenius": prof.frobenius,
        "symmetric": prof.symmetric,
    }
    fro = "undefined (genus 0)" if prof.frobenius is None else str(prof.frobenius)
    table = [
        f"place              Q_{l}",
        "generators         " + " ".join(map(str, prof.generators)),
        "generators_pruned  " + " ".join(map(str, pruned)),
        f"multiplicity       {prof.multiplicity}",
        f"frobenius          {fro}",
        f"symmetric          {str(prof.symmetric).lower()}",
    ]
    rows = [[k, " ".join(map(str, v)) if isinstance(v, list) else v] for k, v in payload.items()]
    return Result(payload, table, ["key", "value"], rows)


def cmd_dim(args, ld: Loaded) -> Result:
    spec = _need_spec(ld)
    coeffs = _coeffs(args.coeffs)
    dim = riemann_roch.rr_dimension(spec, coeffs)
    deg = sum(a * spec.d_i(l) for l, a in coeffs)
    payload = {"coeffs": [[l, a] for l, a in coeffs], "degree": deg, "dimension": dim}
    label = " + ".join(f"{a}*Q_{l}" for l, a in coeffs) or "0"
    table = [f"l({label}) = {dim}   (deg = {deg}, genus = {spec.genus})"]
    return Result(payload, table, ["degree", "dimension"], [[deg, dim]])


def _witness_doc(w) -> dict[str, Any]:
    return {
        "y_exp": w.y_exp,
        "p_exp": {str(k): v for k, v in w.p_exp.items()},
        "q_exp": {str(k): v for k, v in w.q_exp.items()},
        "ratio_exp": w.ratio_exp,
    }


def _witness_str(w) -> str:
    parts = [f"y^{w.y_exp}"] if w.y_exp else []
    parts += [f"p_{k}^{v}" for k, v in w.p_exp.items()]
    parts += [f"q_{k}^{v}" for k, v in w.q_exp.items()]
    if w.ratio_exp:
        parts.append(f"R^{w.ratio_exp}")
    return " * ".join(parts) or "1"


def cmd_gamma(args, ld: Loaded) -> Result:
    spec = _need_spec(ld)
    places = _places(args.places)
    _guard_budget(spec, len(places), args.force)
    field_size = ld.concrete.field.size if ld.concrete else None
    gs = multi_place.gamma(spec, places, _lambda(args), field_size=field_size)
    items = []
    table = [f"Gamma(" + ", ".join(f"Q_{l}" for l in gs.places) + f") [lambda={gs.lam}, {len(gs)} tuples]"]
    rows = []
    for gt in gs.tuples:
        item: dict[str, Any] = {"tuple": list(gt.values), "i": gt.i, "j": list(gt.j_vec)}
        line = "(" + ", ".join(map(str, gt.values)) + ")"
        row: list[Any] = list(gt.values)
        if args.witnesses:
            w = multi_place.gamma_witness(spec, gs.places, gt)
            item["witness"] = _witness_doc(w)
            line += "   " + _witness_str(w)
            row.append(_witness_str(w))
        items.append(item)
        table.append(line)
        rows.append(row)
    if args.witnesses:
        table.append("R = prod_{k>=2} y/(y-beta_k)")
    payload = {"places": list(gs.places), "lambda": gs.lam, "count": len(gs), "tuples": items}
    header = [f"Q_{l}" for l in gs.places] + (["witness"] if args.witnesses else [])
    return Result(payload, table, header, rows, warnings=_abstract_t_warning(ld, len(places)))


def _diff_result(kind: str, what: str, closed: set, oracle: set, noun: str, extra=None) -> Result:
    only_closed = sorted(closed - oracle)
    only_oracle = sorted(oracle - closed)
    match = not only_closed and not only_oracle
    status = f"MATCH ({len(closed)} {noun})" if match else (
        f"MISMATCH ({len(only_closed)} only in closed form, {len(only_oracle)} only in oracle)"
    )
    payload = {
        "check": kind,
        "target": what,
        "status": "MATCH" if match else "MISMATCH",
        "count": len(closed),
        "only_closed_form": [list(x) if isinstance(x, tuple) else x for x in only_closed],
        "only_oracle": [list(x) if isinstance(x, tuple) else x for x in only_oracle],
    }
    if extra:
        payload.update(extra)
    table = [f"{what}: {status}"]
    if only_closed:
        table.append("  only closed form: " + " ".join(map(str, only_closed)))
    if only_oracle:
        table.append("  only oracle:      " + " ".join(map(str, only_oracle)))
    rows = [["closed_form", str(x)] for x in only_closed] + [["oracle", str(x)] for x in only_oracle]
    if match:
        rows = [["status", status]]
    return Result(payload, table, ["side", "value"], rows, EXIT_OK if match else EXIT_MISMATCH)


def cmd_oracle(args, ld: Loaded) -> Result:
    spec = _need_spec(ld)
    lam = _lambda(args)
    if args.check == "gaps":
        if not args.place:
            raise UsageError("oracle gaps needs --place")
        l = _place(args.place)
        closed = set(single_place.gap_set(spec, l, lam).elements)
        oracle = set(riemann_roch.gap_set_oracle(spec, l))
        return _diff_result("gaps", f"G(Q_{l})", closed, oracle, "gaps")
    if not args.places:
        raise UsageError(f"oracle {args.check} needs --places")
    places = tuple(_places(args.places))
    t = len(places)
    _guard_budget(spec, t, args.force)
    name = ", ".join(f"Q_{l}" for l in places)
    if args.check == "gamma":
        closed = multi_place.gamma(spec, places, lam).values()
        oracle = multi_place.gamma_oracle(spec, places, budget=None)
        res = _diff_result("gamma", f"Gamma({name})", closed, oracle, "tuples")
    else:
        riemann_roch.check_places(spec, places)
        box = args.box if args.box is not None else multi_place.default_cap(spec, places)
        if not args.force and (box + 1) ** t > GT_BUDGET:
            raise BudgetExceeded(f"box size {(box + 1)}^{t} exceeds {GT_BUDGET}; pass --force")
        pts = list(itertools.product(range(box + 1), repeat=t))
        closed = {a for a in pts if multi_place.closure_membership(spec, places, a, lam)}
        oracle = {a for a in pts if riemann_roch.membership_multi(spec, places, a)}
        res = _diff_result("closure", f"H({name}) on [0,{box}]^{t}", closed, oracle,
                           "members", {"box": box, "points": len(pts)})
    res.warnings += _abstract_t_warning(ld, t)
    return res


COMMANDS: dict[str, Callable] = {
    "validate": cmd_validate,
    "genus": cmd_genus,
    "gaps": cmd_gaps,
    "semigroup": cmd_semigroup,
    "dim": cmd_dim,
    "gamma": cmd_gamma,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--strict", action="store_true", help="abort on any failed check")
    common.add_argument("--force", action="store_true", help="lift the size guards")

    def lam_opts(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--lambda", dest="lam", type=int)
        g.add_argument("--lambda-preset", choices=("inverse",))

    parser = _Parser(prog="wsemigroup", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("validate", "genus"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("file")
    sp = sub.add_parser("gaps", parents=[common])
    sp.add_argument("file")
    sp.add_argument("--place", required=True)
    lam_opts(sp)
    sp = sub.add_parser("semigroup", parents=[common])
    sp.add_argument("file")
    sp.add_argument("--place", required=True)
    sp = sub.add_parser("dim", parents=[common])
    sp.add_argument("file")
    sp.add_argument("--coeffs", required=True, help='e.g. "1:8,2:3" or "inf:4"')
    sp = sub.add_parser("gamma", parents=[common])
    sp.add_argument("file")
    sp.add_argument("--places", required=True, help='e.g. "1,2,3" or "inf,1"')
    sp.add_argument("--witnesses", action="store_true")
    lam_opts(sp)
    sp = sub.add_parser("oracle", parents=[common])
    sp.add_argument("file")
    sp.add_argument("check", choices=("gaps", "gamma", "closure"))
    sp.add_argument("--place")
    sp.add_argument("--places")
    sp.add_argument("--box", type=int, help="closure box side (default: max Frobenius + p^n)")
    lam_opts(sp)
    return parser


def render(args, ld: Loaded, res: Result) -> str:
    warnings = sorted(set(ld.warnings + res.warnings))
    if args.format == "json":
        doc = {
            "command": list(args.argv),
            "fingerprint": ld.fingerprint,
            "format_version": FORMAT_VERSION,
            "payload": res.payload,
            "warnings": warnings,
        }
        return canonical_json(doc) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(res.csv_header)
        w.writerows(res.csv_rows)
        return buf.getvalue()
    lines = list(res.table) + [f"warning: {w}" for w in warnings]
    return "\n".join(lines) + "\n"


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        args.argv = argv
        ld = _load(args)
        res = COMMANDS[args.command](args, ld)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except ValidationFailure as exc:
        print(f"validation failure: {exc}", file=err)
        return EXIT_VALIDATION
    except OracleInconsistency as exc:
        print(f"oracle mismatch: {exc}", file=err)
        return EXIT_MISMATCH
    except (WeierstrassError, ValueError) as exc:
        print(f"usage error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_USAGE
    out.write(render(args, ld, res))
    return res.exit_code


def main() -> None:
    sys.exit(run())
