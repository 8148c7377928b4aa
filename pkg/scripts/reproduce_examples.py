"""Print gap sets, semigroup data and Gamma sets for the two worked examples."""

from pathlib import Path

from wsemigroup import frobenius, gamma, gap_set, multiplicity, semigroup_generators
from wsemigroup.fieldcheck import parse_spec_file, validate_concrete

SPECS = Path(__file__).resolve().parent.parent / "specs"


def show(name, families):
    cs = parse_spec_file((SPECS / name).read_text())
    spec, report = validate_concrete(cs)
    print(f"== {name}: genus {spec.genus}, I = {list(spec.I)}")
    for c in report.failed():
        print(f"   check failed: {c.name} ({c.detail})")
    for l in spec.degree_one_places():
        print(f"   G(Q_{l}) = {list(gap_set(spec, l))}")
        print(f"      generators {semigroup_generators(spec, l)}, "
              f"m = {multiplicity(spec, l)}, F = {frobenius(spec, l)}")
    for places in families:
        vals = sorted(gamma(spec, places).values())
        print(f"   Gamma{tuple(places)} ({len(vals)}): {vals}")


if __name__ == "__main__":
    show("E1_concrete.json", [[1, 2], [1, 2, 3]])
    show("E2_concrete.json", [[1, 2], [1, 2, 3], [0, 1, 2, 3]])
