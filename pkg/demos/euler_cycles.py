"""Symmetrical Euler cycles: build a few, inspect the symmetry group on each.

    python3 demos/euler_cycles.py
"""

from eulersym.cycles import (EulerCertificate, construct_symmetrical_euler, enumerate_euler_cycles,
                             h_group, is_symmetrical)
from eulersym.families import FamilySpec, build

examples = [
    FamilySpec.of("CycleN", n=5),
    FamilySpec.of("CycleN", lam=2, n=3),
    FamilySpec.of("Kst", lam=2, s=2, t=3),
    FamilySpec.of("Gamma2r1r", r=2),
    FamilySpec.of("Gamma2r1r", r=3),
    FamilySpec.of("Gamma2r2r", r=3),
    FamilySpec.of("CstCycle", r=2, s=1, t=2),
    FamilySpec.of("GammaNAB", n=8, a=1, b=3),
    FamilySpec.of("K2Lambda", mult=3),
]

print("constructed cycles")
for spec in examples:
    res = construct_symmetrical_euler(build(spec))
    if isinstance(res, EulerCertificate):
        maps = ", ".join(sorted(res.inducers))
        print(f"  {str(spec):28} length {len(res.cycle):3}  H(C) {res.shape.value:10} via {maps}")
    else:
        print(f"  {str(spec):28} {res.to_json()['status']}: {res.to_json()['detail']}")

# the construction is one cycle; enumeration shows every symmetrical cycle class
spec = FamilySpec.of("Kst", lam=2, s=1, t=3)
g = build(spec).graph
cycles = enumerate_euler_cycles(g)
sym = [c for c in cycles if is_symmetrical(g, c)]
shapes = sorted({h_group(g, c).shape.value for c in sym})
print(f"\n{spec}: {len(cycles)} Euler cycle classes, {len(sym)} symmetrical, shapes {shapes}")
