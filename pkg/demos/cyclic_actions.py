"""Cyclic edge actions: classify a generator, then sweep every small multigraph.

    python3 demos/cyclic_actions.py
"""

from eulersym.families import FamilySpec, build, recognize, table_rows
from eulersym.lift import lift_split
from eulersym.perm import classify_action, cyclic_action, power
from eulersym.sweeps import k2_table_check, sweep_theorem1

for spec, which in [(FamilySpec.of("CycleN", n=6), 1), (FamilySpec.of("CycleN", n=6), 2),
                    (FamilySpec.of("CstCycle", r=2, s=2, t=3), 1),
                    (FamilySpec.of("KK", r=1, rp=2, s=1, t=2, tp=1, u=1), 1)]:
    inst = build(spec)
    c = cyclic_action(power(inst.g, which))
    kind = classify_action(c).kind.value
    rows = sorted({r.key for s in recognize(inst.graph, c) for r, o in table_rows(s)
            if r.kind.value == kind and r.n_v == len(c.vertex_orbits) and o == c.order})
    print(f"{str(spec):40} g^{which}: {kind:9} order {c.order:3} vertex orbits {len(c.vertex_orbits)}  rows {rows}")

base = build(FamilySpec.of("Kst", s=2, t=3))
split = cyclic_action(lift_split(base.graph, base.g, 2))
print(f"K_(2,3)^(2) split lift: {classify_action(split).kind.value}, order {split.order}")

print("\nK2^(lambda) table:", all(k2_table_check(lam)["ok"] for lam in range(1, 7)))

report = sweep_theorem1(6, 8)
print("sweep |V|<=6, |E|<=8:", report.summary())
