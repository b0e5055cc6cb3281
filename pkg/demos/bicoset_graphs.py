"""Bi-coset graphs from explicit group tables.

    python3 demos/bicoset_graphs.py
"""

from eulersym.bicoset import (BiCosetSpec, FiniteGroup, bicos, bicos_properties,
                              from_edge_transitive, sweep_groups, valid_specs)
from eulersym.families import FamilySpec, build

z6 = FiniteGroup.cyclic(6)
spec = BiCosetSpec.of(z6, z6.closure([2]), z6.closure([3]), [0])
g, _ = bicos(spec)
print("Z6, L=<2>, R=<3>:", g.vertex_count, "vertices", g.edge_count, "edges")
print("  ", bicos_properties(spec).to_json())

z12 = FiniteGroup.cyclic(12)
g, _ = bicos(BiCosetSpec.of(z12, z12.closure([2]), z12.closure([3]), [0]))
print("Z12, L=<2>, R=<3>: bundle sizes", sorted({len(b) for b in g.bundles.values()}))

# and back: stabilisers of an edge and its ends under the bipartite generator
inst = build(FamilySpec.of("Kst", s=2, t=3))
recovered, _ = from_edge_transitive(inst.graph, [inst.g])
print("recovered from K_(2,3):", sorted(recovered.L), sorted(recovered.R), sorted(recovered.J))

total = bad = 0
for group in sweep_groups(12):
    for s in valid_specs(group):
        total += 1
        bad += not bicos_properties(s).agree
print(f"groups up to order 12: {total} specs, {bad} disagreements")
