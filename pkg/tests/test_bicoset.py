import pytest

from eulersym.bicoset import (BiCosetError, BiCosetSpec, FiniteGroup, MatchingCase, bicos,
                              bicos_properties, cyclic_edge_transitive_classification,
                              from_edge_transitive)
from eulersym.errors import PreconditionError
from eulersym.families import FamilySpec, build
from eulersym.lift import lift_automorphism
from eulersym.multigraph import Multigraph, base_graph_and_multiplicity, cycle_graph
from eulersym.oracle import isomorphic
from eulersym.perm import GraphMap, cyclic_action, identity, validate_automorphism

Z6 = FiniteGroup.cyclic(6)


def z6_spec(J=(0,)):
    return BiCosetSpec.of(Z6, Z6.closure([2]), Z6.closure([3]), J)


def test_group_constructions_satisfy_axioms():
    for g in (Z6, FiniteGroup.dihedral(8), FiniteGroup.direct_product(FiniteGroup.cyclic(2),
                                                                      FiniteGroup.cyclic(4))):
        g.validate()
    assert len(FiniteGroup.dihedral(8).all_subgroups()) == 10


def test_group_json_round_trip():
    d = FiniteGroup.dihedral(6)
    back = FiniteGroup.from_json(d.to_json())
    assert back.table == d.table


def test_z6_gives_complete_bipartite():
    g, acts = bicos(z6_spec())
    assert (g.vertex_count, g.edge_count) == (5, 6)
    assert isomorphic(g, build(FamilySpec.of("Kst", s=2, t=3)).graph) is not None
    assert len(acts) == 6
    rep = bicos_properties(z6_spec())
    assert (rep.s, rep.t, rep.lam) == (3, 2, 1)
    assert rep.connected_group and rep.complete_group and rep.agree


def test_core_sized_j_gives_the_same_graph():
    assert bicos(z6_spec(J=(0,)))[0] == bicos(z6_spec(J=sorted(Z6.closure([2]) & Z6.closure([3]))))[0]


def test_intersection_of_order_two_doubles_edges():
    z12 = FiniteGroup.cyclic(12)
    spec = BiCosetSpec.of(z12, z12.closure([2]), z12.closure([3]), [0])
    assert base_graph_and_multiplicity(bicos(spec)[0])[1] == 2


def test_hypotheses_are_checked():
    z4 = FiniteGroup.cyclic(4)
    with pytest.raises(BiCosetError, match="differ"):
        BiCosetSpec.of(z4, z4.closure([2]), z4.closure([2]), [0])
    with pytest.raises(BiCosetError, match="core-free"):
        BiCosetSpec.of(Z6, Z6.closure([2]), range(6), Z6.closure([2]))
    with pytest.raises(BiCosetError, match="subgroup"):
        BiCosetSpec.of(Z6, [0, 1], [0, 3], [0])


def test_dihedral_reflections_both_ways():
    d8 = FiniteGroup.dihedral(8)
    reflections = [x for x in range(8) if x >= 4]
    for a in reflections:
        for b in reflections:
            if a == b:
                continue
            rep = bicos_properties(BiCosetSpec.of(d8, d8.closure([a]), d8.closure([b]), [0]))
            assert rep.agree
            assert rep.connected_group == (d8.closure([a, b]) == frozenset(range(8)))


def test_action_has_the_stabilisers_it_was_built_from():
    spec = z6_spec()
    g, acts = bicos(spec)
    assert {x for x, a in acts.items() if a.vertex_image[0] == 0} == spec.L
    assert {x for x, a in acts.items() if a.edge_image[0] == 0} == spec.J


def test_recovering_a_spec_from_bipartite_generator():
    inst = build(FamilySpec.of("Kst", s=2, t=3))
    spec, _ = from_edge_transitive(inst.graph, [inst.g])
    assert spec.group.order == 6
    assert isomorphic(bicos(spec)[0], inst.graph) is not None


def test_matching_cases():
    two_k2 = Multigraph.from_edges(4, [(0, 1), (2, 3)])
    swap = validate_automorphism(two_k2, GraphMap((2, 3, 0, 1), (1, 0)))
    assert from_edge_transitive(two_k2, [swap]) == MatchingCase(2, 1)
    k11 = Multigraph.from_edges(2, [(0, 1)])
    assert from_edge_transitive(k11, [identity(k11)]) == MatchingCase(1, 1)


def test_hypotheses_for_recovery():
    g = cycle_graph(3)
    rot = validate_automorphism(g, GraphMap((1, 2, 0), (1, 2, 0)))
    with pytest.raises(PreconditionError):
        from_edge_transitive(g, [rot])


def test_cyclic_edge_regular_rows():
    c4 = cycle_graph(4)
    rot = validate_automorphism(c4, GraphMap((1, 2, 3, 0), (1, 2, 3, 0)))
    row = cyclic_edge_transitive_classification(
        Multigraph.from_edges(4, list(c4.ends) * 2), cyclic_action(lift_automorphism(c4, rot, 2)))
    assert row.row == "C_n^(lambda)" and row.component_order == 8
    assert row.vertex_transitive and not row.arc_transitive and row.matches_table
    inst = build(FamilySpec.of("Kst", s=2, t=3))
    row = cyclic_edge_transitive_classification(inst.graph, cyclic_action(inst.g))
    assert row.row == "K_{s,t}^(lambda)" and row.params == {"s": 2, "t": 3, "lambda": 1}


def test_two_triangles_swapped_by_an_order_six_action():
    g = Multigraph.from_edges(6, [(0, 1), (3, 4), (1, 2), (4, 5), (2, 0), (5, 3)])
    # edges alternate between the two triangles, so one step moves to the other copy
    a = validate_automorphism(g, GraphMap((3, 4, 5, 1, 2, 0), (1, 2, 3, 4, 5, 0)))
    row = cyclic_edge_transitive_classification(g, cyclic_action(a))
    assert row.components == 2 and row.row == "C_n^(lambda)" and row.params["n"] == 3
    assert row.group_order == 6 and row.component_order == 3
