from math import factorial

import networkx as nx
import pytest

from eulersym.errors import CapExceeded
from eulersym.families import FamilySpec, build
from eulersym.multigraph import Multigraph, cycle_graph, extender
from eulersym.oracle import (aut_count, cyclic_action_types, edge_transitive, enumerate_multigraphs,
                             find_cyclic_edge_actions, full_automorphism_group, isomorphic,
                             literal_action_types)
from eulersym.perm import ActionKind, compose, inverse, validate_automorphism


def test_triangle_has_six_automorphisms():
    assert len(full_automorphism_group(cycle_graph(3))) == 6


def test_group_is_closed():
    g = extender(cycle_graph(3), 2)
    auts = full_automorphism_group(g)
    keys = {a.key for a in auts}
    assert len(keys) == len(auts) == 48
    for a in auts[::7]:
        validate_automorphism(g, a)
        assert inverse(a).key in keys
        for b in auts[::11]:
            assert compose(a, b).key in keys


def test_cap_is_enforced(cap_env):
    g = extender(cycle_graph(4), 3)
    with pytest.raises(CapExceeded):
        full_automorphism_group(g, cap=100)
    cap_env.setenv("EULERSYM_CAP", "100")
    with pytest.raises(CapExceeded):
        full_automorphism_group(g)


def test_star_rotation_is_edge_regular():
    g = Multigraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    kinds = {(cls.kind, a.vertex_image) for a, cls in find_cyclic_edge_actions(g)}
    assert (ActionKind.REGULAR, (0, 2, 3, 1)) in kinds


def test_path_identity_is_a_degenerate_bi_regular_action():
    p3 = Multigraph.from_edges(3, [(0, 1), (1, 2)])
    assert cyclic_action_types(p3) == {(ActionKind.BIREGULAR, 3, 1, True),
                                       (ActionKind.REGULAR, 2, 2, False)}


def test_fast_action_summary_matches_literal_enumeration():
    checked = 0
    for _, g in enumerate_multigraphs(5, 7):
        if g.vertex_count >= 3:
            assert cyclic_action_types(g) == literal_action_types(g)
            checked += 1
    assert checked > 100


def test_enumeration_counts_agree_with_networkx_atlas():
    simple = 0
    for _, g in enumerate_multigraphs(5, 10):
        if all(len(b) == 1 for b in g.bundles.values()):
            simple += 1
    atlas = sum(1 for h in nx.graph_atlas_g()[1:] if 2 <= h.number_of_nodes() <= 5 and nx.is_connected(h))
    assert simple == atlas


def test_enumeration_has_no_isomorphic_duplicates():
    graphs = [g for _, g in enumerate_multigraphs(4, 6)]
    for i, g in enumerate(graphs):
        for h in graphs[i + 1:]:
            assert isomorphic(g, h) is None


def test_isomorphism_witness_is_valid():
    a = build(FamilySpec.of("Kst", s=2, t=3)).graph
    b = Multigraph.from_edges(5, [(v, u) for u in (3, 4) for v in (0, 1, 2)])
    m = isomorphic(a, b)
    assert m is not None
    for e, (u, v) in enumerate(a.ends):
        assert {m.vertex_image[u], m.vertex_image[v]} == set(b.ends[m.edge_image[e]])


@pytest.mark.parametrize("lam", [1, 2, 3])
def test_extender_automorphism_count(lam):
    for g in (cycle_graph(4), build(FamilySpec.of("Kst", s=2, t=3)).graph):
        assert aut_count(extender(g, lam)) == aut_count(g) * factorial(lam) ** g.edge_count


def test_edge_transitivity():
    assert edge_transitive(build(FamilySpec.of("GammaNAB", n=8, a=1, b=3)).graph)
    assert not edge_transitive(build(FamilySpec.of("GammaNAB", n=6, a=1, b=3)).graph)
