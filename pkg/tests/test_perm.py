import pytest

from eulersym.errors import IncidenceError
from eulersym.families import FamilySpec, build
from eulersym.lift import lift_automorphism
from eulersym.multigraph import Multigraph, cycle_graph, extender
from eulersym.oracle import full_automorphism_group
from eulersym.perm import (ActionKind, GraphMap, classify_action, compose, cyclic_action,
                           edge_kernel, identity, inverse, power, validate_automorphism)


def rotation(n):
    g = cycle_graph(n)
    shift = tuple((i + 1) % n for i in range(n))
    return g, validate_automorphism(g, GraphMap(shift, shift))


def test_identity_is_valid():
    g = build(FamilySpec.of("Kst", s=2, t=3)).graph
    assert validate_automorphism(g, identity(g)) == identity(g)


def test_rotation_of_triangle_is_valid():
    g, a = rotation(3)
    assert a.vertex_image == (1, 2, 0)


def test_vertex_rotation_with_fixed_edges_fails_at_first_edge():
    with pytest.raises(IncidenceError) as info:
        validate_automorphism(cycle_graph(3), GraphMap((1, 2, 0), (0, 1, 2)))
    assert info.value.edge == 0


def test_non_bijections_are_rejected():
    with pytest.raises(IncidenceError):
        validate_automorphism(cycle_graph(3), GraphMap((0, 0, 1), (0, 1, 2)))


def test_group_operations():
    g, a = rotation(5)
    assert compose(a, inverse(a)) == identity(g)
    assert power(a, 5) == identity(g)
    assert power(a, -1) == inverse(a)
    # maps act on the right: compose(a, b) applies a first
    refl = validate_automorphism(g, GraphMap((0, 4, 3, 2, 1), (4, 3, 2, 1, 0)))
    assert compose(a, refl).vertex_image == tuple(refl.vertex_image[a.vertex_image[v]] for v in range(5))


def test_layered_cycle_generator_has_order_twelve():
    inst = build(FamilySpec.of("CstCycle", r=2, s=2, t=3))
    assert power(inst.g, 12) == identity(inst.graph)
    assert all(power(inst.g, k) != identity(inst.graph) for k in range(1, 12))


def test_cyclic_action_orbits():
    _, a = rotation(5)
    c = cyclic_action(a)
    assert (c.order, len(c.edge_orbits), len(c.vertex_orbits)) == (5, 1, 1)
    kst = build(FamilySpec.of("Kst", s=2, t=3))
    c = cyclic_action(kst.g)
    assert c.order == 6 and len(c.edge_orbits) == 1
    assert sorted(len(o) for o in c.vertex_orbits) == [2, 3]
    k2 = Multigraph.from_edges(2, [(0, 1)])
    c = cyclic_action(identity(k2))
    assert (c.order, len(c.edge_orbits), len(c.vertex_orbits)) == (1, 1, 2)


def test_classification_examples():
    g, a = rotation(5)
    assert classify_action(cyclic_action(a)).kind is ActionKind.REGULAR
    lifted = lift_automorphism(g, a, 2)
    assert classify_action(cyclic_action(lifted)).kind is ActionKind.REGULAR
    squared = power(lifted, 2)
    cls = classify_action(cyclic_action(squared))
    assert cls.kind is ActionKind.BIREGULAR
    assert sorted(len(o) for o in cyclic_action(squared).edge_orbits) == [5, 5]
    _, r6 = rotation(6)
    c = cyclic_action(power(r6, 2))
    assert classify_action(c).kind is ActionKind.BIREGULAR
    assert sorted(sorted(o) for o in c.edge_orbits) == [[0, 2, 4], [1, 3, 5]]


def test_path_of_two_edges_is_degenerate_bi_regular():
    p3 = Multigraph.from_edges(3, [(0, 1), (1, 2)])
    cls = classify_action(cyclic_action(identity(p3)))
    assert cls.kind is ActionKind.BIREGULAR and cls.degenerate


def test_edge_kernel():
    k2 = Multigraph.from_edges(2, [(0, 1), (0, 1)])
    swap = validate_automorphism(k2, GraphMap((1, 0), (0, 1)))
    assert swap in edge_kernel(k2, full_automorphism_group(k2))
    assert edge_kernel(cycle_graph(3), full_automorphism_group(cycle_graph(3))) == [identity(cycle_graph(3))]
    g = build(FamilySpec.of("Gamma2r1r", r=2)).graph
    assert edge_kernel(g, full_automorphism_group(g)) == [identity(g)]
