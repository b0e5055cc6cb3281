"""Property tests over random small graphs, maps and parameters."""

from math import factorial

from hypothesis import given, settings, strategies as st

from eulersym.bicoset import FiniteGroup, bicos, bicos_properties, valid_specs
from eulersym.cycles import DihedralElement, dihedral_group, induced_element, make_cycle
from eulersym.families import FamilySpec, build
from eulersym.lift import lift_automorphism
from eulersym.multigraph import Multigraph, base_graph_and_multiplicity, extender
from eulersym.oracle import aut_count, full_automorphism_group
from eulersym.perm import (classify_action, compose, cyclic_action, identity, inverse, power,
                           validate_automorphism)


@st.composite
def multigraphs(draw, max_vertices=5, max_edges=7):
    n = draw(st.integers(2, max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    ends = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=max_edges))
    return Multigraph.from_edges(n, ends)


@st.composite
def graph_and_two_auts(draw):
    g = draw(multigraphs(4, 6))
    auts = full_automorphism_group(g)
    return g, draw(st.sampled_from(auts)), draw(st.sampled_from(auts))


@given(multigraphs())
def test_json_round_trip(g):
    assert Multigraph.from_json(g.to_json()) == g


@given(multigraphs(), st.integers(1, 3))
def test_extender_multiplies_every_bundle(g, lam):
    big = extender(g, lam)
    assert big.edge_count == lam * g.edge_count
    for pair, es in g.bundles.items():
        assert len(big.bundles[pair]) == lam * len(es)


@settings(max_examples=40)
@given(graph_and_two_auts())
def test_automorphisms_form_a_group(data):
    g, a, b = data
    validate_automorphism(g, compose(a, b))
    assert compose(a, inverse(a)) == identity(g)
    c = cyclic_action(a)
    assert power(a, c.order) == identity(g)


@settings(max_examples=30)
@given(st.sampled_from([FamilySpec.of("CycleN", n=4), FamilySpec.of("Kst", s=1, t=2),
                        FamilySpec.of("CycleN", n=3), FamilySpec.of("Kst", s=2, t=3)]),
       st.integers(1, 2))
def test_extender_automorphism_count_formula(spec, lam):
    g = build(spec).graph
    assert aut_count(extender(g, lam)) == aut_count(g) * factorial(lam) ** g.edge_count


@given(st.integers(1, 12), st.data())
def test_dihedral_relations(ell, data):
    d = dihedral_group(ell)
    x, y, z = (data.draw(st.sampled_from(d)) for _ in range(3))
    assert x.then(y).then(z) == x.then(y.then(z))
    assert x.then(x.inverse()) == DihedralElement(0, False, ell)
    phi, tau = DihedralElement.named("phi", ell), DihedralElement.named("tau", ell)
    assert tau.then(phi).then(tau) == phi.inverse()


@settings(max_examples=40)
@given(st.integers(3, 7), st.integers(0, 20), st.integers(0, 20))
def test_induced_element_is_a_homomorphism(n, i, j):
    inst = build(FamilySpec.of("CycleN", n=n))
    g = inst.graph
    c = make_cycle(g, range(n), 0)
    auts = full_automorphism_group(g)
    a, b = auts[i % len(auts)], auts[j % len(auts)]
    assert induced_element(g, c, compose(a, b)) == induced_element(g, c, a).then(induced_element(g, c, b))


@settings(max_examples=30)
@given(st.sampled_from([FamilySpec.of("CycleN", n=5), FamilySpec.of("Kst", s=2, t=3),
                        FamilySpec.of("CstCycle", r=2, s=1, t=2), FamilySpec.of("GammaNAB", n=5, a=1, b=2)]),
       st.integers(1, 4))
def test_lift_keeps_kind_and_vertex_orbits(spec, lam):
    inst = build(spec)
    lifted = lift_automorphism(inst.graph, inst.g, lam)
    before, after = cyclic_action(inst.g), cyclic_action(lifted)
    assert classify_action(after).kind is classify_action(before).kind
    assert len(after.vertex_orbits) == len(before.vertex_orbits)
    assert after.order == lam * before.order


@settings(max_examples=40)
@given(st.sampled_from([FiniteGroup.cyclic(12), FiniteGroup.dihedral(12),
                        FiniteGroup.direct_product(FiniteGroup.cyclic(2), FiniteGroup.cyclic(6))]),
       st.data())
def test_bicoset_structure(group, data):
    spec = data.draw(st.sampled_from(list(valid_specs(group))))
    g, acts = bicos(spec)
    nl = group.order // len(spec.L)
    assert all(u < nl <= v for u, v in g.ends)
    assert all(g.degrees[v] == len(spec.L) // len(spec.J) for v in range(nl))
    assert all(g.degrees[v] == len(spec.R) // len(spec.J) for v in range(nl, g.vertex_count))
    assert base_graph_and_multiplicity(g)[1] == bicos_properties(spec).lam
    assert {x for x, a in acts.items() if a.edge_image[0] == 0} == spec.J
    assert {x for x, a in acts.items() if a.vertex_image[nl] == nl} == spec.R
