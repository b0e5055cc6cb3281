from itertools import permutations

import pytest

from eulersym.cycles import (DihedralElement, EdgeCycle, EulerCertificate, HShape, NotExists,
                             NotExistsReason, certify, classify_h, construct_symmetrical_euler,
                             dihedral_group, enumerate_euler_cycles, h_group, induced_element,
                             is_euler, is_symmetrical, make_cycle, sequence_class_equal)
from eulersym.errors import CapExceeded, PreconditionError
from eulersym.families import FamilySpec, build
from eulersym.lift import lift_copywise
from eulersym.multigraph import Multigraph, cycle_graph, extender
from eulersym.oracle import full_automorphism_group
from eulersym.perm import identity


def brute_force_euler_classes(g: Multigraph) -> int:
    """Count Euler cycles up to rotation and reversal by trying every edge ordering."""
    m = g.edge_count
    seen = set()
    for order in permutations(range(m)):
        if order[0] != 0:
            continue
        for start in g.ends[0]:
            v, ok = start, True
            for e in order:
                a, b = g.ends[e]
                if v == a:
                    v = b
                elif v == b:
                    v = a
                else:
                    ok = False
                    break
            if ok and v == start:
                forms = []
                for seq in (order, order[::-1]):
                    forms += [seq[i:] + seq[:i] for i in range(m)]
                seen.add(min(forms))
    return len(seen)


def test_make_cycle_chains():
    assert make_cycle(cycle_graph(3), [0, 1, 2], 0).vertex_chain == (0, 1, 2, 0)
    k2 = Multigraph.from_edges(2, [(0, 1), (0, 1)])
    assert make_cycle(k2, [0, 1], 0).vertex_chain == (0, 1, 0)


def test_non_standard_cycle_of_doubled_triangle():
    g = extender(cycle_graph(3), 2)
    # edge ids: copy j of e_i is 3*(j-1)+i, with e_0=[0,1], e_1=[1,2], e_2=[2,0]
    c = make_cycle(g, [0, 3, 1, 2, 5, 4])
    assert is_euler(g, c)
    assert c.vertex_chain[0] == c.vertex_chain[-1]


def test_make_cycle_rejects_broken_walks_and_repeats():
    with pytest.raises(PreconditionError):
        make_cycle(cycle_graph(4), [0, 2, 1, 3])
    with pytest.raises(PreconditionError):
        make_cycle(cycle_graph(3), [0, 0, 1])


def test_sequence_classes_ignore_rotation_and_reversal():
    a = EdgeCycle((0, 1, 2, 3), (0, 1, 2, 3, 0))
    b = EdgeCycle((2, 1, 0, 3), (3, 2, 1, 0, 3))
    assert sequence_class_equal(a, b)


def test_dihedral_relations():
    for ell in (3, 4, 6):
        phi, tau = DihedralElement.named("phi", ell), DihedralElement.named("tau", ell)
        assert tau.then(phi).then(tau) == phi.inverse()
        assert len(set(dihedral_group(ell))) == 2 * ell


def test_rotation_induces_phi_and_identity_induces_nothing():
    inst = build(FamilySpec.of("CycleN", n=5))
    c = make_cycle(inst.graph, range(5), 0)
    assert induced_element(inst.graph, c, inst.g) == DihedralElement.named("phi", 5)
    assert induced_element(inst.graph, c, identity(inst.graph)) == DihedralElement(0, False, 5)


@pytest.mark.parametrize("s,t", [(1, 2), (2, 3)])
def test_copywise_bipartite_generator_shifts_by_two(s, t):
    inst = build(FamilySpec.of("Kst", lam=2, s=s, t=t))
    cert = construct_symmetrical_euler(inst)
    base = build(FamilySpec.of("Kst", s=s, t=t))
    lifted = lift_copywise(base.graph, base.g, 2)
    assert induced_element(inst.graph, cert.cycle, lifted) == DihedralElement.named("phi2", 2 * s * t)


def test_h_shapes_of_constructed_cycles():
    c5 = construct_symmetrical_euler(build(FamilySpec.of("CycleN", n=5)))
    assert c5.shape is HShape.DC and c5.h.order == 10
    cst = construct_symmetrical_euler(build(FamilySpec.of("CstCycle", r=2, s=1, t=2)))
    assert cst.shape is HShape.PHI2_TAU


def test_complete_bipartite_cycles_are_phi2_tau_by_exhaustion():
    # every reflection fixing an edge of the cycle would swap its two ends,
    # which lie in parts of different sizes; so only the vertex-fixing kind occurs
    for spec in (FamilySpec.of("Kst", lam=2, s=1, t=2), FamilySpec.of("Kst", lam=2, s=1, t=3)):
        g = build(spec).graph
        shapes = {h_group(g, c).shape for c in enumerate_euler_cycles(g) if is_symmetrical(g, c)}
        assert shapes == {HShape.PHI2_TAU}


def test_classify_h():
    ell = 6
    dc = dihedral_group(ell)
    assert classify_h(dc, ell).shape is HShape.DC
    evens = [d for d in dc if not d.reflected and d.shift % 2 == 0]
    assert classify_h(evens, ell).shape is HShape.PHI2


def test_construction_examples():
    cert = construct_symmetrical_euler(build(FamilySpec.of("Kst", lam=2, s=2, t=3)))
    assert isinstance(cert, EulerCertificate) and len(cert.cycle) == 12
    odd = construct_symmetrical_euler(build(FamilySpec.of("Gamma2r1r", r=3)))
    assert odd == NotExists(NotExistsReason.R_ODD)
    circ = construct_symmetrical_euler(build(FamilySpec.of("GammaNAB", n=5, a=1, b=2)))
    assert isinstance(circ, EulerCertificate)


def test_certificates_are_self_consistent():
    for spec in (FamilySpec.of("CycleN", lam=2, n=4), FamilySpec.of("Gamma2r2r", r=3),
                 FamilySpec.of("CstCycle", r=3, s=1, t=2), FamilySpec.of("K2Lambda", mult=4)):
        inst = build(spec)
        cert = construct_symmetrical_euler(inst)
        assert is_euler(inst.graph, cert.cycle)
        for name, a in cert.inducers.items():
            got = induced_element(inst.graph, cert.cycle, a)
            if name in ("phi", "phi2", "tau", "phitau"):
                assert got == DihedralElement.named(name, len(cert.cycle))
            else:
                assert str(got) == name
        assert certify(inst.graph, cert.cycle).h == cert.h


def test_doubled_triangle_euler_classes_match_brute_force():
    g = extender(cycle_graph(3), 2)
    cycles = enumerate_euler_cycles(g)
    assert len(cycles) == brute_force_euler_classes(g) == 16
    assert brute_force_euler_classes(cycle_graph(4)) == len(enumerate_euler_cycles(cycle_graph(4))) == 1


def test_symmetrical_cycles_of_doubled_cycles_are_dihedral():
    for n in (3, 4):
        g = extender(cycle_graph(n), 2)
        auts = full_automorphism_group(g)
        sym = [c for c in enumerate_euler_cycles(g) if is_symmetrical(g, c, auts)]
        assert sym and {h_group(g, c, auts).shape for c in sym} == {HShape.DC}


def test_frozen_enumeration_counts():
    g = build(FamilySpec.of("Kst", lam=2, s=2, t=3)).graph
    cycles = enumerate_euler_cycles(g)
    assert len(cycles) == 2496
    assert sum(is_symmetrical(g, c) for c in cycles) == 64
    g = build(FamilySpec.of("Gamma2r1r", r=3)).graph
    assert len(enumerate_euler_cycles(g)) == 328


def test_enumeration_respects_cap():
    with pytest.raises(CapExceeded):
        enumerate_euler_cycles(build(FamilySpec.of("Kst", lam=2, s=2, t=3)).graph, cap=10)
