import pytest

from eulersym.errors import ConstraintError, PreconditionError
from eulersym.families import FamilySpec, build, enumerate_specs, recognize, table_rows
from eulersym.lift import lift_automorphism
from eulersym.multigraph import Multigraph
from eulersym.perm import ActionKind, classify_action, cyclic_action, power


def test_cycle_member():
    inst = build(FamilySpec.of("CycleN", n=5))
    assert (inst.graph.vertex_count, inst.graph.edge_count) == (5, 5)
    c = cyclic_action(inst.g)
    assert c.order == 5 and len(c.vertex_orbits) == 1
    assert classify_action(c).kind is ActionKind.REGULAR


def test_all_ones_kk_is_a_path_with_trivial_group():
    inst = build(FamilySpec.of("KK", r=1, rp=1, s=1, t=1, tp=1, u=1))
    assert (inst.graph.vertex_count, inst.graph.edge_count) == (3, 2)
    assert cyclic_action(inst.g).order == 1


def test_smallest_ck_member():
    inst = build(FamilySpec.of("CK", r=1, n=2, t=1))
    assert inst.graph.vertex_count == 3 and inst.graph.edge_count == 4
    c = cyclic_action(inst.g)
    assert c.order == 2 and classify_action(c).kind is ActionKind.BIREGULAR


@pytest.mark.parametrize("family,params,text", [
    ("CycleN", {"n": 2}, "n >= 3"),
    ("Gamma2r2r", {"r": 4}, "r odd"),
    ("Kst", {"s": 2, "t": 4}, "gcd"),
])
def test_constraint_errors_name_the_constraint(family, params, text):
    with pytest.raises(ConstraintError) as info:
        build(FamilySpec.of(family, **params))
    assert text in info.value.constraint


def test_unknown_family_and_wrong_parameters():
    with pytest.raises(PreconditionError):
        FamilySpec.of("Petersen")
    with pytest.raises(PreconditionError):
        FamilySpec.of("Kst", s=1)


def test_spec_json_round_trip():
    spec = FamilySpec.of("KK", lam=2, r=1, rp=2, s=1, t=1, tp=1, u=3)
    assert FamilySpec.from_json(spec.to_json()) == spec


def test_enumeration_examples():
    assert [str(s) for s in enumerate_specs(4, 4, ("CycleN",))] == ["CycleN(n=3)", "CycleN(n=4)"]
    kst = {(s.p["s"], s.p["t"]) for s in enumerate_specs(8, 8, ("Kst",)) if s.lam == 1}
    assert {(1, 2), (1, 3), (2, 3)} <= kst and (3, 4) not in kst
    assert [str(s) for s in enumerate_specs(12, 12, ("Gamma2r2r",))] == ["Gamma2r2r(r=3)"]


def test_recognize_cycle():
    inst = build(FamilySpec.of("CycleN", n=6))
    assert FamilySpec.of("CycleN", n=6) in recognize(inst.graph, cyclic_action(inst.g))
    rows = [r.key for r, _ in table_rows(FamilySpec.of("CycleN", n=6))]
    assert "bi2-cycle" in rows


def test_recognize_lifted_complete_bipartite():
    spec = FamilySpec.of("Kst", lam=2, s=2, t=3)
    inst = build(spec)
    assert spec in recognize(inst.graph, cyclic_action(inst.g))
    assert ("bi2-kst2", 6) in [(r.key, o) for r, o in table_rows(spec)]


def test_recognize_refuses_non_cyclic_actions_and_tiny_graphs():
    inst = build(FamilySpec.of("CycleN", n=6))
    with pytest.raises(PreconditionError):
        recognize(inst.graph, cyclic_action(power(inst.g, 3)))
    with pytest.raises(PreconditionError):
        recognize(Multigraph.from_edges(2, [(0, 1), (0, 1)]))


def test_lift_keeps_expected_order():
    base = build(FamilySpec.of("CstCycle", r=2, s=1, t=2))
    big = build(FamilySpec.of("CstCycle", lam=3, r=2, s=1, t=2))
    assert cyclic_action(big.g).order == 3 * cyclic_action(base.g).order
    assert lift_automorphism(base.graph, base.g, 3).edge_image == big.g.edge_image
