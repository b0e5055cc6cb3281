"""Bi-coset graphs of small finite groups given by multiplication tables.

For subgroups L, R, J of G with J <= L and J <= R, the bi-coset graph has the
right cosets of L and of R as vertices and the right cosets of J as edges,
the edge Jy joining Ly to Ry. G acts on it by right multiplication.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd
from typing import Any, Iterable, Sequence

from .errors import PreconditionError
from .multigraph import Multigraph, base_graph_and_multiplicity, components
from .perm import (ActionKind, Automorphism, CyclicAction, GraphMap, classify_action,
                   cyclic_action, cycles_of, generated_group, power, validate_automorphism)


class BiCosetError(PreconditionError):
    """A (G, L, R, J) tuple violates one of the bi-coset hypotheses."""


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    name: str = ""

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        inv = [0] * self.order
        for a in range(self.order):
            row = self.table[a]
            inv[a] = row.index(self.identity)
        return tuple(inv)

    def validate(self) -> "FiniteGroup":
        n = self.order
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise PreconditionError("multiplication table must be order x order")
        full = list(range(n))
        for row in self.table:
            if sorted(row) != full:
                raise PreconditionError("each table row must be a permutation of the elements")
        for a in range(n):
            if self.table[self.identity][a] != a or self.table[a][self.identity] != a:
                raise PreconditionError(f"element {self.identity} is not an identity")
        t = self.table
        for a, b, c in product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise PreconditionError(f"not associative at ({a},{b},{c})")
        return self

    # -- constructions ------------------------------------------------------

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        return cls(n, tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), 0, f"Z{n}")

    @classmethod
    def dihedral(cls, order: int) -> "FiniteGroup":
        """Dihedral group of the given (even) order; element (k, f) stored as k + n*f."""
        if order < 2 or order % 2:
            raise PreconditionError("dihedral group order must be even and at least 2")
        n = order // 2

        def mul(x: int, y: int) -> int:
            k1, f1 = x % n, x // n
            k2, f2 = y % n, y // n
            k = (k1 + (-k2 if f1 else k2)) % n
            return k + n * (f1 ^ f2)

        return cls(order, tuple(tuple(mul(x, y) for y in range(order)) for x in range(order)),
                   0, f"D{order}")

    @classmethod
    def direct_product(cls, g: "FiniteGroup", h: "FiniteGroup") -> "FiniteGroup":
        """Element (a, b) stored as a * |H| + b."""
        m = h.order

        def mul(x: int, y: int) -> int:
            return g.mul(x // m, y // m) * m + h.mul(x % m, y % m)

        n = g.order * m
        return cls(n, tuple(tuple(mul(x, y) for y in range(n)) for x in range(n)),
                   g.identity * m + h.identity, f"{g.name}x{h.name}")

    # -- JSON ------------------------------------------------------------------

    def to_json(self) -> dict[str, Any]:
        return {"order": self.order, "table": [list(r) for r in self.table],
                "identity": self.identity}

    @classmethod
    def from_json(cls, data: dict[str, Any] | str) -> "FiniteGroup":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            table = tuple(tuple(int(x) for x in row) for row in data["table"])
            order = int(data.get("order", len(table)))
        except (KeyError, TypeError, ValueError) as exc:
            raise PreconditionError(f"malformed group JSON: {exc}") from None
        ident = data.get("identity")
        if ident is None:
            ident = next((a for a in range(order) if list(table[a]) == list(range(order))), 0)
        return cls(order, table, int(ident)).validate()

    # -- subgroups -------------------------------------------------------------------

    def closure(self, gens: Iterable[int]) -> frozenset[int]:
        out = {self.identity}
        frontier = list(out)
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.mul(x, s)
                    if y not in out:
                        out.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(out)

    def is_subgroup(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        if self.identity not in s:
            return False
        return all(self.mul(a, b) in s for a in s for b in s)

    def all_subgroups(self) -> list[frozenset[int]]:
        """Every subgroup, as joins of cyclic subgroups; sorted by size then elements."""
        cyclic = {self.closure([a]) for a in range(self.order)}
        subs = set(cyclic)
        frontier = set(cyclic)
        while frontier:
            new = set()
            for h in frontier:
                for c in cyclic:
                    if not c <= h:
                        j = self.closure(h | c)
                        if j not in subs:
                            new.add(j)
            subs |= new
            frontier = new
        return sorted(subs, key=lambda s: (len(s), sorted(s)))

    def product_set(self, a: Iterable[int], b: Iterable[int]) -> frozenset[int]:
        return frozenset(self.mul(x, y) for x in a for y in b)

    def conjugate(self, s: Iterable[int], g: int) -> frozenset[int]:
        gi = self.inverses[g]
        return frozenset(self.mul(self.mul(gi, x), g) for x in s)

    def core(self, s: Iterable[int]) -> frozenset[int]:
        out = frozenset(s)
        for g in range(self.order):
            out &= self.conjugate(s, g)
        return out

    def right_cosets(self, s: Iterable[int]) -> list[frozenset[int]]:
        """Right cosets Sx, sorted by least element (the canonical representative)."""
        s = frozenset(s)
        seen: set[int] = set()
        out = []
        for x in range(self.order):
            if x in seen:
                continue
            coset = frozenset(self.mul(h, x) for h in s)
            seen |= coset
            out.append(coset)
        return sorted(out, key=min)


@dataclass(frozen=True)
class BiCosetSpec:
    group: FiniteGroup
    L: frozenset[int]
    R: frozenset[int]
    J: frozenset[int]

    @classmethod
    def of(cls, group: FiniteGroup, L: Iterable[int], R: Iterable[int], J: Iterable[int]) -> "BiCosetSpec":
        spec = cls(group, frozenset(L), frozenset(R), frozenset(J))
        spec.validate()
        return spec

    def validate(self) -> None:
        G = self.group
        for name, s in (("L", self.L), ("R", self.R), ("J", self.J)):
            if not G.is_subgroup(s):
                raise BiCosetError(f"{name} is not a subgroup")
        if self.L == self.R:
            raise BiCosetError("L and R must differ")
        if not self.J <= (self.L & self.R):
            raise BiCosetError("J must lie in the intersection of L and R")
        if G.core(self.J) != frozenset({G.identity}):
            raise BiCosetError("J is not core-free")

    def to_json(self) -> dict[str, Any]:
        return {"group": self.group.to_json(), "L": sorted(self.L), "R": sorted(self.R),
                "J": sorted(self.J)}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "BiCosetSpec":
        return cls.of(FiniteGroup.from_json(data["group"]), data["L"], data["R"], data["J"])


def bicos(spec: BiCosetSpec) -> tuple[Multigraph, dict[int, Automorphism]]:
    """The bi-coset graph and the right-multiplication automorphism of each group element.

    Vertices are the L-cosets then the R-cosets, and edges the J-cosets, each
    list ordered by least element; edge labels are those least elements.
    """
    spec.validate()
    G = spec.group
    lcos, rcos, jcos = G.right_cosets(spec.L), G.right_cosets(spec.R), G.right_cosets(spec.J)
    lof = {x: i for i, c in enumerate(lcos) for x in c}
    rof = {x: len(lcos) + i for i, c in enumerate(rcos) for x in c}
    jof = {x: i for i, c in enumerate(jcos) for x in c}
    ends = []
    for c in jcos:
        y = min(c)
        ends.append((lof[y], rof[y]))
    g = Multigraph.from_edges(len(lcos) + len(rcos), ends, [min(c) for c in jcos])
    actions = {}
    vreps = [min(c) for c in lcos] + [min(c) for c in rcos]
    for x in range(G.order):
        vi = [lof[G.mul(r, x)] if v < len(lcos) else rof[G.mul(r, x)] for v, r in enumerate(vreps)]
        ei = [jof[G.mul(min(c), x)] for c in jcos]
        actions[x] = validate_automorphism(g, GraphMap(tuple(vi), tuple(ei)))
    return g, actions


@dataclass(frozen=True)
class BiCosReport:
    s: int
    t: int
    lam: int
    connected_group: bool
    connected_graph: bool
    complete_group: bool
    complete_graph: bool
    valency_graph: tuple[int, int]
    lam_graph: int | None

    @property
    def agree(self) -> bool:
        return (self.connected_group == self.connected_graph
                and self.complete_group == self.complete_graph
                and self.valency_graph == (self.s, self.t)
                and self.lam_graph == self.lam)

    def to_json(self) -> dict[str, Any]:
        out = dict(vars(self))
        out["valency_graph"] = list(self.valency_graph)
        out["agree"] = self.agree
        return out


def bicos_properties(spec: BiCosetSpec) -> BiCosReport:
    """Valencies, multiplicity, connectivity and completeness, from the group and from the graph."""
    G = spec.group
    inter = spec.L & spec.R
    s = len(spec.L) // len(inter)
    t = len(spec.R) // len(inter)
    lam = len(inter) // len(spec.J)
    connected_group = G.closure(spec.L | spec.R) == frozenset(range(G.order))
    complete_group = len(G.product_set(spec.L, spec.R)) == G.order
    g, _ = bicos(spec)
    nl = G.order // len(spec.L)
    left, right = range(nl), range(nl, g.vertex_count)
    complete_graph = all(g.multiplicity(u, v) > 0 for u in left for v in right)
    valency = (len(g.neighbours[0]), len(g.neighbours[nl]))
    bm = base_graph_and_multiplicity(g)
    return BiCosReport(s, t, lam, connected_group, g.is_connected(), complete_group,
                       complete_graph, valency, None if bm is None else bm[1])


def valid_specs(group: FiniteGroup) -> Iterable[BiCosetSpec]:
    """Every (L, R, J) meeting the bi-coset hypotheses, in a fixed order."""
    subs = group.all_subgroups()
    ident = frozenset({group.identity})
    for L in subs:
        for R in subs:
            if L == R:
                continue
            inter = L & R
            for J in subs:
                if J <= inter and group.core(J) == ident:
                    yield BiCosetSpec(group, L, R, J)


def sweep_groups(max_order: int = 24) -> list[FiniteGroup]:
    """Cyclic, dihedral and two-factor cyclic products of order at most ``max_order``."""
    out = [FiniteGroup.cyclic(n) for n in range(1, max_order + 1)]
    out += [FiniteGroup.dihedral(n) for n in range(4, max_order + 1, 2)]
    for m in range(2, max_order + 1):
        for n in range(m, max_order // m + 1):
            if gcd(m, n) > 1:  # coprime products are already cyclic
                out.append(FiniteGroup.direct_product(FiniteGroup.cyclic(m), FiniteGroup.cyclic(n)))
    return out


# -- recovering a bi-coset description ----------------------------------------------------


@dataclass(frozen=True)
class MatchingCase:
    """The degenerate answer: r disjoint copies of K2 with lam parallel edges."""
    r: int
    lam: int


def _as_group(auts: Sequence[Automorphism]) -> tuple[FiniteGroup, list[Automorphism]]:
    elems = generated_group(list(auts))
    elems.sort(key=lambda a: a.key)
    ident = tuple(range(len(elems[0].vertex_image))), tuple(range(len(elems[0].edge_image)))
    elems.sort(key=lambda a: (a.key != ident, a.key))
    index = {a.key: i for i, a in enumerate(elems)}
    from .perm import compose
    table = tuple(tuple(index[compose(a, b).key] for b in elems) for a in elems)
    return FiniteGroup(len(elems), table, 0), elems


def from_edge_transitive(g: Multigraph, auts: Sequence[Automorphism]) -> tuple[BiCosetSpec, list[Automorphism]] | MatchingCase:
    """Stabilisers of an edge and its ends, for a group with two vertex orbits that is transitive on E.

    Returns the spec together with the group elements in table order, or
    the matching case when the two end stabilisers coincide.
    """
    from .perm import orbits_of_group
    if g.edge_count == 0 or any(d == 0 for d in g.degrees):
        raise PreconditionError("graph must have edges and no isolated vertices")
    if base_graph_and_multiplicity(g) is None:
        raise PreconditionError("graph must have constant edge multiplicity")
    group, elems = _as_group(auts)
    if len(orbits_of_group(g.edge_count, [a.edge_image for a in elems])) != 1:
        raise PreconditionError("group is not transitive on edges")
    vorb = orbits_of_group(g.vertex_count, [a.vertex_image for a in elems])
    if len(vorb) != 2:
        raise PreconditionError("group must have exactly two vertex orbits")
    a, b = g.ends[0]
    L = frozenset(i for i, x in enumerate(elems) if x.vertex_image[a] == a)
    R = frozenset(i for i, x in enumerate(elems) if x.vertex_image[b] == b)
    J = frozenset(i for i, x in enumerate(elems) if x.edge_image[0] == 0)
    if L == R:
        return MatchingCase(len(vorb[0]), g.multiplicity(a, b))
    return BiCosetSpec.of(group, L, R, J), elems


# -- cyclic edge-regular groups --------------------------------------------------------


@dataclass(frozen=True)
class CyclicEdgeRow:
    row: str
    params: dict
    components: int
    group_order: int
    component_order: int
    vertex_transitive: bool
    edge_transitive: bool
    arc_transitive: bool

    @property
    def matches_table(self) -> bool:
        p = self.params
        if self.row == "C_n^(lambda)":
            return (self.component_order == p["n"] * p["lambda"] and self.vertex_transitive
                    and not self.arc_transitive)
        if self.row == "K_{s,t}^(lambda)":
            return (self.component_order == p["s"] * p["t"] * p["lambda"]
                    and not self.vertex_transitive and not self.arc_transitive
                    and gcd(p["s"], p["t"]) == 1 and p["s"] * p["t"] > 1)
        return self.row == "K_2^(lambda)"

    def to_json(self) -> dict[str, Any]:
        out = dict(vars(self))
        out["matches_table"] = self.matches_table
        return out


def _arc_orbits(g: Multigraph, a: Automorphism) -> int:
    arcs = [(e, u) for e, (u, v) in enumerate(g.ends)] + [(e, v) for e, (u, v) in enumerate(g.ends)]
    index = {arc: i for i, arc in enumerate(arcs)}
    perm = [index[(a.edge_image[e], a.vertex_image[u])] for e, u in arcs]
    return len(cycles_of(perm))


def _identify(base: Multigraph) -> tuple[str, dict]:
    n = base.vertex_count
    if n == 2:
        return "K_2^(lambda)", {}
    if all(d == 2 for d in base.degrees) and base.edge_count == n:
        return "C_n^(lambda)", {"n": n}
    side = [-1] * n
    side[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for w in base.neighbours[v]:
            if side[w] == -1:
                side[w] = 1 - side[v]
                stack.append(w)
            elif side[w] == side[v]:
                return "unclassified", {}
    s, t = side.count(0), side.count(1)
    if base.edge_count == s * t:
        return "K_{s,t}^(lambda)", {"s": s, "t": t}
    return "unclassified", {}


def cyclic_edge_transitive_classification(g: Multigraph, c: CyclicAction) -> CyclicEdgeRow:
    """Identify a graph carrying a cyclic group regular on its edges.

    A disconnected graph is r copies of one component; the component is
    classified under the stabiliser of one copy, the r-th power of the generator.
    """
    if classify_action(c).kind is not ActionKind.REGULAR:
        raise PreconditionError("the action is not regular on the edges")
    if any(d == 0 for d in g.degrees):
        raise PreconditionError("graph has isolated vertices")
    comps = components(g)
    r = len(comps)
    first = next(x for x in comps if 0 in x.host_edge)
    stab = power(c.generator, r)
    vloc = {v: i for i, v in enumerate(first.host_vertex)}
    eloc = {e: i for i, e in enumerate(first.host_edge)}
    try:
        sub = validate_automorphism(first.graph, GraphMap(
            tuple(vloc[stab.vertex_image[v]] for v in first.host_vertex),
            tuple(eloc[stab.edge_image[e]] for e in first.host_edge)))
    except KeyError:
        raise PreconditionError("the r-th power of the generator does not fix a component") from None
    sc = cyclic_action(sub)
    bm = base_graph_and_multiplicity(first.graph)
    if bm is None:
        raise PreconditionError("component multiplicity is not constant")
    base, lam = bm
    row, params = _identify(base)
    params["lambda"] = lam
    return CyclicEdgeRow(row, params, r, c.order, sc.order, len(sc.vertex_orbits) == 1,
                         len(sc.edge_orbits) == 1, _arc_orbits(first.graph, sub) == 1)
