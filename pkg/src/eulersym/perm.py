"""Automorphisms of multigraphs and the cyclic groups they generate.

Maps act on the right, matching the usual convention for permutation groups:
``compose(a, b)`` first applies ``a`` and then ``b``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import lcm
from typing import Any, Iterable, Sequence

from .errors import IncidenceError, PreconditionError
from .multigraph import Multigraph


@dataclass(frozen=True)
class GraphMap:
    vertex_image: tuple[int, ...]
    edge_image: tuple[int, ...]

    def to_json(self) -> dict[str, Any]:
        return {"vertex_image": list(self.vertex_image), "edge_image": list(self.edge_image)}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "GraphMap":
        try:
            return cls(tuple(int(x) for x in data["vertex_image"]),
                       tuple(int(x) for x in data["edge_image"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise PreconditionError(f"malformed automorphism JSON: {exc}") from None


@dataclass(frozen=True)
class Automorphism(GraphMap):
    """A GraphMap known to preserve incidence on ``graph``."""

    graph: Multigraph = field(compare=False, repr=False, default=None)

    @property
    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.vertex_image, self.edge_image

    def __call__(self, x: int) -> int:
        return self.vertex_image[x]

    def edge(self, e: int) -> int:
        return self.edge_image[e]


def _is_bijection(arr: Sequence[int], size: int) -> bool:
    return len(arr) == size and sorted(arr) == list(range(size))


def validate_automorphism(g: Multigraph, m: GraphMap | Sequence) -> Automorphism:
    """Check ``m`` against ``g`` and return it as an Automorphism.

    Raises IncidenceError naming the first edge whose image has the wrong ends.
    """
    if not isinstance(m, GraphMap):
        m = GraphMap(tuple(m[0]), tuple(m[1]))
    vi, ei = tuple(m.vertex_image), tuple(m.edge_image)
    if not _is_bijection(vi, g.vertex_count):
        raise IncidenceError("vertex image is not a bijection of V")
    if not _is_bijection(ei, g.edge_count):
        raise IncidenceError("edge image is not a bijection of E")
    ends = g.ends
    for e, (u, v) in enumerate(ends):
        a, b = vi[u], vi[v]
        if (a, b) != ends[ei[e]] and (b, a) != ends[ei[e]]:
            raise IncidenceError(
                f"edge {e} = [{u},{v}] maps to edge {ei[e]} = {list(ends[ei[e]])}, "
                f"expected ends {{{a},{b}}}", edge=e)
    return Automorphism(vi, ei, g)


def _trusted(g: Multigraph, vi: Sequence[int], ei: Sequence[int]) -> Automorphism:
    return Automorphism(tuple(vi), tuple(ei), g)


def identity(g: Multigraph) -> Automorphism:
    return _trusted(g, range(g.vertex_count), range(g.edge_count))


def _same_host(a: Automorphism, b: Automorphism) -> None:
    if a.graph is not b.graph and a.graph != b.graph:
        raise PreconditionError("automorphisms act on different graphs")


def compose(a: Automorphism, b: Automorphism) -> Automorphism:
    """``a`` followed by ``b``."""
    _same_host(a, b)
    bv, be = b.vertex_image, b.edge_image
    return _trusted(a.graph, [bv[x] for x in a.vertex_image], [be[x] for x in a.edge_image])


def inverse(a: Automorphism) -> Automorphism:
    vi = [0] * len(a.vertex_image)
    for x, y in enumerate(a.vertex_image):
        vi[y] = x
    ei = [0] * len(a.edge_image)
    for x, y in enumerate(a.edge_image):
        ei[y] = x
    return _trusted(a.graph, vi, ei)


def _perm_power(p: Sequence[int], k: int) -> list[int]:
    out = list(range(len(p)))
    base = list(p)
    while k:
        if k & 1:
            out = [base[x] for x in out]
        base = [base[x] for x in base]
        k >>= 1
    return out


def power(a: Automorphism, k: int) -> Automorphism:
    if k < 0:
        return power(inverse(a), -k)
    return _trusted(a.graph, _perm_power(a.vertex_image, k), _perm_power(a.edge_image, k))


def cycles_of(p: Sequence[int]) -> list[list[int]]:
    """Cycle decomposition, each cycle starting at its least point, in order of that point."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(cyc)
    return out


def perm_order(p: Sequence[int]) -> int:
    return lcm(*(len(c) for c in cycles_of(p))) if len(p) else 1


@dataclass(frozen=True)
class CyclicAction:
    generator: Automorphism
    order: int
    edge_orbits: tuple[tuple[int, ...], ...]
    vertex_orbits: tuple[tuple[int, ...], ...]

    @property
    def edge_order(self) -> int:
        """Order of the permutation group induced on E."""
        return lcm(*(len(o) for o in self.edge_orbits)) if self.edge_orbits else 1


def cyclic_action(a: Automorphism) -> CyclicAction:
    """Order and orbits of the cyclic group generated by ``a``.

    The orbits of a cyclic group are exactly the cycles of its generator.
    """
    ecyc = cycles_of(a.edge_image)
    vcyc = cycles_of(a.vertex_image)
    order = lcm(1, *(len(c) for c in ecyc), *(len(c) for c in vcyc))
    return CyclicAction(a, order, tuple(map(tuple, ecyc)), tuple(map(tuple, vcyc)))


class ActionKind(enum.Enum):
    REGULAR = "Regular"
    BIREGULAR = "BiRegular"
    NEITHER = "Neither"


@dataclass(frozen=True)
class ActionClass:
    kind: ActionKind
    edge_group_order: int
    faithful_on_edges: bool
    orbit_faithful: tuple[bool, ...]
    degenerate: bool = False

    @property
    def is_cyclic_edge_action(self) -> bool:
        return self.kind is not ActionKind.NEITHER


def classify_action(c: CyclicAction) -> ActionClass:
    """Regular: one E-orbit and |G^E| = |E|. BiRegular: two E-orbits and |G^E| = |E|/2.

    ``degenerate`` marks bi-regular actions whose orbits are single edges,
    which the definition admits but which carry no real symmetry.
    """
    m = sum(len(o) for o in c.edge_orbits)
    ge = c.edge_order
    per_orbit = tuple(len(o) == ge for o in c.edge_orbits)
    faithful = ge == c.order
    if m == 0:
        return ActionClass(ActionKind.NEITHER, ge, faithful, per_orbit)
    if len(c.edge_orbits) == 1 and ge == m:
        kind = ActionKind.REGULAR
    elif len(c.edge_orbits) == 2 and 2 * ge == m:
        kind = ActionKind.BIREGULAR
    else:
        kind = ActionKind.NEITHER
    degenerate = kind is ActionKind.BIREGULAR and m == 2
    return ActionClass(kind, ge, faithful, per_orbit, degenerate)


def edge_kernel(g: Multigraph, auts: Iterable[Automorphism]) -> list[Automorphism]:
    """Members of ``auts`` fixing every edge."""
    ident = tuple(range(g.edge_count))
    return [a for a in auts if a.edge_image == ident]


def has_k2_component(g: Multigraph) -> bool:
    """True when some connected component is two vertices joined by parallel edges."""
    from .multigraph import components
    for comp in components(g):
        h = comp.graph
        if h.vertex_count == 2 and h.edge_count >= 1:
            return True
    return False


def orbits_of_group(size: int, perms: Iterable[Sequence[int]]) -> list[list[int]]:
    """Orbits of the group generated by ``perms`` on ``range(size)``, via union-find."""
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for x, y in enumerate(p):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    groups: dict[int, list[int]] = {}
    for x in range(size):
        groups.setdefault(find(x), []).append(x)
    return [groups[r] for r in sorted(groups)]


def generated_group(gens: Sequence[Automorphism], cap: int = 1_000_000) -> list[Automorphism]:
    """All elements of the group generated by ``gens`` (breadth-first closure)."""
    from .errors import CapExceeded
    if not gens:
        raise PreconditionError("need at least one generator")
    g = gens[0].graph
    start = identity(g)
    seen = {start.key: start}
    frontier = [start]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                b = compose(a, s)
                if b.key not in seen:
                    seen[b.key] = b
                    nxt.append(b)
                    if len(seen) > cap:
                        raise CapExceeded(f"group closure exceeds {cap} elements")
        frontier = nxt
    return list(seen.values())


def from_maps(g: Multigraph, vertex_map: dict, edge_map: dict,
              vertex_key: Sequence, edge_key: Sequence | None = None) -> Automorphism:
    """Build and validate an automorphism given on coordinates instead of ids.

    ``vertex_key[v]`` is the coordinate of vertex ``v``; ``edge_key`` defaults
    to the graph labels. ``vertex_map`` and ``edge_map`` are callables (or
    dicts) on coordinates.
    """
    if edge_key is None:
        edge_key = g.labels
    vindex = {k: v for v, k in enumerate(vertex_key)}
    eindex = {k: e for e, k in enumerate(edge_key)}
    vf = vertex_map if callable(vertex_map) else vertex_map.__getitem__
    ef = edge_map if callable(edge_map) else edge_map.__getitem__
    try:
        vi = [vindex[vf(k)] for k in vertex_key]
        ei = [eindex[ef(k)] for k in edge_key]
    except KeyError as exc:
        raise IncidenceError(f"coordinate map leaves the graph: {exc}") from None
    return validate_automorphism(g, GraphMap(tuple(vi), tuple(ei)))


def extend_edge_map(g: Multigraph, edge_image: Sequence[int]) -> Automorphism | None:
    """An automorphism with exactly this edge action, or None if there is none.

    Each vertex must go to a common endpoint of the images of its edges, so
    candidates are intersections of endpoint pairs; the remaining freedom is
    settled per component by fixing one vertex and propagating along edges.
    Isolated vertices are left in place.
    """
    ei = tuple(edge_image)
    if not _is_bijection(ei, g.edge_count):
        return None
    ends = g.ends
    n = g.vertex_count
    cand: list[set[int] | None] = [None] * n
    for e, (u, v) in enumerate(ends):
        img = set(ends[ei[e]])
        for x in (u, v):
            cand[x] = img if cand[x] is None else cand[x] & img
            if not cand[x]:
                return None
    vi = [-1] * n
    for v in range(n):
        if cand[v] is None:
            vi[v] = v
    for start in range(n):
        if vi[start] != -1:
            continue
        for choice in sorted(cand[start]):
            trial = dict()
            trial[start] = choice
            stack = [start]
            ok = True
            while stack and ok:
                x = stack.pop()
                for e in g.incidence[x]:
                    y = g.other_end(e, x)
                    a, b = ends[ei[e]]
                    want = b if trial[x] == a else a
                    if y in trial:
                        if trial[y] != want:
                            ok = False
                            break
                    elif vi[y] != -1:
                        ok = False
                        break
                    elif want not in cand[y]:
                        ok = False
                        break
                    else:
                        trial[y] = want
                        stack.append(y)
            if ok:
                for x, y in trial.items():
                    vi[x] = y
                break
        else:
            return None
    if sorted(vi) != list(range(n)):
        return None
    try:
        return validate_automorphism(g, GraphMap(tuple(vi), ei))
    except IncidenceError:
        return None
