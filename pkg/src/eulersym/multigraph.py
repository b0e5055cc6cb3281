"""Finite undirected multigraphs without loops.

Vertices and edges are dense integer ids. Each edge stores its endpoints as
a sorted pair, so ``[a, e, b]`` and ``[b, e, a]`` are the same edge. Edges may
carry a structured label (a tuple of ints/strings, possibly nested) recording
the coordinates a family constructor used for it.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Hashable, Iterable, Sequence

from .errors import PreconditionError

Label = Hashable


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    ends: tuple[tuple[int, int], ...]
    labels: tuple[Label, ...] | None = field(default=None)

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise PreconditionError("vertex_count must be nonnegative")
        norm = []
        for k, (u, v) in enumerate(self.ends):
            if u == v:
                raise PreconditionError(f"edge {k} is a loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge {k} has endpoint out of range: {(u, v)}")
            norm.append((u, v) if u < v else (v, u))
        object.__setattr__(self, "ends", tuple(norm))
        if self.labels is not None:
            if len(self.labels) != len(self.ends):
                raise PreconditionError("labels must have one entry per edge")
            object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]],
                   labels: Iterable[Label] | None = None) -> "Multigraph":
        ends = tuple((int(u), int(v)) for u, v in edges)
        return cls(vertex_count, ends, None if labels is None else tuple(labels))

    @property
    def edge_count(self) -> int:
        return len(self.ends)

    def label(self, e: int) -> Label | None:
        return None if self.labels is None else self.labels[e]

    @cached_property
    def edge_by_label(self) -> dict[Label, int]:
        if self.labels is None:
            return {}
        table = {lab: e for e, lab in enumerate(self.labels)}
        if len(table) != len(self.labels):
            raise PreconditionError("edge labels are not unique")
        return table

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edges incident with each vertex, in edge-id order."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for e, (u, v) in enumerate(self.ends):
            inc[u].append(e)
            inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def bundles(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Parallel classes: endpoint pair -> edges joining it."""
        out: dict[tuple[int, int], list[int]] = defaultdict(list)
        for e, pair in enumerate(self.ends):
            out[pair].append(e)
        return {p: tuple(es) for p, es in out.items()}

    def multiplicity(self, u: int, v: int) -> int:
        pair = (u, v) if u < v else (v, u)
        return len(self.bundles.get(pair, ()))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incidence)

    @cached_property
    def neighbours(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.bundles:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    def other_end(self, e: int, v: int) -> int:
        u, w = self.ends[e]
        if v == u:
            return w
        if v == w:
            return u
        raise PreconditionError(f"vertex {v} is not incident with edge {e}")

    def is_connected(self) -> bool:
        return len(component_vertex_sets(self)) <= 1

    # -- serialization --------------------------------------------------

    def to_json(self) -> dict[str, Any]:
        edges = []
        for e, (u, v) in enumerate(self.ends):
            lab = self.label(e)
            edges.append({"id": e, "ends": [u, v],
                          "label": None if lab is None else encode_label(lab)})
        return {"vertex_count": self.vertex_count, "edges": edges}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Multigraph":
        try:
            n = int(data["vertex_count"])
            raw = sorted(data["edges"], key=lambda d: int(d["id"]))
        except (KeyError, TypeError) as exc:
            raise PreconditionError(f"malformed graph JSON: {exc}") from None
        if [int(d["id"]) for d in raw] != list(range(len(raw))):
            raise PreconditionError("edge ids must be exactly 0..|E|-1")
        ends = [tuple(d["ends"]) for d in raw]
        if any(len(p) != 2 for p in ends):
            raise PreconditionError("every edge needs exactly two ends")
        labs = [d.get("label") for d in raw]
        labels = None
        if any(x is not None for x in labs):
            labels = tuple(None if x is None else decode_label(x) for x in labs)
        return cls.from_edges(n, ends, labels)

    def to_dot(self) -> str:
        lines = ["graph {"]
        lines += [f"  {v};" for v in range(self.vertex_count) if not self.incidence[v]]
        lines += [f'  {u} -- {v} [label="{e}"];' for e, (u, v) in enumerate(self.ends)]
        lines.append("}")
        return "\n".join(lines) + "\n"


def _tuplify(x: Any) -> Any:
    if isinstance(x, list):
        return tuple(_tuplify(y) for y in x)
    return x


def encode_label(label: Label) -> str:
    """Labels travel through JSON as a compact JSON string."""
    return json.dumps(label, separators=(",", ":"))


def decode_label(text: str) -> Label:
    try:
        return _tuplify(json.loads(text))
    except json.JSONDecodeError:
        return text


# -- structural operations ---------------------------------------------


@dataclass(frozen=True)
class Embedded:
    """A graph together with the host ids of its vertices and edges."""

    graph: Multigraph
    host_vertex: tuple[int, ...]
    host_edge: tuple[int, ...]


def edge_induced_subgraph(g: Multigraph, edges: Iterable[int]) -> Embedded:
    """Subgraph on the given edges and the vertices they touch."""
    chosen = sorted(set(edges))
    for e in chosen:
        if not 0 <= e < g.edge_count:
            raise PreconditionError(f"edge {e} is not in the host graph")
    verts = sorted({v for e in chosen for v in g.ends[e]})
    local = {v: i for i, v in enumerate(verts)}
    ends = [(local[g.ends[e][0]], local[g.ends[e][1]]) for e in chosen]
    labels = None if g.labels is None else [g.labels[e] for e in chosen]
    sub = Multigraph.from_edges(len(verts), ends, labels)
    return Embedded(sub, tuple(verts), tuple(chosen))


def component_vertex_sets(g: Multigraph) -> list[list[int]]:
    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.ends:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = defaultdict(list)
    for v in range(g.vertex_count):
        groups[find(v)].append(v)
    return [groups[r] for r in sorted(groups)]


def components(g: Multigraph) -> list[Embedded]:
    """Connected components in order of their smallest vertex."""
    out = []
    for verts in component_vertex_sets(g):
        vs = set(verts)
        es = [e for e, (u, _) in enumerate(g.ends) if u in vs]
        local = {v: i for i, v in enumerate(verts)}
        ends = [(local[g.ends[e][0]], local[g.ends[e][1]]) for e in es]
        labels = None if g.labels is None else [g.labels[e] for e in es]
        out.append(Embedded(Multigraph.from_edges(len(verts), ends, labels),
                            tuple(verts), tuple(es)))
    return out


def edge_disjoint_union(g1: Multigraph, g2: Multigraph,
                        identify: dict[int, int] | None = None) -> Multigraph:
    """Union of ``g1`` and ``g2`` with the edges of ``g2`` appended after those of ``g1``.

    ``identify`` maps some vertices of ``g2`` onto vertices of ``g1``; every
    other vertex of ``g2`` becomes new. Labels, when both graphs carry them,
    are wrapped as ``(0, label)`` and ``(1, label)`` so they stay unique.
    """
    identify = dict(identify or {})
    targets = list(identify.values())
    if len(set(targets)) != len(targets):
        raise PreconditionError("vertex identification is not injective")
    for src, dst in identify.items():
        if not (0 <= src < g2.vertex_count and 0 <= dst < g1.vertex_count):
            raise PreconditionError(f"identification {src}->{dst} is out of range")
    vmap = {}
    nxt = g1.vertex_count
    for v in range(g2.vertex_count):
        if v in identify:
            vmap[v] = identify[v]
        else:
            vmap[v] = nxt
            nxt += 1
    ends = list(g1.ends) + [(vmap[u], vmap[v]) for u, v in g2.ends]
    labels = None
    if g1.labels is not None and g2.labels is not None:
        labels = [(0, x) for x in g1.labels] + [(1, x) for x in g2.labels]
    return Multigraph.from_edges(nxt, ends, labels)


def extender(g: Multigraph, lam: int) -> Multigraph:
    """Replace every edge by ``lam`` parallel copies.

    Copy ``j`` (1-based) of edge ``e`` gets id ``(j - 1) * |E| + e`` and label
    ``(label(e), j)``, so the first ``|E|`` ids are the first copies in the
    original order.
    """
    if lam < 1:
        raise PreconditionError("extender multiplicity must be at least 1")
    m = g.edge_count
    ends = [g.ends[e] for _ in range(lam) for e in range(m)]
    base = g.labels if g.labels is not None else tuple(range(m))
    labels = [(base[e], j) for j in range(1, lam + 1) for e in range(m)]
    return Multigraph.from_edges(g.vertex_count, ends, labels)


def copy_id(m: int, e: int, j: int) -> int:
    """Edge id of copy ``j`` (1-based) of base edge ``e`` in an extender of a graph with ``m`` edges."""
    return (j - 1) * m + e


def base_graph_and_multiplicity(g: Multigraph) -> tuple[Multigraph, int] | None:
    """Simple base graph and the common multiplicity, or None when multiplicities differ."""
    if g.edge_count == 0:
        raise PreconditionError("graph has no edges")
    sizes = {len(es) for es in g.bundles.values()}
    if len(sizes) != 1:
        return None
    pairs = sorted(g.bundles)
    return Multigraph.from_edges(g.vertex_count, pairs), sizes.pop()


def degree(g: Multigraph, v: int) -> int:
    if not 0 <= v < g.vertex_count:
        raise PreconditionError(f"vertex {v} out of range")
    return g.degrees[v]


def cycle_graph(n: int) -> Multigraph:
    """C_n with e_i = [i, i+1]."""
    return Multigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def fingerprint(g: Multigraph) -> tuple:
    """Cheap isomorphism invariant."""
    mult = Counter(len(es) for es in g.bundles.values())
    per_vertex = Counter(
        (g.degrees[v], tuple(sorted(g.multiplicity(v, w) for w in g.neighbours[v])))
        for v in range(g.vertex_count))
    return (g.vertex_count, g.edge_count, tuple(sorted(mult.items())),
            tuple(sorted(per_vertex.items())))
