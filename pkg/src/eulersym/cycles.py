"""Edge cycles, their dihedral symmetries, and symmetrical Euler cycles.

Positions along a cycle are 0-based: ``edges[p]`` joins ``vertex_chain[p]``
and ``vertex_chain[p + 1]``. A dihedral element acts on positions as
``p -> p + shift`` or, when reflected, ``p -> shift - p``. In this
convention the rotation is ``(1, False)``, the reflection through the start
vertex is ``(-1, True)``, and the reflection through the last edge is
``(-2, True)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .errors import CapExceeded, PreconditionError, resolve_cap
from .multigraph import Multigraph
from .perm import Automorphism, compose, extend_edge_map, power


@dataclass(frozen=True)
class EdgeCycle:
    edges: tuple[int, ...]
    vertex_chain: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def to_json(self) -> dict[str, Any]:
        return {"edges": list(self.edges), "vertex_chain": list(self.vertex_chain)}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "EdgeCycle":
        return cls(tuple(data["edges"]), tuple(data["vertex_chain"]))


def _walk(g: Multigraph, edges: Sequence[int], start: int) -> list[int] | None:
    chain = [start]
    v = start
    for e in edges:
        a, b = g.ends[e]
        if v == a:
            v = b
        elif v == b:
            v = a
        else:
            return None
        chain.append(v)
    return chain if v == start else None


def make_cycle(g: Multigraph, edges: Sequence[int], start_vertex: int | None = None) -> EdgeCycle:
    """Cycle through ``edges`` in order, beginning at ``start_vertex``.

    Without a start vertex both ends of the first edge are tried, smaller first.
    """
    edges = tuple(edges)
    if not edges:
        raise PreconditionError("a cycle needs at least one edge")
    if len(set(edges)) != len(edges):
        raise PreconditionError("cycle repeats an edge")
    for e in edges:
        if not 0 <= e < g.edge_count:
            raise PreconditionError(f"edge {e} is not in the graph")
    starts = [start_vertex] if start_vertex is not None else list(g.ends[edges[0]])
    for s in starts:
        chain = _walk(g, edges, s)
        if chain is not None:
            return EdgeCycle(edges, tuple(chain))
    raise PreconditionError("edges do not form a closed walk from the given start")


def is_euler(g: Multigraph, c: EdgeCycle) -> bool:
    if len(c.edges) != g.edge_count or set(c.edges) != set(range(g.edge_count)):
        return False
    return _walk(g, c.edges, c.vertex_chain[0]) == list(c.vertex_chain)


def sequence_class_equal(c1: EdgeCycle, c2: EdgeCycle) -> bool:
    a, b = c1.edges, c2.edges
    if len(a) != len(b) or set(a) != set(b):
        return False
    return _class_key(a) == _class_key(b)


def _class_key(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least rotation or reversed rotation."""
    n = len(seq)
    best = None
    for cand in (list(seq), list(reversed(seq))):
        for k in range(n):
            rot = tuple(cand[k:] + cand[:k])
            if best is None or rot < best:
                best = rot
    return best


# -- the dihedral group of a cycle --------------------------------------------


@dataclass(frozen=True, order=True)
class DihedralElement:
    shift: int
    reflected: bool
    length: int

    def __post_init__(self):
        object.__setattr__(self, "shift", self.shift % self.length)

    @classmethod
    def named(cls, name: str, length: int) -> "DihedralElement":
        table = {"id": (0, False), "phi": (1, False), "phi2": (2, False),
                 "tau": (-1, True), "phitau": (-2, True)}
        if name not in table:
            raise PreconditionError(f"unknown dihedral element {name!r}")
        s, r = table[name]
        return cls(s, r, length)

    def apply(self, p: int) -> int:
        return (self.shift - p) % self.length if self.reflected else (p + self.shift) % self.length

    def vertex_apply(self, p: int) -> int:
        """Action on chain positions; a reflection through ``c`` sends vertex p to c + 1 - p."""
        if self.reflected:
            return (self.shift + 1 - p) % self.length
        return (p + self.shift) % self.length

    def then(self, other: "DihedralElement") -> "DihedralElement":
        """``self`` followed by ``other``."""
        return DihedralElement(other.apply(self.apply(0)), self.reflected != other.reflected,
                               self.length)

    def inverse(self) -> "DihedralElement":
        return self if self.reflected else DihedralElement(-self.shift, False, self.length)

    def __str__(self) -> str:
        ell = self.length
        if not self.reflected:
            return "id" if self.shift == 0 else f"phi^{self.shift}"
        names = {(-1) % ell: "tau", (-2) % ell: "phitau"}
        return names.get(self.shift, f"refl({self.shift})")


def dihedral_group(length: int) -> list[DihedralElement]:
    return ([DihedralElement(s, False, length) for s in range(length)]
            + [DihedralElement(s, True, length) for s in range(length)])


def induced_element(g: Multigraph, c: EdgeCycle, a: Automorphism) -> DihedralElement | None:
    """The element of D(C) that ``a`` induces on ``c``, or None if ``a`` does not preserve it.

    For cycles of length at least 3 the edge action decides; for 2-cycles
    (two parallel edges) rotation and reflection agree on edges, so the
    vertex chain breaks the tie.
    """
    ell = len(c.edges)
    pos = {e: p for p, e in enumerate(c.edges)}
    images = []
    for e in c.edges:
        q = pos.get(a.edge_image[e])
        if q is None:
            return None
        images.append(q)
    found = []
    for reflected in (False, True):
        d = DihedralElement(images[0] if not reflected else images[0], reflected, ell)
        if all(d.apply(p) == q for p, q in enumerate(images)):
            found.append(d)
    if len(found) <= 1 or ell >= 3:
        return found[0] if found else None
    chain = c.vertex_chain
    for d in found:
        if all(a.vertex_image[chain[p]] == chain[d.vertex_apply(p)] for p in range(ell)):
            return d
    return None


class HShape(enum.Enum):
    DC = "DC"
    PHI = "PhiOnly"
    PHI2_PHITAU = "Phi2PhiTau"
    PHI2_TAU = "Phi2Tau"
    PHI2 = "Phi2Only"
    OTHER = "Other"


@dataclass(frozen=True)
class HGroup:
    members: frozenset[DihedralElement]
    length: int
    shape: HShape

    @property
    def order(self) -> int:
        return len(self.members)


def classify_h(members: Iterable[DihedralElement], length: int) -> HGroup:
    members = frozenset(members)
    ell = length
    rot = {d.shift for d in members if not d.reflected}
    refl = {d.shift for d in members if d.reflected}
    if len(members) == 2 * ell:
        shape = HShape.DC
    elif rot == set(range(ell)) and not refl:
        shape = HShape.PHI
    elif ell % 2 == 0 and rot == set(range(0, ell, 2)):
        if not refl:
            shape = HShape.PHI2
        elif refl == set(range(0, ell, 2)):
            shape = HShape.PHI2_PHITAU
        elif refl == set(range(1, ell, 2)):
            shape = HShape.PHI2_TAU
        else:
            shape = HShape.OTHER
    else:
        shape = HShape.OTHER
    return HGroup(members, ell, shape)


def _position_map(c: EdgeCycle, d: DihedralElement, m: int) -> list[int]:
    img = list(range(m))
    for p, e in enumerate(c.edges):
        img[e] = c.edges[d.apply(p)]
    return img


def realize(g: Multigraph, c: EdgeCycle, d: DihedralElement) -> Automorphism | None:
    """An automorphism of ``g`` inducing ``d`` on the Euler cycle ``c``, if one exists."""
    from .oracle import full_automorphism_group
    if len(c.edges) >= 3:
        a = extend_edge_map(g, _position_map(c, d, g.edge_count))
        return a
    for a in full_automorphism_group(g):
        if induced_element(g, c, a) == d:
            return a
    return None


def h_group(g: Multigraph, c: EdgeCycle, auts: Iterable[Automorphism] | None = None) -> HGroup:
    """The subgroup of D(C) induced by automorphisms preserving the Euler cycle ``c``.

    With ``auts`` the induced elements of that list are collected. Without it
    each of the 2l elements of D(C) is tested for realisability, which is
    exact because an Euler cycle pins down the whole edge action.
    """
    ell = len(c.edges)
    if auts is not None:
        found = {d for a in auts if (d := induced_element(g, c, a)) is not None}
        return classify_h(found, ell)
    if not is_euler(g, c):
        raise PreconditionError("h_group without an automorphism list needs an Euler cycle")
    found = [d for d in dihedral_group(ell) if realize(g, c, d) is not None]
    return classify_h(found, ell)


def is_symmetrical(g: Multigraph, c: EdgeCycle, auts: Iterable[Automorphism] | None = None) -> bool:
    """Some automorphism shifts the cycle by two positions."""
    phi2 = DihedralElement.named("phi2", len(c.edges))
    if auts is not None:
        return any(induced_element(g, c, a) == phi2 for a in auts)
    if len(c.edges) <= 2:
        return True
    return extend_edge_map(g, _position_map(c, phi2, g.edge_count)) is not None


# -- exhaustive enumeration ------------------------------------------------------


def enumerate_euler_cycles(g: Multigraph, cap: int | None = None) -> list[EdgeCycle]:
    """One Euler cycle per sequence class, by backtracking from edge 0.

    Every class has a representative starting with edge 0; of the two such
    representatives (one per direction) the lexicographically smaller edge
    sequence is kept.
    """
    cap = resolve_cap(cap)
    m = g.edge_count
    if any(d % 2 for d in g.degrees):
        raise PreconditionError("graph has a vertex of odd degree")
    if m == 0 or not g.is_connected():
        return []
    adj = [[(e, g.other_end(e, v)) for e in g.incidence[v]] for v in range(g.vertex_count)]
    used = bytearray(m)
    seq = [0]
    used[0] = 1
    found: dict[tuple[int, ...], int] = {}

    def rec(v: int, start: int) -> None:
        if len(seq) == m:
            if v == start:
                t = tuple(seq)
                rev = (t[0],) + t[:0:-1]
                key = min(t, rev)
                if key not in found:
                    found[key] = start if key == t else None
                    if len(found) > cap:
                        raise CapExceeded(f"Euler cycle classes exceed the cap {cap}")
            return
        for e, w in adj[v]:
            if not used[e]:
                used[e] = 1
                seq.append(e)
                rec(w, start)
                seq.pop()
                used[e] = 0

    a, b = g.ends[0]
    rec(b, a)
    rec(a, b)
    return [make_cycle(g, key) for key in sorted(found)]


# -- searching by symmetry ---------------------------------------------------------


def symmetrical_cycles_from_actions(g: Multigraph, actions: Iterable[Automorphism]) -> list[EdgeCycle]:
    """All symmetrical Euler cycle classes whose two-step shift is one of ``actions``.

    If ``x`` shifts an Euler cycle by two positions, rotating the cycle makes
    edge 0 its first edge, and then the cycle is ``(e0, e1, x e0, x e1, ...)``
    for some edge ``e1`` meeting edge 0. Passing every automorphism of ``g``
    therefore finds every symmetrical Euler cycle.
    """
    m = g.edge_count
    if m == 0 or not g.is_connected() or any(d % 2 for d in g.degrees):
        return []
    out: dict[tuple[int, ...], EdgeCycle] = {}
    near = sorted({e for v in g.ends[0] for e in g.incidence[v] if e != 0})
    for x in actions:
        xe = x.edge_image
        for e1 in near:
            seq = [0, e1]
            while len(seq) < m:
                seq.append(xe[seq[-2]])
            if len(set(seq)) != m:
                continue
            if xe[seq[-2]] != 0 or xe[seq[-1]] != e1:
                continue
            for start in g.ends[0]:
                chain = _walk(g, seq, start)
                if chain is not None:
                    key = _class_key(seq)
                    out.setdefault(key, EdgeCycle(tuple(seq), tuple(chain)))
                    break
    return [out[k] for k in sorted(out)]


def shift_by_two(g: Multigraph, c: EdgeCycle) -> Automorphism | None:
    return realize(g, c, DihedralElement.named("phi2", len(c.edges)))


def compose_all(items: Sequence[Automorphism]) -> Automorphism:
    out = items[0]
    for a in items[1:]:
        out = compose(out, a)
    return out


__all__ = [
    "EdgeCycle", "make_cycle", "is_euler", "sequence_class_equal", "DihedralElement",
    "dihedral_group", "induced_element", "HShape", "HGroup", "classify_h", "h_group",
    "is_symmetrical", "enumerate_euler_cycles", "symmetrical_cycles_from_actions", "realize",
    "power",
]


# -- explicit constructions ------------------------------------------------------


class NotInEulerTable(PreconditionError):
    """The family has no row in the classification of graphs with a symmetrical Euler cycle."""


class NotExistsReason(enum.Enum):
    LAMBDA_ODD = "lambda must be even"
    R_ODD = "r must be even"
    GCD = "gcd(n,a+b) > 1 and gcd(n,a-b) > 1"


@dataclass(frozen=True)
class EulerCertificate:
    cycle: EdgeCycle
    inducers: dict[str, Automorphism]
    h: HGroup

    @property
    def shape(self) -> HShape:
        return self.h.shape

    def to_json(self) -> dict[str, Any]:
        return {"status": "exists", "cycle": self.cycle.to_json(), "h_shape": self.shape.value,
                "h_order": self.h.order,
                "inducers": {k: a.to_json() for k, a in sorted(self.inducers.items())}}


@dataclass(frozen=True)
class NotExists:
    reason: NotExistsReason

    def to_json(self) -> dict[str, Any]:
        return {"status": "not_exists", "reason": self.reason.name, "detail": self.reason.value}


@dataclass(frozen=True)
class Undetermined:
    detail: str

    def to_json(self) -> dict[str, Any]:
        return {"status": "undetermined", "detail": self.detail}


def certify(g: Multigraph, c: EdgeCycle, auts: Sequence[Automorphism] | None = None) -> EulerCertificate:
    """Compute H(C) for a symmetrical Euler cycle and pick automorphisms realising its generators."""
    if not is_euler(g, c):
        raise PreconditionError("not an Euler cycle")
    h = h_group(g, c, auts)
    ell = len(c.edges)
    wanted = ["phi2"]
    names = {d: str(d) for d in h.members}
    if h.shape in (HShape.DC, HShape.PHI):
        wanted.append("phi")
    refl = sorted(d for d in h.members if d.reflected)
    inducers = {}
    for name in wanted:
        d = DihedralElement.named(name, ell)
        if d in h.members:
            inducers[name] = _realize_from(g, c, d, auts)
    if refl:
        preferred = [DihedralElement.named(n, ell) for n in ("tau", "phitau")]
        pick = next((d for d in preferred if d in h.members), refl[0])
        inducers[names[pick]] = _realize_from(g, c, pick, auts)
    if "phi2" not in inducers:
        raise PreconditionError("the cycle is not symmetrical")
    return EulerCertificate(c, inducers, h)


def _realize_from(g, c, d, auts):
    if auts is not None:
        for a in auts:
            if induced_element(g, c, a) == d:
                return a
        return None
    return realize(g, c, d)


def _labelled(g: Multigraph, labels: Iterable, start_label=None) -> EdgeCycle:
    ids = [g.edge_by_label[lab] for lab in labels]
    return make_cycle(g, ids)


def _base_cycle(spec) -> EdgeCycle | NotExists | Undetermined:
    """The symmetrical Euler cycle of the multiplier-1 member, or the reason there is none."""
    from math import gcd

    from .families import build, spec_size
    fam, p = spec.family, spec.p
    base = build(spec.with_lam(1)).graph
    if fam == "CycleN":
        return _labelled(base, [(i,) for i in range(p["n"])])
    if fam == "CycleNExt2":
        n = p["n"]
        return _labelled(base, [((i,), j) for j in (1, 2) for i in range(n)])
    if fam == "Gamma2r1r":
        r = p["r"]
        if r % 2:
            return NotExists(NotExistsReason.R_ODD)
        n, x = 2 * r, r + 1
        seq = []
        for i in range(n):
            seq += [((i * x) % n, "a"), ((i * x + 1) % n, "b")]
        return _labelled(base, seq)
    if fam == "Gamma2r2r":
        r = p["r"]
        n, x = 2 * r, r + 2
        seq = []
        for i in range(n):
            seq += [((i * x) % n, "b"), ((i * x + r) % n, "a")]
        return _labelled(base, seq)
    if fam == "GammaNAB":
        n, a, b = p["n"], p["a"] % p["n"], p["b"] % p["n"]
        if gcd(n, a + b) == 1:
            j = (a + b) % n
            seq = []
            for i in range(n):
                seq += [((i * j) % n, "a"), ((i * j + a) % n, "b")]
            return _labelled(base, seq)
        if gcd(n, (a - b) % n) == 1:
            j = (a - b) % n
            seq = []
            for i in range(n):
                seq += [((i * j) % n, "a"), ((i * j + a - b) % n, "b")]
            return _labelled(base, seq)
        from .oracle import edge_transitive
        if edge_transitive(base):
            return Undetermined("both gcd conditions fail but the base circulant is edge-transitive")
        return NotExists(NotExistsReason.GCD)
    if fam == "CstCycle":
        r, s, t = p["r"], p["s"], p["t"]
        L = 2 * r

        def size(layer):
            return s if layer % 2 == 0 else t

        seq = []
        for m in range(s * t):
            for layer in range(L):
                if layer < L - 1:
                    seq.append((layer, m % size(layer), m % size(layer + 1)))
                else:
                    seq.append((layer, m % t, (m + 1) % s))
        return _labelled(base, seq)
    raise NotInEulerTable(f"{fam} has no symmetrical Euler cycle construction")


def construct_symmetrical_euler(instance) -> EulerCertificate | NotExists | Undetermined:
    """A symmetrical Euler cycle of a family member, with automorphisms certifying H(C).

    Members with multiplier ``lam`` reuse the multiplier-1 cycle, repeated
    copy by copy; the lifted cycle stays symmetrical.
    """
    from .lift import lift_cycle
    spec = instance.spec
    fam, p, lam = spec.family, spec.p, spec.lam
    g = instance.graph
    if fam == "K2Lambda":
        if (p["mult"] * lam) % 2:
            return NotExists(NotExistsReason.LAMBDA_ODD)
        return certify(g, make_cycle(g, range(g.edge_count), 0))
    if fam == "Kst":
        if lam % 2:
            return NotExists(NotExistsReason.LAMBDA_ODD)
        s, t = p["s"], p["t"]
        m = s * t
        base = instance.graph
        first = []
        for i in range(m):
            first += [((i % s, i % t), 1), (((i + 1) % s, i % t), 2)]
        # copies 2k+1 and 2k+2 repeat the pattern of copies 1 and 2
        seq = []
        for k in range(lam // 2):
            seq += [(lab, j + 2 * k) for lab, j in first]
        return certify(g, _labelled(base, seq))
    if fam in ("CK", "CK2", "KK", "Circulant"):
        raise NotInEulerTable(f"{fam} has no symmetrical Euler cycle")
    base_cycle = _base_cycle(spec)
    if not isinstance(base_cycle, EdgeCycle):
        return base_cycle
    if lam == 1:
        return certify(g, base_cycle)
    m = g.edge_count // lam
    return certify(g, make_cycle(g, lift_cycle_ids(m, base_cycle.edges, lam),
                                 base_cycle.vertex_chain[0]))


def lift_cycle_ids(m: int, edges: Sequence[int], lam: int) -> list[int]:
    return [(j - 1) * m + e for j in range(1, lam + 1) for e in edges]


__all__ += ["NotInEulerTable", "NotExistsReason", "EulerCertificate", "NotExists",
            "Undetermined", "certify", "construct_symmetrical_euler"]
