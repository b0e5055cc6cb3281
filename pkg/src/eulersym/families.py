"""Constructors for the classified families and their cyclic generators.

Every builder returns the graph with edges labelled by their family
coordinates, the generator ``g`` (plus named extra automorphisms where the
family has one), and the order/orbit data the family is known to have.

Label schemas (base graph, before any extender):

=============  =====================================  ======================
family         vertex key                             edge label
=============  =====================================  ======================
CycleN         i                                      (i,)
CycleNExt2     i                                      ((i,), copy)
Circulant      i                                      (i, z, c)
GammaNAB       i                                      (i, "a") / (i, "b")
CstCycle       (layer, index)                         (layer, x, y)
Kst            ("S", i) / ("T", j)                    (i, j)
K2Lambda       0 / 1                                  (k,)
CK             (1, k) / (2, j)                        (k, j, 0) / (k, j, 1)
CK2            (1, x) / (2, y)                        (i, k, j, 0) / (l, k, j, 1)
KK             (1, x) / (2, y) / (3, z)               (i, l, k, j, layer)
=============  =====================================  ======================

An outer multiplier ``lam`` replaces the graph by its extender and the
generator by its lift; edge labels then become ``(base_label, copy)``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Any, Callable, Iterator

from .errors import ConstraintError, PreconditionError
from .lift import lift_automorphism, lift_copywise
from .multigraph import Multigraph, extender, fingerprint
from .perm import ActionKind, Automorphism, from_maps

FAMILIES = ("CycleN", "CycleNExt2", "Circulant", "GammaNAB", "Gamma2r1r", "Gamma2r2r",
            "CstCycle", "Kst", "K2Lambda", "CK", "CK2", "KK")

PARAMS = {
    "CycleN": ("n",),
    "CycleNExt2": ("n",),
    "Circulant": ("n", "S"),
    "GammaNAB": ("n", "a", "b"),
    "Gamma2r1r": ("r",),
    "Gamma2r2r": ("r",),
    "CstCycle": ("r", "s", "t"),
    "Kst": ("s", "t"),
    "K2Lambda": ("mult",),
    "CK": ("r", "n", "t"),
    "CK2": ("r", "s", "t", "u"),
    "KK": ("r", "rp", "s", "t", "tp", "u"),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[tuple[str, Any], ...]
    lam: int = 1

    @classmethod
    def of(cls, family: str, lam: int = 1, **params: Any) -> "FamilySpec":
        if family not in PARAMS:
            raise PreconditionError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
        want = PARAMS[family]
        missing = [k for k in want if k not in params]
        extra = [k for k in params if k not in want]
        if missing or extra:
            raise PreconditionError(
                f"{family} takes parameters {', '.join(want)}"
                + (f"; missing {', '.join(missing)}" if missing else "")
                + (f"; unexpected {', '.join(extra)}" if extra else ""))
        items = []
        for k in want:
            v = params[k]
            v = tuple(sorted(int(x) for x in v)) if k == "S" else int(v)
            items.append((k, v))
        return cls(family, tuple(items), int(lam))

    @property
    def p(self) -> dict[str, Any]:
        return dict(self.params)

    def with_lam(self, lam: int) -> "FamilySpec":
        return FamilySpec(self.family, self.params, lam)

    def __str__(self) -> str:
        inner = ",".join(f"{k}={list(v) if isinstance(v, tuple) else v}" for k, v in self.params)
        tail = f"^({self.lam})" if self.lam != 1 else ""
        return f"{self.family}({inner}){tail}"

    def to_json(self) -> dict[str, Any]:
        return {"family": self.family,
                "params": {k: list(v) if isinstance(v, tuple) else v for k, v in self.params},
                "lambda": self.lam}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "FamilySpec":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls.of(data["family"], lam=data.get("lambda", 1), **data.get("params", {}))
        except KeyError as exc:
            raise PreconditionError(f"malformed family spec: missing {exc}") from None


@dataclass(frozen=True)
class Expected:
    order: int
    n_v: int
    e_orbits: int
    kind: ActionKind


@dataclass(frozen=True)
class FamilyInstance:
    spec: FamilySpec
    graph: Multigraph
    g: Automorphism
    expected: Expected
    vertex_key: tuple
    extra: dict[str, Automorphism] = field(default_factory=dict)


# -- helpers ---------------------------------------------------------------


def _need(cond: bool, family: str, text: str) -> None:
    if not cond:
        raise ConstraintError(family, text)


def _order_mod(a: int, n: int) -> int:
    return n // gcd(a % n, n)


class _Builder:
    def __init__(self, vertex_key):
        self.vertex_key = tuple(vertex_key)
        self.index = {k: v for v, k in enumerate(self.vertex_key)}
        self.ends: list[tuple[int, int]] = []
        self.labels: list = []

    def edge(self, label, u, v) -> None:
        self.ends.append((self.index[u], self.index[v]))
        self.labels.append(label)

    def graph(self) -> Multigraph:
        return Multigraph.from_edges(len(self.vertex_key), self.ends, self.labels)


@dataclass
class _Base:
    graph: Multigraph
    g: Automorphism
    expected: Expected
    vertex_key: tuple
    extra: dict[str, Automorphism] = field(default_factory=dict)


# -- family builders (multiplier 1) ------------------------------------------


def _cycle(n: int) -> _Base:
    fam = "CycleN"
    _need(n >= 3, fam, "n >= 3")
    b = _Builder(range(n))
    for i in range(n):
        b.edge((i,), i, (i + 1) % n)
    gr = b.graph()
    g = from_maps(gr, lambda i: (i + 1) % n, lambda e: ((e[0] + 1) % n,), b.vertex_key)
    y = from_maps(gr, lambda i: -i % n, lambda e: ((-e[0] - 1) % n,), b.vertex_key)
    return _Base(gr, g, Expected(n, 1, 1, ActionKind.REGULAR), b.vertex_key, {"y": y})


def _cycle_ext2(n: int) -> _Base:
    fam = "CycleNExt2"
    _need(n >= 3, fam, "n >= 3")
    base = _cycle(n)
    gr = extender(base.graph, 2)
    g = lift_copywise(base.graph, base.g, 2)
    return _Base(gr, g, Expected(n, 1, 2, ActionKind.BIREGULAR), base.vertex_key,
                 {"y": lift_copywise(base.graph, base.extra["y"], 2)})


def _circulant_edges(n: int, S) -> tuple[list, list]:
    """Labels and rotation images for Circ(n, S).

    A connection z with z != -z contributes, per copy c, the n edges
    (i, z, c) = [i, i+z] for the representative z < n - z. A connection with
    2z = n and multiplicity mu contributes, per c < mu // 2, the n edges
    (i, z, c); when mu is odd one more copy carries only i < n/2.
    """
    count = Counter(x % n for x in S)
    labels = []
    for z in sorted(count):
        mu = count[z]
        if 2 * z == n:
            for c in range(mu // 2):
                labels += [(i, z, c) for i in range(n)]
            if mu % 2:
                labels += [(i, z, mu // 2) for i in range(n // 2)]
        elif z < n - z:
            for c in range(mu):
                labels += [(i, z, c) for i in range(n)]
    return labels, count


def _circulant(n: int, S: tuple[int, ...]) -> _Base:
    fam = "Circulant"
    _need(n >= 3, fam, "n >= 3")
    _need(len(S) > 0, fam, "S is nonempty")
    _need(all(x % n for x in S), fam, "S contains only nonzero residues")
    count = Counter(x % n for x in S)
    _need(all(count[z] == count[(-z) % n] for z in count), fam, "S is self-inverse")
    labels, _ = _circulant_edges(n, S)
    b = _Builder(range(n))
    half = {}
    for (i, z, c) in labels:
        b.edge((i, z, c), i, (i + z) % n)
        if 2 * z == n:
            half[(z, c)] = half.get((z, c), 0) + 1
    gr = b.graph()

    def ge(lab):
        i, z, c = lab
        width = half.get((z, c), n)
        return ((i + 1) % width, z, c)

    g = from_maps(gr, lambda i: (i + 1) % n, ge, b.vertex_key)
    orbits = 0
    for z in count:
        if 2 * z == n:
            orbits += (count[z] + 1) // 2
        elif z < n - z:
            orbits += count[z]
    sizes = sorted({half.get((z, c), n) for (_, z, c) in labels})
    if orbits == 1:
        kind = ActionKind.REGULAR
    elif orbits == 2 and len(sizes) == 1:
        kind = ActionKind.BIREGULAR
    else:
        kind = ActionKind.NEITHER
    return _Base(gr, g, Expected(n, 1, orbits, kind), b.vertex_key)


def gamma_constraints(n: int, a: int, b: int, fam: str = "GammaNAB") -> None:
    _need(n >= 3, fam, "n >= 3")
    _need(gcd(gcd(n, a), b) == 1, fam, "gcd(n,a,b) = 1")
    a, b = a % n, b % n
    _need(a != 0 and b != 0, fam, "a, b nonzero mod n")
    _need(_order_mod(a, n) >= 3, fam, "|a| >= 3")
    if 2 * b != n:
        _need(_order_mod(b, n) >= 3, fam, "|b| >= 3 (or 2b = n)")
        _need(a != b and a != (-b) % n, fam, "a != +-b")


def _gamma(n: int, a: int, b: int, fam: str = "GammaNAB", check: bool = True) -> _Base:
    if check:
        gamma_constraints(n, a, b, fam)
    a, b = a % n, b % n
    bld = _Builder(range(n))
    for i in range(n):
        bld.edge((i, "a"), i, (i + a) % n)
    for i in range(n):
        bld.edge((i, "b"), i, (i + b) % n)
    gr = bld.graph()
    g = from_maps(gr, lambda i: (i + 1) % n, lambda e: ((e[0] + 1) % n, e[1]), bld.vertex_key)
    return _Base(gr, g, Expected(n, 1, 2, ActionKind.BIREGULAR), bld.vertex_key)


def _gamma2r1r(r: int) -> _Base:
    _need(r >= 2, "Gamma2r1r", "r >= 2")
    return _gamma(2 * r, 1, r, "Gamma2r1r")


def _gamma2r2r(r: int) -> _Base:
    _need(r >= 3 and r % 2 == 1, "Gamma2r2r", "r odd and r >= 3")
    return _gamma(2 * r, 2, r, "Gamma2r2r")


def _cst_cycle(r: int, s: int, t: int) -> _Base:
    """The cycle C_{2r} with even layers blown up to s vertices and odd layers to t."""
    fam = "CstCycle"
    _need(r >= 2, fam, "r >= 2")
    _need(s >= 1 and t >= 1, fam, "s, t >= 1")
    _need(gcd(s, t) == 1, fam, "gcd(s,t) = 1")
    _need(s * t >= 2, fam, "st >= 2")
    L = 2 * r

    def size(layer: int) -> int:
        return s if layer % 2 == 0 else t

    keys = [(layer, x) for layer in range(L) for x in range(size(layer))]
    b = _Builder(keys)
    for layer in range(L):
        nxt = (layer + 1) % L
        for x in range(size(layer)):
            for y in range(size(nxt)):
                b.edge((layer, x, y), (layer, x), (nxt, y))
    gr = b.graph()

    def gv(key):
        layer, x = key
        if layer + 2 < L:
            return (layer + 2, x)
        return (layer + 2 - L, (x + 1) % size(layer))

    def ge(lab):
        layer, x, y = lab
        if layer % 2 == 0:  # e^{2k}_{i,j}
            if layer <= L - 4:
                return (layer + 2, x, y)
            return (0, (x + 1) % s, (y + 1) % t)
        if layer <= L - 5:  # e^{2k+1}_{j,i}
            return (layer + 2, x, y)
        if layer == L - 3:
            return (L - 1, x, (y + 1) % s)
        return (1, (x + 1) % t, y)

    def yv(key):
        layer, x = key
        if layer == 0:
            return (0, -x % s)
        if layer % 2 == 0:
            k = layer // 2
            return (2 * (r - k), (-x - 1) % s)
        k = (layer - 1) // 2
        return (2 * (r - k - 1) + 1, (-x - 1) % t)

    def ye(lab):
        layer, x, y = lab
        if layer == 0:
            return (L - 1, (-y - 1) % t, -x % s)
        if layer == L - 1:
            return (0, -y % s, (-x - 1) % t)
        if layer % 2 == 0:
            k = layer // 2
            return (2 * (r - k - 1) + 1, (-y - 1) % t, (-x - 1) % s)
        k = (layer + 1) // 2
        return (2 * (r - k), (-y - 1) % s, (-x - 1) % t)

    g = from_maps(gr, gv, ge, keys)
    y = from_maps(gr, yv, ye, keys)
    return _Base(gr, g, Expected(r * s * t, 2, 2, ActionKind.BIREGULAR), tuple(keys), {"y": y})


def _kst(s: int, t: int) -> _Base:
    fam = "Kst"
    _need(s >= 1 and t >= 1, fam, "s, t >= 1")
    _need(gcd(s, t) == 1, fam, "gcd(s,t) = 1")
    _need(s * t > 1, fam, "st > 1")
    keys = [("S", i) for i in range(s)] + [("T", j) for j in range(t)]
    b = _Builder(keys)
    for i in range(s):
        for j in range(t):
            b.edge((i, j), ("S", i), ("T", j))
    gr = b.graph()

    def gv(key):
        part, x = key
        return (part, (x + 1) % (s if part == "S" else t))

    g = from_maps(gr, gv, lambda e: ((e[0] + 1) % s, (e[1] + 1) % t), keys)
    return _Base(gr, g, Expected(s * t, 2, 1, ActionKind.REGULAR), tuple(keys))


def _k2(mult: int) -> _Base:
    _need(mult >= 1, "K2Lambda", "multiplicity >= 1")
    b = _Builder([0, 1])
    for k in range(mult):
        b.edge((k,), 0, 1)
    gr = b.graph()
    x = from_maps(gr, lambda v: v, lambda e: ((e[0] + 1) % mult,), b.vertex_key)
    y = from_maps(gr, lambda v: 1 - v, lambda e: e, b.vertex_key)
    z = from_maps(gr, lambda v: v, lambda e: ((-e[0] - 1) % mult,), b.vertex_key)
    return _Base(gr, x, Expected(mult, 2, 1, ActionKind.REGULAR), b.vertex_key,
                 {"x": x, "y": y, "z": z})


def _ck(r: int, n: int, t: int) -> _Base:
    """Complete bipartite K_{nr,t} glued to r disjoint t-fold n-cycles on the big side."""
    fam = "CK"
    _need(r >= 1 and t >= 1, fam, "r, t >= 1")
    _need(n >= 2, fam, "n >= 2")
    _need(gcd(n * r, t) == 1, fam, "gcd(nr,t) = 1")
    big = r * n
    keys = [(1, k) for k in range(big)] + [(2, j) for j in range(t)]
    b = _Builder(keys)
    for k in range(big):
        for j in range(t):
            b.edge((k, j, 0), (1, k), (2, j))
    for k in range(big):
        for j in range(t):
            b.edge((k, j, 1), (1, k), (1, (k + r) % big))
    gr = b.graph()

    def gv(key):
        part, x = key
        return (part, (x + 1) % (big if part == 1 else t))

    g = from_maps(gr, gv, lambda e: ((e[0] + 1) % big, (e[1] + 1) % t, e[2]), keys)
    return _Base(gr, g, Expected(r * n * t, 2, 2, ActionKind.BIREGULAR), tuple(keys))


def _ck2(r: int, s: int, t: int, u: int) -> _Base:
    fam = "CK2"
    _need(r >= 1 and s >= 1 and t >= 1, fam, "r, s, t >= 1")
    _need(u >= 2, fam, "u >= 2")
    _need(gcd(r, u) == 1, fam, "gcd(r,u) = 1")
    _need(gcd(s * r, t) == 1, fam, "gcd(sr,t) = 1")
    n1, n2 = s * r * u, u * t
    keys = [(1, x) for x in range(n1)] + [(2, y) for y in range(n2)]
    b = _Builder(keys)
    for i in range(u):
        for k in range(s * r):
            for j in range(t):
                b.edge((i, k, j, 0), (1, (i + u * k) % n1), (2, (i + u * j) % n2))
    for l in range(r):
        for k in range(s * u):
            for j in range(t):
                b.edge((l, k, j, 1), (1, (l + r * k) % n1), (1, (l + r * (k + 1)) % n1))
    gr = b.graph()

    def gv(key):
        part, x = key
        return (part, (x + 1) % (n1 if part == 1 else n2))

    def ge(lab):
        if lab[-1] == 0:
            i, k, j, _ = lab
            if i < u - 1:
                return (i + 1, k, j, 0)
            return (0, (k + 1) % (s * r), (j + 1) % t, 0)
        l, k, j, _ = lab
        if l < r - 1:
            return (l + 1, k, j, 1)
        carry = k == s * u - 1
        return (0, (k + 1) % (s * u), (j + 1) % t if carry else j, 1)

    g = from_maps(gr, gv, ge, keys)
    return _Base(gr, g, Expected(s * r * u * t, 2, 2, ActionKind.BIREGULAR), tuple(keys))


def _kk(r: int, rp: int, s: int, t: int, tp: int, u: int) -> _Base:
    """Two bi-regular layers sharing the middle vertex class.

    Layer 0 joins V1 = Z_{r u t'} to V2 = Z_{s r r'}; layer 1 joins
    V3 = Z_{r' u t} to V2. Within a layer the endpoint pair of an edge is a
    mixed-radix counter (i; l, k) and the parallel index j advances once per
    full turn of that counter.
    """
    fam = "KK"
    _need(min(r, rp, s, t, tp, u) >= 1, fam, "all parameters >= 1")
    _need(gcd(r, rp) == 1, fam, "gcd(r,r') = 1")
    _need(gcd(t, tp) == 1, fam, "gcd(t,t') = 1")
    _need(gcd(s * r, u * t) == 1, fam, "gcd(sr,ut) = 1")
    _need(gcd(s * rp, u * tp) == 1, fam, "gcd(sr',ut') = 1")
    n1, n2, n3 = r * u * tp, s * r * rp, rp * u * t
    size = {1: n1, 2: n2, 3: n3}
    keys = [(1, x) for x in range(n1)] + [(2, y) for y in range(n2)] + [(3, z) for z in range(n3)]
    b = _Builder(keys)
    # (outer vertex class, radix r, l-range, k-range, multiplicity)
    layers = {0: (1, r, u * tp, s * rp, t), 1: (3, rp, u * t, s * r, tp)}
    for layer, (part, rad, lr, kr, mult) in layers.items():
        for i in range(rad):
            for l in range(lr):
                for k in range(kr):
                    for j in range(mult):
                        b.edge((i, l, k, j, layer), (part, (i + rad * l) % size[part]),
                               (2, (i + rad * k) % n2))
    gr = b.graph()

    def ge(lab):
        i, l, k, j, layer = lab
        _, rad, lr, kr, mult = layers[layer]
        if i < rad - 1:
            return (i + 1, l, k, j, layer)
        wrap = l == lr - 1 and k == kr - 1
        return (0, (l + 1) % lr, (k + 1) % kr, (j + 1) % mult if wrap else j, layer)

    g = from_maps(gr, lambda key: (key[0], (key[1] + 1) % size[key[0]]), ge, keys)
    order = r * rp * s * t * tp * u
    return _Base(gr, g, Expected(order, 3, 2, ActionKind.BIREGULAR), tuple(keys))


_BUILDERS: dict[str, Callable[..., _Base]] = {
    "CycleN": _cycle,
    "CycleNExt2": _cycle_ext2,
    "Circulant": _circulant,
    "GammaNAB": _gamma,
    "Gamma2r1r": _gamma2r1r,
    "Gamma2r2r": _gamma2r2r,
    "CstCycle": _cst_cycle,
    "Kst": _kst,
    "K2Lambda": _k2,
    "CK": _ck,
    "CK2": _ck2,
    "KK": _kk,
}


@lru_cache(maxsize=4096)
def build(spec: FamilySpec) -> FamilyInstance:
    """Build a family member; the outer multiplier lifts g to the extender."""
    if spec.family not in _BUILDERS:
        raise PreconditionError(f"unknown family {spec.family!r}")
    if spec.lam < 1:
        raise ConstraintError(spec.family, "lambda >= 1")
    base = _BUILDERS[spec.family](**spec.p)
    if spec.lam == 1:
        return FamilyInstance(spec, base.graph, base.g, base.expected, base.vertex_key, base.extra)
    lam = spec.lam
    gr = extender(base.graph, lam)
    g = lift_automorphism(base.graph, base.g, lam, base.expected.kind)
    extra = {name: lift_copywise(base.graph, a, lam) for name, a in base.extra.items()}
    ex = base.expected
    return FamilyInstance(spec, gr, g, Expected(ex.order * lam, ex.n_v, ex.e_orbits, ex.kind),
                          base.vertex_key, extra)


def build_unchecked_gamma(n: int, a: int, b: int) -> FamilyInstance:
    """Circ(n, {+-a, +-b}) without the parameter checks, for exploring invalid corners."""
    base = _gamma(n, a, b, check=False)
    spec = FamilySpec("GammaNAB", (("n", n), ("a", a), ("b", b)), 1)
    return FamilyInstance(spec, base.graph, base.g, base.expected, base.vertex_key)


# -- enumeration --------------------------------------------------------------


def _size(family: str, p: dict) -> tuple[int, int]:
    """(|V|, |E|) of the base graph."""
    if family in ("CycleN",):
        return p["n"], p["n"]
    if family == "CycleNExt2":
        return p["n"], 2 * p["n"]
    if family == "GammaNAB":
        return p["n"], 2 * p["n"]
    if family in ("Gamma2r1r", "Gamma2r2r"):
        return 2 * p["r"], 4 * p["r"]
    if family == "CstCycle":
        r, s, t = p["r"], p["s"], p["t"]
        return r * (s + t), 2 * r * s * t
    if family == "Kst":
        return p["s"] + p["t"], p["s"] * p["t"]
    if family == "K2Lambda":
        return 2, p["mult"]
    if family == "CK":
        r, n, t = p["r"], p["n"], p["t"]
        return r * n + t, 2 * r * n * t
    if family == "CK2":
        r, s, t, u = p["r"], p["s"], p["t"], p["u"]
        return s * r * u + u * t, 2 * s * r * u * t
    if family == "KK":
        r, rp, s, t, tp, u = (p[k] for k in PARAMS["KK"])
        return r * u * tp + s * r * rp + rp * u * t, 2 * r * rp * s * u * t * tp
    if family == "Circulant":
        labels, _ = _circulant_edges(p["n"], p["S"])
        return p["n"], len(labels)
    raise PreconditionError(family)


def spec_size(spec: FamilySpec) -> tuple[int, int]:
    v, e = _size(spec.family, spec.p)
    return v, e * spec.lam


def _valid(family: str, params: dict) -> bool:
    try:
        _check_only(family, params)
    except ConstraintError:
        return False
    return True


def _check_only(family: str, p: dict) -> None:
    if family in ("GammaNAB", "Gamma2r1r", "Gamma2r2r"):
        if family == "GammaNAB":
            gamma_constraints(p["n"], p["a"], p["b"])
        elif family == "Gamma2r1r":
            _need(p["r"] >= 2, family, "r >= 2")
        else:
            _need(p["r"] >= 3 and p["r"] % 2 == 1, family, "r odd and r >= 3")
        return
    _BUILDERS[family](**p)


def _bounded(names: tuple[str, ...], limit: int, low: dict[str, int]) -> Iterator[dict]:
    """Assignments of positive integers to ``names`` whose product is at most ``limit``."""
    def rec(k: int, acc: dict, prod: int) -> Iterator[dict]:
        if k == len(names):
            yield dict(acc)
            return
        name = names[k]
        x = low.get(name, 1)
        while prod * x <= limit:
            acc[name] = x
            yield from rec(k + 1, acc, prod * x)
            x += 1
        acc.pop(name, None)
    yield from rec(0, {}, 1)


def _candidates(family: str, max_v: int, max_e: int) -> Iterator[dict]:
    """Parameter tuples whose base graph might fit; sizes are checked again by the caller."""
    if family in ("CycleN", "CycleNExt2"):
        for n in range(3, max_v + 1):
            yield {"n": n}
    elif family == "GammaNAB":
        for n in range(3, max_v + 1):
            for a in range(1, n // 2 + 1):
                for b in range(1, n // 2 + 1):
                    yield {"n": n, "a": a, "b": b}
    elif family in ("Gamma2r1r", "Gamma2r2r"):
        for r in range(2, max_v // 2 + 1):
            yield {"r": r}
    elif family == "CstCycle":
        yield from _bounded(("r", "s", "t"), max_e // 2, {"r": 2})
    elif family == "Kst":
        yield from _bounded(("s", "t"), max_e, {})
    elif family == "K2Lambda":
        for m in range(1, max_e + 1):
            yield {"mult": m}
    elif family == "CK":
        yield from _bounded(("r", "n", "t"), max_e // 2, {"n": 2})
    elif family == "CK2":
        yield from _bounded(("r", "s", "t", "u"), max_e // 2, {"u": 2})
    elif family == "KK":
        yield from _bounded(PARAMS["KK"], max_e // 2, {})


TABLED = tuple(f for f in FAMILIES if f != "Circulant")


def enumerate_specs(max_vertices: int, max_edges: int,
                    families: tuple[str, ...] | None = None) -> list[FamilySpec]:
    """Every valid spec (including outer multipliers) within the size bounds.

    The generic ``Circulant`` family is only included when requested by name,
    since its regular and bi-regular members reappear in the other families.
    """
    families = TABLED if families is None else tuple(families)
    out = []
    for fam in families:
        if fam == "Circulant":
            out += _enumerate_circulants(max_vertices, max_edges)
            continue
        for p in _candidates(fam, max_vertices, max_edges):
            try:
                v, e = _size(fam, p)
            except PreconditionError:
                continue
            if v > max_vertices or e > max_edges or e == 0:
                continue
            if not _valid(fam, p):
                continue
            for lam in range(1, max_edges // e + 1):
                out.append(FamilySpec.of(fam, lam=lam, **p))
    return out


def _enumerate_circulants(max_v: int, max_e: int) -> list[FamilySpec]:
    from itertools import combinations_with_replacement
    out = []
    for n in range(3, max_v + 1):
        classes = list(range(1, n // 2 + 1))
        budget = max_e // (n // 2) + 1
        for size in range(1, budget + 1):
            for combo in combinations_with_replacement(classes, size):
                S = []
                for z in combo:
                    S += [z, n - z] if 2 * z != n else [z]
                p = {"n": n, "S": tuple(sorted(S))}
                try:
                    _, e = _size("Circulant", p)
                except PreconditionError:
                    continue
                if e > max_e:
                    continue
                out.append(FamilySpec.of("Circulant", **p))
    return sorted(set(out), key=str)


# -- classification tables ------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    key: str
    table: str
    name: str
    kind: ActionKind
    n_v: int


ROWS = {r.key: r for r in [
    TableRow("reg-cycle", "regular", "C_n", ActionKind.REGULAR, 1),
    TableRow("reg-kst", "regular", "K_{s,t}", ActionKind.REGULAR, 2),
    TableRow("bi1-cycle2", "bi-regular transitive", "C_n^(2)", ActionKind.BIREGULAR, 1),
    TableRow("bi1-c2n", "bi-regular transitive", "C_{2n}+nK_2^(2)", ActionKind.BIREGULAR, 1),
    TableRow("bi1-2cn", "bi-regular transitive", "2C_n+nK_2^(2)", ActionKind.BIREGULAR, 1),
    TableRow("bi1-circ", "bi-regular transitive", "Circ(n,{+-a,+-b})", ActionKind.BIREGULAR, 1),
    TableRow("bi2-cycle", "bi-regular intransitive", "C_n=(n/2)K_2+(n/2)K_2", ActionKind.BIREGULAR, 2),
    TableRow("bi2-kst2", "bi-regular intransitive", "K_{s,t}^(2)", ActionKind.BIREGULAR, 2),
    TableRow("bi2-cst", "bi-regular intransitive", "C_{2r}[sK_1,tK_1]", ActionKind.BIREGULAR, 2),
    TableRow("bi2-ck-k2", "bi-regular intransitive", "rK_2^(2t)+K_{2r,t}", ActionKind.BIREGULAR, 2),
    TableRow("bi2-ck2-k2", "bi-regular intransitive", "rK_2^(2t)+2K_{r,t}", ActionKind.BIREGULAR, 2),
    TableRow("bi2-ck", "bi-regular intransitive", "rC_n^(t)+K_{nr,t}", ActionKind.BIREGULAR, 2),
    TableRow("bi2-ck2", "bi-regular intransitive", "rC_{su}^(t)+uK_{sr,t}", ActionKind.BIREGULAR, 2),
    TableRow("bi2-kk", "bi-regular intransitive", "rK_{sr',ut'}^(t)+r'K_{sr,ut}^(t')", ActionKind.BIREGULAR, 3),
]}


def table_rows(spec: FamilySpec) -> list[tuple[TableRow, int]]:
    """Rows this member realises, each with the group order |G| = lambda * N of that row."""
    p, lam = spec.p, spec.lam
    fam = spec.family
    out: list[tuple[str, int]] = []
    if fam in ("CycleN", "CycleNExt2"):
        n = p["n"]
        total = lam * (2 if fam == "CycleNExt2" else 1)
        out.append(("reg-cycle", total * n))
        if total % 2 == 0:
            out.append(("bi1-cycle2", total * n // 2))
        if n % 2 == 0:
            out.append(("bi2-cycle", total * n // 2))
    elif fam == "Kst":
        st = p["s"] * p["t"]
        out.append(("reg-kst", lam * st))
        if lam % 2 == 0:
            out.append(("bi2-kst2", lam * st // 2))
    elif fam == "Gamma2r1r":
        out.append(("bi1-c2n", lam * 2 * p["r"]))
    elif fam == "Gamma2r2r":
        out.append(("bi1-2cn", lam * 2 * p["r"]))
    elif fam == "GammaNAB":
        n, a, b = p["n"], p["a"] % p["n"], p["b"] % p["n"]
        if 2 * b == n:
            out.append(("bi1-c2n" if a % 2 else "bi1-2cn", lam * n))
        else:
            out.append(("bi1-circ", lam * n))
    elif fam == "CstCycle":
        out.append(("bi2-cst", lam * p["r"] * p["s"] * p["t"]))
    elif fam == "CK":
        out.append(("bi2-ck-k2" if p["n"] == 2 else "bi2-ck", lam * p["r"] * p["n"] * p["t"]))
    elif fam == "CK2":
        key = "bi2-ck2-k2" if (p["s"], p["u"]) == (1, 2) else "bi2-ck2"
        out.append((key, lam * p["r"] * p["s"] * p["t"] * p["u"]))
    elif fam == "KK":
        order = 1
        for k in PARAMS["KK"]:
            order *= p[k]
        out.append(("bi2-kk", lam * order))
    return [(ROWS[k], order) for k, order in out]


@lru_cache(maxsize=16)
def _catalogue(max_vertices: int, max_edges: int,
               families: tuple[str, ...] | None = None) -> dict[tuple, list[FamilySpec]]:
    index: dict[tuple, list[FamilySpec]] = {}
    for spec in enumerate_specs(max_vertices, max_edges, families):
        inst = build(spec)
        index.setdefault(fingerprint(inst.graph), []).append(spec)
    return index


def recognize(g: Multigraph, c=None, cap: int | None = None, bounds: tuple[int, int] | None = None,
              families: tuple[str, ...] | None = None, min_vertices: int = 3) -> list[FamilySpec]:
    """Family members isomorphic to ``g``.

    When a cyclic action ``c`` is supplied it must be regular or bi-regular on
    E. Candidates are pruned by fingerprint and confirmed by isomorphism.
    ``bounds`` (max vertices, max edges) fixes the catalogue size, so one
    catalogue can serve a whole sweep; by default it is sized to ``g``.
    K2Lambda is left out unless named in ``families``, since the
    classification treats two-vertex graphs separately.
    """
    from .oracle import isomorphic
    from .perm import classify_action
    if c is not None and not classify_action(c).is_cyclic_edge_action:
        raise PreconditionError("the supplied action is neither regular nor bi-regular on E")
    if g.vertex_count < min_vertices:
        raise PreconditionError(f"recognition needs at least {min_vertices} vertices")
    if bounds is None:
        bounds = (max(g.vertex_count, 3), max(g.edge_count, 1))
    if families is None:
        families = tuple(f for f in TABLED if f != "K2Lambda")
    index = _catalogue(bounds[0], bounds[1], tuple(families))
    return [spec for spec in index.get(fingerprint(g), [])
            if isomorphic(g, build(spec).graph, cap) is not None]
