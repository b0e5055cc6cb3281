"""Brute-force ground truth: automorphism groups, isomorphism, cyclic edge actions.

Everything here is exhaustive and meant for small graphs. Vertex maps are
found by backtracking over a colour-refined partition; the edge part of an
automorphism is then any bijection between matching parallel bundles.
"""

from __future__ import annotations

from itertools import permutations, product
from math import factorial, lcm
from typing import Iterator, Sequence

from .errors import CapExceeded, PreconditionError, resolve_cap
from .multigraph import Multigraph, fingerprint
from .perm import (ActionClass, ActionKind, Automorphism, GraphMap, classify_action,
                   cyclic_action, cycles_of, perm_order)


def _refine(graphs: Sequence[Multigraph]) -> list[list[int]]:
    """Shared colour refinement over several graphs; colours are comparable across them."""
    colours = [[g.degrees[v] for v in range(g.vertex_count)] for g in graphs]
    classes = -1
    while True:
        table: dict[tuple, int] = {}
        new = []
        for g, col in zip(graphs, colours):
            sigs = []
            for v in range(g.vertex_count):
                nb = sorted((col[w], g.multiplicity(v, w)) for w in g.neighbours[v])
                sigs.append((col[v], tuple(nb)))
            new.append(sigs)
        for sig in sorted({s for sigs in new for s in sigs}):
            table[sig] = len(table)
        colours = [[table[s] for s in sigs] for sigs in new]
        if len(table) == classes:
            return colours
        classes = len(table)


def _search_order(g: Multigraph, colour: list[int]) -> list[int]:
    """Vertices in an order where each one tends to touch earlier ones: rare colours first, then BFS."""
    freq: dict[int, int] = {}
    for c in colour:
        freq[c] = freq.get(c, 0) + 1
    order: list[int] = []
    seen = set()
    for root in sorted(range(g.vertex_count), key=lambda v: (freq[colour[v]], v)):
        if root in seen:
            continue
        queue = [root]
        seen.add(root)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(g.neighbours[v], key=lambda w: (freq[colour[w]], w)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def vertex_isomorphisms(g1: Multigraph, g2: Multigraph) -> Iterator[tuple[int, ...]]:
    """Every vertex bijection g1 -> g2 preserving all edge multiplicities."""
    n = g1.vertex_count
    if n != g2.vertex_count or g1.edge_count != g2.edge_count:
        return
    if fingerprint(g1) != fingerprint(g2):
        return
    c1, c2 = _refine([g1, g2])
    if sorted(c1) != sorted(c2):
        return
    order = _search_order(g1, c1)
    by_colour: dict[int, list[int]] = {}
    for w in range(n):
        by_colour.setdefault(c2[w], []).append(w)
    image = [-1] * n
    used = [False] * n
    placed: list[int] = []

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield tuple(image)
            return
        v = order[k]
        for w in by_colour.get(c1[v], ()):
            if used[w]:
                continue
            if all(g1.multiplicity(v, u) == g2.multiplicity(w, image[u]) for u in placed):
                image[v] = w
                used[w] = True
                placed.append(v)
                yield from rec(k + 1)
                placed.pop()
                used[w] = False
                image[v] = -1

    yield from rec(0)


def vertex_automorphisms(g: Multigraph) -> list[tuple[int, ...]]:
    return list(vertex_isomorphisms(g, g))


def aut_count(g: Multigraph) -> int:
    """|Aut g| = (vertex symmetries) x (product of bundle sizes factorial)."""
    bundles = 1
    for es in g.bundles.values():
        bundles *= factorial(len(es))
    return len(vertex_automorphisms(g)) * bundles


def _edge_images(g1: Multigraph, g2: Multigraph, vmap: Sequence[int]) -> list[tuple[list[int], list[int]]]:
    pairs = []
    for (u, v), es in sorted(g1.bundles.items()):
        a, b = vmap[u], vmap[v]
        target = g2.bundles[(a, b) if a < b else (b, a)]
        pairs.append((list(es), list(target)))
    return pairs


def full_automorphism_group(g: Multigraph, cap: int | None = None) -> list[Automorphism]:
    """Every automorphism of ``g``, in a deterministic order.

    Raises CapExceeded before enumerating when |Aut g| is larger than ``cap``.
    """
    cap = resolve_cap(cap)
    vauts = vertex_automorphisms(g)
    bundle_factor = 1
    for es in g.bundles.values():
        bundle_factor *= factorial(len(es))
    total = len(vauts) * bundle_factor
    if total > cap:
        raise CapExceeded(f"|Aut| = {total} exceeds the cap {cap}")
    out = []
    m = g.edge_count
    for vmap in vauts:
        pairs = _edge_images(g, g, vmap)
        choices = [list(permutations(tgt)) for _, tgt in pairs]
        for pick in product(*choices):
            ei = [0] * m
            for (src, _), tgt in zip(pairs, pick):
                for e, f in zip(src, tgt):
                    ei[e] = f
            out.append(Automorphism(vmap, tuple(ei), g))
    return out


def isomorphic(g1: Multigraph, g2: Multigraph, cap: int | None = None) -> GraphMap | None:
    """A witness isomorphism g1 -> g2, or None.

    ``cap`` bounds the number of vertex maps tried; the first one found is
    enough since parallel edges can always be matched in order.
    """
    cap = resolve_cap(cap)
    for tried, vmap in enumerate(vertex_isomorphisms(g1, g2)):
        if tried >= cap:
            raise CapExceeded(f"isomorphism search tried more than {cap} maps")
        ei = [0] * g1.edge_count
        for src, tgt in _edge_images(g1, g2, vmap):
            for e, f in zip(src, tgt):
                ei[e] = f
        return GraphMap(vmap, tuple(ei))
    return None


def find_cyclic_edge_actions(g: Multigraph, cap: int | None = None) -> list[tuple[Automorphism, ActionClass]]:
    """Every automorphism whose cyclic group is regular or bi-regular on E."""
    out = []
    for a in full_automorphism_group(g, cap):
        cls = classify_action(cyclic_action(a))
        if cls.is_cyclic_edge_action:
            out.append((a, cls))
    return out


def cyclic_action_types(g: Multigraph) -> set[tuple[ActionKind, int, int, bool]]:
    """The distinct (kind, vertex-orbit count, group order, degenerate) of cyclic edge actions.

    Works from vertex automorphisms alone. For a vertex map s, let the
    parallel bundles fall into <s>-orbits. Choosing the edge bijections
    freely, an automorphism over s can make one bundle orbit of size p and
    multiplicity m into a single edge cycle of length p*m, or (m even) into
    two cycles of length p*m/2. Two bundle orbits with equal edge counts give
    two cycles of that length. No other choice yields a regular or bi-regular
    action, so this matches ``find_cyclic_edge_actions`` without listing the
    (possibly huge) bundle permutations. Only valid for graphs without
    isolated vertices, where the vertex action is determined by the edge action
    up to the vertex map itself.
    """
    out = set()
    m = g.edge_count
    if m == 0:
        return out
    for vmap in vertex_automorphisms(g):
        vorder = perm_order(vmap)
        n_v = len(cycles_of(vmap))
        seen = set()
        orbits = []
        for pair in sorted(g.bundles):
            if pair in seen:
                continue
            orb = []
            p = pair
            while p not in seen:
                seen.add(p)
                orb.append(p)
                a, b = vmap[p[0]], vmap[p[1]]
                p = (a, b) if a < b else (b, a)
            orbits.append((len(orb), len(g.bundles[pair])))
        if len(orbits) == 1:
            size, mult = orbits[0]
            out.add((ActionKind.REGULAR, n_v, lcm(vorder, size * mult), False))
            if mult % 2 == 0:
                half = size * mult // 2
                out.add((ActionKind.BIREGULAR, n_v, lcm(vorder, half), m == 2))
        elif len(orbits) == 2:
            (s1, m1), (s2, m2) = orbits
            if s1 * m1 == s2 * m2:
                out.add((ActionKind.BIREGULAR, n_v, lcm(vorder, s1 * m1), m == 2))
    return out


def literal_action_types(g: Multigraph, cap: int | None = None) -> set[tuple[ActionKind, int, int, bool]]:
    """Same summary as ``cyclic_action_types`` but from the full automorphism list."""
    out = set()
    for a, cls in find_cyclic_edge_actions(g, cap):
        c = cyclic_action(a)
        out.add((cls.kind, len(c.vertex_orbits), c.order, cls.degenerate))
    return out


def edge_transitive(g: Multigraph, cap: int | None = None) -> bool:
    """Aut g is transitive on E; computed on vertex maps, since bundles are always mixed freely."""
    if g.edge_count == 0:
        return True
    pairs = sorted(g.bundles)
    if len({len(g.bundles[p]) for p in pairs}) != 1:
        return False
    reach = {pairs[0]}
    for vmap in vertex_automorphisms(g):
        a, b = vmap[pairs[0][0]], vmap[pairs[0][1]]
        reach.add((a, b) if a < b else (b, a))
    return len(reach) == len(pairs)


# -- exhaustive multigraph enumeration -----------------------------------------


def _skeletons(max_vertices: int, max_edges: int):
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g
    if max_vertices > 7:
        raise PreconditionError("skeleton enumeration uses the graph atlas, which stops at 7 vertices")
    for index, h in enumerate(graph_atlas_g()):
        n = h.number_of_nodes()
        if n < 2 or n > max_vertices or h.number_of_edges() > max_edges:
            continue
        if not nx.is_connected(h):
            continue
        yield index, Multigraph.from_edges(n, sorted(tuple(sorted(e)) for e in h.edges()))


def _canonical_vectors(skel: Multigraph, budget: int) -> Iterator[tuple[int, ...]]:
    """Multiplicity vectors (entries >= 1, sum <= budget) that are lex-least in their symmetry class."""
    pairs = list(skel.ends)
    index = {p: k for k, p in enumerate(pairs)}
    perms = []
    for vmap in vertex_automorphisms(skel):
        img = []
        for u, v in pairs:
            a, b = vmap[u], vmap[v]
            img.append(index[(a, b) if a < b else (b, a)])
        perms.append(img)
    k = len(pairs)

    def rec(prefix: list[int], left: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == k:
            vec = tuple(prefix)
            for img in perms:
                moved = [0] * k
                for i, j in enumerate(img):
                    moved[j] = vec[i]
                if tuple(moved) < vec:
                    return
            yield vec
            return
        slots = k - len(prefix) - 1
        for x in range(1, left - slots + 1):
            prefix.append(x)
            yield from rec(prefix, left - x)
            prefix.pop()

    yield from rec([], budget)


def enumerate_multigraphs(max_vertices: int, max_edges: int) -> Iterator[tuple[tuple, Multigraph]]:
    """Connected loopless multigraphs with 2..max_vertices vertices and at most max_edges edges.

    Each isomorphism class appears once, keyed by (atlas index of the simple
    skeleton, multiplicity vector).
    """
    for index, skel in _skeletons(max_vertices, max_edges):
        for vec in _canonical_vectors(skel, max_edges):
            ends = [pair for pair, mult in zip(skel.ends, vec) for _ in range(mult)]
            yield (index, vec), Multigraph.from_edges(skel.vertex_count, ends)
