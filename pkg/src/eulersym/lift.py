"""Lifting cyclic actions and Euler cycles from a graph to its extenders."""

from __future__ import annotations

from typing import Sequence

from .errors import PreconditionError
from .multigraph import Multigraph, copy_id, extender
from .perm import (ActionKind, Automorphism, GraphMap, classify_action,
                   cyclic_action, validate_automorphism)


def orbit_indexing(a: Automorphism) -> tuple[ActionKind, list[int]]:
    """Order the edges so that ``a`` shifts positions by 1 (regular) or 2 (bi-regular).

    Returns the action kind and ``seq`` with ``a(seq[p]) == seq[p + step]``
    for every position except the last ``step`` ones, which wrap to the start.
    """
    c = cyclic_action(a)
    kind = classify_action(c).kind
    if kind is ActionKind.REGULAR:
        return kind, list(c.edge_orbits[0])
    if kind is ActionKind.BIREGULAR:
        first, second = c.edge_orbits
        seq = [0] * (2 * len(first))
        seq[0::2] = first
        seq[1::2] = second
        return kind, seq
    raise PreconditionError("the automorphism is neither regular nor bi-regular on E")


def lift_automorphism(g: Multigraph, a: Automorphism, lam: int,
                      mode: ActionKind | None = None) -> Automorphism:
    """Cyclic regular or bi-regular action on ``extender(g, lam)`` covering ``a``.

    Positions advance by one (or two) inside a copy; passing the end of the
    edge sequence moves on to the next copy, so the copies are chained into a
    single orbit (or a pair of orbits) of ``lam`` times the length.
    """
    if lam < 1:
        raise PreconditionError("lam must be at least 1")
    kind, seq = orbit_indexing(a)
    if mode is not None and mode is not kind:
        raise PreconditionError(f"requested mode {mode.value} but the action is {kind.value}")
    step = 1 if kind is ActionKind.REGULAR else 2
    m = g.edge_count
    big = extender(g, lam)
    edge_image = [0] * (m * lam)
    for p, e in enumerate(seq):
        q = p + step
        carry = q >= m
        target = seq[q - m] if carry else seq[q]
        for j in range(1, lam + 1):
            jj = j % lam + 1 if carry else j
            edge_image[copy_id(m, e, j)] = copy_id(m, target, jj)
    return validate_automorphism(big, GraphMap(a.vertex_image, tuple(edge_image)))


def lift_split(g: Multigraph, a: Automorphism, lam: int) -> Automorphism:
    """Bi-regular action on ``extender(g, lam)`` from a regular ``a``, for even ``lam``.

    Odd-numbered and even-numbered copies are chained separately, giving two
    edge orbits of length ``|E(g)| * lam / 2``.
    """
    if lam < 2 or lam % 2:
        raise PreconditionError("lam must be even")
    kind, seq = orbit_indexing(a)
    if kind is not ActionKind.REGULAR:
        raise PreconditionError("the automorphism must be regular on E")
    m = g.edge_count
    half = lam // 2
    big = extender(g, lam)
    edge_image = [0] * (m * lam)
    for p, e in enumerate(seq):
        carry = p + 1 == m
        target = seq[0] if carry else seq[p + 1]
        for j in range(1, lam + 1):
            side, k = (j - 1) % 2, (j - 1) // 2
            if carry:
                k = (k + 1) % half
            edge_image[copy_id(m, e, j)] = copy_id(m, target, 2 * k + side + 1)
    return validate_automorphism(big, GraphMap(a.vertex_image, tuple(edge_image)))


def lift_copywise(g: Multigraph, a: Automorphism, lam: int) -> Automorphism:
    """The automorphism acting as ``a`` on every copy separately."""
    m = g.edge_count
    big = extender(g, lam)
    edge_image = [copy_id(m, a.edge_image[e], j) for j in range(1, lam + 1) for e in range(m)]
    return validate_automorphism(big, GraphMap(a.vertex_image, tuple(edge_image)))


def lift_cycle(g: Multigraph, edges: Sequence[int], lam: int) -> list[int]:
    """Edge sequence of the concatenated cycle: all first copies, then all second copies, ..."""
    m = g.edge_count
    return [copy_id(m, e, j) for j in range(1, lam + 1) for e in edges]


def lift_cycle_symmetry(g: Multigraph, cycle, psi: Automorphism, which: str, lam: int):
    """Lift an Euler cycle and an automorphism inducing ``which`` on it.

    ``which`` is one of ``"phi"``, ``"phi2"``, ``"tau"``, ``"phitau"``.
    Returns ``(lifted cycle, lifted automorphism)`` on ``extender(g, lam)``.
    Positions and copies are 1-based in the formulas below; copy arithmetic
    is taken modulo ``lam`` with representatives 1..lam.
    """
    from .cycles import DihedralElement, induced_element, is_euler, make_cycle

    if not is_euler(g, cycle):
        raise PreconditionError("the cycle is not an Euler cycle of g")
    ell = len(cycle.edges)
    wanted = DihedralElement.named(which, ell)
    got = induced_element(g, cycle, psi)
    if got != wanted:
        raise PreconditionError(f"psi induces {got} on the cycle, not {which}")

    def wrap(j: int) -> int:
        return (j - 1) % lam + 1

    def image(i: int, j: int) -> tuple[int, int]:
        if which == "phi":
            return (i + 1, j) if i <= ell - 1 else (1, wrap(j + 1))
        if which == "phi2":
            return (i + 2, j) if i <= ell - 2 else (i + 2 - ell, wrap(j + 1))
        if which == "tau":
            return ell + 1 - i, wrap(lam + 1 - j)
        if which == "phitau":
            return (ell - i, wrap(lam + 1 - j)) if i <= ell - 1 else (ell, wrap(lam - j))
        raise PreconditionError(f"unknown dihedral element {which!r}")

    m = g.edge_count
    big = extender(g, lam)
    edge_image = [0] * (m * lam)
    for i, e in enumerate(cycle.edges, start=1):
        for j in range(1, lam + 1):
            ti, tj = image(i, j)
            edge_image[copy_id(m, e, j)] = copy_id(m, cycle.edges[ti - 1], tj)
    lifted = validate_automorphism(big, GraphMap(psi.vertex_image, tuple(edge_image)))
    big_cycle = make_cycle(big, lift_cycle(g, cycle.edges, lam), cycle.vertex_chain[0])
    return big_cycle, lifted
