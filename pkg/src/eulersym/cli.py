"""Command-line front end.

Exit codes: 0 when the answer is positive (built, verified, matched, found),
1 when the answer is a counterexample, mismatch or non-existence, 2 on bad
input. All JSON output is key-sorted so reruns are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Any

from .errors import CapExceeded, ConstraintError, IncidenceError, PreconditionError, resolve_cap

OK, MISMATCH, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _emit(data: Any, path: str | None = None) -> None:
    text = _dump(data)
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load(text_or_path: str) -> Any:
    p = Path(text_or_path)
    try:
        raw = p.read_text() if p.exists() else text_or_path
        return json.loads(raw)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {text_or_path!r}: {exc}") from None


# -- spec and file helpers ------------------------------------------------------

_PARAM_FLAGS = ("n", "a", "b", "r", "rp", "s", "t", "tp", "u", "mult")


def _spec_from_args(args):
    from .families import PARAMS, FamilySpec
    if args.spec:
        return FamilySpec.from_json(_load(args.spec))
    if not args.family:
        return None
    if args.family not in PARAMS:
        raise UsageError(f"unknown family {args.family!r}")
    params = {}
    for name in PARAMS[args.family]:
        if name == "S":
            if args.S is None:
                raise UsageError("Circulant needs --S")
            params["S"] = [int(x) for x in args.S.split(",")]
            continue
        value = getattr(args, name, None)
        if value is None:
            raise UsageError(f"{args.family} needs --{name}")
        params[name] = value
    return FamilySpec.of(args.family, lam=args.lam, **params)


def _graph_from_file(path: str):
    from .multigraph import Multigraph
    data = _load(path)
    if isinstance(data, dict) and "graph" in data:
        data = data["graph"]
    return Multigraph.from_json(data)


def _map_from_file(path: str, which: str = "g"):
    from .perm import GraphMap
    data = _load(path)
    if isinstance(data, dict) and "automorphisms" in data:
        data = data["automorphisms"]
    if isinstance(data, dict) and "g" in data:
        if which not in data:
            raise UsageError(f"no automorphism named {which!r}; have {', '.join(sorted(data))}")
        data = data[which]
    if isinstance(data, list):
        if not data:
            raise UsageError("empty automorphism list")
        data = data[0]
    return GraphMap.from_json(data)


def _add_spec_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help="family name, e.g. CycleN, Kst, Gamma2r2r")
    p.add_argument("--spec", help="FamilySpec as a JSON string or file")
    for name in _PARAM_FLAGS:
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--S", help="connection multiset for Circulant, comma separated")
    p.add_argument("--lambda", dest="lam", type=int, default=1, help="edge multiplier")


# -- subcommands --------------------------------------------------------------


def cmd_generate(args) -> int:
    from .families import build
    from .lift import lift_split
    from .perm import ActionKind
    spec = _spec_from_args(args)
    if spec is None:
        raise UsageError("generate needs --family or --spec")
    inst = build(spec)
    auts = {"g": inst.g.to_json(), **{k: a.to_json() for k, a in inst.extra.items()}}
    if spec.lam % 2 == 0 and inst.expected.kind is ActionKind.REGULAR:
        base = build(spec.with_lam(1))
        auts["g_split"] = lift_split(base.graph, base.g, spec.lam).to_json()
    if args.out:
        _emit(inst.graph.to_json(), args.out)
        _emit({"spec": spec.to_json(), "automorphisms": auts}, args.aut_out or _sibling(args.out, "aut"))
    else:
        _emit({"spec": spec.to_json(), "graph": inst.graph.to_json(), "automorphisms": auts})
    if args.dot:
        Path(args.dot).write_text(inst.graph.to_dot())
    return OK


def _sibling(path: str, tag: str) -> str:
    p = Path(path)
    return str(p.with_name(f"{p.stem}.{tag}{p.suffix or '.json'}"))


def cmd_euler(args) -> int:
    from .cycles import (EulerCertificate, certify, construct_symmetrical_euler,
                         enumerate_euler_cycles, is_symmetrical)
    from .families import build
    spec = _spec_from_args(args)
    if spec is not None:
        res = construct_symmetrical_euler(build(spec))
        out = {"spec": spec.to_json(), **res.to_json()}
        _emit(out, args.out)
        return OK if isinstance(res, EulerCertificate) else MISMATCH
    if not args.graph:
        raise UsageError("euler needs --family, --spec or --graph")
    g = _graph_from_file(args.graph)
    out: dict[str, Any] = {"method": "exhaustive"}
    if not g.is_connected() or any(d % 2 for d in g.degrees):
        out.update(status="not_exists", detail="graph is not connected with all degrees even")
        _emit(out, args.out)
        return MISMATCH
    cycles = enumerate_euler_cycles(g, resolve_cap(args.cap))
    out["euler_classes"] = len(cycles)
    for c in cycles:
        if is_symmetrical(g, c):
            out.update(certify(g, c).to_json())
            _emit(out, args.out)
            return OK
    out.update(status="not_exists", detail="no Euler cycle class is symmetrical")
    _emit(out, args.out)
    return MISMATCH


def _action_json(c, cls) -> dict[str, Any]:
    return {"kind": cls.kind.value, "order": c.order, "edge_order": cls.edge_group_order,
            "edge_orbits": [list(o) for o in c.edge_orbits],
            "vertex_orbits": [list(o) for o in c.vertex_orbits],
            "degenerate": cls.degenerate}


def cmd_verify(args) -> int:
    from .perm import classify_action, cyclic_action, validate_automorphism
    g = _graph_from_file(args.graph)
    m = _map_from_file(args.aut, args.which)
    try:
        a = validate_automorphism(g, m)
    except IncidenceError as exc:
        _emit({"valid": False, "error": str(exc), "edge": exc.edge}, args.out)
        return MISMATCH
    c = cyclic_action(a)
    _emit({"valid": True, "action": _action_json(c, classify_action(c))}, args.out)
    return OK


def _k2_rows(g, a) -> list[dict[str, Any]]:
    from .perm import classify_action, cyclic_action, generated_group
    from .sweeps import K2_ROWS, K2Signature, k2_predicted
    c = cyclic_action(a)
    cls = classify_action(c)
    ident = tuple(range(g.edge_count))
    kernel = any(x.edge_image == ident and x.vertex_image != (0, 1) for x in generated_group([a]))
    sig = K2Signature(c.order, len(c.vertex_orbits) == 1, cls.kind.value, kernel)
    return [{"row": f"k2-{k}", "table": "K_2^(lambda)", "name": K2_ROWS[k]}
            for k, want in sorted(k2_predicted(g.edge_count).items()) if want == sig]


def cmd_classify(args) -> int:
    from .bicoset import cyclic_edge_transitive_classification
    from .families import recognize, table_rows
    from .perm import ActionKind, classify_action, cyclic_action, validate_automorphism
    g = _graph_from_file(args.graph)
    a = validate_automorphism(g, _map_from_file(args.aut, args.which))
    c = cyclic_action(a)
    cls = classify_action(c)
    n_v = len(c.vertex_orbits)
    out: dict[str, Any] = {"action": _action_json(c, cls), "vertex_orbit_count": n_v, "matches": []}
    if not cls.is_cyclic_edge_action:
        out["detail"] = "action is neither regular nor bi-regular on the edges"
        _emit(out, args.out)
        return MISMATCH
    if not g.is_connected():
        if cls.kind is ActionKind.REGULAR:
            out["cyclic_edge_transitive"] = cyclic_edge_transitive_classification(g, c).to_json()
            _emit(out, args.out)
            return OK if out["cyclic_edge_transitive"]["matches_table"] else MISMATCH
        out["detail"] = "disconnected graphs are only classified for regular actions"
        _emit(out, args.out)
        return MISMATCH
    if g.vertex_count == 2:
        out["matches"] = _k2_rows(g, a)
    else:
        for spec in recognize(g, c, cap=args.cap):
            for row, order in table_rows(spec):
                if row.kind is cls.kind and row.n_v == n_v and order == c.order:
                    out["matches"].append({"row": row.key, "table": row.table, "name": row.name,
                                           "spec": str(spec)})
        if cls.kind is ActionKind.REGULAR:
            out["cyclic_edge_transitive"] = cyclic_edge_transitive_classification(g, c).to_json()
    _emit(out, args.out)
    return OK if out["matches"] else MISMATCH


def cmd_sweep(args) -> int:
    from .sweeps import sweep_theorem1, sweep_theorem2
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if args.theorem == 1:
        rep = sweep_theorem1(args.max_vertices or 7, args.max_edges or 10, args.jobs)
    else:
        rep = sweep_theorem2(args.max_vertices or 6, args.max_edges or 10, args.jobs)
    if args.out:
        Path(args.out).write_text(rep.jsonl())
    _emit(rep.summary())
    return OK if not rep.failures else MISMATCH


_NAMED_GROUP = re.compile(r"^(Z|D)(\d+)(?:xZ(\d+))?$")


def _group_from_arg(text: str):
    from .bicoset import FiniteGroup
    m = _NAMED_GROUP.match(text)
    if m:
        kind, n, extra = m.group(1), int(m.group(2)), m.group(3)
        if kind == "D":
            if extra:
                raise UsageError("products are only available for cyclic factors")
            return FiniteGroup.dihedral(n)
        g = FiniteGroup.cyclic(n)
        return FiniteGroup.direct_product(g, FiniteGroup.cyclic(int(extra))) if extra else g
    return FiniteGroup.from_json(_load(text))


def _subgroup_from_arg(group, text: str) -> frozenset[int]:
    text = text.strip()
    try:
        gen = text.startswith("<") and text.endswith(">")
        elems = [int(x) for x in (text[1:-1] if gen else text).split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad subgroup {text!r}: use '0,2,4' or '<2>'") from None
    bad = [x for x in elems if not 0 <= x < group.order]
    if bad:
        raise UsageError(f"elements {bad} are outside 0..{group.order - 1}")
    return group.closure(elems) if gen else frozenset(elems)


def cmd_bicos(args) -> int:
    from .bicoset import BiCosetSpec, bicos, bicos_properties
    group = _group_from_arg(args.group)
    spec = BiCosetSpec.of(group, *(_subgroup_from_arg(group, x) for x in (args.L, args.R, args.J)))
    g, _ = bicos(spec)
    rep = bicos_properties(spec)
    if args.out:
        _emit(g.to_json(), args.out)
    if args.dot:
        Path(args.dot).write_text(g.to_dot())
    _emit({"spec": {"L": sorted(spec.L), "R": sorted(spec.R), "J": sorted(spec.J),
                    "order": group.order},
           "vertices": g.vertex_count, "edges": g.edge_count, "report": rep.to_json()})
    return OK if rep.agree else MISMATCH


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="eulersym", description=__doc__.splitlines()[0])
    ap.add_argument("--cap", type=int, default=None,
                    help="size guard for enumerations (default: $EULERSYM_CAP or 2000000)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build a family member with its automorphisms")
    _add_spec_flags(p)
    p.add_argument("--out", help="graph JSON path (automorphisms go next to it)")
    p.add_argument("--aut-out", help="automorphism JSON path")
    p.add_argument("--dot", help="also write Graphviz DOT here")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("euler", help="symmetrical Euler cycle by construction or exhaustive search")
    _add_spec_flags(p)
    p.add_argument("--graph", help="graph JSON for the exhaustive path")
    p.add_argument("--out")
    p.set_defaults(func=cmd_euler)

    for name, func, text in (("verify", cmd_verify, "check a map is an automorphism"),
                             ("classify", cmd_classify, "match a cyclic edge action to a table row")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--graph", required=True)
        p.add_argument("--aut", required=True)
        p.add_argument("--which", default="g", help="name of the map inside a generated automorphism file")
        p.add_argument("--out")
        p.set_defaults(func=func)

    p = sub.add_parser("sweep", help="exhaustive classification sweep")
    p.add_argument("--theorem", type=int, choices=(1, 2), required=True)
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--max-edges", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write JSON-lines records here")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bicos", help="bi-coset graph of a group and three subgroups")
    p.add_argument("--group", required=True, help="JSON table, or Zn, Dn, ZmxZn")
    p.add_argument("--L", required=True)
    p.add_argument("--R", required=True)
    p.add_argument("--J", required=True)
    p.add_argument("--out")
    p.add_argument("--dot")
    p.set_defaults(func=cmd_bicos)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ConstraintError as exc:
        print(f"error: {exc.family}: constraint violated: {exc.constraint}", file=sys.stderr)
    except (UsageError, PreconditionError, IncidenceError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return USAGE


if __name__ == "__main__":
    sys.exit(main())
