"""Command-line front end.

Exit status is 0 on success, 1 for domain errors and 2 for usage errors.
Errors are printed as ``{"error": {"code": ..., "message": ...}}``.
"""
from __future__ import annotations

import argparse
import json
import sys

from .algebra import format_element
from .analysis import is_tidy
from .enumeration import DEFAULT_ENUM_BOUND, all_schur_rings, catalog_entry
from .errors import ParseError, SchurKitError, UsageError
from .groups import GroupHom, all_subgroups, generators, parse_group
from .idempotents import decompose, epsilon, is_cyclic_quotient, primitivity_oracle
from .schur import cayley_image, s_subgroups
from .specdoc import dump_ring, ring_from_arg
from .wedderburn import wedderburn_decomposition


def _subgroup_info(H) -> dict:
    G = H.group
    return {
        "order": H.order,
        "generators": [G.encode(g) for g in generators(H)],
        "elements": [G.encode(G.element(i)) for i in H.sorted_indices],
    }


def _ring(args):
    return ring_from_arg(args.ring, args.group)


def cmd_subgroups(args) -> dict:
    G = parse_group(args.group)
    subs = all_subgroups(G).subgroups
    return {"group": str(G), "count": len(subs), "subgroups": [_subgroup_info(H) for H in subs]}


def cmd_build(args) -> dict:
    S = _ring(args)
    out = dump_ring(S)
    out["dimension"] = S.dimension
    out["s_subgroup_orders"] = s_subgroups(S).orders()
    return out


def cmd_idempotents(args) -> dict:
    S = _ring(args)
    L = s_subgroups(S)
    rows = []
    for H in L:
        e = epsilon(L, H)
        rows.append({
            "subgroup_order": H.order,
            "generators": [S.group.encode(g) for g in generators(H)],
            "epsilon": format_element(e),
            "nonzero": bool(e),
            "decomposition": [K.order for K in decompose(L, H) if is_cyclic_quotient(S.group, K)],
            "primitive": primitivity_oracle(S, e, args.cap) if e else False,
        })
    return {"group": str(S.group), "idempotents": rows}


def cmd_decompose(args) -> dict:
    S = _ring(args)
    L = s_subgroups(S)
    G = S.group
    rows = []
    for H in L:
        NLH = decompose(L, H)
        rows.append({
            "subgroup_order": H.order,
            "N": [_subgroup_info(K) for K in NLH],
            "atoms": [K.order for K in NLH if is_cyclic_quotient(G, K)],
        })
    return {"group": str(G), "decompositions": rows}


def cmd_wedderburn(args) -> dict:
    return wedderburn_decomposition(_ring(args)).to_dict()


def cmd_tidy(args) -> dict:
    return is_tidy(_ring(args), args.cap).to_dict()


def cmd_cayley(args) -> dict:
    S = _ring(args)
    C = parse_group(args.codomain)
    try:
        raw = json.loads(args.images)
    except json.JSONDecodeError as exc:
        raise ParseError(f"--images is not valid JSON: {exc}") from None
    imgs = tuple(C.coerce(tuple(x) if isinstance(x, list) else x) for x in raw)
    img = cayley_image(GroupHom(S.group, C, imgs), S)
    out = {
        "dimension": img.dimension,
        "is_schur": img.is_schur,
        "basis": [format_element(b) for b in img.basis],
    }
    if img.partition is not None:
        out["classes"] = [[C.encode(C.element(i)) for i in sorted(c)] for c in img.partition]
    return out


def cmd_selfcheck(args) -> dict:
    from .golden import run_selfcheck

    results = run_selfcheck()
    return {"checks": [{"name": n, "ok": ok} for n, ok in results],
            "ok": all(ok for _, ok in results)}


def cmd_enumerate(args, out) -> int:
    G = parse_group(args.group)
    res = all_schur_rings(G, bound=args.bound, workers=args.workers)
    if args.count_only:
        out.write(json.dumps({"group": str(G), "count": res.count}) + "\n" if args.format == "json"
                  else f"{res.count}\n")
        return 0
    for S in res.rings:
        entry = catalog_entry(S)
        if args.format == "json":
            out.write(json.dumps(entry, ensure_ascii=False) + "\n")
        else:
            extra = f"  {entry['wedderburn']}" if "wedderburn" in entry else ""
            out.write(f"dim={entry['dimension']} tidy={entry['tidy']} {entry['classes']}{extra}\n")
    return 0


def _text(cmd: str, rep: dict) -> str:
    if cmd == "wedderburn":
        lines = [rep["shape"]]
        lines += [f"  |H|={c['subgroup_order']:<4} d={c['conductor']:<4} dim={c['dimension']}  {c['field']}"
                  for c in rep["components"]]
        return "\n".join(lines)
    if cmd == "idempotents":
        return "\n".join(
            f"eps(S, |H|={r['subgroup_order']}) = {r['epsilon']}"
            f"  [atoms {r['decomposition']}, {'primitive' if r['primitive'] else 'not primitive'}]"
            for r in rep["idempotents"]
        )
    if cmd == "tidy":
        lines = [rep["verdict"]]
        lines += [f"  primitive: {e}" for e in rep["primitive_idempotents"]]
        lines += [f"  witness: {e}" for e in rep["witnesses"]]
        return "\n".join(lines)
    if cmd == "selfcheck":
        return "\n".join(f"{'PASS' if c['ok'] else 'FAIL'}  {c['name']}" for c in rep["checks"])
    if cmd == "subgroups":
        return "\n".join(f"order {H['order']:<4} generated by {H['generators']}" for H in rep["subgroups"])
    if cmd == "build":
        return "\n".join([f"{rep['group']}  dim={rep['dimension']}  S-subgroups {rep['s_subgroup_orders']}"]
                         + [f"  {c}" for c in rep["classes"]])
    return json.dumps(rep, indent=2, ensure_ascii=False)


COMMANDS = {
    "subgroups": cmd_subgroups,
    "build": cmd_build,
    "idempotents": cmd_idempotents,
    "decompose": cmd_decompose,
    "wedderburn": cmd_wedderburn,
    "tidy": cmd_tidy,
    "cayley": cmd_cayley,
    "selfcheck": cmd_selfcheck,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="schurkit", description="Schur rings over finite abelian groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in (*COMMANDS, "enumerate"):
        sp = sub.add_parser(name)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if name == "selfcheck":
            continue
        sp.add_argument("--group", required=name in ("subgroups", "enumerate"),
                        help="e.g. Z12 or Z2xZ6")
        if name in ("subgroups", "enumerate"):
            if name == "enumerate":
                sp.add_argument("--count-only", action="store_true")
                sp.add_argument("--bound", type=int, default=DEFAULT_ENUM_BOUND)
                sp.add_argument("--workers", type=int, default=1)
            continue
        sp.add_argument("--ring", default="algebra",
                        help="algebra, trivial, @file.json or inline JSON")
        sp.add_argument("--cap", type=int, default=20, help="atom cap for subset searches")
        if name == "cayley":
            sp.add_argument("--codomain", required=True)
            sp.add_argument("--images", required=True, help="JSON list of generator images")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command == "enumerate":
            return cmd_enumerate(args, out)
        rep = COMMANDS[args.command](args)
    except UsageError as exc:
        out.write(json.dumps({"error": exc.to_dict()}) + "\n")
        return 2
    except SchurKitError as exc:
        out.write(json.dumps({"error": exc.to_dict()}) + "\n")
        return 1
    if args.format == "json":
        out.write(json.dumps(rep, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(_text(args.command, rep) + "\n")
    if args.command == "selfcheck" and not rep["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
