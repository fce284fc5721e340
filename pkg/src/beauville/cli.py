"""Command-line front end.

One subcommand per operation: verify, search, triple, classify, estimate,
stats, classes, frobenius, chartable, zeta, hurwitz, triangle.  Every run
echoes its fully resolved configuration; all randomness flows from --seed
(a fixed published default, never entropy), so identical invocations give
identical output.  --no-timing strips elapsed fields for byte-identical
reruns.

Exit codes: 0 success with a positive verdict; 1 verified-false, not
found, nonexistence or not-Hurwitz; 2 usage or malformed input; 3 cap
violations.

Quadruples and pairs are ';'-separated element encodings (matrix, cycle
or pair syntax per the group).  Character tables persist under
$BEAUVILLE_CACHE_DIR (default ~/.cache/beauville); --out appends one JSON
record per run (JSONL).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .counting import (CharacterTable, ClassPartition, character_table,
                       frobenius_count_brute, frobenius_count_character,
                       witten_zeta)
from .fields import FieldError
from .groups import CapExceeded, Group, GroupError, parse_group
from .probability import estimate_beauville_probability, estimate_component_stats
from .structures import (DEFAULT_SEED, SearchInconclusive, Unrealizable,
                         classify_triangle, find_generating_triple,
                         is_hurwitz_psl2, search_structure, verify_quadruple)

DEFAULT_ENUM_CAP = 1_000_000
DEFAULT_PAIR_CAP = 2_000_000
DEFAULT_TABLE_CAP = 10_000


def cache_dir() -> str:
    return os.environ.get(
        "BEAUVILLE_CACHE_DIR",
        os.path.join(os.path.expanduser("~"), ".cache", "beauville"))


def _table_path(descriptor: str) -> str:
    return os.path.join(cache_dir(), descriptor.replace(":", "_").replace("^", "e") + ".json")


def _load_or_compute_table(G: Group, cap: int, save: bool = True) -> CharacterTable:
    path = _table_path(G.descriptor())
    if os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            table = CharacterTable.from_json(fh.read())
        table.validate()
        return table
    table = character_table(G, cap=cap)
    if save:
        os.makedirs(cache_dir(), exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(table.to_json())
    return table


def _split_elements(G: Group, text: str, expected: int):
    parts = [p for p in text.split(";") if p.strip()]
    if len(parts) != expected:
        raise GroupError(
            f"expected {expected} ';'-separated elements, got {len(parts)}")
    return [G.parse_element(p) for p in parts]


def _parse_type(text: str) -> tuple[int, int, int]:
    try:
        r, s, t = (int(v) for v in text.replace("(", "").replace(")", "").split(","))
    except ValueError as exc:
        raise GroupError(f"malformed type {text!r}; expected r,s,t") from exc
    return (r, s, t)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="beauville",
        description="Unmixed Beauville structures in PSL2(q), alternating "
                    "and Zn x Zn groups: verify, search, count, estimate.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "tsv"), default="text")
    common.add_argument("--out", help="append the JSON record to this JSONL file")
    common.add_argument("--no-timing", action="store_true",
                        help="omit elapsed-time fields (byte-identical reruns)")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common],
                       help="check the three conditions for a quadruple")
    p.add_argument("--group", required=True)
    p.add_argument("--quad", required=True, help="x1;y1;x2;y2")
    p.add_argument("--no-fastpath", action="store_true",
                   help="always compute Sigma sets, skip the coprime shortcut")

    p = sub.add_parser("search", parents=[common],
                       help="find a structure or certify nonexistence")
    p.add_argument("--group", required=True)
    p.add_argument("--strategy", default="auto",
                   choices=("auto", "exhaustive", "macbeath", "random"))
    p.add_argument("--type1", help="target type r,s,t for the first triple")
    p.add_argument("--type2", help="target type r,s,t for the second triple")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--attempts", type=int, default=200_000)
    p.add_argument("--cap-pairs", type=int, default=DEFAULT_PAIR_CAP)

    p = sub.add_parser("triple", parents=[common],
                       help="find a generating triple of exact orders, or "
                            "solve a psl2 trace triple directly")
    p.add_argument("--group", required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--traces",
                   help="psl2 only: comma-separated traces a,b,g; returns "
                        "matrices with those traces and product one")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--attempts", type=int, default=20_000)

    p = sub.add_parser("classify", parents=[common],
                       help="Dickson class of the subgroup generated by a pair")
    p.add_argument("--group", required=True)
    p.add_argument("--pair", required=True, help="x;y")

    p = sub.add_parser("estimate", parents=[common],
                       help="Monte Carlo estimate of the Beauville probability")
    p.add_argument("--group", required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-components", action="store_true")

    p = sub.add_parser("stats", parents=[common],
                       help="split/non-split/generation component fractions")
    p.add_argument("--group", required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("classes", parents=[common],
                       help="list the conjugacy classes")
    p.add_argument("--group", required=True)
    p.add_argument("--cap-enumeration", type=int, default=DEFAULT_ENUM_CAP)

    p = sub.add_parser("frobenius", parents=[common],
                       help="count solutions of x*y*z = 1 in three classes")
    p.add_argument("--group", required=True)
    p.add_argument("--i", type=int, required=True, help="index of class X")
    p.add_argument("--j", type=int, required=True, help="index of class Y")
    p.add_argument("--k", type=int, required=True, help="index of class Z")
    p.add_argument("--method", choices=("brute", "character"), default="brute")
    p.add_argument("--cap-enumeration", type=int, default=DEFAULT_ENUM_CAP)
    p.add_argument("--cap-table", type=int, default=DEFAULT_TABLE_CAP)

    p = sub.add_parser("chartable", parents=[common],
                       help="compute (and optionally persist) a character table")
    p.add_argument("--group", required=True)
    p.add_argument("--save", action="store_true",
                   help="persist under $BEAUVILLE_CACHE_DIR")
    p.add_argument("--cap-table", type=int, default=DEFAULT_TABLE_CAP)

    p = sub.add_parser("zeta", parents=[common],
                       help="Witten zeta: sum of degree**(-s) over Irr(G)")
    p.add_argument("--group", required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--cap-table", type=int, default=DEFAULT_TABLE_CAP)

    p = sub.add_parser("hurwitz", parents=[common],
                       help="is PSL2(p^e) a (2,3,7) triangle-group quotient?")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--e", type=int, required=True)

    p = sub.add_parser("triangle", parents=[common],
                       help="spherical/euclidean/hyperbolic type classification")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    return top


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def _cmd_verify(args):
    G = parse_group(args.group)
    quad = _split_elements(G, args.quad, 4)
    report = verify_quadruple(G, *quad, use_fastpath=not args.no_fastpath)
    return report.to_dict(G), 0 if report.ok else 1


def _cmd_search(args):
    G = parse_group(args.group)
    targets = None
    if args.type1 or args.type2:
        if not (args.type1 and args.type2):
            raise GroupError("--type1 and --type2 must be given together")
        targets = (_parse_type(args.type1), _parse_type(args.type2))
    try:
        out = search_structure(G, strategy=args.strategy, target_types=targets,
                               seed=args.seed, max_attempts=args.attempts,
                               pair_cap=args.cap_pairs)
    except SearchInconclusive as exc:
        return {"found": False, "inconclusive": True, "detail": str(exc)}, 1
    return out.to_dict(G), 0 if out.found else 1


def _cmd_triple(args):
    G = parse_group(args.group)
    if args.traces is not None:
        return _solve_traces(G, args.traces)
    if None in (args.r, args.s, args.t):
        raise GroupError("give --r/--s/--t, or --traces for a psl2 group")
    try:
        tri = find_generating_triple(G, args.r, args.s, args.t,
                                     seed=args.seed, max_attempts=args.attempts)
    except Unrealizable as exc:
        return {"found": False, "unrealizable": True, "detail": str(exc)}, 1
    except SearchInconclusive as exc:
        return {"found": False, "inconclusive": True, "detail": str(exc)}, 1
    return {"found": True,
            "x": G.format_element(tri.x), "y": G.format_element(tri.y),
            "z": G.format_element(tri.z), "orders": list(tri.orders)}, 0


def _solve_traces(G, text):
    if G.kind != "psl2":
        raise GroupError("--traces applies to psl2 groups")
    parts = text.split(",")
    if len(parts) != 3:
        raise GroupError(f"expected three comma-separated traces, got {text!r}")
    a, b, g = (G.field.parse(p) for p in parts)
    A, B, C = G.solve_trace_triple(a, b, g)
    x, y = G._canon(A), G._canon(B)
    cls = G.classify_pair(x, y)
    fmt = G.format_element
    return {"found": True, "singular": G.is_singular_triple(a, b, g),
            "traces": [G.field.format(v) for v in (a, b, g)],
            "A": fmt(A), "B": fmt(B), "C": fmt(C),
            "orders": [G.order_of(G._canon(m)) for m in (A, B, C)],
            "pair_class": str(cls)}, 0


def _cmd_classify(args):
    G = parse_group(args.group)
    if G.kind != "psl2":
        raise GroupError("classify applies to psl2 groups")
    x, y = _split_elements(G, args.pair, 2)
    cls = G.classify_pair(x, y)
    return {"class": cls.kind,
            "subfield_degree": cls.subfield_degree,
            "subfield_kind": cls.subfield_kind,
            "generates": cls.kind == "full"}, 0


def _cmd_estimate(args):
    G = parse_group(args.group)
    res = estimate_beauville_probability(
        G, args.samples, seed=args.seed, workers=args.workers,
        component_stats=not args.no_components)
    return res.to_dict(), 0


def _cmd_stats(args):
    G = parse_group(args.group)
    comps = estimate_component_stats(G, args.samples, seed=args.seed,
                                     workers=args.workers)
    meta = comps.pop("_meta")
    return {"group": meta["group"], "samples": meta["samples"],
            "seed": meta["seed"], "components": comps,
            "elapsed": meta["elapsed"]}, 0


def _cmd_classes(args):
    G = parse_group(args.group)
    partition = ClassPartition(G, cap=args.cap_enumeration)
    return {"group": G.descriptor(), "count": len(partition),
            "classes": [
                {"index": c.index, "fingerprint": c.label(), "size": c.size,
                 "order": c.element_order,
                 "representative": G.format_element(c.representative)}
                for c in partition.classes]}, 0


def _cmd_frobenius(args):
    G = parse_group(args.group)
    partition = ClassPartition(G, cap=args.cap_enumeration)
    k = len(partition)
    for idx in (args.i, args.j, args.k):
        if not 0 <= idx < k:
            raise GroupError(f"class index {idx} out of range 0..{k - 1}")
    if args.method == "brute":
        count = frobenius_count_brute(partition, args.i, args.j, args.k)
    else:
        table = _load_or_compute_table(G, args.cap_table)
        count = frobenius_count_character(table, args.i, args.j, args.k)
    return {"group": G.descriptor(), "method": args.method, "count": count,
            "classes": [partition.classes[i].label()
                        for i in (args.i, args.j, args.k)]}, 0


def _cmd_chartable(args):
    G = parse_group(args.group)
    if args.save:
        table = _load_or_compute_table(G, args.cap_table, save=True)
        saved = _table_path(G.descriptor())
    else:
        table = character_table(G, cap=args.cap_table)
        saved = None
    return {"group": G.descriptor(), "degrees": table.degrees,
            "classes": len(table.class_labels),
            "tolerance": table.tolerance,
            "saved": saved}, 0


def _cmd_zeta(args):
    G = parse_group(args.group)
    table = _load_or_compute_table(G, args.cap_table, save=False)
    value = witten_zeta(table.degrees, args.s)
    return {"group": G.descriptor(), "s": args.s, "zeta": value,
            "degrees": table.degrees}, 0


def _cmd_hurwitz(args):
    ok = is_hurwitz_psl2(args.p, args.e)
    return {"p": args.p, "e": args.e, "hurwitz": ok}, 0 if ok else 1


def _cmd_triangle(args):
    tri = classify_triangle(args.r, args.s, args.t)
    return tri.to_dict(), 0


_DISPATCH = {
    "verify": _cmd_verify, "search": _cmd_search, "triple": _cmd_triple,
    "classify": _cmd_classify, "estimate": _cmd_estimate, "stats": _cmd_stats,
    "classes": _cmd_classes, "frobenius": _cmd_frobenius,
    "chartable": _cmd_chartable, "zeta": _cmd_zeta, "hurwitz": _cmd_hurwitz,
    "triangle": _cmd_triangle,
}


def _strip_timing(obj):
    if isinstance(obj, dict):
        return {k: _strip_timing(v) for k, v in obj.items()
                if k not in ("elapsed", "elapsed_s")}
    if isinstance(obj, list):
        return [_strip_timing(v) for v in obj]
    return obj


def _config_echo(args) -> dict:
    skip = {"command", "format", "out", "no_timing"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _render_text(envelope: dict) -> str:
    lines = [f"command: {envelope['command']}"]
    for key, val in envelope["config"].items():
        lines.append(f"  {key} = {val}")
    lines.append("result:")
    lines.extend(_render_kv(envelope["result"], indent=2))
    if "timing" in envelope:
        lines.append(f"elapsed: {envelope['timing']['elapsed_s']:.3f}s")
    return "\n".join(lines)


def _render_kv(obj, indent=0):
    pad = " " * indent
    out = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                out.append(f"{pad}{k}:")
                out.extend(_render_kv(v, indent + 2))
            else:
                out.append(f"{pad}{k} = {v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                out.extend(_render_kv(v, indent))
            else:
                out.append(f"{pad}- {v}")
    return out


def _is_flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


def _render_tsv(envelope: dict) -> str:
    res = envelope["result"]
    cmd = envelope["command"]
    if cmd == "estimate":
        fields = [res["group"], res["samples"], res["seed"], res["successes"],
                  f"{res['estimate']:.6f}",
                  f"{res['wilson95'][0]:.6f}", f"{res['wilson95'][1]:.6f}"]
        return "\t".join(str(f) for f in fields)
    if cmd == "stats":
        parts = [res["group"], str(res["samples"])]
        for key, comp in res["components"].items():
            parts.append(f"{key}={comp['fraction']:.6f}")
        return "\t".join(parts)
    if cmd == "zeta":
        return "\t".join([res["group"], str(res["s"]), f"{res['zeta']:.10f}"])
    # generic: flatten scalar result fields
    return "\t".join(f"{k}={v}" for k, v in res.items()
                     if not isinstance(v, (dict, list)))


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        result, code = _DISPATCH[args.command](args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GroupError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    envelope = {
        "command": args.command,
        "config": _config_echo(args),
        "result": result,
    }
    if args.no_timing:
        envelope = _strip_timing(envelope)
    else:
        envelope["timing"] = {"elapsed_s": time.perf_counter() - t0}
    if args.format == "json":
        text = json.dumps(envelope, indent=1, sort_keys=True)
    elif args.format == "tsv":
        text = _render_tsv(envelope)
    else:
        text = _render_text(envelope)
    print(text)
    if args.out:
        record = _strip_timing(envelope) if args.no_timing else envelope
        with open(args.out, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
