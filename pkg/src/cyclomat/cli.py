"""Command-line interface: ``cyclomat <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Graph arguments are JSON document paths, or ``@NAME`` for a catalog graph
(``@S8dag``, ``@C2k:4``).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import catalog, enumeration, io
from .graph import RGraph, canonical, cut_vertices
from .ring import RingId
from .spectral import char_poly, in_s, in_sprime, is_integral, vertex_degree

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("cyclomat")


class UsageError(Exception):
    pass


def _ring(tag: str) -> RingId:
    try:
        return RingId.parse(tag)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown ring {tag!r}") from None


def _load(arg: str) -> RGraph:
    if arg.startswith("@"):
        name, _, param = arg[1:].partition(":")
        try:
            return catalog.build_family(name, int(param) if param else None)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        return io.load_graph(arg)
    except io.DocumentError as exc:
        raise UsageError(f"{arg}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc.strerror}") from None


# ---------------------------------------------------------------------------
# commands


def cmd_enumerate(args) -> int:
    levels = enumeration.enumerate_sprime(args.ring, args.max_n, proper=args.proper, progress=log.info)
    doc = io.levels_to_json(levels, args.set)
    _emit(json.dumps(doc, ensure_ascii=False), args.out)
    for L in doc["levels"]:
        log.info("level %d: %d members", L["n"], L["count"])
    return EXIT_OK


def cmd_table1(args) -> int:
    rows = enumeration.table1(args.max_n)
    if args.json:
        data = [{"n": r.n, "total": r.total, **{k.tag: r.by_ring.get(k, 0) for k in enumeration.TABLE_RINGS}}
                for r in rows]
        print(json.dumps(data))
        return EXIT_OK
    print("n  | total | φ | √2 | √3")
    for r in rows:
        print(f"{r.n:<2d} | " + " | ".join(str(c) for c in r.cells()))
    return EXIT_OK


def cmd_verify_catalog(args) -> int:
    rep = catalog.verify_catalog(k_max=args.k_max, fig9_max=args.fig9_max)
    for line in rep.lines():
        print(line)
    print("catalog verification: " + ("PASS" if rep.ok else "FAIL"))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_check(args) -> int:
    G = _load(args.graph)
    p = char_poly(G.matrix)
    sp, s = in_sprime(G.matrix), in_s(G.matrix)
    yn = {True: "yes", False: "no"}
    print(f"graph: {G.name or args.graph} (n={G.n}, ring={G.ring.tag})")
    print(f"in S′: {yn[sp]}; in S: {yn[s]}")
    print(f"char poly: {p}")
    print(f"integral char poly: {yn[is_integral(p)]}")
    print("degrees: " + ", ".join(str(vertex_degree(G.matrix, v)) for v in range(G.n)))
    print(f"connected: {yn[G.is_connected()]}; cut vertices: {sorted(cut_vertices(G))}")
    match = catalog.match_family(G)
    if match is not None:
        print(f"catalog match: {match}")
    return EXIT_OK


def cmd_canon(args) -> int:
    G = _load(args.graph)
    key = canonical(G)
    doc = io.serialize(key.graph(G.ring), name=G.name)
    if args.out:
        _emit(doc.dumps(indent=1), args.out)
    print(f"key: {key.hex()}")
    if not args.out:
        print(doc.dumps())
    return EXIT_OK


def cmd_maximal(args) -> int:
    levels = enumeration.enumerate_sprime(args.ring, args.max_n, progress=log.info)
    rep = enumeration.maximality_report(levels, depth=args.depth, templates=catalog.maximal_template_name)
    names = catalog.template_keys(args.max_n)
    if args.json:
        _emit(json.dumps(io.report_to_json(rep, names), ensure_ascii=False), args.out)
    else:
        counts: dict = {}
        for st in rep.status.values():
            counts[st] = counts.get(st, 0) + 1
        print(f"ring {args.ring.tag}, n <= {args.max_n}: " + ", ".join(f"{v} {k}" for k, v in sorted(counts.items())))
        for key in rep.maximal():
            G = rep.graphs[key]
            label = str(names[key]) if key in names else "(unnamed)"
            print(f"  maximal n={G.n:<3d} {label:12s} {key.hex()[:24]}")
        for key in rep.undecided():
            print(f"  undecided n={rep.level_of[key]} {key.hex()[:24]}")
    return EXIT_FAIL if rep.undecided() else EXIT_OK


def cmd_export(args) -> int:
    G = _load(args.graph)
    if args.format == "dot":
        text = io.to_dot(G)
    else:
        text = io.serialize(G).dumps(indent=1)
    _emit(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclomat", description="Cyclotomic matrices over real quadratic rings.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="progress logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate S′ (or S) level by level")
    p.add_argument("--ring", type=_ring, required=True, help="z, zsqrt2, zsqrt3, zphi or compositum")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--set", choices=("sprime", "s"), default="sprime")
    p.add_argument("--out", help="output file (default stdout)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--proper", dest="proper", action="store_true", default=None,
                   help="keep only graphs with an irrational entry beyond level 1")
    g.add_argument("--all", dest="proper", action="store_false", help="keep integer graphs too")
    p.set_defaults(func=cmd_enumerate, proper=None)

    p = sub.add_parser("table1", parents=[common], help="counts of S′ outside S by size and ring")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("verify-catalog", parents=[common], help="check every catalog graph")
    p.add_argument("--k-max", type=int, default=6)
    p.add_argument("--fig9-max", type=int, default=8)
    p.set_defaults(func=cmd_verify_catalog)

    p = sub.add_parser("check", parents=[common], help="membership report for one graph")
    p.add_argument("graph", help="JSON graph document or @NAME")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("canon", parents=[common], help="canonical key and representative")
    p.add_argument("graph")
    p.add_argument("--out")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("maximal", parents=[common], help="maximality report for an enumeration")
    p.add_argument("--ring", type=_ring, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_maximal)

    p = sub.add_parser("export", parents=[common], help="render a graph")
    p.add_argument("graph")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    if getattr(args, "max_n", 1) < 1:
        print("cyclomat: error: --max-n must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cyclomat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
