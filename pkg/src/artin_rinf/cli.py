"""Command-line front end: ``artin-rinf <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Optional, Sequence

from .classify import classify
from .corpus import dihedral
from .coxeter import (
    NotSphericalError,
    SizeBoundError,
    enumerate_group,
    induced_automorphism,
    reidemeister_number,
    reidemeister_via_coset,
)
from .deligne import build_link_ball, count_syllables, girth_report
from .garside import check_dn_identities, garside
from .graph import INF, GraphError, graph_automorphisms, parse_cycles, parse_graph
from .hierarchy import find_twistless_hierarchy, validate_hierarchy
from .verdict import STATUSES, budget_exhausted, default_budget, verdict
from .words import WordError, parse_word

EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2
GRAPH_SUFFIXES = {".graph", ".cox", ".pres", ".dsl", ".txt"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _load(path: str):
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def _budget(args) -> int:
    return args.budget if args.budget is not None else default_budget()


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, list):
        return ",".join(v) if v else "[]"
    return str(v)


# -- subcommands ----------------------------------------------------------------


def cmd_classify(args) -> int:
    rep = classify(_load(args.file))
    data = rep.to_json()
    _emit(args, data, "\n".join(f"{k}: {_fmt(v)}" for k, v in data.items()))
    return EXIT_OK


def cmd_verdict(args) -> int:
    g = _load(args.file)
    v = verdict(g, _budget(args))
    lines = [f"status: {v.status}", f"rule: {v.rule_id or '-'}", f"citation: {v.citation or '-'}"]
    lines += [f"  {k} = {_fmt(val)}" for k, val in v.hypothesis_trace]
    lines += [f"note: {n}" for n in v.notes]
    if v.witness is not None:
        lines.append(f"witness depth {v.witness.depth()}, leaves " + "; ".join(" ".join(x.graph) for x in v.witness.leaves()))
    _emit(args, v.to_json(), "\n".join(lines))
    return EXIT_BUDGET if budget_exhausted(v) else EXIT_OK


def _tree_lines(tree, indent=0) -> list[str]:
    pad = "  " * indent
    if tree.leaf:
        return [f"{pad}star {' '.join(tree.graph)}"]
    d = tree.decomposition
    out = [f"{pad}split {' '.join(tree.graph)} over {' '.join(d.intersection)}"]
    for c in tree.children:
        out += _tree_lines(c, indent + 1)
    return out


def cmd_hierarchy(args) -> int:
    g = _load(args.file)
    res = find_twistless_hierarchy(g, _budget(args), connected_parts=args.connected_parts)
    payload: dict[str, Any] = {"status": res.status, "explored": res.explored,
                               "tree": None if res.tree is None else res.tree.to_json()}
    if res.tree is not None:
        payload["valid"] = not validate_hierarchy(g, res.tree)
        text = "\n".join([f"status: found ({res.explored} subgraphs)"] + _tree_lines(res.tree))
    else:
        text = f"status: {res.status} ({res.explored} subgraphs)"
    _emit(args, payload, text)
    return EXIT_BUDGET if res.exhausted else EXIT_OK


def cmd_reidemeister(args) -> int:
    g = _load(args.file)
    table = enumerate_group(g)
    if args.aut is not None:
        sigmas = [parse_cycles(g, args.aut)]
    elif args.all_graph_auts:
        sigmas = graph_automorphisms(g)
    else:
        sigmas = [parse_cycles(g, "()")]
    rows = []
    for sigma in sigmas:
        phi = induced_automorphism(table, sigma)
        r1 = reidemeister_number(table, phi)
        try:
            r2 = reidemeister_via_coset(table, phi)
        except MemoryError:
            r2 = None
        rows.append({"automorphism": str(sigma), "order": phi.order(), "reidemeister": r1,
                     "via_coset": r2, "agree": None if r2 is None else r1 == r2})
    text = [f"|W| = {table.size}"]
    for r in rows:
        check = "coset check skipped" if r["agree"] is None else (
            f"coset count {r['via_coset']}, {'agree' if r['agree'] else 'DISAGREE'}")
        text.append(f"{r['automorphism']}: R = {r['reidemeister']} ({check})")
    _emit(args, {"group_order": table.size, "results": rows}, "\n".join(text))
    return EXIT_OK


def cmd_garside(args) -> int:
    if args.garside_cmd == "nf":
        g = _load(args.file)
        G = garside(g)
        nf = G.normal_form(parse_word(args.word))
        data = G.to_json(nf)
        factors = " . ".join("(" + " ".join(f) + ")" for f in data["factors"])
        _emit(args, data, f"Delta^{nf.delta}" + (f" . {factors}" if factors else ""))
        return EXIT_OK
    if args.n < 4:
        raise ValueError("check-d needs n >= 4")
    results = check_dn_identities(args.n, samples=args.samples)
    ok = all(p for _, p in results)
    _emit(args, {"n": args.n, "passed": ok, "checks": [{"check": d, "passed": p} for d, p in results]},
          "\n".join(f"{'PASS' if p else 'FAIL'}  {d}" for d, p in results))
    return EXIT_OK if ok else EXIT_INPUT


def cmd_link_girth(args) -> int:
    ball = build_link_ball(args.m, args.cap)
    rep = girth_report(ball)
    G = garside(dihedral(args.m))
    sylls = count_syllables(G, ball, rep.witness) if rep.witness else []
    bound = "inf" if rep.bound is INF else rep.bound
    payload = {"m": args.m, "cap": args.cap, "girth": bound, "exact": rep.exact,
               "vertices": len(ball.vertices), "edges": len(ball.edges),
               "witness": [{"tag": ball.vertices[v].tag, "nf": G.to_json(ball.vertices[v].payload)} for v in rep.witness or []],
               "syllables": [[s, e] for s, e in sylls], "warnings": ball.warnings}
    if args.export:
        Path(args.export).with_suffix(".edges").write_text(ball.edge_list_text())
        Path(args.export).with_suffix(".json").write_text(json.dumps(ball.to_json(G), indent=1))
    word = " ".join(f"{s}^{e}" for s, e in sylls)
    text = f"girth = {bound} ({'exact' if rep.exact else 'not exact'})"
    if sylls:
        text += f"\nwitness loop syllables: {word}"
    for w in ball.warnings:
        text += f"\nwarning: {w}"
    _emit(args, payload, text)
    return EXIT_OK


def _batch_record(path: str, budget: int) -> dict:
    start = time.perf_counter()
    name = Path(path).name
    try:
        g = _load(path)
        rec = {"name": name, "classification": classify(g).to_json(), "verdict": verdict(g, budget).to_json()}
    except (GraphError, OSError) as exc:
        rec = {"name": name, "error": str(exc)}
    rec["elapsed_ms"] = round(1000 * (time.perf_counter() - start), 3)
    return rec


def cmd_batch(args) -> int:
    root = Path(args.dir)
    if not root.is_dir():
        raise ValueError(f"not a directory: {root}")
    files = sorted((p for p in root.iterdir() if p.is_file() and p.suffix in GRAPH_SUFFIXES), key=lambda p: p.name)
    budget = _budget(args)
    paths = [str(p) for p in files]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_batch_record, paths, [budget] * len(paths)))
    else:
        records = [_batch_record(p, budget) for p in paths]
    records.sort(key=lambda r: r["name"])
    if not args.timing:
        for r in records:
            r.pop("elapsed_ms")
    summary = {s: 0 for s in STATUSES}
    summary["ERROR"] = 0
    for r in records:
        summary["ERROR" if "error" in r else r["verdict"]["status"]] += 1
    lines = []
    for r in records:
        if "error" in r:
            line = f"{r['name']}: ERROR {r['error']}"
        else:
            v = r["verdict"]
            line = f"{r['name']}: {v['status']} {v['rule_id'] or '-'} types={_fmt(r['classification']['spherical_type'])}"
        if args.timing:
            line += f" ({r['elapsed_ms']} ms)"
        lines.append(line)
    lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in summary.items()))
    _emit(args, {"records": records, "summary": summary}, "\n".join(lines))
    exhausted = any("error" not in r and ["twistless_hierarchy", "exhausted"] in r["verdict"]["hypothesis_trace"]
                    for r in records)
    return EXIT_BUDGET if exhausted else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    budget = _Parser(add_help=False)
    budget.add_argument("--budget", type=int, default=None, help="hierarchy search budget (subgraphs)")

    p = _Parser(prog="artin-rinf", description="Property R-infinity tooling for Artin groups.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("classify", parents=[fmt], help="graph predicates and spherical type")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("verdict", parents=[fmt, budget], help="which known result applies")
    s.add_argument("file")
    s.set_defaults(func=cmd_verdict)

    s = sub.add_parser("hierarchy", parents=[fmt, budget], help="search for a twistless hierarchy")
    s.add_argument("file")
    s.add_argument("--connected-parts", action="store_true", help="require connected parts")
    s.set_defaults(func=cmd_hierarchy)

    s = sub.add_parser("reidemeister", parents=[fmt], help="Reidemeister numbers in W[g]")
    s.add_argument("file")
    grp = s.add_mutually_exclusive_group()
    grp.add_argument("--aut", help='cycle notation, e.g. "(t5 t6)"')
    grp.add_argument("--all-graph-auts", action="store_true")
    s.set_defaults(func=cmd_reidemeister)

    s = sub.add_parser("garside", help="Garside normal forms")
    gsub = s.add_subparsers(dest="garside_cmd", required=True, parser_class=_Parser)
    nf = gsub.add_parser("nf", parents=[fmt])
    nf.add_argument("file")
    nf.add_argument("word", help='e.g. "t1 t2^-1 t3"')
    nf.set_defaults(func=cmd_garside)
    chk = gsub.add_parser("check-d", parents=[fmt])
    chk.add_argument("n", type=int)
    chk.add_argument("--samples", type=int, default=100)
    chk.set_defaults(func=cmd_garside)

    s = sub.add_parser("link-girth", parents=[fmt], help="girth of a dihedral Deligne-link ball")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--cap", type=int, default=2)
    s.add_argument("--export", help="write <path>.edges and <path>.json")
    s.set_defaults(func=cmd_link_girth)

    s = sub.add_parser("batch", parents=[fmt, budget], help="classify and judge every graph file in a directory")
    s.add_argument("dir")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--timing", action="store_true", help="include per-record timings")
    s.set_defaults(func=cmd_batch)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (GraphError, WordError, NotSphericalError, SizeBoundError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
