"""Command-line entry point: ``pyramidex <subcommand> ...``.

Exit codes: 0 success / free / certified, 1 found / refuted, 2 inconclusive
or budget exhausted, 64 usage or capability error, 65 unparseable input.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import checks
from .constructions import (CERTIFIED, REFUTED, ConstructionManifest, certify_manifest,
                            lower_bound_graph, parse_strategy)
from .errors import (BudgetExceeded, CapabilityError, ConstructionInvalid, EdgeListError,
                     Graph6Error, GraphError)
from .formats import encode_graph6, format_edge_list, load_graph, save_graph
from .generators import (complete_bipartite, complete_graph, cycle_graph, graph_f,
                         greedy_high_girth, high_girth_bipartite, path_graph,
                         triangular_pyramid, turan_graph)
from .graph import Graph
from .prooflab import structure_report, turan_peel
from .subiso import DEFAULT_BUDGET, Freeness, is_free
from .turan import EXACT, exact_ex

EXIT_OK, EXIT_FOUND, EXIT_INCONCLUSIVE = 0, 1, 2
EXIT_USAGE, EXIT_DATA = 64, 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_budget() -> int:
    return int(os.environ.get("PYRAMIDEX_BUDGET", DEFAULT_BUDGET))


def parse_pattern(text: str) -> Graph:
    """``tpK``, ``f``, ``cK``, ``pK``, ``kK``, or a path to a graph file."""
    t = text.strip().lower().replace(" ", "").replace(":", "")
    if t == "f":
        return graph_f()
    m = re.fullmatch(r"(tp|c|p|k)(\d+)", t)
    if m:
        kind, k = m.group(1), int(m.group(2))
        if kind == "tp":
            return triangular_pyramid(k).graph
        return {"c": cycle_graph, "p": path_graph, "k": complete_graph}[kind](k)
    if Path(text).exists():
        return load_graph(text)
    raise UsageError(f"unknown pattern {text!r}; use tpK, f, cK, pK, kK or a graph file")


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _dump_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def cmd_gen(args) -> int:
    fam = args.family
    layout = None
    if fam == "tp":
        layout = triangular_pyramid(args.k)
        g = layout.graph
    elif fam == "f":
        g = graph_f()
    elif fam == "turan":
        g = turan_graph(args.n, args.k)
    elif fam == "kab":
        g = complete_bipartite(args.a, args.b)[0]
    elif fam == "cycle":
        g = cycle_graph(args.n)
    elif fam == "path":
        g = path_graph(args.n)
    elif fam == "complete":
        g = complete_graph(args.n)
    elif fam == "highgirth":
        g = high_girth_bipartite(args.q)[0]
    else:
        g = greedy_high_girth(args.n, args.gmin, args.seed)
    fmt = args.format or ("edgelist" if args.out and not args.out.endswith((".g6", ".graph6"))
                          else "graph6")
    _write(args.out, encode_graph6(g) + "\n" if fmt == "graph6" else format_edge_list(g))
    if layout is not None and args.layout:
        Path(args.layout).write_text(_dump_json(layout.to_json()))
    return EXIT_OK


def cmd_free_check(args) -> int:
    pattern = parse_pattern(args.pattern)
    host = load_graph(args.host)
    res = is_free(host, pattern, args.budget)
    if res.verdict is Freeness.YES:
        print(_dump_json({"verdict": "free", "nodes": res.nodes}), end="")
        return EXIT_OK
    if res.verdict is Freeness.NO:
        print(_dump_json({"verdict": "contains", "witness": {str(k): v for k, v in
                                                             res.witness.as_dict().items()}}),
              end="")
        return EXIT_FOUND
    print(_dump_json({"verdict": "inconclusive", "nodes": res.nodes}), end="")
    return EXIT_INCONCLUSIVE


def cmd_ex_exact(args) -> int:
    pattern = parse_pattern(args.pattern)
    rec = exact_ex(args.n, pattern, args.budget, max_n=args.max_n)
    _write(args.out, rec.dumps())
    return EXIT_OK if rec.status == EXACT else EXIT_INCONCLUSIVE


def cmd_analyze(args) -> int:
    g = load_graph(args.input)
    report = structure_report(g, args.epsilon, seed=args.seed, budget=args.budget)
    _write(args.out, _dump_json(report.to_json()))
    if args.trace:
        Path(args.trace).write_text(turan_peel(g).to_csv())
    return EXIT_OK


def _cert_exit(verdict: str) -> int:
    return {CERTIFIED: EXIT_OK, REFUTED: EXIT_FOUND}.get(verdict, EXIT_INCONCLUSIVE)


def cmd_construct(args) -> int:
    try:
        strategy = parse_strategy(args.strategy)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        g, manifest = lower_bound_graph(args.n, strategy, args.budget)
    except ConstructionInvalid as exc:
        print(f"construction refuted: {exc}", file=sys.stderr)
        return EXIT_FOUND
    if args.out:
        save_graph(g, args.out)
    _write(args.manifest, manifest.dumps())
    return _cert_exit(manifest.certificate.verdict)


def cmd_certify(args) -> int:
    try:
        data = json.loads(Path(args.manifest).read_text())
        manifest = ConstructionManifest.from_json(data)
    except (json.JSONDecodeError, KeyError) as exc:
        raise ValueError(f"bad manifest: {exc}") from None
    cert = certify_manifest(manifest, args.budget)
    _write(args.out, _dump_json(cert.to_json()))
    return _cert_exit(cert.verdict)


def cmd_verify(args) -> int:
    results = checks.run_all(mantel_max=args.mantel_max)
    width = max(len(r.name) for r in results)
    for r in results:
        print(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  {r.detail}")
    if args.out:
        Path(args.out).write_text(_dump_json([r.__dict__ for r in results]))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FOUND


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pyramidex", description="Turán-number experiments for triangular pyramids")
    p.add_argument("--threads", type=int, default=1,
                   help="worker cap (searches currently run single-threaded)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    budget = _default_budget()

    g = sub.add_parser("gen", help="emit a named graph")
    g.add_argument("--family", required=True,
                   choices=["tp", "f", "turan", "kab", "cycle", "path", "complete",
                            "highgirth", "greedy"])
    g.add_argument("--k", type=int, default=4)
    g.add_argument("--n", type=int, default=10)
    g.add_argument("--a", type=int, default=1)
    g.add_argument("--b", type=int, default=1)
    g.add_argument("--q", type=int, default=3)
    g.add_argument("--gmin", type=int, default=8)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--format", choices=["graph6", "edgelist"])
    g.add_argument("--out")
    g.add_argument("--layout", help="JSON sidecar with vertex -> [layer, pos] (tp only)")
    g.set_defaults(func=cmd_gen)

    f = sub.add_parser("free-check", help="decide whether a host avoids a pattern")
    f.add_argument("--pattern", required=True)
    f.add_argument("--host", required=True)
    f.add_argument("--budget", type=int, default=budget)
    f.set_defaults(func=cmd_free_check)

    e = sub.add_parser("ex-exact", help="exact ex(n, H) for small n")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--pattern", required=True)
    e.add_argument("--budget", type=int, default=10 ** 9)
    e.add_argument("--max-n", type=int, default=10)
    e.add_argument("--out")
    e.set_defaults(func=cmd_ex_exact)

    a = sub.add_parser("analyze", help="R/W structure report and peel trace")
    a.add_argument("--in", dest="input", required=True)
    a.add_argument("--epsilon", type=float, default=1e-3)
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--budget", type=int, default=budget)
    a.add_argument("--out")
    a.add_argument("--trace", help="CSV path for the peel trace")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("construct", help="build a certified lower-bound graph")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--strategy", required=True, help="algebraic:Q or greedy:GMIN:SEED")
    c.add_argument("--budget", type=int, default=budget)
    c.add_argument("--out")
    c.add_argument("--manifest")
    c.set_defaults(func=cmd_construct)

    ce = sub.add_parser("certify", help="re-derive a manifest's certificate")
    ce.add_argument("--manifest", required=True)
    ce.add_argument("--budget", type=int, default=budget)
    ce.add_argument("--out")
    ce.set_defaults(func=cmd_certify)

    v = sub.add_parser("verify-paper", help="run the built-in self-check table")
    v.add_argument("--mantel-max", type=int, default=10)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CapabilityError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Graph6Error, EdgeListError, GraphError, OSError) as exc:
        print(f"error: unparseable input: {exc}", file=sys.stderr)
        return EXIT_DATA
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
