"""Command-line interface.

Every subcommand prints one canonical JSON document on stdout (sorted keys,
no extra whitespace) unless ``--pretty`` asks for a human-readable table.
Exit codes: 0 success, 1 a check failed, 2 usage or parse error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Callable, Sequence

from .bijections import phi_trace, psi_trace
from .errors import BudgetExceededError, ChromabijError
from .expansion import ExpansionStats
from .graph import Graph, Orientation
from .graphio import parse_document
from .poly import (
    IntPolynomial,
    acyclic_orientations,
    chi_count,
    chi_poly_all_subgraphs,
    chi_poly_count,
    chi_poly_delcon,
    chi_poly_nbc,
    compatible_pair_count,
)
from .symfunc import MonomialMap, PSymFunc, X_all_subgraphs, X_nbc, expand_monomials, omega
from .verify import (
    NAMED_GRAPHS,
    check_theorems,
    compare_X,
    enumerate_graphs,
    graph_id,
    tree_conjecture_sweep,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

CHI_METHODS: dict[str, Callable[[Graph], IntPolynomial]] = {
    "count": chi_poly_count,
    "subgraphs": chi_poly_all_subgraphs,
    "nbc": chi_poly_nbc,
    "delcon": chi_poly_delcon,
}


class UsageError(ChromabijError):
    pass


def load_graph(spec: str) -> Graph:
    """A named fixture, ``-`` for stdin, or a path to an edge list / graph6 file."""
    if spec in NAMED_GRAPHS:
        return NAMED_GRAPHS[spec]
    if spec == "-":
        return parse_document(sys.stdin.read()).graph
    path = Path(spec)
    if not path.is_file():
        raise UsageError(f"no such graph file or fixture: {spec!r} "
                         f"(fixtures: {', '.join(sorted(NAMED_GRAPHS))})")
    return parse_document(path.read_text(), name=path.name).graph


def orientation_string(o: Orientation) -> str:
    return "".join("+" if b else "-" for b in o.direction)


def parse_signs(text: str, m: int, what: str) -> tuple[bool, ...]:
    # accept the unicode minus too
    text = text.replace("−", "-")
    if len(text) != m or set(text) - {"+", "-"}:
        raise UsageError(f"{what} needs exactly {m} characters from '+-', got {text!r}")
    return tuple(c == "+" for c in text)


def parse_subset(text: str, m: int) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    out = set()
    for field in text.split(","):
        try:
            i = int(field)
        except ValueError:
            raise UsageError(f"bad edge index {field!r}") from None
        if not 1 <= i <= m:
            raise UsageError(f"edge index {i} outside 1..{m}")
        out.add(i - 1)
    return frozenset(out)


def poly_json(p: IntPolynomial) -> dict:
    return {"coeffs": list(p.coeffs) or [0]}


def psym_json(f: PSymFunc) -> dict:
    return {"terms": [{"partition": list(lam), "coeff": c} for lam, c in f.items()]}


def monomial_json(f: MonomialMap) -> dict:
    return {"mu": f.mu, "terms": [{"exponents": list(e), "coeff": c} for e, c in f.items()]}


def edges_1based(s) -> list[int]:
    return [i + 1 for i in sorted(s)]


# --- subcommands -----------------------------------------------------------

def cmd_chi(args) -> tuple[object, int]:
    g = load_graph(args.graph)
    if args.at is not None and args.method == "count" and args.at >= 1:
        return chi_count(g, args.at), EXIT_OK
    p = CHI_METHODS[args.method](g)
    if args.at is not None:
        return p(args.at), EXIT_OK
    return poly_json(p), EXIT_OK


def cmd_csf(args):
    g = load_graph(args.graph)
    f = X_all_subgraphs(g) if args.method == "subgraphs" else X_nbc(g)
    if args.omega:
        f = omega(f)
    if args.expand is not None:
        return monomial_json(expand_monomials(f, args.expand)), EXIT_OK
    return psym_json(f), EXIT_OK


def cmd_acyclic(args):
    g = load_graph(args.graph)
    orients = list(acyclic_orientations(g))
    out: dict = {"count": len(orients)}
    if args.list:
        out["orientations"] = [orientation_string(o) for o in orients]
    return out, EXIT_OK


def cmd_compat(args):
    g = load_graph(args.graph)
    if args.t < 1:
        raise UsageError("--t must be positive")
    count = compatible_pair_count(g, args.t)
    out: dict = {"t": args.t, "count": count}
    code = EXIT_OK
    if args.check:
        expected = (-1) ** g.n * chi_poly_nbc(g)(-args.t)
        out["expected"] = expected
        out["agrees"] = count == expected
        code = EXIT_OK if count == expected else EXIT_FAIL
    return out, code


def _trace_json(trace, g: Graph) -> list[dict]:
    return [{
        "stage": state.stage,
        "rule": rule,
        "edges": edges_1based(state.edges),
        "arcs": [[a, b] for a, b in (g.edges[j] if state.direction[j] else g.edges[j][::-1]
                                     for j in range(state.stage, g.m))],
        "state": state.describe(),
    } for state, rule in trace]


def cmd_bijection(args):
    g = load_graph(args.graph)
    normal = parse_signs(args.normal, g.m, "--normal") if args.normal else None
    if args.phi is not None:
        o = Orientation(g, parse_signs(args.phi, g.m, "--phi"))
        trace = phi_trace(g, o, normal, check=True)
        out: dict = {"nbc": edges_1based(trace[-1][0].edges)}
    elif args.psi is not None:
        trace = psi_trace(g, parse_subset(args.psi, g.m), normal, check=True)
        out = {"orientation": orientation_string(Orientation(g, trace[-1][0].direction))}
    else:
        raise UsageError("--trace needs --phi ORIENTATION or --psi SUBSET")
    if args.trace:
        out["trace"] = _trace_json(trace, g)
    return out, EXIT_OK


def cmd_verify(args):
    if (args.n is None) == (args.graph is None):
        raise UsageError("give exactly one of --n or --graph")
    if args.tmax < 1 or args.mumax < 1:
        raise UsageError("--tmax and --mumax must be positive")
    if args.graph is not None:
        g = load_graph(args.graph)
        report = check_theorems(g, args.tmax, args.mumax)
        out = report.to_dict()
        if args.against is not None:
            h = load_graph(args.against)
            out["against"] = {"graph": graph_id(h),
                              "X_equal": compare_X(g, h)}
        return out, EXIT_OK if report.passed else EXIT_FAIL
    if args.against is not None:
        raise UsageError("--against needs --graph")
    graphs = failed = 0
    totals = {"pass": 0, "fail": 0, "skipped": 0}
    failures = []
    for g in enumerate_graphs(args.n):
        report = check_theorems(g, args.tmax, args.mumax)
        graphs += 1
        for key, v in report.totals.items():
            totals[key] += v
        if not report.passed:
            failed += 1
            failures.append(report.to_dict())
    out = {"n": args.n, "graphs": graphs, "failed_graphs": failed, "totals": totals,
           "failures": failures, "passed": failed == 0}
    return out, EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_trees(args):
    report = tree_conjecture_sweep(args.n)
    return report.to_dict(), EXIT_OK if report.passed else EXIT_FAIL


def cmd_bench(args):
    g = load_graph(args.graph)
    results = {}
    polys = {}
    for name, fn in (("subgraphs", chi_poly_all_subgraphs), ("nbc", chi_poly_nbc)):
        stats = ExpansionStats()
        start = time.perf_counter()
        polys[name] = fn(g, stats=stats)
        results[name] = {"subsets_visited": stats.subsets, "search_nodes": stats.nodes,
                         "wall_seconds": round(time.perf_counter() - start, 6)}
    agree = polys["subgraphs"] == polys["nbc"]
    out = {"n": g.n, "m": g.m, "agree": agree, **results, "chi": poly_json(polys["nbc"])}
    return out, EXIT_OK if agree else EXIT_FAIL


# --- pretty printing -------------------------------------------------------

def _pretty(command: str, out) -> str:
    if not isinstance(out, dict):
        return str(out)
    if command == "chi":
        return str(IntPolynomial(out["coeffs"]))
    if command == "csf":
        key = "exponents" if "mu" in out else "partition"
        rows = [f"{t['coeff']:>8}  {tuple(t[key])}" for t in out["terms"]]
        return "\n".join(["   coeff  " + key] + rows)
    if command == "bijection" and "trace" in out:
        rows = [f"{'stage':>5}  {'rule':<10}  state"]
        for s in out["trace"]:
            rows.append(f"{s['stage']:>5}  {s['rule'] or '-':<10}  {s['state']}")
        result = out.get("nbc", out.get("orientation"))
        return "\n".join(rows + [f"result: {result}"])
    if command == "verify" and "checks" in out:
        rows = [f"graph: {out['graph']}"]
        rows += [f"  {c['status']:<8} {c['name']:<24} {c['details']}" for c in out["checks"]]
        if "against" in out:
            rows.append(f"X equal to {out['against']['graph']}: {out['against']['X_equal']}")
        return "\n".join(rows)
    if command == "bench":
        rows = [f"{'method':<10} {'subsets':>10} {'nodes':>10} {'seconds':>10}"]
        for name in ("subgraphs", "nbc"):
            r = out[name]
            rows.append(f"{name:<10} {r['subsets_visited']:>10} {r['search_nodes']:>10} "
                        f"{r['wall_seconds']:>10.4f}")
        rows.append(f"agree: {out['agree']}")
        return "\n".join(rows)
    return "\n".join(f"{k}: {json.dumps(v, sort_keys=True)}" for k, v in sorted(out.items()))


def dumps(out) -> str:
    return json.dumps(out, sort_keys=True, separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromabij",
        description="Chromatic polynomials, chromatic symmetric functions and their bijections.")
    parser.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)
    graph_help = "edge-list or graph6 file, '-' for stdin, or a fixture name"

    p = sub.add_parser("chi", help="chromatic polynomial")
    p.add_argument("--graph", required=True, help=graph_help)
    p.add_argument("--method", choices=sorted(CHI_METHODS), default="nbc")
    p.add_argument("--at", type=int, metavar="T", help="evaluate at T instead")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("csf", help="chromatic symmetric function in the power-sum basis")
    p.add_argument("--graph", required=True, help=graph_help)
    p.add_argument("--method", choices=("subgraphs", "nbc"), default="nbc")
    p.add_argument("--omega", action="store_true", help="apply the omega involution")
    p.add_argument("--expand", type=int, metavar="MU", help="monomial expansion in MU variables")
    p.set_defaults(func=cmd_csf)

    p = sub.add_parser("acyclic", help="acyclic orientations")
    p.add_argument("--graph", required=True, help=graph_help)
    p.add_argument("--list", action="store_true", help="list them as +/- strings")
    p.set_defaults(func=cmd_acyclic)

    p = sub.add_parser("compat", help="count compatible (orientation, coloring) pairs")
    p.add_argument("--graph", required=True, help=graph_help)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--check", action="store_true", help="compare with (-1)^n chi(-t)")
    p.set_defaults(func=cmd_compat)

    p = sub.add_parser("bijection", help="acyclic orientations <-> NBC sets")
    p.add_argument("--graph", required=True, help=graph_help)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--phi", metavar="ORIENTATION", help="one '+'/'-' per edge, '+' = low->high")
    group.add_argument("--psi", metavar="SUBSET", help="comma-separated 1-based edge indices")
    p.add_argument("--trace", action="store_true", help="include every intermediate stage")
    p.add_argument("--normal", metavar="SIGNS", help="normal direction per edge (default all '+')")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("verify", help="run every identity check")
    p.add_argument("--n", type=int, help="sweep all labeled graphs on N vertices")
    p.add_argument("--graph", help=graph_help)
    p.add_argument("--against", metavar="GRAPH", help="also compare X with this graph")
    p.add_argument("--tmax", type=int, default=3)
    p.add_argument("--mumax", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("trees", help="tree isomorphism-class sweep for X collisions")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("bench", help="subgraph vs NBC expansion timing")
    p.add_argument("--graph", required=True, help=graph_help)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        out, code = args.func(args)
    except BudgetExceededError as exc:
        print(f"chromabij: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ChromabijError, ValueError, OSError) as exc:
        print(f"chromabij: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(_pretty(args.command, out) if args.pretty else dumps(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
