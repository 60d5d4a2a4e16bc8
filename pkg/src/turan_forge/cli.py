"""Command-line front end: ``turan-forge <command> ...``.

Exit status: 0 success, 2 invalid parameters, 3 a K_{2,t} was found,
4 I/O error, 5 search budget or memory cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import edgelist
from .bounds import bounds_report, sandwich_report, write_csv
from .construction import (
    DEFAULT_MAX_VERTICES,
    build_graph,
    check_lemma1,
    derive_params,
    edge_list_text,
    expected_edge_count,
)
from .errors import BudgetExceededError, InvalidParameterError, MemoryCapError, SearchCapError
from .finite_field import find_congruent_prime
from .graph import TripartiteGraph
from .oracle import DEFAULT_BUDGET, exact_extremal
from .verifier import scan_codegrees

log = logging.getLogger("turan_forge")

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_K2T_FOUND = 3
EXIT_IO = 4
EXIT_CAP = 5


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8", newline="\n")


def _resolve_p(args) -> int:
    if args.p is not None:
        return args.p
    if args.m is not None:
        p = find_congruent_prime(args.m, args.t).p
        log.info("smallest prime >= %d with %d | p-1 is %d", args.m, args.t - 1, p)
        return p
    raise InvalidParameterError("one of --p or --m is required")


def cmd_construct(args) -> int:
    params = derive_params(args.t, _resolve_p(args))
    graph = build_graph(params, max_vertices=args.max_vertices, threads=args.threads)
    out = Path(args.output or f"k2t_t{params.t}_p{params.p}.edges")
    out.write_text(edge_list_text(graph), encoding="ascii", newline="\n")
    formula = expected_edge_count(params)
    summary = {
        "schema": "v1",
        "params": params.as_dict(),
        "vertices": graph.num_vertices,
        "edge_count": graph.num_edges,
        "formula_value": formula,
        "formula_match": graph.num_edges == formula,
        "pair_edge_counts": list(graph.pair_edge_counts),
        "edge_list": out.name,
    }
    summary_path = Path(args.summary) if args.summary else out.with_name(out.name + ".json")
    summary_path.write_text(_dump_json(summary), encoding="utf-8", newline="\n")
    log.info("wrote %d edges to %s", graph.num_edges, out)
    return EXIT_OK if summary["formula_match"] else EXIT_K2T_FOUND


def cmd_verify(args) -> int:
    header, edges = edgelist.read(args.file)
    t = args.t if args.t is not None else header.get("t")
    if t is None:
        raise InvalidParameterError("t not given and not present in the edge-list header")
    graph = TripartiteGraph.from_edges(header["n"], edges)
    report = scan_codegrees(graph, t, threads=args.threads)
    _emit(_dump_json(report.to_dict()), args.output)
    if report.max_codegree >= t:
        log.error("K_{2,%d} found: vertices %d and %d share %d neighbours", t, *report.witness[:2], report.max_codegree)
        return EXIT_K2T_FOUND
    return EXIT_OK


def cmd_lemma(args) -> int:
    cert = check_lemma1(derive_params(args.t, _resolve_p(args)))
    _emit(_dump_json(cert.to_dict()), args.output)
    return EXIT_OK if cert.passed else EXIT_K2T_FOUND


def cmd_bounds(args) -> int:
    if args.n is not None:
        report = bounds_report(args.n, args.t)
    else:
        report = sandwich_report(args.t, _resolve_p(args))
    text = write_csv([report]) if args.format == "csv" else _dump_json(report.to_dict())
    _emit(text, args.output)
    return EXIT_OK


def cmd_oracle(args) -> int:
    result = exact_extremal(args.n, args.t, budget=args.budget)
    _emit(_dump_json(result.to_dict()), args.output)
    if args.witness:
        Path(args.witness).write_text(result.edge_list_text(), encoding="ascii", newline="\n")
    return EXIT_OK


def cmd_report(args) -> int:
    primes = list(args.p or [])
    for m in args.m or []:
        primes.append(find_congruent_prime(m, args.t).p)
    if not primes:
        raise InvalidParameterError("report needs at least one --p or --m")
    rows, status = [], EXIT_OK
    for p in primes:
        params = derive_params(args.t, p)
        graph = build_graph(params, max_vertices=args.max_vertices, threads=args.threads)
        scan = scan_codegrees(graph, args.t, threads=args.threads)
        lemma = check_lemma1(params)
        report = sandwich_report(args.t, p)
        ok = scan.max_codegree < args.t and lemma.passed and graph.num_edges == report.lower
        log.info("t=%d p=%d edges=%d max_codegree=%d lemma=%s", args.t, p, graph.num_edges, scan.max_codegree, lemma.passed)
        if not ok:
            status = EXIT_K2T_FOUND
        rows.append(report)
    _emit(write_csv(rows), args.output)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="turan-forge", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tp(p, p_multiple=False):
        p.add_argument("--t", type=int, required=True, help="forbidden K_{2,t} parameter (even)")
        if p_multiple:
            p.add_argument("--p", type=int, nargs="+", help="primes with (t-1) | (p-1)")
            p.add_argument("--m", type=int, nargs="+", help="search the smallest valid prime >= m")
        else:
            g = p.add_mutually_exclusive_group()
            g.add_argument("--p", type=int, help="prime with (t-1) | (p-1)")
            g.add_argument("--m", type=int, help="search the smallest valid prime >= m")

    def add_run(p):
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)

    c = sub.add_parser("construct", help="build the graph and write its edge list")
    add_tp(c)
    add_run(c)
    c.add_argument("-o", "--output", help="edge-list path (default k2t_t<T>_p<P>.edges)")
    c.add_argument("--summary", help="summary JSON path (default <output>.json)")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="scan all codegrees of an edge-list file")
    v.add_argument("file")
    v.add_argument("--t", type=int, help="defaults to the t in the file header")
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)

    lm = sub.add_parser("lemma", help="exhaustively check the P_f/N_f dichotomy")
    add_tp(lm)
    lm.add_argument("-o", "--output")
    lm.set_defaults(func=cmd_lemma)

    b = sub.add_parser("bounds", help="closed-form bounds and sandwich ratio")
    b.add_argument("--t", type=int, required=True)
    g = b.add_mutually_exclusive_group(required=True)
    g.add_argument("--p", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--n", type=int, help="bare part size (upper bound only)")
    b.add_argument("--format", choices=("json", "csv"), default="json")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_bounds)

    o = sub.add_parser("oracle", help="exact value for tiny n by branch and bound")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--t", type=int, required=True)
    o.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    o.add_argument("-o", "--output")
    o.add_argument("--witness", help="write the witness graph as an edge list")
    o.set_defaults(func=cmd_oracle)

    r = sub.add_parser("report", help="full pipeline over a grid of primes, CSV out")
    add_tp(r, p_multiple=True)
    add_run(r)
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except InvalidParameterError as exc:
        log.error("%s", exc)
        return EXIT_INVALID
    except (BudgetExceededError, MemoryCapError, SearchCapError) as exc:
        best = getattr(exc, "best", None)
        log.error("%s%s", exc, f" (best so far: {best}, a lower estimate)" if best is not None else "")
        return EXIT_CAP
    except OSError as exc:
        log.error("%s", exc)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
