"""Command-line front door.

Results go to stdout (JSON by default, CSV where a table has a stable wire
format), diagnostics to stderr. Exit codes: 0 success, 1 domain error (bad
subset, malformed graph file, step cap exceeded), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import enumeration, paths, quiescence
from .engine import trace
from .graphs import Graph, VertexSet, parse_edge_list, parse_graph_spec
from .quiescence import UNKNOWN, ZeroStatus

_SPEC_RE = re.compile(r"^(path|cycle|complete|kbip|kpartite):")


def _resolve_graph(source: str) -> Graph:
    if _SPEC_RE.match(source):
        return parse_graph_spec(source)
    text = Path(source).read_text()
    return parse_edge_list(text)


def _parse_int_list(text: str, what: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"bad {what} {text!r}: expected comma-separated integers") from None


def _subset(g: Graph, text: str) -> VertexSet:
    return VertexSet.from_indices(g.n, _parse_int_list(text, "subset"))


def _config(g: Graph, text: str) -> tuple[int, ...]:
    stacks = _parse_int_list(text, "config")
    if len(stacks) != g.n:
        raise ValueError(f"config has {len(stacks)} stacks but graph has {g.n} vertices")
    return tuple(stacks)


def _emit_json(obj) -> None:
    print(json.dumps(obj))


def _trace_csv(rows: list[tuple[int, ...]], n: int) -> str:
    header = ",".join(["step"] + [f"v{i}" for i in range(n)])
    lines = [header]
    for step, cfg in enumerate(rows):
        lines.append(",".join([str(step)] + [str(x) for x in cfg]))
    return "\n".join(lines) + "\n"


def _cmd_simulate(args) -> int:
    g = _resolve_graph(args.graph)
    c0 = _config(g, args.config)
    rows = trace(g, c0, args.steps)
    if args.format == "csv":
        sys.stdout.write(_trace_csv(rows, g.n))
    else:
        _emit_json(
            {
                "graph": args.graph,
                "config": list(c0),
                "steps": args.steps,
                "trace": [list(r) for r in rows],
            }
        )
    return 0


def _cmd_perturb(args) -> int:
    g = _resolve_graph(args.graph)
    h = _subset(g, args.subset)
    cfg = quiescence.perturb(g, h)
    if args.format == "csv":
        header = ",".join(f"v{i}" for i in range(g.n))
        row = ",".join(str(x) for x in cfg)
        sys.stdout.write(f"{header}\n{row}\n")
    else:
        _emit_json({"graph": args.graph, "subset": list(h.members), "config": list(cfg)})
    return 0


def _zero_json(outcome: quiescence.ZeroInvokingOutcome) -> dict:
    out = {"status": outcome.status.value, "step": outcome.step}
    if outcome.report is not None:
        out["preperiod"] = outcome.report.preperiod
        out["period"] = outcome.report.period
    return out


def _cmd_check(args) -> int:
    g = _resolve_graph(args.graph)
    h = _subset(g, args.subset)
    outcome = quiescence.is_zero_invoking(g, h, args.max_steps)
    _emit_json(
        {
            "graph": args.graph,
            "subset": list(h.members),
            "ccd": quiescence.is_ccd(g, h),
            "zero2": quiescence.is_zero2_invoking(g, h),
            "zero": _zero_json(outcome),
        }
    )
    return 1 if outcome.status is ZeroStatus.CAP_EXCEEDED else 0


def _cmd_count(args) -> int:
    g = _resolve_graph(args.graph)
    include = not args.exclude_trivial
    n = enumeration.count_zero2_subsets(g, include_trivial=include)
    _emit_json({"graph": args.graph, "include_trivial": include, "count": n})
    return 0


def _cmd_pq2(args) -> int:
    g = _resolve_graph(args.graph)
    _emit_json({"graph": args.graph, "pq2": quiescence.pq2(g)})
    return 0


def _cmd_pq(args) -> int:
    g = _resolve_graph(args.graph)
    result = quiescence.pq(g, args.max_steps)
    if result is UNKNOWN:
        _emit_json({"graph": args.graph, "pq": None, "status": "unknown"})
        return 1
    _emit_json({"graph": args.graph, "pq": result, "status": "ok"})
    return 0


def _cmd_search(args) -> int:
    def report(p: enumeration.SearchProgress) -> None:
        print(
            f"progress: {p.scanned}/{p.total} edge masks, "
            f"{p.witnesses} witnesses, {p.inconclusive} inconclusive",
            file=sys.stderr,
        )

    inconclusive = 0

    def report_and_track(p: enumeration.SearchProgress) -> None:
        nonlocal inconclusive
        inconclusive = p.inconclusive
        if args.progress:
            report(p)

    stream = enumeration.search_all_graphs(
        args.n,
        max_steps=args.max_steps,
        reporter=report_and_track,
        connected_only=args.connected_only,
        checkpoint=args.checkpoint,
        resume=args.resume,
        workers=args.threads,
    )
    count = 0
    for w in stream:
        count += 1
        print(
            json.dumps(
                {
                    "n": w.graph.n,
                    "edges": [list(e) for e in w.graph.edges],
                    "subset": list(w.subset.members),
                    "zero_step": w.zero_step,
                    "note": w.note,
                }
            ),
            flush=True,
        )
    print(f"search done: {count} witnesses, {inconclusive} inconclusive", file=sys.stderr)
    return 1 if inconclusive else 0


def _cmd_paths_table(args) -> int:
    rows = paths.path_table(args.n_max)
    if args.format == "csv":
        lines = ["n,j_bruteforce,j_recurrence,j_fibonacci,pq2_bruteforce,pq2_closed"]
        for r in rows:
            lines.append(
                f"{r.n},{r.j_bruteforce},{r.j_recurrence},{r.j_fibonacci},"
                f"{r.pq2_bruteforce},{r.pq2_closed}"
            )
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        _emit_json(
            [
                {
                    "n": r.n,
                    "j_bruteforce": r.j_bruteforce,
                    "j_recurrence": r.j_recurrence,
                    "j_fibonacci": r.j_fibonacci,
                    "pq2_bruteforce": r.pq2_bruteforce,
                    "pq2_closed": r.pq2_closed,
                }
                for r in rows
            ]
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chip-diffusion",
        description="Diffusion chip-firing: traces, quiescence predicates, exhaustive searches.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph(p):
        p.add_argument(
            "--graph",
            required=True,
            help="generator spec (path:N, cycle:N, complete:N, kbip:A,B, kpartite:A,B,...) "
            "or an edge-list file ('n m' header, then 'u v' lines)",
        )

    p = sub.add_parser("simulate", help="fire a configuration for a fixed number of steps")
    add_graph(p)
    p.add_argument("--config", required=True, help="comma-separated stacks, one per vertex")
    p.add_argument("--steps", required=True, type=int, help="number of firing steps")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("perturb", help="configuration after perturbing a subset from all-zero")
    add_graph(p)
    p.add_argument("--subset", required=True, help="comma-separated vertex indices ('' = empty)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_perturb)

    p = sub.add_parser("check", help="quiescence predicates for one subset")
    add_graph(p)
    p.add_argument("--subset", required=True)
    p.add_argument("--max-steps", type=int, default=quiescence.DEFAULT_MAX_STEPS)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("count", help="count subsets that restore zero at step 2")
    add_graph(p)
    p.add_argument("--exclude-trivial", action="store_true", help="drop the empty and full sets")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("pq2", help="smallest nonempty subset restoring zero at step 2")
    add_graph(p)
    p.set_defaults(func=_cmd_pq2)

    p = sub.add_parser("pq", help="smallest nonempty zero-invoking subset")
    add_graph(p)
    p.add_argument("--max-steps", type=int, default=quiescence.DEFAULT_MAX_STEPS)
    p.set_defaults(func=_cmd_pq)

    p = sub.add_parser(
        "search", help="scan all labelled graphs of order n for zero-invoking-but-not-step-2 subsets"
    )
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--max-steps", type=int, default=quiescence.DEFAULT_MAX_STEPS)
    p.add_argument("--checkpoint", help="path for resumable progress records")
    p.add_argument("--resume", action="store_true", help="continue from the checkpoint file")
    p.add_argument("--threads", type=int, default=1, help="worker processes for the scan")
    p.add_argument("--progress", action="store_true", help="progress lines on stderr")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("paths-table", help="closed forms vs enumeration on paths")
    p.add_argument("--n-max", required=True, type=int)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_paths_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
