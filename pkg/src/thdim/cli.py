"""Command-line surface.

Exit codes: 0 success / positive recognition, 1 negative recognition or a
size-cap refusal or a randomized-search failure, 2 usage or input-format
error, 3 internal verification failure (a bug, never bad input).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .circuits import (GraphicFunction, compile_circuit, format_circuit,
                       parse_circuit, verify_circuit)
from .decompose import (Decomposition, RandomizedSearchError, decompose_degeneracy,
                        decompose_treewidth, decompose_vertex_cover,
                        format_decomposition, verify_decomposition)
from .exactdim import EXACT_DIMENSION_LIMIT, compute_report, exact_decomposition
from .graphs import ExactLimitError, Graph, ParseError, max_independent_set, parse_edge_list
from .maxdeg import decompose_maxdeg
from .randgraphs import parse_experiment_spec, render_table, run_experiment
from .threshold import ForbiddenSubgraph, format_threshold, recognize_threshold
from .treedecomp import (TreeDecompositionError, heuristic_tree_decomposition,
                         parse_tree_decomposition)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _read_graph(path: str) -> Graph:
    return parse_edge_list(Path(path).read_text())


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _greedy_cover(g: Graph) -> list[int]:
    """Maximal-matching 2-approximation, for graphs beyond the exact cap."""
    cover: set[int] = set()
    for u, v in g.edges():
        if u not in cover and v not in cover:
            cover.update((u, v))
    return sorted(cover)


def _choose_cover(g: Graph, exact_cap: int) -> list[int]:
    if g.n <= exact_cap:
        return sorted(set(range(g.n)) - max_independent_set(g, limit=exact_cap))
    return _greedy_cover(g)


def cmd_recognize(args) -> int:
    g = _read_graph(args.path)
    result = recognize_threshold(g)
    if isinstance(result, ForbiddenSubgraph):
        print(f"not-threshold witness={result.kind} vertices={list(result.vertices)}")
        return EXIT_NEGATIVE
    print("threshold")
    print(format_threshold(result))
    return EXIT_OK


def _run_method(g: Graph, args) -> Decomposition:
    if args.method == "vc":
        return decompose_vertex_cover(g, _choose_cover(g, args.exact_cap))
    if args.method == "degeneracy":
        return decompose_degeneracy(g, seed=args.seed)
    if args.method == "treewidth":
        if args.td:
            td = parse_tree_decomposition(Path(args.td).read_text(), g)
        else:
            td = heuristic_tree_decomposition(g)
        return decompose_treewidth(g, td)
    if args.method == "maxdeg":
        diagnostics = [] if getattr(args, "diag", None) else None
        d = decompose_maxdeg(g, seed=args.seed, diagnostics=diagnostics)
        if diagnostics is not None:
            Path(args.diag).write_text("\n".join(diagnostics) + "\n")
        return d
    if args.method == "exact":
        return exact_decomposition(g)
    raise AssertionError(f"unhandled method {args.method}")


def cmd_decompose(args) -> int:
    g = _read_graph(args.path)
    d = _run_method(g, args)
    if not d.verified or not verify_decomposition(g, d):
        print("internal error: decomposition failed verification", file=sys.stderr)
        return EXIT_INTERNAL
    _emit(format_decomposition(d), args.out)
    print(f"method={d.method} factors={d.size} bound={d.bound_claimed} verified=true",
          file=sys.stderr)
    return EXIT_OK


def cmd_report(args) -> int:
    g = _read_graph(args.path)
    report = compute_report(g, seed=args.seed,
                            exact_cap=min(args.exact_cap, EXACT_DIMENSION_LIMIT))
    sys.stdout.write(report.to_text())
    if args.out:
        Path(args.out).write_text(report.to_rows())
    return EXIT_OK


def cmd_compile(args) -> int:
    g = _read_graph(args.path)
    d = _run_method(g, args)
    circuit = compile_circuit(g, d, seed=args.seed)
    mode = args.verify or ("exhaustive" if g.n <= 16 else "sampled")
    ok, counterexample = verify_circuit(GraphicFunction(g), circuit, mode=mode,
                                        seed=args.seed)
    print(f"gates={circuit.gate_count} verify-mode={mode} verified={str(ok).lower()}",
          file=sys.stderr)
    if not ok:
        print(f"counterexample={list(counterexample)}", file=sys.stderr)
        return EXIT_INTERNAL
    _emit(format_circuit(circuit), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.path)
    circuit = parse_circuit(Path(args.circuit).read_text())
    mode = args.verify or ("exhaustive" if circuit.arity <= 16 else "sampled")
    ok, counterexample = verify_circuit(GraphicFunction(g), circuit, mode=mode,
                                        seed=args.seed)
    if ok:
        print(f"equal verify-mode={mode}")
        return EXIT_OK
    print(f"not-equal verify-mode={mode} counterexample={list(counterexample)}")
    return EXIT_NEGATIVE


def cmd_experiment(args) -> int:
    spec = parse_experiment_spec(Path(args.spec).read_text())
    rows = run_experiment(spec, seed=args.seed)
    _emit(render_table(rows), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thdim",
        description="Threshold-graph decompositions, exact dimension bounds, "
                    "and depth-2 LTF circuit compilation.")
    parser.add_argument("--version", action="version", version=f"thdim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, method=False):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None)
        p.add_argument("--exact-cap", dest="exact_cap", type=int, default=24)
        if method:
            p.add_argument("--method", choices=["vc", "degeneracy", "treewidth",
                                                "maxdeg", "exact"],
                           default="degeneracy")
            p.add_argument("--td", default=None, help="tree decomposition file")
            p.add_argument("--verify", choices=["exhaustive", "sampled"], default=None)
            p.add_argument("--diag", default=None,
                           help="write maxdeg intermediate artifacts (partition, "
                                "families) to this file")

    p = sub.add_parser("recognize", help="decide thresholdness, print witness")
    p.add_argument("path")
    common(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("decompose", help="emit a verified decomposition")
    p.add_argument("path")
    common(p, method=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("report", help="dimension bounds and factor counts")
    p.add_argument("path")
    common(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("compile", help="compile a decomposition into a circuit")
    p.add_argument("path")
    common(p, method=True)
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("verify", help="compare a circuit against a graph")
    p.add_argument("path")
    p.add_argument("circuit")
    common(p, method=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("experiment", help="run the random-graph table")
    p.add_argument("spec")
    common(p)
    p.set_defaults(func=cmd_experiment)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (ExactLimitError, RandomizedSearchError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (ParseError, TreeDecompositionError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entry() -> None:
    sys.exit(main())
