"""Command-line front end.

Exit codes: 0 holds/pass, 1 fails, 2 operational error (bad input, budget or
size limit). Output files never contain timings, so reruns with the same
flags are byte-identical.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import kernels
from .bounds import BoundParams, bound_table
from .coloring import (DEFAULT_BUDGET, EXACT_LIMIT, BudgetExceeded, Coloring, Predicate,
                       check_recolor_bound, exact_min_max_mono, forall_colorings_check,
                       mono_components, td_two_coloring)
from .decomp import (DecompositionError, TreeDecomposition, necklace_td, validate_td)
from .extremal import (GadgetParams, SizeCapExceeded, build_gadget, build_line_family,
                       hex_check, verify_gadget, verify_line_family)
from .graph import (Graph, GenerationError, GraphError, NecklaceSpec, Society, cycle_graph,
                    girth, max_degree, necklace_graph, path_graph, random_regular_with_girth,
                    triangular_grid)
from .treewidth import DEFAULT_LIMIT, SizeLimitError, exact_treewidth, heuristic_td
from .vortex import vortex_order_check

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class UsageError(ValueError):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _load_graph(path: str | None) -> Graph:
    if path is None:
        raise UsageError("an input graph file is required")
    return Graph.from_dict(_load_json(path))


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + m.replace("_", "-") for m in missing)
        raise UsageError(f"{args.command} {getattr(args, 'family', '') or getattr(args, 'kind', '')} "
                         f"needs {flags}".replace("  ", " "))


def _write(args, text: str) -> None:
    Path(args.out).write_text(text)


def _emit(args, text: str) -> None:
    """Payload goes to --out, or else to stdout (then the report moves to stderr)."""
    if args.out:
        _write(args, text)
    else:
        args.stdout_busy = True
        sys.stdout.write(text)


def _audit(g: Graph) -> dict:
    info = {"n": g.n, "m": len(g.edges), "max_degree": max_degree(g)}
    gi = girth(g)
    info["girth"] = None if gi == float("inf") else int(gi)
    if g.n <= 16:
        info["treewidth"] = exact_treewidth(g).width
    return info


# --- gen ---------------------------------------------------------------------


def cmd_gen(args) -> tuple[int, dict]:
    fam = args.family
    params: dict = {}
    extra: dict = {}
    if fam == "grid":
        _need(args, "k")
        params = {"k": args.k}
        g = triangular_grid(args.k)
    elif fam == "path":
        _need(args, "n")
        params = {"n": args.n}
        g = path_graph(args.n)
    elif fam == "cycle":
        _need(args, "n")
        params = {"n": args.n}
        g = cycle_graph(args.n)
    elif fam == "gadget":
        _need(args, "level", "d")
        p = GadgetParams(args.level, args.d, args.base_path_length, args.size_cap)
        params = {"level": p.level, "d": p.d, "base_path_length": p.base, "size_cap": p.size_cap}
        g = build_gadget(p)
    elif fam == "necklace":
        _need(args, "spec")
        spec = NecklaceSpec.from_dict(_load_json(args.spec))
        params = spec.to_dict()
        g = necklace_graph(spec)
    elif fam == "regular":
        _need(args, "degree", "girth")
        params = {"degree": args.degree, "girth": args.girth, "max_attempts": args.max_attempts}
        g = random_regular_with_girth(args.degree, args.girth, args.seed, args.max_attempts)
    elif fam == "line":
        _need(args, "k", "N")
        params = {"k": args.k, "N": args.N, "max_attempts": args.max_attempts}
        fam_out = build_line_family(args.k, args.N, seed=args.seed, max_attempts=args.max_attempts)
        g = fam_out.graph
        extra = {"base": fam_out.base.to_dict(), "base_audit": fam_out.provenance}
    else:  # argparse restricts choices
        raise UsageError(f"unknown family {fam}")
    text = g.to_dot() if args.format == "dot" else g.to_json()
    results = {"graph": _audit(g), **extra}
    _emit(args, text)
    return EXIT_OK, {"parameters": params, "results": results, "verdict": "ok"}


# --- td ------------------------------------------------------------------------


def cmd_td(args) -> tuple[int, dict]:
    mode = args.mode
    if mode == "necklace":
        spec = NecklaceSpec.from_dict(_load_json(args.input))
        g = necklace_graph(spec)
        td = necklace_td(spec)
        params = spec.to_dict()
        bound = max(spec.q - 1, 2)
    elif mode == "exact":
        g = _load_graph(args.input)
        td = exact_treewidth(g, limit=args.limit).td
        params = {"limit": args.limit}
        bound = None
    elif mode == "heuristic":
        g = _load_graph(args.input)
        td = heuristic_td(g)
        params = {}
        bound = None
    else:
        g = _load_graph(args.input)
        _need(args, "td")
        td = TreeDecomposition.from_dict(_load_json(args.td))
        params = {"td": args.td}
        bound = None
    violations = validate_td(g, td)
    results = {"width": td.width, "adhesion": td.adhesion, "nodes": len(td.bags),
               "violations": violations}
    if bound is not None:
        results["width_bound"] = bound
    ok = not violations and (bound is None or td.width <= bound)
    if mode != "validate":
        _emit(args, td.to_json())
    return (EXIT_OK if ok else EXIT_FAIL), {"parameters": params, "results": results,
                                           "verdict": "pass" if ok else "fail"}


# --- check -------------------------------------------------------------------


def _forall_outcome(res) -> tuple[int, dict]:
    return (EXIT_OK if res.holds else EXIT_FAIL), res.to_dict()


def cmd_check(args) -> tuple[int, dict]:
    kind = args.kind
    run = dict(budget=args.budget, threads=args.threads)
    if kind == "hex":
        _need(args, "k")
        params = {"k": args.k}
        code, results = _forall_outcome(hex_check(args.k, **run))
    elif kind == "gadget":
        _need(args, "level", "d")
        if args.input:
            g = _load_graph(args.input)
        else:
            g = build_gadget(GadgetParams(args.level, args.d, args.base_path_length, args.size_cap))
        params = {"level": args.level, "d": args.d, "n": g.n}
        code, results = _forall_outcome(verify_gadget(g, args.level, args.d, **run))
    elif kind == "line":
        _need(args, "k", "N")
        if args.input:
            g = _load_graph(args.input)
        else:
            g = build_line_family(args.k, args.N, seed=args.seed,
                                  max_attempts=args.max_attempts).graph
        params = {"k": args.k, "N": args.N, "n": g.n}
        code, results = _forall_outcome(verify_line_family(g, args.k, args.N, **run))
    elif kind == "forall":
        _need(args, "k", "pred")
        g = _load_graph(args.input)
        pred = Predicate.parse(args.pred)
        params = {"k": args.k, "pred": str(pred)}
        code, results = _forall_outcome(forall_colorings_check(g, args.k, pred, **run))
    elif kind == "recolor":
        _need(args, "base", "recolored", "z", "k_size")
        g = _load_graph(args.input)
        base = Coloring.from_dict(_load_json(args.base))
        new = Coloring.from_dict(_load_json(args.recolored))
        z = sorted({int(x) for x in args.z.split(",") if x.strip()})
        params = {"z": z, "k_size": args.k_size}
        rep = check_recolor_bound(g, base, args.k_size, z, new)
        code, results = (EXIT_OK if rep.passed else EXIT_FAIL), rep.to_dict()
    elif kind == "bound24":
        g = _load_graph(args.input)
        if args.td:
            td = TreeDecomposition.from_dict(_load_json(args.td))
            source = "file"
        elif g.n <= args.limit:
            td = exact_treewidth(g, limit=args.limit).td
            source = "exact"
        else:
            td = heuristic_td(g)
            source = "heuristic"
        coloring, rep = td_two_coloring(g, td)
        params = {"td_source": source}
        results = {**rep.to_dict(), "coloring": list(coloring.colors)}
        code = EXIT_OK if rep.passed else EXIT_FAIL
    elif kind == "vortex":
        _need(args, "rho")
        soc = Society.from_dict(_load_json(args.input))
        params = {"rho": args.rho}
        rep = vortex_order_check(soc, args.rho)
        code, results = (EXIT_OK if rep.holds else EXIT_FAIL), rep.to_dict()
    else:
        raise UsageError(f"unknown check {kind}")
    verdict = "holds" if code == EXIT_OK else "fails"
    if args.out:
        _write(args, _dumps({"check": kind, "parameters": params, "results": results,
                             "verdict": verdict}))
    return code, {"parameters": params, "results": results, "verdict": verdict}


# --- color ---------------------------------------------------------------------


def cmd_color(args) -> tuple[int, dict]:
    g = _load_graph(args.input)
    if args.coloring:
        c = Coloring.from_dict(_load_json(args.coloring))
        rep = mono_components(g, c)
        if args.out:
            _write(args, _dumps(rep.to_dict()))
        return EXIT_OK, {"parameters": {"coloring": args.coloring}, "results": rep.to_dict(),
                         "verdict": "ok"}
    _need(args, "k")
    pre = None
    if args.precolored:
        pre = {int(v): int(c) for v, c in _load_json(args.precolored).items()}
    best, witness = exact_min_max_mono(g, args.k, pre, limit=args.limit, threads=args.threads)
    if args.out:
        _write(args, witness.to_json())
    params = {"k": args.k, "precolored": None if pre is None else {str(v): c for v, c in sorted(pre.items())}}
    return EXIT_OK, {"parameters": params,
                     "results": {"optimum": best, "witness": witness.to_dict()}, "verdict": "ok"}


# --- bounds --------------------------------------------------------------------


def format_bound_table(rows: list[dict]) -> str:
    lines = []
    for r in rows:
        inputs = ",".join(f"{k}={v}" for k, v in r["inputs"].items())
        if r["value"] is None:
            lines.append(f"{r['name']:<10} {inputs:<28} n/a")
        else:
            lines.append(f"{r['name']:<10} {inputs:<28} {r['value']} ({r['digits']} digits)")
    return "\n".join(lines) + "\n"


def cmd_bounds(args) -> tuple[int, dict]:
    p = BoundParams(delta=args.delta, g=args.g, w=args.w, q=args.q, rho=args.rho,
                    theta=args.theta, k=args.k_size, z=args.z, d=args.d)
    rows = bound_table(p)
    text = _dumps(rows) if args.format == "json" else format_bound_table(rows)
    _emit(args, text)
    return EXIT_OK, None


# --- wiring ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="max canonical colourings an exhaustive check may visit")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--format", choices=["json", "dot", "text"], default=None)

    parser = argparse.ArgumentParser(prog="clustcolor", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version="clustcolor 0.1.0")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="generate a graph")
    gen.add_argument("family", choices=["grid", "gadget", "necklace", "line", "regular",
                                        "path", "cycle"])
    for name in ("k", "n", "level", "d", "degree", "girth", "N"):
        gen.add_argument(f"--{name}", type=int)
    gen.add_argument("--base-path-length", type=int)
    gen.add_argument("--size-cap", type=int, default=5000)
    gen.add_argument("--max-attempts", type=int, default=2000)
    gen.add_argument("--spec", help="necklace spec JSON")

    td = sub.add_parser("td", parents=[common], help="build or validate a decomposition")
    td.add_argument("mode", choices=["necklace", "exact", "heuristic", "validate"])
    td.add_argument("input", help="graph JSON (necklace mode: necklace spec JSON)")
    td.add_argument("--td", help="decomposition JSON to validate")
    td.add_argument("--limit", type=int, default=DEFAULT_LIMIT)

    chk = sub.add_parser("check", parents=[common], help="verify a claim exhaustively")
    chk.add_argument("kind", choices=["hex", "gadget", "line", "recolor", "forall",
                                      "bound24", "vortex"])
    chk.add_argument("input", nargs="?")
    for name in ("k", "level", "d", "N", "rho"):
        chk.add_argument(f"--{name}", type=int)
    chk.add_argument("--base-path-length", type=int)
    chk.add_argument("--size-cap", type=int, default=5000)
    chk.add_argument("--max-attempts", type=int, default=2000)
    chk.add_argument("--pred", help="size:N or diam:D")
    chk.add_argument("--base", help="base colouring JSON (recolor)")
    chk.add_argument("--recolored", help="recoloured colouring JSON (recolor)")
    chk.add_argument("--z", help="comma-separated recoloured set (recolor)")
    chk.add_argument("--k-size", type=int, help="component bound of the base colouring")
    chk.add_argument("--td", help="decomposition JSON (bound24)")
    chk.add_argument("--limit", type=int, default=DEFAULT_LIMIT)

    col = sub.add_parser("color", parents=[common], help="optimal clustered colouring or report")
    col.add_argument("input")
    col.add_argument("--k", type=int)
    col.add_argument("--precolored", help="JSON object vertex -> colour")
    col.add_argument("--coloring", help="colouring JSON to analyse instead of solving")
    col.add_argument("--limit", type=int, default=EXACT_LIMIT)

    bnd = sub.add_parser("bounds", parents=[common], help="evaluate the bound formulas")
    bnd.add_argument("--delta", type=int, default=3)
    bnd.add_argument("--g", type=int, default=0)
    bnd.add_argument("--w", type=int, default=3)
    bnd.add_argument("--q", type=int, default=3)
    bnd.add_argument("--rho", type=int, default=0)
    bnd.add_argument("--theta", type=int, default=1)
    bnd.add_argument("--k-size", type=int, default=1)
    bnd.add_argument("--z", type=int, default=1)
    bnd.add_argument("--d", type=int, help="inject d instead of computing it")
    return parser


COMMANDS = {"gen": cmd_gen, "td": cmd_td, "check": cmd_check, "color": cmd_color,
            "bounds": cmd_bounds}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "text" if args.command == "bounds" else "json"
    start = time.perf_counter()
    try:
        code, report = COMMANDS[args.command](args)
    except (UsageError, GraphError, DecompositionError, BudgetExceeded, SizeLimitError,
            SizeCapExceeded, GenerationError, ValueError) as exc:
        print(f"clustcolor: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if report is not None:
        report = {"command": args.command, **report, "seed": args.seed,
                  "default_backend": kernels.DEFAULT,
                  "timing_s": round(time.perf_counter() - start, 6)}
        stream = sys.stderr if getattr(args, "stdout_busy", False) else sys.stdout
        stream.write(_dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
