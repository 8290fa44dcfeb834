"""Compare the compiled and pure-Python kernels on representative workloads.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]
"""
import argparse
import random
import statistics
import time

from clustcolor import kernels
from clustcolor.coloring import Predicate, exact_min_max_mono, forall_colorings_check
from clustcolor.extremal import GadgetParams, build_gadget
from clustcolor.graph import make_graph, triangular_grid
from clustcolor.treewidth import exact_treewidth


def _random_graph(n, p, seed):
    rng = random.Random(seed)
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def workloads(quick):
    hex_k = 5 if quick else 6
    g_tw = _random_graph(14 if quick else 20, 0.3, 1)
    g_mm = _random_graph(12 if quick else 14, 0.3, 2)
    gadget = build_gadget(GadgetParams(2, 1))
    return [
        (f"hex k={hex_k}",
         lambda be: forall_colorings_check(triangular_grid(hex_k), 2, Predicate("size", hex_k),
                                           budget=2 ** 40, backend=be)),
        ("gadget i=2 d=1", lambda be: forall_colorings_check(gadget, 2, Predicate("diameter", 1),
                                                             backend=be)),
        (f"treewidth n={g_tw.n}", lambda be: exact_treewidth(g_tw, backend=be)),
        ("treewidth grid 4", lambda be: exact_treewidth(triangular_grid(4), backend=be)),
        (f"min-max n={g_mm.n} k=3", lambda be: exact_min_max_mono(g_mm, 3, backend=be)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller instances")
    args = ap.parse_args()
    backends = sorted(kernels.BACKENDS)
    print(f"backends: {', '.join(backends)} (default {kernels.DEFAULT})")
    header = f"{'workload':<22}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name, fn in workloads(args.quick):
        times, answers = [], []
        for be in backends:
            runs = []
            for _ in range(args.repeat):
                start = time.perf_counter()
                answers.append(fn(be))
                runs.append(time.perf_counter() - start)
            times.append(statistics.median(runs))
        assert all(a == answers[0] for a in answers), f"backends disagree on {name}"
        row = f"{name:<22}" + "".join(f"{t:>11.4f}s" for t in times)
        if len(times) == 2:
            row += f"{times[1] / times[0]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
