"""Compare the compiled and pure-Python search kernels on identical workloads.

Run with ``python3 benchmarks/bench_search.py [--n 13] [--repeat 3]``.
Both backends must report the same optimum and node count on every instance.
"""

from __future__ import annotations

import argparse
import time

from treeid import kernel
from treeid.constructive import FamilySpec, generate
from treeid.enumeration import free_trees
from treeid.graph import has_closed_twins
from treeid.solvers import min_identifying_code


def workload(n: int):
    trees = [t for t in free_trees(n) if not has_closed_twins(t)]
    extras = [generate(FamilySpec(k, p))[0] for k, p in [("big_construction", (3, 4)), ("complete_ary", (3, 5))]]
    return trees + extras


def run(graphs, backend: str) -> tuple[float, list[tuple[int, int]]]:
    start = time.perf_counter()
    out = []
    for g in graphs:
        r = min_identifying_code(g, backend=backend)
        out.append((r.optimum, r.nodes_explored))
    return time.perf_counter() - start, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=13, help="tree order for the exhaustive part")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernel.BACKEND != "cython":
        raise SystemExit("compiled kernel unavailable; rebuild with Cython to benchmark")
    graphs = workload(args.n)
    results = {}
    for backend in ("python", "cython"):
        times = []
        for _ in range(args.repeat):
            t, out = run(graphs, backend)
            times.append(t)
        results[backend] = (min(times), out)
    assert results["python"][1] == results["cython"][1], "backends disagree"
    py, cy = results["python"][0], results["cython"][0]
    nodes = sum(x for _, x in results["cython"][1])
    print(f"{len(graphs)} instances, {nodes} search nodes")
    print(f"python  {py:8.3f} s")
    print(f"cython  {cy:8.3f} s")
    print(f"speedup {py / cy:8.2f}x")


if __name__ == "__main__":
    main()
