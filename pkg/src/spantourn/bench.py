"""Benchmark harness: timed runs over a circulant family, CSV + figure.

Instances are Cayley tournaments on Z_n whose connection set 1..(n-1)/2
is chunked into classes of size at most k, so every class is small and
the instance is k-spanning through the class containing 1.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass

from .driver import aut_spanning
from .gen import cayley_tournament
from .search import STATS

CSV_FIELDS = ("n", "k", "wall_time", "backtrack_nodes")


@dataclass(frozen=True)
class BenchRow:
    n: int
    k: int
    wall_time: float
    backtrack_nodes: int


def bench_instance(n: int, k: int):
    """The circulant benchmark tournament on Z_n with chunked classes."""
    half = list(range(1, (n + 1) // 2))
    parts = [half[i:i + k] for i in range(0, len(half), k)]
    return cayley_tournament(n, parts)


def run_bench(sizes, k: int = 1) -> list[BenchRow]:
    rows = []
    for n in sizes:
        x = bench_instance(n, k)
        before = STATS.nodes
        start = time.perf_counter()
        aut_spanning(x, k)
        elapsed = time.perf_counter() - start
        rows.append(BenchRow(n, k, elapsed, STATS.nodes - before))
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in rows:
        writer.writerow([r.n, r.k, "%.6f" % r.wall_time, r.backtrack_nodes])
    return buf.getvalue()


def render_figure(rows, path: str) -> None:
    """Wall time and backtrack nodes against n, written as an image file."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ns = [r.n for r in rows]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.5))
    ax1.plot(ns, [r.wall_time for r in rows], "o-")
    ax1.set_xlabel("n")
    ax1.set_ylabel("wall time (s)")
    ax1.set_title("automorphism group runtime")
    ax2.plot(ns, [r.backtrack_nodes for r in rows], "s-", color="tab:orange")
    ax2.set_xlabel("n")
    ax2.set_ylabel("backtrack nodes")
    ax2.set_title("search effort")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
