"""Wall-clock scaling benchmark.

Instances are generated in memory and only the solver call is timed.  For
each (algorithm, model, size) the fastest of ``repetitions`` runs is
reported, in nanoseconds.
"""

from __future__ import annotations

import csv
import gc
import io
import time
from typing import Callable, Iterable, Sequence

from .generate import GenSpec, generate, generate_weighted
from .oracle import naive_dp
from .unweighted import max_cardinality_induced_matching
from .weighted import max_weight_induced_matching

CSV_HEADER = ("algorithm", "n_u", "n_v", "m", "nanos")
ALGORITHMS = ("unweighted", "weighted", "naive_dp")
# Edge caps: beyond these, listing the edges (or squaring their count)
# is out of reach for an interactive benchmark.
DEFAULT_CAPS = {"unweighted": None, "weighted": 20_000_000, "naive_dp": 20_000}


def best_time_ns(fn: Callable[[], object], repetitions: int = 3) -> int:
    """Fastest of ``repetitions`` calls.  As with ``timeit``, the cyclic
    garbage collector is paused while timing: its full passes scan every live
    object and would add a cost that grows faster than the work measured."""
    best = None
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(max(1, repetitions)):
            gc.collect()  # untimed: start every call from a clean heap
            start = time.perf_counter_ns()
            fn()
            elapsed = time.perf_counter_ns() - start
            if best is None or elapsed < best:
                best = elapsed
    finally:
        if was_enabled:
            gc.enable()
    return best


def run(
    sizes: Sequence[int],
    models: Sequence[str] = ("uniform-intervals",),
    repetitions: int = 3,
    algorithms: Sequence[str] = ALGORITHMS,
    seed: int = 0,
    caps: dict | None = None,
) -> list[tuple]:
    """Return CSV rows ``(algorithm, n_u, n_v, m, nanos)``.

    The algorithm column reads ``name:model``.  Algorithms whose edge cap
    is exceeded by an instance are skipped for it.
    """
    caps = {**DEFAULT_CAPS, **(caps or {})}
    out = []
    for model in models:
        for n in sizes:
            spec = GenSpec(n, n, model=model, seed=seed, weight_range=(1, 100))
            g = generate(spec)
            m = g.edge_count
            wg = None
            for name in algorithms:
                cap = caps.get(name)
                if cap is not None and m > cap:
                    continue
                if name == "unweighted":
                    ns = best_time_ns(lambda: max_cardinality_induced_matching(g), repetitions)
                else:
                    if wg is None:
                        wg = generate_weighted(spec)
                    if name == "weighted":
                        ns = best_time_ns(lambda: max_weight_induced_matching(wg), repetitions)
                    elif name == "naive_dp":
                        # Interpreted, like the solvers it is compared with.
                        ns = best_time_ns(lambda: naive_dp(wg, compiled=False), repetitions)
                    else:
                        raise ValueError(f"unknown algorithm {name!r}")
                out.append((f"{name}:{model}", g.n_u, g.n_v, m, ns))
    return out


def to_csv(rows: Iterable[tuple]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    return buf.getvalue()


def weighted_edge_instance(m: int, length: int = 100, seed: int = 0):
    """Fixed-length weighted instance with exactly ``m`` edges
    (``m`` must be a multiple of ``length``)."""
    n_u = m // length
    return generate_weighted(
        GenSpec(n_u, max(n_u, length), model="fixed-length", length=length, seed=seed, weight_range=(-20, 100))
    )


def scaling_ratios(times: Sequence[int]) -> list[float]:
    return [b / a for a, b in zip(times, times[1:])]
