"""Seeded random instance generators."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph_core import INT64_MAX, INT64_MIN, CompactConvexGraph, WeightedConvexGraph

MODELS = ("uniform-intervals", "fixed-length", "shared-endpoint-adversarial", "full-intervals")


@dataclass(frozen=True)
class GenSpec:
    n_u: int
    n_v: int
    model: str = "uniform-intervals"
    weight_range: Optional[tuple[int, int]] = None
    seed: int = 0
    length: Optional[int] = None

    def __post_init__(self):
        if self.n_u < 0 or self.n_v < 0:
            raise ValueError("vertex counts must be non-negative")
        if self.n_u > 0 and self.n_v == 0:
            raise ValueError("rows need at least one V-vertex")
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; choose from {', '.join(MODELS)}")
        if self.weight_range is not None:
            lo, hi = self.weight_range
            if lo > hi or lo < INT64_MIN or hi > INT64_MAX:
                raise ValueError(f"bad weight range [{lo}, {hi}]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.length is not None and self.length < 1:
            raise ValueError("interval length must be positive")


def expected_uniform_length(n_v: int) -> float:
    """Mean of ``|X - Y| + 1`` for independent uniform ``X, Y`` on ``1..n_v``."""
    return (n_v * n_v - 1) / (3 * n_v) + 1


def default_length(n_v: int) -> int:
    return max(1, math.isqrt(n_v))


def _rows(spec: GenSpec, rng: np.random.Generator) -> tuple:
    n_u, n_v = spec.n_u, spec.n_v
    if n_u == 0:
        return ()
    if spec.model == "full-intervals":
        return ((1, n_v),) * n_u
    if spec.model == "uniform-intervals":
        a = rng.integers(1, n_v + 1, size=n_u)
        b = rng.integers(1, n_v + 1, size=n_u)
        lo, hi = np.minimum(a, b), np.maximum(a, b)
    elif spec.model == "fixed-length":
        k = min(spec.length or default_length(n_v), n_v)
        lo = rng.integers(1, n_v - k + 2, size=n_u)
        hi = lo + (k - 1)
    else:
        # Few shared right endpoints with spread-out starts: large P arrays.
        groups = max(1, math.isqrt(n_v))
        ends = np.unique(np.linspace(1, n_v, groups).round().astype(np.int64))
        hi = ends[rng.integers(0, len(ends), size=n_u)]
        lo = (rng.random(n_u) * hi).astype(np.int64) + 1
    return tuple(zip(lo.tolist(), hi.tolist()))


def generate(spec: GenSpec) -> CompactConvexGraph:
    """Same spec, same graph."""
    rng = np.random.default_rng(spec.seed)
    return CompactConvexGraph(spec.n_u, spec.n_v, _rows(spec, rng))


def generate_weighted(spec: GenSpec) -> WeightedConvexGraph:
    rng = np.random.default_rng(spec.seed)
    g = CompactConvexGraph(spec.n_u, spec.n_v, _rows(spec, rng))
    lo, hi = spec.weight_range if spec.weight_range is not None else (1, 1)
    lengths = [r[1] - r[0] + 1 for r in g.rows]
    flat = rng.integers(lo, hi, size=sum(lengths), endpoint=True, dtype=np.int64).tolist()
    weights = []
    pos = 0
    for n in lengths:
        weights.append(tuple(flat[pos : pos + n]))
        pos += n
    return WeightedConvexGraph(g, tuple(weights))
