"""Data model for convex bipartite graphs in compact form.

U-vertices are the rows ``1..n_u``; each row's neighbourhood is an interval
``[L, R]`` of the numbered V-vertices ``1..n_v``, or ``None`` for an
isolated U-vertex.  All indices exposed by this module are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

Interval = tuple[int, int]


class NotConvex(ValueError):
    """An adjacency list has a gap, so the V-numbering is not convex."""

    def __init__(self, u: int, gap_position: int):
        super().__init__(f"row {u} is not consecutive: gap at V-index {gap_position}")
        self.u = u
        self.gap_position = gap_position


class InvariantViolation(AssertionError):
    """Raised by the debug instrumentation of the solvers."""


class Edge(NamedTuple):
    u: int
    v: int


InducedMatching = list[Edge]


@dataclass(frozen=True)
class CompactConvexGraph:
    n_u: int
    n_v: int
    rows: tuple[Optional[Interval], ...]

    def __post_init__(self):
        if self.n_u < 0 or self.n_v < 0:
            raise ValueError("vertex counts must be non-negative")
        rows = self.rows
        if not isinstance(rows, tuple) or any(r is not None and type(r) is not tuple for r in rows):
            rows = tuple(None if r is None else (int(r[0]), int(r[1])) for r in rows)
            object.__setattr__(self, "rows", rows)
        if len(rows) != self.n_u:
            raise ValueError(f"expected {self.n_u} rows, got {len(rows)}")
        for i, r in enumerate(rows, 1):
            if r is not None and not 1 <= r[0] <= r[1] <= self.n_v:
                raise ValueError(f"row {i}: interval {r} outside 1..{self.n_v} or reversed")

    def interval(self, u: int) -> Optional[Interval]:
        return self.rows[u - 1]

    @property
    def edge_count(self) -> int:
        return sum(r[1] - r[0] + 1 for r in self.rows if r is not None)

    def has_edge(self, u: int, v: int) -> bool:
        if not 1 <= u <= self.n_u:
            return False
        r = self.rows[u - 1]
        return r is not None and r[0] <= v <= r[1]

    def edges(self) -> Iterator[Edge]:
        """Yield every edge, row by row, left to right."""
        for u, r in enumerate(self.rows, 1):
            if r is not None:
                for v in range(r[0], r[1] + 1):
                    yield Edge(u, v)

    def adjacency(self) -> list[list[int]]:
        return [[] if r is None else list(range(r[0], r[1] + 1)) for r in self.rows]


@dataclass(frozen=True)
class WeightedConvexGraph:
    graph: CompactConvexGraph
    weights: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        weights = tuple(tuple(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if len(weights) != self.graph.n_u:
            raise ValueError(f"expected {self.graph.n_u} weight rows, got {len(weights)}")
        for i, (r, w) in enumerate(zip(self.graph.rows, weights), 1):
            expected = 0 if r is None else r[1] - r[0] + 1
            if len(w) != expected:
                raise ValueError(f"row {i}: expected {expected} weights, got {len(w)}")

    def weight(self, u: int, v: int) -> int:
        L = self.graph.rows[u - 1][0]
        return self.weights[u - 1][v - L]

    @classmethod
    def unit(cls, graph: CompactConvexGraph) -> "WeightedConvexGraph":
        return cls(graph, tuple(() if r is None else (1,) * (r[1] - r[0] + 1) for r in graph.rows))


def from_adjacency(n_u: int, n_v: int, adjacency: Sequence[Sequence[int]]) -> CompactConvexGraph:
    """Compress sorted adjacency lists into intervals.

    Raises:
        NotConvex: if some list is not a consecutive run.
        ValueError: if a list is unsorted or holds an index outside ``1..n_v``.
    """
    if len(adjacency) != n_u:
        raise ValueError(f"expected {n_u} adjacency lists, got {len(adjacency)}")
    rows: list[Optional[Interval]] = []
    for u, nbrs in enumerate(adjacency, 1):
        if not nbrs:
            rows.append(None)
            continue
        prev = None
        for v in nbrs:
            if not 1 <= v <= n_v:
                raise ValueError(f"row {u}: V-index {v} outside 1..{n_v}")
            if prev is not None:
                if v <= prev:
                    raise ValueError(f"row {u}: adjacency list not strictly increasing")
                if v != prev + 1:
                    raise NotConvex(u, prev + 1)
            prev = v
        rows.append((nbrs[0], nbrs[-1]))
    return CompactConvexGraph(n_u, n_v, tuple(rows))


def edges_independent(g: CompactConvexGraph, e: Edge, f: Edge) -> bool:
    """Two edges can coexist in an induced matching iff neither row's
    interval contains the other edge's V-endpoint."""
    le, re = g.rows[e[0] - 1]
    lf, rf = g.rows[f[0] - 1]
    return not (le <= f[1] <= re) and not (lf <= e[1] <= rf)


def rows_sorted_by_left(g: CompactConvexGraph) -> list[int]:
    """Stable counting sort of the non-empty rows by left endpoint."""
    count = [0] * (g.n_v + 2)
    for r in g.rows:
        if r is not None:
            count[r[0] + 1] += 1
    for k in range(1, g.n_v + 2):
        count[k] += count[k - 1]
    out = [0] * count[g.n_v + 1]
    for u, r in enumerate(g.rows, 1):
        if r is not None:
            out[count[r[0]]] = u
            count[r[0]] += 1
    return out


def check_int64(value: int, what: str = "value") -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"{what} {value} does not fit in a signed 64-bit integer")
    return value
