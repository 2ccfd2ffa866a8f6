"""Slow, independent reference implementations used as ground truth.

Nothing here reuses solver code: independence of two edges is decided from
the explicit edge set (no edge joins the endpoints of the other), and the DP
table is evaluated straight from its defining maximum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .graph_core import CompactConvexGraph, WeightedConvexGraph

BRUTE_FORCE_MAX_EDGES = 24


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class DenseDPTable:
    """``rows[i]`` holds W at columns ``L^i..R^i`` of row ``i``."""

    rows: dict[int, list[int]]

    def max(self) -> int:
        return max([0, *map(max, filter(None, self.rows.values()))])

    @property
    def entry_count(self) -> int:
        return sum(len(v) for v in self.rows.values())


def _edge_set(g: CompactConvexGraph) -> set[tuple[int, int]]:
    return set(map(tuple, g.edges()))


def independent_by_definition(edge_set, e, f) -> bool:
    """The four endpoints induce exactly the two edges ``e`` and ``f``."""
    (u, v), (x, y) = e, f
    return u != x and v != y and (u, y) not in edge_set and (x, v) not in edge_set


def brute_force_weighted(wg: WeightedConvexGraph) -> int:
    """Best total weight over all pairwise-independent edge subsets
    (the empty set counts, so the result is never negative)."""
    g = wg.graph
    edges = list(g.edges())
    if len(edges) > BRUTE_FORCE_MAX_EDGES:
        raise TooLarge(f"{len(edges)} edges exceed the brute-force bound of {BRUTE_FORCE_MAX_EDGES}")
    es = set(map(tuple, edges))
    weight = [wg.weight(u, v) for u, v in edges]
    n = len(edges)
    compatible = [0] * n
    for a in range(n):
        for b in range(n):
            if a != b and independent_by_definition(es, edges[a], edges[b]):
                compatible[a] |= 1 << b

    best = 0

    def extend(start: int, allowed: int, total: int) -> None:
        nonlocal best
        if total > best:
            best = total
        for k in range(start, n):
            if allowed >> k & 1:
                extend(k + 1, allowed & compatible[k], total + weight[k])

    extend(0, (1 << n) - 1, 0)
    return best


def brute_force_cardinality(g: CompactConvexGraph) -> int:
    return brute_force_weighted(WeightedConvexGraph.unit(g))


def all_pairs_induced_matching(g: CompactConvexGraph, matching: Sequence) -> bool:
    """Quadratic check: every edge exists and every pair is independent."""
    es = _edge_set(g)
    edges = [tuple(e) for e in matching]
    if any(e not in es for e in edges):
        return False
    return all(independent_by_definition(es, a, b) for a, b in itertools.combinations(edges, 2))


def matching_violation(g: CompactConvexGraph, matching: Sequence) -> Optional[str]:
    """Classify a claimed induced matching by the definition: the first
    edge missing from ``g``, else any repeated V-vertex, else any pair of
    edges joined by a graph edge."""
    es = _edge_set(g)
    edges = [tuple(e) for e in matching]
    if any(e not in es for e in edges):
        return "EdgeNotInGraph"
    if len({v for _, v in edges}) < len(edges):
        return "DuplicateEndpoint"
    if not all(independent_by_definition(es, a, b) for a, b in itertools.combinations(edges, 2)):
        return "DependentPair"
    return None


def is_chain_graph(edges: Sequence[tuple[int, int]]) -> bool:
    """No two edges of the subgraph are independent within the subgraph."""
    es = set(map(tuple, edges))
    return not any(independent_by_definition(es, a, b) for a, b in itertools.combinations(es, 2))


def cover_violation(g: CompactConvexGraph, w_star: int, quads) -> Optional[str]:
    """Classify a compact cover by the definition of a chain cover.

    Returns ``None`` for a valid cover, otherwise the first failing category
    in the order: malformed entry (bad label or indices, or a row listed
    twice in one chain), edge outside ``g``, chain with two independent
    edges, uncovered edge of ``g``.
    """
    es = _edge_set(g)
    chains: dict[int, set] = {}
    listed = []
    for w, row, b_hat, e in quads:
        if not 1 <= w <= w_star or not 1 <= row <= g.n_u or not 1 <= b_hat <= e <= g.n_v:
            return "Malformed"
        span = {(row, v) for v in range(b_hat, e + 1)}
        if not span <= es:
            return "OutsideGraph"
        if (w, row) in listed:
            return "Malformed"
        listed.append((w, row))
        chains.setdefault(w, set()).update(span)
    if not all(is_chain_graph(c) for c in chains.values()):
        return "NotNested"
    covered = set().union(*chains.values()) if chains else set()
    if covered != es:
        return "CoverageGap"
    return None


def _naive_kernel(lefts, rights, offsets, weights, out):  # pragma: no cover - compiled
    n = len(lefts)
    for k in range(n):
        lk = lefts[k]
        for j in range(lk, rights[k] + 1):
            best = 0
            for p in range(k):
                if rights[p] < j:
                    lp = lefts[p]
                    stop = rights[p]
                    if stop > lk - 1:
                        stop = lk - 1
                    base = offsets[p] - lp
                    for c in range(lp, stop + 1):
                        if out[base + c] > best:
                            best = out[base + c]
            out[offsets[k] + j - lk] = weights[offsets[k] + j - lk] + best


_compiled_kernel = None


def _get_compiled():
    global _compiled_kernel
    if _compiled_kernel is None:
        import numba

        _compiled_kernel = numba.njit(cache=True, nogil=True)(_naive_kernel)
    return _compiled_kernel


def naive_dp(wg: WeightedConvexGraph, *, compiled: bool = True) -> DenseDPTable:
    """Evaluate the DP recursion cell by cell from its definition.

    Each cell takes the maximum over every earlier entry in a row that ends
    left of the cell's column and lies left of the row's own start, so the
    running time is quadratic in the number of edges.  ``compiled=False``
    runs the same loop in the interpreter.
    """
    g = wg.graph
    order = sorted((u for u in range(1, g.n_u + 1) if g.rows[u - 1] is not None), key=lambda u: g.rows[u - 1][0])
    lefts = [g.rows[u - 1][0] for u in order]
    rights = [g.rows[u - 1][1] for u in order]
    offsets = [0]
    for a, b in zip(lefts, rights):
        offsets.append(offsets[-1] + b - a + 1)
    m = offsets.pop()
    if compiled:
        flat = np.fromiter(itertools.chain.from_iterable(wg.weights[u - 1] for u in order), np.int64, m)
        out = np.zeros(m, dtype=np.int64)
        _get_compiled()(
            np.array(lefts, dtype=np.int64),
            np.array(rights, dtype=np.int64),
            np.array(offsets, dtype=np.int64),
            flat,
            out,
        )
        values = out.tolist()
    else:
        flat = [w for u in order for w in wg.weights[u - 1]]
        values = [0] * m
        _naive_kernel(lefts, rights, offsets, flat, values)
    table = {}
    for k, u in enumerate(order):
        table[u] = values[offsets[k] : offsets[k] + rights[k] - lefts[k] + 1]
    return DenseDPTable(table)


def enumerate_all_graphs(max_nu: int, max_nv: int) -> Iterator[CompactConvexGraph]:
    """Every interval system with ``max_nu`` rows over ``max_nv`` columns,
    each row either empty or one of the ``max_nv (max_nv + 1) / 2`` intervals."""
    choices: list[Optional[tuple[int, int]]] = [None]
    choices += [(a, b) for a in range(1, max_nv + 1) for b in range(a, max_nv + 1)]
    for rows in itertools.product(choices, repeat=max_nu):
        yield CompactConvexGraph(max_nu, max_nv, rows)


def _sorted_rows(g: CompactConvexGraph) -> list[int]:
    return sorted((u for u in range(1, g.n_u + 1) if g.rows[u - 1] is not None), key=lambda u: g.rows[u - 1][0])


def threshold_sweep_from_scratch(g: CompactConvexGraph) -> tuple[int, dict[int, tuple[int, Optional[int]]]]:
    """Unweighted sweep recomputing each threshold by scanning all earlier
    rows.  Returns the optimum and ``{row: (base value, split column)}``,
    where the split column is the last column holding the base value when
    the row has two values."""
    nv = g.n_v
    rows = _sorted_rows(g)
    Q = [0] * (nv + 2)
    F = 0
    coloring: dict[int, tuple[int, Optional[int]]] = {}
    k = 0
    for ell in range(1, nv + 1):
        while k < len(rows) and g.rows[rows[k] - 1][0] == ell:
            i = rows[k]
            k += 1
            R = g.rows[i - 1][1]
            w = F + 1
            t = nv + 1
            for p, (wp, split) in coloring.items():
                Lp, Rp = g.rows[p - 1]
                if wp == w and Lp < ell:
                    t = min(t, Rp)
                elif wp + 1 == w and split is not None and split + 1 < ell:
                    t = min(t, Rp)
            if t < R:
                coloring[i] = (w, t)
                Q[R] = max(Q[R], w + 1)
            else:
                coloring[i] = (w, None)
                Q[R] = max(Q[R], w)
        F = max(F, Q[ell])
    return F, coloring


def threshold_sweep_by_columns(g: CompactConvexGraph) -> tuple[int, dict[int, tuple[int, Optional[int]]]]:
    """Unweighted sweep that lowers thresholds from every entry of each
    column once the column has been passed (quadratic in the worst case)."""
    nu, nv = g.n_u, g.n_v
    rows = _sorted_rows(g)
    t = [nv + 1] * (nu + 2)
    Q = [0] * (nv + 2)
    F = 0
    coloring: dict[int, tuple[int, Optional[int]]] = {}
    k = 0
    for ell in range(1, nv + 1):
        while k < len(rows) and g.rows[rows[k] - 1][0] == ell:
            i = rows[k]
            k += 1
            R = g.rows[i - 1][1]
            w = F + 1
            if t[w] < R:
                coloring[i] = (w, t[w])
                Q[R] = max(Q[R], w + 1)
            else:
                coloring[i] = (w, None)
                Q[R] = max(Q[R], w)
        F = max(F, Q[ell])
        for p, (wp, split) in coloring.items():
            Lp, Rp = g.rows[p - 1]
            if Lp <= ell <= Rp:
                value = wp if split is None or ell <= split else wp + 1
                t[value] = min(t[value], Rp)
    return F, coloring

