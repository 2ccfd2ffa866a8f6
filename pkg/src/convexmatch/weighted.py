"""Maximum-weight induced matching on an edge-weighted convex bipartite graph.

The solver fills the DP table ``W[i][j]`` (best matching that uses edge
``(i, j)`` and lies left of column ``j``) row by row, in order of left
endpoint, without ever storing it.  Rows that end at a common column ``r``
share an array ``P[r][S_r..r]`` of running maxima; ``F`` tracks the best
value among finished rows.  Each row costs time proportional to its length,
so the whole solve is O(n + m).
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Optional

from .graph_core import (
    CompactConvexGraph,
    Edge,
    InvariantViolation,
    WeightedConvexGraph,
    check_int64,
    rows_sorted_by_left,
)

NO_WITNESS = -1


@dataclass
class WeightedDPState:
    """Working storage of the solver.

    ``P[r]`` covers columns ``S[r]..r`` (so ``P[r][j - S[r]]`` is the cell
    for column ``j``) and ``P_wit`` holds the matching witness edge ids.
    Edge ids number the edges row by row; ``pred`` maps the id of every
    edge that ever became a witness to the witness of the maximum it
    extended (or ``NO_WITNESS``).
    """

    S: list[int]
    P: list[list[int]]
    P_wit: list[list[int]]
    F: int = 0
    F_wit: int = NO_WITNESS
    pred: dict[int, int] = field(default_factory=dict)
    row_base: list[int] = field(default_factory=list)


@dataclass(frozen=True)
class MatchingResult:
    total: int
    edges: list[Edge]


def earliest_starts(g: CompactConvexGraph) -> list[int]:
    """Return ``S`` with ``S[r]`` the smallest left endpoint among rows ending
    at ``r``, or ``r`` itself when no row ends there.  Index 0 is unused."""
    S = list(range(g.n_v + 1))
    for r in g.rows:
        if r is not None and r[0] < S[r[1]]:
            S[r[1]] = r[0]
    return S


def _edge_ids(g: CompactConvexGraph) -> list[int]:
    base = [0] * (g.n_u + 1)
    acc = 0
    for u, r in enumerate(g.rows, 1):
        base[u - 1] = acc
        if r is not None:
            acc += r[1] - r[0] + 1
    base[g.n_u] = acc
    return base


def _decode(g: CompactConvexGraph, base: list[int], eid: int) -> Edge:
    u = bisect.bisect_right(base, eid, 0, g.n_u) - 1
    # Empty rows share their base with the following row.
    while g.rows[u] is None:
        u += 1
    return Edge(u + 1, g.rows[u][0] + eid - base[u])


def solve_state(wg: WeightedConvexGraph, debug: bool = False) -> WeightedDPState:
    """Run the DP and return its final state (``state.F`` is the optimum)."""
    g = wg.graph
    nv = g.n_v
    rows = g.rows
    weights = wg.weights
    S = earliest_starts(g)
    P: list[list[int]] = [[0]]
    P_wit: list[list[int]] = [[NO_WITNESS]]
    for r in range(1, nv + 1):
        size = r - S[r] + 1
        P.append([0] * size)
        P_wit.append([NO_WITNESS] * size)
    base = _edge_ids(g)
    state = WeightedDPState(S=S, P=P, P_wit=P_wit, row_base=base)
    pred = state.pred
    F = 0
    F_wit = NO_WITNESS
    check = _DebugChecker(wg) if debug else None

    order = rows_sorted_by_left(g)
    k = 0
    n_rows = len(order)
    for ell in range(1, nv + 1):
        lm1 = ell - 1
        while k < n_rows and rows[order[k] - 1][0] == ell:
            i = order[k]
            k += 1
            r = rows[i - 1][1]
            C = weights[i - 1]
            eid = base[i - 1]
            Pr = P[r]
            Pr_wit = P_wit[r]
            Sr = S[r]
            pos = ell - Sr
            M = F
            M_wit = F_wit
            rec = None if check is None else check.begin_row(i)
            # Leftmost column: only finished rows count.
            W = C[0] + M
            if rec is not None:
                rec.append(W)
            if W > 0:
                q = W
                q_wit = eid
                pred[eid] = M_wit
            else:
                q = 0
                q_wit = NO_WITNESS
            if q > Pr[pos]:
                Pr[pos] = q
                Pr_wit[pos] = q_wit
            shift = eid - pos  # edge id of the cell at ``pos`` is ``pos + shift``
            # Before column j + 1, take in the rows that end at j; P[j] sits at
            # index ``pos + Sr`` of P.
            for c, s, Pj in zip(C[1:], S[ell:r], P[ell:r]):
                if s <= lm1:
                    v = Pj[lm1 - s]
                    if v > M:
                        M = v
                        M_wit = P_wit[pos + Sr][lm1 - s]
                pos += 1
                W = c + M
                if rec is not None:
                    rec.append(W)
                if W > q:
                    q = W
                    q_wit = pos + shift
                    pred[q_wit] = M_wit
                if q > Pr[pos]:
                    Pr[pos] = q
                    Pr_wit[pos] = q_wit
            if rec is not None:
                check.end_row(i)
        last = P[ell][-1]
        if last > F:
            F = last
            F_wit = P_wit[ell][-1]
    state.F = F
    state.F_wit = F_wit
    if check is not None:
        check.finish(state)
    return state


def reconstruct(wg: WeightedConvexGraph, state: WeightedDPState) -> list[Edge]:
    """Walk the witness links back from the optimum; edges come out in
    decreasing V-order."""
    edges = []
    eid = state.F_wit
    while eid != NO_WITNESS:
        edges.append(_decode(wg.graph, state.row_base, eid))
        eid = state.pred[eid]
    edges.reverse()
    return edges


def max_weight_induced_matching(
    wg: WeightedConvexGraph, *, require_nonempty: bool = False, debug: bool = False
) -> MatchingResult:
    """Maximum-weight induced matching in O(n + m) time.

    The empty matching (total 0) is a valid answer, so all-negative graphs
    return ``MatchingResult(0, [])`` unless ``require_nonempty`` is set, in
    which case a single heaviest edge is returned instead.

    With ``debug=True`` the solver additionally evaluates the incremental
    maxima by their direct definition and raises ``InvariantViolation`` on
    any disagreement; this costs quadratic time and is meant for small
    instances.
    """
    state = solve_state(wg, debug=debug)
    edges = reconstruct(wg, state)
    if debug:
        total = sum(wg.weight(u, v) for u, v in edges)
        if total != state.F:
            raise InvariantViolation(f"witness chain sums to {total}, optimum is {state.F}")
    if not edges and require_nonempty:
        best: Optional[Edge] = None
        best_w = 0
        for u, r in enumerate(wg.graph.rows, 1):
            if r is None:
                continue
            for off, w in enumerate(wg.weights[u - 1]):
                if best is None or w > best_w:
                    best, best_w = Edge(u, r[0] + off), w
        if best is not None:
            return MatchingResult(best_w, [best])
    return MatchingResult(state.F, edges)


class _DebugChecker:
    """Recomputes the running maximum from the stored table.

    Before column ``j + 1`` of row ``i`` the maximum may only gain entries
    of rows that end exactly at ``j`` and lie left of ``L^i``; every such
    row must already be finished when it is needed.
    """

    def __init__(self, wg: WeightedConvexGraph):
        self.wg = wg
        g = wg.graph
        self.table: dict[int, list[int]] = {}
        self.ending_at: dict[int, list[int]] = {}
        for u, r in enumerate(g.rows, 1):
            if r is not None:
                self.ending_at.setdefault(r[1], []).append(u)

    def _entries_left_of(self, rows_, limit):
        for u in rows_:
            L = self.wg.graph.rows[u - 1][0]
            if L >= limit:
                continue
            if u not in self.table:
                raise InvariantViolation(f"row {u} is needed before it was processed")
            yield from self.table[u][: limit - L]

    def begin_row(self, i: int) -> list[int]:
        self.table[i] = []
        return self.table[i]

    def end_row(self, i: int) -> None:
        """Check ``W - C`` against the running maximum rebuilt column by
        column from the definition."""
        L, R = self.wg.graph.rows[i - 1]
        C = self.wg.weights[i - 1]
        W = self.table[i]
        finished = [u for r, us in self.ending_at.items() if r < L for u in us]
        direct = max([0, *self._entries_left_of(finished, L)])
        for j in range(L, R + 1):
            if j > L:
                direct = max([direct, *self._entries_left_of(self.ending_at.get(j - 1, ()), L)])
            check_int64(W[j - L], f"W[{i}][{j}]")
            if W[j - L] - C[j - L] != direct:
                raise InvariantViolation(
                    f"row {i}, column {j}: incremental maximum {W[j - L] - C[j - L]} != direct {direct}"
                )

    def finish(self, state: WeightedDPState):
        g = self.wg.graph

        def value_of(eid):
            u, v = _decode(g, state.row_base, eid)
            return self.table[u][v - g.rows[u - 1][0]]

        for r in range(1, g.n_v + 1):
            for val, wit in zip(state.P[r], state.P_wit[r]):
                if val > 0 and (wit == NO_WITNESS or value_of(wit) != val):
                    raise InvariantViolation(f"P[{r}] cell {val} has a bad witness")
        if state.F > 0 and value_of(state.F_wit) != state.F:
            raise InvariantViolation("F witness does not attain F")
