"""Maximum-cardinality induced matching in O(n) from the compact form.

With unit weights every DP row holds at most two consecutive values, ``w``
on a left part and ``w + 1`` on the rest.  The sweep therefore only needs
the row's base value ``w = F + 1`` and the threshold ``t_w``, the smallest
right endpoint among rows that already show value ``w`` left of the current
column.  Threshold updates are scheduled in per-column lists so that each
row is touched a constant number of times.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .graph_core import CompactConvexGraph, Edge, InducedMatching, InvariantViolation, rows_sorted_by_left


class ReconstructionFailure(RuntimeError):
    pass


@dataclass(frozen=True)
class RowColoring:
    """Compressed DP row: value ``w`` on ``[b, e]`` and, when ``b2`` is set,
    value ``w + 1`` on ``[b2, e2]``."""

    row: int
    w: int
    b: int
    e: int
    b2: Optional[int] = None
    e2: Optional[int] = None

    def segments(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(value, begin, end)`` for each colour in the row."""
        yield self.w, self.b, self.e
        if self.b2 is not None:
            yield self.w + 1, self.b2, self.e2

    @property
    def top(self) -> int:
        return self.w if self.b2 is None else self.w + 1

    def start_of(self, value: int) -> int:
        if value == self.w:
            return self.b
        if value == self.w + 1 and self.b2 is not None:
            return self.b2
        raise KeyError(value)


@dataclass
class SweepState:
    """Arrays of the sweep, kept after completion for reconstruction.

    ``t[w]``/``t_row[w]`` hold the current threshold for value ``w`` and the
    row that set it; ``Q[r]``/``Q_row[r]`` the best final-column value over
    rows ending at ``r``.  ``base_pred[i]`` is the row attaining ``F`` when
    row ``i`` was processed and ``upper_pred[i]`` the row that defined
    ``t_w`` for a two-valued row ``i`` (0 means none).
    """

    graph: CompactConvexGraph
    t: list[int]
    t_row: list[int]
    Q: list[int]
    Q_row: list[int]
    F: int = 0
    F_row: int = 0
    T: dict[int, list[tuple[int, int, int]]] = field(default_factory=lambda: defaultdict(list))
    colorings: list[Optional[RowColoring]] = field(default_factory=list)
    base_pred: list[int] = field(default_factory=list)
    upper_pred: list[int] = field(default_factory=list)


@dataclass(frozen=True)
class CardinalityResult:
    size: int
    matching: InducedMatching
    colorings: list[RowColoring]


def sweep(g: CompactConvexGraph, debug: bool = False) -> SweepState:
    """Run the threshold sweep and return the completed state."""
    nu, nv = g.n_u, g.n_v
    rows = g.rows
    infinity = nv + 1
    state = SweepState(
        graph=g,
        t=[infinity] * (nu + 2),
        t_row=[0] * (nu + 2),
        Q=[0] * (nv + 1),
        Q_row=[0] * (nv + 1),
        colorings=[None] * (nu + 1),
        base_pred=[0] * (nu + 1),
        upper_pred=[0] * (nu + 1),
    )
    t, t_row, Q, Q_row, T = state.t, state.t_row, state.Q, state.Q_row, state.T
    colorings, base_pred, upper_pred = state.colorings, state.base_pred, state.upper_pred
    F = 0
    F_row = 0

    order = rows_sorted_by_left(g)
    k = 0
    n_rows = len(order)
    for ell in range(1, nv + 1):
        while k < n_rows and rows[order[k] - 1][0] == ell:
            i = order[k]
            k += 1
            R = rows[i - 1][1]
            w = F + 1
            tw = t[w]
            if debug:
                _check_threshold(state, i, w, ell)
            base_pred[i] = F_row
            if tw < R:
                colorings[i] = RowColoring(i, w, ell, tw, tw + 1, R)
                upper_pred[i] = t_row[w]
                # (w, R) is not scheduled: t_w < R already.
                T[tw + 1].append((w + 1, R, i))
                top = w + 1
            else:
                colorings[i] = RowColoring(i, w, ell, R)
                T[ell].append((w, R, i))
                top = w
            if top > Q[R]:
                Q[R] = top
                Q_row[R] = i
        if Q[ell] > F:
            F = Q[ell]
            F_row = Q_row[ell]
        due = T.pop(ell, None)
        if due:
            for w, r, i in due:
                if r < t[w]:
                    t[w] = r
                    t_row[w] = i
    state.F = F
    state.F_row = F_row
    if debug:
        for c in state.colorings:
            if c is not None:
                check_row_structure(g, c)
    return state


def matching_from_witnesses(state: SweepState, size: int) -> InducedMatching:
    """Rebuild an induced matching of ``size`` edges from the sweep witnesses.

    Starting from the row attaining ``F`` at its right endpoint, each step
    moves to an edge of value one less: a base-segment edge continues at
    the right endpoint of the row that held ``F`` at the time, an
    upper-segment edge at the start of the threshold row's segment.
    """
    g = state.graph
    if size == 0:
        return []
    if size != state.F:
        raise ReconstructionFailure(f"requested size {size}, sweep optimum is {state.F}")
    x = state.F_row
    if x == 0:
        raise ReconstructionFailure("no witness row for the optimum")
    col = g.rows[x - 1][1]
    value = size
    out: list[Edge] = []
    while True:
        c = state.colorings[x]
        if c is None:
            raise ReconstructionFailure(f"witness row {x} was never processed")
        out.append(Edge(x, col))
        if value == 1:
            break
        if value == c.w:
            x = state.base_pred[x]
            if x == 0:
                raise ReconstructionFailure(f"missing predecessor at value {value}")
            col = g.rows[x - 1][1]
        elif value == c.w + 1 and c.b2 is not None:
            y = state.upper_pred[x]
            if y == 0 or state.colorings[y] is None:
                raise ReconstructionFailure(f"missing threshold witness at value {value}")
            x = y
            col = state.colorings[y].start_of(c.w)
        else:
            raise ReconstructionFailure(f"row {x} has no value {value}")
        value -= 1
    out.reverse()
    return out


def max_cardinality_induced_matching(g: CompactConvexGraph, *, debug: bool = False) -> CardinalityResult:
    """Maximum induced matching, its size and the compressed DP rows.

    Runs in O(n_u + n_v) time regardless of the number of edges.  With
    ``debug=True`` the thresholds are recomputed from earlier colourings and
    every row is checked for the two-value structure.
    """
    state = sweep(g, debug=debug)
    matching = matching_from_witnesses(state, state.F)
    return CardinalityResult(state.F, matching, [c for c in state.colorings if c is not None])


def check_row_structure(g: CompactConvexGraph, c: RowColoring) -> None:
    """Raise unless the coloring partitions the row into at most two
    segments of consecutive values, the larger on the right."""
    r = g.rows[c.row - 1]
    if r is None:
        raise InvariantViolation(f"row {c.row} is empty but has a coloring")
    L, R = r
    if c.w < 1 or c.b != L or not c.b <= c.e:
        raise InvariantViolation(f"row {c.row}: bad first segment {c}")
    if c.b2 is None:
        if c.e != R:
            raise InvariantViolation(f"row {c.row}: first segment must end at {R}")
    elif not (c.b2 == c.e + 1 and c.b2 <= c.e2 == R):
        raise InvariantViolation(f"row {c.row}: second segment does not continue to {R}")


def expand_colorings(g: CompactConvexGraph, colorings) -> dict[int, list[int]]:
    """Dense DP table ``{row: [W at L..R]}`` from compressed rows."""
    table = {}
    for c in colorings:
        vals = []
        for value, b, e in c.segments():
            vals.extend([value] * (e - b + 1))
        table[c.row] = vals
    return table


def _check_threshold(state: SweepState, i: int, w: int, ell: int) -> None:
    expected = state.graph.n_v + 1
    for c in state.colorings:
        if c is None or c.row == i:
            continue
        for value, b, _ in c.segments():
            if value == w and b < ell:
                expected = min(expected, state.graph.rows[c.row - 1][1])
    if state.t[w] != expected:
        raise InvariantViolation(f"row {i}: t[{w}] = {state.t[w]}, brute force gives {expected}")
