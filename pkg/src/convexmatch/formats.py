"""Line-oriented text formats for instances, matchings and covers.

Instance::

    n_u n_v
    L R [w_L ... w_R]     # one line per U-vertex, "0 0" for an empty row

Blank lines are ignored everywhere.  All indices are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .chain_cover import ChainCover
from .graph_core import INT64_MAX, INT64_MIN, CompactConvexGraph, Edge, WeightedConvexGraph
from .unweighted import RowColoring


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if tokens:
            yield no, tokens


def _ints(no: int, tokens) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(no, f"expected integers, got {' '.join(tokens)!r}") from None


def parse_instance(text: str) -> tuple[CompactConvexGraph, Optional[WeightedConvexGraph]]:
    """Parse an instance; the weighted form is returned when weights are present.

    A file is weighted when any non-empty row carries tokens after ``L R``;
    then every non-empty row must carry exactly ``R - L + 1`` weights.
    """
    lines = _lines(text)
    try:
        no, header = next(lines)
    except StopIteration:
        raise ParseError(1, "empty input") from None
    if len(header) != 2:
        raise ParseError(no, "header must be 'n_u n_v'")
    n_u, n_v = _ints(no, header)
    if n_u < 0 or n_v < 0:
        raise ParseError(no, "vertex counts must be non-negative")
    rows = []
    weights = []
    weighted = None
    last = no
    for _ in range(n_u):
        try:
            no, tokens = next(lines)
        except StopIteration:
            raise ParseError(last + 1, f"expected {n_u} rows, got {len(rows)}") from None
        last = no
        vals = _ints(no, tokens)
        if len(vals) < 2:
            raise ParseError(no, "row must start with 'L R'")
        L, R = vals[0], vals[1]
        extra = vals[2:]
        if L == 0 and R == 0:
            if extra:
                raise ParseError(no, "empty row '0 0' takes no weights")
            rows.append(None)
            weights.append(())
            continue
        if L < 1:
            raise ParseError(no, f"L = {L} must be at least 1")
        if L > R:
            raise ParseError(no, f"L = {L} exceeds R = {R}")
        if R > n_v:
            raise ParseError(no, f"R = {R} exceeds n_v = {n_v}")
        has_weights = bool(extra)
        if weighted is None:
            weighted = has_weights
        elif weighted != has_weights:
            raise ParseError(no, "rows mix weighted and unweighted forms")
        if weighted and len(extra) != R - L + 1:
            raise ParseError(no, f"expected {R - L + 1} weights, got {len(extra)}")
        for w in extra:
            if not INT64_MIN <= w <= INT64_MAX:
                raise ParseError(no, f"weight {w} does not fit in 64 bits")
        rows.append((L, R))
        weights.append(tuple(extra))
    for no, _ in lines:
        raise ParseError(no, "unexpected content after the last row")
    g = CompactConvexGraph(n_u, n_v, tuple(rows))
    if weighted is False:
        return g, None
    # Rows without intervals read as weighted too.
    return g, WeightedConvexGraph(g, tuple(weights))


def parse_graph(text: str) -> CompactConvexGraph:
    return parse_instance(text)[0]


def parse_weighted_graph(text: str) -> WeightedConvexGraph:
    g, wg = parse_instance(text)
    if wg is None:
        raise ParseError(1, "instance carries no weights")
    return wg


def format_graph(g: CompactConvexGraph, weights: Optional[Iterable[Iterable[int]]] = None) -> str:
    out = [f"{g.n_u} {g.n_v}"]
    ws = list(weights) if weights is not None else None
    for u, r in enumerate(g.rows):
        if r is None:
            out.append("0 0")
        elif ws is None:
            out.append(f"{r[0]} {r[1]}")
        else:
            out.append(" ".join(map(str, (r[0], r[1], *ws[u]))))
    return "\n".join(out) + "\n"


def format_weighted_graph(wg: WeightedConvexGraph) -> str:
    return format_graph(wg.graph, wg.weights)


def format_cardinality_result(size: int, matching, colorings=None) -> str:
    out = [str(size)]
    out.extend(f"{u} {v}" for u, v in matching)
    if colorings is not None:
        for c in colorings:
            fields = [c.row, c.w, c.b, c.e]
            if c.b2 is not None:
                fields += [c.b2, c.e2]
            out.append(" ".join(map(str, fields)))
    return "\n".join(out) + "\n"


def format_weighted_result(total: int, matching) -> str:
    out = [f"{total} {len(matching)}"]
    out.extend(f"{u} {v}" for u, v in matching)
    return "\n".join(out) + "\n"


def parse_matching(text: str) -> list[Edge]:
    """Read either result format: ``size`` or ``total k`` followed by the
    edges.  Lines after the announced edges (colorings) are ignored."""
    lines = _lines(text)
    try:
        no, header = next(lines)
    except StopIteration:
        raise ParseError(1, "empty input") from None
    vals = _ints(no, header)
    if len(vals) == 1:
        k = vals[0]
    elif len(vals) == 2:
        k = vals[1]
    else:
        raise ParseError(no, "header must be 'size' or 'total k'")
    if k < 0:
        raise ParseError(no, "negative edge count")
    edges = []
    last = no
    for _ in range(k):
        try:
            no, tokens = next(lines)
        except StopIteration:
            raise ParseError(last + 1, f"expected {k} edges, got {len(edges)}") from None
        last = no
        if len(tokens) != 2:
            raise ParseError(no, "edge line must be 'u v'")
        edges.append(Edge(*_ints(no, tokens)))
    return edges


def parse_colorings(text: str) -> list[RowColoring]:
    """Colorings that follow the edges in ``solve --colorings`` output."""
    lines = list(_lines(text))
    if not lines:
        raise ParseError(1, "empty input")
    k = _ints(lines[0][0], lines[0][1])[0]
    out = []
    for no, tokens in lines[1 + k :]:
        vals = _ints(no, tokens)
        if len(vals) not in (4, 6):
            raise ParseError(no, "coloring line must be 'i w B E [B2 E2]'")
        out.append(RowColoring(*vals))
    return out


def format_cover(cover: ChainCover) -> str:
    quads = sorted(cover.quadruples(), key=lambda q: (q[0], q[3], q[1]))
    out = [f"{cover.w_star} {len(quads)}"]
    out.extend(" ".join(map(str, q)) for q in quads)
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class CoverClaim:
    """A cover read from untrusted input, kept as raw ``(w, row, b_hat, e)``
    quadruples; the certifier accepts it wherever it accepts a ChainCover."""

    w_star: int
    quads: tuple[tuple[int, ...], ...]

    def quadruples(self):
        return iter(self.quads)

    def to_cover(self) -> ChainCover:
        return ChainCover.from_quadruples(self.w_star, self.quads)


def parse_cover(text: str) -> CoverClaim:
    lines = _lines(text)
    try:
        no, header = next(lines)
    except StopIteration:
        raise ParseError(1, "empty input") from None
    if len(header) != 2:
        raise ParseError(no, "header must be 'w_star k'")
    w_star, k = _ints(no, header)
    if w_star < 0 or k < 0:
        raise ParseError(no, "negative count in header")
    quads = []
    last = no
    for _ in range(k):
        try:
            no, tokens = next(lines)
        except StopIteration:
            raise ParseError(last + 1, f"expected {k} entries, got {len(quads)}") from None
        last = no
        if len(tokens) != 4:
            raise ParseError(no, "entry line must be 'w row b_hat e'")
        quads.append(tuple(_ints(no, tokens)))
    for no, _ in lines:
        raise ParseError(no, "unexpected content after the last entry")
    return CoverClaim(w_star, tuple(quads))
