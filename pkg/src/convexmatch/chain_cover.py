"""Minimum chain cover from the compressed DP rows.

Edges of colour ``w`` become chain subgraph ``w`` after each colour segment
``[B, E]`` is stretched left to the smallest ``B`` of any same-coloured
segment that ends strictly before ``E``.  Stretched segments of one colour
are nested, and the stretch never leaves the row's interval.  The cover
has as many chains as the maximum induced matching has edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .graph_core import CompactConvexGraph, Edge, InvariantViolation
from .unweighted import RowColoring


class InconsistentColorings(ValueError):
    pass


class ChainEntry(NamedTuple):
    row: int
    b_hat: int
    e: int


@dataclass(frozen=True)
class ChainCover:
    """``chains[w - 1]`` lists the extended row intervals of chain ``w``."""

    w_star: int
    chains: tuple[tuple[ChainEntry, ...], ...]

    def quadruples(self) -> Iterator[tuple[int, int, int, int]]:
        """Yield ``(w, row, b_hat, e)`` for every entry."""
        for w, chain in enumerate(self.chains, 1):
            for row, b_hat, e in chain:
                yield w, row, b_hat, e

    @property
    def entry_count(self) -> int:
        return sum(len(c) for c in self.chains)

    @classmethod
    def from_quadruples(cls, w_star: int, quads) -> "ChainCover":
        """Group quadruples by chain.  Labels above ``w_star`` are kept as
        extra trailing chains so that a certifier can still reject them."""
        quads = list(quads)
        top = max([w_star, *(q[0] for q in quads)])
        chains: list[list[ChainEntry]] = [[] for _ in range(max(top, 0))]
        for w, row, b_hat, e in quads:
            if w < 1:
                raise ValueError(f"chain labels must be positive, got {w}")
            chains[w - 1].append(ChainEntry(row, b_hat, e))
        return cls(w_star, tuple(tuple(c) for c in chains))


def _validate(g: CompactConvexGraph, colorings: Sequence[RowColoring]) -> None:
    seen = set()
    for c in colorings:
        if not 1 <= c.row <= g.n_u or g.rows[c.row - 1] is None:
            raise InconsistentColorings(f"coloring for row {c.row}, which has no interval")
        if c.row in seen:
            raise InconsistentColorings(f"row {c.row} colored twice")
        seen.add(c.row)
        L, R = g.rows[c.row - 1]
        if c.w < 1 or c.b != L:
            raise InconsistentColorings(f"row {c.row}: first span must start at {L}")
        end = c.e
        if c.b2 is not None:
            if c.b2 != c.e + 1 or c.e2 is None or c.e2 < c.b2:
                raise InconsistentColorings(f"row {c.row}: spans are not adjacent")
            end = c.e2
        if c.e < c.b or end != R:
            raise InconsistentColorings(f"row {c.row}: spans do not cover [{L}, {R}]")
    missing = sum(r is not None for r in g.rows) - len(seen)
    if missing:
        raise InconsistentColorings(f"{missing} non-empty rows have no coloring")


def minimum_chain_cover(
    g: CompactConvexGraph, colorings: Sequence[RowColoring], *, debug: bool = False
) -> ChainCover:
    """Build the chain cover in O(n_u + n_v).

    Raises:
        InconsistentColorings: if the colorings do not describe ``g``.
    """
    _validate(g, colorings)
    nv = g.n_v
    w_star = max((c.top for c in colorings), default=0)

    # Triples (B, E, w) with their row, bucket-sorted by E; ascending row
    # index inside a bucket.
    by_row: list = [None] * (g.n_u + 1)
    for c in colorings:
        by_row[c.row] = c
    triples = [(b, e, w, c.row) for c in by_row if c is not None for w, b, e in c.segments()]
    count = [0] * (nv + 2)
    for t in triples:
        count[t[1] + 1] += 1
    for r in range(1, nv + 2):
        count[r] += count[r - 1]
    by_end = [None] * len(triples)
    for t in triples:
        by_end[count[t[1]]] = t
        count[t[1]] += 1

    G = [nv + 1] * (w_star + 1)
    chains: list[list[ChainEntry]] = [[] for _ in range(w_star)]
    hats = {} if debug else None
    start = 0
    while start < len(by_end):
        stop = start
        r = by_end[start][1]
        while stop < len(by_end) and by_end[stop][1] == r:
            stop += 1
        for b, e, w, row in by_end[start:stop]:
            b_hat = b if b < G[w] else G[w]
            chains[w - 1].append(ChainEntry(row, b_hat, e))
            if hats is not None:
                hats[(w, row)] = b_hat
        for b, _, w, _ in by_end[start:stop]:
            if b < G[w]:
                G[w] = b
        start = stop

    if debug:
        _check_extension_rules(g, triples, hats)
    return ChainCover(w_star, tuple(tuple(c) for c in chains))


def expand_cover_edges(g: CompactConvexGraph, cover: ChainCover) -> list[list[Edge]]:
    """Explicit edge list of every chain, in O(n + m)."""
    return [[Edge(row, v) for row, b_hat, e in chain for v in range(b_hat, e + 1)] for chain in cover.chains]


def _check_extension_rules(g, triples, hats) -> None:
    """Compare the sweep's stretched starts with both closed-form definitions
    (minimum over original starts, minimum over stretched starts)."""
    by_value: dict[int, list[tuple[int, int, int]]] = {}
    for b, e, w, row in triples:
        by_value.setdefault(w, []).append((b, e, row))
    for w, segs in by_value.items():
        from_original = {row: min([b] + [b2 for b2, e2, _ in segs if e2 < e]) for b, e, row in segs}
        from_stretched: dict[int, int] = {}
        for b, e, row in sorted(segs, key=lambda s: s[1]):
            from_stretched[row] = min([b] + [from_stretched[r2] for b2, e2, r2 in segs if e2 < e])
        for b, e, row in segs:
            got = hats[(w, row)]
            if not got == from_original[row] == from_stretched[row]:
                raise InvariantViolation(
                    f"chain {w}, row {row}: sweep {got}, original-start rule {from_original[row]}, "
                    f"stretched-start rule {from_stretched[row]}"
                )
            if got < g.rows[row - 1][0]:
                raise InvariantViolation(f"chain {w}, row {row}: stretched start {got} leaves the row")
