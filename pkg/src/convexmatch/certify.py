"""Linear-time checker for (induced matching, chain cover) certificates.

A valid induced matching and a valid chain cover of the same size prove
each other optimal.  The checks here treat every input as untrusted,
use only bucket sorts, and do not rely on any solver code, so they can
vouch for a result without trusting the algorithm that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import chain
from operator import itemgetter
from typing import TYPE_CHECKING, Any, Callable, Optional, Sequence

from .graph_core import CompactConvexGraph

if TYPE_CHECKING:
    from .chain_cover import ChainCover

EDGE_NOT_IN_GRAPH = "EdgeNotInGraph"
DUPLICATE_ENDPOINT = "DuplicateEndpoint"
DEPENDENT_PAIR = "DependentPair"
NOT_NESTED = "NotNested"
COVERAGE_GAP = "CoverageGap"
OUTSIDE_GRAPH = "OutsideGraph"
MALFORMED = "Malformed"
SIZE_MISMATCH = "SizeMismatch"


@dataclass(frozen=True)
class Reason:
    category: str
    details: dict[str, Any] = field(default_factory=dict)

    def __str__(self) -> str:
        parts = [self.category]
        parts.extend(f"{k}={_fmt(v)}" for k, v in self.details.items())
        return " ".join(parts)


@dataclass(frozen=True)
class Verdict:
    valid: bool
    reason: Optional[Reason] = None

    @property
    def category(self) -> Optional[str]:
        return None if self.reason is None else self.reason.category

    def __bool__(self) -> bool:
        return self.valid


VALID = Verdict(True)


def _fail(category: str, **details) -> Verdict:
    return Verdict(False, Reason(category, details))


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)):
        return ",".join(_fmt(x) for x in v)
    return str(v)


def _bucket_sort(items: list, key: Callable[[Any], int], size: int) -> list:
    """Stable bucket sort for integer keys in ``0..size - 1``."""
    buckets: list[list] = [[] for _ in range(size)]
    for k, it in zip(map(key, items), items):
        buckets[k].append(it)
    return list(chain.from_iterable(buckets))


def _radix_sort(items: list, key: Callable[[Any], int], max_key: int) -> list:
    """Stable LSD radix sort; handles keys too large for one bucket array."""
    base = max(16, len(items) + 1)
    if max_key < base:
        return _bucket_sort(items, key, max_key + 1)
    shift = 1
    while shift <= max_key:
        items = _bucket_sort(items, lambda it, s=shift: key(it) // s % base, base)
        shift *= base
    return items


def _is_int(x) -> bool:
    # bool is an int subclass; exact type also keeps out numpy scalars.
    return type(x) is int


def check_induced_matching(g: CompactConvexGraph, matching: Sequence) -> Verdict:
    """Check that ``matching`` is an induced matching of ``g`` in O(n).

    After sorting by V-endpoint it suffices to test neighbouring edges:
    independence of consecutive pairs carries over to all pairs.
    """
    edges = []
    for k, e in enumerate(matching):
        try:
            u, v = e
        except (TypeError, ValueError):
            return _fail(MALFORMED, index=k)
        if not (_is_int(u) and _is_int(v)) or not g.has_edge(u, v):
            return _fail(EDGE_NOT_IN_GRAPH, u=u, v=v)
        edges.append((u, v))
    ordered = _bucket_sort(edges, itemgetter(1), g.n_v + 1)
    for a, b in zip(ordered, ordered[1:]):
        if a[1] == b[1]:
            return _fail(DUPLICATE_ENDPOINT, v=a[1], edges=[a, b])
    rows = g.rows
    for a, b in zip(ordered, ordered[1:]):
        la, ra = rows[a[0] - 1]
        lb, rb = rows[b[0] - 1]
        if la <= b[1] <= ra or lb <= a[1] <= rb:
            return _fail(DEPENDENT_PAIR, first=a, second=b)
    return VALID


def check_chain_cover(g: CompactConvexGraph, cover: "ChainCover") -> Verdict:
    """Check that ``cover`` is a chain cover of ``g`` in O(n).

    Every entry must be a sub-interval of its row, and a row may enter
    each chain at most once; within a chain the
    intervals must be nested; and the entries of each row must together
    cover the row's interval without a gap.
    """
    nu, nv = g.n_u, g.n_v
    w_star = cover.w_star
    if not _is_int(w_star) or w_star < 0:
        return _fail(MALFORMED, w_star=w_star)
    quads = []
    seen = set()
    for q in cover.quadruples():
        try:
            w, row, b_hat, e = q
        except (TypeError, ValueError):
            return _fail(MALFORMED, entry=q)
        if not type(w) is type(row) is type(b_hat) is type(e) is int:
            return _fail(MALFORMED, entry=q)
        if not 1 <= w <= w_star:
            return _fail(MALFORMED, w=w, w_star=w_star)
        if not 1 <= row <= nu or not 1 <= b_hat <= e <= nv:
            return _fail(MALFORMED, w=w, row=row, b_hat=b_hat, e=e)
        r = g.rows[row - 1]
        if r is None or b_hat < r[0] or e > r[1]:
            return _fail(OUTSIDE_GRAPH, row=row, w=w, b_hat=b_hat, e=e)
        # A row enters a chain through one interval at most.
        if (w, row) in seen:
            return _fail(MALFORMED, w=w, row=row, repeated=True)
        seen.add((w, row))
        quads.append((w, row, b_hat, e))

    # Nesting: order by (w, b_hat, -e); in each chain e must not grow.
    nest = _bucket_sort(quads, itemgetter(3), nv + 1)
    nest.reverse()
    nest = _bucket_sort(nest, itemgetter(2), nv + 1)
    nest = _radix_sort(nest, itemgetter(0), w_star)
    for a, b in zip(nest, nest[1:]):
        if a[0] == b[0] and b[3] > a[3]:
            return _fail(NOT_NESTED, w=a[0], entries=[(a[1], a[2], a[3]), (b[1], b[2], b[3])])

    # Coverage: order by (row, b_hat) and grow each row's union.
    cov = _bucket_sort(quads, itemgetter(2), nv + 1)
    cov = _bucket_sort(cov, itemgetter(1), nu + 1)
    k = 0
    for row, r in enumerate(g.rows, 1):
        if r is None:
            continue
        L, R = r
        reach = L - 1
        while k < len(cov) and cov[k][1] == row:
            _, _, b_hat, e = cov[k]
            if b_hat > reach + 1:
                return _fail(COVERAGE_GAP, row=row, position=reach + 1)
            if e > reach:
                reach = e
            k += 1
        if reach < R:
            return _fail(COVERAGE_GAP, row=row, position=reach + 1)
    return VALID


def check_certificate(g: CompactConvexGraph, matching: Sequence, cover: "ChainCover") -> Verdict:
    """Both parts valid and of equal size certify that both are optimal."""
    verdict = check_induced_matching(g, matching)
    if not verdict.valid:
        return verdict
    verdict = check_chain_cover(g, cover)
    if not verdict.valid:
        return verdict
    if len(matching) != cover.w_star:
        return _fail(SIZE_MISMATCH, matching_size=len(matching), w_star=cover.w_star)
    return VALID
