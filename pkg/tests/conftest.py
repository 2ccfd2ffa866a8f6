import random

import pytest
from hypothesis import strategies as st

from convexmatch import CompactConvexGraph, WeightedConvexGraph


@st.composite
def convex_graphs(draw, max_nu=6, max_nv=6, min_nu=0):
    n_v = draw(st.integers(1, max_nv))
    n_u = draw(st.integers(min_nu, max_nu))
    rows = []
    for _ in range(n_u):
        if draw(st.integers(0, 7)) == 0:
            rows.append(None)
        else:
            a = draw(st.integers(1, n_v))
            b = draw(st.integers(1, n_v))
            rows.append((min(a, b), max(a, b)))
    return CompactConvexGraph(n_u, n_v, tuple(rows))


@st.composite
def weighted_graphs(draw, max_nu=5, max_nv=5, lo=-3, hi=3):
    g = draw(convex_graphs(max_nu, max_nv))
    weights = [
        () if r is None else tuple(draw(st.integers(lo, hi)) for _ in range(r[1] - r[0] + 1))
        for r in g.rows
    ]
    return WeightedConvexGraph(g, tuple(weights))


def random_graph(rng: random.Random, max_nu: int, max_nv: int) -> CompactConvexGraph:
    n_u, n_v = rng.randint(1, max_nu), rng.randint(1, max_nv)
    rows = []
    for _ in range(n_u):
        if rng.random() < 0.1:
            rows.append(None)
        else:
            a, b = rng.randint(1, n_v), rng.randint(1, n_v)
            rows.append((min(a, b), max(a, b)))
    return CompactConvexGraph(n_u, n_v, tuple(rows))


def disjoint_rows(k: int) -> CompactConvexGraph:
    return CompactConvexGraph(k, k, tuple((i, i) for i in range(1, k + 1)))


# Reference example: five U vertices over six V vertices with thirteen edges;
# its largest induced matching has three edges and three chains cover it.
REFERENCE_GRAPH = CompactConvexGraph(5, 6, ((1, 3), (2, 3), (2, 6), (4, 5), (6, 6)))


@pytest.fixture
def reference_graph():
    return REFERENCE_GRAPH
