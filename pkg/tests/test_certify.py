import itertools
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import REFERENCE_GRAPH, convex_graphs, random_graph
from convexmatch import (
    ChainCover,
    ChainEntry,
    CompactConvexGraph,
    check_certificate,
    check_chain_cover,
    check_induced_matching,
    max_cardinality_induced_matching,
    minimum_chain_cover,
)
from convexmatch.certify import Reason
from convexmatch.formats import CoverClaim
from convexmatch.oracle import (
    all_pairs_induced_matching,
    brute_force_cardinality,
    cover_violation,
    enumerate_all_graphs,
)
from mutations import KINDS, expected_category, mutate


def solved(g):
    res = max_cardinality_induced_matching(g)
    return res.matching, minimum_chain_cover(g, res.colorings)


def test_empty_matching_is_valid():
    assert check_induced_matching(CompactConvexGraph(1, 1, ((1, 1),)), []).valid


def test_dependent_pair():
    g = CompactConvexGraph(2, 3, ((1, 3), (2, 2)))
    verdict = check_induced_matching(g, [(1, 1), (2, 2)])
    assert not verdict.valid
    assert verdict.category == "DependentPair"
    assert str(verdict.reason) == "DependentPair first=1,1 second=2,2"


def test_matching_categories():
    g = CompactConvexGraph(3, 4, ((1, 1), (3, 3), (3, 4)))
    assert check_induced_matching(g, [(1, 2)]).category == "EdgeNotInGraph"
    assert check_induced_matching(g, [(2, 3), (3, 3)]).category == "DuplicateEndpoint"
    assert check_induced_matching(g, [(1, 1), (2, 3)]).valid
    assert check_induced_matching(g, [(1, 1), (3, 4)]).valid
    assert check_induced_matching(g, [(2, 3), (3, 4)]).category == "DependentPair"


def test_single_full_row_cover():
    g = CompactConvexGraph(1, 4, ((1, 4),))
    assert check_chain_cover(g, ChainCover(1, ((ChainEntry(1, 1, 4),),))).valid


def test_crossing_entries_not_nested():
    g = CompactConvexGraph(2, 4, ((1, 3), (2, 4)))
    verdict = check_chain_cover(g, ChainCover(1, ((ChainEntry(1, 1, 3), ChainEntry(2, 2, 4)),)))
    assert verdict.category == "NotNested"


def test_equal_intervals_are_nested():
    g = CompactConvexGraph(2, 3, ((1, 3), (1, 3)))
    assert check_chain_cover(g, ChainCover(1, ((ChainEntry(1, 1, 3), ChainEntry(2, 1, 3)),))).valid


def test_cover_categories():
    g = CompactConvexGraph(2, 4, ((1, 2), (3, 4)))
    assert check_chain_cover(g, CoverClaim(2, ((1, 1, 1, 2),))).category == "CoverageGap"
    assert check_chain_cover(g, CoverClaim(2, ((1, 1, 1, 3),))).category == "OutsideGraph"
    assert check_chain_cover(g, CoverClaim(2, ((3, 1, 1, 2),))).category == "Malformed"
    assert check_chain_cover(g, CoverClaim(2, ((1, 1, 1, 1), (1, 1, 2, 2)))).category == "Malformed"
    assert check_chain_cover(g, CoverClaim(2, ((1, 1, 1, 2), (2, 2, 3, 4)))).valid


def test_size_mismatch():
    g = CompactConvexGraph(2, 2, ((1, 1), (2, 2)))
    cover = CoverClaim(2, ((1, 1, 1, 1), (2, 2, 2, 2)))
    assert check_certificate(g, [(1, 1), (2, 2)], cover).valid
    assert check_certificate(g, [(1, 1)], cover).category == "SizeMismatch"


def test_reference_graph_certificate():
    matching, cover = solved(REFERENCE_GRAPH)
    assert len(matching) == 3 and cover.w_star == 3
    assert check_certificate(REFERENCE_GRAPH, matching, cover).valid


def test_solver_outputs_certify():
    rng = random.Random(17)
    for _ in range(300):
        g = random_graph(rng, 60, 60)
        matching, cover = solved(g)
        assert check_certificate(g, matching, cover).valid


def test_deleting_a_cover_entry_is_classified_like_the_definition():
    rng = random.Random(23)
    for _ in range(100):
        g = random_graph(rng, 20, 20)
        _, cover = solved(g)
        quads = list(cover.quadruples())
        for k in range(len(quads)):
            rest = CoverClaim(cover.w_star, tuple(quads[:k] + quads[k + 1 :]))
            expected = cover_violation(g, cover.w_star, rest.quads)
            assert check_chain_cover(g, rest).category == expected


def test_matching_check_agrees_with_all_pairs():
    rng = random.Random(29)
    for g in enumerate_all_graphs(2, 4):
        edges = list(g.edges())
        for size in range(4):
            for matching in itertools.combinations(edges, size):
                assert check_induced_matching(g, matching).valid == all_pairs_induced_matching(g, matching)
    for _ in range(300):
        g = random_graph(rng, 8, 8)
        matching, _ = solved(g)
        assert check_induced_matching(g, matching).valid
        if g.edge_count == 0:
            continue
        perturbed = list(matching) + [rng.choice(list(g.edges()))]
        assert check_induced_matching(g, perturbed).valid == all_pairs_induced_matching(g, perturbed)


@st.composite
def cover_claims(draw, g):
    w_star = draw(st.integers(0, 3))
    quads = draw(
        st.lists(
            st.tuples(
                st.integers(0, w_star + 1),
                st.integers(0, g.n_u + 1),
                st.integers(0, g.n_v + 1),
                st.integers(0, g.n_v + 1),
            ),
            max_size=6,
        )
    )
    return CoverClaim(w_star, tuple(quads))


@settings(max_examples=500, deadline=None)
@given(st.data())
def test_cover_check_agrees_with_definition(data):
    g = data.draw(convex_graphs(max_nu=4, max_nv=4))
    claim = data.draw(cover_claims(g))
    assert check_chain_cover(g, claim).category == cover_violation(g, claim.w_star, claim.quads)


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_never_accepts_a_non_optimal_matching(data):
    g = data.draw(convex_graphs(max_nu=4, max_nv=4))
    edges = list(g.edges())
    matching = data.draw(st.lists(st.sampled_from(edges), max_size=3)) if edges else []
    claim = data.draw(cover_claims(g))
    if check_certificate(g, matching, claim).valid:
        assert len(matching) == claim.w_star == brute_force_cardinality(g)


def test_mutations_get_the_oracle_category():
    rng = random.Random(31)
    seen = set()
    for _ in range(400):
        g = random_graph(rng, 12, 12)
        matching, cover = solved(g)
        kind = rng.choice(KINDS)
        mutant = mutate(rng, g, matching, cover.w_star, list(cover.quadruples()), kind)
        if mutant is None:
            continue
        m2, w2, q2 = mutant
        verdict = check_certificate(g, m2, CoverClaim(w2, tuple(q2)))
        assert verdict.category == expected_category(g, m2, w2, q2)
        seen.add(kind)
    assert seen == set(KINDS)


def test_hostile_input_does_not_crash():
    g = CompactConvexGraph(2, 3, ((1, 2), None))
    assert check_induced_matching(g, [(2, 1)]).category == "EdgeNotInGraph"
    assert check_induced_matching(g, [("a", 1)]).category == "EdgeNotInGraph"
    assert check_induced_matching(g, [(True, 1)]).category == "EdgeNotInGraph"
    assert check_induced_matching(g, [(1,)]).category == "Malformed"
    assert check_induced_matching(g, [None]).category == "Malformed"
    assert check_chain_cover(g, CoverClaim(-1, ())).category == "Malformed"
    assert check_chain_cover(g, CoverClaim(1, ((1, 1, 1),))).category == "Malformed"
    assert check_chain_cover(g, CoverClaim(1, ((1, 1, 1, 2.0),))).category == "Malformed"
    assert check_chain_cover(g, CoverClaim(1, ((1, 2, 1, 1),))).category == "OutsideGraph"
    assert check_chain_cover(g, CoverClaim(1, ((1, 1, 2, 1),))).category == "Malformed"


def test_huge_labels_are_handled():
    g = CompactConvexGraph(2, 2, ((1, 1), (2, 2)))
    big = 10**15
    claim = CoverClaim(big, ((big, 1, 1, 1), (1, 2, 2, 2)))
    assert check_chain_cover(g, claim).valid
    assert check_certificate(g, [(1, 1), (2, 2)], claim).category == "SizeMismatch"
    crossing = CompactConvexGraph(2, 3, ((1, 2), (2, 3)))
    claim = CoverClaim(big, ((big, 1, 1, 2), (big, 2, 2, 3)))
    assert check_chain_cover(crossing, claim).category == "NotNested"


def test_reason_formatting():
    assert str(Reason("CoverageGap", {"row": 3, "position": 7})) == "CoverageGap row=3 position=7"
