import math

import pytest
from hypothesis import given, strategies as st

from citemetrics import (CitationRecord, FidelityError, Publication,
                         authored_vector, h_index, hi_index, pure_h,
                         schreiber_hm)

pair_lists = st.lists(st.tuples(st.integers(min_value=0, max_value=60),
                                st.integers(min_value=1, max_value=10)),
                      max_size=25)


def test_authored_vector_orders_and_requires_authors():
    record = CitationRecord(entity="X", publications=(
        Publication(id="b", year=2001, author_count=2, citation_count=4),
        Publication(id="a", year=2000, authors=("P", "Q", "R"), citation_count=9),
    ))
    av = authored_vector(record)
    assert av.entries == ((9, 3), (4, 2))

    bare = CitationRecord(entity="X", publications=(
        Publication(id="a", year=2000, citation_count=9),))
    with pytest.raises(FidelityError, match="author count"):
        authored_vector(bare)


def test_hi_single_authored_is_h():
    pairs = [(9, 1), (7, 1), (4, 1), (1, 1)]
    assert hi_index(pairs, "mean") == h_index([c for c, _ in pairs])


def test_hi_uniform_core():
    pairs = [(8, 2), (7, 2), (6, 2), (5, 2)]
    assert hi_index(pairs, "mean") == 2.0


def test_hi_mean_vs_median_divergence():
    pairs = [(9, 10), (8, 1), (7, 1), (6, 1)]
    assert hi_index(pairs, "mean") == pytest.approx(4 / 3.25)
    assert hi_index(pairs, "median") == 4.0


def test_hi_even_core_median_is_midpoint():
    pairs = [(9, 5), (8, 3), (7, 2), (6, 1)]
    assert hi_index(pairs, "median") == pytest.approx(4 / 2.5)


def test_pure_h_cases():
    single = [(9, 1), (7, 1), (4, 1), (1, 1)]
    assert pure_h(single) == h_index([c for c, _ in single])
    uniform = [(8, 4), (7, 4), (6, 4), (5, 4)]
    assert pure_h(uniform) == 2.0
    skewed = [(9, 10), (8, 1), (7, 1), (6, 1)]
    assert pure_h(skewed) == pytest.approx(4 / math.sqrt(3.25))


def test_pure_h_score_override():
    pairs = [(9, 4), (8, 4), (7, 4), (6, 4)]
    # equal shares of 1/2 mean two equivalent authors regardless of the count
    assert pure_h(pairs, scores=[0.5, 0.5, 0.5, 0.5]) == pytest.approx(4 / math.sqrt(2))


def test_schreiber_hand_accumulations():
    assert schreiber_hm([(6, 2), (5, 1), (4, 2), (3, 1)]) == 3.0
    assert schreiber_hm([(2, 3), (1, 3)]) == pytest.approx(2 / 3)
    assert schreiber_hm([]) == 0.0


def test_schreiber_single_authored_is_h():
    pairs = [(5, 1), (4, 1), (4, 1), (2, 1), (1, 1)]
    assert schreiber_hm(pairs) == h_index([c for c, _ in pairs])


@given(pair_lists)
def test_all_single_author_collapse(pairs):
    pairs = [(c, 1) for c, _ in pairs]
    h = h_index([c for c, _ in pairs])
    assert hi_index(pairs, "mean") == h
    assert hi_index(pairs, "median") == h
    assert pure_h(pairs) == h
    assert schreiber_hm(pairs) == h


@given(pair_lists)
def test_schreiber_never_exceeds_h(pairs):
    assert schreiber_hm(pairs) <= h_index([c for c, _ in pairs])


@given(pair_lists.filter(bool), st.data())
def test_schreiber_monotone_in_citations(pairs, data):
    i = data.draw(st.integers(min_value=0, max_value=len(pairs) - 1))
    bumped = list(pairs)
    bumped[i] = (bumped[i][0] + 1, bumped[i][1])
    assert schreiber_hm(bumped) >= schreiber_hm(pairs)


@given(pair_lists)
def test_pure_h_at_least_mean_variant(pairs):
    # dividing by sqrt of the mean author count can only exceed dividing by it
    assert pure_h(pairs) >= hi_index(pairs, "mean") - 1e-12
