"""The bipartite-plus-matching family and the 7-vertex double-K4.

The family: split n vertices into parts A and B as evenly as the
matching inside A allows, join A to B completely, and add a perfect
matching on A.  Each matching edge spans |B| triangles and nothing
else does, so the count is |A|/2 * |B| = floor(n*n/8) for the right
part sizes.
"""

import pytest

from p4hat.constructions import (
    construction_parts,
    extremal_construction,
    predicted_extremal_value,
    two_k4_shared_vertex,
)
from p4hat.detect import (
    STAR,
    classify_components,
    is_k4_free,
    is_p4hat_free,
    triangle_degree,
)
from p4hat.graphs import (
    edge_triangle_multiplicity,
    induced_subgraph,
    triangle_count,
)
from p4hat.search import ForbiddenSet, ex_naive


@pytest.mark.parametrize(
    "n, a, msize",
    [
        (4, 2, 1),
        (5, 2, 1),
        (6, 2, 1),
        (7, 4, 2),
        (8, 4, 2),
        (9, 4, 2),
        (10, 4, 2),
        (11, 6, 3),
        (12, 6, 3),
    ],
)
def test_construction_parts_cases(n, a, msize):
    assert construction_parts(n) == (a, msize)


def test_construction_parts_shape():
    for n in range(4, 300):
        a, msize = construction_parts(n)
        assert a == 2 * msize
        assert 2 <= a <= n
        # matched part times opposite part hits the floor exactly
        assert msize * (n - a) == n * n // 8


def test_triangle_counts_match_floor():
    for n in range(4, 80):
        g = extremal_construction(n)
        assert triangle_count(g) == n * n // 8
        assert predicted_extremal_value(n) == n * n // 8


def test_construction_is_pattern_free():
    for n in range(4, 41):
        g = extremal_construction(n)
        assert is_p4hat_free(g)
        assert is_k4_free(g)


def test_construction_structure():
    g = extremal_construction(8)
    a, msize = construction_parts(8)
    assert a == 4 and msize == 2
    # matching pairs (0,1) and (2,3); everything in A joined to all of B
    assert g.has_edge(0, 1) and g.has_edge(2, 3)
    assert not g.has_edge(0, 2) and not g.has_edge(1, 3)
    for u in range(a):
        for v in range(a, 8):
            assert g.has_edge(u, v)
    for u in range(a, 8):
        for v in range(u + 1, 8):
            assert not g.has_edge(u, v)


def test_matching_edge_multiplicity():
    g = extremal_construction(8)
    assert edge_triangle_multiplicity(g, (0, 1)) == 4
    # cross edges lie in exactly one triangle: the one via the partner
    assert edge_triangle_multiplicity(g, (0, 4)) == 1


def test_neighborhoods_decompose_into_stars():
    for n in (8, 12, 13, 14, 15):
        g = extremal_construction(n)
        for v in range(n):
            nbhd = induced_subgraph(g, g.neighbors(v))
            assert all(c.kind == STAR for c in classify_components(nbhd))


def test_construction_achieves_maximum_when_k4_also_forbidden():
    fs = ForbiddenSet(k4=True)
    for n in range(4, 7):
        assert triangle_count(extremal_construction(n)) == ex_naive(n, fs).max_triangles


def test_rejects_tiny_n():
    for n in (-1, 0, 1, 2, 3):
        with pytest.raises(ValueError):
            extremal_construction(n)


def test_two_k4_shared_vertex():
    g = two_k4_shared_vertex()
    assert g.n == 7
    assert triangle_count(g) == 8
    assert is_p4hat_free(g)
    assert not is_k4_free(g)
    assert g.degree(0) == 6
    assert triangle_degree(g, 0) == 6
    assert sorted(g.degree(v) for v in range(7)) == [3, 3, 3, 3, 3, 3, 6]
