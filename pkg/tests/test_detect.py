"""Forbidden-pattern detectors against independent oracles.

The mask oracle in the universe module enumerates pattern edge-sets
with itertools and tests them by subset inclusion, sharing no code with
the neighborhood-based detectors.  Small levels are compared
exhaustively; the full 2^21-graph level at n = 7 runs once in a single
combined sweep.  The star/triangle characterization is checked against
a direct enumeration of all graphs whose components are stars or
triangles, built from set partitions.
"""

import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from p4hat import universe
from p4hat.constructions import extremal_construction, two_k4_shared_vertex
from p4hat.detect import (
    OTHER,
    STAR,
    TRIANGLE,
    _has_p4_within,
    classify_components,
    contains_k4,
    contains_p4,
    find_p4hat,
    is_k4_free,
    is_p4hat_free,
    triangle_degree,
)
from p4hat.graphs import Graph, induced_subgraph, triangle_count

from test_graphs import complete, cycle, graph_from_mask, graphs, path


def star(k):
    """K_{1,k} with center 0."""
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def wheel4():
    """C4 plus an apex adjacent to all four rim vertices."""
    g = cycle(4)
    return g.with_vertex(0b1111)


def test_contains_p4_examples():
    assert contains_p4(complete(3)) is None
    assert contains_p4(star(5)) is None
    assert contains_p4(cycle(4)) == (0, 1, 2, 3)
    assert contains_p4(path(4)) == (0, 1, 2, 3)
    assert contains_p4(path(3)) is None


def test_contains_p4_witness_is_a_path():
    g = complete(5)
    w = contains_p4(g)
    a, x, y, b = w
    assert len({a, x, y, b}) == 4
    assert g.has_edge(a, x) and g.has_edge(x, y) and g.has_edge(y, b)


def test_classify_components_examples():
    g = Graph(7, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (3, 6)])
    kinds = classify_components(g)
    assert [c.kind for c in kinds] == [TRIANGLE, STAR]
    assert [c.vertices for c in kinds] == [(0, 1, 2), (3, 4, 5, 6)]

    assert [c.kind for c in classify_components(cycle(4))] == [OTHER]

    shared = two_k4_shared_vertex()
    nbhd = induced_subgraph(shared, shared.neighbors(0))
    assert [c.kind for c in classify_components(nbhd)] == [TRIANGLE, TRIANGLE]


def test_classify_components_degenerate_stars():
    g = Graph(3, [(1, 2)])
    kinds = classify_components(g)
    assert [c.kind for c in kinds] == [STAR, STAR]
    assert kinds[0].vertices == (0,)


def test_classify_components_partitions_vertices():
    g = Graph(6, [(0, 3), (1, 4), (2, 5), (0, 4)])
    comps = classify_components(g)
    seen = sorted(v for c in comps for v in c.vertices)
    assert seen == list(range(6))


def test_p4hat_examples():
    for n in range(8, 21):
        assert is_p4hat_free(extremal_construction(n))
    assert find_p4hat(wheel4()) is not None
    assert is_p4hat_free(two_k4_shared_vertex())
    assert find_p4hat(two_k4_shared_vertex()) is None


def test_p4hat_witness_tiebreak():
    w = find_p4hat(wheel4())
    assert w.apex == 4
    assert w.path == (0, 1, 2, 3)
    assert w.vertices == (0, 1, 2, 3, 4)


def test_contains_k4_examples():
    assert contains_k4(complete(4)) == (0, 1, 2, 3)
    for n in range(4, 41):
        assert contains_k4(extremal_construction(n)) is None


def test_k5_minus_two_matching_edges_has_no_k4():
    g = complete(5)
    rows = list(g.adj)
    for u, v in ((0, 1), (2, 3)):
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    g = Graph.from_rows(rows)
    brute = any(
        all(g.has_edge(a, b) for a, b in itertools.combinations(quad, 2))
        for quad in itertools.combinations(range(5), 4)
    )
    assert brute is False
    assert contains_k4(g) is None and is_k4_free(g)


def test_triangle_degree_examples():
    assert all(triangle_degree(complete(4), v) == 3 for v in range(4))
    shared = two_k4_shared_vertex()
    assert triangle_degree(shared, 0) == 6
    assert all(triangle_degree(shared, v) == 3 for v in range(1, 7))
    assert sum(triangle_degree(shared, v) for v in range(7)) == 24
    assert triangle_degree(star(4), 0) == 0


def all_star_or_triangle(g):
    return all(c.kind in (STAR, TRIANGLE) for c in classify_components(g))


def test_p4_free_iff_components_star_or_triangle_exhaustive_n5():
    for n in range(6):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = graph_from_mask(n, mask)
            assert (contains_p4(g) is None) == all_star_or_triangle(g)


def star_or_triangle_codes(n):
    """Codes of every labeled graph whose components are all stars or
    triangles, enumerated from set partitions."""
    idx = universe._edge_index(n)

    def partitions(rest):
        if not rest:
            yield []
            return
        first, others = rest[0], rest[1:]
        for k in range(len(others) + 1):
            for members in itertools.combinations(others, k):
                block = (first,) + members
                remaining = [v for v in others if v not in members]
                for tail in partitions(remaining):
                    yield [block] + tail

    def block_codes(block):
        k = len(block)
        if k == 1:
            yield 0
            return
        centers = block if k >= 3 else block[:1]
        for center in centers:
            code = 0
            for v in block:
                if v != center:
                    e = (min(center, v), max(center, v))
                    code |= 1 << idx[e]
            yield code
        if k == 3:
            a, b, c = block
            code = 0
            for e in ((a, b), (a, c), (b, c)):
                code |= 1 << idx[e]
            yield code

    out = set()
    for part in partitions(list(range(n))):
        for combo in itertools.product(*(set(block_codes(b)) for b in part)):
            code = 0
            for c in combo:
                code |= c
            out.add(code)
    return out


def test_star_or_triangle_enumeration_matches_classifier():
    for n in range(1, 6):
        codes = star_or_triangle_codes(n)
        direct = {
            mask
            for mask in range(1 << (n * (n - 1) // 2))
            if all_star_or_triangle(graph_from_mask(n, mask))
        }
        assert codes == direct


def test_exhaustive_n7_detectors_match_oracles():
    """One pass over all 2^21 labeled 7-vertex graphs: both pattern
    detectors against the mask oracle, triangle counts against the
    triple sweep, and path freeness against the star/triangle
    enumeration."""
    n = 7
    sc = universe.scan(n)
    stcodes = star_or_triangle_codes(n)
    pf, kf, tri = sc.p4hat_free, sc.k4_free, sc.tri
    gfc = universe.graph_from_code
    full = (1 << n) - 1
    for code in range(sc.total):
        g = gfc(n, code)
        assert is_p4hat_free(g) == bool(pf[code])
        assert is_k4_free(g) == bool(kf[code])
        assert triangle_count(g) == int(tri[code])
        assert (not _has_p4_within(g.adj, full)) == (code in stcodes)


def test_exhaustive_n6_detectors_match_oracles():
    n = 6
    sc = universe.scan(n)
    stcodes = star_or_triangle_codes(n)
    full = (1 << n) - 1
    for code in range(sc.total):
        g = universe.graph_from_code(n, code)
        assert is_p4hat_free(g) == bool(sc.p4hat_free[code])
        assert is_k4_free(g) == bool(sc.k4_free[code])
        assert triangle_count(g) == int(sc.tri[code])
        assert (not _has_p4_within(g.adj, full)) == (code in stcodes)


def deletion_code_map(n, v):
    """Bit gather map: edge bits of K_{n-1} (on the vertices != v,
    relabeled in sorted order) to their source bits in K_n."""
    keep = [u for u in range(n) if u != v]
    src = universe._edge_index(n)
    dst = universe._edge_index(n - 1)
    pairs = [None] * (len(keep) * (len(keep) - 1) // 2)
    for i, a in enumerate(keep):
        for j in range(i + 1, len(keep)):
            b = keep[j]
            pairs[dst[(i, j)]] = src[(a, b)]
    return pairs


def test_p4hat_freeness_closed_under_vertex_deletion_exhaustive_n7():
    for n in range(2, 8):
        sc = universe.scan(n)
        sub = universe.scan(n - 1)
        codes = np.arange(sc.total, dtype=np.int64)
        free = sc.p4hat_free
        for v in range(n):
            gather = deletion_code_map(n, v)
            child = np.zeros(sc.total, dtype=np.int64)
            for t, s in enumerate(gather):
                child |= ((codes >> s) & 1) << t
            bad = free & ~sub.p4hat_free[child]
            assert not bad.any()


def test_p4hat_containment_monotone_under_edge_addition_exhaustive_n6():
    for n in range(2, 7):
        sc = universe.scan(n)
        codes = np.arange(sc.total, dtype=np.int64)
        free = sc.p4hat_free
        nbits = n * (n - 1) // 2
        for b in range(nbits):
            bigger = codes | (1 << b)
            bad = free[bigger] & ~free
            assert not bad.any()


@given(graphs(max_n=8))
def test_find_p4hat_agrees_with_predicate(g):
    w = find_p4hat(g)
    assert (w is None) == is_p4hat_free(g)
    if w is not None:
        a, x, y, b = w.path
        assert len(set(w.path) | {w.apex}) == 5
        assert g.has_edge(a, x) and g.has_edge(x, y) and g.has_edge(y, b)
        for v in w.path:
            assert g.has_edge(w.apex, v)


@given(graphs(max_n=8))
def test_contains_k4_agrees_with_predicate(g):
    quad = contains_k4(g)
    assert (quad is None) == is_k4_free(g)
    if quad is not None:
        assert all(g.has_edge(a, b) for a, b in itertools.combinations(quad, 2))


@settings(deadline=None)
@given(graphs(max_n=7))
def test_p4hat_witness_is_least_sorted_five_set(g):
    w = find_p4hat(g)
    if w is None:
        return
    best = None
    for five in itertools.combinations(range(g.n), 5):
        sub = induced_subgraph(g, five)
        if not is_p4hat_free(sub):
            best = five
            break
    assert w.vertices == best


def test_empty_and_tiny_graphs_are_free():
    for n in range(3):
        g = graph_from_mask(n, (1 << (n * (n - 1) // 2)) - 1)
        assert is_p4hat_free(g) and is_k4_free(g)
        assert contains_p4(g) is None
