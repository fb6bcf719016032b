"""Lemma battery: hypothesis gating, failure details, and the sweep.

The lemmas are theorems, so the sweep can never produce a failure on
real input; the failure paths are exercised through the raw internals
on graphs outside the hypothesis classes.  Checked counts per class are
cross-validated against direct per-graph membership tests at small n,
then frozen for the larger sweeps.
"""

import json

import pytest

from p4hat.constructions import extremal_construction, two_k4_shared_vertex
from p4hat.detect import is_k4_free, is_p4hat_free
from p4hat.errors import PreconditionError, ScaleError
from p4hat.graphs import Graph, triangle_count
from p4hat.verify import (
    LEMMA_IDS,
    check_k4_attachment,
    check_mantel,
    check_private_edges,
    check_triangle_degree_bound,
    derive_g_prime,
    reports_to_json,
    run_suite,
    _check_g_prime_raw,
    _check_k4_attachment_raw,
    _check_triangle_degree_raw,
)

from test_graphs import complete, cycle, graph_from_mask


def bowtie():
    return Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def complete_bipartite(a, b):
    return Graph(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def test_private_edges_pass_cases():
    assert check_private_edges(complete(3)) is None
    assert check_private_edges(bowtie()) is None
    assert check_private_edges(extremal_construction(8)) is None
    assert check_private_edges(Graph(0, [])) is None


def test_private_edges_rejects_k4():
    with pytest.raises(PreconditionError):
        check_private_edges(complete(4))
    with pytest.raises(PreconditionError):
        check_private_edges(complete(5))  # fails both hypotheses


def test_g_prime_of_triangle_keeps_two_edges():
    gp = derive_g_prime(complete(3))
    assert gp.edge_count() == 2
    assert triangle_count(gp) == 0


def test_g_prime_of_construction_is_mantel_tight():
    g = extremal_construction(8)
    assert triangle_count(g) == 8
    gp = derive_g_prime(g)
    assert gp.edge_count() == 16 == gp.n * gp.n // 4
    assert triangle_count(gp) == 0
    assert check_mantel(gp) is None


def test_g_prime_raw_detail_on_k4():
    # Every K4 edge lies in two triangles, so no edge is private.
    detail = _check_g_prime_raw(complete(4))
    assert "fewer than two private edges" in detail
    with pytest.raises(PreconditionError):
        derive_g_prime(complete(4))


def test_mantel_pass_and_vacuous():
    assert check_mantel(complete_bipartite(3, 4)) is None  # 12 = floor(49/4)
    assert check_mantel(cycle(5)) is None
    assert check_mantel(complete(3)) is None  # has a triangle: vacuous
    assert check_mantel(complete(5)) is None
    assert check_mantel(Graph(1, [])) is None


def test_k4_attachment_accepts_the_counterexample_pair():
    g = two_k4_shared_vertex()
    assert check_k4_attachment(g, (0, 1, 2, 3)) is None
    assert check_k4_attachment(g, (0, 4, 5, 6)) is None
    assert check_k4_attachment(g, (3, 1, 2, 0)) is None  # order ignored


def test_k4_attachment_rejects_bad_input():
    g = two_k4_shared_vertex()
    with pytest.raises(PreconditionError):
        check_k4_attachment(g, (0, 1, 2, 4))  # not a clique
    with pytest.raises(PreconditionError):
        check_k4_attachment(g, (0, 1, 2))  # three vertices
    with pytest.raises(PreconditionError):
        check_k4_attachment(g, (0, 1, 2, 2))  # repeat
    with pytest.raises(PreconditionError):
        check_k4_attachment(g, (0, 1, 2, 9))  # out of range
    with pytest.raises(PreconditionError):
        check_k4_attachment(complete(5), (0, 1, 2, 3))  # has suspension


def test_k4_attachment_raw_detail():
    # K4 plus a vertex seeing two of it: a suspension appears, so the
    # public check refuses; the raw scan names the offending vertex.
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1)])
    assert not is_p4hat_free(g)
    detail = _check_k4_attachment_raw(g)
    assert detail == "vertex 4 is adjacent to 2 vertices of K4 (0, 1, 2, 3)"
    with pytest.raises(PreconditionError):
        check_k4_attachment(g, (0, 1, 2, 3))


def test_triangle_degree_pass_and_raw_detail():
    assert check_triangle_degree_bound(two_k4_shared_vertex()) is None
    assert check_triangle_degree_bound(extremal_construction(9)) is None
    with pytest.raises(PreconditionError):
        check_triangle_degree_bound(complete(5))
    assert (
        _check_triangle_degree_raw(complete(5))
        == "vertex 0 lies in 6 triangles but has degree 4"
    )


def test_suite_universe_sizes_match_direct_membership():
    # Recount every hypothesis class by decoding each labeled graph and
    # asking the detectors directly; the sweep's vectorized prefilters
    # must agree.
    reps = {r.lemma_id: r for r in run_suite(4)}
    counts = dict.fromkeys(LEMMA_IDS, 0)
    for n in range(5):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = graph_from_mask(n, mask)
            pf, kf = is_p4hat_free(g), is_k4_free(g)
            if pf and kf:
                for lid in ("private-edges", "g-prime", "k4-free-bound"):
                    counts[lid] += 1
            if triangle_count(g) == 0:
                counts["mantel"] += 1
            if pf:
                counts["triangle-degree"] += 1
            if pf and not kf:
                counts["k4-attachment"] += 1
    for lid in LEMMA_IDS:
        assert reps[lid].checked == counts[lid]
        assert reps[lid].failures == []


def test_suite_frozen_counts():
    assert [(r.lemma_id, r.checked, len(r.failures)) for r in run_suite(5)] == [
        ("private-edges", 958, 0),
        ("g-prime", 958, 0),
        ("mantel", 440, 0),
        ("k4-attachment", 26, 0),
        ("triangle-degree", 984, 0),
        ("k4-free-bound", 958, 0),
    ]


def test_suite_at_zero_checks_what_exists():
    reps = run_suite(0)
    checked = {r.lemma_id: r.checked for r in reps}
    assert checked["k4-attachment"] == 0  # no K4 fits in 0 vertices
    for lid in LEMMA_IDS:
        if lid != "k4-attachment":
            assert checked[lid] == 1  # the empty graph


def test_suite_rejects_large_n():
    with pytest.raises(ScaleError):
        run_suite(8)


def test_suite_json_and_thread_determinism():
    one = reports_to_json(run_suite(4, threads=1))
    two = reports_to_json(run_suite(4, threads=2))
    assert one == two
    assert one.endswith("\n")
    data = json.loads(one)
    assert [r["lemma_id"] for r in data] == list(LEMMA_IDS)
    assert all(list(r) == ["lemma_id", "universe", "checked", "failures"] for r in data)
