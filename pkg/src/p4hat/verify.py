"""Machine checks for the counting lemmas behind the floor(n*n/8) bound.

Each check takes one graph and returns None on pass or a short failure
detail.  Calling a check outside its hypothesis class raises
PreconditionError: a graph that is not even in the hypothesis is not a
counterexample.  run_suite sweeps every labeled graph on 0..max_n
vertices, using vectorized mask prefilters to pick out each hypothesis
class and running the per-graph checks on the members.

The battery, with hypothesis classes:

* private-edges: no K4, no suspension of P4.  Every triangle has at
  least two edges lying in no other triangle.
* g-prime: same class.  Keeping the two lexicographically smallest
  private edges of each triangle yields a graph with exactly 2t edges
  and no triangle.
* mantel: triangle-free graphs have at most floor(n*n/4) edges.
* k4-attachment: no suspension of P4, at least one K4.  A vertex
  outside a K4 is adjacent to at most one of its four vertices.
* triangle-degree: no suspension of P4.  Each vertex lies in at most
  deg(v) triangles, since its neighborhood spans only stars and
  triangles.
* k4-free-bound: no K4, no suspension of P4.  At most floor(n*n/8)
  triangles; the chain of the previous lemmas made exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import universe
from .detect import is_k4_free, is_p4hat_free, triangle_degree
from .errors import PreconditionError, ScaleError
from .graphs import Graph, bits, to_graph6, triangle_count, triangles

__all__ = [
    "LEMMA_IDS",
    "VerificationReport",
    "check_private_edges",
    "derive_g_prime",
    "check_mantel",
    "check_k4_attachment",
    "check_triangle_degree_bound",
    "run_suite",
    "reports_to_json",
]

LEMMA_IDS = (
    "private-edges",
    "g-prime",
    "mantel",
    "k4-attachment",
    "triangle-degree",
    "k4-free-bound",
)


@dataclass
class VerificationReport:
    lemma_id: str
    universe: str
    checked: int
    failures: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "universe": self.universe,
            "checked": self.checked,
            "failures": self.failures,
        }


def reports_to_json(reports: list[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise PreconditionError(f"graph is outside the hypothesis class: {what}")


def _edge_mult(adj, a: int, b: int) -> int:
    return (adj[a] & adj[b]).bit_count()


def _private_pairs(adj, tri: tuple[int, int, int]) -> list[tuple[int, int]]:
    """Edges of the triangle lying in no other triangle, in lex order."""
    a, b, c = tri
    return [
        e
        for e in ((a, b), (a, c), (b, c))
        if _edge_mult(adj, *e) == 1
    ]


def check_private_edges(g: Graph) -> str | None:
    """Every triangle must own two edges that no other triangle uses."""
    _require(is_p4hat_free(g), "contains a suspension of P4")
    _require(is_k4_free(g), "contains K4")
    return _check_private_edges_raw(g)


def _check_private_edges_raw(g: Graph) -> str | None:
    adj = g.adj
    for tri in triangles(g):
        if len(_private_pairs(adj, tri)) < 2:
            return f"triangle {tri} has fewer than two private edges"
    return None


def derive_g_prime(g: Graph) -> Graph:
    """Two lexicographically smallest private edges of each triangle.

    Private edges belong to exactly one triangle, so distinct triangles
    contribute disjoint pairs and the result has exactly 2t edges.
    """
    _require(is_p4hat_free(g), "contains a suspension of P4")
    _require(is_k4_free(g), "contains K4")
    return _derive_g_prime_raw(g)


def _derive_g_prime_raw(g: Graph) -> Graph:
    adj = g.adj
    edges = []
    for tri in triangles(g):
        pairs = _private_pairs(adj, tri)
        if len(pairs) < 2:
            raise PreconditionError(
                f"triangle {tri} has fewer than two private edges"
            )
        edges.extend(pairs[:2])
    return Graph(g.n, edges)


def _check_g_prime_raw(g: Graph) -> str | None:
    try:
        gp = _derive_g_prime_raw(g)
    except PreconditionError as exc:
        return str(exc)
    t = triangle_count(g)
    if gp.edge_count() != 2 * t:
        return f"derived graph has {gp.edge_count()} edges, expected {2 * t}"
    if triangle_count(gp) != 0:
        return "derived graph contains a triangle"
    return None


def check_mantel(g: Graph) -> str | None:
    """Triangle-free graphs carry at most floor(n*n/4) edges.

    Vacuous pass when g has a triangle; no precondition.
    """
    if triangle_count(g) != 0:
        return None
    bound = g.n * g.n // 4
    m = g.edge_count()
    if m > bound:
        return f"{m} edges exceeds floor(n*n/4) = {bound}"
    return None


def _k4s(g: Graph):
    adj = g.adj
    for a in range(g.n):
        above_a = adj[a] >> (a + 1) << (a + 1)
        for b in bits(above_a):
            com_ab = adj[a] & adj[b] >> (b + 1) << (b + 1)
            for c in bits(com_ab):
                com_abc = com_ab & adj[c] >> (c + 1) << (c + 1)
                for d in bits(com_abc):
                    yield (a, b, c, d)


def check_k4_attachment(g: Graph, u4) -> str | None:
    """No vertex outside the given K4 sees two of its vertices."""
    quad = tuple(sorted(u4))
    _require(len(quad) == 4, "u4 must list four distinct vertices")
    _require(
        all(0 <= v < g.n for v in quad) and len(set(quad)) == 4,
        "u4 must list four distinct vertices",
    )
    _require(
        all(g.has_edge(a, b) for a, b in combinations(quad, 2)),
        "u4 does not induce a K4",
    )
    _require(is_p4hat_free(g), "contains a suspension of P4")
    return _attachment_failure(g, quad)


def _attachment_failure(g: Graph, quad) -> str | None:
    adj = g.adj
    umask = 0
    for v in quad:
        umask |= 1 << v
    outside = ((1 << g.n) - 1) & ~umask
    for v in bits(outside):
        hits = (adj[v] & umask).bit_count()
        if hits > 1:
            return f"vertex {v} is adjacent to {hits} vertices of K4 {quad}"
    return None


def _check_k4_attachment_raw(g: Graph) -> str | None:
    for quad in _k4s(g):
        detail = _attachment_failure(g, quad)
        if detail is not None:
            return detail
    return None


def check_triangle_degree_bound(g: Graph) -> str | None:
    """Triangle degree never beats vertex degree."""
    _require(is_p4hat_free(g), "contains a suspension of P4")
    return _check_triangle_degree_raw(g)


def _check_triangle_degree_raw(g: Graph) -> str | None:
    for v in range(g.n):
        td = triangle_degree(g, v)
        dg = g.degree(v)
        if td > dg:
            return f"vertex {v} lies in {td} triangles but has degree {dg}"
    return None


_UNIVERSES = {
    "private-edges": "labeled graphs, no K4, no suspension of P4",
    "g-prime": "labeled graphs, no K4, no suspension of P4",
    "mantel": "labeled triangle-free graphs",
    "k4-attachment": "labeled graphs, no suspension of P4, with a K4",
    "triangle-degree": "labeled graphs, no suspension of P4",
    "k4-free-bound": "labeled graphs, no K4, no suspension of P4",
}

_CHUNK = 50_000


def _fail(n: int, code: int, detail: str) -> dict:
    return {
        "graph6": to_graph6(universe.graph_from_code(n, code)),
        "detail": detail,
    }


def _private_chunk(args) -> tuple[list, list]:
    """Worker for private-edges and g-prime over one code chunk."""
    n, codes = args
    f1, f2 = [], []
    for code in codes:
        g = universe.graph_from_code(n, code)
        d = _check_private_edges_raw(g)
        if d is not None:
            f1.append((code, d))
        d = _check_g_prime_raw(g)
        if d is not None:
            f2.append((code, d))
    return f1, f2


def _attach_chunk(args) -> list:
    n, codes = args
    out = []
    for code in codes:
        g = universe.graph_from_code(n, code)
        d = _check_k4_attachment_raw(g)
        if d is not None:
            out.append((code, d))
    return out


def run_suite(max_n: int, threads: int = 1) -> list[VerificationReport]:
    """Check the whole battery over every labeled graph on 0..max_n vertices.

    max_n <= 7: the sweep at 7 already covers 2**21 graphs.  Hypothesis
    classes are cut out with vectorized mask tests; the per-graph check
    functions then run on every member that can fail nontrivially.
    Failures record the labeled counterexample as graph6 plus a detail
    line.  Reports are deterministic for any thread count.
    """
    if max_n > universe.MAX_SCAN_N:
        raise ScaleError(
            f"suite supports max_n <= {universe.MAX_SCAN_N}, got {max_n}"
        )
    reports = {
        lid: VerificationReport(lid, _UNIVERSES[lid], 0) for lid in LEMMA_IDS
    }
    from .search import _run_jobs  # shared worker-pool helper

    for n in range(max_n + 1):
        sc = universe.scan(n)
        codes = np.arange(sc.total, dtype=np.uint32)
        both = sc.p4hat_free & sc.k4_free
        trifree = sc.tri == 0
        with_k4 = sc.p4hat_free & ~sc.k4_free

        # k4-free-bound: vectorized count against the floor.
        reports["k4-free-bound"].checked += int(both.sum())
        for code in codes[both & (sc.tri > n * n // 8)]:
            t = int(sc.tri[code])
            reports["k4-free-bound"].failures.append(
                _fail(n, int(code), f"{t} triangles exceeds floor(n*n/8) = {n * n // 8}")
            )

        # mantel: vectorized edge count against the floor.
        reports["mantel"].checked += int(trifree.sum())
        popc = np.bitwise_count(codes)
        for code in codes[trifree & (popc > n * n // 4)]:
            g = universe.graph_from_code(n, int(code))
            reports["mantel"].failures.append(
                _fail(n, int(code), check_mantel(g) or "")
            )

        # triangle-degree: vectorized tdeg and deg per vertex.
        reports["triangle-degree"].checked += int(sc.p4hat_free.sum())
        tmasks = universe.triangle_masks(n)
        for v in range(n):
            tdeg = np.zeros(sc.total, dtype=np.uint8)
            for verts, m in tmasks:
                if v in verts:
                    tdeg += (codes & m) == m
            deg = np.bitwise_count(codes & np.uint32(universe.incident_edge_mask(n, v)))
            for code in codes[sc.p4hat_free & (tdeg > deg)]:
                g = universe.graph_from_code(n, int(code))
                reports["triangle-degree"].failures.append(
                    _fail(n, int(code), _check_triangle_degree_raw(g) or "")
                )

        # private-edges and g-prime: per-graph on graphs with triangles
        # (triangle-free members pass vacuously).
        reports["private-edges"].checked += int(both.sum())
        reports["g-prime"].checked += int(both.sum())
        cand = [int(c) for c in codes[both & (sc.tri > 0)]]
        jobs = [
            (n, cand[i : i + _CHUNK]) for i in range(0, len(cand), _CHUNK)
        ] or [(n, [])]
        for f1, f2 in _run_jobs(_private_chunk, jobs, threads):
            for code, d in f1:
                reports["private-edges"].failures.append(_fail(n, code, d))
            for code, d in f2:
                reports["g-prime"].failures.append(_fail(n, code, d))

        # k4-attachment: per-graph on suspension-free graphs with a K4.
        reports["k4-attachment"].checked += int(with_k4.sum())
        cand = [int(c) for c in codes[with_k4]]
        jobs = [
            (n, cand[i : i + _CHUNK]) for i in range(0, len(cand), _CHUNK)
        ] or [(n, [])]
        for out in _run_jobs(_attach_chunk, jobs, threads):
            for code, d in out:
                reports["k4-attachment"].failures.append(_fail(n, code, d))

    return [reports[lid] for lid in LEMMA_IDS]
