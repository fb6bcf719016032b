"""Exact maximum triangle counts over graphs avoiding forbidden patterns.

Three methods, trading scale for machinery:

* ex_naive sweeps every labeled graph (n <= 7) via the mask oracle.
* ex_augment grows one canonical class per isomorphism type, level by
  level: freeness is hereditary, so every free graph on m+1 vertices is
  some free m-vertex class plus one attachment mask.  Attachment masks
  are cut down to one representative per orbit of the parent's twin
  classes (vertices whose swap is an automorphism), and children are
  deduplicated by canonical form.  Returns every extremal class.
* ex_branch_bound runs a labeled depth-first search seeded with the
  bipartite construction as incumbent, pruning with the triangle-degree
  bound: a vertex inserted at position i closes at most i new triangles,
  because its neighborhood in a suspension-free graph spans at most
  |neighborhood| edges.

The suspension of P4 is always forbidden; K4 optionally.  Reports
serialize to JSON deterministically: reruns and different --threads
values produce byte-identical output except for elapsed_ms.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from multiprocessing import get_context

from . import universe
from .constructions import extremal_construction, predicted_extremal_value
from .detect import _has_p4_within, is_k4_free, is_p4hat_free
from .errors import ResourceBudgetError, ScaleError
from .graphs import (
    Graph,
    _from_upper_stream,
    bits,
    canonical_form,
    canonical_key,
    _twin_masks,
    to_graph6,
    triangle_count,
)

__all__ = [
    "ForbiddenSet",
    "SearchReport",
    "ex_naive",
    "ex_augment",
    "ex_branch_bound",
    "cheapest_exact",
    "f_row",
    "f_table",
    "FRow",
    "MAX_NAIVE_N",
    "MAX_AUGMENT_N",
    "MAX_BNB_N",
]

MAX_NAIVE_N = universe.MAX_SCAN_N
MAX_AUGMENT_N = 10
MAX_BNB_N = 12


@dataclass(frozen=True)
class ForbiddenSet:
    """Which patterns are excluded; the suspension of P4 always is."""

    k4: bool = False

    def labels(self) -> tuple[str, ...]:
        return ("p4hat", "k4") if self.k4 else ("p4hat",)

    @classmethod
    def parse(cls, text: str) -> "ForbiddenSet":
        parts = [p.strip() for p in text.split(",") if p.strip()]
        extra = set(parts) - {"p4hat", "k4"}
        if extra or "p4hat" not in parts:
            raise ValueError(
                f"forbidden set must be p4hat or p4hat,k4, got {text!r}"
            )
        return cls(k4="k4" in parts)

    def __str__(self) -> str:
        return ",".join(self.labels())

    def admits(self, g: Graph) -> bool:
        return is_p4hat_free(g) and (not self.k4 or is_k4_free(g))


@dataclass
class SearchReport:
    n: int
    forbidden: tuple[str, ...]
    method: str
    max_triangles: int
    witnesses: tuple[str, ...]
    nodes_explored: int
    elapsed_ms: int
    exact: bool

    @property
    def floor_n2_8(self) -> int:
        return self.n * self.n // 8

    @property
    def f(self) -> int:
        return self.max_triangles - self.floor_n2_8

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "forbidden": list(self.forbidden),
            "method": self.method,
            "max_triangles": self.max_triangles,
            "floor_n2_8": self.floor_n2_8,
            "f": self.f,
            "witnesses": list(self.witnesses),
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": self.elapsed_ms,
            "exact": self.exact,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _child_rows(adj: tuple[int, ...], mask: int) -> list[int]:
    """Adjacency rows after appending a vertex joined to mask."""
    rows = list(adj)
    new = len(rows)
    for u in bits(mask):
        rows[u] |= 1 << new
    rows.append(mask)
    return rows


def _mask_has_triangle(adj, mask: int) -> bool:
    rest = mask
    while rest:
        low = rest & -rest
        u = low.bit_length() - 1
        rest ^= low
        row = adj[u] & rest
        while row:
            lo2 = row & -row
            v = lo2.bit_length() - 1
            row ^= lo2
            if adj[u] & adj[v] & mask & ~low & ~lo2:
                return True
    return False


def _child_stays_free(adj: tuple[int, ...], mask: int, k4: bool) -> bool:
    """Whether a free parent stays free after attaching a vertex to mask.

    Any new pattern must use the new vertex, so only three shapes need
    checking: the new vertex as a suspension apex (a 4-path inside its
    neighborhood mask), the new vertex on the suspended path under some
    apex u in mask, and, when K4 is forbidden, a parent triangle inside
    mask.
    """
    if k4 and _mask_has_triangle(adj, mask):
        return False
    if _has_p4_within(adj, mask):
        return False
    rest = mask
    while rest:
        low = rest & -rest
        u = low.bit_length() - 1
        rest ^= low
        w = adj[u]
        t = mask & w
        if not t:
            continue
        # New vertex as a path endpoint: a in t, then 2 more steps in w.
        scan = t
        endpoint = False
        while scan:
            la = scan & -scan
            a = la.bit_length() - 1
            scan ^= la
            for b in bits(adj[a] & w):
                if adj[b] & w & ~la:
                    endpoint = True
                    break
            if endpoint:
                break
        if endpoint:
            return False
        # New vertex interior: path c - a - new - b, all of a, b, c under
        # apex u, with a and b adjacent to the new vertex.
        if t.bit_count() >= 2:
            scan = t
            while scan:
                la = scan & -scan
                a = la.bit_length() - 1
                scan ^= la
                tail = adj[a] & w
                if not tail:
                    continue
                others = t & ~la
                if others.bit_count() >= 2:
                    return False
                if tail & ~others:
                    return False
    return True


def _twin_components(g: Graph) -> list[list[int]]:
    """Vertex classes closed under twin swaps; any permutation inside a
    class extends to an automorphism."""
    twin = _twin_masks(g)
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = twin[v] & ~comp
        while frontier:
            comp |= frontier
            grow = 0
            for u in bits(frontier):
                grow |= twin[u]
            frontier = grow & ~comp
        seen |= comp
        comps.append(list(bits(comp)))
    return comps


def _extension_masks(g: Graph) -> list[int]:
    """One attachment mask per orbit under the parent's twin classes.

    Two masks meeting every twin class in the same number of vertices are
    automorphic images of each other, so only prefixes of each class are
    kept.  Complete: every free child of a free parent is reached.
    """
    comps = _twin_components(g)
    masks = [0]
    for comp in comps:
        prefixes = [0]
        acc = 0
        for v in comp:
            acc |= 1 << v
            prefixes.append(acc)
        masks = [m | p for m in masks for p in prefixes]
    return masks


def _expand_class(args) -> tuple[list[int], int]:
    """Worker: expand parent classes one level; returns child keys + mask count."""
    n_parent, streams, k4 = args
    out = []
    tried = 0
    for stream in streams:
        parent = _from_upper_stream(n_parent, stream)
        adj = parent.adj
        for mask in _extension_masks(parent):
            tried += 1
            if not _child_stays_free(adj, mask, k4):
                continue
            child = Graph._unchecked(n_parent + 1, _child_rows(adj, mask))
            out.append(canonical_key(child)[1])
    return out, tried


def _report(n, forbidden, method, best, witnesses, nodes, t0, exact) -> SearchReport:
    return SearchReport(
        n=n,
        forbidden=forbidden.labels(),
        method=method,
        max_triangles=best,
        witnesses=tuple(witnesses),
        nodes_explored=nodes,
        elapsed_ms=int((time.monotonic() - t0) * 1000),
        exact=exact,
    )


def ex_naive(n: int, forbidden: ForbiddenSet = ForbiddenSet()) -> SearchReport:
    """Maximum by sweeping all 2**C(n,2) labeled graphs; n <= 7."""
    if n > MAX_NAIVE_N:
        raise ScaleError(f"naive sweep supports n <= {MAX_NAIVE_N}, got {n}")
    t0 = time.monotonic()
    sc = universe.scan(n)
    ok = sc.p4hat_free & sc.k4_free if forbidden.k4 else sc.p4hat_free
    best = int(sc.tri[ok].max())
    codes = (ok & (sc.tri == best)).nonzero()[0]
    forms = {canonical_form(universe.graph_from_code(n, int(c))) for c in codes}
    return _report(
        n, forbidden, "naive", best, sorted(forms), sc.total, t0, True
    )


def ex_augment(
    n: int,
    forbidden: ForbiddenSet = ForbiddenSet(),
    threads: int = 1,
    max_classes: int = 2_000_000,
    cap: int = MAX_AUGMENT_N,
) -> SearchReport:
    """Maximum via isomorph-free growth; all extremal classes returned.

    Raises ResourceBudgetError if a level exceeds max_classes canonical
    classes; the error records the last completed level.
    """
    if n > cap:
        raise ScaleError(f"augmentation supports n <= {cap}, got {n}")
    if n < 1:
        raise ScaleError(f"augmentation needs n >= 1, got {n}")
    t0 = time.monotonic()
    level = [0]  # the single 1-vertex class, empty stream
    nodes = 0
    for m in range(1, n):
        chunks = _chunked(level, threads)
        jobs = [(m, chunk, forbidden.k4) for chunk in chunks]
        results = _run_jobs(_expand_class, jobs, threads)
        nxt: set[int] = set()
        for streams, tried in results:
            nodes += tried
            nxt.update(streams)
            if len(nxt) > max_classes:
                raise ResourceBudgetError(
                    f"level {m + 1} exceeds {max_classes} classes", m
                )
        level = sorted(nxt)
    best = -1
    witnesses = []
    for stream in level:
        g = _from_upper_stream(n, stream)
        t = triangle_count(g)
        if t > best:
            best = t
            witnesses = [to_graph6(g)]
        elif t == best:
            witnesses.append(to_graph6(g))
    return _report(
        n, forbidden, "augment", best, sorted(witnesses), nodes, t0, True
    )


def _chunked(items: list, parts: int) -> list[list]:
    """Split into at most 4*parts near-equal runs, independent of parts
    only in content: the union and counts are what reports consume."""
    if not items:
        return [[]]
    size = max(1, (len(items) + 4 * parts - 1) // (4 * parts))
    return [items[i : i + size] for i in range(0, len(items), size)]


def _run_jobs(fn, jobs, threads: int) -> list:
    if threads <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    ctx = get_context("fork")
    with ctx.Pool(threads) as pool:
        return pool.map(fn, jobs)


def _bnb_seed(n: int, forbidden: ForbiddenSet) -> tuple[int, list[str]]:
    if n >= 4:
        g = extremal_construction(n)
        return predicted_extremal_value(n), [canonical_form(g)]
    # K1, K2, K3 are trivially free and maximize triangles outright.
    g = Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))
    return triangle_count(g), [canonical_form(g)]


def _bnb_subtree(args) -> tuple[int, list[int], int, bool]:
    """Worker: exhaust one subtree.  Returns (best, witness streams,
    nodes, completed)."""
    n, adj_prefix, tri_prefix, seed, k4, deadline = args
    best = seed
    witnesses: list[int] = []
    nodes = 0
    completed = True
    # suffix_cap[d] = sum over i in d..n-1 of i: max triangles the
    # remaining insertions can add under the triangle-degree bound.
    suffix = [0] * (n + 1)
    for d in range(n - 1, -1, -1):
        suffix[d] = suffix[d + 1] + d
    stack = [(list(adj_prefix), tri_prefix)]
    pops = 0
    while stack:
        pops += 1
        if (
            deadline is not None
            and (pops & 255) == 0
            and time.monotonic() > deadline
        ):
            completed = False
            break
        adj, tri = stack.pop()
        d = len(adj)
        if d == n:
            if tri > best:
                best = tri
                witnesses = [canonical_key(Graph._unchecked(n, adj))[1]]
            continue
        if tri + suffix[d] <= best:
            continue
        parent = Graph._unchecked(d, adj)
        children = []
        for mask in _extension_masks(parent):
            nodes += 1
            if not _child_stays_free(adj, mask, k4):
                continue
            gained = _edges_within(adj, mask)
            children.append((_child_rows(adj, mask), tri + gained))
        # Dense-first order tends to raise the incumbent early.
        children.sort(key=lambda c: -c[1])
        stack.extend(reversed(children))
    return best, witnesses, nodes, completed


def _edges_within(adj, mask: int) -> int:
    total = 0
    rest = mask
    while rest:
        low = rest & -rest
        u = low.bit_length() - 1
        rest ^= low
        total += (adj[u] & rest).bit_count()
    return total


def ex_branch_bound(
    n: int,
    forbidden: ForbiddenSet = ForbiddenSet(),
    threads: int = 1,
    timeout_secs: float | None = None,
    incumbent: int | None = None,
    cap: int = MAX_BNB_N,
) -> SearchReport:
    """Maximum via labeled branch and bound, seeded with the construction.

    An explicit incumbent prunes subtrees that cannot beat it.  The
    value is trusted as achievable: passing one at or above the true
    maximum makes the search come back empty-handed, and the report
    then carries the unbeaten incumbent with no witnesses.

    On timeout the report carries the best value found and exact=False.
    Completed runs are deterministic for every threads value; nodes are
    counted per subtree job, and jobs never share incumbents.
    """
    if n > cap:
        raise ScaleError(f"branch and bound supports n <= {cap}, got {n}")
    if n < 1:
        raise ScaleError(f"branch and bound needs n >= 1, got {n}")
    t0 = time.monotonic()
    deadline = None if timeout_secs is None else t0 + timeout_secs
    seed, seed_witnesses = _bnb_seed(n, forbidden)
    if incumbent is not None and incumbent > seed:
        seed, seed_witnesses = incumbent, []

    # Jobs: free prefixes at a fixed small depth, one subtree each.  The
    # split depends only on n, so thread counts cannot change the report.
    split = min(n, 4)
    prefixes = [([0], 0)]  # 1-vertex prefix, no triangles
    pre_nodes = 0
    for d in range(1, split):
        nxt = []
        for adj, tri in prefixes:
            parent = Graph._unchecked(d, adj)
            for mask in _extension_masks(parent):
                pre_nodes += 1
                if not _child_stays_free(adj, mask, forbidden.k4):
                    continue
                nxt.append((_child_rows(adj, mask), tri + _edges_within(adj, mask)))
        prefixes = nxt

    jobs = [
        (n, adj, tri, seed, forbidden.k4, deadline) for adj, tri in prefixes
    ]
    results = _run_jobs(_bnb_subtree, jobs, threads)

    best = seed
    streams: set[int] = set()
    nodes = pre_nodes
    exact = True
    for b, wit, nds, completed in results:
        nodes += nds
        exact = exact and completed
        if b > best:
            best = b
            streams = set(wit)
        elif b == best and b > seed:
            streams.update(wit)
    if best == seed:
        witnesses = seed_witnesses
    else:
        witnesses = sorted(
            to_graph6(_from_upper_stream(n, s)) for s in streams
        )
    return _report(
        n, forbidden, "bnb", best, witnesses, nodes, t0, exact
    )


def cheapest_exact(
    n: int, forbidden: ForbiddenSet = ForbiddenSet(), threads: int = 1
) -> SearchReport:
    """Exact maximum by the lightest method that covers n."""
    if n <= 6:
        return ex_naive(n, forbidden)
    return ex_augment(n, forbidden, threads=threads)


@dataclass(frozen=True)
class FRow:
    n: int
    ex: int
    floor: int
    f: int
    method: str
    exact: bool


def f_row(
    n: int, forbidden: ForbiddenSet = ForbiddenSet(), threads: int = 1
) -> FRow:
    """One table row; past the augmentation cap the row reports the
    construction lower bound floor(n*n/8) flagged exact=False."""
    if n <= MAX_AUGMENT_N:
        rep = cheapest_exact(n, forbidden, threads=threads)
        return FRow(
            n, rep.max_triangles, rep.floor_n2_8, rep.f, rep.method, rep.exact
        )
    floor = n * n // 8
    return FRow(n, floor, floor, 0, "construction", False)


def f_table(
    n_max: int,
    forbidden: ForbiddenSet = ForbiddenSet(),
    threads: int = 1,
) -> list[FRow]:
    """Exact ex(n) and its gap over floor(n*n/8) for n = 1..n_max.

    Uses the cheapest exact method per row: the labeled sweep through
    n = 6, augmentation beyond.  Rows past the augmentation cap fall
    back to the construction lower bound and are flagged exact=False
    instead of aborting the table.
    """
    return [f_row(n, forbidden, threads=threads) for n in range(1, n_max + 1)]
