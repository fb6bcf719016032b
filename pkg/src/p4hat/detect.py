"""Forbidden-pattern detection: P4 paths, K4 cliques, suspensions of P4.

The suspension of P4 (written p4hat) is a 4-vertex path plus an apex
adjacent to all four path vertices.  A graph contains one as a subgraph
iff some vertex v has a 4-vertex path among its neighbors, so every
detector here reduces to path hunting inside neighborhood bitsets.

Witness functions return the lexicographically least witness: least
sorted vertex set first, then least tuple in the orientation reported.
Boolean helpers skip witness construction and are what the search and
verification loops call.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .graphs import Graph, bits

__all__ = [
    "STAR",
    "TRIANGLE",
    "OTHER",
    "Component",
    "P4HatWitness",
    "contains_p4",
    "contains_k4",
    "find_p4hat",
    "is_p4hat_free",
    "is_k4_free",
    "classify_components",
    "triangle_degree",
]

STAR = "star"
TRIANGLE = "triangle"
OTHER = "other"


@dataclass(frozen=True)
class Component:
    kind: str
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class P4HatWitness:
    """A suspension witness: apex joined to every vertex of the path."""

    apex: int
    path: tuple[int, int, int, int]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted((self.apex,) + self.path))


def _has_p4_within(adj: tuple[int, ...], mask: int) -> bool:
    """True iff some 4 distinct vertices of mask form a path a-x-y-b.

    For each edge xy inside the mask, a middle pair works iff x has a
    mask neighbor besides y, y has one besides x, and those choices can
    be made distinct.
    """
    rest = mask
    while rest:
        low = rest & -rest
        x = low.bit_length() - 1
        rest ^= low
        row = adj[x] & rest
        while row:
            lo2 = row & -row
            y = lo2.bit_length() - 1
            row ^= lo2
            a_side = adj[x] & mask & ~(1 << y) & ~low
            b_side = adj[y] & mask & ~low & ~lo2
            if a_side and b_side and (a_side != b_side or a_side.bit_count() > 1):
                return True
    return False


def _path_on(adj: tuple[int, ...], quad: tuple[int, ...]) -> tuple[int, ...] | None:
    """Least path tuple spanning the 4-set, or None if no spanning path."""
    for perm in permutations(quad):
        a, x, y, b = perm
        if adj[a] >> x & 1 and adj[x] >> y & 1 and adj[y] >> b & 1:
            return perm
    return None


def contains_p4(g: Graph) -> tuple[int, int, int, int] | None:
    """Least 4-vertex path subgraph (as the path tuple), or None."""
    full = (1 << g.n) - 1
    if not _has_p4_within(g.adj, full):
        return None
    for quad in combinations(range(g.n), 4):
        path = _path_on(g.adj, quad)
        if path is not None:
            return path
    raise AssertionError("boolean and witness scans disagree")


def is_p4hat_free(g: Graph) -> bool:
    """True iff no vertex has a 4-vertex path among its neighbors."""
    adj = g.adj
    return not any(_has_p4_within(adj, adj[v]) for v in range(g.n))


def find_p4hat(g: Graph) -> P4HatWitness | None:
    """Least suspension-of-P4 witness, or None if the graph avoids it."""
    adj = g.adj
    if is_p4hat_free(g):
        return None
    for five in combinations(range(g.n), 5):
        smask = 0
        for v in five:
            smask |= 1 << v
        for apex in five:
            others = smask & ~(1 << apex)
            if adj[apex] & others != others:
                continue
            quad = tuple(v for v in five if v != apex)
            path = _path_on(adj, quad)
            if path is not None:
                return P4HatWitness(apex, path)
    raise AssertionError("boolean and witness scans disagree")


def _has_k4_within(adj: tuple[int, ...], mask: int) -> bool:
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
            common = adj[u] & adj[v] & rest & ~lo2
            scan = common
            while scan:
                lo3 = scan & -scan
                w = lo3.bit_length() - 1
                scan ^= lo3
                if adj[w] & common & -(lo3 << 1):
                    return True
    return False


def is_k4_free(g: Graph) -> bool:
    return not _has_k4_within(g.adj, (1 << g.n) - 1)


def contains_k4(g: Graph) -> tuple[int, int, int, int] | None:
    """Least 4-clique (a, b, c, d) with a < b < c < d, or None.

    Depth-first over ascending vertices, so the first clique reached is
    the lexicographically least one.
    """
    adj = g.adj
    for a in range(g.n):
        above_a = adj[a] >> (a + 1) << (a + 1)
        for b in bits(above_a):
            com_ab = adj[a] & adj[b] >> (b + 1) << (b + 1)
            for c in bits(com_ab):
                com_abc = com_ab & adj[c] >> (c + 1) << (c + 1)
                for d in bits(com_abc):
                    return (a, b, c, d)
    return None


def classify_components(g: Graph) -> list[Component]:
    """Connected components tagged star (K_{1,t}, t >= 0), triangle, or other.

    Components are listed by smallest vertex; a single vertex and a single
    edge both count as stars.
    """
    out = []
    unseen = (1 << g.n) - 1
    adj = g.adj
    while unseen:
        seed = unseen & -unseen
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= adj[v]
            frontier = grow & ~comp
            comp |= frontier
        unseen &= ~comp
        verts = tuple(bits(comp))
        k = len(verts)
        degs = [(adj[v] & comp).bit_count() for v in verts]
        edges = sum(degs) // 2
        if edges == k - 1 and (k == 1 or max(degs) == k - 1):
            kind = STAR
        elif k == 3 and edges == 3:
            kind = TRIANGLE
        else:
            kind = OTHER
        out.append(Component(kind, verts))
    return out


def triangle_degree(g: Graph, v: int) -> int:
    """Number of triangles through v, i.e. edges inside N(v)."""
    nb = g.adj[v]
    return sum((g.adj[u] & nb).bit_count() for u in bits(nb)) // 2
