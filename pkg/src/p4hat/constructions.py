"""Triangle-rich graphs with no K4 and no suspension of P4.

The extremal family is a complete bipartite graph, balanced as nearly as
possible, with a perfect matching added inside one part.  Every triangle
is a matching edge plus a vertex of the other part, so the triangle count
is (matching size) * (other part size), which meets floor(n*n/8) in every
residue class of n mod 4:

    n = 4k      parts 2k, 2k        k matching edges    k(2k)
    n = 4k + 1  parts 2k, 2k+1      k                   k(2k+1)
    n = 4k + 2  parts 2k, 2k+2      k                   k(2k+2)
    n = 4k + 3  parts 2k+2, 2k+1    k+1                 (k+1)(2k+1)

Vertices 0..a-1 form the matched part A (edge {2i, 2i+1} for each i) and
a..n-1 form the other part B.  Neighborhoods are then a star plus leaves
for B vertices and a matching for A vertices, so no neighborhood holds a
4-vertex path and no K4 fits anywhere.
"""

from __future__ import annotations

from .graphs import Graph

__all__ = [
    "extremal_construction",
    "construction_parts",
    "predicted_extremal_value",
    "two_k4_shared_vertex",
]


def construction_parts(n: int) -> tuple[int, int]:
    """(size of matched part A, matching size) for the n-vertex construction."""
    k, r = divmod(n, 4)
    if r == 3:
        return 2 * k + 2, k + 1
    return 2 * k, k


def extremal_construction(n: int) -> Graph:
    """The bipartite-plus-matching graph on n vertices, n >= 4.

    Exactly floor(n*n/8) triangles, no K4, no suspension of P4.
    """
    if n < 4:
        raise ValueError(f"construction needs n >= 4, got {n}")
    a, _ = construction_parts(n)
    mask_a = (1 << a) - 1
    mask_b = ((1 << n) - 1) ^ mask_a
    rows = [0] * n
    for v in range(a):
        rows[v] = mask_b | (1 << (v ^ 1))
    for v in range(a, n):
        rows[v] = mask_a
    return Graph._unchecked(n, rows)


def predicted_extremal_value(n: int) -> int:
    """floor(n*n/8), the triangle count the construction achieves."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return n * n // 8


def two_k4_shared_vertex() -> Graph:
    """Two K4s glued at vertex 0: cliques {0,1,2,3} and {0,4,5,6}.

    Seven vertices, eight triangles, no suspension of P4.  Beats
    floor(49/8) = 6, so the floor(n*n/8) formula cannot start before
    n = 8.
    """
    g = Graph(7)
    rows = list(g.adj)
    for clique in ((0, 1, 2, 3), (0, 4, 5, 6)):
        for u in clique:
            for v in clique:
                if u != v:
                    rows[u] |= 1 << v
    return Graph._unchecked(7, rows)
