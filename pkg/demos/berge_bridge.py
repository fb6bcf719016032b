"""
From graphs to 3-uniform hypergraphs and back
=============================================

Reading each triangle of a graph as a hyperedge gives the triangle
hypergraph T(G).  T(G) contains a Berge triangle exactly when G
contains a K4 or a suspension of P4, so the graph-side detectors
transfer: the maximum Berge-triangle-free hypergraph built this way
again has floor(n*n/8) edges.
"""

import random

from p4hat import (
    Graph,
    contains_berge_k3,
    extremal_construction,
    format_hypergraph,
    is_k4_free,
    is_p4hat_free,
    lift,
    max_berge_k3_free,
)

h = lift(extremal_construction(6))
print("T(construction on 6 vertices), as text:")
print(format_hypergraph(h))
print("Berge triangle:", contains_berge_k3(h))

# Random graphs agree with the equivalence on both sides.
rng = random.Random(7)
mismatches = 0
for _ in range(2000):
    n = rng.randrange(4, 10)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < 0.35
    ]
    g = Graph(n, edges)
    graph_side = is_p4hat_free(g) and is_k4_free(g)
    berge_side = contains_berge_k3(lift(g)) is None
    mismatches += graph_side != berge_side
print("equivalence mismatches over 2000 random graphs:", mismatches)

print()
print("n  max Berge-K3-free  floor(n^2/8)")
for n in (3, 4, 5):
    value, witness = max_berge_k3_free(n)
    print(f"{n:<3}{value:<19}{n * n // 8}")
# n = 6 also lands on the floor; it sweeps a larger space, so it lives
# in the test suite rather than a demo loop.
