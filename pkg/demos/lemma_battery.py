"""
Machine-checking the counting lemmas on small universes
=======================================================

The floor(n*n/8) upper bound for K4-free graphs rests on a chain of
small lemmas.  Each is a checkable statement about one graph, and the
suite sweeps every labeled graph up to a size, so a false lemma would
surface a concrete counterexample in graph6.
"""

from p4hat import (
    Graph,
    PreconditionError,
    check_private_edges,
    check_k4_attachment,
    derive_g_prime,
    run_suite,
    to_graph6,
    triangle_count,
    two_k4_shared_vertex,
)

reports = run_suite(5)
print("lemma battery over all labeled graphs on 0..5 vertices")
for r in reports:
    print(f"  {r.lemma_id:<16} checked {r.checked:>5}  failures {len(r.failures)}")

# The private-edges lemma feeds the next one: keep two private edges per
# triangle and the leftover graph is triangle-free with 2t edges, so
# Mantel's bound turns into a bound on t.
g = two_k4_shared_vertex()
print()
print("deriving the 2t-edge graph from a bowtie of K4s is refused:")
try:
    derive_g_prime(g)
except PreconditionError as exc:
    print(" ", exc)

# That graph sits in the K4-attachment lemma's class instead.
print("K4 attachment on", to_graph6(g), "->", check_k4_attachment(g, (0, 1, 2, 3)))

bowtie = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
print()
print("bowtie:", to_graph6(bowtie), "with", triangle_count(bowtie), "triangles")
print("private edges:", check_private_edges(bowtie))
gp = derive_g_prime(bowtie)
print("derived graph keeps", gp.edge_count(), "edges and", triangle_count(gp), "triangles")
