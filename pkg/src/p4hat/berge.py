"""3-uniform hypergraphs, the triangle lift, and Berge triangle detection.

The lift T(G) of a graph has one hyperedge per triangle of G.  A Berge
triangle in a 3-uniform hypergraph is a core {x, y, z} together with
three distinct hyperedges, one containing each pair of the core.  The
point of the lift: T(G) has no Berge triangle exactly when G has no K4
and no suspension of P4, which turns bounds on Berge-triangle-free
hypergraphs into bounds on triangle counts.

Text format: first line ``n m``, then m lines ``a b c`` with
a < b < c < n, lexicographically sorted, one hyperedge each.  Parse
errors report 1-based line numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ScaleError
from .graphs import Graph, bits, triangles

__all__ = [
    "Hypergraph3",
    "HypergraphFormatError",
    "BergeK3Witness",
    "lift",
    "contains_berge_k3",
    "max_berge_k3_free",
    "format_hypergraph",
    "parse_hypergraph",
]


class Hypergraph3:
    """Immutable 3-uniform hypergraph on vertices 0..n-1.

    Hyperedges are distinct sorted triples, stored in lexicographic order.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        seen = set()
        for e in edges:
            t = tuple(e)
            if len(t) != 3 or len(set(t)) != 3:
                raise ValueError(f"hyperedge {t} is not 3 distinct vertices")
            if not all(0 <= v < n for v in t):
                raise ValueError(f"hyperedge {t} out of range for n={n}")
            seen.add(tuple(sorted(t)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph3 is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Hypergraph3)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Hypergraph3(n={self.n}, m={len(self.edges)})"


def lift(g: Graph) -> Hypergraph3:
    """T(G): one hyperedge per triangle of g."""
    h = object.__new__(Hypergraph3)
    object.__setattr__(h, "n", g.n)
    object.__setattr__(h, "edges", tuple(triangles(g)))
    return h


@dataclass(frozen=True)
class BergeK3Witness:
    """Core pair (x,y) covered by edge_xy, (x,z) by edge_xz, (y,z) by edge_yz."""

    core: tuple[int, int, int]
    edge_xy: tuple[int, int, int]
    edge_xz: tuple[int, int, int]
    edge_yz: tuple[int, int, int]


def _link_masks(h: Hypergraph3) -> dict[tuple[int, int], int]:
    """For each vertex pair, the bitmask of hyperedges containing it."""
    links: dict[tuple[int, int], int] = {}
    for i, (a, b, c) in enumerate(h.edges):
        bit = 1 << i
        for pair in ((a, b), (a, c), (b, c)):
            links[pair] = links.get(pair, 0) | bit
    return links


def _sdr3_exists(m1: int, m2: int, m3: int) -> bool:
    """Hall's condition for three link masks: distinct representatives
    exist iff every mask is nonempty, every pair unions to >= 2 edges,
    and all three union to >= 3."""
    return (
        m1 != 0
        and m2 != 0
        and m3 != 0
        and (m1 | m2).bit_count() >= 2
        and (m1 | m3).bit_count() >= 2
        and (m2 | m3).bit_count() >= 2
        and (m1 | m2 | m3).bit_count() >= 3
    )


def contains_berge_k3(h: Hypergraph3) -> BergeK3Witness | None:
    """Least Berge triangle, or None.

    Candidate cores are triangles of the shadow graph (pairs covered by
    at least one hyperedge), visited in lexicographic order.  A core
    works iff its three link sets admit three distinct representatives,
    which Hall's condition reduces to popcount tests.
    """
    links = _link_masks(h)
    rows = [0] * h.n
    for u, v in links:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    shadow = Graph._unchecked(h.n, rows)
    for x, y, z in triangles(shadow):
        m1 = links[(x, y)]
        m2 = links[(x, z)]
        m3 = links[(y, z)]
        if not _sdr3_exists(m1, m2, m3):
            continue
        for i in bits(m1):
            rest2 = m2 & ~(1 << i)
            for j in bits(rest2):
                rest3 = m3 & ~(1 << i) & ~(1 << j)
                if rest3:
                    k = (rest3 & -rest3).bit_length() - 1
                    return BergeK3Witness(
                        (x, y, z), h.edges[i], h.edges[j], h.edges[k]
                    )
        raise AssertionError("Hall condition held but no representatives found")
    return None


# 2**C(6,3) = 2**20 hypergraph codes is the practical exhaustive limit.
MAX_ENUM_N = 6


def max_berge_k3_free(n: int) -> tuple[int, Hypergraph3]:
    """Exact maximum hyperedge count with no Berge triangle, with witness.

    Enumerates every 3-uniform hypergraph on n vertices, so n <= 6.  The
    witness is the first maximum reached in code order (one bit per
    vertex triple, lexicographic).
    """
    if n > MAX_ENUM_N:
        raise ScaleError(f"hypergraph enumeration supports n <= {MAX_ENUM_N}, got {n}")
    triples = list(combinations(range(n), 3))
    nt = len(triples)
    best = -1
    best_edges: tuple = ()
    for code in range(1 << nt):
        size = code.bit_count()
        if size <= best:
            continue
        h = object.__new__(Hypergraph3)
        object.__setattr__(h, "n", n)
        object.__setattr__(
            h, "edges", tuple(triples[i] for i in bits(code))
        )
        if contains_berge_k3(h) is None:
            best = size
            best_edges = h.edges
    witness = object.__new__(Hypergraph3)
    object.__setattr__(witness, "n", n)
    object.__setattr__(witness, "edges", best_edges)
    return best, witness


class HypergraphFormatError(ValueError):
    """Malformed hypergraph text; ``line`` is the 1-based faulty line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"{message} (line {line})")
        self.line = line


def format_hypergraph(h: Hypergraph3) -> str:
    lines = [f"{h.n} {len(h.edges)}"]
    lines.extend(f"{a} {b} {c}" for a, b, c in h.edges)
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph3:
    """Parse the ``n m`` / triple-per-line format, strictly.

    Triples must be sorted within each line and across lines, with no
    duplicates and no trailing garbage.
    """
    lines = text.splitlines()
    if not lines:
        raise HypergraphFormatError("empty input", 1)
    head = lines[0].split()
    if len(head) != 2 or not all(p.lstrip("-").isdigit() for p in head):
        raise HypergraphFormatError(f"expected 'n m', got {lines[0]!r}", 1)
    n, m = int(head[0]), int(head[1])
    if n < 0 or m < 0:
        raise HypergraphFormatError("n and m must be nonnegative", 1)
    body = [(i + 2, ln) for i, ln in enumerate(lines[1:]) if ln.strip()]
    if len(body) != m:
        raise HypergraphFormatError(
            f"header promises {m} hyperedges, found {len(body)}", len(lines) + 1
        )
    edges = []
    prev = None
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != 3 or not all(p.lstrip("-").isdigit() for p in parts):
            raise HypergraphFormatError(f"expected 'a b c', got {ln!r}", lineno)
        t = tuple(int(p) for p in parts)
        if not (0 <= t[0] < t[1] < t[2] < n):
            raise HypergraphFormatError(
                f"triple {t} not strictly increasing in 0..{n - 1}", lineno
            )
        if prev is not None and t <= prev:
            raise HypergraphFormatError(
                f"triple {t} out of order after {prev}", lineno
            )
        prev = t
        edges.append(t)
    h = object.__new__(Hypergraph3)
    object.__setattr__(h, "n", n)
    object.__setattr__(h, "edges", tuple(edges))
    return h
