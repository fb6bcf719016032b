"""Exhaustive sweeps over every labeled graph on a small vertex set.

A graph on n vertices is a code in 0..2**C(n,2)-1, one bit per pair in
lexicographic order.  Pattern occurrences are precomputed as edge-bit
masks by brute enumeration (apex choices, vertex tuples, path orders),
so a sweep is a few thousand vectorized mask tests per chunk.  This is
the ground truth the detectors and searches are validated against: it
never consults the bitset detectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from .errors import ScaleError
from .graphs import Graph

__all__ = [
    "MAX_SCAN_N",
    "UniverseScan",
    "edge_list",
    "code_of",
    "graph_from_code",
    "triangle_masks",
    "k4_masks",
    "p4hat_masks",
    "incident_edge_mask",
    "scan",
]

# 2**C(7,2) = 2 097 152 codes; one more vertex would be 2**28 and hours.
MAX_SCAN_N = 7

_CHUNK = 1 << 18


def edge_list(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def _edge_index(n: int) -> dict[tuple[int, int], int]:
    return {e: i for i, e in enumerate(edge_list(n))}


def code_of(g: Graph) -> int:
    idx = _edge_index(g.n)
    code = 0
    for e in g.edges():
        code |= 1 << idx[e]
    return code

def graph_from_code(n: int, code: int) -> Graph:
    pairs = edge_list(n)
    if code >> len(pairs):
        raise ValueError(f"code {code} out of range for n={n}")
    return Graph(n, (pairs[i] for i in range(len(pairs)) if code >> i & 1))


def _mask(idx: dict[tuple[int, int], int], pairs) -> int:
    m = 0
    for a, b in pairs:
        m |= 1 << idx[(a, b) if a < b else (b, a)]
    return m


def triangle_masks(n: int) -> list[tuple[tuple[int, int, int], int]]:
    """(vertex triple, edge mask) for every labeled triangle."""
    idx = _edge_index(n)
    return [
        (t, _mask(idx, combinations(t, 2))) for t in combinations(range(n), 3)
    ]


def k4_masks(n: int) -> list[tuple[tuple[int, int, int, int], int]]:
    """(vertex quadruple, edge mask) for every labeled 4-clique."""
    idx = _edge_index(n)
    return [
        (q, _mask(idx, combinations(q, 2))) for q in combinations(range(n), 4)
    ]


def p4hat_masks(n: int) -> list[int]:
    """Edge masks of every labeled suspension of P4, deduplicated."""
    idx = _edge_index(n)
    out = set()
    for apex in range(n):
        others = [v for v in range(n) if v != apex]
        for quad in combinations(others, 4):
            for a, x, y, b in permutations(quad):
                if a > b:
                    continue
                path = [(a, x), (x, y), (y, b)]
                spokes = [(apex, v) for v in quad]
                out.add(_mask(idx, path + spokes))
    return sorted(out)


def incident_edge_mask(n: int, v: int) -> int:
    """Mask of the edge positions whose pair contains v."""
    idx = _edge_index(n)
    m = 0
    for u in range(n):
        if u != v:
            m |= 1 << idx[(min(u, v), max(u, v))]
    return m


@dataclass(frozen=True)
class UniverseScan:
    """Per-code facts for all 2**C(n,2) labeled graphs on n vertices."""

    n: int
    tri: np.ndarray
    p4hat_free: np.ndarray
    k4_free: np.ndarray

    @property
    def total(self) -> int:
        return len(self.tri)


_cache: dict[int, UniverseScan] = {}


def scan(n: int) -> UniverseScan:
    """Sweep the labeled universe on n vertices (cached per process)."""
    if n > MAX_SCAN_N:
        raise ScaleError(f"labeled sweep supports n <= {MAX_SCAN_N}, got {n}")
    if n in _cache:
        return _cache[n]
    nbits = n * (n - 1) // 2
    total = 1 << nbits
    tmasks = np.array([m for _, m in triangle_masks(n)], dtype=np.uint32)
    kmasks = np.array([m for _, m in k4_masks(n)], dtype=np.uint32)
    pmasks = np.array(p4hat_masks(n), dtype=np.uint32)
    tri = np.zeros(total, dtype=np.uint8)
    pfree = np.ones(total, dtype=bool)
    kfree = np.ones(total, dtype=bool)
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        codes = np.arange(lo, hi, dtype=np.uint32)
        t = tri[lo:hi]
        for m in tmasks:
            t += (codes & m) == m
        acc = pfree[lo:hi]
        for m in pmasks:
            acc &= (codes & m) != m
        acc = kfree[lo:hi]
        for m in kmasks:
            acc &= (codes & m) != m
    result = UniverseScan(n, tri, pfree, kfree)
    _cache[n] = result
    return result
