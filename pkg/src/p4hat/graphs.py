"""Undirected simple graphs on vertex set 0..n-1, backed by integer bitsets.

Each vertex stores its neighborhood as a Python int, so set algebra on
neighborhoods (intersection, difference, popcount) is a single machine-level
operation for n <= 64 and stays cheap for larger n.  Graphs are immutable;
editing helpers return new instances.

graph6 encoding, bit-exact
--------------------------
A graph6 string is ``N(n)`` followed by the upper triangle of the adjacency
matrix:

* ``N(n)``: for 0 <= n <= 62, the single byte ``n + 63``.  For
  63 <= n <= 258047, the byte 126 followed by the three bytes
  ``(n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63``.  For
  258048 <= n < 2**36, two bytes 126 then six bytes of the same 6-bit
  big-endian expansion.
* Data: the bits x(0,1), x(0,2), x(1,2), x(0,3), x(1,3), x(2,3), ...,
  x(n-2,n-1), i.e. the columns of the upper triangle read top to bottom,
  left to right, where x(i,j) = 1 iff ij is an edge.  The bit string is
  padded with zeros to a multiple of 6, split into 6-bit groups (first bit
  of the stream is the most significant bit of the first group), and each
  group is emitted as ``value + 63``.

All emitted bytes lie in 63..126, so the string is printable ASCII.  An
optional ``>>graph6<<`` header is accepted on input and never produced on
output.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

import numpy as np

__all__ = [
    "Graph",
    "Graph6Error",
    "triangles",
    "triangle_count",
    "edge_triangle_multiplicity",
    "induced_subgraph",
    "relabel",
    "to_graph6",
    "from_graph6",
    "canonical_key",
    "canonical_graph",
    "canonical_form",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph with bitset adjacency rows.

    ``adj[v]`` is an int whose bit u is set iff uv is an edge.  Rows are
    symmetric and loop-free by construction.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(rows))

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Graph":
        """Build from explicit adjacency rows, validating symmetry."""
        rows = list(rows)
        n = len(rows)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"rows not symmetric at ({u}, {v})")
        return cls._unchecked(n, rows)

    @classmethod
    def _unchecked(cls, n: int, rows: list[int]) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(rows))
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1) and u != v

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._unchecked(self.n, rows)

    def with_vertex(self, joined_to: int = 0) -> "Graph":
        """Append vertex n joined to the set bits of ``joined_to``."""
        if joined_to >> self.n:
            raise ValueError("attachment mask has bits outside 0..n-1")
        rows = list(self.adj)
        new = self.n
        for u in bits(joined_to):
            rows[u] |= 1 << new
        rows.append(joined_to)
        return Graph._unchecked(self.n + 1, rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All triangles as sorted tuples (a, b, c), in lexicographic order."""
    out = []
    adj = g.adj
    for a in range(g.n):
        above_a = adj[a] >> (a + 1) << (a + 1)
        for b in bits(above_a):
            common = adj[a] & adj[b] >> (b + 1) << (b + 1)
            for c in bits(common):
                out.append((a, b, c))
    return out


def triangle_count(g: Graph) -> int:
    """Number of triangles, without materializing them.

    Sums, over edges uv with u < v, the common neighbors above v.  Every
    triangle is counted exactly once, at its lexicographically smallest
    edge.  Large graphs go through a packed numpy path.
    """
    if g.n > 64:
        return _triangle_count_packed(g)
    total = 0
    adj = g.adj
    for u in range(g.n):
        for v in bits(adj[u] >> (u + 1) << (u + 1)):
            total += (adj[u] & adj[v] >> (v + 1) << (v + 1)).bit_count()
    return total


def _pack_rows(g: Graph) -> np.ndarray:
    """Adjacency rows as an (n, words) array of little-endian uint64."""
    nbytes = ((g.n + 63) // 64) * 8
    buf = b"".join(row.to_bytes(nbytes, "little") for row in g.adj)
    return np.frombuffer(buf, dtype="<u8").reshape(g.n, nbytes // 8)


def _above_masks(n: int) -> np.ndarray:
    """Row v = bitset of vertices strictly greater than v, packed uint64."""
    nbytes = ((n + 63) // 64) * 8
    full = (1 << n) - 1
    buf = b"".join(
        (full ^ ((1 << (v + 1)) - 1)).to_bytes(nbytes, "little") for v in range(n)
    )
    return np.frombuffer(buf, dtype="<u8").reshape(n, nbytes // 8)


def _triangle_count_packed(g: Graph) -> int:
    rows = _pack_rows(g)
    above = _above_masks(g.n)
    upper = rows & above
    flat = np.unpackbits(upper.view(np.uint8), axis=1, bitorder="little")[:, : g.n]
    us, vs = np.nonzero(flat)
    total = 0
    # One gather per edge, walking source vertices in runs: us is sorted,
    # so each u contributes one small block rows[u] & upper[its targets].
    starts = np.searchsorted(us, np.arange(g.n))
    ends = np.append(starts[1:], len(us))
    for u in range(g.n):
        s, e = starts[u], ends[u]
        if s == e:
            continue
        block = upper[vs[s:e]] & rows[u]
        total += int(np.bitwise_count(block).sum())
    return total


def edge_triangle_multiplicity(g: Graph, edge: tuple[int, int]) -> int:
    """Number of triangles containing the given edge."""
    u, v = edge
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    return (g.adj[u] & g.adj[v]).bit_count()


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabeled 0.. in their sorted order."""
    verts = sorted(set(vertices))
    if verts and not (0 <= verts[0] and verts[-1] < g.n):
        raise ValueError("vertex out of range")
    pos = {v: i for i, v in enumerate(verts)}
    rows = [0] * len(verts)
    for v in verts:
        row = 0
        for u in bits(g.adj[v]):
            if u in pos:
                row |= 1 << pos[u]
        rows[pos[v]] = row
    return Graph._unchecked(len(verts), rows)


def relabel(g: Graph, order: tuple[int, ...]) -> Graph:
    """Graph whose vertex i is g's vertex order[i]; order must be a permutation."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of 0..n-1")
    pos = [0] * g.n
    for i, old in enumerate(order):
        pos[old] = i
    rows = [0] * g.n
    for i, old in enumerate(order):
        row = 0
        for u in bits(g.adj[old]):
            row |= 1 << pos[u]
        rows[i] = row
    return Graph._unchecked(g.n, rows)


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


_G6_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph6 cannot encode n={n}")


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 string (no header, no trailing newline)."""
    cols = []
    for v in range(1, g.n):
        below = g.adj[v] & ((1 << v) - 1)
        # Column bits run x(0,v)..x(v-1,v); format() emits the high bit
        # first, so reverse to put u=0 at the front of the stream.
        cols.append(format(below, f"0{v}b")[::-1])
    stream = "".join(cols)
    if len(stream) % 6:
        stream += "0" * (6 - len(stream) % 6)
    data = "".join(chr(int(stream[i : i + 6], 2) + 63) for i in range(0, len(stream), 6))
    return _encode_size(g.n) + data


def from_graph6(text: str) -> Graph:
    """Decode a graph6 string, accepting an optional ``>>graph6<<`` header.

    Raises Graph6Error with the byte offset of the first invalid byte on
    malformed input, including out-of-range bytes, truncated or oversized
    data sections, and nonzero padding bits.
    """
    base = 0
    if text.startswith(_G6_HEADER):
        base = len(_G6_HEADER)
        text = text[base:]
    if not text:
        raise Graph6Error("empty graph6 string", base)

    def val(i: int) -> int:
        c = ord(text[i])
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} outside graph6 range 63..126", base + i)
        return c - 63

    if val(0) < 63:
        n = val(0)
        body = 1
    else:
        if len(text) >= 2 and text[1] == "~":
            if len(text) < 8:
                raise Graph6Error("truncated size field", base + len(text))
            n = 0
            for i in range(2, 8):
                n = n << 6 | val(i)
            body = 8
        else:
            if len(text) < 4:
                raise Graph6Error("truncated size field", base + len(text))
            n = 0
            for i in range(1, 4):
                n = n << 6 | val(i)
            body = 4

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(text) - body < need:
        raise Graph6Error(
            f"data section has {len(text) - body} bytes, expected {need}",
            base + len(text),
        )
    if len(text) - body > need:
        raise Graph6Error("trailing bytes after graph6 data", base + body + need)

    rows = [0] * n
    u = 0
    v = 1
    for i in range(body, body + need):
        group = val(i)
        for k in range(5, -1, -1):
            if v >= n:
                if group >> k & 1:
                    raise Graph6Error("nonzero padding bit", base + i)
                continue
            if group >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            u += 1
            if u == v:
                u = 0
                v += 1
    return Graph._unchecked(n, rows)


def _refine_cells(g: Graph) -> list[list[int]]:
    """Stable partition of vertices by iterated (color, neighbor colors).

    Cells come back in an isomorphism-invariant order, each cell sorted.
    Vertices in different cells can never be exchanged by an automorphism.
    """
    color = [0] * g.n
    ncells = 1
    while True:
        keys = {}
        for v in range(g.n):
            nbr = sorted(color[u] for u in bits(g.adj[v]))
            keys.setdefault((color[v], tuple(nbr)), []).append(v)
        if len(keys) == ncells:
            return [sorted(keys[k]) for k in sorted(keys)]
        for new, k in enumerate(sorted(keys)):
            for v in keys[k]:
                color[v] = new
        ncells = len(keys)


def _twin_masks(g: Graph) -> list[int]:
    """twin_masks[v] = bitset of u such that swapping u and v is an automorphism.

    u and v qualify iff their closed neighborhoods agree off {u, v}, which
    covers both the adjacent and the nonadjacent case.
    """
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    masks = [0] * g.n
    for v in range(g.n):
        for u in range(v + 1, g.n):
            if not (closed[v] ^ closed[u]) & ~((1 << v) | (1 << u)):
                masks[v] |= 1 << u
                masks[u] |= 1 << v
    return masks


def _min_order(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Vertex order minimizing the upper-triangle bit stream, plus the stream.

    Searches orders that list the refinement cells consecutively.  Within a
    cell, candidates linked by chains of twin swaps are interchangeable, so
    only the smallest of each chain is branched on.  A running best stream
    prunes any prefix that is already strictly larger.
    """
    n = g.n
    if n == 0:
        return 0, ()
    cells = _refine_cells(g)
    twin = _twin_masks(g)
    adj = g.adj
    total_bits = n * (n - 1) // 2

    best_bits: int | None = None
    best_order: tuple[int, ...] | None = None
    order = [0] * n

    def rec(depth: int, prefix: int, nbits: int, ci: int, rem: int) -> None:
        nonlocal best_bits, best_order
        if depth == n:
            if best_bits is None or prefix < best_bits:
                best_bits = prefix
                best_order = tuple(order)
            return
        if not rem:
            rec(depth, prefix, nbits, ci + 1, _cell_masks[ci + 1])
            return
        # One candidate per twin chain inside the remaining cell vertices.
        cands = []
        covered = 0
        scan = rem
        while scan:
            low = scan & -scan
            c = low.bit_length() - 1
            scan ^= low
            if covered >> c & 1:
                continue
            comp = low
            frontier = twin[c] & rem & ~comp
            while frontier:
                comp |= frontier
                grow = 0
                for u in bits(frontier):
                    grow |= twin[u] & rem & ~comp
                frontier = grow
            covered |= comp
            cands.append(c)
        scored = []
        for c in cands:
            col = 0
            ac = adj[c]
            for i in range(depth):
                col = col << 1 | (ac >> order[i] & 1)
            scored.append((col, c))
        scored.sort()
        for col, c in scored:
            new_prefix = (prefix << depth) | col
            nb = nbits + depth
            if best_bits is not None and new_prefix > best_bits >> (total_bits - nb):
                continue
            order[depth] = c
            rec(depth + 1, new_prefix, nb, ci, rem & ~(1 << c))

    _cell_masks = []
    for cell in cells:
        m = 0
        for v in cell:
            m |= 1 << v
        _cell_masks.append(m)
    rec(0, 0, 0, 0, _cell_masks[0])
    assert best_order is not None
    return best_bits, best_order


def _from_upper_stream(n: int, stream: int) -> Graph:
    """Rebuild a graph from its packed upper-triangle bit stream.

    Inverse of the second component of canonical_key: bit x(0,1) is the
    most significant, columns run left to right.
    """
    rows = [0] * n
    pos = n * (n - 1) // 2 - 1
    for v in range(1, n):
        for u in range(v):
            if stream >> pos & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            pos -= 1
    return Graph._unchecked(n, rows)


def canonical_key(g: Graph) -> tuple[int, int]:
    """Hashable key equal for two graphs iff they are isomorphic.

    The second component is the minimized upper-triangle bit stream packed
    into an int, high bits first, so equal keys mean equal canonical forms.
    """
    bits_, _ = _min_order(g)
    return (g.n, bits_)


def canonical_graph(g: Graph) -> Graph:
    """Isomorphic copy on the canonical vertex order."""
    _, order = _min_order(g)
    return relabel(g, order)


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonical relabeling; equal iff isomorphic."""
    return to_graph6(canonical_graph(g))
