"""Incidence-matrix hypergraphs and their structural operations.

A hypergraph is an arbitrary boolean relation between a set of edges and a
set of vertices: edge ``e`` contains vertex ``v`` iff ``rows[e]`` has bit
``v`` set.  Nothing else is assumed: empty edges, duplicate edges and
isolated vertices are all legal, and every operation below preserves
multiset semantics (duplicate edges are never merged).

Everything here is a pure function over immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import HypergraphError, PreconditionError, ResourceLimitError

#: Hard cap on either axis; bitmasks are kept desk-sized on purpose.
MAX_SIDE = 64

#: Default cap for :func:`set_partitions`.
MAX_PARTITION_GROUND = 10


@dataclass(frozen=True)
class Hypergraph:
    """An ``m x n`` boolean incidence matrix (rows = edges, columns = vertices)."""

    m: int
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not (0 <= self.m <= MAX_SIDE and 0 <= self.n <= MAX_SIDE):
            raise HypergraphError(f"sides must be in 0..{MAX_SIDE}, got {self.m}x{self.n}")
        if len(self.rows) != self.m:
            raise HypergraphError(f"expected {self.m} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for row in self.rows:
            if not 0 <= row <= full:
                raise HypergraphError(f"row {row:#x} out of range for {self.n} vertices")

    @property
    def full_vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def full_edge_mask(self) -> int:
        return (1 << self.m) - 1

    def edge_vertices(self, e: int) -> list[int]:
        """Vertex indices of edge ``e``, ascending."""
        return bits_of(self.rows[e])

    def column(self, v: int) -> int:
        """Mask of edges incident to vertex ``v``."""
        mask = 0
        for e, row in enumerate(self.rows):
            if row >> v & 1:
                mask |= 1 << e
        return mask

    def __repr__(self) -> str:  # compact matrix form, rows as 0/1 strings
        body = ",".join(format(row, f"0{self.n}b")[::-1] if self.n else "-" for row in self.rows)
        return f"Hypergraph({self.m}x{self.n}:{body})"


EMPTY = Hypergraph(0, 0, ())


def bits_of(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, ascending as integers."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def edge_mask(vertices, n: int) -> int:
    """Bitmask of a vertex list; rejects out-of-range indices."""
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise HypergraphError(f"vertex index {v} out of range 0..{n - 1}")
        mask |= 1 << v
    return mask


def from_edge_sets(n: int, edges) -> Hypergraph:
    """Build a hypergraph from per-edge vertex bitmasks of width ``n``."""
    rows = tuple(edges)
    full = (1 << n) - 1
    for row in rows:
        if not 0 <= row <= full:
            raise HypergraphError(f"edge mask {row:#x} exceeds width {n}")
    return Hypergraph(len(rows), n, rows)


def single_full_edge(n: int, copies: int = 1) -> Hypergraph:
    """``copies`` parallel edges, each containing all ``n`` vertices."""
    return Hypergraph(copies, n, ((1 << n) - 1,) * copies)


def vertices_only(n: int) -> Hypergraph:
    """The edgeless hypergraph on ``n`` vertices."""
    return Hypergraph(0, n, ())


# ---------------------------------------------------------------------------
# the three involutions


def dual(h: Hypergraph) -> Hypergraph:
    """Transpose the relation: edges and vertices swap roles."""
    rows = []
    for v in range(h.n):
        mask = 0
        for e, row in enumerate(h.rows):
            if row >> v & 1:
                mask |= 1 << e
        rows.append(mask)
    return Hypergraph(h.n, h.m, tuple(rows))


def complement(h: Hypergraph) -> Hypergraph:
    """Flip every incidence bit (each edge is complemented inside V)."""
    full = h.full_vertex_mask
    return Hypergraph(h.m, h.n, tuple(row ^ full for row in h.rows))


INVOLUTIONS = ("id", "d", "c", "cd")


def derive(h: Hypergraph, which: str) -> Hypergraph:
    """Apply one of the involutions ``id``, ``d``, ``c``, ``cd``."""
    if which == "id":
        return h
    if which == "d":
        return dual(h)
    if which == "c":
        return complement(h)
    if which == "cd":
        out = dual(complement(h))
        # the two composition orders agree; this is structural, never data-dependent
        assert out == complement(dual(h))
        return out
    raise HypergraphError(f"unknown involution {which!r}")


# ---------------------------------------------------------------------------
# restrictions, traces, links, cores


def _compress(row: int, keep: int) -> int:
    """Re-index the bits of ``row`` onto the positions selected by ``keep``."""
    out = 0
    i = 0
    while keep:
        low = keep & -keep
        if row & low:
            out |= 1 << i
        i += 1
        keep ^= low
    return out


def select_edges(h: Hypergraph, edges: int) -> Hypergraph:
    """Keep the edges in ``edges`` (ascending index), all vertices retained."""
    rows = tuple(h.rows[e] for e in bits_of(edges))
    return Hypergraph(len(rows), h.n, rows)


def restrict_to(h: Hypergraph, vertices: int) -> Hypergraph:
    """Keep exactly the edges whose vertex set lies inside ``vertices``."""
    rows = tuple(
        _compress(row, vertices) for row in h.rows if row & ~vertices == 0
    )
    return Hypergraph(len(rows), popcount(vertices), rows)


def trace_to(h: Hypergraph, vertices: int) -> Hypergraph:
    """Keep every edge, intersecting its vertex set with ``vertices``."""
    rows = tuple(_compress(row & vertices, vertices) for row in h.rows)
    return Hypergraph(h.m, popcount(vertices), rows)


def co_restrict_edges(h: Hypergraph, edges: int) -> Hypergraph:
    """Keep the edges in ``edges`` and the vertices incident only to them."""
    kept_v = 0
    for v in range(h.n):
        if h.column(v) & ~edges == 0:
            kept_v |= 1 << v
    rows = tuple(_compress(h.rows[e] & kept_v, kept_v) for e in bits_of(edges))
    return Hypergraph(len(rows), popcount(kept_v), rows)


def link(h: Hypergraph, vertices: int) -> int:
    """Edges containing every vertex of ``vertices`` (all edges if empty)."""
    mask = 0
    for e, row in enumerate(h.rows):
        if row & vertices == vertices:
            mask |= 1 << e
    return mask


def core(h: Hypergraph, edges: int) -> int:
    """Vertices lying on every edge of ``edges`` (all vertices if empty)."""
    mask = h.full_vertex_mask
    for e in bits_of(edges):
        mask &= h.rows[e]
    return mask


def special_subsets(h: Hypergraph) -> tuple[int, int, int, int]:
    """Masks ``(E*, V*, E^x, V^x)``: nonempty edges, covered vertices,
    non-full edges, and vertices missed by some edge."""
    estar = 0
    ecross = 0
    full = h.full_vertex_mask
    covered = 0
    missed = 0
    for e, row in enumerate(h.rows):
        if row:
            estar |= 1 << e
        if row != full:
            ecross |= 1 << e
        covered |= row
        missed |= row ^ full
    return estar, covered, ecross, missed


def popcount(mask: int) -> int:
    return mask.bit_count()


# ---------------------------------------------------------------------------
# connectivity and contraction


def _vertex_blocks(n: int, family: list[int]) -> list[int]:
    """Partition ``range(n)`` by the relation "share a row of ``family``".

    Every vertex appears: vertices untouched by the family are singleton
    blocks.  Blocks are ordered by their smallest vertex.
    """
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for row in family:
        vs = bits_of(row)
        for v in vs[1:]:
            ra, rb = find(vs[0]), find(v)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

    blocks: dict[int, int] = {}
    for v in range(n):
        root = find(v)
        blocks[root] = blocks.get(root, 0) | (1 << v)
    return [blocks[root] for root in sorted(blocks)]


def vertex_components(h: Hypergraph) -> list[tuple[int, int]]:
    """Connected components as ``(edge mask, vertex mask)`` pairs.

    Vertices are connected when they share an edge.  Isolated vertices form
    singleton components with an empty edge part; empty edges belong to no
    component.  Components are ordered by smallest vertex index.
    """
    blocks = _vertex_blocks(h.n, [row for row in h.rows if row])
    out = []
    for block in blocks:
        edges = 0
        for e, row in enumerate(h.rows):
            if row and row & block:
                edges |= 1 << e
        out.append((edges, block))
    return out


def is_vertex_connected(h: Hypergraph) -> bool:
    """True when the "share an edge" relation has a single class on V.

    The empty hypergraph and a bare single vertex both count as connected.
    """
    return len(vertex_components(h)) <= 1


def quotient_blocks(n: int, family: list[int]) -> list[int]:
    """Blocks of the quotient of ``range(n)`` collapsing each family row."""
    return _vertex_blocks(n, family)


def union_push(row: int, blocks: list[int]) -> int:
    """Image of a vertex set in the quotient: blocks it meets."""
    out = 0
    for i, block in enumerate(blocks):
        if row & block:
            out |= 1 << i
    return out


def core_push(row: int, blocks: list[int]) -> int:
    """Blocks entirely contained in the vertex set (used by the c-variants)."""
    out = 0
    for i, block in enumerate(blocks):
        if block & ~row == 0:
            out |= 1 << i
    return out


def contract(h: Hypergraph, edges: int) -> Hypergraph:
    """Contract the vertex set by the edge family ``edges``.

    Each connected component of the selected sub-hypergraph collapses to one
    vertex; untouched vertices survive as themselves.  The result keeps the
    complementary edges (including any empty edges of ``h``), with vertex
    sets pushed through the quotient.  ``edges`` may not contain empty edges.
    """
    estar = special_subsets(h)[0]
    if edges & ~estar:
        raise PreconditionError("cannot contract by an empty edge")
    family = [h.rows[e] for e in bits_of(edges)]
    blocks = quotient_blocks(h.n, family)
    keep = h.full_edge_mask & ~edges
    rows = tuple(union_push(h.rows[e], blocks) for e in bits_of(keep))
    return Hypergraph(len(rows), len(blocks), rows)


# ---------------------------------------------------------------------------
# products


def disjoint_union(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
    """Block-diagonal union; the empty hypergraph is the unit."""
    rows = h1.rows + tuple(row << h1.n for row in h2.rows)
    return Hypergraph(h1.m + h2.m, h1.n + h2.n, rows)


def complement_union(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
    """Union where each side's edges absorb all of the other side's vertices.

    Equals ``complement(disjoint_union(complement(h1), complement(h2)))``.
    """
    full1 = h1.full_vertex_mask
    full2 = h2.full_vertex_mask
    rows = tuple(row | (full2 << h1.n) for row in h1.rows) + tuple(
        (row << h1.n) | full1 for row in h2.rows
    )
    return Hypergraph(h1.m + h2.m, h1.n + h2.n, rows)


def two_section(h: Hypergraph) -> Hypergraph:
    """The simple graph joining two vertices iff some edge contains both."""
    pairs = set()
    for row in h.rows:
        vs = bits_of(row)
        for i, u in enumerate(vs):
            for v in vs[i + 1 :]:
                pairs.add((u, v))
    rows = tuple((1 << u) | (1 << v) for u, v in sorted(pairs))
    return Hypergraph(len(rows), h.n, rows)


# ---------------------------------------------------------------------------
# set partitions (enumeration substrate for the partition coproduct)


def set_partitions(k: int, max_k: int = MAX_PARTITION_GROUND) -> Iterator[tuple[int, ...]]:
    """All set partitions of ``range(k)`` as tuples of vertex masks.

    Enumerated via restricted-growth strings in lexicographic order, so
    blocks come out ordered by their smallest element.  ``k = 0`` yields the
    single empty partition.
    """
    if k > max_k:
        raise ResourceLimitError(f"set partitions of {k} elements exceed bound {max_k}")
    if k == 0:
        yield ()
        return
    rgs = [0] * k

    def emit() -> tuple[int, ...]:
        nblocks = max(rgs) + 1
        blocks = [0] * nblocks
        for i, b in enumerate(rgs):
            blocks[b] |= 1 << i
        return tuple(blocks)

    while True:
        yield emit()
        # advance the restricted-growth string
        i = k - 1
        while i > 0:
            if rgs[i] <= max(rgs[:i]):
                rgs[i] += 1
                for j in range(i + 1, k):
                    rgs[j] = 0
                break
            i -= 1
        else:
            return
