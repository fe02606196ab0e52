"""Canonical forms for hypergraph isomorphism classes.

Two hypergraphs are isomorphic when some pair of edge/vertex bijections
carries one incidence matrix onto the other.  The key here is a minimal
matrix serialization prefixed by the shape: rows are read as integers with
the first-placed column most significant and sorted ascending, and we
minimize over column orders.

To keep the search desk-cheap the columns are first partitioned by an
iterated degree refinement (weight, then multiset of incident row classes,
repeated until stable).  The cell sequence is itself an isomorphism
invariant, so minimizing only over cell-respecting column orders still
yields one key per class: equal keys decode to equal matrices, hence give
explicit bijections, and isomorphic inputs share cell structure, hence the
same restricted minimum.  Within cells a best-first backtracking search
prunes with a packed-low-bits bound; duplicate columns branch once.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import HypergraphError
from .hypergraph import Hypergraph, popcount


def _refined_column_cells(
    rows: tuple[int, ...], m: int, n: int
) -> tuple[list[list[int]], list[int]]:
    """Columns grouped by a stable bipartite degree refinement, cells ordered
    by their (isomorphism-invariant) class signature; also returns the
    column incidence patterns."""
    colmask = []
    for j in range(n):
        mask = 0
        for e, row in enumerate(rows):
            if row >> j & 1:
                mask |= 1 << e
        colmask.append(mask)

    r_id = [popcount(row) for row in rows]
    c_id = [popcount(colmask[j]) for j in range(n)]
    for _ in range(m + n + 1):
        c_sig = [
            (c_id[j], tuple(sorted(r_id[e] for e in range(m) if colmask[j] >> e & 1)))
            for j in range(n)
        ]
        r_sig = [
            (r_id[e], tuple(sorted(c_id[j] for j in range(n) if rows[e] >> j & 1)))
            for e in range(m)
        ]
        c_order = {sig: i for i, sig in enumerate(sorted(set(c_sig)))}
        r_order = {sig: i for i, sig in enumerate(sorted(set(r_sig)))}
        new_c = [c_order[sig] for sig in c_sig]
        new_r = [r_order[sig] for sig in r_sig]
        if new_c == c_id and new_r == r_id:
            break
        c_id, r_id = new_c, new_r

    cells: dict[int, list[int]] = {}
    for j in range(n):
        cells.setdefault(c_id[j], []).append(j)
    return [cells[cid] for cid in sorted(cells)], colmask


@lru_cache(maxsize=200_000)
def _canonical_rows(h: Hypergraph) -> tuple[int, ...]:
    rows = h.rows
    m, n = h.m, h.n
    if n == 0:
        return (0,) * m
    if m == 0:
        return ()

    cells, colmask = _refined_column_cells(rows, m, n)
    best: tuple[int, ...] | None = None

    def lower_bound(prefixes: list[int], ones: list[int], left: int) -> tuple[int, ...]:
        # each row still owes `ones[e]` set bits; the least it can reach packs
        # them into the low positions, which bounds every completion
        return tuple(sorted((p << left) | ((1 << o) - 1) for p, o in zip(prefixes, ones)))

    def rec(prefixes: list[int], ones: list[int], cell_idx: int, cell: tuple[int, ...], left: int) -> None:
        nonlocal best
        while not cell:
            cell_idx += 1
            if cell_idx == len(cells):
                candidate = tuple(sorted(prefixes))
                if best is None or candidate < best:
                    best = candidate
                return
            cell = tuple(cells[cell_idx])
        children = []
        seen = set()
        for i, c in enumerate(cell):
            pattern = colmask[c]
            if pattern in seen:
                continue
            seen.add(pattern)
            bits = [pattern >> e & 1 for e in range(m)]
            nxt_p = [(p << 1) | b for p, b in zip(prefixes, bits)]
            nxt_o = [o - b for o, b in zip(ones, bits)]
            children.append((lower_bound(nxt_p, nxt_o, left - 1), i, nxt_p, nxt_o))
        children.sort(key=lambda item: item[0])
        for bound, i, nxt_p, nxt_o in children:
            if best is not None and bound >= best:
                break  # children are bound-sorted: the rest cannot improve
            rec(nxt_p, nxt_o, cell_idx, cell[:i] + cell[i + 1 :], left - 1)

    rec([0] * m, [popcount(row) for row in rows], 0, tuple(cells[0]), n)
    assert best is not None
    return best


def canonical_key(h: Hypergraph) -> bytes:
    """Labeling-independent identifier of the isomorphism class of ``h``."""
    rows = _canonical_rows(h)
    return bytes((h.m, h.n)) + b"".join(row.to_bytes(8, "big") for row in rows)


def canonical_form(h: Hypergraph) -> Hypergraph:
    """A canonical representative: ``canonical_form(h) == from_key(canonical_key(h))``."""
    return Hypergraph(h.m, h.n, _canonical_rows(h))


@lru_cache(maxsize=200_000)
def from_key(key: bytes) -> Hypergraph:
    """Decode a canonical key back into its representative hypergraph."""
    if len(key) < 2:
        raise HypergraphError("canonical key too short")
    m, n = key[0], key[1]
    if len(key) != 2 + 8 * m:
        raise HypergraphError("canonical key has wrong length for its shape")
    rows = tuple(int.from_bytes(key[2 + 8 * e : 10 + 8 * e], "big") for e in range(m))
    return Hypergraph(m, n, rows)


def relabel(h: Hypergraph, edge_perm, vertex_perm) -> Hypergraph:
    """Apply explicit bijections: new edge ``i`` is old edge ``edge_perm[i]``,
    new vertex ``j`` is old vertex ``vertex_perm[j]``."""
    rows = []
    for i in range(h.m):
        old = h.rows[edge_perm[i]]
        row = 0
        for j in range(h.n):
            if old >> vertex_perm[j] & 1:
                row |= 1 << j
        rows.append(row)
    return Hypergraph(h.m, h.n, tuple(rows))
