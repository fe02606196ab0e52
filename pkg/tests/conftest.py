"""Shared fixtures: the small named hypergraphs every suite talks about."""

from __future__ import annotations

from fractions import Fraction

from hypalg import EMPTY, Hypergraph, LinComb, canonical_key, disjoint_union, from_edge_sets

# vertex bit conventions: a = bit 0, b = bit 1, c = bit 2, d = bit 3
P3 = from_edge_sets(3, [0b011, 0b110])  # path: edges {a,b}, {b,c}
TRIANGLE_EDGE = from_edge_sets(3, [0b111])  # one edge on all three vertices
K2 = from_edge_sets(2, [0b11])
POINT = from_edge_sets(1, [])  # a single vertex
POINT2 = from_edge_sets(2, [])
POINT3 = from_edge_sets(3, [])
LOOP = from_edge_sets(1, [0b1])  # one edge on a single vertex
LOOP2 = from_edge_sets(1, [0b1, 0b1])  # two such edges on one vertex
EMPTY_EDGE = from_edge_sets(0, [0])  # one edge with no vertices
EMPTY_EDGE2 = from_edge_sets(0, [0, 0])
CHER = from_edge_sets(2, [0b01, 0b11])  # edges {a}, {a,b}

PATH3 = from_edge_sets(4, [0b0011, 0b0110, 0b1100])  # tree path, three edges
STAR3 = from_edge_sets(4, [0b0011, 0b0101, 0b1001])  # tree star, three edges


def lc2(*terms) -> LinComb:
    """Rank-2 combination from (coeff, left hypergraph, right hypergraph)."""
    data: dict[tuple[bytes, ...], Fraction] = {}
    for coeff, left, right in terms:
        key = (canonical_key(left), canonical_key(right))
        data[key] = data.get(key, Fraction(0)) + Fraction(coeff)
    return LinComb(2, data)


def du(*hs: Hypergraph) -> Hypergraph:
    out = EMPTY
    for h in hs:
        out = disjoint_union(out, h)
    return out
