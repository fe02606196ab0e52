"""The two coproduct families on the path and on the full 3-vertex edge.

The vertex-split coproduct sums over vertex subsets, restricting edges to
each side.  The extraction coproduct pulls out an edge subset and contracts
its connected components to points on the other side.  Conjugating by the
involutions turns each of them into four.
"""

from hypalg import CoproductKind, coproduct, from_edge_sets

from _common import show_lincomb

path = from_edge_sets(3, [0b011, 0b110])  # edges {a,b}, {b,c}
full3 = from_edge_sets(3, [0b111])  # one edge on all three vertices

print("=== vertex-split family on the path ===\n")
for name in ("Delta", "Delta-d", "Delta-c", "Delta-cd"):
    show_lincomb(name, coproduct(CoproductKind.parse(name), path))

print("=== extraction-contraction family on the full 3-edge ===\n")
for name in ("delta", "delta-d", "delta-c", "delta-cd"):
    show_lincomb(name, coproduct(CoproductKind.parse(name), full3))

print("=== descent coproducts on the 2-vertex edge ===\n")
edge = from_edge_sets(2, [0b11])
for name in ("Dprime", "Dpp", "dpp"):
    show_lincomb(name, coproduct(CoproductKind.parse(name), edge))
