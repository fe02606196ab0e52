"""A hypergraph is just a 0/1 incidence matrix, and it comes in a quartet.

Rows are edges, columns are vertices.  Transposing the relation (``d``),
flipping every bit (``c``), or doing both (``cd``) are involutions, so every
hypergraph drags three companions along with it.
"""

from hypalg import Hypergraph, canonical_key, derive
from hypalg.canon import relabel

from _common import matrix_block

# Two edges on four vertices: edge 1 = {b, d}, edge 2 = {a, c, d}.
h = Hypergraph(2, 4, (0b1010, 0b1101))

for op, label in [("id", "h"), ("d", "dual"), ("c", "complement"), ("cd", "dual complement")]:
    print(f"{label}:")
    print(matrix_block(derive(h, op)))
    print()

# The two routes to the fourth member agree, and everything is an involution.
from hypalg import complement, dual

assert dual(complement(h)) == complement(dual(h))
assert dual(dual(h)) == h and complement(complement(h)) == h
print("dual/complement commute and square to the identity\n")

# Canonical keys ignore the labeling: shuffle edges and vertices at will.
shuffled = relabel(h, [1, 0], [3, 1, 0, 2])
print("shuffled matrix:")
print(matrix_block(shuffled))
print("same canonical key:", canonical_key(h) == canonical_key(shuffled))
