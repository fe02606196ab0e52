"""Each hypergraph owns four chromatic polynomials, one per quartet member.

chi(h) at k counts vertex colorings with k colors leaving no edge
monochromatic; the other three slots apply the same invariant to the dual,
the complement, and the dual complement.  Trees famously share one
chromatic polynomial; their quartets tell them apart.
"""

from hypalg import Hypergraph, quartet, single_full_edge

from _common import show_poly

LABELS = ("chi", "chi_d", "chi_c", "chi_cd")


def show_quartet(title, h):
    print(title)
    for label, poly in zip(LABELS, quartet(h)):
        show_poly(label, poly)
    print()


# An m-fold edge covering a vertices: (x^a - x, x^m - x, x^a, x^m).
show_quartet("3 parallel edges covering 4 vertices:", single_full_edge(4, copies=3))

# The two trees with three edges share chi but split on the complements.
path = Hypergraph(3, 4, (0b0011, 0b0110, 0b1100))
star = Hypergraph(3, 4, (0b0011, 0b0101, 0b1001))
show_quartet("path with three edges:", path)
show_quartet("star with three edges:", star)

# Doubling one group of vertices in a triangle pattern shifts the exponents.
triangle = Hypergraph(3, 4, (0b0111, 0b1011, 0b1100))
show_quartet("triangle pattern with a doubled corner:", triangle)
