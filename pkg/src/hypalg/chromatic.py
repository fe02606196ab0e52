"""Coloring counts, exact polynomials, and the chromatic quartets.

The counting oracles enumerate every coloring outright (numpy does the
bookkeeping, the semantics stay brute force).  Polynomials are exact
rational interpolations of those counts; a signed subset expansion and a
deletion-contraction routine provide independent fast paths that the test
suite pins against the oracles.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .canon import canonical_key
from .errors import HypergraphError, ResourceLimitError
from .hypergraph import (
    Hypergraph,
    bits_of,
    derive,
    popcount,
    quotient_blocks,
    two_section,
)

#: Largest number of colorings a single counting call may enumerate.
COUNT_LIMIT = 30_000_000

#: Interpolation bounds for polynomial construction.
MAX_POLY_VERTICES = 16
MAX_POLY_EDGES = 20


class Polynomial:
    """Dense exact-rational polynomial in one variable, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x_power(cls, k: int, scale=1) -> "Polynomial":
        return cls((0,) * k + (scale,))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        width = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            + (other.coeffs[i] if i < len(other.coeffs) else 0)
            for i in range(width)
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def scale(self, c) -> "Polynomial":
        return Polynomial(Fraction(c) * v for v in self.coeffs)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_strings(self) -> list[str]:
        """Coefficients as decimal strings, constant term first."""
        if not self.is_integral():
            raise HypergraphError("polynomial has non-integer coefficients")
        return [str(c.numerator) for c in self.coeffs]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Polynomial(0)"
        parts = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return "Polynomial(" + " + ".join(parts) + ")"


ZERO_POLY = Polynomial()
ONE_POLY = Polynomial((1,))


def _all_colorings(n: int, k: int) -> np.ndarray:
    """Every map from ``n`` vertices to ``k`` colors, one row per map."""
    if k ** max(n, 1) > COUNT_LIMIT:
        raise ResourceLimitError(f"{k}^{n} colorings exceed the enumeration cap")
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    if k == 0:
        return np.zeros((0, n), dtype=np.int8)
    grids = np.indices((k,) * n, dtype=np.int8)
    return grids.reshape(n, -1).T


def count_colorings(h: Hypergraph, k: int) -> int:
    """Colorings of the vertices with ``k`` colors where no edge is
    monochromatic.  An empty edge is monochromatic (kills everything); an
    empty vertex set with no edges admits exactly one coloring."""
    colorings = _all_colorings(h.n, k)
    valid = np.ones(len(colorings), dtype=bool)
    for row in h.rows:
        vs = bits_of(row)
        mono = np.ones(len(colorings), dtype=bool)
        for v in vs[1:]:
            mono &= colorings[:, v] == colorings[:, vs[0]]
        valid &= ~mono
    return int(valid.sum())


def count_rainbow(h: Hypergraph, k: int) -> int:
    """Colorings where every edge is injectively colored; empty and
    one-vertex edges are vacuously rainbow."""
    colorings = _all_colorings(h.n, k)
    valid = np.ones(len(colorings), dtype=bool)
    for row in h.rows:
        vs = bits_of(row)
        for i, u in enumerate(vs):
            for v in vs[i + 1 :]:
                valid &= colorings[:, u] != colorings[:, v]
    return int(valid.sum())


def interpolate(values) -> Polynomial:
    """Exact Lagrange interpolation through ``(node, value)`` pairs."""
    points = [(Fraction(x), Fraction(y)) for x, y in values]
    nodes = [x for x, _ in points]
    if len(set(nodes)) != len(nodes):
        raise HypergraphError("interpolation nodes must be distinct")
    out = Polynomial()
    for i, (xi, yi) in enumerate(points):
        term = Polynomial((yi,))
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            term = term * Polynomial((-xj, 1)).scale(Fraction(1, xi - xj))
        out = out + term
    return out


def drop_empty_edges(h: Hypergraph) -> Hypergraph:
    """Remove all-empty edges; the polynomial morphism sends them to 1."""
    rows = tuple(row for row in h.rows if row)
    return Hypergraph(len(rows), h.n, rows)


def _guard_poly(h: Hypergraph) -> None:
    if h.n > MAX_POLY_VERTICES or h.m > MAX_POLY_EDGES:
        raise ResourceLimitError(f"polynomial bounds exceeded for {h.m}x{h.n}")


def chromatic_poly(h: Hypergraph) -> Polynomial:
    """The chromatic polynomial: empty edges dropped, then the degree-<=n
    interpolation of the coloring counts at 0..n.  Integer coefficients are
    asserted after construction."""
    hs = drop_empty_edges(h)
    _guard_poly(hs)
    poly = interpolate((k, count_colorings(hs, k)) for k in range(hs.n + 1))
    if not poly.is_integral():
        raise HypergraphError("chromatic polynomial came out non-integral")
    return poly


def chromatic_incl_excl(h: Hypergraph) -> Polynomial:
    """Signed subset expansion: sum over edge subsets of ``(-1)^|F|`` times
    ``x^(vertices of the contraction by F)``.  Fast path; the suite pins it
    against the interpolated polynomial."""
    hs = drop_empty_edges(h)
    _guard_poly(hs)
    acc: dict[int, int] = {}
    for f in range(1 << hs.m):
        family = [hs.rows[e] for e in bits_of(f)]
        exponent = len(quotient_blocks(hs.n, family))
        acc[exponent] = acc.get(exponent, 0) + (-1) ** popcount(f)
    width = max(acc) + 1 if acc else 0
    coeffs = [Fraction(0)] * width
    for exponent, value in acc.items():
        coeffs[exponent] += value
    return Polynomial(coeffs)


def quartet(h: Hypergraph) -> tuple[Polynomial, Polynomial, Polynomial, Polynomial]:
    """The four chromatic polynomials of ``h`` and its derived hypergraphs."""
    return tuple(chromatic_poly(derive(h, w)) for w in ("id", "d", "c", "cd"))


# ---------------------------------------------------------------------------
# rainbow polynomials via the 2-section

_dc_memo: dict[bytes, Polynomial] = {}


def _simple_graph_poly(g: Hypergraph) -> Polynomial:
    """Classical chromatic polynomial of a simple graph by
    deletion-contraction, memoized on the canonical key."""
    key = canonical_key(g)
    cached = _dc_memo.get(key)
    if cached is not None:
        return cached
    if any(popcount(row) == 1 for row in g.rows):
        poly = ZERO_POLY  # a loop: never produced by the 2-section, guarded anyway
    elif g.m == 0:
        poly = Polynomial.x_power(g.n)
    else:
        u, v = bits_of(g.rows[0])
        deleted = Hypergraph(g.m - 1, g.n, g.rows[1:])
        # contract u,v: map v onto u, drop the column, merge parallels
        merged = []
        for row in g.rows[1:]:
            if row >> v & 1:
                row = (row & ~(1 << v)) | (1 << u)
            keep = row & ((1 << v) - 1)
            high = (row >> (v + 1)) << v
            merged.append(keep | high)
        contracted = Hypergraph(
            len(set(merged)), g.n - 1, tuple(sorted(set(merged)))
        )
        poly = _simple_graph_poly(deleted) - _simple_graph_poly(contracted)
    _dc_memo[key] = poly
    return poly


def rainbow_poly(h: Hypergraph) -> Polynomial:
    """Chromatic polynomial of the 2-section: counts colorings where every
    edge sees pairwise distinct colors."""
    _guard_poly(h)
    poly = _simple_graph_poly(two_section(h))
    if not poly.is_integral():
        raise HypergraphError("rainbow polynomial came out non-integral")
    return poly


def rainbow_quartet(h: Hypergraph) -> tuple[Polynomial, Polynomial, Polynomial, Polynomial]:
    return tuple(rainbow_poly(derive(h, w)) for w in ("id", "d", "c", "cd"))


def vanishing_criteria(h: Hypergraph) -> tuple[bool, bool, bool, bool]:
    """The four matrix conditions (row with exactly one 1, column with
    exactly one 1, row with exactly one 0, column with exactly one 0); each
    is equivalent to the corresponding quartet polynomial vanishing."""
    cols = [h.column(v) for v in range(h.n)]
    row_one = any(popcount(row) == 1 for row in h.rows)
    col_one = any(popcount(col) == 1 for col in cols)
    row_zero = any(popcount(row) == h.n - 1 for row in h.rows)
    col_zero = any(popcount(col) == h.m - 1 for col in cols)
    return row_one, col_one, row_zero, col_zero
