"""Coproducts, counits and products on hypergraph isomorphism classes.

Five base coproducts are implemented directly:

* ``Delta``  - split the vertex set, restricting edges to each side;
* ``delta``  - extract an edge subset, contract the rest onto the quotient;
* ``Dprime`` - restrict edges on the left, trace every edge on the right;
* ``Dpp``    - trace every edge onto both sides of a vertex split;
* ``dpp``    - sum over vertex partitions with connected fibers, pairing the
  fiber product with the trace onto the block set.

Each base conjugates by the involutions ``d``, ``c`` and ``cd``, giving the
twenty instantiated coproducts.  Conjugated kinds are always computed
literally as ``(w (x) w) o base o w``; their closed forms live in
:mod:`hypalg.laws` as independent cross-check oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Callable, Iterator

from .canon import canonical_key, from_key
from .errors import HypergraphError, ResourceLimitError
from .hypergraph import (
    EMPTY,
    Hypergraph,
    complement_union,
    contract,
    derive,
    disjoint_union,
    is_vertex_connected,
    popcount,
    restrict_to,
    select_edges,
    set_partitions,
    special_subsets,
    submasks,
    trace_to,
    union_push,
    vertex_components,
)
from .lincomb import LinComb

#: At most this many subset terms are enumerated in one coproduct call.
SUBSET_LIMIT = 1 << 12

#: Ground-set cap for the partition coproduct.
PARTITION_LIMIT = 10

BASES = ("Delta", "delta", "Dprime", "Dpp", "dpp")
INVOLUTIONS = ("id", "d", "c", "cd")


@dataclass(frozen=True)
class CoproductKind:
    """A base coproduct together with the involution conjugating it."""

    base: str
    invol: str = "id"

    def __post_init__(self) -> None:
        if self.base not in BASES:
            raise HypergraphError(f"unknown coproduct base {self.base!r}")
        if self.invol not in INVOLUTIONS:
            raise HypergraphError(f"unknown involution {self.invol!r}")

    @property
    def name(self) -> str:
        return self.base if self.invol == "id" else f"{self.base}-{self.invol}"

    @classmethod
    def parse(cls, name: str) -> "CoproductKind":
        base, _, invol = name.partition("-")
        return cls(base, invol or "id")


ALL_KINDS = tuple(CoproductKind(b, w) for b in BASES for w in INVOLUTIONS)


def _guard_subsets(count_bits: int, what: str) -> None:
    if 1 << count_bits > SUBSET_LIMIT:
        raise ResourceLimitError(
            f"{what}: 2^{count_bits} subset terms exceed the {SUBSET_LIMIT} cap"
        )


def _terms_Delta(h: Hypergraph) -> Iterator[tuple[Hypergraph, Hypergraph]]:
    _guard_subsets(h.n, "Delta")
    full = h.full_vertex_mask
    for u in submasks(full):
        yield restrict_to(h, u), restrict_to(h, full ^ u)


def _terms_delta(h: Hypergraph) -> Iterator[tuple[Hypergraph, Hypergraph]]:
    estar = special_subsets(h)[0]
    _guard_subsets(popcount(estar), "delta")
    for f in submasks(estar):
        yield select_edges(h, f), contract(h, f)


def _terms_Dprime(h: Hypergraph) -> Iterator[tuple[Hypergraph, Hypergraph]]:
    _guard_subsets(h.n, "Dprime")
    full = h.full_vertex_mask
    for u in submasks(full):
        yield restrict_to(h, u), trace_to(h, full ^ u)


def _terms_Dpp(h: Hypergraph) -> Iterator[tuple[Hypergraph, Hypergraph]]:
    _guard_subsets(h.n, "Dpp")
    full = h.full_vertex_mask
    for u in submasks(full):
        yield trace_to(h, u), trace_to(h, full ^ u)


def _terms_dpp(h: Hypergraph) -> Iterator[tuple[Hypergraph, Hypergraph]]:
    if h.n > PARTITION_LIMIT:
        raise ResourceLimitError(f"dpp: partitions of {h.n} vertices exceed cap {PARTITION_LIMIT}")
    for blocks in set_partitions(h.n, PARTITION_LIMIT):
        fibers = []
        for block in blocks:
            incident = 0
            for e, row in enumerate(h.rows):
                if row & block:
                    incident |= 1 << e
            fiber = trace_to(select_edges(h, incident), block)
            if not is_vertex_connected(fiber):
                break
            fibers.append(fiber)
        else:
            left = reduce(disjoint_union, fibers, EMPTY)
            right = Hypergraph(h.m, len(blocks), tuple(union_push(row, list(blocks)) for row in h.rows))
            yield left, right


_BASE_TERMS = {
    "Delta": _terms_Delta,
    "delta": _terms_delta,
    "Dprime": _terms_Dprime,
    "Dpp": _terms_Dpp,
    "dpp": _terms_dpp,
}


@lru_cache(maxsize=200_000)
def coproduct(kind: CoproductKind, h: Hypergraph) -> LinComb:
    """The coproduct of ``h`` as a rank-2 combination of canonical keys."""
    terms: dict[tuple[bytes, ...], Fraction] = {}
    if kind.invol == "id":
        for a, b in _BASE_TERMS[kind.base](h):
            key = (canonical_key(a), canonical_key(b))
            terms[key] = terms.get(key, Fraction(0)) + 1
    else:
        w = kind.invol
        for a, b in _BASE_TERMS[kind.base](derive(h, w)):
            key = (canonical_key(derive(a, w)), canonical_key(derive(b, w)))
            terms[key] = terms.get(key, Fraction(0)) + 1
    return LinComb(2, terms)


def coproduct_of_key(kind: CoproductKind, key: bytes) -> LinComb:
    """Coproduct applied to a canonical key (for slot expansion)."""
    return coproduct(kind, from_key(key))


def coproduct_map(kind: CoproductKind) -> Callable[[bytes], LinComb]:
    return lambda key: coproduct_of_key(kind, key)


# ---------------------------------------------------------------------------
# counits

COUNIT_KINDS = (
    "epsDelta",
    "epsDeltaD",
    "epsDeltaC",
    "epsDeltaCD",
    "epsdelta",
    "epsDoublePrime",
)


def _eps_no_vertices(h: Hypergraph) -> Fraction:
    return Fraction(1 if h.n == 0 else 0)


def _eps_no_edges(h: Hypergraph) -> Fraction:
    return Fraction(1 if h.m == 0 else 0)


def _eps_double_prime(h: Hypergraph) -> Fraction:
    """1 iff every connected component of ``h`` consists of a single vertex
    (edges on that vertex allowed; the empty hypergraph qualifies)."""
    return Fraction(1 if all(popcount(vs) == 1 for _, vs in vertex_components(h)) else 0)


_COUNITS = {
    "epsDelta": _eps_no_vertices,
    "epsDeltaD": _eps_no_edges,
    "epsDeltaC": _eps_no_vertices,
    "epsDeltaCD": _eps_no_edges,
    "epsdelta": _eps_no_edges,
    "epsDoublePrime": _eps_double_prime,
}


def counit(kind: str, h: Hypergraph) -> Fraction:
    """Evaluate one of the named counit functionals on a basis hypergraph."""
    try:
        return _COUNITS[kind](h)
    except KeyError:
        raise HypergraphError(f"unknown counit kind {kind!r}") from None


_BASE_COUNIT = {
    "Delta": _eps_no_vertices,
    "Dprime": _eps_no_vertices,
    "Dpp": _eps_no_vertices,
    "delta": _eps_no_edges,
    "dpp": _eps_double_prime,
}


def counit_for(kind: CoproductKind) -> Callable[[Hypergraph], Fraction]:
    """The stated counit of a coproduct kind: the base counit conjugated."""
    base = _BASE_COUNIT[kind.base]
    if kind.invol == "id":
        return base
    w = kind.invol
    return lambda h: base(derive(h, w))


def counit_of_key(kind: CoproductKind) -> Callable[[bytes], LinComb]:
    """Counit as a rank-0 slot map on canonical keys."""
    eps = counit_for(kind)
    return lambda key: LinComb.scalar(eps(from_key(key)))


# ---------------------------------------------------------------------------
# products and subspaces

KEY_ONE = canonical_key(EMPTY)

PRODUCT_KINDS = ("mu", "muC")


@lru_cache(maxsize=500_000)
def product_on_keys(kind: str, a: bytes, b: bytes) -> bytes:
    """Multiply two classes: disjoint union (``mu``) or its complement
    conjugate (``muC``), re-canonicalized."""
    ha, hb = from_key(a), from_key(b)
    if kind == "mu":
        return canonical_key(disjoint_union(ha, hb))
    if kind == "muC":
        return canonical_key(complement_union(ha, hb))
    raise HypergraphError(f"unknown product kind {kind!r}")


def product_for(kind: CoproductKind) -> str:
    """Which product makes this coproduct a bialgebra map: ``mu`` for the
    id/d conjugates, ``muC`` for the c/cd conjugates."""
    return "mu" if kind.invol in ("id", "d") else "muC"


def product_fn(kind: str) -> Callable[[Hypergraph, Hypergraph], Hypergraph]:
    return disjoint_union if kind == "mu" else complement_union


def in_subspace(h: Hypergraph, invol: str) -> bool:
    """Membership in the subspace carrying the extraction coproduct of the
    given conjugate: no empty edges (id), no isolated vertices (d), no full
    edges (c), no vertex on every edge (cd)."""
    estar, vstar, ecross, vcross = special_subsets(h)
    if invol == "id":
        return estar == h.full_edge_mask
    if invol == "d":
        return vstar == h.full_vertex_mask
    if invol == "c":
        return ecross == h.full_edge_mask
    if invol == "cd":
        return vcross == h.full_vertex_mask
    raise HypergraphError(f"unknown involution {invol!r}")


def grading_axis(kind: CoproductKind) -> str | None:
    """Which cardinality the coproduct splits additively: ``"V"``, ``"E"`` or
    ``None`` (the partition coproduct is not graded this way)."""
    if kind.base == "dpp":
        return None
    if kind.base == "delta":
        return "E" if kind.invol in ("id", "c") else "V"
    return "V" if kind.invol in ("id", "c") else "E"
