"""Instance generators and executable law suites.

Every algebraic claim the library relies on is run here as a check over
small instances: exhaustive isomorphism-class enumeration up to configured
bounds plus seeded random samples.  Failures are recorded with both sides'
full term lists and the serialized instance, so a counterexample can be
re-checked without re-running the suite.
"""

from __future__ import annotations

import itertools
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .canon import canonical_key, from_key
from .chromatic import (
    Polynomial,
    count_colorings,
    count_rainbow,
    quartet,
    rainbow_poly,
    rainbow_quartet,
    chromatic_poly,
)
from .coalgebra import (
    ALL_KINDS,
    KEY_ONE,
    CoproductKind,
    coproduct,
    coproduct_map,
    counit_for,
    counit_of_key,
    in_subspace,
    product_fn,
    product_for,
    product_on_keys,
)
from .errors import ResourceLimitError
from .hgx import parse_hgx, serialize_hgx
from .hypergraph import (
    EMPTY,
    Hypergraph,
    co_restrict_edges,
    contract,
    core,
    core_push,
    dual,
    is_vertex_connected,
    link,
    quotient_blocks,
    restrict_to,
    select_edges,
    set_partitions,
    single_full_edge,
    special_subsets,
    submasks,
    trace_to,
    union_push,
    vertices_only,
)
from .lincomb import LinComb, apply_slot, mult_slots_13, tau_13

SUITE_NAMES = (
    "coassoc",
    "counit",
    "bialgebra",
    "mixed",
    "cointeraction",
    "convolution",
    "quartet-golden",
    "conjugate-oracle",
)

#: The five cointeracting pairs: splitting coproduct, extraction coproduct.
COINTERACTION_PAIRS = (
    (CoproductKind("Delta"), CoproductKind("delta")),
    (CoproductKind("Delta", "d"), CoproductKind("delta", "d")),
    (CoproductKind("Delta", "c"), CoproductKind("delta", "c")),
    (CoproductKind("Delta", "cd"), CoproductKind("delta", "cd")),
    (CoproductKind("Dpp"), CoproductKind("dpp")),
)

ENUMERATION_BIT_LIMIT = 16


@dataclass(frozen=True)
class SuiteConfig:
    max_edges: int = 3
    max_vertices: int = 3
    samples: int = 0
    seed: int = 0
    suites: tuple[str, ...] = SUITE_NAMES
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.max_edges < 0 or self.max_vertices < 0 or self.samples < 0:
            raise ValueError("bounds and sample count must be non-negative")
        for name in self.suites:
            if name not in SUITE_NAMES:
                raise ValueError(f"unknown suite {name!r}")


@dataclass
class LawEntry:
    checked: int = 0
    failed: int = 0
    first_failure: int | None = None
    counterexample: dict | None = None


class LawReport:
    """Per-law outcome record; merge order does not affect the result."""

    def __init__(self) -> None:
        self.entries: dict[str, LawEntry] = {}

    def record(self, law: str, ok: bool, ordinal: int, counterexample: dict | None) -> None:
        entry = self.entries.setdefault(law, LawEntry())
        entry.checked += 1
        if not ok:
            entry.failed += 1
            if entry.first_failure is None or ordinal < entry.first_failure:
                entry.first_failure = ordinal
                entry.counterexample = counterexample

    def merge(self, other: "LawReport") -> None:
        for law, theirs in other.entries.items():
            entry = self.entries.setdefault(law, LawEntry())
            entry.checked += theirs.checked
            entry.failed += theirs.failed
            if theirs.first_failure is not None and (
                entry.first_failure is None or theirs.first_failure < entry.first_failure
            ):
                entry.first_failure = theirs.first_failure
                entry.counterexample = theirs.counterexample

    @property
    def all_pass(self) -> bool:
        return all(entry.failed == 0 for entry in self.entries.values())

    def to_jsonable(self) -> dict:
        out = {}
        for law in sorted(self.entries):
            entry = self.entries[law]
            record = {"checked": entry.checked, "failed": entry.failed}
            if entry.counterexample is not None:
                record["counterexample"] = entry.counterexample
            out[law] = record
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# instance generation


def enumerate_hypergraphs(max_m: int, max_n: int) -> Iterator[Hypergraph]:
    """One canonical representative per isomorphism class with at most the
    given numbers of edges and vertices, in a fixed deterministic order."""
    if max_m * max_n > ENUMERATION_BIT_LIMIT:
        raise ResourceLimitError(
            f"enumerating {max_m}x{max_n} matrices exceeds 2^{ENUMERATION_BIT_LIMIT}"
        )
    seen: set[bytes] = set()
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            for bits in range(1 << (m * n)):
                rows = tuple((bits >> (e * n)) & ((1 << n) - 1) for e in range(m))
                key = canonical_key(Hypergraph(m, n, rows))
                if key not in seen:
                    seen.add(key)
                    yield from_key(key)


def random_hypergraph(seed: int, m: int, n: int, p) -> Hypergraph:
    """Seeded random incidence matrix; each bit is set with probability ``p``."""
    rng = random.Random(seed)
    p = Fraction(p)
    rows = []
    for _ in range(m):
        row = 0
        for v in range(n):
            if rng.random() < p:
                row |= 1 << v
        rows.append(row)
    return Hypergraph(m, n, tuple(rows))


def suite_instances(cfg: SuiteConfig) -> list[Hypergraph]:
    """Enumerated classes followed by the seeded random samples."""
    out = list(enumerate_hypergraphs(cfg.max_edges, cfg.max_vertices))
    rng = random.Random(cfg.seed)
    for _ in range(cfg.samples):
        m = rng.randint(0, cfg.max_edges)
        n = rng.randint(0, cfg.max_vertices)
        p = rng.choice((Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)))
        out.append(random_hypergraph(rng.getrandbits(32), m, n, p))
    return out


# ---------------------------------------------------------------------------
# closed-formula oracles for the conjugated coproducts


def _sub(h: Hypergraph, edges: int, vertices: int) -> Hypergraph:
    """Edge subset traced onto a vertex subset."""
    return trace_to(select_edges(h, edges), vertices)


def _edge_quotient_union(h: Hypergraph, u: int) -> Hypergraph:
    """Initial quotient of E collapsing, for each vertex of ``u``, all edges
    containing it; surviving vertex set is the complement of ``u``.  A class
    contains a vertex when some member edge does."""
    columns = [h.column(v) for v in range(h.n)]
    blocks = quotient_blocks(h.m, [columns[v] for v in range(h.n) if u >> v & 1])
    ucomp = h.full_vertex_mask ^ u
    rows = []
    for block in blocks:
        union = 0
        for e, row in enumerate(h.rows):
            if block >> e & 1:
                union |= row
        rows.append(union & ucomp)
    traced = Hypergraph(len(rows), h.n, tuple(rows))
    return trace_to(traced, ucomp)


def _edge_quotient_core(h: Hypergraph, u: int) -> Hypergraph:
    """Initial quotient of E collapsing, for each vertex of ``u``, all edges
    *not* containing it.  A class contains a vertex when every member does."""
    full_e = h.full_edge_mask
    columns = [h.column(v) for v in range(h.n)]
    blocks = quotient_blocks(h.m, [columns[v] ^ full_e for v in range(h.n) if u >> v & 1])
    ucomp = h.full_vertex_mask ^ u
    rows = []
    for block in blocks:
        meet = h.full_vertex_mask
        for e, row in enumerate(h.rows):
            if block >> e & 1:
                meet &= row
        rows.append(meet & ucomp)
    traced = Hypergraph(len(rows), h.n, tuple(rows))
    return trace_to(traced, ucomp)


def _vertex_quotient_core(h: Hypergraph, f: int) -> Hypergraph:
    """Quotient of V collapsing the complement of each edge in ``f``; the
    surviving edges are the rest of E, a class lying on an edge when the
    whole class does."""
    full_v = h.full_vertex_mask
    blocks = quotient_blocks(h.n, [h.rows[e] ^ full_v for e in range(h.m) if f >> e & 1])
    keep = h.full_edge_mask ^ f
    rows = tuple(core_push(h.rows[e], blocks) for e in range(h.m) if keep >> e & 1)
    return Hypergraph(len(rows), len(blocks), rows)


def direct_conjugate_terms(kind: CoproductKind, h: Hypergraph) -> Iterator[tuple[Hypergraph, Hypergraph]]:
    """The paper's explicit formulas for the six conjugated coproducts,
    implemented without using the involutions (cross-check oracle)."""
    full_v = h.full_vertex_mask
    full_e = h.full_edge_mask
    estar, vstar, ecross, vcross = special_subsets(h)
    if kind == CoproductKind("Delta", "d"):
        for f in submasks(full_e):
            yield co_restrict_edges(h, f), co_restrict_edges(h, full_e ^ f)
    elif kind == CoproductKind("Delta", "c"):
        for u in submasks(full_v):
            ucomp = full_v ^ u
            yield _sub(h, link(h, ucomp), u), _sub(h, link(h, u), ucomp)
    elif kind == CoproductKind("Delta", "cd"):
        for f in submasks(full_e):
            fcomp = full_e ^ f
            yield _sub(h, f, core(h, fcomp)), _sub(h, fcomp, core(h, f))
    elif kind == CoproductKind("delta", "d"):
        for u in submasks(vstar):
            yield trace_to(h, u), _edge_quotient_union(h, u)
    elif kind == CoproductKind("delta", "c"):
        for f in submasks(ecross):
            yield select_edges(h, f), _vertex_quotient_core(h, f)
    elif kind == CoproductKind("delta", "cd"):
        for u in submasks(vcross):
            yield trace_to(h, u), _edge_quotient_core(h, u)
    else:
        raise ValueError(f"no direct formula registered for {kind.name}")


CONJUGATE_ORACLE_KINDS = tuple(
    CoproductKind(base, invol) for base in ("Delta", "delta") for invol in ("d", "c", "cd")
)


def direct_conjugate(kind: CoproductKind, h: Hypergraph) -> LinComb:
    terms: dict[tuple[bytes, ...], Fraction] = {}
    for a, b in direct_conjugate_terms(kind, h):
        key = (canonical_key(a), canonical_key(b))
        terms[key] = terms.get(key, Fraction(0)) + 1
    return LinComb(2, terms)


# ---------------------------------------------------------------------------
# serialization helpers for counterexamples


def _lc_terms_json(lc: LinComb) -> list[dict]:
    out = []
    for key, coeff in lc.terms():
        out.append(
            {
                "coeff": str(coeff),
                "factors": [serialize_hgx(from_key(k)) for k in key],
            }
        )
    return out


def _ce(hs: list[Hypergraph], lhs, rhs) -> dict:
    def side(x):
        if isinstance(x, LinComb):
            return _lc_terms_json(x)
        if isinstance(x, Polynomial):
            return [str(c) for c in x.coeffs]
        return x

    return {
        "hypergraphs": [serialize_hgx(h) for h in hs],
        "lhs": side(lhs),
        "rhs": side(rhs),
    }


# ---------------------------------------------------------------------------
# individual law checks; each returns a list of (law, ok, counterexample)

Check = tuple[str, bool, dict | None]


def check_coassoc(h: Hypergraph) -> list[Check]:
    out: list[Check] = []
    for kind in ALL_KINDS:
        f = coproduct_map(kind)
        base = coproduct(kind, h)
        lhs = apply_slot(f, 1, base)
        rhs = apply_slot(f, 2, base)
        out.append((f"coassoc/{kind.name}", lhs == rhs, None if lhs == rhs else _ce([h], lhs, rhs)))
    # complementing the descent-descent coproduct gives it back
    for invol, partner in (("c", "id"), ("cd", "d")):
        a = coproduct(CoproductKind("Dpp", invol), h)
        b = coproduct(CoproductKind("Dpp", partner), h)
        out.append(
            (f"coassoc/Dpp-{invol}-coincides-{partner}", a == b, None if a == b else _ce([h], a, b))
        )
    return out


def check_counit(h: Hypergraph) -> list[Check]:
    """Left and right counit laws.  The extraction coproducts are only
    counital on their own subspaces, so those kinds skip outside instances."""
    out: list[Check] = []
    me = LinComb.single((canonical_key(h),))
    for kind in ALL_KINDS:
        if kind.base in ("delta", "dpp") and not in_subspace(h, kind.invol):
            continue
        eps = counit_of_key(kind)
        base = coproduct(kind, h)
        left = apply_slot(eps, 1, base)
        right = apply_slot(eps, 2, base)
        ok = left == me and right == me
        out.append((f"counit/{kind.name}", ok, None if ok else _ce([h], left, right)))
    return out


def _product_expand(kind: CoproductKind, h1: Hypergraph, h2: Hypergraph) -> LinComb:
    """(mu (x) mu) o tau_23 o (f (x) f): multiply matching tensor slots."""
    prod = product_for(kind)
    terms: dict[tuple[bytes, ...], Fraction] = {}
    for (a, b), va in coproduct(kind, h1).terms():
        for (c, d), vb in coproduct(kind, h2).terms():
            key = (product_on_keys(prod, a, c), product_on_keys(prod, b, d))
            terms[key] = terms.get(key, Fraction(0)) + va * vb
    return LinComb(2, terms)


def check_bialgebra(h1: Hypergraph, h2: Hypergraph) -> list[Check]:
    out: list[Check] = []
    for kind in ALL_KINDS:
        mul = product_fn(product_for(kind))
        lhs = coproduct(kind, mul(h1, h2))
        rhs = _product_expand(kind, h1, h2)
        ok = lhs == rhs
        out.append((f"bialgebra/{kind.name}", ok, None if ok else _ce([h1, h2], lhs, rhs)))
    return out


def check_mixed(h: Hypergraph) -> list[Check]:
    """(I (x) D^l) o D^k equals the outer swap of (D^l (x) I) o D^k for all
    sixteen ordered involution pairs."""
    out: list[Check] = []
    for li in ("id", "d", "c", "cd"):
        fl = coproduct_map(CoproductKind("Delta", li))
        for ki in ("id", "d", "c", "cd"):
            base = coproduct(CoproductKind("Delta", ki), h)
            lhs = apply_slot(fl, 2, base)
            rhs = tau_13(apply_slot(fl, 1, base))
            ok = lhs == rhs
            out.append((f"mixed/{li},{ki}", ok, None if ok else _ce([h], lhs, rhs)))
    return out


def check_cointeraction(
    pair: tuple[CoproductKind, CoproductKind], h: Hypergraph, h2: Hypergraph
) -> list[Check]:
    """The four comodule-bialgebra properties plus subspace closure for one
    cointeracting pair, on instances from the pair's subspace."""
    cap, cup = pair
    prod = product_for(cap)
    mul = product_fn(prod)
    label = cap.name
    eps_cap = counit_for(cap)
    out: list[Check] = []

    # 1) the counit is a comodule morphism
    lhs1 = apply_slot(counit_of_key(cap), 2, coproduct(cup, h))
    rhs1 = LinComb(1, {(KEY_ONE,): eps_cap(h)})
    ok1 = lhs1 == rhs1
    out.append((f"cointeraction/{label}:counit-comodule", ok1, None if ok1 else _ce([h], lhs1, rhs1)))

    # 2) the splitting coproduct is a comodule morphism
    lhs2 = apply_slot(coproduct_map(cap), 2, coproduct(cup, h))
    rhs2 = LinComb.zero(3)
    for (x, y), c in coproduct(cap, h).terms():
        piece = mult_slots_13(
            coproduct(cup, from_key(x)),
            coproduct(cup, from_key(y)),
            lambda a, b: product_on_keys(prod, a, b),
        )
        rhs2 = rhs2 + piece.scale(c)
    ok2 = lhs2 == rhs2
    out.append((f"cointeraction/{label}:coproduct-comodule", ok2, None if ok2 else _ce([h], lhs2, rhs2)))

    # 4) multiplicativity of the extraction coproduct
    lhs4 = coproduct(cup, mul(h, h2))
    terms4: dict[tuple[bytes, ...], Fraction] = {}
    for (a, b), va in coproduct(cup, h).terms():
        for (c, d), vb in coproduct(cup, h2).terms():
            key = (product_on_keys(prod, a, c), product_on_keys(prod, b, d))
            terms4[key] = terms4.get(key, Fraction(0)) + va * vb
    rhs4 = LinComb(2, terms4)
    ok4 = lhs4 == rhs4
    out.append((f"cointeraction/{label}:product-comodule", ok4, None if ok4 else _ce([h, h2], lhs4, rhs4)))

    # closure: extraction left factors live in the subspace; the restriction
    # coproducts keep subspace members inside it on both factors (the descent
    # coproduct does not restrict this way, its subspace version is a quotient)
    bad: list[Hypergraph] = []
    for (a, _), _c in coproduct(cup, h).terms():
        if not in_subspace(from_key(a), cap.invol):
            bad.append(from_key(a))
    if cap.base == "Delta":
        for (a, b), _c in coproduct(cap, h).terms():
            for k in (a, b):
                if not in_subspace(from_key(k), cap.invol):
                    bad.append(from_key(k))
    ok5 = not bad
    out.append(
        (f"cointeraction/{label}:closure", ok5, None if ok5 else _ce([h] + bad, "subspace", "violated"))
    )
    return out


def check_cointeraction_unit(pair: tuple[CoproductKind, CoproductKind]) -> list[Check]:
    """3) the extraction coproduct of the empty hypergraph is 1 (x) 1."""
    _, cup = pair
    lhs = coproduct(cup, EMPTY)
    rhs = LinComb.single((KEY_ONE, KEY_ONE))
    ok = lhs == rhs
    return [(f"cointeraction/{cup.name}:unit", ok, None if ok else _ce([EMPTY], lhs, rhs))]


def check_conjugate_oracle(h: Hypergraph) -> list[Check]:
    out: list[Check] = []
    for kind in CONJUGATE_ORACLE_KINDS:
        lhs = coproduct(kind, h)
        rhs = direct_conjugate(kind, h)
        ok = lhs == rhs
        out.append((f"conjugate-oracle/{kind.name}", ok, None if ok else _ce([h], lhs, rhs)))
    return out


COLOR_RANGE = range(4)  # color counts 0..3 for the convolution identities


def check_convolution(h: Hypergraph) -> list[Check]:
    """Corollary-style counting identities: color-set sum against the vertex
    split, color-set product against edge extraction/contraction, and the
    rainbow analogues with traces and connected partitions."""
    out: list[Check] = []
    full = h.full_vertex_mask
    in_core = in_subspace(h, "id")

    for n, m in itertools.product(COLOR_RANGE, repeat=2):
        lhs = count_colorings(h, n + m)
        rhs = sum(
            count_colorings(restrict_to(h, u), n) * count_colorings(restrict_to(h, full ^ u), m)
            for u in submasks(full)
        )
        if lhs != rhs:
            out.append(("convolution/sum", False, _ce([h], lhs, rhs)))
            break
    else:
        out.append(("convolution/sum", True, None))

    if not in_core:
        return out

    estar = special_subsets(h)[0]
    for n, m in itertools.product(COLOR_RANGE, repeat=2):
        lhs = count_colorings(h, n * m)
        rhs = sum(
            count_colorings(select_edges(h, f), n) * count_colorings(contract(h, f), m)
            for f in submasks(estar)
        )
        if lhs != rhs:
            out.append(("convolution/product", False, _ce([h], lhs, rhs)))
            break
    else:
        out.append(("convolution/product", True, None))

    for n, m in itertools.product(COLOR_RANGE, repeat=2):
        lhs = count_rainbow(h, n + m)
        rhs = sum(
            count_rainbow(trace_to(h, u), n) * count_rainbow(trace_to(h, full ^ u), m)
            for u in submasks(full)
        )
        if lhs != rhs:
            out.append(("convolution/rainbow-sum", False, _ce([h], lhs, rhs)))
            break
    else:
        out.append(("convolution/rainbow-sum", True, None))

    for n, m in itertools.product(COLOR_RANGE, repeat=2):
        lhs = count_rainbow(h, n * m)
        rhs = 0
        for blocks in set_partitions(h.n):
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
                term = 1
                for fiber in fibers:
                    term *= count_rainbow(fiber, n)
                right = Hypergraph(
                    h.m, len(blocks), tuple(union_push(row, list(blocks)) for row in h.rows)
                )
                rhs += term * count_rainbow(right, m)
        if lhs != rhs:
            out.append(("convolution/rainbow-product", False, _ce([h], lhs, rhs)))
            break
    else:
        out.append(("convolution/rainbow-product", True, None))
    return out


# ---------------------------------------------------------------------------
# golden polynomial fixtures


def _poly_from_factors(*factor_coeff_lists) -> Polynomial:
    out = Polynomial((1,))
    for coeffs in factor_coeff_lists:
        out = out * Polynomial(coeffs)
    return out


def _x_pow_minus_x(k: int) -> Polynomial:
    return Polynomial.x_power(k) - Polynomial.x_power(1)


def _triangle_multiplicities(a: int, b: int, c: int, l: int, m: int, n: int) -> Hypergraph:
    nv = a + b + c
    A = (1 << a) - 1
    B = ((1 << b) - 1) << a
    C = ((1 << c) - 1) << (a + b)
    rows = [A | B] * l + [A | C] * m + [B | C] * n
    return Hypergraph(len(rows), nv, tuple(rows))


def _closed_triangle_chi(a: int, b: int, c: int) -> Polynomial:
    out = Polynomial.x_power(a + b + c)
    for t in (a, b, c):
        out = out - Polynomial.x_power(t + 1)
    return out + Polynomial.x_power(1, 2)


def _closed_triangle_chi_c(a: int, b: int, c: int) -> Polynomial:
    out = Polynomial((1,))
    for t in (a, b, c):
        out = out * _x_pow_minus_x(t)
    return out


TRIANGLE_TUPLES = (
    (1, 1, 1, 1, 1, 1),
    (2, 1, 1, 1, 1, 1),
    (1, 2, 1, 1, 1, 1),
    (1, 1, 2, 1, 1, 1),
    (1, 1, 1, 2, 1, 1),
    (1, 1, 1, 1, 2, 1),
    (1, 1, 1, 1, 1, 2),
    (2, 2, 1, 1, 2, 1),
    (2, 1, 2, 2, 1, 2),
    (2, 2, 2, 2, 2, 2),
)

PATH3 = Hypergraph(3, 4, (0b0011, 0b0110, 0b1100))
STAR3 = Hypergraph(3, 4, (0b0011, 0b0101, 0b1001))
RAINBOW_H = Hypergraph(3, 4, (0b0111, 0b1010, 0b1100))  # 3-edge + two graph edges
RAINBOW_G = Hypergraph(5, 4, (0b0011, 0b0110, 0b0101, 0b1010, 0b1100))

X = Polynomial.x_power(1)


def _golden_cases() -> list[tuple[str, Callable[[], bool]]]:
    cases: list[tuple[str, Callable[[], bool]]] = []

    for n in range(5):
        cases.append(
            (f"edgeless-{n}", lambda n=n: chromatic_poly(vertices_only(n)) == Polynomial.x_power(n))
        )
    for n in range(1, 5):
        cases.append(
            (f"full-edge-{n}", lambda n=n: chromatic_poly(single_full_edge(n)) == _x_pow_minus_x(n))
        )
    for a in (1, 2, 3):
        for m in (1, 2, 3):
            def case(a=a, m=m):
                expected = (
                    _x_pow_minus_x(a),
                    _x_pow_minus_x(m),
                    Polynomial.x_power(a),
                    Polynomial.x_power(m),
                )
                return quartet(single_full_edge(a, copies=m)) == expected

            cases.append((f"mtuple-a{a}-m{m}", case))
    for tup in TRIANGLE_TUPLES:
        def case(tup=tup):
            a, b, c, l, m, n = tup
            expected = (
                _closed_triangle_chi(a, b, c),
                _closed_triangle_chi(l, m, n),
                _closed_triangle_chi_c(a, b, c),
                _closed_triangle_chi_c(l, m, n),
            )
            return quartet(_triangle_multiplicities(*tup)) == expected

        cases.append((f"triangle-{''.join(map(str, tup))}", case))

    tree_poly = _poly_from_factors((0, 1), (-1, 1), (-1, 1), (-1, 1))
    cases.append(
        (
            "path3",
            lambda: quartet(PATH3) == (tree_poly, Polynomial(), tree_poly, Polynomial()),
        )
    )
    cases.append(
        (
            "star3",
            lambda: quartet(STAR3)
            == (
                tree_poly,
                Polynomial(),
                _poly_from_factors((0, 1), (0, 1), (-1, 1), (-2, 1)),
                _poly_from_factors((0, 1), (-1, 1), (-2, 1)),
            ),
        )
    )
    cases.append(
        (
            "rainbow-hyper",
            lambda: rainbow_quartet(RAINBOW_H)
            == (
                _poly_from_factors((0, 1), (-1, 1), (-2, 1), (-2, 1)),
                _poly_from_factors((0, 1), (-1, 1), (-2, 1)),
                _poly_from_factors((0, 1), (0, 1), (-1, 1), (-1, 1)),
                _poly_from_factors((0, 1), (0, 1), (-1, 1)),
            ),
        )
    )
    cases.append(
        (
            "rainbow-graph",
            lambda: rainbow_quartet(RAINBOW_G)
            == (
                _poly_from_factors((0, 1), (-1, 1), (-2, 1), (-2, 1)),
                _poly_from_factors((0, 1), (-1, 1), (-2, 1), (7, -5, 1)),
                _poly_from_factors((0, 1), (-1, 1), (-2, 1), (-2, 1)),
                _poly_from_factors((0, 1), (-1, 1), (-2, 1), (7, -5, 1)),
            ),
        )
    )
    for loops in (1, 2, 3):
        cases.append(
            (
                f"rainbow-point-{loops}",
                lambda loops=loops: rainbow_poly(Hypergraph(loops, 1, (1,) * loops)) == X,
            )
        )
    return cases


def check_quartet_golden(name: str) -> list[Check]:
    for case_name, case in _golden_cases():
        if case_name == name:
            ok = case()
            return [(f"quartet-golden/{name}", ok, None if ok else {"case": name})]
    raise ValueError(f"unknown golden case {name!r}")


# ---------------------------------------------------------------------------
# the runner


def _work_items(cfg: SuiteConfig) -> list[tuple[str, int, tuple]]:
    """Flatten the configured suites into independent, picklable work items.

    Dual-axis kinds examine the duals of the shared instance pool, honoring
    transposed bounds; subspace-restricted suites pre-filter and pair members
    cyclically so parallel execution stays deterministic.
    """
    instances = suite_instances(cfg)
    duals = [dual(h) for h in instances]
    items: list[tuple[str, int, tuple]] = []
    ordinal = 0

    def add(suite: str, payload: tuple) -> None:
        nonlocal ordinal
        items.append((suite, ordinal, payload))
        ordinal += 1

    for suite in cfg.suites:
        if suite in ("coassoc", "counit", "mixed", "conjugate-oracle"):
            pool = instances + duals if cfg.max_edges != cfg.max_vertices else instances
            for h in pool:
                add(suite, (serialize_hgx(h),))
        elif suite == "bialgebra":
            for i, h in enumerate(instances):
                add(suite, (serialize_hgx(h), serialize_hgx(instances[(i + 1) % len(instances)])))
        elif suite == "cointeraction":
            for p_idx, (cap, _cup) in enumerate(COINTERACTION_PAIRS):
                add(suite, (p_idx, None, None))  # the unit law, once per pair
                pool = duals if cap.invol in ("d", "cd") and cfg.max_edges != cfg.max_vertices else instances
                members = [h for h in pool if in_subspace(h, cap.invol)]
                for i, h in enumerate(members):
                    h2 = members[(i + 1) % len(members)]
                    add(suite, (p_idx, serialize_hgx(h), serialize_hgx(h2)))
        elif suite == "convolution":
            for h in instances:
                add(suite, (serialize_hgx(h),))
        elif suite == "quartet-golden":
            for name, _case in _golden_cases():
                add(suite, (name,))
    return items


def _run_item(item: tuple[str, int, tuple]) -> list[tuple[str, bool, int, dict | None]]:
    suite, ordinal, payload = item
    if suite == "coassoc":
        checks = check_coassoc(parse_hgx(payload[0]))
    elif suite == "counit":
        checks = check_counit(parse_hgx(payload[0]))
    elif suite == "mixed":
        checks = check_mixed(parse_hgx(payload[0]))
    elif suite == "bialgebra":
        checks = check_bialgebra(parse_hgx(payload[0]), parse_hgx(payload[1]))
    elif suite == "cointeraction":
        p_idx, a, b = payload
        pair = COINTERACTION_PAIRS[p_idx]
        if a is None:
            checks = check_cointeraction_unit(pair)
        else:
            checks = check_cointeraction(pair, parse_hgx(a), parse_hgx(b))
    elif suite == "convolution":
        checks = check_convolution(parse_hgx(payload[0]))
    elif suite == "quartet-golden":
        checks = check_quartet_golden(payload[0])
    elif suite == "conjugate-oracle":
        checks = check_conjugate_oracle(parse_hgx(payload[0]))
    else:  # pragma: no cover - guarded by SuiteConfig
        raise ValueError(suite)
    return [(law, ok, ordinal, ce) for law, ok, ce in checks]


def _run_chunk(chunk: list[tuple[str, int, tuple]]) -> LawReport:
    report = LawReport()
    for item in chunk:
        try:
            results = _run_item(item)
        except ResourceLimitError as exc:
            # recorded, never fatal: the instance was too large for this law
            report.record(f"{item[0]}/resource-error", False, item[1], {"error": str(exc)})
            continue
        for law, ok, ordinal, ce in results:
            report.record(law, ok, ordinal, ce)
    return report


def run_suite(cfg: SuiteConfig) -> LawReport:
    """Run the selected suites; deterministic for a fixed configuration."""
    items = _work_items(cfg)
    report = LawReport()
    if cfg.jobs > 1 and len(items) > 1:
        chunks = [items[i :: cfg.jobs] for i in range(cfg.jobs)]
        chunks = [c for c in chunks if c]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            for partial in pool.map(_run_chunk, chunks):
                report.merge(partial)
    else:
        report.merge(_run_chunk(items))
    return report
