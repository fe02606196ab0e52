"""Coloring oracles, interpolation, and the polynomial quartets."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from hypalg import (
    Hypergraph,
    Polynomial,
    ResourceLimitError,
    chromatic_incl_excl,
    chromatic_poly,
    count_colorings,
    count_rainbow,
    disjoint_union,
    drop_empty_edges,
    interpolate,
    quartet,
    rainbow_poly,
    rainbow_quartet,
    single_full_edge,
    two_section,
    vanishing_criteria,
    vertices_only,
)
from hypalg.laws import enumerate_hypergraphs

from conftest import EMPTY, K2, LOOP, LOOP2, P3, PATH3, STAR3, TRIANGLE_EDGE

X = Polynomial.x_power(1)


def poly(*coeffs) -> Polynomial:
    return Polynomial(coeffs)


def prod(*factors: Polynomial) -> Polynomial:
    out = Polynomial((1,))
    for f in factors:
        out = out * f
    return out


def xm1(k: int) -> Polynomial:
    return Polynomial.x_power(k) - X


def rand_h(rng, max_m, max_n) -> Hypergraph:
    m, n = rng.randint(0, max_m), rng.randint(0, max_n)
    return Hypergraph(m, n, tuple(rng.getrandbits(n) if n else 0 for _ in range(m)))


# --- counting oracles --------------------------------------------------------


def test_count_colorings_basics():
    assert count_colorings(TRIANGLE_EDGE, 2) == 6  # 2^3 - 2
    assert count_colorings(P3, 2) == 2
    for k in range(4):
        assert count_colorings(LOOP, k) == 0
        assert count_colorings(disjoint_union(LOOP, K2), k) == 0
    assert count_colorings(EMPTY, 0) == 1
    assert count_colorings(EMPTY, 5) == 1
    assert count_colorings(Hypergraph(1, 0, (0,)), 3) == 0  # an empty edge kills everything
    assert count_colorings(vertices_only(2), 0) == 0
    assert count_colorings(vertices_only(3), 2) == 8


def test_count_rainbow_basics():
    assert count_rainbow(TRIANGLE_EDGE, 3) == 6
    assert count_rainbow(TRIANGLE_EDGE, 2) == 0
    for k in range(5):
        assert count_rainbow(LOOP2, k) == k
        assert count_rainbow(Hypergraph(1, 0, (0,)), k) == 1  # vacuously rainbow
    assert count_rainbow(K2, 3) == 6


def test_rainbow_equals_two_section_colorings():
    rng = random.Random(100)
    for _ in range(100):
        h = rand_h(rng, 4, 5)
        g = two_section(h)
        for k in range(5):
            assert count_rainbow(h, k) == count_colorings(g, k)


def test_count_guard():
    with pytest.raises(ResourceLimitError):
        count_colorings(vertices_only(16), 16)


# --- interpolation -----------------------------------------------------------


def test_interpolate():
    # the path on three vertices: counts 0, 0, 2, 12 at 0..3
    got = interpolate([(k, count_colorings(P3, k)) for k in range(4)])
    assert got == poly(0, 1, -2, 1)  # x(x-1)^2
    assert got(3) == 12
    assert interpolate([(0, 1), (1, 1)]) == poly(1)
    for n in range(1, 6):
        target = xm1(n)
        nodes = [(k, target(k)) for k in range(n + 1)]
        assert interpolate(nodes) == target
    with pytest.raises(Exception):
        interpolate([(1, 1), (1, 2)])


def test_polynomial_arithmetic():
    p = poly(1, 2) * poly(-1, 1)
    assert p == poly(-1, -1, 2)
    assert p(2) == 5
    assert (p - p).is_zero()
    assert poly(0, 0).is_zero()
    assert Polynomial.x_power(3).degree == 3
    assert poly(Fraction(1, 2)).int_strings.__self__ is not None
    with pytest.raises(Exception):
        poly(Fraction(1, 2)).int_strings()


# --- the chromatic polynomial -------------------------------------------------


def test_chromatic_poly_families():
    for n in range(5):
        assert chromatic_poly(vertices_only(n)) == Polynomial.x_power(n)
    for n in range(1, 5):
        assert chromatic_poly(single_full_edge(n)) == xm1(n)
    # edge multiplicity is invisible
    for copies in (1, 2, 3):
        assert chromatic_poly(single_full_edge(3, copies=copies)) == xm1(3)
    assert chromatic_poly(EMPTY) == poly(1)
    # empty edges are dropped by the morphism extension
    assert chromatic_poly(Hypergraph(2, 3, (0, 0))) == Polynomial.x_power(3)


def test_incl_excl_matches_interpolation():
    assert chromatic_incl_excl(K2) == poly(0, -1, 1)
    triangle_graph = Hypergraph(3, 3, (0b011, 0b101, 0b110))
    assert chromatic_incl_excl(triangle_graph) == poly(0, 2, -3, 1)  # x(x-1)(x-2)
    assert chromatic_incl_excl(single_full_edge(3)) == xm1(3)
    rng = random.Random(8)
    for _ in range(60):
        h = rand_h(rng, 4, 5)
        assert chromatic_incl_excl(h) == chromatic_poly(h)


def test_quartet_m_tuple_edge():
    for a in (1, 2, 3):
        for m in (1, 2, 3):
            h = single_full_edge(a, copies=m)
            assert quartet(h) == (xm1(a), xm1(m), Polynomial.x_power(a), Polynomial.x_power(m))


def test_quartet_trees():
    tree = prod(X, poly(-1, 1), poly(-1, 1), poly(-1, 1))
    zero = Polynomial()
    assert quartet(PATH3) == (tree, zero, tree, zero)
    assert quartet(STAR3) == (
        tree,
        zero,
        prod(X, X, poly(-1, 1), poly(-2, 1)),
        prod(X, poly(-1, 1), poly(-2, 1)),
    )


def test_quartet_triangle_multiplicities():
    # an l/m/n-fold triple of doubled vertex groups, against the closed forms
    def build(a, b, c, l, m, n):
        A = (1 << a) - 1
        B = ((1 << b) - 1) << a
        C = ((1 << c) - 1) << (a + b)
        rows = [A | B] * l + [A | C] * m + [B | C] * n
        return Hypergraph(len(rows), a + b + c, tuple(rows))

    def chi(a, b, c):
        out = Polynomial.x_power(a + b + c)
        for t in (a, b, c):
            out = out - Polynomial.x_power(t + 1)
        return out + Polynomial.x_power(1, 2)

    def chi_c(a, b, c):
        return prod(xm1(a), xm1(b), xm1(c))

    rng = random.Random(12)
    for _ in range(6):
        a, b, c, l, m, n = (rng.randint(1, 2) for _ in range(6))
        got = quartet(build(a, b, c, l, m, n))
        assert got == (chi(a, b, c), chi(l, m, n), chi_c(a, b, c), chi_c(l, m, n))


def test_rainbow_quartets():
    h = Hypergraph(3, 4, (0b0111, 0b1010, 0b1100))
    assert rainbow_quartet(h) == (
        prod(X, poly(-1, 1), poly(-2, 1), poly(-2, 1)),
        prod(X, poly(-1, 1), poly(-2, 1)),
        prod(X, X, poly(-1, 1), poly(-1, 1)),
        prod(X, X, poly(-1, 1)),
    )
    g = Hypergraph(5, 4, (0b0011, 0b0110, 0b0101, 0b1010, 0b1100))
    quintic = prod(X, poly(-1, 1), poly(-2, 1), poly(7, -5, 1))
    assert rainbow_quartet(g) == (
        prod(X, poly(-1, 1), poly(-2, 1), poly(-2, 1)),
        quintic,
        prod(X, poly(-1, 1), poly(-2, 1), poly(-2, 1)),
        quintic,
    )
    assert rainbow_poly(vertices_only(4)) == Polynomial.x_power(4)


def test_rainbow_poly_matches_count():
    rng = random.Random(21)
    for _ in range(60):
        h = rand_h(rng, 4, 5)
        rp = rainbow_poly(h)
        for k in range(h.n + 1):
            assert rp(k) == count_rainbow(h, k)


def test_chromatic_poly_matches_count():
    rng = random.Random(22)
    for _ in range(60):
        h = rand_h(rng, 4, 5)
        cp = chromatic_poly(h)
        hs = drop_empty_edges(h)
        for k in range(6):
            assert cp(k) == count_colorings(hs, k)


def test_multiplicativity():
    rng = random.Random(23)
    for _ in range(25):
        h1, h2 = rand_h(rng, 3, 3), rand_h(rng, 3, 3)
        both = disjoint_union(h1, h2)
        assert chromatic_poly(both) == chromatic_poly(h1) * chromatic_poly(h2)
        assert rainbow_poly(both) == rainbow_poly(h1) * rainbow_poly(h2)


def test_zero_constant_term_and_degree():
    rng = random.Random(24)
    for _ in range(40):
        h = rand_h(rng, 3, 4)
        cp = chromatic_poly(h)
        if h.n:
            assert cp(0) == 0
        assert cp.degree <= h.n
        assert cp.is_integral()
        if h.m == 0:
            assert cp.degree == h.n


def test_vanishing_criteria_flags():
    # single-row matrices trip most conditions at once: the occupied column
    # has exactly one 1, and with one row any zero column has exactly one 0
    assert vanishing_criteria(Hypergraph(1, 3, (0b001,))) == (True, True, False, True)
    assert vanishing_criteria(Hypergraph(1, 3, (0b011,))) == (False, True, True, True)
    assert vanishing_criteria(Hypergraph(2, 2, (0b01, 0b10))) == (True, True, True, True)
    assert vanishing_criteria(Hypergraph(2, 3, (0b011, 0b110))) == (False, True, True, True)
    full = Hypergraph(2, 3, (0b111, 0b111))
    assert vanishing_criteria(full) == (False, False, False, False)
    assert vanishing_criteria(EMPTY) == (False, False, False, False)


def test_vanishing_matches_quartet_small():
    for h in enumerate_hypergraphs(3, 3):
        flags = vanishing_criteria(h)
        polys = quartet(h)
        for flag, p in zip(flags, polys):
            assert flag == p.is_zero(), h
