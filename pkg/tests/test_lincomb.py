"""Formal linear combinations and the tensor-slot combinators."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hypalg import (
    LinComb,
    from_key,
    apply_slot,
    canonical_key,
    coproduct,
    extend_linear,
    lc_add,
    lc_scale,
    lc_tensor,
    mult_slots_13,
    restrict_to,
)
from hypalg.coalgebra import KEY_ONE, CoproductKind, product_on_keys
from hypalg.errors import HypergraphError
from hypalg.hypergraph import submasks
from hypalg.lincomb import tau_13

from conftest import K2, P3, POINT

X = (b"x",)
Y = (b"y",)
Z = (b"z",)


def test_add_scale():
    a = LinComb.single(X, 2)
    assert lc_add(a, LinComb.zero(1)) == a
    assert lc_add(a, a.scale(-1)) == LinComb.zero(1)
    assert not lc_add(a, a.scale(-1))
    mixed = LinComb(1, {X: 2, Y: 4})
    assert lc_scale(Fraction(1, 2), mixed) == LinComb(1, {X: 1, Y: 2})


def test_coefficients_stay_reduced():
    a = LinComb(1, {X: Fraction(2, 4)})
    ((_, coeff),) = a.terms()
    assert coeff == Fraction(1, 2)
    assert coeff.denominator == 2


def test_tensor():
    a = LinComb.single(X)
    b = LinComb.single(Y)
    assert lc_tensor(a, b) == LinComb.single(X + Y)
    ab = lc_add(a, LinComb.single(Y))
    z = LinComb.single(Z)
    assert lc_tensor(ab, z) == LinComb(2, {X + Z: 1, Y + Z: 1})
    assert lc_tensor(LinComb.zero(1), a) == LinComb.zero(2)
    with pytest.raises(HypergraphError):
        lc_tensor(lc_tensor(a, b), lc_tensor(a, b))


def test_tensor_associative_within_rank_three():
    a, b, c = LinComb.single(X, 2), LinComb.single(Y, 3), LinComb.single(Z, 5)
    assert lc_tensor(lc_tensor(a, b), c) == lc_tensor(a, lc_tensor(b, c))


def test_extend_linear():
    f = lambda key: LinComb.single((key, key))
    single = LinComb.single(X)
    assert extend_linear(f, single) == f(b"x")
    assert extend_linear(f, LinComb.zero(1)) == LinComb.zero(1)
    ident = lambda key: LinComb.single((key,))
    some = LinComb(1, {X: 3, Y: Fraction(-1, 2)})
    assert extend_linear(ident, some) == some


@given(
    st.dictionaries(st.sampled_from([X, Y, Z]), st.fractions(), max_size=3),
    st.dictionaries(st.sampled_from([X, Y, Z]), st.fractions(), max_size=3),
    st.fractions(),
)
def test_extend_linear_is_linear(da, db, c):
    a, b = LinComb(1, da), LinComb(1, db)
    f = lambda key: LinComb.single((key, key), 2)
    assert extend_linear(f, a + b.scale(c)) == extend_linear(f, a) + extend_linear(f, b).scale(c)


def test_apply_slot_unit_untouched():
    pair = lc_tensor(LinComb.single((KEY_ONE,)), LinComb.single((canonical_key(P3),)))
    expand = apply_slot(lambda k: coproduct(CoproductKind("Delta"), from_key(k)), 2, pair)
    # slot 1 stays the unit key in every term
    assert all(key[0] == KEY_ONE for key, _ in expand.terms())
    assert apply_slot(lambda k: LinComb.single((k, k)), 1, LinComb.zero(2)).rank == 3
    with pytest.raises(HypergraphError):
        apply_slot(lambda k: LinComb.single((k, k)), 3, LinComb.zero(2))


def test_double_split_matches_independent_triple_expansion():
    """Splitting twice agrees slot-by-slot with one pass over ordered vertex
    triples; both sides collect to the same 27-mass rank-3 sum."""
    delta = CoproductKind("Delta")
    f = lambda key: coproduct(delta, from_key(key))
    base = coproduct(delta, P3)
    left = apply_slot(f, 1, base)
    right = apply_slot(f, 2, base)

    full = P3.full_vertex_mask
    expected: dict[tuple[bytes, ...], Fraction] = {}
    for u1 in submasks(full):
        for u2 in submasks(full ^ u1):
            u3 = full ^ u1 ^ u2
            key = tuple(canonical_key(restrict_to(P3, u)) for u in (u1, u2, u3))
            expected[key] = expected.get(key, Fraction(0)) + 1
    oracle = LinComb(3, expected)
    assert left == oracle
    assert right == oracle
    assert oracle.total() == 27


def test_mult_slots_13():
    one = LinComb.single((KEY_ONE, KEY_ONE))
    fused = mult_slots_13(one, one, lambda a, b: product_on_keys("mu", a, b))
    assert fused == LinComb.single((KEY_ONE, KEY_ONE, KEY_ONE))

    kp, kk = canonical_key(POINT), canonical_key(K2)
    a = LinComb.single((kp, kk))
    b = LinComb.single((kk, kp))
    fused = mult_slots_13(a, b, lambda x, y: product_on_keys("mu", x, y))
    joined = product_on_keys("mu", kp, kk)
    assert fused == LinComb.single((joined, kk, kp))
    with pytest.raises(HypergraphError):
        mult_slots_13(LinComb.zero(1), a, lambda x, y: x)


def test_tau_13():
    t = LinComb.single((b"a", b"b", b"c"), 2)
    assert tau_13(t) == LinComb.single((b"c", b"b", b"a"), 2)


def test_equality_is_order_insensitive():
    a = lc_add(LinComb.single(X, 1), LinComb.single(Y, 2))
    b = lc_add(LinComb.single(Y, 2), LinComb.single(X, 1))
    assert a == b and hash(a) == hash(b)
