"""Formal linear combinations over isomorphism-class keys.

``LinComb`` is a finite map from basis elements to nonzero exact rationals.
A basis element is a tuple of canonical keys: rank 1 for the free module on
classes, rank 2 and 3 for its tensor squares and cubes (rank 0 holds bare
scalars).  Because the keys are canonical forms, dictionary equality is
equality in the corresponding tensor power.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .errors import HypergraphError

Coeff = Fraction
Basis = tuple[bytes, ...]

MAX_RANK = 3


class LinComb:
    """Immutable formal sum with ``Fraction`` coefficients; zeros are dropped."""

    __slots__ = ("rank", "_terms")

    def __init__(self, rank: int, terms=None):
        if not 0 <= rank <= MAX_RANK:
            raise HypergraphError(f"rank {rank} outside 0..{MAX_RANK}")
        self.rank = rank
        data: dict[Basis, Coeff] = {}
        for key, coeff in dict(terms or {}).items():
            if len(key) != rank:
                raise HypergraphError(f"basis {key!r} has rank {len(key)}, expected {rank}")
            coeff = Fraction(coeff)
            if coeff:
                data[key] = coeff
        self._terms = data

    @classmethod
    def single(cls, key: Basis, coeff=1) -> "LinComb":
        return cls(len(key), {key: Fraction(coeff)})

    @classmethod
    def scalar(cls, coeff) -> "LinComb":
        return cls(0, {(): Fraction(coeff)})

    @classmethod
    def zero(cls, rank: int) -> "LinComb":
        return cls(rank, {})

    def terms(self) -> list[tuple[Basis, Coeff]]:
        """Terms sorted lexicographically on the key tuple (stable output order)."""
        return sorted(self._terms.items())

    def coeff(self, key: Basis) -> Coeff:
        return self._terms.get(key, Fraction(0))

    def as_scalar(self) -> Coeff:
        if self.rank != 0:
            raise HypergraphError("not a rank-0 combination")
        return self._terms.get((), Fraction(0))

    def total(self) -> Coeff:
        """Sum of all coefficients (the counit-free mass of the sum)."""
        return sum(self._terms.values(), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        if not self._terms and not other._terms:
            return True  # the zero sum is the same element in every rank
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LinComb") -> "LinComb":
        if not self._terms:
            return other
        if not other._terms:
            return self
        if self.rank != other.rank:
            raise HypergraphError("rank mismatch in addition")
        data = dict(self._terms)
        for key, coeff in other._terms.items():
            data[key] = data.get(key, Fraction(0)) + coeff
        return LinComb(self.rank, data)

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + other.scale(-1)

    def scale(self, c) -> "LinComb":
        c = Fraction(c)
        return LinComb(self.rank, {k: c * v for k, v in self._terms.items()})

    def __repr__(self) -> str:
        inner = " + ".join(f"{v}*{k}" for k, v in self.terms())
        return f"LinComb{self.rank}({inner or '0'})"


def lc_add(a: LinComb, b: LinComb) -> LinComb:
    return a + b


def lc_scale(c, a: LinComb) -> LinComb:
    return a.scale(c)


def lc_tensor(a: LinComb, b: LinComb) -> LinComb:
    """Bilinear tensor of two sums; the combined rank must stay within bounds."""
    rank = a.rank + b.rank
    if rank > MAX_RANK:
        raise HypergraphError(f"tensor rank {rank} exceeds {MAX_RANK}")
    data: dict[Basis, Coeff] = {}
    for ka, va in a._terms.items():
        for kb, vb in b._terms.items():
            key = ka + kb
            data[key] = data.get(key, Fraction(0)) + va * vb
    return LinComb(rank, data)


def extend_linear(f: Callable[[bytes], LinComb], a: LinComb) -> LinComb:
    """Linear extension of a map defined on basis keys (rank-1 input)."""
    if a.rank != 1:
        raise HypergraphError("extend_linear expects a rank-1 combination")
    out: LinComb | None = None
    for (key,), coeff in a._terms.items():
        piece = f(key).scale(coeff)
        out = piece if out is None else out + piece
    return out if out is not None else LinComb.zero(1)


def apply_slot(f: Callable[[bytes], LinComb], slot: int, a: LinComb) -> LinComb:
    """Expand one tensor slot by ``f``, keeping the other slots fixed.

    ``f`` maps a key to a fixed-rank combination (rank 0 for counits, 2 for
    coproducts); the result rank shifts accordingly and must stay in bounds.
    """
    if not 1 <= slot <= a.rank:
        raise HypergraphError(f"slot {slot} outside 1..{a.rank}")
    out: dict[Basis, Coeff] = {}
    out_rank: int | None = None
    for key, coeff in a._terms.items():
        image = f(key[slot - 1])
        rank = a.rank - 1 + image.rank
        if rank > MAX_RANK:
            raise HypergraphError(f"slot expansion rank {rank} exceeds {MAX_RANK}")
        if out_rank is None:
            out_rank = rank
        elif out_rank != rank:
            raise HypergraphError("slot map produced mixed ranks")
        head, tail = key[: slot - 1], key[slot:]
        for mid, c2 in image._terms.items():
            new = head + mid + tail
            out[new] = out.get(new, Fraction(0)) + coeff * c2
    if out_rank is None:
        # empty input: the rank cannot be inferred from terms, assume coproduct-like
        out_rank = min(a.rank + 1, MAX_RANK)
    return LinComb(out_rank, out)


def mult_slots_13(a: LinComb, b: LinComb, prod: Callable[[bytes, bytes], bytes]) -> LinComb:
    """Fuse two rank-2 sums ``a = x (x) y`` and ``b = z (x) w`` into rank 3 by
    multiplying the first slots: ``(prod(x, z), y, w)``, bilinearly."""
    if a.rank != 2 or b.rank != 2:
        raise HypergraphError("mult_slots_13 expects two rank-2 combinations")
    data: dict[Basis, Coeff] = {}
    for (k1, k2), va in a._terms.items():
        for (k3, k4), vb in b._terms.items():
            key = (prod(k1, k3), k2, k4)
            data[key] = data.get(key, Fraction(0)) + va * vb
    return LinComb(3, data)


def tau_swap(a: LinComb) -> LinComb:
    """Swap the two slots of a rank-2 combination."""
    if a.rank != 2:
        raise HypergraphError("tau_swap expects rank 2")
    return LinComb(2, {(k2, k1): v for (k1, k2), v in a._terms.items()})


def tau_13(a: LinComb) -> LinComb:
    """Swap the outer slots of a rank-3 combination."""
    if a.rank != 3:
        raise HypergraphError("tau_13 expects rank 3")
    return LinComb(3, {(k3, k2, k1): v for (k1, k2, k3), v in a._terms.items()})
