"""Hibi ring of a distributive lattice and its monomial model.

Monomials in the lattice variables are tuples of element ids.  A standard
monomial is a multichain, stored weakly decreasing (largest element first).
The monomial model maps ``x_l`` to the product of ``y_m`` over ``m`` in
Spec(l); with the bottom's variable ``y_0`` that is a 0/1 exponent vector.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .poset import DistributiveLattice, chain_to_enumeration


@dataclass(frozen=True)
class HibiRelation:
    """``x_a x_b - x_join x_meet`` for an incomparable pair ``(a, b)``."""
    pair: tuple[int, int]
    join: int
    meet: int


def hibi_ideal_generators(L: DistributiveLattice) -> list[HibiRelation]:
    rels = []
    for a in range(len(L)):
        for b in range(a + 1, len(L)):
            if not L.comparable(a, b):
                rels.append(HibiRelation((a, b), L.join(a, b), L.meet(a, b)))
    return rels


def y_exponents(L: DistributiveLattice, x: int) -> tuple[int, ...]:
    """Exponents of ``x_l / x_bottom`` over J(L)* in the lattice's bit order."""
    m = L.masks[x]
    return tuple(m >> k & 1 for k in range(L.rank))


def monomial_exponents(L: DistributiveLattice, factors: Sequence[int]) -> tuple[int, ...]:
    """Exponents of the product of ``x_l / x_bottom`` over the factors."""
    out = [0] * L.rank
    for x in factors:
        m = L.masks[x]
        for k in range(L.rank):
            out[k] += m >> k & 1
    return tuple(out)


def element_to_y(L: DistributiveLattice, enumeration: Sequence[int], x: int) -> tuple[int, ...]:
    """Image of ``x_l`` in ``C[y_0..y_N]`` with ``y_i`` attached to ``m_i``."""
    s = L.spec(x)
    return (1,) + tuple(int(m in s) for m in enumeration)


def xhat(L: DistributiveLattice, chain: Sequence[int], x: int) -> tuple[int, ...]:
    """Laurent exponents of ``x_l / x_bottom`` in the chain's ``y_1..y_N``.

    For the bottom this is the zero vector: ``x_bottom`` only carries degree.
    """
    enum = chain_to_enumeration(L, chain)
    return element_to_y(L, enum, x)[1:]


def sort_decreasing(L: DistributiveLattice, factors: Sequence[int]) -> tuple[int, ...]:
    # (height, id) is a linear extension, so a multichain comes out in chain order
    return tuple(sorted(factors, key=lambda x: (L.height(x), x), reverse=True))


def is_standard(L: DistributiveLattice, factors: Sequence[int]) -> bool:
    return L.is_chain(set(factors))


def standard_basis(L: DistributiveLattice, r: int) -> list[tuple[int, ...]]:
    """All standard monomials of degree ``r`` (weakly decreasing multichains)."""
    if r < 0:
        raise ValueError("degree must be non-negative")
    below = [[y for y in range(len(L)) if L.leq(y, x)] for x in range(len(L))]
    out = []

    def rec(prefix, bound):
        if len(prefix) == r:
            out.append(sort_decreasing(L, prefix))
            return
        for y in (range(len(L)) if bound is None else below[bound]):
            rec(prefix + [y], y)

    rec([], None)
    return out


def rewrite_to_standard(L: DistributiveLattice, factors: Sequence[int]) -> tuple[int, ...]:
    """Apply Hibi relations until the monomial is standard.

    Scans the (height, id)-sorted factor list for the leftmost incomparable
    adjacent pair and replaces it by its join and meet.  The sum of squared
    heights strictly grows at each step, so this terminates.
    """
    cur = sorted(factors, key=lambda x: (L.height(x), x))
    while True:
        for i in range(len(cur) - 1):
            a, b = cur[i], cur[i + 1]
            if not L.comparable(a, b):
                cur[i:i + 2] = [L.meet(a, b), L.join(a, b)]
                cur.sort(key=lambda x: (L.height(x), x))
                break
        else:
            return tuple(reversed(cur))


def y_image(L: DistributiveLattice, enumeration: Sequence[int], factors: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (L.rank + 1)
    for x in factors:
        for i, e in enumerate(element_to_y(L, enumeration, x)):
            out[i] += e
    return tuple(out)


def relations_to_json(L: DistributiveLattice, rels: Sequence[HibiRelation]) -> list[dict]:
    from .poset import _jsonable
    lab = lambda x: _jsonable(L.labels[x])
    return [{"pair": [lab(r.pair[0]), lab(r.pair[1])], "join": lab(r.join), "meet": lab(r.meet)}
            for r in rels]
