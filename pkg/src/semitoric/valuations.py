"""Chain valuations on the Hibi function field and their min-quasi-valuations.

Elements of the function field are written in the canonical ``y`` variables
(one per element of J(L)*, in the lattice's bit order): a Laurent monomial is
an exponent tuple, a Laurent polynomial a ``{exponents: coefficient}`` dict.
A maximal chain picks an enumeration of J(L)*, hence coordinates, and the
generators ``xhat_{c_j} = y_1 ... y_j``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Mapping, Sequence, Union

import numpy as np

from . import _exact
from .hibi import is_standard, sort_decreasing
from .poset import DistributiveLattice, chain_to_enumeration, maximal_chains


class Order(enum.Enum):
    REVLEX = "revlex"
    GRADED_REVLEX = "graded_revlex"


@total_ordering
@dataclass(frozen=True)
class Value:
    """An integer vector with a fixed total order.

    Reverse lex: ``a > b`` iff the last nonzero coordinate of ``a - b`` is
    positive.  Graded reverse lex compares coordinate 0 first, then reverse
    lex on the rest.
    """
    coords: tuple[int, ...]
    order: Order = Order.REVLEX

    def key(self):
        if self.order is Order.REVLEX:
            return self.coords[::-1]
        return (self.coords[0],) + self.coords[:0:-1]

    def _same(self, other):
        if not isinstance(other, Value):
            return NotImplemented
        if other.order is not self.order or len(other.coords) != len(self.coords):
            raise ValueError("cannot compare values with different order or length")
        return True

    def __lt__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        return self.key() < other.key()

    def __add__(self, other):
        self._same(other)
        return Value(tuple(a + b for a, b in zip(self.coords, other.coords)), self.order)

    def __sub__(self, other):
        self._same(other)
        return Value(tuple(a - b for a, b in zip(self.coords, other.coords)), self.order)

    def scaled(self, k: int) -> "Value":
        return Value(tuple(k * a for a in self.coords), self.order)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)


def compare(a: Value, b: Value) -> int:
    """-1, 0 or 1; raises on mismatched order tags or lengths."""
    a._same(b)
    ka, kb = a.key(), b.key()
    return (ka > kb) - (ka < kb)


class Family(enum.Enum):
    SPEC = "spec"
    MAXSPEC = "maxspec"
    HT = "ht"


@dataclass(frozen=True, eq=False)
class ChainValuation:
    """The valuation of one maximal chain; column j of ``matrix`` is its value on xhat_{c_j}."""
    lattice: DistributiveLattice
    chain: tuple[int, ...]
    family: Family
    matrix: np.ndarray
    enumeration: tuple[int, ...]
    #: canonical bit -> chain coordinate (0-based)
    position: tuple[int, ...] = field(repr=False)

    def chain_coords(self, y: Sequence[int]) -> tuple[int, ...]:
        """Canonical ``y`` exponents reordered along the chain's enumeration."""
        out = [0] * len(y)
        for k, e in enumerate(y):
            out[self.position[k]] = e
        return tuple(out)

    def value(self, y: Sequence[int]) -> Value:
        return valuate_laurent(self, to_xhat_coords(self.chain_coords(y)))


def chain_valuation(L: DistributiveLattice, chain: Sequence[int], family) -> ChainValuation:
    family = Family(family)
    chain = tuple(chain)
    enum_ = chain_to_enumeration(L, chain)
    N = L.rank
    pos = {m: i for i, m in enumerate(enum_)}
    B = np.zeros((N, N), dtype=np.int64)
    for j in range(1, N + 1):
        c = chain[j]
        if family is Family.SPEC:
            rows = [pos[m] for m in L.spec(c)]
        elif family is Family.MAXSPEC:
            rows = [pos[m] for m in L.max_spec(c)]
        else:
            rows = [j - 1]
        B[rows, j - 1] = 1
    if N and _exact.det(B.tolist()) == 0:
        raise ArithmeticError("singular valuation matrix")
    position = tuple(pos[m] for m in L.irreducibles)
    return ChainValuation(L, chain, family, B, enum_, position)


def to_xhat_coords(y_chain: Sequence[int]) -> tuple[int, ...]:
    """Chain ``y`` exponents to exponents of xhat_{c_1}, ..., xhat_{c_N}.

    Uses ``y_j = xhat_{c_j} / xhat_{c_{j-1}}``.
    """
    y = list(y_chain) + [0]
    return tuple(y[j] - y[j + 1] for j in range(len(y_chain)))


def valuate_laurent(V: ChainValuation, n: Sequence[int]) -> Value:
    """``B @ n`` for exponents ``n`` in the chain's xhat coordinates."""
    B = V.matrix
    N = B.shape[0]
    return Value(tuple(int(sum(int(B[i, j]) * n[j] for j in range(N) if n[j])) for i in range(N)))


Laurent = Union[Sequence[int], Mapping[tuple, object]]


def canonical_terms(p: Laurent) -> dict:
    """Combine like terms and drop zeros; a monomial becomes ``{exps: 1}``.

    Also accepts a list of ``(exponents, coefficient)`` pairs.
    """
    pairs = None
    if isinstance(p, Mapping):
        pairs = p.items()
    elif len(p) and isinstance(p[0], tuple):
        pairs = p
    if pairs is not None:
        out = {}
        for e, c in pairs:
            e = tuple(e)
            out[e] = out.get(e, 0) + Fraction(c)
        out = {e: c for e, c in out.items() if c != 0}
    else:
        out = {tuple(p): Fraction(1)}
    if not out:
        raise ValueError("valuation of zero is undefined")
    return out


def valuate_poly(V: ChainValuation, p: Laurent) -> Value:
    return min(V.value(e) for e in canonical_terms(p))


@lru_cache(maxsize=None)
def chain_valuations(L: DistributiveLattice, family) -> tuple[ChainValuation, ...]:
    return tuple(chain_valuation(L, c, family) for c in maximal_chains(L))


def quasi_valuation(L: DistributiveLattice, family, p: Laurent) -> tuple[Value, list[tuple[int, ...]]]:
    """Minimum of the chain valuations, with the chains attaining it."""
    terms = canonical_terms(p)
    best, argmin = None, []
    for V in chain_valuations(L, Family(family)):
        v = min(V.value(e) for e in terms)
        if best is None or v < best:
            best, argmin = v, [V.chain]
        elif v == best:
            argmin.append(V.chain)
    return best, argmin


def graded_product(L: DistributiveLattice, s1: Sequence[int], s2: Sequence[int]):
    """Product in the discrete Hodge algebra: the merged multichain, or None for zero."""
    merged = list(s1) + list(s2)
    if not is_standard(L, merged):
        return None
    return sort_decreasing(L, merged)
