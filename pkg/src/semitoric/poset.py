"""Finite posets and finite distributive lattices via Birkhoff's representation.

Every lattice element is stored as the bitmask of the join-irreducible elements
below it.  The bottom element is join-irreducible by convention but never gets
a bit: it sits below everything, so its bit would always be set.  Bit ``k``
corresponds to ``L.irreducibles[k]`` and the lattice operations become
``|`` and ``&`` on masks.
"""
from __future__ import annotations

from typing import Callable, Hashable, Iterable, Iterator, Sequence


class Poset:
    """A finite poset given by its Hasse diagram.

    ``covers`` are ``(lower, upper)`` label pairs.  Cycles and cover pairs that
    are already implied by transitivity are rejected.
    """

    def __init__(self, elements: Sequence[Hashable], covers: Iterable[tuple]):
        self.labels = tuple(elements)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise ValueError("duplicate poset element")
        n = len(self.labels)
        up = [set() for _ in range(n)]
        for lo, hi in covers:
            try:
                a, b = self._index[lo], self._index[hi]
            except KeyError as exc:
                raise ValueError(f"cover references unknown element {exc.args[0]!r}") from None
            if a == b:
                raise ValueError(f"self-loop on {lo!r}")
            up[a].add(b)
        # topological order (Kahn); leftovers mean a cycle
        indeg = [0] * n
        for a in range(n):
            for b in up[a]:
                indeg[b] += 1
        order = [i for i in range(n) if indeg[i] == 0]
        for i in order:
            for b in sorted(up[i]):
                indeg[b] -= 1
                if indeg[b] == 0:
                    order.append(b)
        if len(order) != n:
            raise ValueError("cover relation has a cycle")
        # strict-below sets as bitmasks, built in topological order
        below = [0] * n
        for i in order:
            for b in up[i]:
                below[b] |= below[i] | (1 << i)
        for a in range(n):
            for b in up[a]:
                if any(below[b] >> c & 1 and below[c] >> a & 1 for c in up[a] if c != b):
                    raise ValueError(
                        f"cover ({self.labels[a]!r}, {self.labels[b]!r}) is implied by transitivity")
        self._below = below
        self._up = [tuple(sorted(s)) for s in up]
        down = [[] for _ in range(n)]
        for a in range(n):
            for b in up[a]:
                down[b].append(a)
        self._down = [tuple(sorted(s)) for s in down]
        self.topological_order = tuple(order)

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"Poset({len(self)} elements, {sum(map(len, self._up))} covers)"

    def index(self, label) -> int:
        return self._index[label]

    def leq(self, a: int, b: int) -> bool:
        return a == b or bool(self._below[b] >> a & 1)

    def lt(self, a: int, b: int) -> bool:
        return a != b and bool(self._below[b] >> a & 1)

    def upper_covers(self, a: int) -> tuple[int, ...]:
        return self._up[a]

    def lower_covers(self, a: int) -> tuple[int, ...]:
        return self._down[a]

    def strictly_below(self, a: int) -> int:
        """Bitmask of elements strictly below ``a``."""
        return self._below[a]

    def cover_pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(len(self)) for b in self._up[a]]

    def minimal(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self)) if not self._down[i])

    def maximal(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self)) if not self._up[i])

    def order_ideals(self) -> Iterator[int]:
        """Yield every order ideal (downward closed subset) as a bitmask."""
        order = self.topological_order
        below = self._below
        n = len(order)

        def rec(k, mask):
            if k == n:
                yield mask
                return
            x = order[k]
            yield from rec(k + 1, mask)
            # everything below x comes earlier in topological order
            if below[x] & ~mask == 0:
                yield from rec(k + 1, mask | (1 << x))

        yield from rec(0, 0)

    def is_antichain(self, elements: Iterable[int]) -> bool:
        els = list(elements)
        return not any(self.lt(a, b) or self.lt(b, a) for a in els for b in els)

    @classmethod
    def from_json(cls, data: dict) -> "Poset":
        elements = [_hashable(e) for e in data["elements"]]
        covers = [(_hashable(lo), _hashable(hi)) for lo, hi in data["covers"]]
        return cls(elements, covers)

    def to_json(self) -> dict:
        return {
            "elements": [_jsonable(x) for x in self.labels],
            "covers": [[_jsonable(self.labels[a]), _jsonable(self.labels[b])]
                       for a, b in self.cover_pairs()],
        }


def _hashable(x):
    return tuple(_hashable(y) for y in x) if isinstance(x, list) else x


def _jsonable(x):
    if isinstance(x, (tuple, list, frozenset)):
        return [_jsonable(y) for y in x]
    return x


class DistributiveLattice:
    """A finite bounded distributive lattice.

    Construct with :meth:`from_order` (any finite poset that happens to be a
    distributive lattice) or :func:`ideals_to_lattice`.  Elements are addressed
    by integer id, ``0 .. len(L) - 1``; ``L.index(label)`` translates.
    """

    def __init__(self, labels, masks, irreducibles):
        self.labels = tuple(labels)
        self.masks = tuple(masks)
        #: ids of J(L)* (bottom excluded), in bit order
        self.irreducibles = tuple(irreducibles)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._by_mask = {m: i for i, m in enumerate(self.masks)}
        self.bottom = self._by_mask[0]
        full = (1 << len(self.irreducibles)) - 1
        self.top = self._by_mask[full]
        self._bit = {j: k for k, j in enumerate(self.irreducibles)}
        # strict-below masks of irreducibles, in bit coordinates
        self._irr_below = tuple(self.masks[j] & ~(1 << k) for k, j in enumerate(self.irreducibles))
        self._upper = None

    @classmethod
    def from_order(cls, labels: Sequence[Hashable],
                   leq: Callable[[Hashable, Hashable], bool]) -> "DistributiveLattice":
        """Build from element labels and a partial-order predicate.

        Raises ``ValueError`` unless the order is a finite distributive
        lattice (checked through Birkhoff's theorem).
        """
        labels = tuple(labels)
        n = len(labels)
        if n == 0:
            raise ValueError("empty lattice")
        le = [[bool(leq(a, b)) for b in labels] for a in labels]
        for i in range(n):
            if not le[i][i]:
                raise ValueError("order is not reflexive")
            for j in range(n):
                if i != j and le[i][j] and le[j][i]:
                    raise ValueError("order is not antisymmetric")
        for i in range(n):
            for j in range(n):
                if le[i][j]:
                    for k in range(n):
                        if le[j][k] and not le[i][k]:
                            raise ValueError("order is not transitive")
        bottoms = [i for i in range(n) if all(le[i])]
        if len(bottoms) != 1 or not any(all(le[j][i] for j in range(n)) for i in range(n)):
            raise ValueError("order is not bounded")

        def lower_covers(x):
            below = [y for y in range(n) if y != x and le[y][x]]
            return [y for y in below if not any(z != y and le[y][z] for z in below)]

        irr = [x for x in range(n) if len(lower_covers(x)) == 1]
        masks = []
        for x in range(n):
            m = 0
            for k, j in enumerate(irr):
                if le[j][x]:
                    m |= 1 << k
            masks.append(m)
        if len(set(masks)) != n:
            raise ValueError("not a distributive lattice (Birkhoff map not injective)")
        for x in range(n):
            for y in range(n):
                if le[x][y] != (masks[x] & ~masks[y] == 0):
                    raise ValueError("not a distributive lattice (Birkhoff map not an order embedding)")
        irr_poset = Poset([labels[j] for j in irr],
                          [(labels[a], labels[b]) for a in irr for b in irr
                           if a != b and le[a][b] and not any(
                               c not in (a, b) and le[a][c] and le[c][b] for c in irr)])
        n_ideals = sum(1 for _ in irr_poset.order_ideals())
        if n_ideals != n:
            raise ValueError("not a distributive lattice (Birkhoff map not surjective)")
        return cls(labels, masks, irr)

    # -- basic access -----------------------------------------------------

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"DistributiveLattice({len(self)} elements, N={self.rank})"

    @property
    def rank(self) -> int:
        """N = |J(L)*|, the length of every maximal chain."""
        return len(self.irreducibles)

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown lattice element {label!r}") from None

    def label(self, x: int):
        return self.labels[x]

    def _check(self, x):
        if not (isinstance(x, int) and 0 <= x < len(self.labels)):
            raise KeyError(f"unknown lattice element id {x!r}")

    def from_mask(self, mask: int) -> int:
        return self._by_mask[mask]

    def bit(self, m: int) -> int:
        """Bit position of the join-irreducible ``m`` (not the bottom)."""
        return self._bit[m]

    # -- lattice operations -------------------------------------------------

    def join(self, a: int, b: int) -> int:
        return self._by_mask[self.masks[a] | self.masks[b]]

    def meet(self, a: int, b: int) -> int:
        return self._by_mask[self.masks[a] & self.masks[b]]

    def join_all(self, elements: Iterable[int]) -> int:
        m = 0
        for x in elements:
            m |= self.masks[x]
        return self._by_mask[m]

    def leq(self, a: int, b: int) -> bool:
        return self.masks[a] & ~self.masks[b] == 0

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    def comparable(self, a: int, b: int) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def height(self, x: int) -> int:
        return bin(self.masks[x]).count("1")

    def is_chain(self, elements: Iterable[int]) -> bool:
        els = list(elements)
        return all(self.comparable(a, b) for i, a in enumerate(els) for b in els[i + 1:])

    # -- Birkhoff representation -------------------------------------------

    def join_irreducibles(self) -> tuple[int, ...]:
        """J(L), bottom first, then J(L)* in bit order."""
        return (self.bottom,) + self.irreducibles

    def spec(self, x: int) -> frozenset[int]:
        """Join-irreducibles below ``x``, the bottom left implicit."""
        self._check(x)
        m = self.masks[x]
        return frozenset(j for k, j in enumerate(self.irreducibles) if m >> k & 1)

    def max_spec(self, x: int) -> frozenset[int]:
        """Maximal elements of Spec(x); ``{bottom}`` for the bottom."""
        self._check(x)
        m = self.masks[x]
        if m == 0:
            return frozenset({self.bottom})
        return frozenset(j for k, j in enumerate(self.irreducibles)
                         if m >> k & 1 and not any(
                             m >> k2 & 1 and self._irr_below[k2] >> k & 1
                             for k2 in range(self.rank)))

    def irreducible_poset(self) -> Poset:
        """The induced poset on J(L)*, labels taken from the lattice."""
        irr = self.irreducibles
        covers = []
        for k, a in enumerate(irr):
            for k2, b in enumerate(irr):
                if self._irr_below[k2] >> k & 1 and not any(
                        self._irr_below[k2] >> k3 & 1 and self._irr_below[k3] >> k & 1
                        for k3 in range(self.rank)):
                    covers.append((self.labels[a], self.labels[b]))
        return Poset([self.labels[j] for j in irr], covers)

    # -- covers and chains --------------------------------------------------

    def upper_covers(self, x: int) -> tuple[int, ...]:
        if self._upper is None:
            ups = []
            for m in self.masks:
                ups.append(tuple(sorted(
                    self._by_mask[m | 1 << k] for k in range(self.rank)
                    if not m >> k & 1 and self._irr_below[k] & ~m == 0)))
            self._upper = tuple(ups)
        return self._upper[x]

    def covers(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(len(self)) for y in self.upper_covers(x)]

    def is_cover(self, x: int, y: int) -> bool:
        mx, my = self.masks[x], self.masks[y]
        return mx & ~my == 0 and bin(my & ~mx).count("1") == 1

    def check_maximal_chain(self, chain: Sequence[int]) -> None:
        if len(chain) != self.rank + 1 or chain[0] != self.bottom or chain[-1] != self.top:
            raise ValueError("chain does not run from bottom to top in N steps")
        for a, b in zip(chain, chain[1:]):
            if not self.is_cover(a, b):
                raise ValueError(f"chain step {self.labels[a]!r} -> {self.labels[b]!r} is not a cover")

    def to_json(self) -> dict:
        return {
            "elements": [_jsonable(x) for x in self.labels],
            "joinIrreducibles": [_jsonable(self.labels[j]) for j in self.join_irreducibles()],
            "covers": [[_jsonable(self.labels[a]), _jsonable(self.labels[b])]
                       for a, b in self.covers()],
        }


def ideals_to_lattice(poset: Poset) -> DistributiveLattice:
    """The lattice of order ideals of ``poset`` under union and intersection.

    Element labels are tuples of poset labels (in poset order); ids follow
    (size, bitmask) order, so the empty ideal is id 0.
    """
    ideals = sorted(poset.order_ideals(), key=lambda m: (bin(m).count("1"), m))
    labels = [tuple(poset.labels[i] for i in range(len(poset)) if m >> i & 1) for m in ideals]
    # principal ideals are exactly the join-irreducibles; give them bits in poset order
    principal = {poset.strictly_below(p) | (1 << p): p for p in range(len(poset))}
    irr = sorted((i for i, m in enumerate(ideals) if m in principal), key=lambda i: principal[ideals[i]])
    bitpos = {principal[ideals[i]]: k for k, i in enumerate(irr)}
    masks = []
    for m in ideals:
        b = 0
        for p in range(len(poset)):
            if m >> p & 1:
                b |= 1 << bitpos[p]
        masks.append(b)
    return DistributiveLattice(labels, masks, irr)


def chain_lattice(k: int) -> DistributiveLattice:
    """The chain 0 < 1 < ... < k-1."""
    return DistributiveLattice.from_order(range(k), lambda a, b: a <= b)


def maximal_chains(L: DistributiveLattice) -> Iterator[tuple[int, ...]]:
    """Depth-first stream of maximal chains; upper covers visited by id."""
    top = L.top
    path = [L.bottom]

    def rec():
        x = path[-1]
        if x == top:
            yield tuple(path)
            return
        for y in L.upper_covers(x):
            path.append(y)
            yield from rec()
            path.pop()

    yield from rec()


def chain_to_enumeration(L: DistributiveLattice, chain: Sequence[int]) -> tuple[int, ...]:
    """m_i = the single join-irreducible in Spec(c_i) \\ Spec(c_{i-1})."""
    L.check_maximal_chain(chain)
    out = []
    for a, b in zip(chain, chain[1:]):
        diff = L.masks[b] & ~L.masks[a]
        out.append(L.irreducibles[diff.bit_length() - 1])
    return tuple(out)


def enumeration_to_chain(L: DistributiveLattice, enumeration: Sequence[int]) -> tuple[int, ...]:
    """c_j = m_1 v ... v m_j; the enumeration must be order preserving."""
    if sorted(enumeration) != sorted(L.irreducibles):
        raise ValueError("enumeration must list J(L)* exactly once")
    mask = 0
    chain = [L.bottom]
    for m in enumeration:
        k = L.bit(m)
        if L._irr_below[k] & ~mask:
            raise ValueError(f"enumeration is not order preserving at {L.labels[m]!r}")
        mask |= 1 << k
        chain.append(L.from_mask(mask))
    return tuple(chain)
