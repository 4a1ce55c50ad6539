"""The lattice I(d, n), Plücker coordinates and the straightening law.

Plücker indices are increasing d-tuples; lattice ids follow lexicographic
order of the tuples.  Straightening coefficients are found by exact linear
algebra against the minors of a generic d x n matrix, so every relation is an
identity of polynomials, not a numerical fit.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import NamedTuple, Sequence

from . import _exact
from .hibi import monomial_exponents, sort_decreasing
from .poset import DistributiveLattice, Poset, maximal_chains
from .qpoly import QPolynomial
from .serialize import rational
from .valuations import Order, Value, chain_valuation


def _check_dn(d, n):
    if not (isinstance(d, int) and isinstance(n, int) and 1 <= d <= n):
        raise ValueError(f"need 1 <= d <= n, got d={d!r}, n={n!r}")


@lru_cache(maxsize=None)
def build_idn(d: int, n: int) -> DistributiveLattice:
    """I(d, n) ordered componentwise; join/meet are componentwise max/min."""
    _check_dn(d, n)
    labels = list(itertools.combinations(range(1, n + 1), d))
    return DistributiveLattice.from_order(labels, lambda a, b: all(x <= y for x, y in zip(a, b)))


class Irreducible(NamedTuple):
    """I_{s,t} = [1..s, t+1..t+d-s]; s == 0 is the consecutive family."""
    s: int
    t: int

    @property
    def kind(self) -> str:
        return "consecutive" if self.s == 0 else "one_descent"


def classify_irreducible(I: Sequence[int]) -> Irreducible | None:
    """Which join-irreducible family ``I`` belongs to, or None if reducible."""
    I = tuple(I)
    d = len(I)
    if all(b == a + 1 for a, b in zip(I, I[1:])):
        return Irreducible(0, I[0] - 1)
    s = 0
    while s < d and I[s] == s + 1:
        s += 1
    tail = I[s:]
    if 1 <= s <= d - 1 and all(b == a + 1 for a, b in zip(tail, tail[1:])):
        return Irreducible(s, tail[0] - 1)
    return None


def irreducible_index(d: int, s: int, t: int) -> tuple[int, ...]:
    return tuple(range(1, s + 1)) + tuple(range(t + 1, t + d - s + 1))


def wt(I: Sequence[int], n: int) -> tuple[int, ...]:
    """Weight eps_{i_1} + ... + eps_{i_d} in eps coordinates."""
    v = [0] * n
    for i in I:
        v[i - 1] += 1
    return tuple(v)


def omega(I: Sequence[int], n: int) -> tuple[int, ...]:
    """omega(I_{s,t}) = eps_{t+1} - eps_t, and 0 at the bottom."""
    c = classify_irreducible(I)
    if c is None:
        raise ValueError(f"{tuple(I)} is not join-irreducible")
    v = [0] * n
    if c.t == 0:
        return tuple(v)
    v[c.t] += 1
    v[c.t - 1] -= 1
    return tuple(v)


def omega_spec(d: int, n: int, I: Sequence[int]) -> tuple[int, ...]:
    L = build_idn(d, n)
    v = [0] * n
    for m in L.spec(L.index(tuple(I))):
        for k, x in enumerate(omega(L.labels[m], n)):
            v[k] += x
    return tuple(v)


def root_coords(v: Sequence[int]) -> tuple[int, ...]:
    """Coordinates over alpha_1..alpha_{n-1} of a vector in the sum-zero hyperplane."""
    if sum(v):
        raise ValueError("vector is not in the hyperplane H")
    out, acc = [], 0
    for x in v[:-1]:
        acc += x
        out.append(-acc)
    return tuple(out)


def root_vector(i: int, j: int, n: int) -> tuple[int, ...]:
    """alpha_{i,j} = eps_{j+1} - eps_i."""
    v = [0] * n
    v[j] += 1
    v[i - 1] -= 1
    return tuple(v)


# -- root poset -----------------------------------------------------------

def root_poset(d: int, n: int) -> Poset:
    """R_{d,n}: elements (i, j), 1 <= i <= d <= j <= n-1.

    Covers follow the grid arrows, pointing from an element to the ones below
    it: (i, j) covers (i+1, j) and (i, j+1).  The top is (1, d).
    """
    _check_dn(d, n)
    elems = [(i, j) for i in range(1, d + 1) for j in range(d, n)]
    covers = []
    for i, j in elems:
        if i < d:
            covers.append(((i + 1, j), (i, j)))
        if j < n - 1:
            covers.append(((i, j + 1), (i, j)))
    return Poset(elems, covers)


def irreducible_to_root(I: Sequence[int], n: int) -> tuple[int, int]:
    """The grid cell of I_{s,t} in J(L)*, read as an element of R_{d,n}.

    I_{s,t} sits in column s+1 and row t-s (rows counted from the bottom);
    the map is an isomorphism of posets J(L)* -> R_{d,n}.
    """
    c = classify_irreducible(I)
    if c is None or c.t == 0:
        raise ValueError(f"{tuple(I)} is not in J(L)*")
    return (c.s + 1, n - c.t + c.s)


# -- Plücker algebra --------------------------------------------------------

def _perm_sign(seq):
    """Sign of the permutation sorting ``seq``, or 0 on repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def _minors(d: int, n: int) -> tuple[QPolynomial, ...]:
    """Maximal minors of the generic d x n matrix z (variable r*n + c), in lattice order."""
    L = build_idn(d, n)
    nv = d * n
    out = []
    for I in L.labels:
        terms = {}
        for perm in itertools.permutations(range(d)):
            e = [0] * nv
            for r in range(d):
                e[r * n + I[perm[r]] - 1] += 1
            terms[tuple(e)] = terms.get(tuple(e), 0) + _perm_sign(perm)
        out.append(QPolynomial(nv, terms))
    return tuple(out)


def minor(d: int, n: int, I: Sequence[int]) -> QPolynomial:
    L = build_idn(d, n)
    return _minors(d, n)[L.index(tuple(I))]


def evaluate_minors(d: int, n: int, poly: QPolynomial) -> QPolynomial:
    """Substitute p_I -> det(z[:, I]) into a polynomial in the Plücker variables."""
    return poly.substitute(list(_minors(d, n)))


def plucker_relations(d: int, n: int) -> list[QPolynomial]:
    """Quadratic shuffle relations in the Plücker variables.

    For index tuples I, J and 1 <= t <= d, the d+1 indices
    ``i_1..i_t, j_t..j_d`` are shuffled between the first t slots of I and the
    last d+1-t slots of J, with the sign of the shuffle.  Relations are
    normalised, deduplicated, and kept only if they vanish on minors.
    """
    L = build_idn(d, n)
    nv = len(L)
    seen = set()
    out = []
    for I in L.labels:
        for J in L.labels:
            for t in range(1, d + 1):
                pool = I[:t] + J[t - 1:]
                terms = {}
                for S in itertools.combinations(range(d + 1), t):
                    Sc = [k for k in range(d + 1) if k not in S]
                    sgn = _perm_sign(list(S) + Sc)
                    A = tuple(pool[k] for k in S) + I[t:]
                    B = J[:t - 1] + tuple(pool[k] for k in Sc)
                    sa, sb = _perm_sign(A), _perm_sign(B)
                    if not (sa and sb):
                        continue
                    a, b = L.index(tuple(sorted(A))), L.index(tuple(sorted(B)))
                    e = [0] * nv
                    e[a] += 1
                    e[b] += 1
                    terms[tuple(e)] = terms.get(tuple(e), 0) + sgn * sa * sb
                rel = QPolynomial(nv, terms)
                if rel.is_zero():
                    continue
                lead = rel.sorted_terms()[0][1]
                rel = rel * (1 / lead)
                key = frozenset(rel.terms.items())
                if key in seen:
                    continue
                seen.add(key)
                if evaluate_minors(d, n, rel).is_zero():
                    out.append(rel)
    return out


def degree2_relation_space(d: int, n: int) -> list[list[Fraction]]:
    """Kernel of p -> minors on degree-2 monomials, as coefficient vectors.

    Coordinates follow ``itertools.combinations_with_replacement`` of lattice ids.
    """
    L = build_idn(d, n)
    mons = list(itertools.combinations_with_replacement(range(len(L)), 2))
    mins = _minors(d, n)
    images = [mins[a] * mins[b] for a, b in mons]
    zmons = sorted({e for p in images for e in p.terms})
    col = {e: k for k, e in enumerate(zmons)}
    rows = [[Fraction(0)] * len(mons) for _ in zmons]
    for j, p in enumerate(images):
        for e, c in p.terms.items():
            rows[col[e]][j] = c
    return _exact.nullspace(rows, len(mons))


def relation_vector(d: int, n: int, rel: QPolynomial) -> list[Fraction]:
    L = build_idn(d, n)
    mons = list(itertools.combinations_with_replacement(range(len(L)), 2))
    v = []
    for a, b in mons:
        e = [0] * len(L)
        e[a] += 1
        e[b] += 1
        v.append(rel.terms.get(tuple(e), Fraction(0)))
    return v


# -- straightening ---------------------------------------------------------

class StraighteningTerm(NamedTuple):
    k1: int
    k2: int
    coeff: Fraction


@dataclass(frozen=True, eq=False)
class StraighteningTable:
    """Incomparable pair ``(a, b)``, ``a < b`` by id -> standard expansion of p_a p_b.

    The term on (a v b, a ^ b) comes first.
    """
    d: int
    n: int
    entries: dict = field(repr=False)

    @property
    def lattice(self) -> DistributiveLattice:
        return build_idn(self.d, self.n)

    def terms(self, a: int, b: int) -> tuple[StraighteningTerm, ...]:
        return self.entries[(min(a, b), max(a, b))]

    def mutated(self, pair, new_terms) -> "StraighteningTable":
        e = dict(self.entries)
        e[pair] = tuple(StraighteningTerm(*t) for t in new_terms)
        return StraighteningTable(self.d, self.n, e)

    def to_json(self) -> list[dict]:
        L = self.lattice
        lab = lambda x: list(L.labels[x])
        return [{"pair": [lab(a), lab(b)],
                 "terms": [{"k1": lab(t.k1), "k2": lab(t.k2), "coeff": rational(t.coeff)}
                           for t in terms]}
                for (a, b), terms in sorted(self.entries.items())]


def _candidates(L: DistributiveLattice, a: int, b: int) -> list[tuple[int, int]]:
    j, m = L.join(a, b), L.meet(a, b)
    pool = sorted(L.labels[a] + L.labels[b])
    out = []
    for k1 in range(len(L)):
        if not L.leq(j, k1):
            continue
        for k2 in range(len(L)):
            if L.leq(k2, m) and sorted(L.labels[k1] + L.labels[k2]) == pool:
                out.append((k1, k2))
    return out


def straighten(d: int, n: int, I1: Sequence[int], I2: Sequence[int]) -> tuple[StraighteningTerm, ...]:
    """Standard-monomial expansion of p_{I1} p_{I2} for an incomparable pair."""
    L = build_idn(d, n)
    a, b = L.index(tuple(I1)), L.index(tuple(I2))
    if L.comparable(a, b):
        raise ValueError(f"{tuple(I1)} and {tuple(I2)} are comparable; p_I p_J is already standard")
    return _straighten_ids(d, n, a, b)


def _straighten_ids(d, n, a, b):
    L = build_idn(d, n)
    mins = _minors(d, n)
    cands = _candidates(L, a, b)
    target = mins[a] * mins[b]
    images = [mins[k1] * mins[k2] for k1, k2 in cands]
    zmons = sorted(set(target.terms).union(*(p.terms for p in images)))
    A = [[p.terms.get(e, Fraction(0)) for p in images] for e in zmons]
    rhs = [target.terms.get(e, Fraction(0)) for e in zmons]
    try:
        coeffs = _exact.solve(A, rhs)
    except ValueError as exc:
        raise ArithmeticError(f"straightening system for {L.labels[a]}, {L.labels[b]}: {exc}") from None
    lead = (L.join(a, b), L.meet(a, b))
    terms = [StraighteningTerm(k1, k2, c) for (k1, k2), c in zip(cands, coeffs) if c]
    terms.sort(key=lambda t: ((t.k1, t.k2) != lead, -L.height(t.k1), t.k1, t.k2))
    return tuple(terms)


@lru_cache(maxsize=None)
def straightening_table(d: int, n: int, jobs: int = 1) -> StraighteningTable:
    L = build_idn(d, n)
    pairs = [(a, b) for a in range(len(L)) for b in range(a + 1, len(L)) if not L.comparable(a, b)]
    if jobs > 1 and len(pairs) > 8:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_straighten_ids, [d] * len(pairs), [n] * len(pairs),
                                  [p[0] for p in pairs], [p[1] for p in pairs]))
    else:
        results = [_straighten_ids(d, n, a, b) for a, b in pairs]
    return StraighteningTable(d, n, dict(zip(pairs, results)))


def relation_polynomial(table: StraighteningTable, a: int, b: int) -> QPolynomial:
    """p_a p_b - sum(coeff * p_k1 p_k2) in the Plücker variables."""
    nv = len(table.lattice)

    def mon(x, y):
        e = [0] * nv
        e[x] += 1
        e[y] += 1
        return tuple(e)

    terms = {mon(a, b): Fraction(1)}
    for t in table.terms(a, b):
        k = mon(t.k1, t.k2)
        terms[k] = terms.get(k, 0) - t.coeff
    return QPolynomial(nv, terms)


def check_table_shape(table: StraighteningTable) -> list[str]:
    """Leading coefficient, sandwich and index-multiset conditions; returns problems."""
    L = table.lattice
    problems = []
    for (a, b), terms in table.entries.items():
        j, m = L.join(a, b), L.meet(a, b)
        lead = [t for t in terms if (t.k1, t.k2) == (j, m)]
        if len(lead) != 1 or lead[0].coeff != 1:
            problems.append(f"{L.labels[a]},{L.labels[b]}: leading coefficient is not 1")
        pool = sorted(L.labels[a] + L.labels[b])
        for t in terms:
            if sorted(L.labels[t.k1] + L.labels[t.k2]) != pool:
                problems.append(f"{L.labels[a]},{L.labels[b]}: index multiset changed")
            if (t.k1, t.k2) != (j, m) and not (L.lt(j, t.k1) and L.lt(t.k2, m)):
                problems.append(f"{L.labels[a]},{L.labels[b]}: term outside the sandwich")
    return problems


# -- governedness ----------------------------------------------------------

@dataclass
class PairReport:
    pair: tuple[int, int]
    status: str
    leading_coefficient: Fraction
    witnesses: list = field(default_factory=list)
    failures: list = field(default_factory=list)


@dataclass
class GovernedReport:
    d: int
    n: int
    pairs: list[PairReport]

    @property
    def passed(self) -> bool:
        return all(p.status == "pass" for p in self.pairs)

    def to_json(self) -> list[dict]:
        L = build_idn(self.d, self.n)
        lab = lambda x: list(L.labels[x])
        out = []
        for p in self.pairs:
            out.append({
                "pair": [lab(p.pair[0]), lab(p.pair[1])],
                "status": p.status,
                "leadingCoefficient": rational(p.leading_coefficient),
                "witnesses": [{"k1": lab(k1), "k2": lab(k2), "m1": lab(m1), "m2": lab(m2),
                               "case": case, "h": lab(h), "h2": lab(h2)}
                              for k1, k2, m1, m2, case, h, h2 in p.witnesses],
                "failures": [{"k1": lab(k1), "k2": lab(k2), "m1": lab(m1), "m2": lab(m2)}
                             for k1, k2, m1, m2 in p.failures],
            })
        return out


def _domination_case(L, k1, k2, m1, m2):
    """First case of the three-way disjunction that holds, with its witnesses."""
    mk1, mk2 = L.max_spec(k1), L.max_spec(k2)
    for h in sorted(mk1):
        if L.lt(m1, h):
            return 1, h, h
    if m1 in mk1:
        for h2 in sorted(mk1):
            if h2 != m1 and L.lt(m2, h2):
                return 2, m1, h2
        for h2 in sorted(mk2):
            if L.leq(m2, h2):
                return 3, m1, h2
    return None


def governed_check(table: StraighteningTable) -> GovernedReport:
    """Check the leading-coefficient and maxSpec domination conditions pair by pair."""
    L = table.lattice
    reports = []
    for (a, b), terms in sorted(table.entries.items()):
        j, m = L.join(a, b), L.meet(a, b)
        lead = next((t.coeff for t in terms if (t.k1, t.k2) == (j, m)), Fraction(0))
        rep = PairReport((a, b), "pass", lead)
        if lead != 1:
            rep.status = "fail"
        for t in terms:
            if (t.k1, t.k2) == (j, m) or t.coeff == 0:
                continue
            for m1 in sorted(L.max_spec(j)):
                for m2 in sorted(L.max_spec(m)):
                    if not L.leq(m2, m1):
                        continue
                    found = _domination_case(L, t.k1, t.k2, m1, m2)
                    if found is None:
                        rep.status = "fail"
                        rep.failures.append((t.k1, t.k2, m1, m2))
                    else:
                        rep.witnesses.append((t.k1, t.k2, m1, m2) + found)
        reports.append(rep)
    return GovernedReport(table.d, table.n, reports)


# -- the coordinate ring and its valuations ----------------------------------

class GrassmannRing:
    """C[Gr(d, n)] through its standard monomial basis.

    Plücker monomials are tuples of lattice ids; polynomials are
    ``{monomial: coefficient}`` dicts.
    """

    def __init__(self, d: int, n: int, table: StraighteningTable | None = None):
        _check_dn(d, n)
        self.d, self.n = d, n
        self.lattice = build_idn(d, n)
        self._table = table
        self._std_cache = {}

    @cached_property
    def table(self) -> StraighteningTable:
        return self._table if self._table is not None else straightening_table(self.d, self.n)

    @cached_property
    def chains(self) -> tuple[tuple[int, ...], ...]:
        return tuple(maximal_chains(self.lattice))

    @cached_property
    def _spec_valuations(self):
        return {c: chain_valuation(self.lattice, c, "spec") for c in self.chains}

    def monomial(self, *labels) -> tuple[int, ...]:
        return tuple(self.lattice.index(tuple(x)) for x in labels)

    def standard_form(self, monomial: Sequence[int]) -> dict[tuple[int, ...], Fraction]:
        """Expand a monomial in standard monomials by repeated straightening."""
        L = self.lattice
        key = tuple(sorted(monomial, key=lambda x: (L.height(x), x)))
        if key in self._std_cache:
            return self._std_cache[key]
        for i in range(len(key) - 1):
            a, b = key[i], key[i + 1]
            if not L.comparable(a, b):
                break
        else:
            res = {tuple(reversed(key)): Fraction(1)}
            self._std_cache[key] = res
            return res
        rest = key[:i] + key[i + 2:]
        res = {}
        for t in self.table.terms(a, b):
            for mon, c in self.standard_form(rest + (t.k1, t.k2)).items():
                res[mon] = res.get(mon, 0) + t.coeff * c
        res = {k: v for k, v in res.items() if v}
        self._std_cache[key] = res
        return res

    def standard_form_poly(self, poly) -> dict[tuple[int, ...], Fraction]:
        out = {}
        for mon, c in _poly_items(poly):
            for s, c2 in self.standard_form(mon).items():
                out[s] = out.get(s, 0) + Fraction(c) * c2
        out = {k: v for k, v in out.items() if v}
        if not out:
            raise ValueError("valuation of zero is undefined")
        return out

    def mu_standard(self, chain: Sequence[int], monomial: Sequence[int]) -> Value:
        """Degree in coordinate 0, then nu_{C,Spec} of the xhat image."""
        V = self._spec_valuations[tuple(chain)]
        nu = V.value(monomial_exponents(self.lattice, monomial))
        return Value((len(monomial),) + nu.coords, Order.GRADED_REVLEX)

    def mu_chain(self, chain: Sequence[int], poly) -> Value:
        """mu_{C,Spec}: minimum over the standard expansion."""
        std = self.standard_form_poly(poly)
        return min(self.mu_standard(chain, s) for s in std)

    def mu_quasi(self, poly) -> tuple[Value, list[tuple[int, ...]]]:
        std = self.standard_form_poly(poly)
        best, argmin = None, []
        for c in self.chains:
            v = min(self.mu_standard(c, s) for s in std)
            if best is None or v < best:
                best, argmin = v, [c]
            elif v == best:
                argmin.append(c)
        return best, argmin

    def is_standard(self, monomial) -> bool:
        return self.lattice.is_chain(set(monomial))

    def sorted_standard(self, monomial) -> tuple[int, ...]:
        return sort_decreasing(self.lattice, monomial)


def _poly_items(poly):
    if isinstance(poly, dict):
        return [(tuple(k), v) for k, v in poly.items()]
    return [(tuple(poly), 1)]


@lru_cache(maxsize=None)
def grassmann_ring(d: int, n: int) -> GrassmannRing:
    return GrassmannRing(d, n)


def mu_chain(d: int, n: int, chain: Sequence[int], poly) -> Value:
    return grassmann_ring(d, n).mu_chain(chain, poly)


def mu_quasi(d: int, n: int, poly) -> tuple[Value, list[tuple[int, ...]]]:
    return grassmann_ring(d, n).mu_quasi(poly)
