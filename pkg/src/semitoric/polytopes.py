"""Order and chain polytopes of the grid poset R_{d,n}, Newton-Okounkov bodies,
the chain triangulation and the transfer map.

Points of R^{R_{d,n}} use the poset's element order, i.e. roots (i, j)
sorted lexicographically.  Order-polytope points are indicator functions of
order ideals (down-sets), not filters.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import _exact
from .grassmann import build_idn, irreducible_to_root, omega_spec, root_coords, root_poset
from .poset import DistributiveLattice, Poset, maximal_chains
from .valuations import chain_valuation

Point = tuple  # of Fraction or int


# -- inequalities and polytopes -------------------------------------------------

def normalize_inequality(normal, rhs) -> tuple[tuple[int, ...], int]:
    """Scale ``normal . x <= rhs`` to coprime integers (positive scaling only)."""
    vals = [Fraction(v) for v in normal] + [Fraction(rhs)]
    lcm = 1
    for v in vals:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in vals]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g == 0:
        raise ValueError("zero inequality")
    ints = [v // g for v in ints]
    return tuple(ints[:-1]), ints[-1]


def facets_from_points(points: Sequence[Sequence[int]], chunk: int = 20000) -> list[tuple[tuple[int, ...], int]]:
    """Facet inequalities of the hull of full-dimensional integer points.

    Every M-subset spanning a hyperplane is tried; numpy determinants give the
    candidate normals and each survivor is re-verified with exact integers.
    """
    pts = [tuple(int(x) for x in p) for p in points]
    pts = sorted(set(pts))
    if not pts:
        raise ValueError("no points")
    M = len(pts[0])
    if M == 0:
        return []
    P = np.array(pts, dtype=np.int64)
    diffs = [[int(x) for x in row] for row in (P[1:] - P[0])]
    if _exact.rank(diffs) != M:
        raise ValueError("points are not full-dimensional")
    found = set()
    combos = itertools.combinations(range(len(pts)), M)
    while True:
        block = list(itertools.islice(combos, chunk))
        if not block:
            break
        idx = np.array(block, dtype=np.int64)
        D = (P[idx[:, 1:]] - P[idx[:, :1]]).astype(float)
        normals = np.empty((len(block), M))
        for k in range(M):
            sub = np.delete(D, k, axis=2)
            normals[:, k] = (-1) ** k * (np.linalg.det(sub) if M > 1 else 1.0)
        normals = np.rint(normals).astype(np.int64)
        nz = normals.any(axis=1)
        normals, idx = normals[nz], idx[nz]
        vals = normals @ P.T
        b = vals[np.arange(len(idx)), idx[:, 0]]
        le = (vals <= b[:, None]).all(axis=1)
        ge = (vals >= b[:, None]).all(axis=1)
        for a, rhs, l, g in zip(normals, b, le, ge):
            if l:
                found.add(normalize_inequality(a.tolist(), int(rhs)))
            elif g:
                found.add(normalize_inequality((-a).tolist(), -int(rhs)))
    out = []
    for a, rhs in sorted(found):
        on = [p for p in pts if sum(x * y for x, y in zip(a, p)) == rhs]
        if all(sum(x * y for x, y in zip(a, p)) <= rhs for p in pts) and \
                _exact.rank([[x - y for x, y in zip(q, on[0])] for q in on[1:]]) == M - 1:
            out.append((a, rhs))
    return out


@dataclass
class RationalPolytope:
    """Polytope in Q^M with an H-representation and, when known, its vertices.

    ``hrep`` holds pairs ``(normal, rhs)`` meaning ``normal . x <= rhs``.
    """
    ambient_dim: int
    hrep: list
    vrep: list | None = None
    coordinates: tuple | None = field(default=None, repr=False)

    @classmethod
    def from_points(cls, points, coordinates=None) -> "RationalPolytope":
        pts = sorted({tuple(Fraction(x) for x in p) for p in points})
        ints = [tuple(int(x) for x in p) for p in pts]
        if any(Fraction(a) != b for p, q in zip(ints, pts) for a, b in zip(p, q)):
            raise ValueError("from_points expects integer points")
        hrep = facets_from_points(ints)
        verts = [p for p in pts if _is_vertex(p, hrep)]
        return cls(len(pts[0]), hrep, verts, coordinates)

    def contains(self, x: Sequence) -> bool:
        if len(x) != self.ambient_dim:
            raise ValueError("point has wrong dimension")
        return all(sum(Fraction(a) * Fraction(v) for a, v in zip(n, x)) <= Fraction(b) for n, b in self.hrep)

    def reduce(self) -> "RationalPolytope":
        """Drop redundant inequalities (exact; requires vertices)."""
        if self.vrep is None:
            raise ValueError("reduction needs a vertex description")
        keep = set()
        for a, b in self.hrep:
            on = [p for p in self.vrep if sum(Fraction(x) * y for x, y in zip(a, p)) == b]
            if len(on) >= self.ambient_dim and \
                    _exact.rank([[x - y for x, y in zip(q, on[0])] for q in on[1:]]) == self.ambient_dim - 1:
                keep.add(normalize_inequality(a, b))
        return RationalPolytope(self.ambient_dim, sorted(keep), list(self.vrep), self.coordinates)

    def facet_set(self) -> set:
        return {normalize_inequality(a, b) for a, b in self.hrep}

    def same_set(self, other: "RationalPolytope") -> bool:
        """Equality as point sets: same irredundant facet inequalities."""
        return self.reduce().facet_set() == other.reduce().facet_set()

    def _bounds(self, k: int):
        if self.vrep:
            lo = [min(p[i] for p in self.vrep) for i in range(self.ambient_dim)]
            hi = [max(p[i] for p in self.vrep) for i in range(self.ambient_dim)]
            return [math.floor(k * v) for v in lo], [math.ceil(k * v) for v in hi]
        from scipy.optimize import linprog
        A = np.array([[float(x) for x in a] for a, _ in self.hrep])
        b = np.array([float(k * Fraction(r)) for _, r in self.hrep])
        lo, hi = [], []
        for i in range(self.ambient_dim):
            c = np.zeros(self.ambient_dim)
            for sgn, sink in ((1, lo), (-1, hi)):
                c[i] = sgn
                res = linprog(c, A_ub=A, b_ub=b, bounds=[(None, None)] * self.ambient_dim, method="highs")
                if res.status == 3:
                    raise ValueError("polytope is unbounded")
                if res.status != 0:
                    raise ValueError(f"bounding LP failed: {res.message}")
                sink.append(math.floor(res.fun + 1e-9) if sgn == 1 else math.ceil(-res.fun - 1e-9))
        return lo, hi

    def lattice_points(self, k: int = 1) -> list[tuple[int, ...]]:
        """Integer points of the k-th dilate, by bounding-box scan."""
        if not (isinstance(k, int) and k >= 0):
            raise ValueError("dilation must be a non-negative integer")
        M = self.ambient_dim
        if M == 0:
            return [()]
        lo, hi = self._bounds(k)
        rows = [normalize_inequality(a, k * Fraction(b)) for a, b in self.hrep]
        A = np.array([r[0] for r in rows], dtype=np.int64).reshape(len(rows), M)
        b = np.array([r[1] for r in rows], dtype=np.int64)
        axes = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo, hi)]
        out = []
        # scan the last axis in bulk, the rest one prefix at a time
        head, last = axes[:-1], axes[-1]
        for prefix in itertools.product(*head):
            pts = np.empty((len(last), M), dtype=np.int64)
            pts[:, :-1] = prefix
            pts[:, -1] = last
            ok = (pts @ A.T <= b).all(axis=1)
            out.extend(tuple(int(v) for v in p) for p in pts[ok])
        return sorted(out)

    def to_json(self, with_points: bool = True) -> dict:
        from .serialize import rational
        d = {"ambientDim": self.ambient_dim,
             "vrep": [[rational(x) for x in p] for p in (self.vrep or [])],
             "hrep": [{"normal": [rational(x) for x in a], "rhs": rational(b)} for a, b in self.hrep]}
        if self.coordinates is not None:
            d["coordinates"] = [list(c) for c in self.coordinates]
        if with_points:
            d["latticePoints"] = [list(p) for p in self.lattice_points(1)]
        return d


def _is_vertex(p, hrep) -> bool:
    tight = [a for a, b in hrep if sum(Fraction(x) * y for x, y in zip(a, p)) == b]
    return bool(tight) and _exact.rank([list(a) for a in tight]) == len(p)


def ehrhart_polynomial(P: RationalPolytope) -> list[Fraction]:
    """Coefficients (constant first) interpolated from counts at k = 0..M.

    Only valid for lattice polytopes, where the count is a polynomial of degree M.
    """
    M = P.ambient_dim
    ks = list(range(M + 1))
    ys = [len(P.lattice_points(k)) for k in ks]
    coeffs = [Fraction(0)] * (M + 1)
    for i, (xi, yi) in enumerate(zip(ks, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(ks):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xi - xj
        for t, c in enumerate(basis):
            coeffs[t] += yi * c / denom
    return coeffs


# -- order polytope / Newton-Okounkov body ----------------------------------------

def order_polytope_of(P: Poset) -> RationalPolytope:
    """{0 <= x <= 1, x_t <= x_s for s below t}: lattice points are down-set indicators."""
    M = len(P)
    hrep = []

    def unit(pairs):
        v = [0] * M
        for i, c in pairs:
            v[i] += c
        return tuple(v)

    for s, t in P.cover_pairs():
        hrep.append((unit([(t, 1), (s, -1)]), 0))
    for t in P.maximal():
        hrep.append((unit([(t, -1)]), 0))
    for s in P.minimal():
        hrep.append((unit([(s, 1)]), 1))
    verts = []
    for mask in P.order_ideals():
        verts.append(tuple(Fraction(mask >> i & 1) for i in range(M)))
    return RationalPolytope(M, sorted(hrep), sorted(verts), tuple(P.labels))


@lru_cache(maxsize=None)
def order_polytope(d: int, n: int) -> RationalPolytope:
    """The order polytope of R_{d,n}; this is the Gelfand-Tsetlin polytope of the
    d-th fundamental weight up to a unimodular change of coordinates."""
    return order_polytope_of(root_poset(d, n))


gt_polytope = order_polytope


def chain_coordinate_map(d: int, n: int, chain: Sequence[int]) -> tuple[int, ...]:
    """Chain coordinate i (irreducible m_{i+1}) -> index of its grid cell in R_{d,n}."""
    L = build_idn(d, n)
    R = root_poset(d, n)
    V = chain_valuation(L, chain, "spec")
    return tuple(R.index(irreducible_to_root(L.labels[m], n)) for m in V.enumeration)


def body_points(L: DistributiveLattice, chain: Sequence[int]) -> list[tuple[int, ...]]:
    """nu_{C,Spec}(xhat_l) for every element l, in chain coordinates."""
    from .hibi import y_exponents
    V = chain_valuation(L, chain, "spec")
    return [V.value(y_exponents(L, x)).coords for x in range(len(L))]


def no_body(d: int, n: int, chain: Sequence[int]) -> RationalPolytope:
    """Newton-Okounkov body of the chain valuation, transported to R_{d,n} coordinates."""
    L = build_idn(d, n)
    L.check_maximal_chain(tuple(chain))
    perm = chain_coordinate_map(d, n, chain)
    pts = []
    for v in body_points(L, chain):
        p = [0] * L.rank
        for i, x in enumerate(v):
            p[perm[i]] = x
        pts.append(tuple(p))
    return RationalPolytope.from_points(pts, tuple(root_poset(d, n).labels))


# -- Dyck paths and the FFLV polytope -------------------------------------------

@dataclass(frozen=True)
class DyckPath:
    roots: tuple[tuple[int, int], ...]


def dyck_paths(d: int, n: int, maximal_only: bool = False) -> list[DyckPath]:
    """Paths alpha_{k,d} -> ... -> alpha_{d,t}, stepping (r,s)->(r,s+1) or (r+1,s).

    With ``maximal_only`` only paths from alpha_{1,d} to alpha_{d,n-1}; the
    others are subpaths of these and give redundant inequalities.
    """
    out = []
    starts = [(1, d)] if maximal_only else [(k, d) for k in range(1, d + 1)]

    def rec(path):
        r, s = path[-1]
        if r == d and (not maximal_only or s == n - 1):
            out.append(DyckPath(tuple(path)))
        if s + 1 <= n - 1:
            rec(path + [(r, s + 1)])
        if r + 1 <= d:
            rec(path + [(r + 1, s)])

    if n > d:
        for st in starts:
            rec([st])
    return out


def is_antichain_shape(roots) -> bool:
    roots = sorted(roots)
    return all(a[0] < b[0] and a[1] > b[1] for a, b in zip(roots, roots[1:]))


@lru_cache(maxsize=None)
def fflv_polytope(d: int, n: int, maximal_only: bool = False) -> RationalPolytope:
    """{x >= 0, sum over each Dyck path <= 1}; vertices are antichain indicators."""
    R = root_poset(d, n)
    M = len(R)
    hrep = []
    for i in range(M):
        v = [0] * M
        v[i] = -1
        hrep.append((tuple(v), 0))
    for p in dyck_paths(d, n, maximal_only):
        v = [0] * M
        for r in p.roots:
            v[R.index(r)] = 1
        hrep.append((tuple(v), 1))
    verts = []
    for k in range(M + 1):
        for S in itertools.combinations(range(M), k):
            if R.is_antichain(S):
                verts.append(tuple(Fraction(int(i in S)) for i in range(M)))
    return RationalPolytope(M, hrep, sorted(verts), tuple(R.labels))


# -- pairing map and beta -------------------------------------------------------

@dataclass(frozen=True)
class AntiChainPoint:
    roots: tuple[tuple[int, int], ...]
    chi: tuple[int, ...]


def pairing_map(I: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """p([1..s, i_{s+1}..i_d]) = [1..s, s+1, i_{s+1}..i_{d-1}], s maximal."""
    I = tuple(I)
    d = len(I)
    s = 0
    while s < d and I[s] == s + 1:
        s += 1
    if s == d:
        raise ValueError("the pairing map is not defined at the bottom element")
    return I[:s] + (s + 1,) + I[s:-1]


def _root_of(coords) -> tuple[int, int]:
    support = [k + 1 for k, c in enumerate(coords) if c]
    if not support or any(coords[k - 1] != 1 for k in support) or support != list(range(support[0], support[-1] + 1)):
        raise ArithmeticError(f"{coords} is not a positive root")
    return (support[0], support[-1])


def beta(I: Sequence[int], n: int) -> AntiChainPoint:
    """Roots omega(Spec(I_{s-1}) \\ Spec(I_s)) along the pairing-map orbit of I."""
    I = tuple(I)
    d = len(I)
    R = root_poset(d, n)
    bottom = tuple(range(1, d + 1))
    roots = []
    cur = I
    while cur != bottom:
        nxt = pairing_map(cur)
        a, b = omega_spec(d, n, cur), omega_spec(d, n, nxt)
        roots.append(_root_of(root_coords([x - y for x, y in zip(a, b)])))
        cur = nxt
    roots = tuple(sorted(roots))
    chi = tuple(int(r in roots) for r in R.labels)
    return AntiChainPoint(roots, chi)


def ideal_point(d: int, n: int, I: Sequence[int]) -> tuple[int, ...]:
    """Indicator of Spec(I) as a down-set of R_{d,n}."""
    L = build_idn(d, n)
    R = root_poset(d, n)
    cells = {irreducible_to_root(L.labels[m], n) for m in L.spec(L.index(tuple(I)))}
    return tuple(int(r in cells) for r in R.labels)


# -- triangulation -----------------------------------------------------------

@dataclass(frozen=True)
class Simplex:
    vertices: tuple[tuple[int, ...], ...]
    chain: tuple[int, ...]

    def edge_matrix(self):
        v0 = self.vertices[0]
        return [[a - b for a, b in zip(v, v0)] for v in self.vertices[1:]]

    def normalized_volume(self) -> int:
        return abs(_exact.det(self.edge_matrix()))

    def barycentric(self, x) -> list[Fraction]:
        E = self.edge_matrix()
        # x - v0 = sum_k lam_k (v_k - v0)
        At = [[Fraction(E[k][i]) for k in range(len(E))] for i in range(len(E))]
        rhs = [Fraction(x[i]) - self.vertices[0][i] for i in range(len(E))]
        lam = _exact.solve(At, rhs)
        return [1 - sum(lam)] + list(lam)

    def contains(self, x) -> bool:
        return all(l >= 0 for l in self.barycentric(x))

    def facets(self) -> list[tuple[tuple, Fraction]]:
        """``(a, b)`` with ``a . x <= b`` on the simplex, one per vertex (opposite facet)."""
        E = self.edge_matrix()
        Et_inv = _exact.inverse([[Fraction(E[k][i]) for k in range(len(E))] for i in range(len(E))])
        v0 = self.vertices[0]
        out = []
        # lam_k = row_k(Et_inv) . (x - v0) >= 0 ; lam_0 = 1 - sum lam_k >= 0
        for row in Et_inv:
            a = tuple(-c for c in row)
            out.append((a, sum(x * y for x, y in zip(a, v0))))
        s = [sum(col) for col in zip(*Et_inv)]
        out.append((tuple(s), 1 + sum(x * y for x, y in zip(s, v0))))
        return out


def triangulate(d: int, n: int) -> list[Simplex]:
    """One unimodular simplex per maximal chain: the hull of the points of its elements."""
    L = build_idn(d, n)
    out = []
    for c in maximal_chains(L):
        out.append(Simplex(tuple(ideal_point(d, n, L.labels[x]) for x in c), c))
    return out


def interiors_disjoint(s1: Simplex, s2: Simplex) -> bool:
    """True if some facet hyperplane of one simplex weakly separates the other."""
    for S, T in ((s1, s2), (s2, s1)):
        for a, b in S.facets():
            if all(sum(x * y for x, y in zip(a, v)) >= b for v in T.vertices):
                return True
    return False


# -- transfer map -----------------------------------------------------------

def transfer(d: int, n: int, x: Sequence) -> tuple[Fraction, ...]:
    """phi(x)_t = x_t - max of x over the upper covers of t (0 if there are none)."""
    R = root_poset(d, n)
    x = tuple(Fraction(v) for v in x)
    if not order_polytope(d, n).contains(x):
        raise ValueError("point is not in the order polytope")
    return tuple(x[t] - max((x[u] for u in R.upper_covers(t)), default=Fraction(0)) for t in range(len(R)))


def transfer_inverse(d: int, n: int, y: Sequence) -> tuple[Fraction, ...]:
    R = root_poset(d, n)
    y = tuple(Fraction(v) for v in y)
    if not fflv_polytope(d, n).contains(y):
        raise ValueError("point is not in the FFLV polytope")
    x = [None] * len(R)
    for t in reversed(R.topological_order):
        x[t] = y[t] + max((x[u] for u in R.upper_covers(t)), default=Fraction(0))
    return tuple(x)


def random_convex_point(vertices, rng: random.Random, denom: int = 97):
    w = [rng.randint(1, denom) for _ in vertices]
    tot = sum(w)
    lam = [Fraction(c, tot) for c in w]
    M = len(vertices[0])
    return lam, tuple(sum(l * v[i] for l, v in zip(lam, vertices)) for i in range(M))


def transfer_affine_on(d: int, n: int, simplex: Simplex, samples: int = 20, seed: int = 0) -> bool:
    """phi(sum lam_i v_i) == sum lam_i phi(v_i) at random interior rational points."""
    rng = random.Random(seed)
    images = [transfer(d, n, v) for v in simplex.vertices]
    M = len(simplex.vertices[0])
    for _ in range(samples):
        lam, p = random_convex_point(simplex.vertices, rng)
        expect = tuple(sum(l * im[i] for l, im in zip(lam, images)) for i in range(M))
        if transfer(d, n, p) != expect:
            return False
    return True
