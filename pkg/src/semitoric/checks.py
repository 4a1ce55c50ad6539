"""Self-checks run by ``semitoric verify``; each returns ``(name, ok, detail)``."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial

from . import grassmann as gr
from . import polytopes as pt
from .hibi import is_standard, monomial_exponents, rewrite_to_standard, standard_basis
from .poset import DistributiveLattice, maximal_chains
from .valuations import Family, chain_valuations, quasi_valuation


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def hook_length_count(rows: int, cols: int) -> int:
    """Standard Young tableaux of a rows x cols rectangle."""
    hooks = 1
    for i in range(rows):
        for j in range(cols):
            hooks *= (rows - i) + (cols - j) - 1
    return factorial(rows * cols) // hooks


def monomials(L: DistributiveLattice, max_factors: int, max_exp: int):
    """Factor tuples for products of <= max_factors distinct elements, exponents <= max_exp."""
    for k in range(1, max_factors + 1):
        for elems in itertools.combinations(range(len(L)), k):
            for exps in itertools.product(range(1, max_exp + 1), repeat=k):
                yield tuple(e for e, m in zip(elems, exps) for _ in range(m))


def _support_ok(L, factors, argmin) -> bool:
    # a nonstandard product equals its Hibi-rewritten standard form as a function
    support = set(rewrite_to_standard(L, factors))
    return all(support <= set(c) for c in argmin)


def hibi_trichotomy(L: DistributiveLattice, family, max_factors=3, max_exp=2) -> CheckResult:
    family = Family(family)
    vals = chain_valuations(L, family)
    single = {x: quasi_valuation(L, family, monomial_exponents(L, [x]))[0] for x in range(len(L))}
    for f in monomials(L, max_factors, max_exp):
        y = monomial_exponents(L, f)
        q, argmin = quasi_valuation(L, family, y)
        if any(V.value(y) < q for V in vals):
            return CheckResult(f"trichotomy-{family.value}", False, f"bound fails on {f}")
        if not _support_ok(L, f, argmin):
            return CheckResult(f"trichotomy-{family.value}", False, f"equality off support on {f}")
        total = single[f[0]]
        for x in f[1:]:
            total = total + single[x]
        std = is_standard(L, f)
        if (std and q != total) or (not std and not q > total):
            return CheckResult(f"trichotomy-{family.value}", False, f"additivity split fails on {f}")
    return CheckResult(f"trichotomy-{family.value}", True)


def mu_trichotomy(ring: gr.GrassmannRing, max_factors=3, max_exp=2) -> CheckResult:
    L = ring.lattice
    single = {x: ring.mu_quasi((x,))[0] for x in range(len(L))}
    for f in monomials(L, max_factors, max_exp):
        q, argmin = ring.mu_quasi(f)
        if any(ring.mu_chain(c, f) < q for c in ring.chains):
            return CheckResult("trichotomy-mu", False, f"bound fails on {f}")
        if not _support_ok(L, f, argmin):
            return CheckResult("trichotomy-mu", False, f"equality off support on {f}")
        total = single[f[0]]
        for x in f[1:]:
            total = total + single[x]
        std = is_standard(L, f)
        if (std and q != total) or (not std and not q > total):
            return CheckResult("trichotomy-mu", False, f"additivity split fails on {f}")
    return CheckResult("trichotomy-mu", True)


def lattice_checks(L: DistributiveLattice) -> list[CheckResult]:
    out = []
    P = L.irreducible_poset()
    out.append(CheckResult("birkhoff", sum(1 for _ in P.order_ideals()) == len(L),
                           f"{len(L)} elements, {L.rank + 1} join-irreducibles"))
    chains = list(maximal_chains(L))
    ok = True
    for c in chains:
        try:
            L.check_maximal_chain(c)
        except ValueError:
            ok = False
    out.append(CheckResult("chains", ok and len(chains) > 0, f"{len(chains)} maximal chains"))
    return out


def hibi_checks(L: DistributiveLattice, max_factors=2, max_exp=2) -> list[CheckResult]:
    out = []
    for fam in Family:
        out.append(hibi_trichotomy(L, fam, max_factors, max_exp))
    # one-dimensional leaves: distinct standard monomials get distinct values per chain
    ok = True
    for V in chain_valuations(L, Family.SPEC):
        for r in (1, 2):
            vals = [V.value(monomial_exponents(L, s)) for s in standard_basis(L, r)]
            ok &= len(set(vals)) == len(vals)
    out.append(CheckResult("leaves", ok))
    return out


def grassmann_checks(d: int, n: int, jobs: int = 1, samples: int = 5) -> list[CheckResult]:
    out = []
    L = gr.build_idn(d, n)
    out.append(CheckResult("size", len(L) == comb(n, d) and L.rank == d * (n - d),
                           f"{len(L)} elements"))
    irr_ok = all(gr.classify_irreducible(L.labels[m]) is not None for m in L.irreducibles)
    out.append(CheckResult("irreducibles", irr_ok))
    out.extend(lattice_checks(L))
    nchains = sum(1 for _ in maximal_chains(L))
    out.append(CheckResult("hook-length", nchains == hook_length_count(d, n - d),
                           f"{nchains} vs {hook_length_count(d, n - d)}"))
    bottom = L.labels[L.bottom]
    omega_ok = all(gr.root_coords(gr.omega_spec(d, n, I)) ==
                   gr.root_coords([a - b for a, b in zip(gr.wt(I, n), gr.wt(bottom, n))])
                   for I in L.labels)
    out.append(CheckResult("weight-lemma", omega_ok))

    table = gr.straightening_table(d, n, jobs)
    exact = all(gr.evaluate_minors(d, n, gr.relation_polynomial(table, a, b)).is_zero()
                for a, b in table.entries)
    problems = gr.check_table_shape(table)
    out.append(CheckResult("straightening", exact and not problems,
                           f"{len(table.entries)} pairs" + ("; " + problems[0] if problems else "")))
    rep = gr.governed_check(table)
    out.append(CheckResult("governed", rep.passed,
                           f"{sum(p.status == 'pass' for p in rep.pairs)}/{len(rep.pairs)} pairs"))
    for fam in Family:
        out.append(hibi_trichotomy(L, fam, 2, 2))
    out.append(mu_trichotomy(gr.grassmann_ring(d, n), 2, 1))
    out.extend(polytope_checks(d, n, samples))
    return out


def polytope_checks(d: int, n: int, samples: int = 5) -> list[CheckResult]:
    out = []
    L = gr.build_idn(d, n)
    O = pt.order_polytope(d, n)
    F = pt.fflv_polytope(d, n)
    opts, fpts = O.lattice_points(), F.lattice_points()
    out.append(CheckResult("lattice-points", len(opts) == len(fpts) == comb(n, d),
                           f"order {len(opts)}, fflv {len(fpts)}"))

    hulls = {}
    body_ok = True
    for c in maximal_chains(L):
        perm = pt.chain_coordinate_map(d, n, c)
        pts = set()
        for v in pt.body_points(L, c):
            p = [0] * L.rank
            for i, x in enumerate(v):
                p[perm[i]] = x
            pts.add(tuple(p))
        body_ok &= pts == set(opts)
        key = frozenset(pts)
        if key not in hulls:
            hulls[key] = pt.RationalPolytope.from_points(key).facet_set() == O.reduce().facet_set()
    out.append(CheckResult("no-body", body_ok and all(hulls.values())))

    betas = [pt.beta(I, n) for I in L.labels]
    beta_ok = all(pt.is_antichain_shape(b.roots) for b in betas) and \
        sorted(b.chi for b in betas) == sorted(fpts)
    out.append(CheckResult("beta", beta_ok))

    simplices = pt.triangulate(d, n)
    vols = [s.normalized_volume() for s in simplices]
    disjoint = all(pt.interiors_disjoint(a, b) for a, b in itertools.combinations(simplices, 2))
    covered = {v for s in simplices for v in s.vertices} == set(opts)
    out.append(CheckResult("triangulation", all(v == 1 for v in vols) and disjoint and covered
                           and len(simplices) == hook_length_count(d, n - d),
                           f"{len(simplices)} simplices, volume {sum(vols)}"))

    images = [tuple(int(x) for x in pt.transfer(d, n, p)) for p in opts]
    roundtrip = all(tuple(pt.transfer_inverse(d, n, q)) == p for p, q in zip(opts, images))
    affine = all(pt.transfer_affine_on(d, n, s, samples) for s in simplices)
    out.append(CheckResult("transfer", sorted(images) == sorted(fpts) and roundtrip and affine))
    return out
