import itertools
import random
from fractions import Fraction

import pytest
import sympy

from semitoric import grassmann as gr
from semitoric.hibi import rewrite_to_standard
from semitoric.poset import maximal_chains
from semitoric.valuations import Order, Value


def ids(L, *xs):
    return tuple(L.index(x) for x in xs)


@pytest.mark.parametrize("d,n", [(2, 4), (2, 5), (3, 6), (4, 7)])
def test_irreducible_families(d, n):
    L = gr.build_idn(d, n)
    assert len(L.join_irreducibles()) == d * (n - d) + 1
    found = {L.labels[m] for m in L.join_irreducibles()}
    expect = {gr.irreducible_index(d, 0, k) for k in range(n - d + 1)}
    expect |= {gr.irreducible_index(d, s, t) for s in range(1, d) for t in range(s + 1, n - d + s + 1)}
    assert found == expect
    for I in L.labels:
        assert (gr.classify_irreducible(I) is not None) == (I in found)


def test_spec_example_i47():
    L = gr.build_idn(4, 7)
    spec = {L.labels[m] for m in L.spec(L.index((2, 4, 5, 7)))}
    assert spec == {(1, 3, 4, 5), (2, 3, 4, 5), (1, 2, 4, 5), (1, 2, 3, 5),
                    (1, 4, 5, 6), (1, 2, 5, 6), (1, 2, 3, 6), (1, 2, 3, 7)}
    assert gr.root_coords(gr.omega_spec(4, 7, (2, 4, 5, 7))) == (1, 1, 2, 2, 1, 1)


@pytest.mark.parametrize("d,n", [(3, 6), (4, 7)])
def test_weight_lemma(d, n):
    L = gr.build_idn(d, n)
    bottom = gr.wt(L.labels[L.bottom], n)
    for I in L.labels:
        assert gr.omega_spec(d, n, I) == tuple(a - b for a, b in zip(gr.wt(I, n), bottom))


@pytest.mark.parametrize("d,n", [(2, 4), (2, 5), (3, 6), (3, 7)])
def test_grid_isomorphism(d, n):
    L = gr.build_idn(d, n)
    R = gr.root_poset(d, n)
    cells = {m: gr.irreducible_to_root(L.labels[m], n) for m in L.irreducibles}
    assert sorted(cells.values()) == sorted(R.labels)
    for a, b in itertools.product(L.irreducibles, repeat=2):
        assert L.leq(a, b) == R.leq(R.index(cells[a]), R.index(cells[b]))


def test_root_poset_shape():
    R = gr.root_poset(2, 4)
    assert R.labels == ((1, 2), (1, 3), (2, 2), (2, 3))
    assert [R.labels[t] for t in R.maximal()] == [(1, 2)]
    assert [R.labels[t] for t in R.minimal()] == [(2, 3)]


def sympy_minor(d, n, I):
    Z = sympy.Matrix(d, n, lambda r, c: sympy.Symbol(f"z{r}_{c}"))
    return Z[:, [i - 1 for i in I]].det()


def qpoly_to_sympy(p, d, n):
    zs = [sympy.Symbol(f"z{r}_{c}") for r in range(d) for c in range(n)]
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) *
                            sympy.Mul(*[z ** k for z, k in zip(zs, e)]) for e, c in p.terms.items()))


@pytest.mark.parametrize("d,n", [(2, 4), (3, 5)])
def test_minors_match_sympy(d, n):
    L = gr.build_idn(d, n)
    for I in L.labels:
        assert qpoly_to_sympy(gr.minor(d, n, I), d, n) == sympy.expand(sympy_minor(d, n, I))


def test_gr24_relation():
    terms = gr.straighten(2, 4, (1, 4), (2, 3))
    L = gr.build_idn(2, 4)
    assert [(L.labels[t.k1], L.labels[t.k2], t.coeff) for t in terms] == \
        [((2, 4), (1, 3), 1), ((3, 4), (1, 2), -1)]
    lhs = sympy_minor(2, 4, (1, 4)) * sympy_minor(2, 4, (2, 3))
    rhs = sympy_minor(2, 4, (2, 4)) * sympy_minor(2, 4, (1, 3)) - sympy_minor(2, 4, (3, 4)) * sympy_minor(2, 4, (1, 2))
    assert sympy.expand(lhs - rhs) == 0


def test_straighten_comparable_rejected():
    with pytest.raises(ValueError):
        gr.straighten(2, 4, (1, 2), (3, 4))


@pytest.mark.parametrize("d,n,dim", [(2, 4, 1), (2, 5, 5), (3, 6, None)])
def test_plucker_relations_span_kernel(d, n, dim):
    rels = gr.plucker_relations(d, n)
    kernel = gr.degree2_relation_space(d, n)
    if dim is not None:
        assert len(kernel) == dim
    from semitoric._exact import rank
    vecs = [gr.relation_vector(d, n, r) for r in rels]
    assert rank(vecs) == len(kernel)
    assert rank(vecs + kernel) == len(kernel)
    assert all(gr.evaluate_minors(d, n, r).is_zero() for r in rels)


@pytest.mark.parametrize("d,n", [(2, 5), (2, 6)])
def test_table_shape(d, n):
    tab = gr.straightening_table(d, n)
    assert gr.check_table_shape(tab) == []
    for a, b in tab.entries:
        assert gr.evaluate_minors(d, n, gr.relation_polynomial(tab, a, b)).is_zero()


def test_parallel_table_matches_serial():
    serial = gr.straightening_table(2, 6)
    par = gr.straightening_table(2, 6, 2)
    assert par.entries == serial.entries


def test_table_json():
    js = gr.straightening_table(2, 4).to_json()
    assert js == [{"pair": [[1, 4], [2, 3]],
                   "terms": [{"k1": [2, 4], "k2": [1, 3], "coeff": "1"},
                             {"k1": [3, 4], "k2": [1, 2], "coeff": "-1"}]}]


def test_governed_gr24_witness():
    rep = gr.governed_check(gr.straightening_table(2, 4))
    assert rep.passed
    (pair,) = rep.pairs
    L = gr.build_idn(2, 4)
    assert {L.labels[w[2]] for w in pair.witnesses} == {(1, 4), (2, 3)}
    assert all(w[4] == 1 and L.labels[w[5]] == (3, 4) for w in pair.witnesses)


def test_governed_negative_control():
    tab = gr.straightening_table(2, 5)
    pair = next(iter(tab.entries))
    terms = tab.entries[pair]
    swapped = [(t.k1, t.k2, c) for t, c in zip(terms, [t.coeff for t in terms][::-1])]
    rep = gr.governed_check(tab.mutated(pair, swapped))
    assert not rep.passed
    assert any(p.status == "fail" and p.leading_coefficient != 1 for p in rep.pairs)


def test_domination_failure_reported():
    # a nonleading term with K1 below the join's maxSpec fails clause (b)
    L = gr.build_idn(2, 4)
    tab = gr.straightening_table(2, 4)
    pair = next(iter(tab.entries))
    j, m = L.join(*pair), L.meet(*pair)
    bad = [(j, m, 1), (L.index((1, 4)), L.index((2, 3)), 1)]
    rep = gr.governed_check(tab.mutated(pair, bad))
    assert not rep.passed and rep.pairs[0].failures


def test_standard_form_against_minors():
    d, n = 2, 5
    ring = gr.grassmann_ring(d, n)
    L = ring.lattice
    rng = random.Random(5)
    mins = [gr.minor(d, n, I) for I in L.labels]
    for _ in range(25):
        mon = tuple(rng.randrange(len(L)) for _ in range(3))
        lhs = mins[mon[0]] * mins[mon[1]] * mins[mon[2]]
        rhs = None
        for s, c in ring.standard_form(mon).items():
            term = mins[s[0]] * mins[s[1]] * mins[s[2]] * c
            rhs = term if rhs is None else rhs + term
        assert (lhs - rhs).is_zero()
        assert all(ring.is_standard(s) for s in ring.standard_form(mon))


def test_standard_form_leading_term_is_hibi_rewrite():
    ring = gr.grassmann_ring(2, 5)
    L = ring.lattice
    for mon in itertools.combinations_with_replacement(range(len(L)), 3):
        std = ring.standard_form(mon)
        assert std[rewrite_to_standard(L, mon)] == 1


def test_mu_examples():
    ring = gr.grassmann_ring(2, 4)
    L = ring.lattice
    c = ids(L, (1, 2), (1, 3), (2, 3), (2, 4), (3, 4))
    assert ring.mu_chain(c, (L.bottom,)) == Value((1, 0, 0, 0, 0), Order.GRADED_REVLEX)
    lhs = ring.mu_chain(c, ids(L, (1, 4), (2, 3)))
    assert lhs == ring.mu_chain(c, ids(L, (2, 4), (1, 3)))
    assert lhs == ring.mu_standard(c, ids(L, (1, 4), (2, 3)))
    q = ring.mu_quasi(ids(L, (1, 4), (2, 3)))[0]
    assert q > ring.mu_quasi(ids(L, (1, 4)))[0] + ring.mu_quasi(ids(L, (2, 3)))[0]


@pytest.mark.parametrize("d,n", [(2, 4), (2, 5)])
def test_mu_direct_formula_agrees(d, n):
    ring = gr.grassmann_ring(d, n)
    L = ring.lattice
    for c in ring.chains:
        for mon in itertools.combinations_with_replacement(range(len(L)), 2):
            assert ring.mu_chain(c, mon) == ring.mu_standard(c, mon)


def test_mu_of_zero_rejected():
    ring = gr.grassmann_ring(2, 4)
    L = ring.lattice
    p = {ids(L, (1, 4), (2, 3)): 1, ids(L, (2, 4), (1, 3)): -1, ids(L, (3, 4), (1, 2)): 1}
    with pytest.raises(ValueError):
        ring.mu_quasi(p)


def test_bad_dimensions():
    with pytest.raises(ValueError):
        gr.build_idn(3, 2)
    with pytest.raises(ValueError):
        gr.root_coords((1, 0, 0))
