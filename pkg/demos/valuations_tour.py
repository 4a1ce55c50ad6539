"""Chain valuations and the quasi-valuation on a few monomials of I(2,5)."""
from semitoric import grassmann as gr
from semitoric.hibi import is_standard, monomial_exponents
from semitoric.valuations import Family, chain_valuations, quasi_valuation

L = gr.build_idn(2, 5)
ring = gr.grassmann_ring(2, 5)
for f in [((1, 2), (3, 4)), ((1, 4), (2, 3)), ((1, 3), (2, 4)), ((1, 4), (2, 5), (2, 5))]:
    idx = tuple(L.index(x) for x in f)
    y = monomial_exponents(L, idx)
    print(f, "standard" if is_standard(L, idx) else "nonstandard")
    for fam in (Family.SPEC, Family.HT):
        print(f"  {fam.value:8s}", quasi_valuation(L, fam, y)[0].coords)
    print("  mu      ", ring.mu_quasi(idx)[0].coords)

# one element, two chains through it, two different maxSpec values
x = L.index((2, 5))
from semitoric.valuations import chain_valuations
for V in chain_valuations(L, Family.MAXSPEC):
    if x in V.chain:
        print("maxSpec of [2,5] along", [L.labels[c] for c in V.chain], "=",
              V.value(monomial_exponents(L, (x,))).coords)
