"""Straighten every incomparable pair of I(2,5) and run the governed check."""
from semitoric import grassmann as gr

tab = gr.straightening_table(2, 5)
L = tab.lattice
for (a, b), terms in tab.entries.items():
    rhs = " + ".join(f"({t.coeff}) p{L.labels[t.k1]} p{L.labels[t.k2]}" for t in terms)
    print(f"p{L.labels[a]} p{L.labels[b]} = {rhs}")
rep = gr.governed_check(tab)
print("governed:", rep.passed)
