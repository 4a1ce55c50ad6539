"""Walk through I(2,4): elements, join-irreducibles, the root poset and maximal chains."""
from semitoric import grassmann as gr
from semitoric.poset import maximal_chains

L = gr.build_idn(2, 4)
print("elements:", L.labels)
for m in L.irreducibles:
    I = L.labels[m]
    print(f"  irreducible {I}: {gr.classify_irreducible(I)} -> root {gr.irreducible_to_root(I, 4)}")
print("root poset:", gr.root_poset(2, 4).labels)
for k, c in enumerate(maximal_chains(L)):
    print(f"chain {k}:", [L.labels[x] for x in c])
