"""Order polytope, FFLV polytope, the triangulation by chains and the transfer map for I(2,5)."""
from semitoric import polytopes as pt

d, n = 2, 5
O, F = pt.order_polytope(d, n), pt.fflv_polytope(d, n)
print("order polytope lattice points:", len(O.lattice_points()))
print("FFLV lattice points:", len(F.lattice_points()))
print("Ehrhart polynomial of the order polytope:", [str(c) for c in pt.ehrhart_polynomial(O)])
S = pt.triangulate(d, n)
print("simplices:", len(S), "total normalized volume:", sum(s.normalized_volume() for s in S))
for p in O.lattice_points():
    print(" ", p, "->", tuple(int(x) for x in pt.transfer(d, n, p)))
