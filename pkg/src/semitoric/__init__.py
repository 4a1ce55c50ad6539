"""Hibi varieties, Grassmannians and their semi-toric degenerations.

Distributive lattices and Hibi rings, chain valuations and their
min-quasi-valuations, exact Plücker straightening, and the polytopes
(order, FFLV, Newton-Okounkov) attached to Gr(d, n).
"""
from .poset import (DistributiveLattice, Poset, chain_lattice, chain_to_enumeration,
                    enumeration_to_chain, ideals_to_lattice, maximal_chains)
from .hibi import (hibi_ideal_generators, is_standard, rewrite_to_standard, standard_basis,
                   xhat, y_exponents, monomial_exponents)
from .valuations import (ChainValuation, Family, Order, Value, chain_valuation, compare,
                         graded_product, quasi_valuation, valuate_laurent, valuate_poly)
from .qpoly import QPolynomial
from .grassmann import (GrassmannRing, StraighteningTable, build_idn, classify_irreducible,
                        governed_check, grassmann_ring, mu_chain, mu_quasi, omega, omega_spec,
                        plucker_relations, root_coords, root_poset, straighten, straightening_table)
from .polytopes import (AntiChainPoint, DyckPath, RationalPolytope, Simplex, beta, dyck_paths,
                        ehrhart_polynomial, fflv_polytope, no_body, order_polytope, pairing_map,
                        transfer, transfer_inverse, triangulate)

__version__ = "0.1.0"
