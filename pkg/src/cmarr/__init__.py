"""Exact-arithmetic toolkit for Calogero-Moser / Namikawa hyperplane
arrangements: generators, intersection-lattice combinatorics, Orlik-Solomon
bases, freeness diagnostics, Weyl-symmetry checks and terminalization counts.
"""

from .exactlin import (Subspace, common_kernel, normalize_covector, rank_of,
                       restrict_covectors_to)
from .intpoly import IntPolynomial
from .lattice import (Arrangement, Flat, IntersectionLattice, build_lattice,
                      char_poly_finite_field, characteristic_polynomial,
                      essentialize, poincare_polynomial, whitney_numbers)
from .osalg import CircuitSet, NbcBasis, circuits, nbc_basis, os_dimension
from .freeness import (ExponentReport, FreenessVerdict, deletion,
                       exponents_from_poincare, inductive_freeness,
                       localization, nonfree_by_localization, restriction)
from .generators import (RootSystem, TableRow, gen_G4, gen_G8, gen_coxeter_namikawa,
                         gen_cyclic, gen_dihedral_even, gen_wreath,
                         root_system, table1_rows)
from .symmetry import (BlockPermutation, act, audit_table1,
                       contains_subarrangement, hyperplane_orbits, is_stable,
                       terminalization_count)
from .arrfile import emit_arrangement, parse_arrangement

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
