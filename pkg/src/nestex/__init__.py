"""nestex: nested set complexes of built lattices."""

from .errors import *  # noqa: F401,F403
from .poset import (Lattice, build_lattice, chain, boolean_lattice, partition_lattice,
                    product, poset_isomorphic)
from .matroid import (Matroid, uniform, graphic, complete_graph_edges, dual, truncation,
                      direct_sum, free_coextension, lattice_of_flats, nbc_bases, is_geometric)
from .building import (BuiltLattice, validate_building_set, is_building_set,
                       minimal_building_set, maximal_building_set, restrict, contract,
                       building_ideal, delete_ideal, augmented_built_lattice, all_building_sets)
from .complexes import (SimplicialComplex, simplex, join_complex, h_from_f, f_from_h,
                        is_m_vector, is_flawless, is_strongly_flawless)
from .nested import (is_nested, nested_complex, cone_nested_complex, maximal_nested_sets,
                     purity_check, local_intervals, quotient, compose, decompose,
                     link_decomposition)
from .labeling import (edge_label, is_admissible, default_admissible_map, atom_order_map,
                       stirling_atom_order, descent_number, descent_h_polynomial)
from .decomp import vertex_decomposition, verify_vd, brute_force_vd, VDCertificate
from .ears import (convex_ear_decomposition, verify_ced, shelling_check, nested_word,
                   EarDecomposition)
from .stirling import (stirling_permutations, is_stirling, descents, second_eulerian,
                       count_by_descents, check_top_heavy, psi, phi, is_real_rooted)
from .corpus import corpus

__version__ = "0.1.0"
