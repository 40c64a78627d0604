"""Laplacian eigenvalue bounds, spread bounds, and extremal-graph certification."""

from .graphs import (Graph, from_edge_list, from_graph6, to_graph6, graph6_str,
                     complement, is_connected, common_neighbors,
                     common_neighbor_matrix, vertex_connectivity,
                     read_edge_list, write_edge_list)
from .spectral import (Spectrum, laplacian, eigensolve, jacobi_eigh,
                       laplacian_spectrum, laplacian_index,
                       algebraic_connectivity, laplacian_spread,
                       quadratic_form, JacobiConvergenceError)
from .params import (StructuralParams, structural_params, SrgParameters,
                     SrgVerdict, srg_verdict, detect_srg, srg_eigenvalues)
from .bounds import (BoundSet, ClassicalBounds, compute_bounds, classical_bounds,
                     master_inequality, master_tolerance, vertex_quadratic,
                     alpha1_beta1, alpha2, beta2, spread_bound_vertex,
                     spread_bound_degree, spread_bound_regular, resolve_lam_mu)
from .certify import (EqualityEvidence, equality_conditions,
                      ExtremalityCertificate, certify_graph,
                      certificate_records, extremal_table, TableRow)
from .families import (named_graph, NAMED_GRAPHS, complete, cycle, path,
                       complete_bipartite, fan, petersen, CyclePartition,
                       disjoint_cycles, kn_minus_cycles, cycle_partitions,
                       cycle_spectrum, cycle_connectivity_published,
                       FamilyPrediction, predict_family)
from .sweep import (Xorshift64Star, random_graph, random_connected,
                    SweepConfig, SweepResult, validity_sweep,
                    sweep_graph6_stream, partition_sweep)

__version__ = "0.1.0"
