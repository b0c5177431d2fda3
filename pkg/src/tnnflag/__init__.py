"""
Exact arithmetic for the totally nonnegative complete flag variety and its
tropicalization: cell parameterizations, Pluecker coordinates, extremal
indices, inverse maps, and certificate-producing membership tests.
"""

__version__ = "0.1.0"

from .perms import (
    Perm, Word, Subexpression,
    identity, inverse, compose, length, left_mult_s, right_mult_s,
    perm_from_word, longest_element, perm_from_str, perm_to_str, all_perms,
    gale_leq, bruhat_leq, bruhat_interval,
    canonical_w0_word, positive_distinguished_subexpression,
)
from .algebra import (
    Rational, Trop, TROP_INF, LaurentMonomial,
    rat_from_str, rat_to_str, trop_from_str, trop_to_str, determinant,
)
from .wiring import (
    WiringDiagram, VerticalEdge, NegativeSegment, Path, PathCollection,
    build_diagram, enumerate_path_collections, collection_weight,
    left_greedy_collection, graph_extremal_collections, path_sum_matrix,
)
from .plucker import (
    Index, PlueckerVector, TropPlueckerVector, IncidenceRelation,
    index_to_str, index_from_str, all_proper_indices,
    mr_matrix, phi, trop_phi,
    generate_relations, check_relation, trop_check_relation,
    trop_terms_verdict, trop_eval_poly_terms,
)
from .extremal import (
    SupportVector, ExtremalChain, is_supported, xi, xi_star,
    cell_support, extremal_indices, extremal_index_set, e, s_vw,
)
from .membership import (
    CellCertificate, identify_cell, psi_monomials, psi, trop_psi,
    decide_tnn, decide_trop,
    propagate_three_term, trop_propagate_three_term,
)
