"""Exact chromatic polynomials and chromatic symmetric functions.

Expansions over all spanning subgraphs and over NBC subgraphs, brute-force
oracles for both, a sign-reversing involution on colored subgraphs, and
explicit bijections between acyclic orientations and NBC sets.
"""

from .bijections import Phi, Psi, StagedMixed, phi, phi_step, phi_trace, psi, psi_step, psi_trace
from .coloring import (
    enumerate_colorings,
    is_compatible,
    is_monochromatic_on,
    is_proper,
    monochromatic_edges,
)
from .errors import (
    BudgetExceededError,
    ChromabijError,
    InvalidInputError,
    ParseError,
    PreconditionError,
)
from .graph import (
    Graph,
    MixedGraph,
    Orientation,
    Walk,
    broken_circuits,
    component_count,
    components,
    cycles,
    extract_cycle,
    is_forest,
    is_nbc,
    lambda_of,
    mixed_is_acyclic,
)
from .graphio import GraphDocument, parse_document, parse_edgelist, parse_graph6, to_edgelist, to_graph6
from .involution import ColoredSubgraph, iota, verify_involution
from .poly import (
    IntPolynomial,
    acyclic_orientation_count,
    acyclic_orientations,
    chi_count,
    chi_poly_all_subgraphs,
    chi_poly_count,
    chi_poly_delcon,
    chi_poly_nbc,
    compatible_pair_count,
    nbc_coefficients,
)
from .symfunc import (
    MonomialMap,
    PSymFunc,
    X_all_subgraphs,
    X_bruteforce,
    X_nbc,
    compat_generating,
    expand_monomials,
    omega,
    specialize,
)
from .verify import check_theorems, enumerate_graphs, enumerate_trees, named_graph, tree_conjecture_sweep

__version__ = "0.1.0"
