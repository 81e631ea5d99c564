"""Spanning-tree packing numbers with certificates, exact spectra, and
edge connectivity, plus the tight d-regular families relating them."""

from .connectivity import CutResult, edge_connectivity, edge_connectivity_bruteforce
from .exact import (
    IntPoly,
    RootInterval,
    cauchy_bound,
    char_poly_exact,
    char_poly_rational,
    count_real_roots,
    descartes_positivity_check,
    det_exact,
    isolate_real_roots,
    squarefree_decomposition,
    sturm_isolate_largest_root,
)
from .families import (
    FamilyReport,
    build_A9,
    build_A25,
    build_Gd,
    build_Hd,
    gd_interval,
    hd_interval,
    p3_poly,
    p10_poly,
    proposition_search,
    verify_Gd,
    verify_Hd,
)
from .graphs import (
    Graph,
    VertexPartition,
    add_edges,
    complete_graph,
    complete_minus_matching,
    crossing_edges,
    cycle_graph,
    disjoint_union,
    make_graph,
    parse_edge_list,
    partition,
    path_graph,
    petersen_graph,
    to_edge_list,
)
from .packing import (
    PackResult,
    TreeCount,
    TreePackingResult,
    count_spanning_trees,
    count_spanning_trees_exhaustive,
    pack_trees,
    sigma,
    sigma_bruteforce,
    verify_certificate,
    verify_pack_result,
)
from .randgen import GenConfig, TheoremReport, random_regular, splitmix64, theorem_check
from .spectra import (
    QuotientMatrix,
    Spectrum,
    adjacency_spectrum,
    check_interlacing,
    eig_symmetric,
    exact_adjacency_roots,
    is_equitable,
    lambda2,
    laplacian_spectrum,
    quotient_matrix,
)

__version__ = "0.1.0"
