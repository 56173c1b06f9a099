"""medkit: constructive geometry of finite median graphs.

Halfspace structure, strong separation, rank and irreducible
decomposition, measure barycenters, depth centroids, strongly
separated chains and the median core, each paired with brute-force
oracles (:mod:`medkit.oracles`) and verification sweeps
(:mod:`medkit.sweeps`).
"""

from .barycenter import (
    BarycenterResult,
    ProbMeasure,
    balanced_transversality_check,
    center_of_mass,
    ev,
    psi,
    pushforward,
    singleton_criterion,
)
from .centroid import centroid, depth, depth_table, majority_depth_halfspaces
from .chains import (
    Chain,
    CoreResult,
    SeparatedTriple,
    deep_triple_median,
    extend_chain,
    find_chains,
    median_core,
    regular_direction_report,
    separated_triples,
    validate_chain,
)
from .errors import (
    DisconnectedGraph,
    EmptyFamily,
    EmptySet,
    InconsistentPocset,
    InvalidChain,
    InvalidSpec,
    InvalidTriple,
    MedkitError,
    NotAutomorphism,
    NotConstant,
    NotConvex,
    NotDisjoint,
    NotMedian,
    ParseError,
    ThetaNotTransitive,
)
from .graph import (
    MedianGraph,
    MedianVerdict,
    all_pairs_distances,
    apply_automorphism,
    as_mask,
    automorphism_group,
    convex_hull,
    gate,
    gate_image,
    gate_vector,
    helly_witness,
    interval,
    is_convex,
    is_median_graph,
    mask_ids,
    median,
    median_hull,
    verify_automorphism,
)
from .pocset import DualGraph, Pocset, dual_median_graph, pocset_from_relations
from .walls import (
    Halfspace,
    Wall,
    decompose,
    dual_round_trip_isomorphic,
    flips,
    fundamental_family,
    halfspaces,
    halfspaces_between,
    irreducible_factors,
    pocset_of,
    rank,
    separate,
    strongly_separated,
    transverse,
    verify_factorization,
    wallspace,
)

__version__ = "0.1.0"
