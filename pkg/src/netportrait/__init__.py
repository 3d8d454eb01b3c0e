"""Network portraits and portrait divergence.

A portrait condenses a graph into the matrix counts[shell][k] = number of
nodes with exactly k nodes at shortest-path distance ``shell``; it is
invariant under node relabeling. The portrait divergence compares two graphs
by the base-2 Jensen-Shannon divergence between the joint (shell, k)
distributions their portraits induce: 0 for portrait-identical graphs, at
most 1, symmetric, and defined for directed, disconnected and weighted
networks of unequal size.
"""

from .divergence import (
    DivergenceReport,
    JointDistribution,
    joint_distribution,
    jsd_bits,
    kl_divergence_bits,
    legacy_delta,
    portrait_divergence,
    weighted_portrait_divergence,
)
from .ensembles import barabasi_albert, erdos_renyi, rewire_degree_preserving, rewire_random
from .experiments import ensemble_distributions, rewiring_curve
from .graph import (
    ColumnCountError,
    EdgeListWarning,
    Graph,
    GraphParseError,
    connected_components,
    parse_edge_list,
    sssp_unweighted,
    sssp_weighted,
)
from .portrait import (
    BinSpec,
    Portrait,
    make_shared_bins,
    pad_portrait,
    portrait,
    portrait_identities,
    unique_path_lengths,
    weighted_portrait,
)

__version__ = "0.1.0"

__all__ = [
    "BinSpec",
    "ColumnCountError",
    "DivergenceReport",
    "EdgeListWarning",
    "Graph",
    "GraphParseError",
    "JointDistribution",
    "Portrait",
    "barabasi_albert",
    "connected_components",
    "ensemble_distributions",
    "erdos_renyi",
    "joint_distribution",
    "jsd_bits",
    "kl_divergence_bits",
    "legacy_delta",
    "make_shared_bins",
    "pad_portrait",
    "parse_edge_list",
    "portrait",
    "portrait_divergence",
    "portrait_identities",
    "rewire_degree_preserving",
    "rewire_random",
    "rewiring_curve",
    "sssp_unweighted",
    "sssp_weighted",
    "unique_path_lengths",
    "weighted_portrait",
    "weighted_portrait_divergence",
]
