"""Exact spanning-tree counts, resistance distances and Kirchhoff indices
of generalized blow-up graphs, with an electrical rewrite toolkit."""

from .blowup import (
    BlowupSpec,
    BlowupVertex,
    CoreSatelliteSpec,
    HostGraph,
    UnbalancedSpec,
    build_blowup,
    build_core_satellite,
    build_h_nabla,
    build_host_star_weighted,
    build_unbalanced,
)
from .netcore import (
    LaplacianMatrix,
    WeightedNetwork,
    kf_pair_sum,
    kf_spectral_check,
    laplacian,
    rational,
    resistance,
    resistance_matrix,
    tau_matrix_tree,
)

__version__ = "0.1.0"
