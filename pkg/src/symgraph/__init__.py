"""Symmetric tensor powers of weighted graphs, with built-in verification.

The package builds the k-th symmetric tensor power of a weighted graph --
exactly, when the input weights are rational -- and checks the structural
facts that hold for such powers (spectra, embedded subgraphs, component
counts, degrees, loop counts, Wiener indices, permutation equivariance)
against independent oracles.  See the ``symgraph`` CLI for the command
surface and ``symgraph.verify`` for the theorem suites.
"""

from .combinatorics import (
    CountLimitError,
    MultiplicityVector,
    VertexMultiset,
    enumerate_multisets,
    enumerate_orbit,
    multiplicity_vector,
    multiset_count,
    orbit_size,
    rank,
    unrank,
)
from .exact import ExactWeight
from .graphs import (
    WeightedGraph,
    adjacency_matrix,
    complete,
    complete_bipartite,
    complete_loops,
    cycle,
    family,
    path,
    scepter,
    star,
)
from .power import (
    PermanentCapError,
    SizeBudgetError,
    SymPermutation,
    SymPowerMatrix,
    entry_orbit_sum,
    entry_permanent,
    relabel,
    ryser_permanent,
    sym_power,
    sym_power_graph,
    sym_power_permutation,
)
from .spectra import (
    JacobiConvergenceError,
    SignLogDet,
    Spectrum,
    det_formula,
    eigenvalues_symmetric,
    exact_determinant,
    predicted_power_spectrum,
    spectra_match,
    trace_formula,
)
from .analysis import (
    ComponentStructure,
    DisconnectedGraphError,
    components,
    count_loops,
    degree,
    edge_count,
    neighbor_set,
    predict,
    wiener_index,
    wiener_within_components,
)
from .fileio import GraphFormatError, parse_graph, write_dot, write_graph, write_stats_json

__all__ = [
    "ComponentStructure",
    "CountLimitError",
    "DisconnectedGraphError",
    "ExactWeight",
    "GraphFormatError",
    "JacobiConvergenceError",
    "MultiplicityVector",
    "PermanentCapError",
    "SignLogDet",
    "SizeBudgetError",
    "Spectrum",
    "SymPermutation",
    "SymPowerMatrix",
    "VertexMultiset",
    "WeightedGraph",
    "adjacency_matrix",
    "complete",
    "complete_bipartite",
    "complete_loops",
    "components",
    "count_loops",
    "cycle",
    "degree",
    "det_formula",
    "edge_count",
    "eigenvalues_symmetric",
    "entry_orbit_sum",
    "entry_permanent",
    "enumerate_multisets",
    "enumerate_orbit",
    "exact_determinant",
    "family",
    "multiplicity_vector",
    "multiset_count",
    "neighbor_set",
    "orbit_size",
    "parse_graph",
    "path",
    "predict",
    "predicted_power_spectrum",
    "rank",
    "relabel",
    "ryser_permanent",
    "scepter",
    "spectra_match",
    "star",
    "sym_power",
    "sym_power_graph",
    "sym_power_permutation",
    "trace_formula",
    "unrank",
    "wiener_index",
    "wiener_within_components",
    "write_dot",
    "write_graph",
    "write_stats_json",
]
