"""Spectral graph entropies and the quantum Jensen-Tsallis divergence.

Pipeline: parse a graph, scale its combinatorial Laplacian by the inverse
volume to get a unit-trace density matrix, and evaluate entropies (Tsallis,
Rényi, von Neumann) or weighted Jensen-Tsallis divergences on the spectrum.
"""

from .divergence import (
    DivergenceResult,
    degenerate_density,
    jensen_tsallis_divergence,
    pairwise_matrix,
    tight_bound,
    upper_bound,
)
from .entropy import (
    alpha_log,
    joint_tsallis_entropy,
    renyi_entropy,
    tsallis_entropy,
    tsallis_entropy_p,
    von_neumann_entropy,
)
from .errors import (
    ConvergenceError,
    DimensionMismatchError,
    EmptyGraphError,
    EmptyInputError,
    FaceArityError,
    GraphParseError,
    IndexOutOfRangeError,
    InvalidAlphaError,
    InvalidWeightsError,
    MalformedLineError,
    MissingMagicError,
    NonPositiveArgumentError,
    NonSquareError,
    SelfLoopError,
    TruncatedFileError,
    UnsupportedHeaderError,
)
from .estimator import PairwiseDivergence, as_density_matrix
from .graph_io import (
    Graph,
    ValidationReport,
    parse_edge_list,
    parse_matrix_market,
    parse_off_mesh,
    to_edge_list,
    validate_graph,
)
from .laplacian import (
    adjacency_matrix,
    degree_vector,
    density_matrix,
    laplacian_matrix,
    matrix_csv,
    volume,
)
from .spectral import (
    EigenSystem,
    eigendecompose,
    kronecker_joint,
    mixture,
    spectrum,
    trace_function,
    trace_power,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DimensionMismatchError",
    "DivergenceResult",
    "EigenSystem",
    "EmptyGraphError",
    "EmptyInputError",
    "FaceArityError",
    "Graph",
    "GraphParseError",
    "IndexOutOfRangeError",
    "InvalidAlphaError",
    "InvalidWeightsError",
    "MalformedLineError",
    "MissingMagicError",
    "NonPositiveArgumentError",
    "NonSquareError",
    "PairwiseDivergence",
    "SelfLoopError",
    "TruncatedFileError",
    "UnsupportedHeaderError",
    "ValidationReport",
    "adjacency_matrix",
    "alpha_log",
    "as_density_matrix",
    "degenerate_density",
    "degree_vector",
    "density_matrix",
    "eigendecompose",
    "jensen_tsallis_divergence",
    "joint_tsallis_entropy",
    "kronecker_joint",
    "laplacian_matrix",
    "matrix_csv",
    "mixture",
    "pairwise_matrix",
    "parse_edge_list",
    "parse_matrix_market",
    "parse_off_mesh",
    "renyi_entropy",
    "spectrum",
    "tight_bound",
    "to_edge_list",
    "trace_function",
    "trace_power",
    "tsallis_entropy",
    "tsallis_entropy_p",
    "upper_bound",
    "validate_graph",
    "volume",
    "von_neumann_entropy",
]
