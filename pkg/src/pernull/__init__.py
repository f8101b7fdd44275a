"""Permanental nullity of graphs, two independent ways.

The structural route computes the multiplicity of the zero root of
per(xI - A) from matching theory alone: a maximum matching, the
exposure partition of the vertices, and a coverage statistic over its
components. The oracle route expands the polynomial exactly, either by
enumerating edge/cycle subgraphs or by interpolating integer permanents,
and reads the answer off the trailing coefficients. Every claim the
structural route makes is cross-checkable against the oracle, and the
verify module does exactly that over exhaustive and randomized corpora.
"""

from .errors import GraphFormatError, InvariantViolationError, ScaleLimitError
from .graphs import (
    CycleInfo,
    Graph,
    VertexSet,
    complete_graph,
    cycle_graph,
    empty_graph,
    line_graph,
    parse_edge_list,
    parse_graph6,
    path_graph,
    petersen_graph,
    star_graph,
    to_graph6,
)
from .matching import (
    GEDecomposition,
    Matching,
    MStatistic,
    gallai_edmonds,
    has_perfect_matching,
    is_factor_critical,
    m_statistic,
    m_statistic_oracle,
    matching_number,
    maximum_matching,
)
from .permanental import (
    PermPolynomial,
    SachsSubgraph,
    max_sachs_subgraph,
    per_nullity_oracle,
    perm_polynomial_interpolation,
    perm_polynomial_sachs,
    permanent,
)
from .nullity import (
    NullityCase,
    NullityReport,
    ZeroNullityCase,
    line_graph_matching_check,
    line_graph_nullity_check,
    per_nullity_structural,
    unicyclic_nullity,
    unicyclic_zero_check,
    zero_nullity_characterization,
)
from .corpus import CorpusKind, CorpusSpec, SplitMix64, iter_corpus
from .verify import CHECKS, VerifyResult, run_verification

__version__ = "0.1.0"

__all__ = [
    "CHECKS",
    "CorpusKind",
    "CorpusSpec",
    "CycleInfo",
    "GEDecomposition",
    "Graph",
    "GraphFormatError",
    "InvariantViolationError",
    "MStatistic",
    "Matching",
    "NullityCase",
    "NullityReport",
    "PermPolynomial",
    "SachsSubgraph",
    "ScaleLimitError",
    "SplitMix64",
    "VerifyResult",
    "VertexSet",
    "ZeroNullityCase",
    "complete_graph",
    "cycle_graph",
    "empty_graph",
    "gallai_edmonds",
    "has_perfect_matching",
    "is_factor_critical",
    "iter_corpus",
    "line_graph",
    "line_graph_matching_check",
    "line_graph_nullity_check",
    "m_statistic",
    "m_statistic_oracle",
    "matching_number",
    "max_sachs_subgraph",
    "maximum_matching",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "per_nullity_oracle",
    "per_nullity_structural",
    "perm_polynomial_interpolation",
    "perm_polynomial_sachs",
    "permanent",
    "petersen_graph",
    "run_verification",
    "star_graph",
    "to_graph6",
    "unicyclic_nullity",
    "unicyclic_zero_check",
    "zero_nullity_characterization",
]
