"""Edge-count bounds and exact oracles for maximal permutation graphs."""
from .bounds import BoundReport, i_h, lower_bound, sandwich_report, upper_bound, w_h_direct
from .graphs import (
    VertexLabeledGraph,
    complete_graph,
    enumerate_maximal,
    export_graph,
    is_maximal,
    is_permutation_labeling,
    maximal_graph,
)
from .labels import CapError, LabelPair, build_collision_table, distinct_value_count, enumerate_pairs
from .numtheory import falling_factorial, m_index, prime_pi, valuation
from .witness import WitnessConfig, union_and_delta, witness_sets

__version__ = "0.1.0"
