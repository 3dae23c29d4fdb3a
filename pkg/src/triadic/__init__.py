"""Triadic balance and transitivity analysis of social networks."""

from .census import (
    census_directed,
    census_undirected,
    count_intransitive_triples,
    flow_balance,
    is_completely_balanced,
)
from .generators import (
    ConstellationParams,
    clique_union,
    constellation_expectation,
    sample_constellation,
    star_graph,
    sign_pattern_report,
)
from .graphs import (
    Digraph,
    GraphError,
    LoopDigraph,
    UndirectedGraph,
    WeightedDigraph,
    direct,
    induced_triad,
    parse_edge_list,
    symmetrize,
)
from .hypothesis import evaluate_gbh, evaluate_gth, karate_reference_report
from .karate import karate_graph
from .null_models import (
    ErParams,
    expected_census_directed,
    expected_census_undirected,
    expected_intransitive_triples,
    expected_motto_prime_failures,
)
from .triads import (
    TRIAD_CLASSES,
    Motto,
    classify_directed_triad,
    classify_undirected_triad,
    is_balanced_triad,
    motto_holds,
    motto_prime_failures,
    motto_table,
)

__version__ = "0.1.0"
