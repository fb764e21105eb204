"""Exact arithmetic on unlabeled graphs under disjoint union and the
cartesian product.

The package treats graph families as semirings with a vertex-count degree
map: counting members, connected members, and cartesian primes per degree;
inverting the Euler transform; factoring connected graphs into cartesian
primes; evaluating divisor-style arithmetic functions; and checking the
finite-degree inequalities that govern how the three count sequences grow.
Everything is computed with integers and fractions, never floats.
"""

from .counting import (CountSequence, SignedSequence, count_graphs_polya,
                       euler_inverse, euler_transform, graph_connected_totals,
                       graph_totals, inversion_coefficients,
                       truncated_prime_estimate)
from .errors import BoxprimeError, CapacityError, DomainError, ParseError
from .expansion import (RationalPolynomial, connected_series_polynomial,
                        expansion_error_bound, expansion_error_report,
                        expansion_partial_sum, total_series_polynomial)
from .factor import (composite_map, composite_set, count_composites,
                     count_primes, divisors, factorize, is_cartesian_prime,
                     product_of)
from .functions import (coprime_count, divisor_count, divisor_sum, evaluate,
                        exponent_product, population_stats,
                        submultiplicativity_check, unitary_divisor_count)
from .graph6 import encode_graph6, parse_graph6
from .graphs import (Graph, are_isomorphic, canonical_form, canonical_key,
                     cartesian_product, complete_graph, cycle_graph,
                     disjoint_union, empty_graph, enumerate_connected,
                     enumerate_graphs, is_connected, path_graph, star_graph)
from .semiring import (SemiringElement, SemiringInstance, build_instance,
                       closure_check, hamming_degree, hamming_polynomial,
                       instance_all_graphs, instance_even_edge,
                       instance_hamming, monotonicity_report,
                       self_complementary_count, self_complementary_identity)

__version__ = "0.1.0"

__all__ = [
    "BoxprimeError", "CapacityError", "DomainError", "ParseError",
    "Graph", "are_isomorphic", "canonical_form", "canonical_key",
    "cartesian_product", "complete_graph", "cycle_graph", "disjoint_union",
    "empty_graph", "enumerate_connected", "enumerate_graphs", "is_connected",
    "path_graph", "star_graph",
    "encode_graph6", "parse_graph6",
    "CountSequence", "SignedSequence", "count_graphs_polya",
    "euler_inverse", "euler_transform", "graph_connected_totals",
    "graph_totals", "inversion_coefficients", "truncated_prime_estimate",
    "RationalPolynomial", "connected_series_polynomial",
    "expansion_error_bound", "expansion_error_report",
    "expansion_partial_sum", "total_series_polynomial",
    "composite_map", "composite_set", "count_composites", "count_primes",
    "divisors", "factorize", "is_cartesian_prime", "product_of",
    "SemiringElement", "SemiringInstance", "build_instance", "closure_check",
    "hamming_degree", "hamming_polynomial", "instance_all_graphs",
    "instance_even_edge", "instance_hamming", "monotonicity_report",
    "self_complementary_count", "self_complementary_identity",
    "coprime_count", "divisor_count", "divisor_sum", "evaluate",
    "exponent_product", "population_stats", "submultiplicativity_check",
    "unitary_divisor_count",
    "__version__",
]
