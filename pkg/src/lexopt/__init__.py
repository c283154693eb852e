"""Exact lex-maximal and maximum-weight matchings and matroid intersections."""

from .core import (
    INFINITE,
    Lex,
    WeightClasses,
    alpha,
    dispersed_weights,
    lex_compare,
    lex_signature,
    weight_classes,
    weight_of,
)
from .harness import (
    Instance,
    eligible_chain,
    generate_instance,
    greedy_baseline,
    sweep,
    tightness_example,
    verify_bound,
)
from .intersection import (
    lex_maximal_common_independent,
    max_weight_common_independent,
)
from .matching import WeightedGraph, lex_maximal_matching, max_weight_matching

__version__ = "0.1.0"

__all__ = [
    "INFINITE", "Lex", "WeightClasses", "alpha", "dispersed_weights", "lex_compare",
    "lex_signature", "weight_classes", "weight_of",
    "Instance", "eligible_chain", "generate_instance", "greedy_baseline", "sweep",
    "tightness_example", "verify_bound",
    "lex_maximal_common_independent", "max_weight_common_independent",
    "WeightedGraph", "lex_maximal_matching", "max_weight_matching",
]
