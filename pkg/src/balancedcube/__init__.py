"""Largest balanced independent sets in the discrete cube Q_n.

Vertices are subsets of {1..n} encoded as ints (element i is bit i-1).
"""
from .constructions import (
    ExtremalPair,
    construct_pair,
    extremal_size,
    pair_counts,
    prefix_layer,
    verify_pair,
)
from .cube_core import (
    OutOfRangeError,
    Ordering,
    binomial,
    elements,
    format_vertex,
    layer_rank,
    layer_unrank,
    parity_class_size,
    parity_rank,
    parity_unrank,
    simplicial_cmp,
    vertex,
)
from .families import (
    Family,
    MixedParityError,
    NotIndependentError,
    SegmentSpec,
    co_neighborhood,
    is_balanced,
    is_independent,
    is_maximal_independent,
    is_terminal_segment,
    neighborhood,
    parity_class,
    segment,
)
from .oracles import (
    SearchResult,
    check_isoperimetry_exhaustive,
    check_isoperimetry_sampled,
    check_terminal_property,
    max_balanced_exhaustive,
    max_balanced_segment,
)
from .report import Check, VerificationReport

__version__ = "0.1.0"
