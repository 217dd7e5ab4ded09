"""Coset posets (Hasse diagrams) of binary linear codes."""

from .code import (
    Coset,
    CosetTable,
    LinearCode,
    build_code,
    covering_radius,
    enumerate_cosets,
    minimum_distance,
    syndrome,
    weight_enumerator,
)
from .equivalence import apply_permutation, permutation_equivalent
from .errors import (
    BudgetExceeded,
    CosetPosetError,
    Disconnected,
    LengthMismatch,
    NotProperSubspace,
    NotStandardForm,
    ParseError,
    RankDeficient,
    SizeMismatch,
    TableMismatch,
    TooLarge,
)
from .gf2 import (
    BinaryMatrix,
    BitWord,
    Permutation,
    hamming_distance,
    hamming_weight,
    parity_check_from_standard,
    rref,
    standard_form,
    support_subset,
)
from .graph import (
    GraphReport,
    IsoWitness,
    analyze,
    bipartition,
    diameter,
    graph_isomorphic,
    hasse_isomorphic,
    is_connected,
    is_star,
    is_triangle_free,
    to_dot,
)
from .poset import HasseGraph, build_hasse, corollary_distance, orphans, precedes

__version__ = "0.1.0"
