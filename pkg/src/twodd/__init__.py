"""Alternating-cycle analysis and non-Hamiltonicity certificates for 2-digraphs."""

from .graph_core import (
    AlternatingCycle,
    Arc,
    TwoDigraph,
    ac_decompose,
    boundary_flow,
    build,
    components,
    induced_subgraph,
    is_connected,
    is_strongly_connected,
    splice,
    split,
)
from .factors import (
    Factor,
    Route,
    Selection,
    enumerate_factors,
    factor,
    index_of,
    is_closed,
    is_hamiltonian_bruteforce,
    is_minimally_closed,
    is_open,
    open_routes,
    parity_class,
    route_of,
    route_parity_partition,
)
from .canonical import canonical_form, is_isomorphic
from .certificate import Certificate
from .certify import certify, verify_certificate
from .splitting import certify_by_splitting, even_pair_splice, minimal_split_sets, splice_pair
from .quotients import classify_ac6, closed_subset_search, eliminate_dirty, minor, quotient
from .generation import (
    FamilySpec,
    census,
    construct_closed_splice,
    construct_unique_route_splice,
    enumerate_family,
    random_2dd,
    random_2digraph,
)

__version__ = "0.1.0"
