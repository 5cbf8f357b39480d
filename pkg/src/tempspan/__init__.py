"""Small temporal spanners for temporal cliques and bi-cliques."""

__version__ = "0.1.0"

from .algorithms import (
    AlgoReport,
    PivotConfig,
    bispanner_nlogn,
    bispanner_pivot,
    bispanner_portfolio,
    bispanner_reverted,
    bispanner_reverted_best,
    bispanner_reverted_reduced,
    clique_spanner,
    compute_bispanner,
    find_pivot_edge,
    product_bispanner,
    reverted_set,
)
from .core import (
    A,
    B,
    V,
    Spanner,
    TemporalBiClique,
    TemporalClique,
    VertexRef,
    extremal_matching,
    induced_subinstance,
    make_injective,
)
from .generators import product, random_biclique, random_clique, random_matched_biclique, ringshift, smsmbg
from .reach import in_set, out_set, verify_bispanner, verify_spanner
from .reduce import dismount_exhaustive, find_dismountable

__all__ = [
    "A", "B", "V", "AlgoReport", "PivotConfig", "Spanner", "TemporalBiClique", "TemporalClique",
    "VertexRef", "bispanner_nlogn", "bispanner_pivot", "bispanner_portfolio",
    "bispanner_reverted", "bispanner_reverted_best", "bispanner_reverted_reduced",
    "clique_spanner", "compute_bispanner", "dismount_exhaustive", "extremal_matching",
    "find_dismountable", "find_pivot_edge", "in_set", "induced_subinstance", "make_injective",
    "out_set", "product", "product_bispanner", "random_biclique", "random_clique",
    "random_matched_biclique", "reverted_set", "ringshift", "smsmbg", "verify_bispanner",
    "verify_spanner",
]
