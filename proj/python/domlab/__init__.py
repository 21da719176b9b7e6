"""k-tuple total (restrained) domination: graphs, exact solvers, closed forms."""

from ._domlab import (
    Graph,
    GuardExceeded,
    SolveResult,
    complement,
    complementary_prism,
    domatic,
    edge_list,
    from_edge_list,
    from_edges,
    from_family,
    gamma,
    gamma_naive,
    is_ktds,
    is_ktrds,
    verify,
)

__all__ = [
    "Graph",
    "GuardExceeded",
    "SolveResult",
    "complement",
    "complementary_prism",
    "domatic",
    "edge_list",
    "from_edge_list",
    "from_edges",
    "from_family",
    "gamma",
    "gamma_naive",
    "is_ktds",
    "is_ktrds",
    "verify",
]
