"""hamcert: certify Hamiltonicity with checkable witnesses.

For a 2-connected split or triangle-free input the certify entry points
return either a Hamiltonian cycle or an induced obstruction embedding;
both re-validate independently of the search that produced them.
"""

from .errors import (
    Graph6Error,
    HamcertError,
    InternalInvariantError,
    PreconditionError,
    UnsupportedGraphError,
)
from .graphs import (
    Graph,
    canonical_form,
    induced_subgraph,
    is_isomorphic,
    iter_graph6,
    parse_graph6,
    write_dot,
    write_graph6,
)

__all__ = [
    "Graph",
    "Graph6Error",
    "HamcertError",
    "InternalInvariantError",
    "PreconditionError",
    "UnsupportedGraphError",
    "canonical_form",
    "induced_subgraph",
    "is_isomorphic",
    "iter_graph6",
    "parse_graph6",
    "write_dot",
    "write_graph6",
]
