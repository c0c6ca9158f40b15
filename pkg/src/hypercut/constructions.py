"""Named hypergraphs used as fixtures and regression cases."""

from __future__ import annotations

from .core import Hypergraph, build
from .errors import HypergraphError


def regular_with_weak_cut_edge(n: int) -> Hypergraph:
    """An n-regular hypergraph (n even) on 2n vertices whose edge e{n+1} is a weak cut edge.

    Two copies of the complete incidence pattern on n vertices and n edges,
    with v1 moved out of e1 and into e{n+1}.
    """
    if n < 2 or n % 2:
        raise HypergraphError(f"n must be an even integer >= 2, got {n}")
    low = [f"v{i}" for i in range(1, n + 1)]
    high = [f"v{i}" for i in range(n + 1, 2 * n + 1)]
    edges = []
    for j in range(1, 2 * n + 1):
        members = list(low if j <= n else high)
        if j == 1:
            members.remove("v1")
        if j == n + 1:
            members = ["v1"] + members
        edges.append((f"e{j}", members))
    return build(low + high, edges)


def two_vertex_example() -> Hypergraph:
    """u, v with a singleton edge e1 = {v} and e2 = {u, v}."""
    return build(["u", "v"], [("e1", ["v"]), ("e2", ["u", "v"])])
