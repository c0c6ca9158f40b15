"""Walks in a hypergraph and their classification.

A walk is written as an alternating token sequence ``v0 e1 v1 ... ek vk``.
Sequences are accepted as-is by :class:`Walk` and validated by
:func:`classify`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .connectivity import gamma
from .core import Hypergraph
from .derive import SubhypergraphWitness, induced_subhypergraph
from .errors import (
    ConsecutiveEdgeRepeat,
    EndpointMismatch,
    MalformedAlternation,
    NotAWalk,
    NotClosed,
    UnknownToken,
)
from .incgraph import Graph, Node


@dataclass(frozen=True)
class Walk:
    tokens: tuple[str, ...]

    @classmethod
    def of(cls, *tokens: str) -> "Walk":
        return cls(tuple(tokens))

    @classmethod
    def parse(cls, text: str) -> "Walk":
        return cls(tuple(text.split()))

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.tokens[0::2]

    @property
    def edges(self) -> tuple[str, ...]:
        return self.tokens[1::2]

    @property
    def length(self) -> int:
        return len(self.tokens) // 2

    @property
    def start(self) -> str:
        return self.tokens[0]

    @property
    def end(self) -> str:
        return self.tokens[-1]

    def __str__(self):
        return " ".join(self.tokens)


@dataclass(frozen=True)
class WalkClass:
    is_walk: bool
    is_trail: bool
    is_strict_trail: bool
    is_pseudo_path: bool
    is_path: bool
    is_closed: bool
    is_closed_trail: bool
    is_closed_strict_trail: bool
    is_pseudo_cycle: bool
    is_cycle: bool

    @property
    def closed(self) -> Optional[str]:
        """Most specific closed class, ``"open"`` for open walks, None for non-walks."""
        if not self.is_walk:
            return None
        if not self.is_closed:
            return "open"
        for label in ("cycle", "pseudo_cycle", "closed_strict_trail", "closed_trail"):
            if getattr(self, "is_" + label):
                return label
        return "closed_walk"

    @property
    def name(self) -> str:
        """Most specific label overall, e.g. ``"path"`` or ``"pseudo_cycle"``."""
        if not self.is_walk:
            return "not_a_walk"
        if self.is_closed:
            return self.closed
        for label in ("path", "pseudo_path", "strict_trail", "trail"):
            if getattr(self, "is_" + label):
                return label
        return "walk"


@dataclass(frozen=True)
class WalkAnatomy:
    anchors: frozenset[str]
    floaters: frozenset[str]
    edge_ids: tuple[str, ...]


def _check_tokens(H: Hypergraph, W: Walk) -> None:
    if len(W.tokens) % 2 == 0:
        raise MalformedAlternation("a walk has an odd number of tokens, starting and ending with a vertex")
    for i, tok in enumerate(W.tokens):
        want_vertex = i % 2 == 0
        if want_vertex and not H.has_vertex(tok):
            if H.has_edge(tok):
                raise MalformedAlternation(f"position {i} must be a vertex, got edge {tok!r}")
            raise UnknownToken(f"unknown vertex {tok!r} at position {i}")
        if not want_vertex and not H.has_edge(tok):
            if H.has_vertex(tok):
                raise MalformedAlternation(f"position {i} must be an edge, got vertex {tok!r}")
            raise UnknownToken(f"unknown edge {tok!r} at position {i}")


def _distinct(items: Sequence) -> bool:
    return len(set(items)) == len(items)


def classify(H: Hypergraph, W: Walk) -> WalkClass:
    _check_tokens(H, W)
    vs, es = W.vertices, W.edges
    k = len(es)
    is_walk = all(
        vs[i] != vs[i + 1] and vs[i] in H.edges[es[i]] and vs[i + 1] in H.edges[es[i]] for i in range(k)
    )
    if not is_walk:
        return WalkClass(*([False] * 10))
    anchor_flags = [f for i in range(k) for f in ((vs[i], es[i]), (vs[i + 1], es[i]))]
    trail = _distinct(anchor_flags)
    strict = _distinct(es)
    vertices_distinct = _distinct(vs)
    closed = k >= 2 and vs[0] == vs[-1]
    inner_distinct = closed and _distinct(vs[:-1])
    return WalkClass(
        is_walk=True,
        is_trail=trail,
        is_strict_trail=strict,
        is_pseudo_path=trail and vertices_distinct,
        is_path=vertices_distinct and strict,
        is_closed=closed,
        is_closed_trail=closed and trail,
        is_closed_strict_trail=closed and strict,
        is_pseudo_cycle=closed and trail and inner_distinct,
        is_cycle=inner_distinct and strict,
    )


def anatomy(H: Hypergraph, W: Walk) -> WalkAnatomy:
    if not classify(H, W).is_walk:
        raise NotAWalk(f"{W} is not a walk")
    anchors = frozenset(W.vertices)
    touched = frozenset().union(*(H.edges[e] for e in W.edges))
    return WalkAnatomy(anchors, touched - anchors, W.edges)


def associated_hypersubgraph(H: Hypergraph, W: Walk) -> Hypergraph:
    """The hypersubgraph on anchors and floaters with the walk's whole edges."""
    parts = anatomy(H, W)
    keep = parts.anchors | parts.floaters
    used = set(parts.edge_ids)
    return Hypergraph([v for v in H.vertices if v in keep], [(e, vs) for e, vs in H.edges.items() if e in used])


def associated_subhypergraph(H: Hypergraph, W: Walk) -> SubhypergraphWitness:
    """The walk's edges cut down to its anchor vertices."""
    whole = associated_hypersubgraph(H, W)
    return induced_subhypergraph(whole, anatomy(H, W).anchors)


def concatenate(W: Walk, W2: Walk) -> Walk:
    for part in (W, W2):
        if len(part.tokens) % 2 == 0:
            raise MalformedAlternation(f"{part} is not an alternating vertex/edge sequence")
    if W.end != W2.start:
        raise EndpointMismatch(f"{W} ends at {W.end!r} but {W2} starts at {W2.start!r}")
    return Walk(W.tokens + W2.tokens[1:])


def to_incidence_walk(W: Walk) -> tuple[Node, ...]:
    return tuple(Node("v" if i % 2 == 0 else "e", t) for i, t in enumerate(W.tokens))


@dataclass(frozen=True)
class GraphWalkClass:
    is_walk: bool
    no_repeated_consecutive_v: bool
    is_closed: bool
    is_trail: bool
    is_path: bool
    is_cycle: bool
    e_nodes_distinct: bool
    v_nodes_distinct: bool
    v_nodes_distinct_cyclic: bool  # a closed sequence's end counts once


def classify_incidence(G: Graph, seq: Sequence) -> GraphWalkClass:
    """Classify a node sequence as a walk in a plain graph."""
    seq = tuple(seq)
    walk = bool(seq) and all(x in G.adj for x in seq) and all(
        seq[i + 1] in G.adj[seq[i]] for i in range(len(seq) - 1)
    )
    vpos = [x for x in seq if getattr(x, "kind", None) == "v"]
    epos = [x for x in seq if getattr(x, "kind", None) == "e"]
    no_consec = all(vpos[i] != vpos[i + 1] for i in range(len(vpos) - 1))
    closed = walk and len(seq) >= 2 and seq[0] == seq[-1]
    links = [frozenset(seq[i : i + 2]) for i in range(len(seq) - 1)]
    trail = walk and _distinct(links)
    cycle = closed and trail and len(seq) >= 4 and _distinct(seq[:-1])
    cyclic_v = vpos[:-1] if closed and vpos and seq[-1] == vpos[-1] else vpos
    return GraphWalkClass(
        is_walk=walk,
        no_repeated_consecutive_v=no_consec,
        is_closed=closed,
        is_trail=trail,
        is_path=walk and _distinct(seq),
        is_cycle=cycle,
        e_nodes_distinct=_distinct(epos),
        v_nodes_distinct=_distinct(vpos),
        v_nodes_distinct_cyclic=_distinct(cyclic_v),
    )


def dual_closed_walk(H: Hypergraph, W: Walk) -> Walk:
    """Translate a closed walk of H into the corresponding closed walk of the dual.

    ``v0 e1 v1 ... ek v0`` becomes ``e1 v1 e2 v2 ... ek v0 e1``: each edge
    becomes a dual vertex and each vertex between two edges the dual edge
    joining them.
    """
    cls = classify(H, W)
    if not cls.is_walk:
        raise NotAWalk(f"{W} is not a walk")
    if not cls.is_closed:
        raise NotClosed(f"{W} is not a closed walk")
    vs, es = W.vertices, W.edges
    k = len(es)
    for i in range(k):
        if es[i] == es[(i + 1) % k]:
            raise ConsecutiveEdgeRepeat(f"edge {es[i]!r} is repeated consecutively")
    tokens: list[str] = []
    for i in range(k):
        tokens += [es[i], vs[i + 1]]
    tokens.append(es[0])
    return Walk(tuple(tokens))


def find_path(H: Hypergraph, u: str, v: str) -> Optional[Walk]:
    """Shortest (u, v)-path found by breadth-first search of the incidence graph."""
    H.require_vertex(u)
    H.require_vertex(v)
    G = gamma(H)
    start, goal = Node("v", u), Node("v", v)
    parent = {start: None}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if x == goal:
            break
        for y in G.adj[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    if goal not in parent:
        return None
    route = []
    x = goal
    while x is not None:
        route.append(x.name)
        x = parent[x]
    return Walk(tuple(reversed(route)))
