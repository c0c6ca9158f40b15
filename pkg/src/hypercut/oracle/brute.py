"""Definition-level reference implementations.

Nothing here calls into the incidence-graph machinery of the library: classes
are computed by closure merging, deletions by direct set arithmetic, and
separation by trying every split of the edge set.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping

from ..core import Hypergraph, id_key
from ..errors import HasEmptyEdges, NotConnected, TooLarge

Edges = Mapping[str, frozenset]


def brute_classes(vertices: Iterable[str], edges: Iterable[frozenset]) -> list[frozenset]:
    """Vertex classes under walk-connection, by repeatedly merging classes an edge meets."""
    classes = [frozenset([v]) for v in vertices]
    for vs in edges:
        if not vs:
            continue
        hit = [c for c in classes if c & vs]
        if len(hit) > 1:
            merged = frozenset().union(*hit)
            classes = [c for c in classes if not (c & vs)] + [merged]
    return classes


def brute_components(H: Hypergraph) -> list[frozenset]:
    return sorted(brute_classes(H.vertices, H.edges.values()), key=lambda c: min(id_key(v) for v in c))


def brute_omega(H: Hypergraph) -> int:
    return len(brute_classes(H.vertices, H.edges.values()))


def omega_of(vertices: Iterable[str], edges: Iterable[frozenset]) -> int:
    return len(brute_classes(vertices, edges))


def omega_without_edge(H: Hypergraph, e: str) -> int:
    return omega_of(H.vertices, (vs for f, vs in H.edges.items() if f != e))


def omega_without_vertex(H: Hypergraph, v: str) -> int:
    # removing v from every edge; emptied edges carry no connectivity anyway
    return omega_of((u for u in H.vertices if u != v), (vs - {v} for vs in H.edges.values()))


def brute_is_cut_edge(H: Hypergraph, e: str) -> bool:
    return omega_without_edge(H, e) > brute_omega(H)


def brute_cut_kind(H: Hypergraph, e: str) -> str:
    before, after = brute_omega(H), omega_without_edge(H, e)
    if after <= before:
        return "NotCut"
    return "Strong" if after == before + len(H.edges[e]) - 1 else "Weak"


def brute_is_cut_vertex(H: Hypergraph, v: str) -> bool:
    return omega_without_vertex(H, v) > brute_omega(H)


# plain incidence graph, built here rather than borrowed from the library

def incidence_adjacency(H: Hypergraph) -> dict[tuple[str, str], set]:
    adj: dict = {("v", v): set() for v in H.vertices}
    for e, vs in H.edges.items():
        adj[("e", e)] = {("v", v) for v in vs}
        for v in vs:
            adj[("v", v)].add(("e", e))
    return adj


def graph_component_count(adj: Mapping, removed=None) -> int:
    seen = {removed} if removed is not None else set()
    count = 0
    for root in adj:
        if root in seen:
            continue
        count += 1
        seen.add(root)
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


def brute_articulations(adj: Mapping) -> set:
    """Nodes whose removal increases the component count."""
    base = graph_component_count(adj)
    return {x for x in adj if graph_component_count(adj, removed=x) > base}


def is_connected_parts(vertices: frozenset, edges: Iterable[frozenset]) -> bool:
    return omega_of(vertices, edges) == 1


def brute_separating(H: Hypergraph, v: str, edge_cap: int = 12) -> bool:
    """Literal search for H = H1 (+) H2 with connected parts meeting only in v.

    Each part needs at least one edge and must contain its edges.
    """
    H.require_vertex(v)
    if any(not vs for vs in H.edges.values()):
        raise HasEmptyEdges("separating vertices need a hypergraph without empty edges")
    if brute_omega(H) != 1:
        raise NotConnected("separating vertices need a connected hypergraph")
    if H.m > edge_cap:
        raise TooLarge(f"{H.m} edges exceeds the cap of {edge_cap}")
    ids = list(H.edge_ids)
    if len(ids) < 2:
        return False
    covered = frozenset().union(*H.edges.values())
    loose = [u for u in H.vertices if u not in covered and u != v]
    first, rest = ids[0], ids[1:]
    for picks in itertools.product((0, 1), repeat=len(rest)):
        # ids[0] always goes to the first part; the mirror split is the same decomposition
        side = [[first], []]
        for e, p in zip(rest, picks):
            side[p].append(e)
        if not side[1]:
            continue
        base = [frozenset().union(*(H.edges[e] for e in part)) | {v} for part in side]
        if base[0] & base[1] != {v}:
            continue
        for spots in itertools.product((0, 1), repeat=len(loose)):
            parts = [set(base[0]), set(base[1])]
            for u, s in zip(loose, spots):
                parts[s].add(u)
            if all(is_connected_parts(frozenset(parts[i]), [H.edges[e] for e in side[i]]) for i in (0, 1)):
                return True
    return False


def brute_nonseparable(vertices: frozenset, edges: Edges) -> bool:
    sub = Hypergraph(sorted(vertices, key=id_key), list(edges.items()))
    if any(not vs for vs in edges.values()) or brute_omega(sub) != 1:
        return False
    return not any(brute_separating(sub, v) for v in sub.vertices)


def brute_blocks(H: Hypergraph) -> set[tuple[frozenset, frozenset]]:
    """Maximal non-separable hypersubgraphs as (vertex set, edge-id set) pairs."""
    if any(not vs for vs in H.edges.values()):
        raise HasEmptyEdges("blocks need a hypergraph without empty edges")
    found = [(frozenset([v]), frozenset()) for v in H.vertices]
    ids = list(H.edge_ids)
    for size in range(1, len(ids) + 1):
        for chosen in itertools.combinations(ids, size):
            vs = frozenset().union(*(H.edges[e] for e in chosen))
            if brute_nonseparable(vs, {e: H.edges[e] for e in chosen}):
                found.append((vs, frozenset(chosen)))
    return {
        (vs, es)
        for vs, es in found
        if not any((vs, es) != (ws, fs) and vs <= ws and es <= fs for ws, fs in found)
    }
