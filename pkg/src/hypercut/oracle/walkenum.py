"""Bounded enumeration of walks, cycles and closed trails.

Closed sequences are canonicalized up to rotation and reflection so each
closed walk is reported once.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional, Union

from ..core import Hypergraph, id_key
from ..errors import UnknownToken
from ..incgraph import Node
from ..walks import Walk


def alternating_sequences(H: Hypergraph, max_len: int) -> Iterator[Walk]:
    """Every vertex/edge alternation ``v0 e1 .. ek vk`` with k <= max_len, walk or not."""
    vs, es = H.vertices, H.edge_ids
    for k in range(max_len + 1):
        if k and not es:
            break
        for vseq in itertools.product(vs, repeat=k + 1):
            for eseq in itertools.product(es, repeat=k):
                tokens = [vseq[0]]
                for e, v in zip(eseq, vseq[1:]):
                    tokens += [e, v]
                yield Walk(tuple(tokens))


def _steps(H: Hypergraph, v: str) -> list[tuple[str, str]]:
    return [(e, w) for e in H.edge_ids if v in H.edges[e] for w in sorted(H.edges[e], key=id_key) if w != v]


def enumerate_walks(H: Hypergraph, max_len: int, closed: bool = False) -> Iterator[Walk]:
    """All walks of length <= max_len; closed ones only (k >= 2, v0 = vk) if asked."""
    def extend(tokens: list[str], k: int):
        if closed:
            if k >= 2 and tokens[-1] == tokens[0]:
                yield Walk(tuple(tokens))
        else:
            yield Walk(tuple(tokens))
        if k == max_len:
            return
        for e, w in _steps(H, tokens[-1]):
            yield from extend(tokens + [e, w], k + 1)

    for v in H.vertices:
        yield from extend([v], 0)


def canonical_closed(tokens: tuple[str, ...], rank: Optional[dict[str, object]] = None) -> tuple[str, ...]:
    """Least rotation/reflection of a closed walk, compared by id order."""
    key = rank.__getitem__ if rank is not None else id_key
    body = list(tokens[:-1])  # v0 e1 v1 ... ek
    size = len(body)
    variants = []
    for seq in (body, [body[0]] + body[1:][::-1]):
        for start in range(0, size, 2):
            rotated = seq[start:] + seq[:start]
            variants.append(tuple(rotated) + (rotated[0],))
    return min(variants, key=lambda t: [key(x) for x in t])


def _closed_search(H: Hypergraph, max_len: int, distinct_edges: bool, distinct_vertices: bool,
                   distinct_flags: bool) -> list[Walk]:
    tokens_all = set(H.vertices) | set(H.edge_ids)
    rank = {t: i for i, t in enumerate(sorted(tokens_all, key=id_key))}
    steps = {v: _steps(H, v) for v in H.vertices}
    found: set[tuple[str, ...]] = set()
    for start in H.vertices:
        stack = [((start,), frozenset(), frozenset(), frozenset([start]))]
        while stack:
            tokens, used_edges, used_flags, seen = stack.pop()
            k = len(tokens) // 2
            if k >= 2 and tokens[-1] == start:
                found.add(canonical_closed(tokens, rank))
                if distinct_vertices:
                    continue
            if k == max_len:
                continue
            here = tokens[-1]
            for e, w in steps[here]:
                if distinct_edges and e in used_edges:
                    continue
                flags = {(here, e), (w, e)}
                if distinct_flags and (flags & used_flags):
                    continue
                closing = w == start
                if distinct_vertices and w in seen and not closing:
                    continue
                stack.append((tokens + (e, w), used_edges | {e}, used_flags | flags, seen | {w}))
    return [Walk(t) for t in sorted(found, key=lambda t: (len(t), [rank[x] for x in t]))]


def enumerate_cycles(H: Hypergraph, max_len: Optional[int] = None) -> list[Walk]:
    if max_len is None:
        max_len = min(H.n, H.m)
    if max_len < 2:
        return []
    return _closed_search(H, max_len, distinct_edges=True, distinct_vertices=True, distinct_flags=True)


def enumerate_closed_trails(H: Hypergraph, kind: str, max_len: Optional[int] = None) -> list[Walk]:
    """Strict closed trails (``"strict"``) or pseudo cycles (``"pseudo"``)."""
    if kind in ("strict", "strict_closed_trail"):
        bound = 2 * H.m if max_len is None else max_len
        return _closed_search(H, bound, distinct_edges=True, distinct_vertices=False, distinct_flags=False)
    if kind in ("pseudo", "pseudo_cycle"):
        bound = H.n if max_len is None else max_len
        return _closed_search(H, bound, distinct_edges=False, distinct_vertices=True, distinct_flags=True)
    raise ValueError(f"unknown closed-trail kind {kind!r}")


def _as_node(H: Hypergraph, x: Union[str, Node]) -> tuple[Optional[str], Optional[str]]:
    """(vertex name, edge name) that x may denote; a bare id may be both."""
    if isinstance(x, Node):
        ok = H.has_vertex(x.name) if x.kind == "v" else H.has_edge(x.name) if x.kind == "e" else False
        if not ok:
            raise UnknownToken(f"{x} is not a node of the incidence graph")
        return (x.name, None) if x.kind == "v" else (None, x.name)
    v = x if H.has_vertex(x) else None
    e = x if H.has_edge(x) else None
    if v is None and e is None:
        raise UnknownToken(f"{x!r} is neither a vertex nor an edge")
    return v, e


def carries(W: Walk, target: tuple[Optional[str], Optional[str]]) -> bool:
    v, e = target
    return (v is not None and v in W.vertices) or (e is not None and e in W.edges)


def on_common_cycle(H: Hypergraph, x: Union[str, Node], y: Union[str, Node],
                    cycles: Optional[list[Walk]] = None) -> bool:
    """Whether some cycle carries both x and y as anchors or edges."""
    a, b = _as_node(H, x), _as_node(H, y)
    for C in enumerate_cycles(H) if cycles is None else cycles:
        if carries(C, a) and carries(C, b):
            return True
    return False


def element_sets(walks: list[Walk]) -> list[frozenset]:
    """Elements each walk carries, tagged as Node values."""
    return [frozenset(Node("v", v) for v in W.vertices) | frozenset(Node("e", e) for e in W.edges) for W in walks]


def all_pairs_covered(items: list, covers: list[frozenset]) -> bool:
    """Every two distinct items appear together in one of the covering sets."""
    return all(any(a in c and b in c for c in covers) for a, b in itertools.combinations(items, 2))
