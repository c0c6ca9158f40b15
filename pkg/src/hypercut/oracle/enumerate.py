"""Exhaustive enumeration of small labeled hypergraphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from ..core import Hypergraph


@dataclass(frozen=True)
class EnumSpace:
    """Every hypergraph with 1..max_vertices vertices and 0..max_edges edges.

    Vertices are ``v1..vn`` and edges ``e1..em``; each edge is a column of the
    incidence matrix, stored as a bitmask over the vertices.
    """

    max_vertices: int
    max_edges: int
    allow_empty_edges: bool = True

    def __post_init__(self):
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be at least 1")
        if self.max_edges < 0:
            raise ValueError("max_edges must be nonnegative")


def space_size(space: EnumSpace) -> int:
    """Closed-form instance count of the space."""
    lowest = 0 if space.allow_empty_edges else 1
    return sum(
        ((1 << n) - lowest) ** m
        for n in range(1, space.max_vertices + 1)
        for m in range(space.max_edges + 1)
    )


def hypergraph_from_masks(n: int, masks: tuple[int, ...]) -> Hypergraph:
    vertices = [f"v{i + 1}" for i in range(n)]
    edges = [
        (f"e{j + 1}", [vertices[i] for i in range(n) if mask >> i & 1])
        for j, mask in enumerate(masks)
    ]
    return Hypergraph(vertices, edges)


def enumerate_masks(space: EnumSpace) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield ``(n, column masks)`` in lexicographic matrix order."""
    lowest = 0 if space.allow_empty_edges else 1
    for n in range(1, space.max_vertices + 1):
        columns = range(lowest, 1 << n)
        for m in range(space.max_edges + 1):
            for masks in itertools.product(columns, repeat=m):
                yield n, masks


def enumerate_space(space: EnumSpace) -> Iterator[Hypergraph]:
    for n, masks in enumerate_masks(space):
        yield hypergraph_from_masks(n, masks)
