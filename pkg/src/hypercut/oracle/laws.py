"""Named laws checked by the verifier.

A law inspects one hypergraph and returns None when it holds, :data:`SKIP`
when the instance falls outside its hypotheses, or a failure message.  Every
library call goes through an :class:`Impl` so a deliberately broken variant
can be swapped in to prove the harness notices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from types import SimpleNamespace
from typing import Callable, Optional, Union

from .. import blocks as _blocks
from .. import connectivity as _conn
from .. import derive as _derive
from .. import walks as _walks
from ..connectivity import CutEdgeKind
from ..core import Hypergraph, degrees, flags, from_incidence_matrix, incidence_matrix
from ..errors import ConsecutiveEdgeRepeat
from ..incgraph import Node, incidence_graph, recognize_hypersubgraph
from ..walks import Walk, classify_incidence, to_incidence_walk
from .brute import (
    brute_blocks,
    brute_classes,
    brute_components,
    brute_cut_kind,
    brute_is_cut_vertex,
    brute_nonseparable,
    brute_omega,
    brute_separating,
    graph_component_count,
    incidence_adjacency,
    brute_articulations,
    omega_without_vertex,
)
from .iso import are_isomorphic
from .walkenum import (
    all_pairs_covered,
    alternating_sequences,
    element_sets,
    enumerate_closed_trails,
    enumerate_cycles,
    enumerate_walks,
)

SKIP = "skip"


@dataclass(frozen=True)
class Params:
    walk_max_len: int = 4
    edge_cap: int = 12
    max_instances: int = 500_000
    witness_limit: int = 1


@dataclass(frozen=True)
class Law:
    name: str
    summary: str
    check: Callable[[Hypergraph, SimpleNamespace, Params], Optional[str]]
    default: bool
    cheap: bool


REGISTRY: dict[str, Law] = {}


def law(name: str, summary: str, default: bool = True, cheap: bool = False):
    def register(fn):
        REGISTRY[name] = Law(name, summary, fn, default, cheap)
        return fn
    return register


def default_laws() -> list[str]:
    return [name for name, entry in REGISTRY.items() if entry.default]


def cheap_laws() -> list[str]:
    return [name for name, entry in REGISTRY.items() if entry.cheap]


# implementation hook and mutants

def library_impl(mutant: Optional[str] = None) -> SimpleNamespace:
    impl = SimpleNamespace(
        omega=_conn.omega,
        components=_conn.components,
        is_connected=_conn.is_connected,
        classify_cut_edge=_conn.classify_cut_edge,
        cut_edges=_conn.cut_edges,
        is_cut_vertex=_conn.is_cut_vertex,
        cut_vertices=_conn.cut_vertices,
        is_separating_vertex=_conn.is_separating_vertex,
        separating_vertices=_conn.separating_vertices,
        cut_vertex_bound_check=_conn.cut_vertex_bound_check,
        blocks=_blocks.blocks,
        block_graph=_blocks.block_graph,
        is_nonseparable=_blocks.is_nonseparable,
        weak_cut_edge_in_nonseparable=_blocks.weak_cut_edge_in_nonseparable,
        dual=_derive.dual,
        delete_edge=_derive.delete_edge,
        delete_vertex=_derive.delete_vertex,
        classify=_walks.classify,
        dual_closed_walk=_walks.dual_closed_walk,
        find_path=_walks.find_path,
    )
    if mutant is not None:
        if mutant not in MUTANTS:
            raise KeyError(f"unknown mutant {mutant!r}; known: {', '.join(MUTANTS)}")
        MUTANTS[mutant](impl)
    return impl


def _all_cuts_strong(impl: SimpleNamespace) -> None:
    real_classify, real_cut_edges = impl.classify_cut_edge, impl.cut_edges

    def classify_cut_edge(H, e):
        kind = real_classify(H, e)
        return CutEdgeKind.NOT_CUT if kind is CutEdgeKind.NOT_CUT else CutEdgeKind.STRONG

    def cut_edges(H):
        return [(e, CutEdgeKind.STRONG) for e, _ in real_cut_edges(H)]

    impl.classify_cut_edge = classify_cut_edge
    impl.cut_edges = cut_edges


MUTANTS: dict[str, Callable[[SimpleNamespace], None]] = {"all-cuts-strong": _all_cuts_strong}


# shared instance predicates

def _empty_edges(H: Hypergraph) -> bool:
    return any(not vs for vs in H.edges.values())


def _isolated(H: Hypergraph) -> bool:
    covered = frozenset().union(*H.edges.values()) if H.m else frozenset()
    return len(covered) < H.n


def _singleton(H: Hypergraph, v: str) -> bool:
    return any(vs == {v} for vs in H.edges.values())


def _pendant_in(H: Hypergraph, e: str) -> bool:
    deg = degrees(H)
    return any(deg[v] == 1 for v in H.edges[e])


def _connected_clean(H: Hypergraph) -> bool:
    return not _empty_edges(H) and brute_omega(H) == 1


def _classes_without_edge(H: Hypergraph, e: str) -> list[frozenset]:
    return brute_classes(H.vertices, [vs for f, vs in H.edges.items() if f != e])


# laws over the data model

@law("handshake", "degree sum equals flag count and edge-size sum; odd-degree vertices and odd edges share parity", cheap=True)
def _handshake(H, impl, p):
    deg = degrees(H)
    total, sizes = sum(deg.values()), sum(len(vs) for vs in H.edges.values())
    if not total == sizes == len(flags(H)):
        return f"degree sum {total}, edge-size sum {sizes}, flag count {len(flags(H))} disagree"
    odd_vertices = sum(1 for d in deg.values() if d % 2)
    odd_edges = sum(1 for vs in H.edges.values() if len(vs) % 2)
    if odd_vertices % 2 != odd_edges % 2:
        return f"{odd_vertices} odd-degree vertices but {odd_edges} odd-size edges"
    M = incidence_matrix(H)
    if [sum(row) for row in M.cells] != [deg[v] for v in M.rows]:
        return "incidence-matrix row sums differ from degrees"
    if [sum(col) for col in zip(*M.cells)] != [len(H.edges[e]) for e in M.cols] and H.m:
        return "incidence-matrix column sums differ from edge sizes"
    return None


@law("matrix-roundtrip", "hypergraph -> incidence matrix -> hypergraph is the identity up to positional ids")
def _matrix_roundtrip(H, impl, p):
    M = incidence_matrix(H)
    back = from_incidence_matrix(M)
    rename_v = {v: f"v{i + 1}" for i, v in enumerate(M.rows)}
    rename_e = {e: f"e{j + 1}" for j, e in enumerate(M.cols)}
    expect = Hypergraph(
        [rename_v[v] for v in H.vertices],
        [(rename_e[e], {rename_v[v] for v in vs}) for e, vs in H.edges.items()],
    )
    return None if back == expect else f"round trip produced {back!r}"


@law("omega-incidence", "component count and classes match closure merging and the incidence graph", cheap=True)
def _omega_incidence(H, impl, p):
    want = brute_components(H)
    if impl.omega(H) != len(want):
        return f"omega = {impl.omega(H)}, closure merging gives {len(want)}"
    part = impl.components(H)
    if {frozenset(c) for c in part.classes} != set(want):
        return f"component classes {part.classes} differ from {sorted(map(sorted, want))}"
    for e, i in part.edge_assignment.items():
        if not H.edges[e] <= set(part.classes[i]):
            return f"edge {e} assigned to a class that does not contain it"
    if set(part.stray_empty_edges) != {e for e, vs in H.edges.items() if not vs}:
        return "stray edges are not exactly the empty edges"
    if impl.is_connected(H) != (len(want) == 1):
        return "is_connected disagrees with the component count"
    if not _empty_edges(H):
        graph_count = graph_component_count(incidence_adjacency(H))
        if graph_count != len(want):
            return f"incidence graph has {graph_count} components, hypergraph has {len(want)}"
    return None


@law("cut-incidence", "cut edges and cut vertices match their definitions and incidence-graph articulation", cheap=True)
def _cut_incidence(H, impl, p):
    clean = not _empty_edges(H)
    art = brute_articulations(incidence_adjacency(H)) if clean else set()
    listed = {e: str(kind) for e, kind in impl.cut_edges(H)}
    for e in H.edge_ids:
        want = brute_cut_kind(H, e)
        got = str(impl.classify_cut_edge(H, e))
        if got != want:
            return f"classify_cut_edge({e}) = {got}, definition gives {want}"
        if listed.get(e, "NotCut") != want:
            return f"cut_edges lists {e} as {listed.get(e, 'NotCut')}, definition gives {want}"
        if clean and (want != "NotCut") != (("e", e) in art):
            return f"cut-edge status of {e} differs from articulation of its incidence node"
    if H.n >= 2:
        listed_v = set(impl.cut_vertices(H))
        for v in H.vertices:
            want_v = brute_is_cut_vertex(H, v)
            if impl.is_cut_vertex(H, v) != want_v or (v in listed_v) != want_v:
                return f"cut-vertex status of {v} should be {want_v}"
            if clean and not _singleton(H, v) and (("v", v) in art) != want_v:
                return f"cut-vertex status of {v} differs from articulation of its incidence node"
    return None


@law("cut-edge-bound", "deleting a cut edge e raises the component count by at most |e| - 1")
def _cut_edge_bound(H, impl, p):
    before = brute_omega(H)
    for e, vs in H.edges.items():
        after = len(_classes_without_edge(H, e))
        if after > before and after > before + len(vs) - 1:
            return f"deleting {e} gives {after} components from {before}"
    return None


@law("strong-cut-cycles", "an edge with at least two vertices is a strong cut edge iff it lies on no cycle")
def _strong_cut_cycles(H, impl, p):
    cycles = enumerate_cycles(H)
    for e, vs in H.edges.items():
        on_cycle = any(e in C.edges for C in cycles)
        kind = impl.classify_cut_edge(H, e)
        if len(vs) >= 2:
            if (kind is CutEdgeKind.STRONG) == on_cycle:
                return f"{e} is {kind} but {'lies' if on_cycle else 'does not lie'} on a cycle"
        elif kind is not CutEdgeKind.NOT_CUT or on_cycle:
            return f"edge {e} of size {len(vs)} classified {kind}"
    return None


@law("separating-brute", "separating vertices agree with the literal decomposition search")
def _separating_brute(H, impl, p):
    if not _connected_clean(H):
        return SKIP
    listed = set(impl.separating_vertices(H))
    for v in H.vertices:
        want = brute_separating(H, v, p.edge_cap)
        if impl.is_separating_vertex(H, v) != want or (v in listed) != want:
            return f"separating status of {v} should be {want}"
        if H.n >= 2:
            cut = brute_is_cut_vertex(H, v)
            if cut and not want:
                return f"cut vertex {v} is not separating"
            if not _singleton(H, v) and want and not cut:
                return f"separating vertex {v} without a singleton edge is not a cut vertex"
        if _singleton(H, v) and H.m >= 2 and not want:
            return f"{v} has a singleton edge in a connected hypergraph with two edges but is not separating"
    return None


# blocks

def _key(B: Hypergraph) -> tuple[frozenset, frozenset]:
    return B.vertex_set, frozenset(B.edge_ids)


@law("blocks", "blocks are the maximal non-separable hypersubgraphs and decompose the hypergraph")
def _blocks_law(H, impl, p):
    if _empty_edges(H):
        return SKIP
    dec = impl.blocks(H)
    got = [_key(B) for B in dec.blocks]
    if len(set(got)) != len(got):
        return "a block is listed twice"
    want = brute_blocks(H)
    if set(got) != want:
        return f"blocks {sorted(map(str, got))} differ from brute force {sorted(map(str, want))}"
    for B in dec.blocks:
        if any(B.edges[e] != H.edges[e] for e in B.edge_ids):
            return "a block edge differs from the parent edge"
    for (v1, e1), (v2, e2) in itertools.combinations(got, 2):
        if e1 & e2 or len(v1 & v2) > 1:
            return "two blocks share an edge or more than one vertex"
    edge_ids = [e for _, es in got for e in es]
    if sorted(edge_ids) != sorted(H.edge_ids) or frozenset().union(*(vs for vs, _ in got)) != H.vertex_set:
        return "blocks do not decompose the hypergraph"
    for (v1, e1), (v2, e2) in itertools.combinations(got, 2):
        if brute_nonseparable(v1 | v2, {e: H.edges[e] for e in e1 | e2}):
            return "merging two blocks yields a non-separable hypersubgraph"
    multi = {v for v in H.vertices if sum(1 for vs, _ in got if v in vs) >= 2}
    if set(dec.separating) != multi:
        return "separating list is not the set of vertices in two or more blocks"
    if brute_omega(H) == 1:
        for v in H.vertices:
            if brute_separating(H, v, p.edge_cap) != (v in multi):
                return f"{v} separating iff in several blocks fails"
    return None


@law("block-graph-tree", "the block graph of a connected hypergraph is a tree")
def _block_graph_tree(H, impl, p):
    if not _connected_clean(H):
        return SKIP
    T = impl.block_graph(H)
    dec = impl.blocks(H)
    expect_nodes = {Node("b", str(i)) for i in range(len(dec.blocks))} | {Node("v", v) for v in dec.separating}
    if set(T.nodes) != expect_nodes:
        return "block graph nodes are not blocks plus separating vertices"
    for i, B in enumerate(dec.blocks):
        for v in dec.separating:
            if (Node("v", v) in T.adj[Node("b", str(i))]) != B.has_vertex(v):
                return f"block graph link b{i}-{v} is wrong"
    links = sum(len(T.adj[x]) for x in T.nodes) // 2
    if links != len(T.nodes) - 1 or graph_component_count({x: set(T.adj[x]) for x in T.nodes}) != 1:
        return "block graph is not a tree"
    return None


@law("cycles-in-blocks", "each cycle's hypersubgraph lies in one block and is non-separable")
def _cycles_in_blocks(H, impl, p):
    if _empty_edges(H):
        return SKIP
    cycles = enumerate_cycles(H)
    if not cycles:
        return SKIP
    dec = impl.blocks(H)
    for C in cycles:
        if not any(set(C.edges) <= set(B.edge_ids) for B in dec.blocks):
            return f"cycle {C} spans several blocks"
        whole = _walks.associated_hypersubgraph(H, C)
        cut = _walks.associated_subhypergraph(H, C).child
        for K in (whole, cut):
            if not brute_nonseparable(K.vertex_set, dict(K.edges)):
                return f"hypersubgraph of cycle {C} is separable"
    return None


# duality

@law("dual-involution", "the dual of the dual is the original, and the dual transposes incidence")
def _dual_involution(H, impl, p):
    if H.m == 0:
        return SKIP
    D = impl.dual(H)
    if set(D.vertices) != set(H.edge_ids) or set(D.edge_ids) != set(H.vertices):
        return "dual swaps the wrong id sets"
    for v in H.vertices:
        for e in H.edge_ids:
            if (v in H.edges[e]) != (e in D.edges[v]):
                return f"flag ({v}, {e}) not transposed"
    DD = impl.dual(D)
    return None if DD == H else f"dual of dual is {DD!r}"


@law("dual-omega", "a hypergraph and its dual have the same number of components")
def _dual_omega(H, impl, p):
    if H.m == 0 or _empty_edges(H) or _isolated(H):
        return SKIP
    D = impl.dual(H)
    if brute_omega(D) != brute_omega(H) or impl.omega(D) != impl.omega(H):
        return f"omega {brute_omega(H)} vs dual omega {brute_omega(D)}"
    return None


@law("dual-deletion", "degrees, isolated/pendant vertices and deletions transfer to the dual")
def _dual_deletion(H, impl, p):
    if H.m == 0:
        return SKIP
    D = impl.dual(H)
    deg = degrees(H)
    for v in H.vertices:
        if deg[v] != len(D.edges[v]):
            return f"deg({v}) = {deg[v]} but dual edge has {len(D.edges[v])} vertices"
        if (deg[v] == 0) != (not D.edges[v]) or (deg[v] == 1) != (len(D.edges[v]) == 1):
            return f"isolated/pendant status of {v} does not transfer"
    if H.n >= 2 and not _empty_edges(H):
        for v in H.vertices:
            if not _singleton(H, v) and impl.dual(impl.delete_vertex(H, v)) != impl.delete_edge(D, v):
                return f"dual of H minus vertex {v} is not dual minus edge {v}"
    if H.m >= 2 and not _isolated(H):
        for e in H.edge_ids:
            if not _pendant_in(H, e) and impl.dual(impl.delete_edge(H, e)) != impl.delete_vertex(D, e):
                return f"dual of H minus edge {e} is not dual minus vertex {e}"
    return None


@law("dual-cuts", "cut edges, cut vertices and separating vertices correspond across the dual")
def _dual_cuts(H, impl, p):
    if H.m == 0 or _empty_edges(H) or _isolated(H):
        return SKIP
    D = impl.dual(H)
    is_cut_edge = lambda K, e: impl.classify_cut_edge(K, e) is not CutEdgeKind.NOT_CUT  # noqa: E731
    if H.m >= 2:
        for e in H.edge_ids:
            if not _pendant_in(H, e) and is_cut_edge(H, e) != impl.is_cut_vertex(D, e):
                return f"cut edge {e} does not match cut vertex {e} of the dual"
    if H.n >= 2:
        for v in H.vertices:
            if not _singleton(H, v) and impl.is_cut_vertex(H, v) != is_cut_edge(D, v):
                return f"cut vertex {v} does not match cut edge {v} of the dual"
    if brute_omega(H) == 1:
        for v in H.vertices:
            if impl.is_separating_vertex(H, v) != is_cut_edge(D, v):
                return f"separating vertex {v} does not match cut edge {v} of the dual"
        for e in H.edge_ids:
            if is_cut_edge(H, e) != impl.is_separating_vertex(D, e):
                return f"cut edge {e} does not match separating vertex {e} of the dual"
    return None


# cut-edge laws

@law("cut-vertex-bound", "deleting a qualifying cut vertex v raises the component count by at most deg(v) - 1")
def _cut_vertex_bound(H, impl, p):
    if H.n < 2 or H.m < 1 or _empty_edges(H) or _isolated(H):
        return SKIP
    hits = [v for v in H.vertices if not _singleton(H, v) and brute_is_cut_vertex(H, v)]
    if not hits:
        return SKIP
    deg, base = degrees(H), brute_omega(H)
    for v in hits:
        if not impl.cut_vertex_bound_check(H, v) or omega_without_vertex(H, v) > base + deg[v] - 1:
            return f"bound fails at {v}"
    return None


@law("uniform-no-cut", "a k-uniform hypergraph with all degrees divisible by k has no cut edges")
def _uniform_no_cut(H, impl, p):
    sizes = {len(vs) for vs in H.edges.values()}
    if len(sizes) != 1 or 0 in sizes:
        return SKIP
    k = sizes.pop()
    if any(d % k for d in degrees(H).values()):
        return SKIP
    if impl.cut_edges(H) or any(brute_cut_kind(H, e) != "NotCut" for e in H.edge_ids):
        return "found a cut edge"
    return None


@law("even-no-strong", "with all degrees and edge sizes even, cut edges meet components evenly and none is strong")
def _even_no_strong(H, impl, p):
    if any(d % 2 for d in degrees(H).values()) or any(len(vs) % 2 for vs in H.edges.values()):
        return SKIP
    for e, vs in H.edges.items():
        if brute_cut_kind(H, e) == "NotCut":
            continue
        if impl.classify_cut_edge(H, e) is CutEdgeKind.STRONG:
            return f"{e} classified Strong"
        for cls in _classes_without_edge(H, e):
            if len(cls & vs) % 2:
                return f"a component of H - {e} meets it in an odd number of vertices"
    return None


@law("cut-edge-cut-vertex", "a cut edge meeting a nontrivial component of H - e once forces a cut vertex")
def _cut_edge_cut_vertex(H, impl, p):
    checked = False
    for e, vs in H.edges.items():
        kind = brute_cut_kind(H, e)
        if kind == "NotCut":
            continue
        lone = any(len(c) >= 2 and len(c & vs) == 1 for c in _classes_without_edge(H, e))
        forced = kind == "Strong" and brute_omega(H) == 1 and len(vs) < H.n
        if lone or forced:
            checked = True
            if not any(brute_is_cut_vertex(H, v) for v in H.vertices) or not impl.cut_vertices(H):
                return f"cut edge {e} qualifies but H has no cut vertex"
    return None if checked else SKIP


@law("weak-in-nonseparable", "in a non-separable hypergraph every incidence articulation is a weak cut edge")
def _weak_in_nonseparable(H, impl, p):
    nonsep = brute_nonseparable(H.vertex_set, dict(H.edges))
    if impl.is_nonseparable(H) != nonsep:
        return f"is_nonseparable should be {nonsep}"
    if not nonsep or sum(1 for vs in H.edges.values() if len(vs) > 1) < 2:
        return SKIP
    got = impl.weak_cut_edge_in_nonseparable(H)
    art = brute_articulations(incidence_adjacency(H))
    if any(kind != "e" for kind, _ in art):
        return "a vertex node is an incidence articulation"
    if sorted(got) != sorted(name for _, name in art):
        return f"returned {got}, articulations are {sorted(art)}"
    if any(brute_cut_kind(H, e) != "Weak" for e in got):
        return "a returned edge is not a weak cut edge"
    return None


@law("nonsep-common-cycle", "non-separable without weak cut edges: any two vertices and any two edges share a cycle")
def _nonsep_common_cycle(H, impl, p):
    if H.n < 2 or H.m < 2 or any(vs == H.vertex_set for vs in H.edges.values()):
        return SKIP
    if not brute_nonseparable(H.vertex_set, dict(H.edges)):
        return SKIP
    if any(brute_cut_kind(H, e) == "Weak" for e in H.edge_ids):
        return SKIP
    covers = element_sets(enumerate_cycles(H))
    if not all_pairs_covered([Node("v", v) for v in H.vertices], covers):
        return "two vertices share no cycle"
    if not all_pairs_covered([Node("e", e) for e in H.edge_ids], covers):
        return "two edges share no cycle"
    return None


# incidence-graph correspondences

@law("incidence-deletion", "incidence graphs of deletions, of the dual, and of hypersubgraphs")
def _incidence_deletion(H, impl, p):
    G = incidence_graph(H)
    for e in H.edge_ids:
        if not incidence_graph(impl.delete_edge(H, e)).same_as(G.without(Node("e", e))):
            return f"incidence graph of H - {e} is not the incidence graph minus {e}"
    if H.n >= 2:
        for v in H.vertices:
            if impl.delete_vertex(H, v) != _derive.induced_subhypergraph(H, set(H.vertices) - {v}).child:
                return f"H minus {v} differs from the subhypergraph induced by the other vertices"
            if not _empty_edges(H) and not _singleton(H, v):
                if not incidence_graph(impl.delete_vertex(H, v)).same_as(G.without(Node("v", v))):
                    return f"incidence graph of H minus {v} is not the incidence graph minus {v}"
    if H.m:
        GD = incidence_graph(impl.dual(H))
        swap = lambda x: Node("e" if x.kind == "v" else "v", x.name)  # noqa: E731
        mapped = frozenset(frozenset(swap(x) for x in link) for link in G.links())
        if mapped != GD.links() or {swap(x) for x in G.nodes} != set(GD.nodes):
            return "swapping vertex and edge nodes does not map the incidence graph onto the dual's"
    for size in range(1, H.n + 1):
        for chosen in itertools.combinations(H.vertices, size):
            keep = frozenset(chosen)
            inside = [e for e, vs in H.edges.items() if vs <= keep]
            for r in range(len(inside) + 1):
                for es in itertools.combinations(inside, r):
                    sub = Hypergraph([v for v in H.vertices if v in keep], [(e, H.edges[e]) for e in es])
                    nodes = {Node("v", v) for v in keep} | {Node("e", e) for e in es}
                    induced = [(a, b) for a in nodes for b in G.adj[a] if b in nodes]
                    if incidence_graph(sub).links() != frozenset(frozenset(l) for l in induced):
                        return "hypersubgraph incidence graph is not the induced subgraph"
                    pairs = [(v, e) for e in es for v in H.edges[e]]
                    if recognize_hypersubgraph(H, nodes, pairs) != sub:
                        return "hypersubgraph not recognized from its incidence graph"
    return None


@law("path-existence", "find_path succeeds exactly for connected pairs and returns a path")
def _path_existence(H, impl, p):
    classes = brute_classes(H.vertices, H.edges.values())
    where = {v: i for i, c in enumerate(classes) for v in c}
    for u, v in itertools.product(H.vertices, repeat=2):
        P = impl.find_path(H, u, v)
        if where[u] != where[v]:
            if P is not None:
                return f"path found between disconnected {u} and {v}"
            continue
        if P is None or P.start != u or P.end != v or not impl.classify(H, P).is_path:
            return f"find_path({u}, {v}) returned {P}"
        if u == v and P.length != 0:
            return f"find_path({u}, {u}) is not the length-0 walk"
    return None


# walk laws (not in the default sweep)

@law("walk-incidence", "hypergraph walk classes agree with the incidence-graph walk classes", default=False)
def _walk_incidence(H, impl, p):
    G = incidence_graph(H)
    for W in alternating_sequences(H, p.walk_max_len):
        c = impl.classify(H, W)
        g = classify_incidence(G, to_incidence_walk(W))
        walk = g.is_walk and g.no_repeated_consecutive_v
        checks = {
            "walk": c.is_walk == walk,
            "closed": c.is_closed == (walk and g.is_closed),
            "trail": c.is_trail == g.is_trail,
            "path": c.is_path == g.is_path,
            "cycle": c.is_cycle == g.is_cycle,
            "strict trail": c.is_strict_trail == (g.is_trail and g.e_nodes_distinct),
            "pseudo path": c.is_pseudo_path == (g.is_trail and g.v_nodes_distinct),
            "pseudo cycle": c.is_pseudo_cycle == (g.is_trail and g.is_closed and g.v_nodes_distinct_cyclic),
            "strict => trail": not c.is_strict_trail or c.is_trail,
            "path => pseudo path and strict": not c.is_path or (c.is_pseudo_path and c.is_strict_trail),
            "pseudo path => trail": not c.is_pseudo_path or c.is_trail,
            "cycle => pseudo cycle and strict": not c.is_cycle or (c.is_pseudo_cycle and c.is_closed_strict_trail),
        }
        bad = [name for name, ok in checks.items() if not ok]
        if bad:
            return f"{W}: {', '.join(bad)} disagree"
    return None


def _rotate_once(W: Walk) -> Walk:
    body = W.tokens[2:-1] + W.tokens[:2]
    return Walk(body + (body[0],))


@law("dual-walks", "closed walks map to dual closed walks with the class swaps", default=False)
def _dual_walks(H, impl, p):
    if H.m == 0 or _empty_edges(H) or _isolated(H):
        return SKIP
    D = impl.dual(H)
    for W in enumerate_walks(H, p.walk_max_len, closed=True):
        es = W.edges
        if any(es[i] == es[(i + 1) % len(es)] for i in range(len(es))):
            try:
                impl.dual_closed_walk(H, W)
            except ConsecutiveEdgeRepeat:
                continue
            return f"{W} repeats an edge consecutively but was translated"
        c = impl.classify(H, W)
        WT = impl.dual_closed_walk(H, W)
        t = impl.classify(D, WT)
        if not (t.is_walk and t.is_closed):
            return f"{W} maps to {WT}, not a closed walk of the dual"
        rules = [
            (c.is_closed_trail, t.is_closed_trail, "closed trail"),
            (c.is_cycle, t.is_cycle, "cycle"),
            (c.is_closed_strict_trail, t.is_pseudo_cycle, "strict closed trail -> pseudo cycle"),
            (c.is_pseudo_cycle, t.is_closed_strict_trail, "pseudo cycle -> strict closed trail"),
        ]
        for before, after, name in rules:
            if before and not after:
                return f"{W} -> {WT}: {name} not preserved"
        if impl.dual_closed_walk(D, WT) != _rotate_once(W):
            return f"translating {W} twice does not give its rotation"
    return None


# equivalence laws (not in the default sweep)

def _min_two(H: Hypergraph) -> bool:
    return all(len(vs) >= 2 for vs in H.edges.values()) and all(d >= 2 for d in degrees(H).values())


def _pairwise(items, covers) -> bool:
    return all_pairs_covered(items, covers)


def _four_way(name: str, statements: list[bool]) -> Optional[str]:
    if len(set(statements)) > 1:
        return f"{name} statements disagree: {statements}"
    return None


@law("common-cycle", "no separating vertex and no cut edge iff all pairs share a cycle", default=False)
def _common_cycle(H, impl, p):
    if H.n < 2 or not _min_two(H) or brute_omega(H) != 1:
        return SKIP
    covers = element_sets(enumerate_cycles(H))
    vs = [Node("v", v) for v in H.vertices]
    es = [Node("e", e) for e in H.edge_ids]
    return _four_way("cycle", [
        not impl.separating_vertices(H) and not impl.cut_edges(H),
        _pairwise(vs + es, covers),
        _pairwise(vs, covers),
        _pairwise(es, covers),
    ])


def _strict_statements(K: Hypergraph, impl) -> list[bool]:
    covers = element_sets(enumerate_closed_trails(K, "strict"))
    vs = [Node("v", v) for v in K.vertices]
    es = [Node("e", e) for e in K.edge_ids]
    return [not impl.cut_edges(K), _pairwise(vs + es, covers), _pairwise(vs, covers), _pairwise(es, covers)]


@law("common-strict-trail", "no cut edge iff all pairs share a strict closed trail", default=False)
def _common_strict_trail(H, impl, p):
    if H.n < 2 or not _min_two(H) or brute_omega(H) != 1:
        return SKIP
    return _four_way("strict closed trail", _strict_statements(H, impl))


@law("common-pseudo-cycle", "no separating vertex iff all pairs share a pseudo cycle; agrees with the dual", default=False)
def _common_pseudo_cycle(H, impl, p):
    if H.m < 2 or not _min_two(H) or brute_omega(H) != 1:
        return SKIP
    pseudo = enumerate_closed_trails(H, "pseudo")
    covers = element_sets(pseudo)
    vs = [Node("v", v) for v in H.vertices]
    es = [Node("e", e) for e in H.edge_ids]
    own = [not impl.separating_vertices(H), _pairwise(vs + es, covers), _pairwise(es, covers), _pairwise(vs, covers)]
    D = impl.dual(H)
    for W in pseudo:
        if not impl.classify(D, impl.dual_closed_walk(H, W)).is_closed_strict_trail:
            return f"pseudo cycle {W} does not map to a strict closed trail of the dual"
    return _four_way("pseudo cycle (with dual)", own + _strict_statements(D, impl))


@law("isomorphism", "isomorphism is reflexive and survives relabeling and double duals", default=False)
def _isomorphism(H, impl, p):
    if not are_isomorphic(H, H):
        return "not isomorphic to itself"
    rv = {v: f"x{i}" for i, v in enumerate(reversed(H.vertices))}
    re_ = {e: f"f{i}" for i, e in enumerate(reversed(H.edge_ids))}
    K = Hypergraph(sorted(rv.values()), [(re_[e], {rv[v] for v in vs}) for e, vs in H.edges.items()])
    if not (are_isomorphic(H, K) and are_isomorphic(K, H)):
        return "relabeled copy not isomorphic"
    if H.m and not are_isomorphic(H, impl.dual(impl.dual(H))):
        return "double dual not isomorphic"
    return None


def resolve(names: Optional[Union[str, list[str]]]) -> list[str]:
    if names is None:
        return default_laws()
    if isinstance(names, str):
        names = [names]
    out: list[str] = []
    for item in names:
        for name in item.split(","):
            name = name.strip()
            if not name:
                continue
            if name == "default":
                out += default_laws()
            elif name == "cheap":
                out += cheap_laws()
            elif name == "all":
                out += list(REGISTRY)
            elif name in REGISTRY:
                out.append(name)
            else:
                raise KeyError(f"unknown law {name!r}")
    return list(dict.fromkeys(out))
