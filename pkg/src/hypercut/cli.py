"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 parse error, 3 precondition violation,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from .blocks import block_graph, blocks
from .connectivity import components, cut_edges, cut_vertices, gamma, separating_vertices
from .core import Hypergraph, corank, degrees, is_simple, rank, sorted_ids
from .derive import dual
from .dot import block_graph_dot, incidence_dot, line_graph_dot
from .errors import HypergraphError, ParseError
from .fileformat import emit, parse
from .incgraph import line_graph, node_key
from .walks import Walk, classify, find_path

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _lines(items: Sequence[str]) -> str:
    return "".join(f"{x}\n" for x in items) if items else "(none)\n"


# one function per subcommand: (hypergraph, args) -> text

def _stats(H: Hypergraph, args) -> str:
    deg = degrees(H)
    sizes = {len(vs) for vs in H.edges.values()}
    degs = set(deg.values())
    info = {
        "vertices": H.n,
        "edges": H.m,
        "rank": rank(H) if H.m else None,
        "corank": corank(H) if H.m else None,
        "degrees": {v: deg[v] for v in sorted_ids(H.vertices)},
        "simple": is_simple(H),
        "uniform": sizes.pop() if len(sizes) == 1 else None,
        "regular": degs.pop() if len(degs) == 1 else None,
    }
    if args.json:
        return _dump(info)
    na = lambda x: "n/a" if x is None else str(x)  # noqa: E731
    return (
        f"vertices: {H.n}\nedges: {H.m}\nrank: {na(info['rank'])}\ncorank: {na(info['corank'])}\n"
        f"degrees: {' '.join(f'{v}={d}' for v, d in info['degrees'].items())}\n"
        f"simple: {'yes' if info['simple'] else 'no'}\n"
        f"uniform: {'no' if info['uniform'] is None else 'yes (' + str(info['uniform']) + ')'}\n"
        f"regular: {'no' if info['regular'] is None else 'yes (' + str(info['regular']) + ')'}\n"
    )


def _components(H: Hypergraph, args) -> str:
    part = components(H)
    rows = []
    for i, members in enumerate(part.classes):
        es = sorted_ids(e for e, j in part.edge_assignment.items() if j == i)
        rows.append({"vertices": sorted_ids(members), "edges": es})
    if args.json:
        return _dump({"omega": part.omega, "components": rows, "stray_empty_edges": list(part.stray_empty_edges)})
    out = [f"omega: {part.omega}"]
    for i, row in enumerate(rows, start=1):
        out.append(f"component {i}: vertices {' '.join(row['vertices'])}; edges {' '.join(row['edges']) or '-'}")
    if part.stray_empty_edges:
        out.append("stray empty edges: " + " ".join(part.stray_empty_edges))
    return "\n".join(out) + "\n"


def _cut_edges(H: Hypergraph, args) -> str:
    found = cut_edges(H)
    if args.json:
        return _dump({"cut_edges": [{"edge": e, "kind": str(k)} for e, k in found]})
    return _lines([f"{e}: {k}" for e, k in found])


def _cut_vertices(H: Hypergraph, args) -> str:
    found = cut_vertices(H)
    return _dump({"cut_vertices": found}) if args.json else _lines(found)


def _separating(H: Hypergraph, args) -> str:
    found = separating_vertices(H)
    return _dump({"separating_vertices": found}) if args.json else _lines(found)


def _blocks(H: Hypergraph, args) -> str:
    dec = blocks(H)
    rows = [{"vertices": sorted_ids(B.vertices), "edges": sorted_ids(B.edge_ids)} for B in dec.blocks]
    if args.json:
        return _dump({"blocks": rows, "separating": list(dec.separating)})
    out = [
        f"block {i}: vertices {' '.join(r['vertices'])}; edges {' '.join(r['edges']) or '-'}"
        for i, r in enumerate(rows, start=1)
    ]
    out.append("separating: " + (" ".join(dec.separating) or "(none)"))
    return "\n".join(out) + "\n"


def _block_graph(H: Hypergraph, args) -> str:
    T = block_graph(H)
    if args.dot:
        return block_graph_dot(H)
    links = sorted(
        (sorted(link, key=node_key) for link in T.links()), key=lambda p: (node_key(p[0]), node_key(p[1]))
    )
    pairs = [(f"{a.kind}:{a.name}", f"{b.kind}:{b.name}") for a, b in links]
    if args.json:
        return _dump({"nodes": [str(x) for x in sorted(T.nodes, key=node_key)], "links": [list(p) for p in pairs]})
    nodes = " ".join(str(x) for x in sorted(T.nodes, key=node_key))
    return f"nodes: {nodes}\n" + "".join(f"{a} -- {b}\n" for a, b in pairs)


def _incidence(H: Hypergraph, args) -> str:
    if args.dot:
        return incidence_dot(H)
    G = gamma(H)
    vpos = {v: i for i, v in enumerate(sorted_ids(H.vertices))}
    epos = {e: i for i, e in enumerate(sorted_ids(H.edge_ids))}
    pairs = sorted(G.pairs(), key=lambda p: (vpos[p[0]], epos[p[1]]))
    if args.json:
        return _dump({"links": [[v, e] for v, e in pairs]})
    return _lines([f"v:{v} -- e:{e}" for v, e in pairs])


def _line_graph(H: Hypergraph, args) -> str:
    L = line_graph(H, args.level)
    if args.dot:
        return line_graph_dot(H, args.level)
    order = {e: i for i, e in enumerate(sorted_ids(L.nodes))}
    links = sorted((tuple(sorted(l, key=order.__getitem__)) for l in L.links()), key=lambda p: (order[p[0]], order[p[1]]))
    if args.json:
        return _dump({"level": args.level, "nodes": sorted_ids(L.nodes), "links": [list(p) for p in links]})
    return _lines([f"{a} -- {b}" for a, b in links])


def _dual(H: Hypergraph, args) -> str:
    return emit(dual(H))


def _classify(H: Hypergraph, args) -> str:
    W = Walk.parse(args.walk)
    if not W.tokens:
        raise UsageError("--walk needs at least one token")
    c = classify(H, W)
    if args.json:
        fields = {k: getattr(c, k) for k in c.__dataclass_fields__}
        return _dump(dict(fields, name=c.name, closed=c.closed))
    return c.name + "\n"


def _find_path(H: Hypergraph, args) -> str:
    P = find_path(H, args.u, args.v)
    if args.json:
        return _dump({"path": None if P is None else list(P.tokens)})
    return "(none)\n" if P is None else f"{P}\n"


COMMANDS = {
    "stats": (_stats, "vertex/edge counts, rank, corank, degrees, simple/uniform/regular"),
    "components": (_components, "connected components"),
    "cut-edges": (_cut_edges, "cut edges tagged Strong or Weak"),
    "cut-vertices": (_cut_vertices, "cut vertices"),
    "separating": (_separating, "separating vertices (connected input without empty edges)"),
    "blocks": (_blocks, "block decomposition"),
    "block-graph": (_block_graph, "block graph (connected input without empty edges)"),
    "incidence": (_incidence, "incidence graph"),
    "line-graph": (_line_graph, "level-L line graph"),
    "dual": (_dual, "dual hypergraph in file format"),
    "classify": (_classify, "classify a walk"),
    "find-path": (_find_path, "a shortest path between two vertices"),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    parser = _Parser(prog="hypercut", description="Hypergraph connectivity: cuts, blocks, walks and verification.",
                     parents=[common])
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    for name, (_, text) in COMMANDS.items():
        p = sub.add_parser(name, help=text, description=text, parents=[common])
        if name == "find-path":
            p.add_argument("u")
            p.add_argument("v")
        p.add_argument("file", help="hypergraph file, or - for standard input")
        if name in ("block-graph", "incidence", "line-graph"):
            p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
        if name == "line-graph":
            p.add_argument("--level", type=int, default=1, help="minimum shared vertices (default 1)")
        if name == "classify":
            p.add_argument("--walk", required=True, help='alternating tokens, e.g. "a e1 b"')
    p = sub.add_parser("verify", help="check the law suite on every small hypergraph", parents=[common])
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--max-edges", type=int)
    p.add_argument("--laws", nargs="+", help="law names, comma lists, or default/cheap/all")
    p.add_argument("--no-empty-edges", action="store_true", help="leave out instances with empty edges")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--mutant", help="run against a deliberately broken implementation")
    p.add_argument("--walk-max-len", type=int, default=4)
    p.add_argument("--max-instances", type=int, default=500_000)
    p.add_argument("--witnesses", type=int, default=1, help="counterexamples kept per law")
    p.add_argument("--list-laws", action="store_true", help="list known laws and exit")
    return parser


def _read(path: str, stdin: TextIO) -> tuple[str, str]:
    if path == "-":
        return stdin.read(), "<stdin>"
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read(), path
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _verify(args, out: TextIO) -> int:
    from .oracle import EnumSpace, Params, REGISTRY, verify

    if args.list_laws:
        for name, entry in REGISTRY.items():
            tags = ",".join(t for t, on in (("default", entry.default), ("cheap", entry.cheap)) if on)
            out.write(f"{name} [{tags or 'extra'}]: {entry.summary}\n")
        return EXIT_OK
    if args.max_vertices is None or args.max_edges is None:
        raise UsageError("verify needs --max-vertices and --max-edges")
    if args.max_vertices < 1 or args.max_edges < 0 or args.jobs < 1:
        raise UsageError("need --max-vertices >= 1, --max-edges >= 0 and --jobs >= 1")
    params = Params(walk_max_len=args.walk_max_len, max_instances=args.max_instances, witness_limit=args.witnesses)
    space = EnumSpace(args.max_vertices, args.max_edges, not args.no_empty_edges)
    try:
        report = verify(space, args.laws, mutant=args.mutant, jobs=args.jobs, params=params)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    out.write(_dump(report.to_dict()) if args.json else report.render())
    return EXIT_OK if report.ok else EXIT_VERIFY


def run(argv: Optional[Sequence[str]] = None, stdin: TextIO = sys.stdin, stdout: TextIO = sys.stdout,
        stderr: TextIO = sys.stderr) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError(build_parser().format_usage())
        if args.command == "verify":
            return _verify(args, stdout)
        text, where = _read(args.file, stdin)
        try:
            H = parse(text)
        except ParseError as exc:
            stderr.write(f"{where}:{exc.line}:{exc.column}: {exc.reason}\n")
            return EXIT_PARSE
        stdout.write(COMMANDS[args.command][0](H, args))
        return EXIT_OK
    except UsageError as exc:
        stderr.write(str(exc).rstrip("\n") + "\n")
        return EXIT_USAGE
    except HypergraphError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
