import re

from hypercut import build
from hypercut.dot import block_graph_dot, incidence_dot, line_graph_dot


def _counts(text):
    nodes = [ln for ln in text.splitlines() if re.match(r'\s+"[^"]+" \[', ln)]
    links = [ln for ln in text.splitlines() if " -- " in ln]
    return len(nodes), len(links)


def test_single_edge_incidence(single_edge):
    text = incidence_dot(single_edge)
    assert text.startswith("graph incidence {") and text.rstrip().endswith("}")
    assert _counts(text) == (3, 2)
    assert "shape=ellipse" in text and "shape=box" in text


def test_block_graph_of_path():
    path = build(list("abcd"), [("e1", "ab"), ("e2", "bc"), ("e3", "cd")])
    assert _counts(block_graph_dot(path)) == (5, 4)


def test_cut_annotations(weak_cut_n2):
    text = incidence_dot(weak_cut_n2)
    assert '"e:e3" [label="e3 (Weak)", shape=box, color="red"' in text
    assert '"v:v1" [label="v1", shape=ellipse, color="red"' in text
    assert 'color="red"' in line_graph_dot(weak_cut_n2, 1)


def test_deterministic(weak_cut_n2):
    rebuilt = build(list(reversed(weak_cut_n2.vertices)), list(reversed(list(weak_cut_n2.edges.items()))))
    for render in (incidence_dot, block_graph_dot, line_graph_dot):
        assert render(weak_cut_n2) == render(weak_cut_n2) == render(rebuilt)
