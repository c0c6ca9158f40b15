"""One test per acceptance criterion.  Run with ``pytest tests/test_acceptance.py``;
the terminal summary lists a PASS/FAIL line for each."""

import subprocess
import sys
import time

import pytest

from hypercut.blocks import blocks
from hypercut.connectivity import CutEdgeKind, classify_cut_edge, is_cut_vertex, is_separating_vertex, omega
from hypercut.constructions import regular_with_weak_cut_edge, two_vertex_example
from hypercut.core import degrees, is_regular
from hypercut.derive import delete_edge
from hypercut.fileformat import parse
from hypercut.oracle import EnumSpace, Params, cheap_laws, default_laws, verify

C1_LAWS = [
    "handshake", "omega-incidence", "cut-incidence", "cut-edge-bound", "strong-cut-cycles", "separating-brute",
    "blocks", "block-graph-tree", "dual-involution", "dual-omega", "dual-deletion", "dual-cuts",
]
C7_LAWS = ["common-cycle", "common-strict-trail", "common-pseudo-cycle"]


def _assert_clean(report, laws):
    summary = report.render()
    assert report.ok, summary
    assert report.instances == report.expected_instances
    for name in laws:
        assert report.tallies[name].checked > 0, f"{name} never applied\n{summary}"


@pytest.mark.criterion("C1", "default law sweep over n<=3, m<=4 (4,681+ instances), 0 failures, < 5 min")
def test_c1_default_sweep():
    assert set(C1_LAWS) <= set(default_laws())
    start = time.monotonic()
    report = verify(EnumSpace(3, 4))
    elapsed = time.monotonic() - start
    assert report.instances >= 4681
    _assert_clean(report, default_laws())
    assert elapsed < 300


@pytest.mark.criterion("C2", "cheap law sweep over n<=4, m<=4 (69,905+ instances), 0 failures, < 10 min")
def test_c2_extended_cheap_sweep():
    start = time.monotonic()
    report = verify(EnumSpace(4, 4), cheap_laws())
    elapsed = time.monotonic() - start
    assert report.instances >= 69905
    _assert_clean(report, cheap_laws())
    assert elapsed < 600


@pytest.mark.criterion("C3", "even-regular family with a weak cut edge, n=2 and n=4")
@pytest.mark.parametrize("n", [2, 4])
def test_c3_regular_family(n):
    H = regular_with_weak_cut_edge(n)
    target = f"e{n + 1}"
    assert is_regular(H, n)
    assert all(d % 2 == 0 for d in degrees(H).values())
    assert classify_cut_edge(H, target) is CutEdgeKind.WEAK
    assert omega(delete_edge(H, target)) == 2


@pytest.mark.criterion("C4", "two-vertex example: v separates but is not a cut vertex; two blocks")
def test_c4_two_vertex_example():
    H = two_vertex_example()
    assert is_separating_vertex(H, "v") is True
    assert is_cut_vertex(H, "v") is False
    found = {(B.vertex_set, frozenset(B.edge_ids)) for B in blocks(H).blocks}
    assert found == {(frozenset({"v"}), frozenset({"e1"})), (frozenset({"u", "v"}), frozenset({"e2"}))}


@pytest.mark.criterion("C5", "walk taxonomy agrees with incidence-graph classification, n<=3, m<=2, length<=4")
def test_c5_walk_taxonomy():
    report = verify(EnumSpace(3, 2), ["walk-incidence"], params=Params(walk_max_len=4))
    _assert_clean(report, ["walk-incidence"])


@pytest.mark.criterion("C6", "dual closed-walk transforms, n<=3, m<=3, no empty edges, length<=4")
def test_c6_dual_walks():
    report = verify(EnumSpace(3, 3, allow_empty_edges=False), ["dual-walks"], params=Params(walk_max_len=4))
    _assert_clean(report, ["dual-walks"])


@pytest.mark.criterion("C7", "common cycle / strict trail / pseudo cycle equivalences, n<=4, m<=4")
def test_c7_equivalences():
    report = verify(EnumSpace(4, 4), C7_LAWS)
    _assert_clean(report, C7_LAWS)


@pytest.mark.criterion("C8", "verify against the all-cuts-strong mutant exits 4 with a hypergraph witness")
def test_c8_mutation_sanity():
    proc = subprocess.run(
        [sys.executable, "-m", "hypercut.cli", "verify", "--max-vertices", "3", "--max-edges", "3",
         "--mutant", "all-cuts-strong"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 4
    assert "counterexample for" in proc.stdout
    body = proc.stdout.split("counterexample for", 1)[1].split("\n", 1)[1].split("\n\n", 1)[0]
    witness = "\n".join(ln for ln in body.splitlines() if ln.startswith(("vertices:", "edge ")))
    assert witness.startswith("vertices:")
    parse(witness)


@pytest.mark.criterion("C9", "dual round-trip, byte-identical reruns, golden files for the n=2 fixture")
def test_c9_cli_determinism(fixtures_dir):
    source = fixtures_dir / "weak_cut_n2.hg"

    def cli(*args, stdin=None):
        proc = subprocess.run([sys.executable, "-m", "hypercut.cli", *args], input=stdin,
                              capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        return proc.stdout

    once = cli("dual", str(source))
    assert parse(cli("dual", "-", stdin=once)) == parse(source.read_text())
    for args in (["dual"], ["cut-edges"], ["blocks"], ["incidence", "--dot"], ["stats", "--json"]):
        assert cli(*args, str(source)) == cli(*args, str(source))
    golden = fixtures_dir / "golden"
    assert cli("cut-edges", str(source)) == (golden / "weak_cut_n2.cut-edges.txt").read_text()
    assert cli("blocks", str(source)) == (golden / "weak_cut_n2.blocks.txt").read_text()
    assert once == (golden / "weak_cut_n2.dual.hg").read_text()
    assert "e3: Weak" in cli("cut-edges", str(source)).splitlines()
