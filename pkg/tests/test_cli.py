import io
import json
import subprocess
import sys

import pytest

from hypercut.cli import run
from hypercut.fileformat import parse

GOLDEN = [
    ("weak_cut_n2.stats.txt", ["stats"]),
    ("weak_cut_n2.components.txt", ["components"]),
    ("weak_cut_n2.cut-edges.txt", ["cut-edges"]),
    ("weak_cut_n2.cut-edges.json", ["cut-edges", "--json"]),
    ("weak_cut_n2.cut-vertices.txt", ["cut-vertices"]),
    ("weak_cut_n2.separating.txt", ["separating"]),
    ("weak_cut_n2.blocks.txt", ["blocks"]),
    ("weak_cut_n2.block-graph.dot", ["block-graph", "--dot"]),
    ("weak_cut_n2.incidence.dot", ["incidence", "--dot"]),
    ("weak_cut_n2.line-graph-1.dot", ["line-graph", "--level", "1", "--dot"]),
    ("weak_cut_n2.dual.hg", ["dual"]),
]


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("golden, argv", GOLDEN, ids=[g for g, _ in GOLDEN])
def test_golden_outputs(fixtures_dir, golden, argv):
    code, out, _ = call(argv + [str(fixtures_dir / "weak_cut_n2.hg")])
    assert code == 0
    assert out == (fixtures_dir / "golden" / golden).read_text()


def test_weak_tag_listed(fixtures_dir):
    _, out, _ = call(["cut-edges", str(fixtures_dir / "weak_cut_n2.hg")])
    assert "e3: Weak" in out.splitlines()


def test_two_vertex_blocks(fixtures_dir):
    code, out, _ = call(["blocks", str(fixtures_dir / "two_vertex.hg")])
    assert code == 0
    assert out == (fixtures_dir / "golden" / "two_vertex.blocks.txt").read_text()
    assert sum(ln.startswith("block ") for ln in out.splitlines()) == 2 and "separating: v" in out


def test_classify_from_stdin():
    code, out, _ = call(["classify", "--walk", "a e1 b", "-"], "vertices: a b\nedge e1: a b\n")
    assert (code, out) == (0, "path\n")


def test_find_path_and_json():
    text = "vertices: a b c\nedge e1: a b\nedge e2: b c\n"
    assert call(["find-path", "a", "c", "-"], text)[1] == "a e1 b e2 c\n"
    code, out, _ = call(["stats", "--json", "-"], text)
    data = json.loads(out)
    assert code == 0 and data["rank"] == 2 and list(data) == sorted(data)


def test_empty_listing():
    assert call(["cut-edges", "-"], "vertices: a b\nedge e1: a\nedge e2: a b\nedge e3: a b\n")[1] == "(none)\n"


def test_dual_roundtrip(fixtures_dir):
    source = fixtures_dir / "weak_cut_n2.hg"
    _, once, _ = call(["dual", str(source)])
    _, twice, _ = call(["dual", "-"], once)
    assert parse(twice) == parse(source.read_text())


@pytest.mark.parametrize("argv, stdin, code", [
    ([], "", 1),
    (["stats"], "", 1),
    (["stats", "/nonexistent/file.hg"], "", 1),
    (["line-graph", "--level", "x", "-"], "vertices: a\n", 1),
    (["stats", "-"], "edge e1: a\n", 2),
    (["separating", "-"], "vertices: a b\n", 3),
    (["line-graph", "--level", "0", "-"], "vertices: a\n", 3),
    (["find-path", "a", "q", "-"], "vertices: a\n", 3),
    (["verify", "--max-vertices", "2", "--max-edges", "1", "--laws", "nope"], "", 1),
])
def test_exit_codes(argv, stdin, code):
    assert call(argv, stdin)[0] == code


def test_parse_error_is_positioned():
    code, _, err = call(["stats", "-"], "vertices: a\nedge e1: b\n")
    assert code == 2 and err.startswith("<stdin>:2:")


def test_verify_exit_codes():
    assert call(["verify", "--max-vertices", "2", "--max-edges", "2"])[0] == 0
    code, out, _ = call(["verify", "--max-vertices", "3", "--max-edges", "2", "--laws", "cut-incidence",
                         "--mutant", "all-cuts-strong"])
    assert code == 4 and "vertices:" in out and "result: FAILURES" in out


def test_console_entry_point(fixtures_dir):
    proc = subprocess.run([sys.executable, "-m", "hypercut.cli", "cut-edges", str(fixtures_dir / "weak_cut_n2.hg")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "e2: Strong\ne3: Weak\n"
