from __future__ import annotations

import io
import re
import subprocess
import sys

import networkx as nx
import pytest

from barnette4.cli import main
from barnette4.drawing import crossings, segments_cross, tutte_embedding
from barnette4.errors import NotThreeConnected
from barnette4.experiments import far_vertex_pair
from barnette4.planar_core import dual_graph, emit_rot1, parse_rot1
from barnette4.stein_duality import HamiltonCycle
from conftest import cached_instance, from_networkx


def run(argv, stdin: str = ""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv, out, err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def cube_file(tmp_path, cube):
    path = tmp_path / "cube.rot"
    path.write_text(emit_rot1(cube))
    return str(path)


def test_gen_octahedron():
    code, out, _ = run(["gen", "--ops", "0"])
    assert code == 0
    assert out.splitlines()[0] == "ROT1 6 12"


def test_gen_is_deterministic():
    a = run(["gen", "--ops", "7", "--seed", "3"])[1]
    b = run(["gen", "--ops", "7", "--seed", "3"])[1]
    assert a == b and a.startswith("ROT1 20 54\n")


def test_gen_history_replay(tmp_path):
    _, hist, _ = run(["gen", "--ops", "5", "--seed", "9", "--emit", "alpha1"])
    path = tmp_path / "h.alpha1"
    path.write_text(hist)
    direct = run(["gen", "--ops", "5", "--seed", "9"])[1]
    assert run(["gen", "--history", str(path)])[1] == direct


def test_verify_bound_on_cube(cube_file):
    code, out, _ = run(["verify", "--theorem", "1.1", "--input", cube_file])
    assert code == 0
    assert "pass=true" in out and "oracle=6" in out


def test_verify_chosen_edge_on_cube(cube_file, cube):
    u, v = cube.faces.walks[0][0]
    code, out, _ = run(["verify", "--theorem", "1.2", "--input", cube_file,
                        "--faces", "1", "--chosen", f"{u}-{v}"])
    assert code == 0 and "pass=true" in out


def test_verify_reads_stdin(cube):
    code, out, _ = run(["verify", "--theorem", "1.1"], emit_rot1(cube))
    assert code == 0


@pytest.mark.parametrize("text", ["ROT 8 12\n", "ROT1 3 3\n1: 2 3\n"])
def test_malformed_input_exit_2(text):
    code, _, err = run(["classify"], text)
    assert code == 2 and err.startswith("error:")


def test_unknown_flag_exit_2():
    assert run(["gen", "--bogus"])[0] == 2
    assert run([])[0] == 2


def test_pipeline_failure_exit_1(tmp_path):
    # the icosahedron is not in the input family
    path = tmp_path / "ico.rot"
    path.write_text(emit_rot1(dual_graph(from_networkx(nx.icosahedral_graph()))[0]))
    assert run(["verify", "--theorem", "1.1", "--input", str(path)])[0] == 1


def test_classify_and_color(octa):
    code, out, _ = run(["classify"], emit_rot1(octa))
    assert code == 0 and "is_E4=true" in out
    code, out, _ = run(["color"], emit_rot1(octa))
    assert out.splitlines() == ["1: R", "2: R", "3: B", "4: B", "5: W", "6: W"]


def test_construct_enumerates_three_covers(octa):
    code, out, _ = run(["construct", "--mode", "thm13", "--cycle"], emit_rot1(octa))
    assert code == 0
    assert out.count("choices:") == 3 and out.count("CYC1 8") == 3


def test_construct_single_choice(octa):
    code, out, _ = run(["construct", "--mode", "thm13", "--choices", "3:PATH:1"], emit_rot1(octa))
    assert code == 0 and out.count("choices:") == 1
    assert run(["construct", "--mode", "thm13", "--choices", "1:STAR"], emit_rot1(octa))[0] == 2


def test_construct_far_seeds(tmp_path):
    g_text = run(["gen", "--ops", "14", "--seed", "0"])[1]
    g = parse_rot1(g_text)
    a, b = far_vertex_pair(g)
    n = f"{a}:{g.neighbors(a)[0]},{b}:{g.neighbors(b)[0]}"
    code, out, _ = run(["construct", "--mode", "thm14", "--L", f"{a},{b}", "--n", n, "--cycle"], g_text)
    assert code == 0 and "CYC1" in out
    assert run(["construct", "--mode", "thm14", "--L", f"{a}", "--n", n], g_text)[0] == 2


def test_oracle_subcommand(cube, octa):
    code, out, _ = run(["oracle", "--what", "cycles", "--list"], emit_rot1(cube))
    assert code == 0 and out.startswith("hamilton_cycles=6\n") and out.count("CYC1") == 6
    code, out, _ = run(["oracle", "--what", "covers"], emit_rot1(octa))
    assert out == "acyclic_pairs=6\ntree_pairs=6\n"
    assert run(["oracle", "--cap", "4"], emit_rot1(cube))[0] == 1


def test_dot_overlay_marks_cycle_edges(tmp_path, cube):
    h = sorted(run(["oracle", "--list"], emit_rot1(cube))[1].split("CYC1")[1:])[0]
    cyc = tmp_path / "c.cyc1"
    cyc.write_text("CYC1" + h)
    src = tmp_path / "cube.rot"
    src.write_text(emit_rot1(cube))
    code, out, _ = run(["export", "--format", "dot", "--input", str(src), "--cycle", str(cyc)])
    assert code == 0
    assert out.count(" -- ") == 12
    assert out.count('[color="red", penwidth=3]') == 8
    assert HamiltonCycle.from_text(cyc.read_text()).edges


def test_svg_of_octahedron(octa):
    code, out, _ = run(["export", "--format", "svg", "--colour"], emit_rot1(octa))
    assert code == 0
    assert out.count("<circle") == 6 and out.count("<line") == 12
    pts = [(float(x), float(y)) for x, y in re.findall(r'<circle cx="([\d.]+)" cy="([\d.]+)"', out)]
    assert len(set(pts)) == 6


def test_tutte_embedding_is_crossing_free():
    g, _, _ = cached_instance(12, 5)
    for h in (g, dual_graph(g)[0]):
        pos = tutte_embedding(h)
        assert not crossings(h, pos)
        # interior vertices sit at the mean of their neighbours
        outer = set(h.faces.vertices_of(0))
        for v in h.vertices:
            if v not in outer:
                mx = sum(pos[w][0] for w in h.neighbors(v)) / h.degree(v)
                assert abs(mx - pos[v][0]) < 1e-9


def test_tutte_needs_3_connected(c4):
    with pytest.raises(NotThreeConnected):
        tutte_embedding(c4)


def test_segments_cross():
    assert segments_cross((0, 0), (1, 1), (0, 1), (1, 0))
    assert not segments_cross((0, 0), (1, 1), (1, 1), (2, 0))
    assert not segments_cross((0, 0), (1, 0), (0, 1), (1, 1))


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "barnette4", "gen", "--ops", "1"],
                         capture_output=True, text=True, check=True)
    assert res.stdout.startswith("ROT1 8 18\n")
