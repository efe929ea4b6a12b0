from __future__ import annotations

import itertools
import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from barnette4.alpha_generator import octahedron, split_vertex
from barnette4.e4_membership import tricolouring
from barnette4.errors import CapExceeded, DistanceViolation, PipelineFailure
from barnette4.experiments import far_face_pairs
from barnette4.oracle import (
    bound_ceiling,
    count_orbits,
    dual_side_bound,
    enumerate_cover_pairs,
    enumerate_hamilton_cycles,
    hamilton_lower_bound,
    map_automorphisms,
    verify_theorem11,
    verify_theorem12,
)
from barnette4.planar_core import dual_graph
from barnette4.tree_pair import is_acyclic
from conftest import cached_instance, to_networkx
from test_e4_membership import NO_DEGREE4_SPLITS


def brute_hamilton_count(p) -> int:
    """Count Hamilton cycles as simple cycles of full length (networkx)."""
    h = to_networkx(p)
    return sum(1 for c in nx.simple_cycles(h, length_bound=p.n) if len(c) == p.n)


def brute_cover_count(g) -> tuple[int, int]:
    """Unordered partitions into two induced forests, by subset enumeration."""
    acyclic = trees = 0
    V = frozenset(g.vertices)
    h = to_networkx(g)
    for r in range(1, g.n):
        for X in itertools.combinations(sorted(V - {1}), r - 1):
            X = frozenset(X) | {1}
            Y = V - X
            if nx.is_forest(h.subgraph(X)) and nx.is_forest(h.subgraph(Y)):
                acyclic += 1
                trees += nx.is_tree(h.subgraph(X)) and nx.is_tree(h.subgraph(Y))
    return acyclic, trees


def test_known_hamilton_counts(cube, k4, dodecahedron):
    assert len(enumerate_hamilton_cycles(cube)) == 6
    assert len(enumerate_hamilton_cycles(k4)) == 3
    assert len(enumerate_hamilton_cycles(dodecahedron)) == 30


def test_cycle_graph_has_one_hamilton_cycle(c4):
    assert len(enumerate_hamilton_cycles(c4)) == 1


@pytest.mark.parametrize("ops,seed", [(1, 0), (2, 5), (3, 1)])
def test_hamilton_count_matches_networkx(ops, seed):
    g, _, _ = cached_instance(ops, seed)
    p, _ = dual_graph(g)
    assert len(enumerate_hamilton_cycles(p)) == brute_hamilton_count(p)


def test_hamilton_cap():
    g, _, _ = cached_instance(17, 0)
    p, _ = dual_graph(g)
    with pytest.raises(CapExceeded):
        enumerate_hamilton_cycles(p, cap=p.n - 1)
    with pytest.raises(CapExceeded):
        enumerate_hamilton_cycles(p, limit=2)


def test_octahedron_cover_pairs(octa):
    res = enumerate_cover_pairs(octa, keep=True)
    assert (res.acyclic_pairs, res.tree_pairs) == (6, 6)
    assert brute_cover_count(octa) == (6, 6)
    for X, Y in res.pairs:
        assert is_acyclic(octa, X) and is_acyclic(octa, Y)


@pytest.mark.parametrize("ops,seed", [(1, 0), (2, 3)])
def test_cover_pairs_match_subset_enumeration(ops, seed):
    g, _, _ = cached_instance(ops, seed)
    res = enumerate_cover_pairs(g)
    assert (res.acyclic_pairs, res.tree_pairs) == brute_cover_count(g)
    # tree pairs of G match Hamilton cycles of its dual
    p, _ = dual_graph(g)
    assert res.tree_pairs == len(enumerate_hamilton_cycles(p))


def test_cube_automorphisms(cube):
    autos = map_automorphisms(cube)
    assert len(autos) == 48
    assert count_orbits(enumerate_hamilton_cycles(cube), autos) == 1


def test_cube_bound(cube, octa):
    b = hamilton_lower_bound(cube)
    assert b == pytest.approx(3 ** 0.75, abs=1e-12)
    assert round(b, 4) == 2.2795
    assert bound_ceiling(b) == 3
    assert dual_side_bound(octa) == pytest.approx(b)


def test_bound_ceiling_tolerates_rounding():
    assert bound_ceiling(3.0 + 1e-12) == 3
    assert bound_ceiling(3.0 + 1e-6) == 4


@pytest.mark.parametrize("ops,seed", [(1, 0), (5, 0), (12, 3)])
def test_bound_formula(ops, seed):
    g, _, _ = cached_instance(ops, seed)
    p, _ = dual_graph(g)
    lengths = [len(w) for w in p.faces.walks]
    expected = 3 ** (2 * len(lengths) / max(lengths) ** 2)
    assert hamilton_lower_bound(p) == pytest.approx(expected, rel=1e-12)
    # faces of P are vertices of G and face lengths are degrees
    assert dual_side_bound(g) == pytest.approx(expected, rel=1e-12)


def test_cube_report(cube):
    rep = verify_theorem11(cube)
    assert rep.passed and rep.bound_pass and rep.oracle_pass
    assert (rep.k_size, rep.choice_vectors, rep.constructive, rep.collisions) == (1, 3, 3, 0)
    assert (rep.oracle, rep.oracle_orbits) == (6, 1)
    text = rep.to_text()
    assert "constructive=3\n" in text and "pass=true\n" in text
    assert "bound=2.279507\n" in text


def test_parallel_run_matches_serial():
    g, _, _ = cached_instance(9, 4)
    p, _ = dual_graph(g)
    a = verify_theorem11(p, oracle_cap=0)
    b = verify_theorem11(p, oracle_cap=0, jobs=2)
    assert a == b


def test_report_needs_quad_two_factor():
    g, col = octahedron()
    for s, v, t in NO_DEGREE4_SPLITS:
        g, col = split_vertex(g, col, s, v, t)
    p, _ = dual_graph(g)
    with pytest.raises(PipelineFailure) as info:
        verify_theorem11(p)
    assert info.value.stage == "precondition"


def test_chosen_edges_without_faces(cube):
    rep = verify_theorem12(cube, [], {})
    assert rep.passed and rep.cycle is not None


@pytest.mark.parametrize("i", range(4))
def test_single_cube_face(cube, i):
    f = 0
    e = cube.faces.walks[f][i]
    rep = verify_theorem12(cube, [f], {f: e})
    assert rep.passed
    others = {tuple(sorted(d)) for d in cube.faces.walks[f]} - {tuple(sorted(e))}
    assert others <= set(rep.cycle.edges)
    assert tuple(sorted(e)) not in rep.cycle.edges


def test_close_faces_rejected(cube):
    with pytest.raises(DistanceViolation):
        verify_theorem12(cube, [0, 1], {0: cube.faces.walks[0][0], 1: cube.faces.walks[1][0]})


def test_chosen_edge_must_lie_on_face(cube):
    with pytest.raises(PipelineFailure):
        verify_theorem12(cube, [0], {0: cube.faces.walks[1][0]})


def far_instance():
    g, _, _ = cached_instance(14, 0)
    p, _ = dual_graph(g)
    pairs = far_face_pairs(p)
    assert pairs
    return p, pairs


def test_far_faces_all_edge_choices():
    p, pairs = far_instance()
    f, h = pairs[0]
    for e1, e2 in itertools.product(p.faces.walks[f], p.faces.walks[h]):
        rep = verify_theorem12(p, [f, h], {f: e1, h: e2})
        assert rep.passed, rep.to_text()


def red_face_case():
    """A far pair with at least one face dual to a red vertex."""
    for ops in range(13, 30):
        g, _, _ = cached_instance(ops, 0)
        p, _ = dual_graph(g)
        G, _ = dual_graph(p)
        red = tricolouring(G).red
        for f, h in far_face_pairs(p):
            if f + 1 in red:
                return p, f, h
    raise AssertionError("no red far face found")


def test_literal_red_seeding_misses_an_edge():
    # seeding the star across the chosen edge leaves out a face edge
    p, f, h = red_face_case()
    e1, e2 = p.faces.walks[f][0], p.faces.walks[h][0]
    assert verify_theorem12(p, [f, h], {f: e1, h: e2}).passed
    literal = verify_theorem12(p, [f, h], {f: e1, h: e2}, literal_red=True)
    assert literal.cycle is not None and literal.missing_edges
    assert not literal.passed


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 8))
def test_constructive_cycles_within_oracle(ops):
    g, _, _ = cached_instance(ops, ops)
    p, _ = dual_graph(g)
    rep = verify_theorem11(p)
    assert rep.constructive_in_oracle and rep.collisions == 0
    assert rep.constructive >= math.ceil(rep.bound - 1e-9)
