from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from barnette4.alpha_generator import random_instance
from barnette4.e4_membership import B, R, W
from barnette4.errors import (
    CenterIsRed,
    DistanceViolation,
    NotAPath,
    NotClosedInput,
    ParseError,
    SeedConflict,
)
from barnette4.experiments import far_vertex_pair
from barnette4.planar_core import bfs_distances
from barnette4.tree_pair import (
    ClosedPair,
    build_auxiliary_J,
    check_bw_closed,
    choice_count,
    enumerate_thm13_covers,
    extend_cover,
    format_choices,
    greedy_colouring,
    is_acyclic,
    iter_choice_vectors,
    legal_choices,
    parse_choices,
    path_subgraph,
    seed_pair_thm13,
    seed_pair_thm14,
    select_K,
    star_subgraph,
)
from conftest import cached_instance, instance_params, to_networkx


def is_forest_nx(g, vs) -> bool:
    return nx.is_forest(to_networkx(g).subgraph(vs)) if vs else True


def test_octahedron_J_is_K4(oct_fixed):
    g, col = oct_fixed
    sel = select_K(g, col)
    assert set(sel.J) == {1, 2, 3, 4}
    assert all(len(nb) == 3 for nb in sel.J.values())
    assert sel.K == (1,)
    assert sel.greedy_colours == 4 and sel.delta_J == 3


def test_J_edges_match_definition():
    g, col, _ = cached_instance(7, 11)
    J = build_auxiliary_J(g, col)
    nxg = to_networkx(g)
    dist = dict(nx.all_pairs_shortest_path_length(nxg, cutoff=2))
    for a in J:
        expected = {b for b in J if b != a and (
            g.has_edge(a, b) or (dist[a].get(b) == 2 and col.of(a) == col.of(b)))}
        assert J[a] == expected


def test_greedy_colouring_is_proper():
    g, col, _ = cached_instance(10, 2)
    J = build_auxiliary_J(g, col)
    c = greedy_colouring(J)
    assert all(c[a] != c[b] for a in J for b in J[a])


def test_octahedron_star_seed(oct_fixed):
    g, col = oct_fixed
    pair = seed_pair_thm13(g, col, (1,), {1: None})
    assert pair == ClosedPair(frozenset(), frozenset({1, 3, 4}))
    cover = extend_cover(g, col, pair)
    assert cover.X == {2, 5, 6} and cover.Y == {1, 3, 4}
    assert cover.connected_X and cover.connected_Y


def test_octahedron_path_seed(oct_fixed):
    g, col = oct_fixed
    assert path_subgraph(g, 1, 5) == (3, 6, 4)
    pair = seed_pair_thm13(g, col, (1,), {1: 5})
    assert pair.D == {3, 4, 6} and not pair.C


def test_octahedron_three_covers(oct_fixed):
    g, col = oct_fixed
    assert legal_choices(g, col, 1) == [None, 5, 6]
    covers = list(enumerate_thm13_covers(g, col, (1,)))
    assert len(covers) == 3 == choice_count(g, (1,))
    assert len({c.X for _, c in covers}) == 3


def test_unclosed_pair_is_reported(oct_fixed):
    g, col = oct_fixed
    pair = ClosedPair(frozenset({3}), frozenset())
    bad = check_bw_closed(g, col, pair)
    assert sorted(v for v, _ in bad) == [1, 2]
    with pytest.raises(NotClosedInput):
        extend_cover(g, col, pair)


def test_extend_rejects_cyclic_or_overlapping_input(oct_fixed):
    g, col = oct_fixed
    with pytest.raises(NotClosedInput):
        extend_cover(g, col, ClosedPair(frozenset({1}), frozenset({1})))
    with pytest.raises(NotClosedInput):
        extend_cover(g, col, ClosedPair(frozenset(), frozenset({3, 5, 4, 6})))


def test_seed_errors(oct_fixed):
    g, col = oct_fixed
    with pytest.raises(CenterIsRed):
        star_subgraph(g, col, 5)
    with pytest.raises(NotAPath):
        path_subgraph(g, 1, 2)
    with pytest.raises(SeedConflict):
        seed_pair_thm13(g, col, (1,), {1: 3})
    with pytest.raises(CenterIsRed):
        seed_pair_thm13(g, col, (5,), {5: None})


def test_choice_text_round_trip():
    cv = ((2, None), (7, 5), (11, None))
    text = format_choices(cv)
    assert text == "2:STAR 7:PATH:5 11:STAR"
    assert parse_choices(text) == cv
    with pytest.raises(ParseError):
        parse_choices("2:TREE")


def far_pair(ops=14, seed=0):
    g, col, _ = random_instance(ops, seed)
    a, b = far_vertex_pair(g)
    assert bfs_distances(g, a)[b] >= 5
    return g, col, a, b


def test_far_seed_places_structures():
    g, col, a, b = far_pair()
    for n in ({a: g.neighbors(a)[0], b: g.neighbors(b)[0]},
              {a: g.neighbors(a)[1], b: g.neighbors(b)[2]}):
        pair = seed_pair_thm14(g, col, (a, b), n)
        cover = extend_cover(g, col, pair)
        for v, nv in n.items():
            if col.of(v) == W:
                assert set(path_subgraph(g, v, nv)) <= cover.X
            elif col.of(v) == B:
                assert set(path_subgraph(g, v, nv)) <= cover.Y
        assert pair.C <= cover.X and pair.D <= cover.Y


def test_far_seed_rejects_close_vertices():
    g, col, _ = random_instance(14, 0)
    a = 1
    b = g.neighbors(a)[0]
    with pytest.raises(DistanceViolation):
        seed_pair_thm14(g, col, (a, b), {a: b, b: a})


def check_cover(g, col, pair, cover):
    V = frozenset(g.vertices)
    assert cover.X | cover.Y == V and not cover.X & cover.Y
    assert is_forest_nx(g, cover.X) and is_forest_nx(g, cover.Y)
    assert is_acyclic(g, cover.X) and is_acyclic(g, cover.Y)
    assert pair.C <= cover.X and pair.D <= cover.Y


@settings(max_examples=40, deadline=None)
@given(instance_params, st.data())
def test_extension_of_seeded_pairs(params, data):
    g, col, _ = cached_instance(*params)
    K = select_K(g, col).K
    cv = tuple((v, data.draw(st.sampled_from(legal_choices(g, col, v)))) for v in sorted(K))
    pair = seed_pair_thm13(g, col, K, cv)
    assert not check_bw_closed(g, col, pair)
    order = data.draw(st.permutations(sorted(col.red)))
    check_cover(g, col, pair, extend_cover(g, col, pair, red_order=order))


@settings(max_examples=30, deadline=None)
@given(instance_params, st.data())
def test_extension_of_empty_pair(params, data):
    g, col, _ = cached_instance(*params)
    pair = ClosedPair(frozenset(), frozenset())
    order = data.draw(st.permutations(sorted(col.red)))
    cover = extend_cover(g, col, pair, red_order=order)
    check_cover(g, col, pair, cover)
    # exact covers of a triangulation by two induced forests are two trees
    assert cover.connected_X and cover.connected_Y


@settings(max_examples=30, deadline=None)
@given(instance_params)
def test_counting_bounds_on_K(params):
    g, col, _ = cached_instance(*params)
    sel = select_K(g, col)
    d = g.max_degree
    assert 4 * sel.delta_J < d * d
    assert 4 * sel.greedy_colours <= d * d
    assert len(sel.K) * d * d > 2 * g.n
    assert 2 * len(col.black | col.white) > g.n
    for a in sel.K:
        assert col.of(a) != R
        assert not sel.J[a] & set(sel.K)


@settings(max_examples=20, deadline=None)
@given(instance_params)
def test_choice_vectors_are_counted(params):
    g, col, _ = cached_instance(*params)
    K = select_K(g, col).K
    cvs = list(iter_choice_vectors(g, col, K))
    assert len(cvs) == len(set(cvs)) == choice_count(g, K)
