"""Brute-force ground truth and end-to-end verification reports."""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .e4_membership import B, R, W, TriColouring, classify, tricolouring
from .errors import (
    Barnette4Error,
    CapExceeded,
    DistanceViolation,
    PipelineFailure,
)
from .planar_core import Edge, PlanarGraph, dual_graph, edge_key, face_distance
from .stein_duality import HamiltonCycle, cover_to_dual_cycle, verify_hamilton
from .tree_pair import (
    ChoiceVector,
    CoverPair,
    _DSU,
    choice_count,
    enumerate_thm13_covers,
    extend_cover,
    legal_choices,
    path_subgraph,
    seed_pair_thm13,
    seed_pair_thm14,
    select_K,
    star_subgraph,
)

HAMILTON_CAP = 40
COVER_CAP = 24
AUTOMORPHISM_CAP = 12
EPS = 1e-9


# --------------------------------------------------------------------------
# exhaustive enumerators


def enumerate_hamilton_cycles(p: PlanarGraph, limit: int | None = None, cap: int = HAMILTON_CAP,
                              ) -> set[HamiltonCycle]:
    """All Hamilton cycles of ``p`` as canonical edge sets.

    Depth-first from vertex 1; each cycle is recorded once, in the direction
    whose second vertex is smaller than its last.  A vertex off the path
    needs two neighbours that are off the path or path ends, which prunes
    dead branches early.
    """
    if p.n > cap:
        raise CapExceeded(f"{p.n} vertices exceeds the cap of {cap}")
    n = p.n
    if n < 3:
        return set()
    nbrs = [()] + [p.neighbors(v) for v in p.vertices]
    on_path = [False] * (n + 1)
    avail = [0] + [len(nbrs[v]) for v in p.vertices]
    path = [1]
    on_path[1] = True
    found: set[HamiltonCycle] = set()

    def extend(cur: int) -> None:
        if len(path) == n:
            if 1 in nbrs[cur] and path[1] < path[-1]:
                cyc = HamiltonCycle.of(list(zip(path, path[1:])) + [(cur, 1)])
                found.add(cyc)
                if limit is not None and len(found) > limit:
                    raise CapExceeded(f"more than {limit} Hamilton cycles")
            return
        for nxt in nbrs[cur]:
            if on_path[nxt]:
                continue
            # cur becomes interior (unless it is the start, which stays an end
            # of the cycle): its other free neighbours lose an option
            dead = False
            touched = []
            for w in (nbrs[cur] if cur != 1 else ()):
                if w != nxt and not on_path[w]:
                    avail[w] -= 1
                    touched.append(w)
                    if avail[w] < 2:
                        dead = True
            if not dead:
                on_path[nxt] = True
                path.append(nxt)
                extend(nxt)
                path.pop()
                on_path[nxt] = False
            for w in touched:
                avail[w] += 1

    extend(1)
    return found


@dataclass(frozen=True)
class CoverCount:
    acyclic_pairs: int
    tree_pairs: int
    pairs: tuple[tuple[frozenset[int], frozenset[int]], ...] | None = None


def enumerate_cover_pairs(g: PlanarGraph, keep: bool = False, cap: int = COVER_CAP) -> CoverCount:
    """Count unordered partitions ``{X, Y}`` of ``V(G)`` into induced forests.

    Vertex 1 is fixed in ``X``.  Assignments are explored depth-first and a
    branch is cut as soon as either side contains a cycle.
    """
    if g.n > cap:
        raise CapExceeded(f"{g.n} vertices exceeds the cap of {cap}")
    n = g.n
    side = [0] * (n + 1)  # 0 unassigned, 1 X, 2 Y
    acyclic = trees = 0
    kept = []

    def closes_cycle(v: int, s: int) -> bool:
        # v joins side s: a cycle appears iff two of its s-neighbours are
        # already connected within side s
        nb = [w for w in g.neighbors(v) if side[w] == s]
        if len(nb) < 2:
            return False
        dsu = _DSU()
        for u in range(1, n + 1):
            if side[u] == s:
                dsu.add(u)
        for a, b in g.induced_edges(u for u in range(1, n + 1) if side[u] == s):
            dsu.union(a, b)
        roots = [dsu.find(w) for w in nb]
        return len(set(roots)) < len(roots)

    def rec(v: int) -> None:
        nonlocal acyclic, trees
        if v > n:
            X = frozenset(u for u in range(1, n + 1) if side[u] == 1)
            Y = frozenset(range(1, n + 1)) - X
            if not Y:
                return
            acyclic += 1
            # forests with |X|+|Y| = n: both trees iff edge count n - 2
            if len(g.induced_edges(X)) + len(g.induced_edges(Y)) == n - 2:
                trees += 1
            if keep:
                kept.append((X, Y))
            return
        for s in ((1,) if v == 1 else (1, 2)):
            if not closes_cycle(v, s):
                side[v] = s
                rec(v + 1)
                side[v] = 0

    rec(1)
    return CoverCount(acyclic, trees, tuple(kept) if keep else None)


# --------------------------------------------------------------------------
# automorphisms (plane-map automorphisms, including reflections)


def map_automorphisms(p: PlanarGraph) -> list[dict[int, int]]:
    """Vertex maps of all automorphisms of the embedded graph, mirrors included."""
    def walk(u: int, w: int, mirror: bool):
        label = {u: 0}
        order = [u]
        first = {u: w}
        code = []
        i = 0
        while i < len(order):
            v = order[i]
            rot = p.neighbors(v)
            k = len(rot)
            j0 = rot.index(first[v])
            step = -1 if mirror else 1
            for j in range(k):
                x = rot[(j0 + step * j) % k]
                if x not in label:
                    label[x] = len(order)
                    order.append(x)
                    first[x] = v
                code.append(label[x])
            code.append(-1)
            i += 1
        return tuple(code), order

    u0 = 1
    w0 = p.neighbors(1)[0]
    ref_code, ref_order = walk(u0, w0, False)
    out = []
    for u in p.vertices:
        for w in p.neighbors(u):
            for mirror in (False, True):
                code, order = walk(u, w, mirror)
                if code == ref_code:
                    out.append(dict(zip(ref_order, order)))
    return out


def count_orbits(cycles: Iterable[HamiltonCycle], autos: list[dict[int, int]]) -> int:
    remaining = set(cycles)
    orbits = 0
    while remaining:
        h = remaining.pop()
        orbits += 1
        for a in autos:
            remaining.discard(HamiltonCycle.of((a[u], a[v]) for u, v in h.edges))
    return orbits


# --------------------------------------------------------------------------
# bounds and verification reports


def hamilton_lower_bound(p: PlanarGraph) -> float:
    """``3 ** (2 |faces| / (max face length)**2)`` for the cubic graph ``p``."""
    faces = p.faces
    return 3.0 ** (2 * len(faces) / faces.max_length ** 2)


def dual_side_bound(g: PlanarGraph) -> float:
    return 3.0 ** (2 * g.n / g.max_degree ** 2)


def bound_ceiling(bound: float) -> int:
    return math.ceil(bound - EPS)


def check_invariant_i(g: PlanarGraph, colouring: TriColouring) -> bool:
    return 2 * len(colouring.black | colouring.white) > g.n


@dataclass(frozen=True)
class BoundReport:
    faces: int
    max_face: int
    bound: float
    bound_ceil: int
    k_size: int
    greedy_colours: int
    delta_J: int
    choice_vectors: int
    constructive: int
    collisions: int
    oracle: int | None
    oracle_orbits: int | None
    constructive_in_oracle: bool | None
    invariant_i: bool
    cycles: tuple[HamiltonCycle, ...] = field(default=(), repr=False)

    @property
    def bound_pass(self) -> bool:
        return self.constructive >= self.bound_ceil

    @property
    def oracle_pass(self) -> bool:
        return self.oracle is None or (self.oracle >= self.constructive
                                       and bool(self.constructive_in_oracle))

    @property
    def passed(self) -> bool:
        return self.bound_pass and self.oracle_pass and self.invariant_i

    def to_text(self) -> str:
        def fmt(x):
            if isinstance(x, bool):
                return "true" if x else "false"
            if x is None:
                return "-"
            if isinstance(x, float):
                return f"{x:.6f}"
            return str(x)

        rows = [
            ("theorem", "1.1"),
            ("faces", self.faces),
            ("max_face", self.max_face),
            ("bound", self.bound),
            ("bound_ceil", self.bound_ceil),
            ("k_size", self.k_size),
            ("greedy_colours", self.greedy_colours),
            ("delta_J", self.delta_J),
            ("choice_vectors", self.choice_vectors),
            ("constructive", self.constructive),
            ("collisions", self.collisions),
            ("oracle", self.oracle),
            ("oracle_orbits", self.oracle_orbits),
            ("constructive_in_oracle", self.constructive_in_oracle),
            ("invariant_i", self.invariant_i),
            ("bound_pass", self.bound_pass),
            ("oracle_pass", self.oracle_pass),
            ("pass", self.passed),
        ]
        return "".join(f"{k}={fmt(v)}\n" for k, v in rows)


def _stage(name: str):
    class _Guard:
        def __enter__(self):
            return self

        def __exit__(self, et, ev, tb):
            if ev is not None and not isinstance(ev, PipelineFailure):
                if isinstance(ev, (Barnette4Error, AssertionError)):
                    raise PipelineFailure(name, f"{type(ev).__name__}: {ev}") from ev
            return False

    return _Guard()


def _covers_for_first_choice(args) -> list[tuple[ChoiceVector, HamiltonCycle]]:
    """Worker: all covers whose first K-vertex takes the given choice."""
    p, first = args
    g, corr = dual_graph(p)
    col = tricolouring(g)
    K = select_K(g, col).K
    out = []
    rest = [legal_choices(g, col, v) for v in K[1:]]
    for combo in itertools.product(*rest):
        cv = ((K[0], first),) + tuple(zip(K[1:], combo))
        cover = extend_cover(g, col, seed_pair_thm13(g, col, K, cv))
        out.append((cv, cover_to_dual_cycle(g, cover, corr)))
    return out


def choice_vector_cycles(p: PlanarGraph, jobs: int = 1) -> tuple[dict, list[tuple[ChoiceVector, object]]]:
    """Run the choice-vector construction on ``dual(p)``.

    Returns the setup dictionary and the list of ``(choice vector, cycle)``
    pairs sorted by choice vector.  ``jobs > 1`` only changes wall time.
    """
    with _stage("dual"):
        g, corr = dual_graph(p)
    with _stage("colour"):
        col = tricolouring(g)
    with _stage("select_K"):
        sel = select_K(g, col)
    K = sel.K
    with _stage("covers"):
        if jobs > 1 and K:
            firsts = legal_choices(g, col, K[0])
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                chunks = list(ex.map(_covers_for_first_choice, [(p, f) for f in firsts]))
            results = [r for chunk in chunks for r in chunk]
        else:
            results = [(cv, cover_to_dual_cycle(g, cover, corr))
                       for cv, cover in enumerate_thm13_covers(g, col, K)]
    results.sort(key=lambda r: tuple((v, -1 if c is None else c) for v, c in r[0]))
    setup = dict(g=g, corr=corr, colouring=col, selection=sel)
    return setup, results


def verify_theorem11(p: PlanarGraph, oracle_cap: int = HAMILTON_CAP, jobs: int = 1) -> BoundReport:
    with _stage("precondition"):
        rep = classify(p)
    if not rep.has_4face_2factor:
        raise PipelineFailure("precondition", "input has no 2-factor of facial 4-cycles")
    setup, results = choice_vector_cycles(p, jobs)
    g, col, sel = setup["g"], setup["colouring"], setup["selection"]
    with _stage("stein"):
        cycles = []
        for _, h in results:
            if not isinstance(h, HamiltonCycle) or not verify_hamilton(p, h):
                raise PipelineFailure("stein", "cover did not give a Hamilton cycle")
            cycles.append(h)
    distinct = set(cycles)
    oracle = orbits = contained = None
    if p.n <= oracle_cap:
        with _stage("oracle"):
            every = enumerate_hamilton_cycles(p, cap=oracle_cap)
        oracle = len(every)
        contained = distinct <= every
        if p.n <= AUTOMORPHISM_CAP:
            orbits = count_orbits(every, map_automorphisms(p))
    bound = hamilton_lower_bound(p)
    return BoundReport(
        faces=len(p.faces),
        max_face=p.faces.max_length,
        bound=bound,
        bound_ceil=bound_ceiling(bound),
        k_size=len(sel.K),
        greedy_colours=sel.greedy_colours,
        delta_J=sel.delta_J,
        choice_vectors=choice_count(g, sel.K),
        constructive=len(distinct),
        collisions=len(cycles) - len(distinct),
        oracle=oracle,
        oracle_orbits=orbits,
        constructive_in_oracle=contained,
        invariant_i=check_invariant_i(g, col),
        cycles=tuple(sorted(distinct, key=lambda h: h.edges)),
    )


# --------------------------------------------------------------------------
# cycles through prescribed faces (via the far-apart seeding)


@dataclass(frozen=True)
class ChosenEdgeReport:
    faces: tuple[int, ...]
    chosen: tuple[Edge, ...]
    L: tuple[int, ...]
    n: tuple[int, ...]
    cover: CoverPair | None
    cycle: HamiltonCycle | None
    missing_edges: tuple[Edge, ...]
    placement_ok: bool

    @property
    def passed(self) -> bool:
        return self.cycle is not None and not self.missing_edges and self.placement_ok

    def to_text(self) -> str:
        def lst(xs):
            return ",".join(f"{a}-{b}" for a, b in xs) or "-"

        return (
            "theorem=1.2\n"
            f"faces={','.join(str(f + 1) for f in self.faces) or '-'}\n"
            f"chosen={lst(self.chosen)}\n"
            f"hamiltonian={'true' if self.cycle is not None else 'false'}\n"
            f"missing_edges={lst(self.missing_edges)}\n"
            f"placement_ok={'true' if self.placement_ok else 'false'}\n"
            f"pass={'true' if self.passed else 'false'}\n"
        )


def opposite_in_cycle(g: PlanarGraph, v: int, w: int) -> int:
    """The neighbour of degree-4 vertex ``v`` across from ``w``."""
    rot = g.neighbors(v)
    return rot[(rot.index(w) + len(rot) // 2) % len(rot)]


def far_seed_neighbour(g: PlanarGraph, colouring: TriColouring, v: int, w: int) -> int:
    """Seed neighbour ``n(v)`` making the cycle avoid only the face edge dual to ``v w``.

    For black or white ``v`` this is ``w`` itself.  For red ``v`` the star
    seeded at ``n(v)`` ends up on the far side from ``v`` together with the
    two neighbours flanking it, so the neighbour kept on ``v``'s side is the
    one opposite ``n(v)``; hence ``n(v)`` is taken opposite ``w``.
    """
    if colouring.of(v) == R:
        return opposite_in_cycle(g, v, w)
    return w


def check_far_seed_placement(g: PlanarGraph, colouring: TriColouring, cover: CoverPair,
                          n: Mapping[int, int]) -> bool:
    """Seed placement after extension.

    White ``v``: ``N(v) - n(v)`` inside X.  Black ``v``: inside Y.  Red ``v``:
    ``S(n(v))`` inside X when ``n(v)`` is white, inside Y when black.
    """
    for v, nv in n.items():
        cv = colouring.of(v)
        if cv == W:
            ok = set(path_subgraph(g, v, nv)) <= cover.X
        elif cv == B:
            ok = set(path_subgraph(g, v, nv)) <= cover.Y
        elif colouring.of(nv) == W:
            ok = star_subgraph(g, colouring, nv, B) <= cover.X
        else:
            ok = star_subgraph(g, colouring, nv, W) <= cover.Y
        if not ok:
            return False
    return True


def verify_theorem12(p: PlanarGraph, M: Iterable[int], chosen: Mapping[int, Edge],
                     literal_red: bool = False) -> ChosenEdgeReport:
    """Hamilton cycle through all edges of the faces in ``M`` but the chosen ones.

    ``M`` holds 0-based face ids of ``p``; ``chosen[f]`` is an edge on face
    ``f``.  With ``literal_red`` the seed neighbour of a red dual vertex is
    the one across the chosen edge (see :func:`far_seed_neighbour`).
    """
    M = sorted(M)
    for f, h in itertools.combinations(M, 2):
        d = face_distance(p, f, h)
        if d <= 4:
            raise DistanceViolation(f"faces {f + 1} and {h + 1} at distance {d} <= 4")
    faces = p.faces
    face_edges = {f: {edge_key(u, v) for u, v in faces.walks[f]} for f in M}
    for f in M:
        if edge_key(*chosen[f]) not in face_edges[f]:
            raise PipelineFailure("input", f"chosen edge {chosen[f]} not on face {f + 1}")
    with _stage("dual"):
        g, corr = dual_graph(p)
    with _stage("colour"):
        col = tricolouring(g)
    n = {}
    for f in M:
        v = corr.face_to_vertex[f]
        a, b = corr.edge_to_dual[edge_key(*chosen[f])]
        w = b if a == v else a
        n[v] = w if literal_red else far_seed_neighbour(g, col, v, w)
    with _stage("seed"):
        pair = seed_pair_thm14(g, col, n.keys(), n)
    with _stage("extend"):
        cover = extend_cover(g, col, pair)
    with _stage("stein"):
        h = cover_to_dual_cycle(g, cover, corr)
    cycle = h if isinstance(h, HamiltonCycle) else None
    on = set(cycle.edges) if cycle else set()
    missing = sorted(e for f in M for e in face_edges[f]
                     if e != edge_key(*chosen[f]) and e not in on)
    return ChosenEdgeReport(
        faces=tuple(M),
        chosen=tuple(edge_key(*chosen[f]) for f in M),
        L=tuple(sorted(n)),
        n=tuple(n[v] for v in sorted(n)),
        cover=cover,
        cycle=cycle,
        missing_edges=tuple(missing),
        placement_ok=check_far_seed_placement(g, col, cover, n),
    )
