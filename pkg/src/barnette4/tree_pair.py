"""Closed pairs of induced forests and their extension to vertex covers.

Working objects live on a coloured E(4) triangulation ``G``:

* the auxiliary graph ``J`` on the black and white vertices,
* an independent set ``K`` of ``J`` taken from a greedy colouring,
* path seeds ``N(v) - {n(v)}`` and star seeds ``{v} + (N(v) & other colour)``,
* (black, white)-closed pairs ``(C, D)`` and their extension to a cover
  ``(X, Y)`` of ``V(G)`` by two induced forests.

A choice for ``v`` in ``K`` is ``None`` (star) or a red neighbour ``r``
(path ``N(v) - {r}``).  White choices seed ``C``, black choices seed ``D``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .e4_membership import B, R, W, TriColouring
from .errors import (
    CenterIsRed,
    DistanceViolation,
    ExtensionFailure,
    NotAPath,
    NotClosedInput,
    ParseError,
    SeedConflict,
)
from .planar_core import PlanarGraph, bfs_distances

Choice = int | None
ChoiceVector = tuple[tuple[int, Choice], ...]


@dataclass(frozen=True)
class ClosedPair:
    C: frozenset[int]
    D: frozenset[int]


@dataclass(frozen=True)
class CoverPair:
    X: frozenset[int]
    Y: frozenset[int]
    connected_X: bool
    connected_Y: bool

    def to_text(self) -> str:
        return ("X: " + " ".join(map(str, sorted(self.X))) + "\n"
                + "Y: " + " ".join(map(str, sorted(self.Y))) + "\n"
                + f"connected_X={str(self.connected_X).lower()}\n"
                + f"connected_Y={str(self.connected_Y).lower()}\n")


class _DSU:
    def __init__(self) -> None:
        self.parent: dict[int, int] = {}

    def add(self, v: int) -> None:
        self.parent.setdefault(v, v)

    def find(self, v: int) -> int:
        p = self.parent
        while p[v] != v:
            p[v] = p[p[v]]
            v = p[v]
        return v

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def is_acyclic(g: PlanarGraph, vs: Iterable[int]) -> bool:
    vs = set(vs)
    dsu = _DSU()
    for v in vs:
        dsu.add(v)
    for a, b in g.induced_edges(vs):
        if not dsu.union(a, b):
            return False
    return True


def is_connected_set(g: PlanarGraph, vs: Iterable[int]) -> bool:
    vs = set(vs)
    if not vs:
        return True
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        a = stack.pop()
        for b in g.neighbors(a):
            if b in vs and b not in seen:
                seen.add(b)
                stack.append(b)
    return len(seen) == len(vs)


# --------------------------------------------------------------------------
# auxiliary graph J and the independent set K


def build_auxiliary_J(g: PlanarGraph, colouring: TriColouring) -> dict[int, frozenset[int]]:
    """``G[B + W]`` plus an edge between same-coloured vertices at distance 2."""
    bw = [v for v in g.vertices if colouring.of(v) != R]
    J: dict[int, frozenset[int]] = {}
    for a in bw:
        ca = colouring.of(a)
        nb = {w for w in g.neighbors(a) if colouring.of(w) != R}
        for w in g.neighbors(a):
            for z in g.neighbors(w):
                if z != a and colouring.of(z) == ca:
                    nb.add(z)
        J[a] = frozenset(nb)
    dg = g.max_degree
    dj = max((len(s) for s in J.values()), default=0)
    assert 4 * dj < dg * dg, f"Delta(J)={dj} not below Delta(G)^2/4={dg * dg / 4}"
    return J


def greedy_colouring(J: Mapping[int, Iterable[int]]) -> dict[int, int]:
    """First-fit colouring in ascending vertex order."""
    col: dict[int, int] = {}
    for v in sorted(J):
        used = {col[w] for w in J[v] if w in col}
        c = 0
        while c in used:
            c += 1
        col[v] = c
    return col


def greedy_chromatic_independent_set(J: Mapping[int, Iterable[int]]) -> tuple[int, ...]:
    """Largest class of the greedy colouring (lowest colour index on ties)."""
    if not J:
        return ()
    col = greedy_colouring(J)
    ncol = max(col.values()) + 1
    classes = [[v for v in sorted(col) if col[v] == c] for c in range(ncol)]
    K = max(classes, key=len)
    assert len(K) * ncol >= len(J)
    return tuple(K)


@dataclass(frozen=True)
class KSelection:
    J: Mapping[int, frozenset[int]]
    K: tuple[int, ...]
    greedy_colours: int
    delta_J: int


def select_K(g: PlanarGraph, colouring: TriColouring) -> KSelection:
    """Build J, colour it greedily and pick K, checking the counting bounds."""
    J = build_auxiliary_J(g, colouring)
    ncol = max(greedy_colouring(J).values()) + 1
    K = greedy_chromatic_independent_set(J)
    dg = g.max_degree
    assert 4 * ncol <= dg * dg, "greedy used more than Delta(G)^2/4 colours"
    assert len(K) * dg * dg > 2 * g.n, "|K| does not exceed 2|G|/Delta(G)^2"
    return KSelection(J, K, ncol, max(len(s) for s in J.values()))


# --------------------------------------------------------------------------
# seeds


def path_subgraph(g: PlanarGraph, v: int, nv: int) -> tuple[int, ...]:
    """``N(v) - {nv}`` in path order, checked to induce a path."""
    rot = g.neighbors(v)
    if nv not in rot:
        raise NotAPath(f"{nv} is not a neighbour of {v}")
    i = rot.index(nv)
    path = rot[i + 1:] + rot[:i]
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise NotAPath(f"{a},{b} consecutive around {v} but not adjacent")
    if len(g.induced_edges(path)) != len(path) - 1:
        raise NotAPath(f"N({v}) - {{{nv}}} has a chord")
    return path


def star_subgraph(g: PlanarGraph, colouring: TriColouring, v: int, leaf_colour: str | None = None,
                  ) -> frozenset[int]:
    """``{v}`` plus the neighbours of ``v`` of the leaf colour.

    The leaf colour defaults to white for a black centre and black for a
    white one.  A red centre needs an explicit leaf colour.
    """
    c = colouring.of(v)
    if leaf_colour is None:
        if c == R:
            raise CenterIsRed(f"star centre {v} is red")
        leaf_colour = W if c == B else B
    if leaf_colour == c:
        raise ValueError("leaves must differ in colour from the centre")
    leaves = [w for w in g.neighbors(v) if colouring.of(w) == leaf_colour]
    assert not g.induced_edges(leaves)
    return frozenset(leaves) | {v}


def legal_choices(g: PlanarGraph, colouring: TriColouring, v: int) -> list[Choice]:
    return [None] + sorted(w for w in g.neighbors(v) if colouring.of(w) == R)


def _seed_structure(g, colouring, v: int, choice: Choice) -> frozenset[int]:
    if choice is None:
        return star_subgraph(g, colouring, v)
    if colouring.of(choice) != R:
        raise SeedConflict(f"path choice for {v} must drop a red neighbour, got {choice}")
    return frozenset(path_subgraph(g, v, choice))


def _checked_pair(g, colouring, C: set[int], D: set[int]) -> ClosedPair:
    if C & D:
        raise SeedConflict(f"seeds overlap in {sorted(C & D)}")
    if not is_acyclic(g, C) or not is_acyclic(g, D):
        raise SeedConflict("seed side contains a cycle")
    pair = ClosedPair(frozenset(C), frozenset(D))
    bad = check_bw_closed(g, colouring, pair)
    if bad:
        raise SeedConflict(f"pair is not closed: {bad[:3]}")
    return pair


def seed_pair_thm13(g: PlanarGraph, colouring: TriColouring, K: Iterable[int],
                    choices: Mapping[int, Choice] | ChoiceVector) -> ClosedPair:
    choices = dict(choices)
    K = tuple(K)
    if set(choices) != set(K):
        raise SeedConflict(f"choices given for {sorted(choices)}, K is {sorted(K)}")
    C: set[int] = set()
    D: set[int] = set()
    for v in K:
        side = {W: C, B: D}.get(colouring.of(v))
        if side is None:
            raise CenterIsRed(f"K contains red vertex {v}")
        side |= _seed_structure(g, colouring, v, choices[v])
    return _checked_pair(g, colouring, C, D)


def seed_pair_thm14(g: PlanarGraph, colouring: TriColouring, L: Iterable[int],
                    n: Mapping[int, int]) -> ClosedPair:
    """Closed pair seeded by far-apart vertices ``L`` with chosen neighbours ``n``.

    White ``v``: path ``N(v) - n(v)`` into C, star at ``n(v)`` with white
    leaves into D.  Black ``v``: the mirror image.  Red ``v``: only the star
    at ``n(v)``, with leaves coloured opposite to ``n(v)``, going to D when
    ``n(v)`` is black and to C when it is white.
    """
    L = sorted(L)
    for a, b in itertools.combinations(L, 2):
        d = bfs_distances(g, a).get(b, math.inf)
        if d < 5:
            raise DistanceViolation(f"d({a},{b}) = {d} < 5")
    C: set[int] = set()
    D: set[int] = set()
    for v in L:
        nv = n[v]
        if nv not in g.adj[v]:
            raise SeedConflict(f"n({v}) = {nv} is not a neighbour")
        cv, cn = colouring.of(v), colouring.of(nv)
        if cv == W:
            C |= set(path_subgraph(g, v, nv))
            D |= star_subgraph(g, colouring, nv, W)
        elif cv == B:
            D |= set(path_subgraph(g, v, nv))
            C |= star_subgraph(g, colouring, nv, B)
        elif cn == B:
            D |= star_subgraph(g, colouring, nv, W)
        else:
            C |= star_subgraph(g, colouring, nv, B)
    return _checked_pair(g, colouring, C, D)


# --------------------------------------------------------------------------
# closedness and extension


def check_bw_closed(g: PlanarGraph, colouring: TriColouring, pair: ClosedPair,
                    ) -> list[tuple[int, str]]:
    """Violations of the (black, white)-closed conditions as ``(vertex, reason)``."""
    C, D = pair.C, pair.D
    out = []
    for v in g.vertices:
        cv = colouring.of(v)
        if cv == B and v not in C:
            nc = [colouring.of(w) for w in g.neighbors(v) if w in C]
            if W in nc:
                out.append((v, "(1) black, adjacent to a white vertex of C"))
            elif R in nc and v not in D:
                out.append((v, "(1) black outside D, adjacent to a red vertex of C"))
        elif cv == W and v not in D:
            nd = [colouring.of(w) for w in g.neighbors(v) if w in D]
            if B in nd:
                out.append((v, "(2) white, adjacent to a black vertex of D"))
            elif R in nd and v not in C:
                out.append((v, "(2) white outside C, adjacent to a red vertex of D"))
    return out


class _Side:
    """Vertex set of an induced forest with incremental cycle detection."""

    def __init__(self, g: PlanarGraph, vs: Iterable[int], name: str):
        self.g = g
        self.name = name
        self.members: set[int] = set()
        self.dsu = _DSU()
        for v in sorted(vs):
            self.add(v)

    def add(self, v: int) -> None:
        self.dsu.add(v)
        self.members.add(v)
        for w in self.g.neighbors(v):
            if w in self.members and w != v and not self.dsu.union(v, w):
                raise ExtensionFailure(f"adding {v} closes a cycle in {self.name}")

    def joined(self, a: int, b: int) -> bool:
        return a in self.members and b in self.members and self.dsu.find(a) == self.dsu.find(b)


def extend_cover(g: PlanarGraph, colouring: TriColouring, pair: ClosedPair,
                 red_order: Sequence[int] | None = None) -> CoverPair:
    """Extend a closed pair of induced forests to a cover of ``V(G)``.

    Black vertices outside the pair join C and white ones join D.  Red
    vertices are then taken in ascending order (or ``red_order``): into D if
    their two black neighbours are already joined in C, else into C (covering
    both the case that the white neighbours are joined in D and the free case).
    """
    C, D = pair.C, pair.D
    if C & D:
        raise NotClosedInput("C and D intersect")
    if not is_acyclic(g, C) or not is_acyclic(g, D):
        raise NotClosedInput("input side contains a cycle")
    bad = check_bw_closed(g, colouring, pair)
    if bad:
        raise NotClosedInput(f"pair is not (black,white)-closed: {bad[:3]}")

    used = C | D
    Cp = _Side(g, C | {v for v in colouring.black if v not in used}, "C'")
    Dp = _Side(g, D | {v for v in colouring.white if v not in used}, "D'")
    pending = colouring.red - used
    order = sorted(pending) if red_order is None else [v for v in red_order if v in pending]
    assert len(order) == len(pending)
    for v in order:
        blacks = [w for w in g.neighbors(v) if colouring.of(w) == B]
        whites = [w for w in g.neighbors(v) if colouring.of(w) == W]
        if len(blacks) == 2 and Cp.joined(*blacks):
            Dp.add(v)
        elif len(whites) == 2 and Dp.joined(*whites):
            Cp.add(v)
        else:
            Cp.add(v)
    X, Y = frozenset(Cp.members), frozenset(Dp.members)
    assert len(X) + len(Y) == g.n and not X & Y
    return CoverPair(X, Y, is_connected_set(g, X), is_connected_set(g, Y))


# --------------------------------------------------------------------------
# enumeration


def choice_count(g: PlanarGraph, K: Iterable[int]) -> int:
    return math.prod(g.degree(v) // 2 + 1 for v in K)


def iter_choice_vectors(g: PlanarGraph, colouring: TriColouring, K: Sequence[int],
                        ) -> Iterator[ChoiceVector]:
    K = sorted(K)
    opts = [legal_choices(g, colouring, v) for v in K]
    for combo in itertools.product(*opts):
        yield tuple(zip(K, combo))


def enumerate_thm13_covers(g: PlanarGraph, colouring: TriColouring, K: Sequence[int],
                           ) -> Iterator[tuple[ChoiceVector, CoverPair]]:
    count = 0
    for cv in iter_choice_vectors(g, colouring, K):
        pair = seed_pair_thm13(g, colouring, K, cv)
        yield cv, extend_cover(g, colouring, pair)
        count += 1
    assert count == choice_count(g, K)


def format_choices(cv: ChoiceVector) -> str:
    return " ".join(f"{v}:STAR" if c is None else f"{v}:PATH:{c}" for v, c in cv)


def parse_choices(text: str) -> ChoiceVector:
    out = []
    for tok in text.split():
        parts = tok.split(":")
        try:
            if len(parts) == 2 and parts[1] == "STAR":
                out.append((int(parts[0]), None))
            elif len(parts) == 3 and parts[1] == "PATH":
                out.append((int(parts[0]), int(parts[2])))
            else:
                raise ValueError
        except ValueError:
            raise ParseError(f"bad choice token {tok!r}") from None
    return tuple(sorted(out))
