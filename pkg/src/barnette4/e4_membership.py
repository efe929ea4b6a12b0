"""3-colouring of Eulerian triangulations and family recognition.

The families handled here:

* P     cubic, bipartite, 3-connected plane graphs;
* P(4)  members of P with a 2-factor made of facial 4-cycles;
* E     Eulerian plane triangulations (duals of P);
* E(4)  duals of P(4): Eulerian triangulations with a colour class whose
        vertices all have degree 4.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import GraphError, NoAllDegree4Class, NotThreeColourable
from .planar_core import PlanarGraph, small_vertex_cut

B, W, R = "B", "W", "R"
COLOURS = (B, W, R)


@dataclass(frozen=True)
class TriColouring:
    """Partition of ``1..n`` into independent classes B, W, R.

    ``colour[v - 1]`` is one of ``"B"``, ``"W"``, ``"R"``.
    """

    colour: tuple[str, ...]

    def of(self, v: int) -> str:
        return self.colour[v - 1]

    def members(self, c: str) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.colour, start=1) if x == c)

    @property
    def black(self) -> frozenset[int]:
        return self.members(B)

    @property
    def white(self) -> frozenset[int]:
        return self.members(W)

    @property
    def red(self) -> frozenset[int]:
        return self.members(R)

    def is_proper(self, g: PlanarGraph) -> bool:
        return all(self.of(u) != self.of(v) for u, v in g.edges)

    def to_text(self) -> str:
        return "".join(f"{v}: {c}\n" for v, c in enumerate(self.colour, start=1))


def is_triangulation(g: PlanarGraph) -> bool:
    return g.n >= 4 and all(len(w) == 3 for w in g.faces.walks)


def three_colour(g: PlanarGraph, seed_face: int = 0) -> tuple[int, ...]:
    """Proper 3-colouring of a plane triangulation by propagation.

    Returns raw class ids (0, 1, 2) per vertex, indexed ``v - 1`` and
    normalised so that classes are numbered by first appearance in vertex
    order.  The colouring is unique up to renaming, so the result does not
    depend on ``seed_face``.
    """
    if not is_triangulation(g):
        raise GraphError("three_colour needs a plane triangulation")
    faces = g.faces
    col: dict[int, int] = {}
    for c, v in enumerate(faces.vertices_of(seed_face)):
        col[v] = c
    seen = {seed_face}
    queue = deque([seed_face])
    while queue:
        f = queue.popleft()
        tri = faces.vertices_of(f)
        known = [col[v] for v in tri if v in col]
        missing = [v for v in tri if v not in col]
        if len(set(known)) != len(known):
            raise NotThreeColourable(f"face {f} has a repeated colour")
        if missing:
            # only reachable with two coloured vertices: the shared edge
            (m,) = missing
            col[m] = 3 - sum(known)
        for h in faces.face_adjacency[f]:
            if h not in seen:
                seen.add(h)
                queue.append(h)
    for u, v in g.edges:
        if col[u] == col[v]:
            raise NotThreeColourable(f"edge {u}-{v} joins equal colours")
    rename: dict[int, int] = {}
    for v in g.vertices:
        rename.setdefault(col[v], len(rename))
    return tuple(rename[col[v]] for v in g.vertices)


def red_class(g: PlanarGraph, raw: Iterable[int]) -> int:
    """Lowest class id whose vertices all have degree 4."""
    raw = tuple(raw)
    for c in sorted(set(raw)):
        if all(g.degree(v) == 4 for v in g.vertices if raw[v - 1] == c):
            return c
    raise NoAllDegree4Class("no colour class consists of degree-4 vertices")


def tricolouring(g: PlanarGraph) -> TriColouring:
    """Canonical B/W/R colouring of an E(4) triangulation.

    R is the red class, B holds the lowest-id non-red vertex.
    """
    raw = three_colour(g)
    r = red_class(g, raw)
    first_other = next(raw[v - 1] for v in g.vertices if raw[v - 1] != r)
    names = {r: R, first_other: B}
    for c in (0, 1, 2):
        names.setdefault(c, W)
    return TriColouring(tuple(names[c] for c in raw))


def four_face_two_factor(g: PlanarGraph) -> tuple[int, ...] | None:
    """Face ids of a 2-factor made of facial 4-cycles, or None.

    Exact cover over the 4-faces: every vertex in exactly one chosen face.
    Backtracking picks the uncovered vertex with fewest live faces.
    """
    faces = g.faces
    quads = [f for f in range(len(faces)) if faces.length(f) == 4
             and len(set(faces.vertices_of(f))) == 4]
    by_vertex: dict[int, list[int]] = {v: [] for v in g.vertices}
    for f in quads:
        for v in faces.vertices_of(f):
            by_vertex[v].append(f)
    covered: set[int] = set()
    chosen: list[int] = []

    def live(f: int) -> bool:
        return not any(v in covered for v in faces.vertices_of(f))

    def search() -> bool:
        if len(covered) == g.n:
            return True
        best, best_opts = None, None
        for v in g.vertices:
            if v in covered:
                continue
            opts = [f for f in by_vertex[v] if live(f)]
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = v, opts
                if not opts:
                    return False
        for f in best_opts:
            vs = faces.vertices_of(f)
            covered.update(vs)
            chosen.append(f)
            if search():
                return True
            chosen.pop()
            covered.difference_update(vs)
        return False

    return tuple(sorted(chosen)) if search() else None


def odd_cycle(g: PlanarGraph) -> tuple[int, ...] | None:
    """An odd cycle (vertex list) if ``g`` is not bipartite, else None."""
    side = {1: 0}
    parent = {1: 0}
    queue = deque([1])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in side:
                side[w] = 1 - side[u]
                parent[w] = u
                queue.append(w)
            elif side[w] == side[u]:
                pu, pw = [u], [w]
                while pu[-1] != 1:
                    pu.append(parent[pu[-1]])
                while pw[-1] != 1:
                    pw.append(parent[pw[-1]])
                while len(pu) > 1 and len(pw) > 1 and pu[-2] == pw[-2]:
                    pu.pop()
                    pw.pop()
                return tuple(pu) + tuple(reversed(pw[:-1]))
    return None


@dataclass(frozen=True)
class ClassReport:
    n: int
    m: int
    faces: int
    is_cubic: bool
    is_bipartite: bool
    is_3_connected: bool
    is_plane: bool
    has_4face_2factor: bool
    is_triangulation: bool
    is_eulerian: bool
    is_E4: bool
    odd_cycle: tuple[int, ...] | None = None
    small_cut: tuple[int, ...] | None = None
    two_factor: tuple[int, ...] | None = None
    red_class: tuple[int, ...] | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def in_P(self) -> bool:
        return self.is_cubic and self.is_bipartite and self.is_3_connected

    @property
    def in_P4(self) -> bool:
        return self.in_P and self.has_4face_2factor

    def to_text(self) -> str:
        def fmt(x):
            if isinstance(x, bool):
                return "true" if x else "false"
            if x is None:
                return "-"
            if isinstance(x, tuple):
                return ",".join(map(str, x)) if x else "-"
            return str(x)

        keys = ["n", "m", "faces", "is_cubic", "is_bipartite", "is_3_connected", "is_plane",
                "has_4face_2factor", "is_triangulation", "is_eulerian", "is_E4",
                "in_P", "in_P4", "odd_cycle", "small_cut", "two_factor", "red_class"]
        return "".join(f"{k}={fmt(getattr(self, k))}\n" for k in keys)


def classify(g: PlanarGraph) -> ClassReport:
    faces = g.faces
    cubic = all(g.degree(v) == 3 for v in g.vertices)
    cyc = odd_cycle(g)
    cut = small_vertex_cut(g, 3) if g.n > 3 else tuple(g.vertices)
    tri = is_triangulation(g)
    eulerian = all(g.degree(v) % 2 == 0 for v in g.vertices)
    two_factor = four_face_two_factor(g) if cubic else None

    red = None
    notes = []
    if tri and eulerian:
        try:
            raw = three_colour(g)
            r = red_class(g, raw)
            red = tuple(v for v in g.vertices if raw[v - 1] == r)
        except (NotThreeColourable, NoAllDegree4Class) as exc:
            notes.append(type(exc).__name__)
    return ClassReport(
        n=g.n,
        m=g.m,
        faces=len(faces),
        is_cubic=cubic,
        is_bipartite=cyc is None,
        is_3_connected=cut is None,
        is_plane=True,
        has_4face_2factor=two_factor is not None,
        is_triangulation=tri,
        is_eulerian=eulerian,
        is_E4=red is not None,
        odd_cycle=cyc,
        small_cut=cut,
        two_factor=two_factor,
        red_class=red,
        notes=tuple(notes),
    )
