"""Plane graphs stored as rotation systems.

Vertices are the integers ``1..n``.  ``rotation[v - 1]`` holds the clockwise
cyclic order of the neighbours of ``v``.  Faces are never stored; they are
traced from the rotation on demand.  A face is a cyclic list of darts
``(u, v)`` and the dart following ``(u, v)`` is ``(v, w)`` where ``w``
succeeds ``u`` in the rotation at ``v``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    DualNotSimple,
    GraphError,
    InducedCycleViolation,
    NonSimple,
    NotConnected,
    NotPlanarEmbedding,
    NotSymmetric,
    ParseError,
)

Dart = tuple[int, int]
Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class PlanarGraph:
    """Simple connected plane graph.  Construct through :func:`build_graph`."""

    rotation: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotation[v - 1]

    def degree(self, v: int) -> int:
        return len(self.rotation[v - 1])

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        # index 0 is a dummy so that adj[v] works with 1-based ids
        return (frozenset(),) + tuple(frozenset(r) for r in self.rotation)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """Undirected edges sorted; the position in this tuple is the edge id."""
        return tuple(sorted({edge_key(u, w) for u in self.vertices for w in self.neighbors(u)}))

    @cached_property
    def edge_id(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def max_degree(self) -> int:
        return max((len(r) for r in self.rotation), default=0)

    @cached_property
    def _position(self) -> dict[Dart, int]:
        return {(v, w): i for v in self.vertices for i, w in enumerate(self.neighbors(v))}

    def next_dart(self, dart: Dart) -> Dart:
        u, v = dart
        rot = self.rotation[v - 1]
        return (v, rot[(self._position[(v, u)] + 1) % len(rot)])

    @cached_property
    def faces(self) -> "FaceSet":
        return trace_faces(self)

    def induced_edges(self, vs: Iterable[int]) -> list[Edge]:
        s = set(vs)
        return [(u, w) for u in sorted(s) for w in self.neighbors(u) if w in s and u < w]


@dataclass(frozen=True)
class FaceSet:
    """Traced faces of a plane graph.

    ``walks[i]`` is the boundary walk of face ``i`` as a list of darts;
    ``dart_face`` maps every dart to the index of the face it bounds.
    """

    walks: tuple[tuple[Dart, ...], ...]
    dart_face: Mapping[Dart, int]

    def __len__(self) -> int:
        return len(self.walks)

    def vertices_of(self, f: int) -> tuple[int, ...]:
        return tuple(d[0] for d in self.walks[f])

    def length(self, f: int) -> int:
        return len(self.walks[f])

    @cached_property
    def max_length(self) -> int:
        return max(len(w) for w in self.walks)

    def edge_faces(self, u: int, v: int) -> tuple[int, int]:
        """(face of dart u->v, face of dart v->u)."""
        return self.dart_face[(u, v)], self.dart_face[(v, u)]

    @cached_property
    def vertex_faces(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for i, walk in enumerate(self.walks):
            for u, _ in walk:
                out.setdefault(u, []).append(i)
        return {v: tuple(fs) for v, fs in out.items()}

    @cached_property
    def face_adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in self.walks]
        for (u, v), f in self.dart_face.items():
            g = self.dart_face[(v, u)]
            if g != f:
                adj[f].add(g)
        return tuple(frozenset(a) for a in adj)


@dataclass(frozen=True)
class DualCorrespondence:
    """Links a primal plane graph to the dual built by :func:`dual_graph`.

    Face ``i`` of the primal is dual vertex ``i + 1``.  ``edge_to_dual`` maps
    a primal edge (sorted pair) to the dual edge crossing it.
    """

    face_to_vertex: tuple[int, ...]
    edge_to_dual: Mapping[Edge, Edge]
    dual_to_edge: Mapping[Edge, Edge] = field(repr=False)

    def vertex_to_face(self, x: int) -> int:
        return x - 1

    def inverse(self) -> "DualCorrespondence":
        """Same correspondence read from the dual side: dual edges map to primal ones."""
        return DualCorrespondence(self.face_to_vertex, self.dual_to_edge, self.edge_to_dual)


# --------------------------------------------------------------------------
# construction


def build_graph(rotation_table: Mapping[int, Sequence[int]] | Sequence[Sequence[int]]) -> PlanarGraph:
    """Validate a rotation table and return a :class:`PlanarGraph`.

    ``rotation_table`` is either a mapping ``{v: [w1, w2, ...]}`` with keys
    ``1..n`` or a sequence whose ``i``-th entry is the rotation at ``i + 1``.
    """
    if isinstance(rotation_table, Mapping):
        n = len(rotation_table)
        if set(rotation_table) != set(range(1, n + 1)):
            raise GraphError("vertex ids must be exactly 1..n")
        rot = tuple(tuple(int(w) for w in rotation_table[v]) for v in range(1, n + 1))
    else:
        rot = tuple(tuple(int(w) for w in r) for r in rotation_table)
        n = len(rot)
    if n == 0:
        raise GraphError("empty graph")

    for v, r in enumerate(rot, start=1):
        for w in r:
            if not 1 <= w <= n:
                raise GraphError(f"vertex {v} lists unknown neighbour {w}")
            if w == v:
                raise NonSimple(f"loop at {v}")
        if len(set(r)) != len(r):
            raise NonSimple(f"parallel edges at {v}")
    for v, r in enumerate(rot, start=1):
        for w in r:
            if v not in rot[w - 1]:
                raise NotSymmetric(f"edge {v}-{w} missing from rotation of {w}")

    g = PlanarGraph(rot)
    if n > 1 and not is_connected(g):
        raise NotConnected("graph is not connected")
    if n == 1:
        return g
    faces = g.faces
    if g.n - g.m + len(faces) != 2:
        raise NotPlanarEmbedding(
            f"Euler relation fails: {g.n} - {g.m} + {len(faces)} != 2"
        )
    return g


def trace_faces(g: PlanarGraph) -> FaceSet:
    dart_face: dict[Dart, int] = {}
    walks: list[tuple[Dart, ...]] = []
    for u in g.vertices:
        for w in g.neighbors(u):
            start = (u, w)
            if start in dart_face:
                continue
            idx = len(walks)
            walk = []
            d = start
            while d not in dart_face:
                dart_face[d] = idx
                walk.append(d)
                d = g.next_dart(d)
            assert d == start
            walks.append(tuple(walk))
    return FaceSet(tuple(walks), dart_face)


def dual_graph(g: PlanarGraph) -> tuple[PlanarGraph, DualCorrespondence]:
    faces = g.faces
    rot = []
    for walk in faces.walks:
        rot.append([faces.dart_face[(v, u)] + 1 for u, v in walk])
    edge_to_dual: dict[Edge, Edge] = {}
    dual_to_edge: dict[Edge, Edge] = {}
    for u, v in g.edges:
        a, b = faces.edge_faces(u, v)
        if a == b:
            raise DualNotSimple(f"edge {u}-{v} borders a single face (bridge)")
        de = edge_key(a + 1, b + 1)
        if de in dual_to_edge:
            raise DualNotSimple(f"faces {a + 1} and {b + 1} share more than one edge")
        edge_to_dual[(u, v)] = de
        dual_to_edge[de] = (u, v)
    dual = build_graph(rot)
    corr = DualCorrespondence(tuple(range(1, len(faces) + 1)), edge_to_dual, dual_to_edge)
    return dual, corr


def double_dual_map(g: PlanarGraph) -> dict[int, int]:
    """Map each vertex of ``dual(dual(g))`` to the vertex of ``g`` it stands for.

    The faces of the dual correspond to the vertices of ``g`` (the ring of
    faces around a vertex).  Raises if the composed correspondence is not a
    bijection preserving adjacency.
    """
    d1, _ = dual_graph(g)
    d2, _ = dual_graph(d1)
    faces_g = g.faces
    ring_to_vertex = {frozenset(f + 1 for f in faces_g.vertex_faces[v]): v for v in g.vertices}
    out = {}
    for i in range(len(d1.faces)):
        ring = frozenset(d1.faces.vertices_of(i))
        out[i + 1] = ring_to_vertex[ring]
    if sorted(out.values()) != list(g.vertices):
        raise GraphError("double dual is not a bijection")
    for a, b in d2.edges:
        if not g.has_edge(out[a], out[b]):
            raise GraphError("double dual does not preserve adjacency")
    if d2.m != g.m:
        raise GraphError("double dual edge count differs")
    return out


# --------------------------------------------------------------------------
# distances and connectivity


def bfs_distances(g: PlanarGraph, source: int, removed: frozenset[int] = frozenset()) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist and w not in removed:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def vertex_distance(g: PlanarGraph, u: int, v: int) -> int:
    if u == v:
        return 0
    dist = bfs_distances(g, u)
    if v not in dist:
        raise NotConnected(f"{v} unreachable from {u}")
    return dist[v]


def face_distance(g: PlanarGraph, f: int, h: int) -> int:
    """Shortest face-sequence length between faces ``f`` and ``h`` (0-based ids).

    Plain BFS over face adjacency; shortest dual paths are always induced.
    """
    if f == h:
        return 0
    adj = g.faces.face_adjacency
    dist = {f: 0}
    queue = deque([f])
    while queue:
        a = queue.popleft()
        for b in adj[a]:
            if b not in dist:
                dist[b] = dist[a] + 1
                if b == h:
                    return dist[b]
                queue.append(b)
    raise NotConnected("faces not connected")


def is_connected(g: PlanarGraph, removed: Iterable[int] = ()) -> bool:
    removed = frozenset(removed)
    rest = [v for v in g.vertices if v not in removed]
    if not rest:
        return True
    return len(bfs_distances(g, rest[0], removed)) == len(rest)


def small_vertex_cut(g: PlanarGraph, k: int) -> tuple[int, ...] | None:
    """Some vertex cut of size < k, or None.  Exhaustive over subsets."""
    for size in range(k):
        for cut in itertools.combinations(g.vertices, size):
            if not is_connected(g, cut):
                return cut
    return None


def vertex_connectivity_at_least(g: PlanarGraph, k: int) -> bool:
    if k > 4:
        raise ValueError("only k <= 4 is supported")
    if g.n <= k:
        return False
    return small_vertex_cut(g, k) is None


def neighbor_cycle(g: PlanarGraph, v: int) -> tuple[int, ...]:
    """Rotation at ``v``, checked to induce exactly that cycle."""
    cyc = g.neighbors(v)
    k = len(cyc)
    if k < 3:
        raise InducedCycleViolation(f"vertex {v} has degree {k}")
    for i in range(k):
        a, b = cyc[i], cyc[(i + 1) % k]
        if not g.has_edge(a, b):
            raise InducedCycleViolation(f"neighbours {a},{b} of {v} are not adjacent")
    if len(g.induced_edges(cyc)) != k:
        raise InducedCycleViolation(f"neighbourhood of {v} has a chord")
    return cyc


# --------------------------------------------------------------------------
# canonical form (naive, used for isomorphism checks in tests)


def _code_from_dart(g: PlanarGraph, u: int, w: int, mirror: bool) -> tuple[int, ...]:
    label = {u: 1}
    order = [u]
    first = {u: w}
    code: list[int] = []
    i = 0
    while i < len(order):
        v = order[i]
        rot = g.neighbors(v)
        k = len(rot)
        start = rot.index(first[v])
        step = -1 if mirror else 1
        for j in range(k):
            x = rot[(start + step * j) % k]
            if x not in label:
                label[x] = len(order) + 1
                order.append(x)
                first[x] = v
            code.append(label[x])
        code.append(0)
        i += 1
    return tuple(code)


def canonical_code(g: PlanarGraph, mirror: bool = True) -> tuple[int, ...]:
    """Minimal BFS code over all starting darts (and mirror images)."""
    best = None
    for u in g.vertices:
        for w in g.neighbors(u):
            for mir in ((False, True) if mirror else (False,)):
                c = _code_from_dart(g, u, w, mir)
                if best is None or c < best:
                    best = c
    return best


def relabel(g: PlanarGraph, perm: Mapping[int, int]) -> PlanarGraph:
    """Apply a vertex permutation ``old -> new``."""
    rot = [None] * g.n
    for v in g.vertices:
        rot[perm[v] - 1] = [perm[w] for w in g.neighbors(v)]
    return build_graph(rot)


# --------------------------------------------------------------------------
# ROT1 text format


def emit_rot1(g: PlanarGraph) -> str:
    lines = [f"ROT1 {g.n} {g.m}"]
    for v in g.vertices:
        lines.append(f"{v}: " + " ".join(map(str, g.neighbors(v))))
    return "\n".join(lines) + "\n"


def parse_rot1(text: str) -> PlanarGraph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty ROT1 input")
    head = lines[0].split(" ")
    if len(head) != 3 or head[0] != "ROT1" or not head[1].isdigit() or not head[2].isdigit():
        raise ParseError(f"bad ROT1 header: {lines[0]!r}")
    n, m = int(head[1]), int(head[2])
    if len(lines) != n + 1:
        raise ParseError(f"expected {n} vertex lines, got {len(lines) - 1}")
    rot = []
    for i, line in enumerate(lines[1:], start=1):
        key, sep, rest = line.partition(": ")
        if not sep or key != str(i):
            raise ParseError(f"bad vertex line {i}: {line!r}")
        toks = rest.split(" ")
        if not all(t.isdigit() for t in toks):
            raise ParseError(f"bad neighbour list at {i}")
        rot.append([int(t) for t in toks])
    g = build_graph(rot)
    if g.m != m:
        raise ParseError(f"header says {m} edges, rotation has {g.m}")
    return g
