"""Covers of a triangulation by two induced trees <-> Hamilton cycles of its dual.

Throughout, ``P`` is the cubic plane graph, ``G, corr = dual_graph(P)`` is
the triangulation, and face ``i`` of ``P`` is vertex ``i + 1`` of ``G``.
The Hamilton cycle belonging to a cover ``(X, Y)`` of ``G`` consists of the
``P``-edges crossed by the ``X``-``Y`` edges of ``G``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import DegreeViolation, NotHamiltonian, ParseError
from .planar_core import DualCorrespondence, Edge, PlanarGraph, dual_graph, edge_key
from .tree_pair import CoverPair, is_acyclic, is_connected_set


@dataclass(frozen=True)
class HamiltonCycle:
    edges: tuple[Edge, ...]

    @classmethod
    def of(cls, edges: Iterable[Edge]) -> "HamiltonCycle":
        return cls(tuple(sorted(edge_key(*e) for e in edges)))

    def to_text(self) -> str:
        return f"CYC1 {len(self.edges)}\n" + "".join(f"{u}-{v}\n" for u, v in self.edges)

    @classmethod
    def from_text(cls, text: str) -> "HamiltonCycle":
        lines = [ln for ln in text.split("\n") if ln]
        if not lines or not lines[0].startswith("CYC1"):
            raise ParseError("CYC1 input must start with a 'CYC1 <k>' header")
        head = lines[0].split(" ")
        if len(head) != 2 or not head[1].isdigit() or int(head[1]) != len(lines) - 1:
            raise ParseError(f"bad CYC1 header {lines[0]!r}")
        edges = []
        for ln in lines[1:]:
            a, sep, b = ln.partition("-")
            if not sep or not a.isdigit() or not b.isdigit():
                raise ParseError(f"bad edge token {ln!r}")
            edges.append((int(a), int(b)))
        return cls.of(edges)


@dataclass(frozen=True)
class CycleCover:
    """A 2-factor with more than one component."""

    cycles: tuple[tuple[int, ...], ...]

    @property
    def components(self) -> int:
        return len(self.cycles)


def _cycles_of(edges: Iterable[Edge], vertices: Iterable[int]) -> list[tuple[int, ...]]:
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen: set[int] = set()
    cycles = []
    for start in sorted(adj):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            if nxt == start:
                break
            seen.add(nxt)
            cyc.append(nxt)
            prev, cur = cur, nxt
        cycles.append(tuple(cyc))
    return cycles


def cover_to_dual_cycle(g: PlanarGraph, cover: CoverPair, corr: DualCorrespondence,
                        ) -> HamiltonCycle | CycleCover:
    """Dual edges of the ``X``-``Y`` cut, as a cycle or a 2-factor."""
    X = cover.X
    cut = [corr.dual_to_edge[e] for e in g.edges if (e[0] in X) != (e[1] in X)]
    n_dual = len(g.faces)
    deg: dict[int, int] = {}
    for u, v in cut:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if len(deg) != n_dual or any(d != 2 for d in deg.values()):
        raise DegreeViolation("cut edges do not form a 2-factor of the dual")
    cycles = _cycles_of(cut, range(1, n_dual + 1))
    if len(cycles) == 1:
        return HamiltonCycle.of(cut)
    return CycleCover(tuple(cycles))


def verify_hamilton(p: PlanarGraph, edges: Iterable[Edge] | HamiltonCycle) -> bool:
    if isinstance(edges, HamiltonCycle):
        edges = edges.edges
    edges = {edge_key(*e) for e in edges}
    if len(edges) != p.n or any(not p.has_edge(u, v) for u, v in edges):
        return False
    deg = {v: 0 for v in p.vertices}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    if any(d != 2 for d in deg.values()):
        return False
    return len(_cycles_of(edges, p.vertices)) == 1


def cycle_to_cover(p: PlanarGraph, cycle: HamiltonCycle, corr: DualCorrespondence,
                   g: PlanarGraph | None = None) -> CoverPair:
    """Split the faces of ``P`` by the cycle; the side holding face 0 is ``X``."""
    if not verify_hamilton(p, cycle):
        raise NotHamiltonian("input is not a Hamilton cycle")
    on_cycle = set(cycle.edges)
    faces = p.faces
    region = {0: 0}
    queue = deque([0])
    while queue:
        f = queue.popleft()
        for u, v in faces.walks[f]:
            if edge_key(u, v) in on_cycle:
                continue
            h = faces.dart_face[(v, u)]
            if h not in region:
                region[h] = 0
                queue.append(h)
    X = frozenset(corr.face_to_vertex[f] for f in region)
    Y = frozenset(corr.face_to_vertex) - X
    if g is None:
        g = dual_graph(p)[0]
    for side in (X, Y):
        if not (is_acyclic(g, side) and is_connected_set(g, side)):
            raise NotHamiltonian("cycle sides do not induce trees")
    return CoverPair(X, Y, True, True)
