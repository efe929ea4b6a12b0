"""DOT and SVG export.  SVG uses a Tutte barycentric embedding."""

from __future__ import annotations

import math
from typing import Iterable, Mapping

import numpy as np

from .e4_membership import TriColouring
from .errors import NotThreeConnected
from .planar_core import Edge, PlanarGraph, edge_key, vertex_connectivity_at_least

COLOUR_FILL = {"B": "black", "W": "white", "R": "red"}
SIDE_FILL = {0: "#1f77b4", 1: "#ff7f0e"}
RESIDUAL_TOL = 1e-9


def tutte_embedding(g: PlanarGraph, outer_face: int = 0) -> dict[int, tuple[float, float]]:
    """Pin ``outer_face`` to a regular polygon, put every other vertex at the
    mean of its neighbours.  Needs a 3-connected graph."""
    if not vertex_connectivity_at_least(g, 3):
        raise NotThreeConnected("Tutte embedding needs a 3-connected graph")
    outer = g.faces.vertices_of(outer_face)
    k = len(outer)
    pos = {v: (math.cos(2 * math.pi * i / k), math.sin(2 * math.pi * i / k))
           for i, v in enumerate(outer)}
    inner = [v for v in g.vertices if v not in pos]
    if inner:
        idx = {v: i for i, v in enumerate(inner)}
        A = np.zeros((len(inner), len(inner)))
        rhs = np.zeros((len(inner), 2))
        for v in inner:
            i = idx[v]
            A[i, i] = g.degree(v)
            for w in g.neighbors(v):
                if w in idx:
                    A[i, idx[w]] -= 1.0
                else:
                    rhs[i] += pos[w]
        xy = np.linalg.solve(A, rhs)
        assert np.abs(A @ xy - rhs).max() <= RESIDUAL_TOL
        for v in inner:
            pos[v] = (float(xy[idx[v], 0]), float(xy[idx[v], 1]))
    return pos


def _orient(a, b, c) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def segments_cross(p1, p2, q1, q2, eps: float = 1e-12) -> bool:
    """Proper crossing of segments p1p2 and q1q2 (shared endpoints excluded)."""
    d1, d2 = _orient(q1, q2, p1), _orient(q1, q2, p2)
    d3, d4 = _orient(p1, p2, q1), _orient(p1, p2, q2)
    return ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and \
           ((d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps))


def crossings(g: PlanarGraph, pos: Mapping[int, tuple[float, float]]) -> list[tuple[Edge, Edge]]:
    out = []
    es = g.edges
    for i, (a, b) in enumerate(es):
        for c, d in es[i + 1:]:
            if {a, b} & {c, d}:
                continue
            if segments_cross(pos[a], pos[b], pos[c], pos[d]):
                out.append(((a, b), (c, d)))
    return out


def to_dot(g: PlanarGraph, colouring: TriColouring | None = None,
           highlight: Iterable[Edge] = (), sides: tuple[Iterable[int], Iterable[int]] | None = None,
           ) -> str:
    marked = {edge_key(*e) for e in highlight}
    side_of = {}
    if sides is not None:
        for s, vs in enumerate(sides):
            for v in vs:
                side_of[v] = s
    lines = ["graph G {"]
    for v in g.vertices:
        attrs = []
        if colouring is not None:
            attrs.append(f'class="{colouring.of(v)}"')
            attrs.append(f'fillcolor="{COLOUR_FILL[colouring.of(v)]}"')
            attrs.append('style="filled"')
        if v in side_of:
            attrs.append(f'side="{"XY"[side_of[v]]}"')
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for u, v in g.edges:
        extra = ' [color="red", penwidth=3]' if (u, v) in marked else ""
        lines.append(f"  {u} -- {v}{extra};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_svg(g: PlanarGraph, colouring: TriColouring | None = None,
           highlight: Iterable[Edge] = (), sides: tuple[Iterable[int], Iterable[int]] | None = None,
           size: int = 400) -> str:
    pos = tutte_embedding(g)
    bad = crossings(g, pos)
    assert not bad, f"drawing has crossings: {bad[:3]}"
    marked = {edge_key(*e) for e in highlight}
    side_of = {}
    if sides is not None:
        for s, vs in enumerate(sides):
            for v in vs:
                side_of[v] = s

    def px(v):
        x, y = pos[v]
        half = size / 2
        return half + 0.9 * half * x, half - 0.9 * half * y

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">']
    for u, v in g.edges:
        (x1, y1), (x2, y2) = px(u), px(v)
        style = 'stroke="red" stroke-width="3"' if (u, v) in marked else 'stroke="gray" stroke-width="1"'
        out.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" {style}/>')
    for v in g.vertices:
        x, y = px(v)
        if v in side_of:
            fill = SIDE_FILL[side_of[v]]
        elif colouring is not None:
            fill = COLOUR_FILL[colouring.of(v)]
        else:
            fill = "white"
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="6" fill="{fill}" stroke="black"/>')
        out.append(f'<text x="{x + 8:.3f}" y="{y - 8:.3f}" font-size="10">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
