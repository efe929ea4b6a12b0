"""Growing E(4) triangulations from the octahedron by vertex splitting.

The split ``alpha(s, v, t)`` replaces a non-red vertex ``v`` whose neighbour
cycle is ``v1 ... vn`` (rotated so that ``v1 = s`` and ``vk = t``) by a path
``x - u - y``:

* ``x`` takes the arc ``v1 ... vk`` (clockwise from ``s`` to ``t``),
* ``y`` takes the arc ``vk ... vn v1``,
* ``u`` is joined to ``v1``, ``x``, ``vk``, ``y`` and becomes red.

Id assignment: ``x, u, y`` get ``n+1, n+2, n+3``; ``v`` is then deleted and
every id above ``v`` shifts down by one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .e4_membership import B, R, W, TriColouring
from .errors import InvalidAlphaTriple, ParseError
from .planar_core import PlanarGraph, build_graph

OCTAHEDRON_ROTATION = (
    (3, 6, 4, 5),
    (3, 5, 4, 6),
    (1, 5, 2, 6),
    (1, 6, 2, 5),
    (1, 4, 2, 3),
    (1, 3, 2, 4),
)


@dataclass(frozen=True)
class AlphaOp:
    s: int
    v: int
    t: int


@dataclass(frozen=True)
class GenerationHistory:
    ops: tuple[AlphaOp, ...] = ()
    seed: int | None = None
    base: str = "octahedron"

    def to_text(self) -> str:
        lines = [f"BASE {self.base}"]
        if self.seed is not None:
            lines.append(f"# seed {self.seed}")
        lines += [f"{op.s} {op.v} {op.t}" for op in self.ops]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "GenerationHistory":
        lines = [ln for ln in text.split("\n") if ln]
        if not lines or lines[0] != "BASE octahedron":
            raise ParseError("ALPHA1 input must start with 'BASE octahedron'")
        seed = None
        ops = []
        for ln in lines[1:]:
            if ln.startswith("#"):
                parts = ln[1:].split()
                if len(parts) == 2 and parts[0] == "seed":
                    seed = int(parts[1])
                continue
            toks = ln.split(" ")
            if len(toks) != 3 or not all(t.isdigit() for t in toks):
                raise ParseError(f"bad ALPHA1 line: {ln!r}")
            ops.append(AlphaOp(*map(int, toks)))
        return cls(tuple(ops), seed)


def octahedron() -> tuple[PlanarGraph, TriColouring]:
    g = build_graph(OCTAHEDRON_ROTATION)
    return g, TriColouring((B, B, W, W, R, R))


def alpha_candidates(g: PlanarGraph, colouring: TriColouring) -> list[tuple[int, int, int]]:
    out = []
    for v in g.vertices:
        if colouring.of(v) == R:
            continue
        nbrs = sorted(w for w in g.neighbors(v) if colouring.of(w) != R)
        out.extend((v, s, t) for s in nbrs for t in nbrs if s != t)
    return out


def split_vertex(g: PlanarGraph, colouring: TriColouring, s: int, v: int, t: int,
                 ) -> tuple[PlanarGraph, TriColouring]:
    """The alpha surgery without the red-avoidance check.

    ``x, y`` keep the colour of ``v``; ``u`` gets the colour missing from
    ``{colour(v), colour(s)}``.  ``s`` and ``t`` must be equally coloured
    neighbours of ``v`` (so the result stays Eulerian).
    """
    n = g.n
    rot = g.neighbors(v)
    if s not in rot or t not in rot or s == t:
        raise InvalidAlphaTriple(f"({s},{v},{t}): s, t must be distinct neighbours of v")
    if colouring.of(s) != colouring.of(t):
        raise InvalidAlphaTriple(f"({s},{v},{t}): s and t differ in colour")
    i = rot.index(s)
    cyc = rot[i:] + rot[:i]
    k = cyc.index(t)  # 0-based position of t
    x, u, y = n + 1, n + 2, n + 3
    arc_x = cyc[: k + 1]
    arc_y = cyc[k:] + cyc[:1]

    new: dict[int, list[int]] = {w: list(g.neighbors(w)) for w in g.vertices if w != v}
    new[x] = list(arc_x) + [u]
    new[y] = list(arc_y) + [u]
    new[u] = [s, x, t, y]
    on_x = set(arc_x[1:-1])
    on_y = set(arc_y[1:-1])
    for w in cyc:
        r = new[w]
        j = r.index(v)
        if w == s:
            r[j:j + 1] = [x, u, y]
        elif w == t:
            r[j:j + 1] = [y, u, x]
        elif w in on_x:
            r[j] = x
        else:
            assert w in on_y
            r[j] = y

    def ren(a: int) -> int:
        return a - 1 if a > v else a

    ids = sorted(new)
    table = [[ren(w) for w in new[a]] for a in ids]
    cv = colouring.of(v)
    third = ({B, W, R} - {cv, colouring.of(s)}).pop()
    colours = [colouring.of(a) for a in ids if a <= n] + [cv, third, cv]
    return build_graph(table), TriColouring(tuple(colours))


def apply_alpha(g: PlanarGraph, colouring: TriColouring, op: AlphaOp | tuple[int, int, int],
                ) -> tuple[PlanarGraph, TriColouring]:
    if not isinstance(op, AlphaOp):
        op = AlphaOp(*op)
    s, v, t = op.s, op.v, op.t
    for a in (s, v, t):
        if not 1 <= a <= g.n:
            raise InvalidAlphaTriple(f"unknown vertex {a}")
    if R in (colouring.of(s), colouring.of(v), colouring.of(t)):
        raise InvalidAlphaTriple(f"path {s}-{v}-{t} meets the red class")
    return split_vertex(g, colouring, s, v, t)


class XorShift64Star:
    """xorshift64* generator seeded through splitmix64.

    Fixed so that histories replay identically on every platform.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        z = (seed + 0x9E3779B97F4A7C15) & self.MASK
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        z ^= z >> 31
        self.state = z or 0x9E3779B97F4A7C15

    def next(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & self.MASK
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & self.MASK

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` by rejection."""
        limit = self.MASK + 1 - ((self.MASK + 1) % n)
        while True:
            r = self.next()
            if r < limit:
                return r % n


def random_instance(ops: int, seed: int) -> tuple[PlanarGraph, TriColouring, GenerationHistory]:
    rng = XorShift64Star(seed)
    g, col = octahedron()
    history = []
    for _ in range(ops):
        cands = alpha_candidates(g, col)
        assert cands, "E(4) instance without alpha candidates"
        v, s, t = cands[rng.below(len(cands))]
        op = AlphaOp(s, v, t)
        g, col = apply_alpha(g, col, op)
        history.append(op)
    return g, col, GenerationHistory(tuple(history), seed)


def replay(history: GenerationHistory) -> tuple[PlanarGraph, TriColouring]:
    g, col = octahedron()
    for op in history.ops:
        g, col = apply_alpha(g, col, op)
    return g, col
