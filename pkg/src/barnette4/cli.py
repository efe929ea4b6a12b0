"""Command-line entry point.

Exit codes: 0 success or pass, 1 verification failure or pipeline error,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import drawing
from .alpha_generator import GenerationHistory, random_instance, replay
from .e4_membership import classify, tricolouring
from .errors import Barnette4Error, GraphError, ParseError
from .oracle import (
    COVER_CAP,
    HAMILTON_CAP,
    enumerate_cover_pairs,
    enumerate_hamilton_cycles,
    verify_theorem11,
    verify_theorem12,
)
from .planar_core import dual_graph, edge_key, emit_rot1, parse_rot1
from .stein_duality import HamiltonCycle, cover_to_dual_cycle
from .tree_pair import (
    enumerate_thm13_covers,
    extend_cover,
    format_choices,
    parse_choices,
    seed_pair_thm13,
    seed_pair_thm14,
    select_K,
)


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii", newline="") as fh:
        return fh.read()


def _graph(args):
    return parse_rot1(_read(args.input))


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected integers, got {text!r}") from None


def _edge_list(text: str) -> list[tuple[int, int]]:
    out = []
    for tok in text.replace(",", " ").split():
        a, sep, b = tok.partition("-")
        if not sep or not a.isdigit() or not b.isdigit():
            raise UsageError(f"bad edge token {tok!r}")
        out.append((int(a), int(b)))
    return out


# --------------------------------------------------------------------------
# subcommands


def cmd_gen(args, out) -> int:
    if args.history:
        g, col = replay(GenerationHistory.from_text(_read(args.history)))
        history = None
    else:
        g, col, history = random_instance(args.ops, args.seed)
    if args.primal:
        g, _ = dual_graph(g)
        col = None
    if args.emit == "rot1":
        out.write(emit_rot1(g))
    elif args.emit == "alpha1":
        if history is None:
            raise UsageError("--emit alpha1 needs --ops/--seed, not --history")
        out.write(history.to_text())
    elif args.emit == "dot":
        out.write(drawing.to_dot(g, col))
    else:
        out.write(drawing.to_svg(g, col))
    return 0


def cmd_classify(args, out) -> int:
    out.write(classify(_graph(args)).to_text())
    return 0


def cmd_color(args, out) -> int:
    out.write(tricolouring(_graph(args)).to_text())
    return 0


def cmd_construct(args, out) -> int:
    g = _graph(args)
    col = tricolouring(g)
    corr = dual_graph(g)[1].inverse()
    covers = []
    if args.mode == "thm13":
        K = select_K(g, col).K
        out.write("K: " + " ".join(map(str, K)) + "\n")
        if args.choices:
            cv = parse_choices(args.choices)
            if sorted(v for v, _ in cv) != sorted(K):
                raise UsageError("--choices must give one choice per vertex of K")
            covers.append((format_choices(cv), extend_cover(g, col, seed_pair_thm13(g, col, K, cv))))
        else:
            covers.extend((format_choices(cv), c) for cv, c in enumerate_thm13_covers(g, col, K))
    else:
        L = _int_list(args.L or "")
        n = {}
        for tok in (args.n or "").replace(",", " ").split():
            v, sep, w = tok.partition(":")
            if not sep or not v.isdigit() or not w.isdigit():
                raise UsageError(f"bad --n token {tok!r}")
            n[int(v)] = int(w)
        if set(n) != set(L):
            raise UsageError("--n must give a neighbour for every vertex of --L")
        pair = seed_pair_thm14(g, col, L, n)
        label = " ".join(f"{v}:{n[v]}" for v in sorted(n)) or "-"
        covers.append((label, extend_cover(g, col, pair)))
    for label, cover in covers:
        out.write(f"choices: {label}\n")
        out.write(cover.to_text())
        if args.cycle:
            h = cover_to_dual_cycle(g, cover, corr)
            if isinstance(h, HamiltonCycle):
                out.write(h.to_text())
            else:
                out.write(f"components={h.components}\n")
    return 0


def cmd_verify(args, out) -> int:
    p = _graph(args)
    if args.theorem == "1.1":
        rep = verify_theorem11(p, jobs=args.jobs)
    else:
        faces = [f - 1 for f in _int_list(args.faces or "")]
        chosen_edges = _edge_list(args.chosen or "")
        if len(chosen_edges) != len(faces):
            raise UsageError("--chosen needs one edge per face in --faces")
        for f in faces:
            if not 0 <= f < len(p.faces):
                raise UsageError(f"unknown face {f + 1}")
        rep = verify_theorem12(p, faces, {f: edge_key(*e) for f, e in zip(faces, chosen_edges)})
    out.write(rep.to_text())
    return 0 if rep.passed else 1


def cmd_oracle(args, out) -> int:
    g = _graph(args)
    if args.what == "cycles":
        cycles = sorted(enumerate_hamilton_cycles(g, cap=args.cap or HAMILTON_CAP),
                        key=lambda h: h.edges)
        out.write(f"hamilton_cycles={len(cycles)}\n")
        if args.list:
            for h in cycles:
                out.write(h.to_text())
    else:
        res = enumerate_cover_pairs(g, keep=args.list, cap=args.cap or COVER_CAP)
        out.write(f"acyclic_pairs={res.acyclic_pairs}\ntree_pairs={res.tree_pairs}\n")
        if args.list:
            for X, Y in res.pairs:
                out.write("X: " + " ".join(map(str, sorted(X)))
                          + " | Y: " + " ".join(map(str, sorted(Y))) + "\n")
    return 0


def cmd_export(args, out) -> int:
    g = _graph(args)
    col = tricolouring(g) if args.colour else None
    highlight = HamiltonCycle.from_text(_read(args.cycle)).edges if args.cycle else ()
    if args.format == "dot":
        out.write(drawing.to_dot(g, col, highlight))
    else:
        out.write(drawing.to_svg(g, col, highlight))
    return 0


# --------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="barnette4", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(sp):
        sp.add_argument("--input", default="-", help="ROT1 file (default stdin)")
        return sp

    sp = sub.add_parser("gen", help="grow an E(4) triangulation from the octahedron")
    sp.add_argument("--ops", type=int, default=0)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--history", help="replay an ALPHA1 file instead of sampling")
    sp.add_argument("--emit", choices=["rot1", "dot", "svg", "alpha1"], default="rot1")
    sp.add_argument("--primal", action="store_true", help="emit the cubic dual instead")
    sp.set_defaults(func=cmd_gen)

    sp = with_input(sub.add_parser("classify", help="family membership flags"))
    sp.set_defaults(func=cmd_classify)

    sp = with_input(sub.add_parser("color", help="B/W/R colouring of an E(4) triangulation"))
    sp.set_defaults(func=cmd_color)

    sp = with_input(sub.add_parser("construct", help="closed-pair seeding and extension"))
    sp.add_argument("--mode", choices=["thm13", "thm14"], required=True)
    sp.add_argument("--choices", help="choice per K vertex for --mode thm13, e.g. '2:STAR 7:PATH:5'")
    sp.add_argument("--L", help="far-apart seed vertices for --mode thm14, e.g. '3,17'")
    sp.add_argument("--n", help="chosen neighbour per seed vertex, e.g. '3:1,17:20'")
    sp.add_argument("--cycle", action="store_true", help="also print the dual Hamilton cycle")
    sp.set_defaults(func=cmd_construct)

    sp = with_input(sub.add_parser("verify", help="run a verification report on a cubic ROT1 graph"))
    sp.add_argument("--theorem", choices=["1.1", "1.2"], required=True)
    sp.add_argument("--faces", help="1.2: 1-based face ids (dual vertex ids)")
    sp.add_argument("--chosen", help="1.2: one edge per face, e.g. '1-2,7-9'")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = with_input(sub.add_parser("oracle", help="exhaustive counts"))
    sp.add_argument("--what", choices=["cycles", "covers"], default="cycles")
    sp.add_argument("--list", action="store_true")
    sp.add_argument("--cap", type=int, help="vertex cap (default 40 for cycles, 24 for covers)")
    sp.set_defaults(func=cmd_oracle)

    sp = with_input(sub.add_parser("export", help="DOT or SVG drawing"))
    sp.add_argument("--format", choices=["dot", "svg"], default="dot")
    sp.add_argument("--colour", action="store_true", help="colour vertices B/W/R")
    sp.add_argument("--cycle", help="CYC1 file to overlay")
    sp.set_defaults(func=cmd_export)
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except (UsageError, ParseError, GraphError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except Barnette4Error as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
