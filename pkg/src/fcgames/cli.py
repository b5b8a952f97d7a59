"""Command-line front end. Reports are JSON on stdout with a ``schema`` field."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import gallery
from .arena import Arena, ArenaError, KindMismatch, Lasso, parse_arena, serialize_arena
from .decomposition import decompose_lasso, decompose_prefix
from .fcg import check_kind, solve_fcg, regions
from .geography import gg_to_fcg, parse_gg, solve_gg_direct
from .infinite import (UnsupportedCondition, associated_property, check_greedy_bounded,
                       check_unambiguous_bounded, default_credit, parse_condition,
                       solve_infinite_via_transfer)
from .properties import parse_property, satisfies_char_hypothesis
from .strategies import EnumerationBoundError, classify_determinacy, min_moore_memory

SCHEMA = 1
OK, NEGATIVE, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(obj):
    print(json.dumps({"schema": SCHEMA, **obj}, indent=2, default=_default))


def _default(x):
    if isinstance(x, Fraction):
        return str(x)
    raise TypeError(type(x).__name__)


def load_arena(ref: str) -> Arena:
    """A path to an arena file, or a gallery name."""
    if os.path.exists(ref):
        with open(ref, encoding="utf-8") as fh:
            return parse_arena(fh.read())
    try:
        return gallery.get(ref).arena()
    except KeyError:
        raise UsageError(f"{ref!r} is neither a file nor a gallery entry") from None


def _condition(args, a):
    credit = None
    if args.credit is not None:
        if not args.unsafe_credit:
            raise UsageError("--credit overrides the registered W(|V|-1) credit; "
                             "pass --unsafe-credit to acknowledge")
        credit = args.credit
    return parse_condition(args.game, a, credit)


def cmd_solve(args):
    a = load_arena(args.arena)
    if args.start is not None and args.start not in a.owner:
        raise UsageError(f"unknown start vertex {args.start!r}")
    if args.game == "fcg":
        if args.property is None:
            raise UsageError("--game fcg needs --property")
        p = parse_property(args.property)
        check_kind(a, p)
        out = {"game": "fcg", "property": str(p), "regions": _regions_json(regions(a, p))}
        regs = out["regions"]
    else:
        w = _condition(args, a)
        res = solve_infinite_via_transfer(a, w, allow_unregistered=args.unsafe_credit)
        out = {"game": args.game, **res.to_json()}
        regs = out["regions"]
        if w.kind == "energy" and w.credit != default_credit(a):
            print("warning: credit differs from W(|V|-1); transfer is not known to be sound",
                  file=sys.stderr)
    if args.start is not None:
        out["start"] = args.start
        out["winner"] = 0 if args.start in regs["0"] else 1
        if args.game == "fcg" and args.witness:
            o = solve_fcg(a, parse_property(args.property), args.start)
            out["witness"] = [{"history": list(h), "move": m} for h, m in o.witness.items()]
    _emit(out)
    if args.assert_ and args.start is not None and out["winner"] != 0:
        return NEGATIVE
    return OK


def _regions_json(r):
    return {str(i): r[i] for i in (0, 1)}


def _words(s):
    return tuple(s.replace(",", " ").split())


def cmd_decompose(args):
    a = load_arena(args.arena)
    if (args.play is None) == (args.loop is None):
        raise UsageError("give exactly one of --play or --loop")
    if args.play is not None:
        cycles, residual = decompose_prefix(a, _words(args.play))
        if args.json:
            _emit({"cycles": [[list(e) for e in c.edges] for c in cycles],
                   "residual": [list(e) for e in residual.stack]})
        else:
            for c in cycles:
                print(c)
            print(f"residual: {residual}")
        return OK
    d = decompose_lasso(a, Lasso(_words(args.prefix or ""), _words(args.loop)))
    if args.json:
        _emit({"transient": [[list(e) for e in c.edges] for c in d.transient],
               "periodic": [[list(e) for e in c.edges] for c in d.periodic],
               "tailResidual": [list(e) for e in d.tail_residual.stack]})
    else:
        for c in d.transient:
            print(c)
        print("periodic:")
        for c in d.periodic:
            print(c)
        print(f"residual: {d.tail_residual}")
    return OK


def cmd_determinacy(args):
    a = load_arena(args.arena)
    rep = classify_determinacy(a, parse_property(args.property))
    _emit(rep.to_json())
    if args.assert_ and not rep.uniform_memoryless_determined:
        return NEGATIVE
    return OK


def cmd_memory(args):
    a = load_arena(args.arena)
    p = parse_property(args.property)
    check_kind(a, p)
    if args.start not in a.owner:
        raise UsageError(f"unknown start vertex {args.start!r}")
    winner = 0 if args.start in regions(a, p)[0] else 1
    player = winner if args.player is None else args.player
    if player != winner:
        raise UsageError(f"player {player} does not win from {args.start}")
    res = min_moore_memory(a, p, player, args.start, args.kmax)
    out = {"player": player, "start": args.start, "kmax": args.kmax, **res.to_json()}
    if res.machine is not None:
        m = res.machine
        out["machine"] = {
            "update": [[v, k, m2] for (v, k), m2 in sorted(m.update.items())],
            "next": [[v, k, w] for (v, k), w in sorted(m.next_move.items())],
        }
    _emit(out)
    return NEGATIVE if args.assert_ and res.exceeds_bound else OK


def cmd_closure(args):
    p = parse_property(args.property)
    v = satisfies_char_hypothesis(p, args.budget, args.max_len, args.seed)
    _emit({"property": str(p), "seed": args.seed, "cyclic": v.cyclic.to_json(),
           "concat": v.concat.to_json(), "concatComplement": v.concat_complement.to_json(),
           "charHypothesis": v.answer})
    return NEGATIVE if args.assert_ and v.answer != "yes" else OK


def cmd_check_greedy(args):
    a = load_arena(args.arena)
    w = _condition(args, a)
    if args.property is not None:
        p = parse_property(args.property)
    else:
        p = associated_property(w, a, allow_unregistered=True)
    r = check_greedy_bounded(a, w, p, args.budget, args.seed)
    _emit({"condition": str(w), "property": str(p), "seed": args.seed,
           "budget": args.budget, **r.to_json()})
    return NEGATIVE if args.assert_ and r.found else OK


def cmd_check_unambiguous(args):
    a = load_arena(args.arena)
    p = parse_property(args.property)
    r = check_unambiguous_bounded(a, p, args.budget, args.seed)
    _emit({"property": str(p), "seed": args.seed, "budget": args.budget, **r.to_json()})
    return NEGATIVE if args.assert_ and r.found else OK


def cmd_gg(args):
    try:
        with open(args.input, encoding="utf-8") as fh:
            g = parse_gg(fh.read())
    except OSError as e:
        raise UsageError(str(e)) from None
    red = gg_to_fcg(g)
    o = solve_fcg(red.arena, red.property, red.start)
    _emit({"winner": "mover" if red.mover_wins(o.winner) else "opponent",
           "direct": solve_gg_direct(g) if args.check else None,
           "fcgWinner": o.winner, "construction": red.construction,
           "property": str(red.property), "start": red.start,
           "arena": serialize_arena(red.arena)})
    return OK


def cmd_gallery(args):
    if args.name is None:
        _emit({"entries": [{"name": e.name, "property": e.property, "note": e.note}
                           for e in gallery.ENTRIES.values()],
               "aliases": gallery.ALIASES})
        return OK
    try:
        e = gallery.get(args.name)
    except KeyError as err:
        raise UsageError(err.args[0]) from None
    if args.emit:
        sys.stdout.write(e.text)
    else:
        _emit({"name": e.name, "property": e.property, "note": e.note, "arena": e.text})
    return OK


def build_parser():
    ap = _Parser(prog="fcgames", description="First-cycle games toolkit")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        return sp

    def arena(sp):
        sp.add_argument("--arena", required=True, help="arena file or gallery name")

    def asserting(sp):
        sp.add_argument("--assert", dest="assert_", action="store_true",
                        help="exit 1 on a negative verdict")

    def search(sp):
        sp.add_argument("--budget", type=int, default=1000)
        sp.add_argument("--seed", type=int, default=0)

    def credit(sp):
        sp.add_argument("--credit", type=int)
        sp.add_argument("--unsafe-credit", action="store_true")

    sp = add("solve", cmd_solve, "winning regions of a first-cycle or infinite game")
    arena(sp)
    sp.add_argument("--game", default="fcg", help="fcg | parity | meanpayoff:<nu> | energy")
    sp.add_argument("--property")
    sp.add_argument("--start")
    sp.add_argument("--witness", action="store_true", help="include the witness strategy tree")
    credit(sp)
    asserting(sp)

    sp = add("decompose", cmd_decompose, "cycles-decomposition of a play or lasso")
    arena(sp)
    sp.add_argument("--play", help="vertices separated by spaces or commas")
    sp.add_argument("--prefix")
    sp.add_argument("--loop")
    sp.add_argument("--json", action="store_true")

    sp = add("determinacy", cmd_determinacy, "memoryless determinacy report")
    arena(sp)
    sp.add_argument("--property", required=True)
    asserting(sp)

    sp = add("memory", cmd_memory, "minimal Moore-machine memory for the winner")
    arena(sp)
    sp.add_argument("--property", required=True)
    sp.add_argument("--start", required=True)
    sp.add_argument("--kmax", type=int, default=3)
    sp.add_argument("--player", type=int, choices=(0, 1))
    asserting(sp)

    sp = add("closure", cmd_closure, "closure of a cycle property")
    sp.add_argument("--property", required=True)
    sp.add_argument("--budget", type=int, default=10_000)
    sp.add_argument("--max-len", type=int, default=8)
    sp.add_argument("--seed", type=int, default=0)
    asserting(sp)

    sp = add("check-greedy", cmd_check_greedy, "bounded search for greediness violations")
    arena(sp)
    sp.add_argument("--game", required=True, help="parity | meanpayoff:<nu> | energy")
    sp.add_argument("--property", help="defaults to the associated cycle property")
    search(sp)
    credit(sp)
    asserting(sp)

    sp = add("check-unambiguous", cmd_check_unambiguous, "bounded search for ambiguity witnesses")
    arena(sp)
    sp.add_argument("--property", required=True)
    search(sp)
    asserting(sp)

    sp = add("gg", cmd_gg, "solve Generalised Geography through the first-cycle reduction")
    sp.add_argument("--input", required=True)
    sp.add_argument("--check", action="store_true", help="also run the direct solver")

    sp = add("gallery", cmd_gallery, "list or print built-in arenas")
    sp.add_argument("--name")
    sp.add_argument("--emit", action="store_true", help="print the arena file only")
    return ap


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args)
    except UsageError as e:
        print(f"fcgames: error: {e}", file=sys.stderr)
    except (ArenaError, KindMismatch, UnsupportedCondition, EnumerationBoundError,
            ValueError, KeyError, OSError) as e:
        print(f"fcgames: error: {e}", file=sys.stderr)
    return USAGE


def main():
    sys.exit(run())
