"""Exact first-cycle game solving by backward induction over simple paths."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

from .arena import Arena, KindMismatch, successors
from .properties import CycleProperty, member

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


def check_kind(a: Arena, p: CycleProperty):
    if not p.supports(a.kind):
        raise KindMismatch(f"property {p} cannot read {a.kind} labels")


class LeafCache:
    """Memoizes ``member`` on cycles given as vertex-index tuples."""

    def __init__(self, core, p):
        self.core, self.p, self.memo = core, p, {}

    def __call__(self, cyc):
        r = self.memo.get(cyc)
        if r is None:
            lab = self.core.lab
            word = [lab[cyc[k], cyc[k + 1]] for k in range(len(cyc) - 1)]
            word.append(lab[cyc[-1], cyc[0]])
            r = self.memo[cyc] = member(self.p, word)
        return r


def _p0_wins(core, start, leaf) -> bool:
    succ, owner = core.succ, core.owner
    pos = [-1] * len(succ)
    path = [start]
    pos[start] = 0

    def rec(v):
        base = len(path)
        # a single successor passes its value up whoever owns v
        while len(succ[v]) == 1:
            w = succ[v][0]
            if pos[w] >= 0:
                val = leaf(tuple(path[pos[w]:]))
                break
            pos[w] = len(path)
            path.append(w)
            v = w
        else:
            or_node = owner[v] == 0
            val = not or_node
            for w in succ[v]:
                if pos[w] >= 0:
                    child = leaf(tuple(path[pos[w]:]))
                else:
                    pos[w] = len(path)
                    path.append(w)
                    child = rec(w)
                    path.pop()
                    pos[w] = -1
                if child == or_node:
                    val = child
                    break
        while len(path) > base:
            pos[path.pop()] = -1
        return val

    return rec(start)


def p0_region_indices(a: Arena, p: CycleProperty, leaf=None):
    """Indices of vertices won by Player 0 (no witnesses)."""
    check_kind(a, p)
    core = a.core
    leaf = leaf or LeafCache(core, p)
    return [i for i in range(len(core.ids)) if _p0_wins(core, i, leaf)]


@dataclass
class FcgOutcome:
    start: str
    winner: int
    witness: dict = field(default_factory=dict)  # history tuple -> successor

    def move(self, history):
        return self.witness[tuple(history)]


def _witness(core, start, winner, leaf):
    succ, owner, ids = core.succ, core.owner, core.ids
    pos = [-1] * len(succ)
    path = [start]
    pos[start] = 0
    strat = {}

    def value(v):
        # Player 0 wins from the current path
        or_node = owner[v] == 0
        for w in succ[v]:
            val = child(w)
            if val == or_node:
                return val
        return not or_node

    def child(w):
        if pos[w] >= 0:
            return leaf(tuple(path[pos[w]:]))
        pos[w] = len(path)
        path.append(w)
        val = value(path[-1])
        path.pop()
        pos[w] = -1
        return val

    want = winner == 0

    def build(v):
        if owner[v] == winner:
            for w in succ[v]:
                if child(w) == want:
                    strat[tuple(ids[x] for x in path)] = ids[w]
                    descend(w)
                    return
            raise AssertionError("winner has no winning move")
        for w in succ[v]:
            descend(w)

    def descend(w):
        if pos[w] >= 0:
            return
        pos[w] = len(path)
        path.append(w)
        build(w)
        path.pop()
        pos[w] = -1

    build(start)
    return strat


def solve_fcg(a: Arena, p: CycleProperty, start: str, leaf=None) -> FcgOutcome:
    """Winner of the first-cycle game from ``start`` with a witness strategy tree.

    The witness maps every history reachable against arbitrary opposing play
    (a simple path ending at a winner's vertex) to the chosen successor.
    """
    check_kind(a, p)
    if start not in a.owner:
        raise KeyError(f"unknown start vertex {start!r}")
    core = a.core
    leaf = leaf or LeafCache(core, p)
    s = core.index[start]
    winner = 0 if _p0_wins(core, s, leaf) else 1
    return FcgOutcome(start, winner, _witness(core, s, winner, leaf))


def solve_fcg_all(a: Arena, p: CycleProperty) -> dict:
    check_kind(a, p)
    leaf = LeafCache(a.core, p)
    return {v: solve_fcg(a, p, v, leaf) for v in a.vertices}


def regions(a: Arena, p: CycleProperty):
    """Winning regions ``{0: [...], 1: [...]}`` in canonical order."""
    won = set(p0_region_indices(a, p))
    ids = a.core.ids
    return {0: [ids[i] for i in range(len(ids)) if i in won],
            1: [ids[i] for i in range(len(ids)) if i not in won]}


def first_cycle_plays(a: Arena, start, strategies=()):
    """Yield every simple-path play from ``start`` up to its first cycle.

    ``strategies`` is a collection of memoryless strategies (``player``,
    ``choice``) constraining the corresponding players. Each item is
    ``(path, closing_vertex)``.
    """
    fixed = {}
    for s in strategies:
        for v, w in s.choice.items():
            if a.owner[v] == s.player:
                fixed[v] = w

    def rec(path, seen):
        v = path[-1]
        nxt = [fixed[v]] if v in fixed else successors(a, v)
        for w in nxt:
            if w in seen:
                yield tuple(path), w
            else:
                path.append(w)
                seen.add(w)
                yield from rec(path, seen)
                seen.discard(w)
                path.pop()

    yield from rec([start], {start})


def witness_is_sound(a: Arena, p: CycleProperty, out: FcgOutcome) -> bool:
    """Replay the witness against every opposing choice."""
    bad = []

    def rec(path):
        v = path[-1]
        if a.owner[v] == out.winner:
            key = tuple(path)
            if key not in out.witness:
                bad.append(key)
                return
            nxt = [out.witness[key]]
        else:
            nxt = [w for (x, w) in a.edges if x == v]
        for w in nxt:
            if w in path:
                i = path.index(w)
                cyc = path[i:] + [w]
                word = [a.label[x, y] for x, y in zip(cyc, cyc[1:])]
                if member(p, word) != (out.winner == 0):
                    bad.append(tuple(cyc))
            else:
                rec(path + [w])

    rec([out.start])
    return not bad
