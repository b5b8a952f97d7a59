"""Memoryless and finite-memory strategies for first-cycle games.

Everything here is exhaustive enumeration checked by exhaustive play
traversal, so results are exact but only feasible on small arenas.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Optional

from .arena import Arena
from .fcg import LeafCache, check_kind, p0_region_indices
from .properties import CycleProperty

MEMORYLESS_LIMIT = 10**6
MOORE_LIMIT = 10**7


class EnumerationBoundError(RuntimeError):
    pass


@dataclass(frozen=True)
class MemorylessStrategy:
    player: int
    choice: dict

    def validate(self, a: Arena):
        for v in a.player_vertices(self.player):
            w = self.choice.get(v)
            if w is None or (v, w) not in a.label:
                raise ValueError(f"strategy has no valid move at {v}")
        return self

    def to_json(self):
        return {"player": self.player, "choice": dict(sorted(self.choice.items()))}


@dataclass(frozen=True)
class MooreMachine:
    """Finite-memory strategy: memory ``0..size-1`` starting in ``initial``.

    ``update[v, m]`` is the memory after leaving ``v`` in memory ``m``;
    ``next_move[v, m]`` is the successor picked at the player's vertex ``v``.
    """

    player: int
    size: int
    update: dict
    next_move: dict
    initial: int = 0

    def validate(self, a: Arena):
        for v in a.vertices:
            for m in range(self.size):
                if self.update.get((v, m)) not in range(self.size):
                    raise ValueError(f"update undefined at ({v},{m})")
                if a.owner[v] == self.player and (v, self.next_move.get((v, m))) not in a.label:
                    raise ValueError(f"next move at ({v},{m}) is not an edge")
        return self

    def strategy(self, history):
        """The move prescribed after a history ending at the player's vertex."""
        m = self.initial
        for v in history[:-1]:
            m = self.update[v, m]
        return self.next_move[history[-1], m]


def _choice_lists(a, player):
    core = a.core
    verts = [i for i in range(len(core.ids)) if core.owner[i] == player]
    return verts, [core.succ[i] for i in verts]


def count_memoryless(a, player):
    return math.prod(len(s) for s in _choice_lists(a, player)[1])


def _iter_choices(a, player, limit=MEMORYLESS_LIMIT):
    verts, options = _choice_lists(a, player)
    total = math.prod(len(s) for s in options)
    if total > limit:
        raise EnumerationBoundError(f"{total} memoryless strategies exceed the limit {limit}")
    n = len(a.core.ids)
    for picks in itertools.product(*options):
        choice = [-1] * n
        for v, w in zip(verts, picks):
            choice[v] = w
        yield choice


def _to_strategy(a, player, choice):
    ids = a.core.ids
    return MemorylessStrategy(player, {ids[v]: ids[w] for v, w in enumerate(choice) if w >= 0})


def _to_index(a, s):
    core = a.core
    choice = [-1] * len(core.ids)
    for v, w in s.choice.items():
        if core.owner[core.index[v]] == s.player:
            choice[core.index[v]] = core.index[w]
    return choice


def enumerate_memoryless(a: Arena, player: int, limit=MEMORYLESS_LIMIT):
    """All memoryless strategies of ``player`` in canonical order."""
    for choice in _iter_choices(a, player, limit):
        yield _to_strategy(a, player, choice)


def _moves(core, choice, player):
    return [(choice[v],) if core.owner[v] == player else core.succ[v]
            for v in range(len(core.succ))]


def _wins_under(moves, player, start, leaf):
    """Does every play from ``start`` along ``moves`` close a cycle good for ``player``?"""
    want = player == 0
    pos = [-1] * len(moves)
    path = [start]
    pos[start] = 0

    def rec(v):
        base = len(path)
        ok = True
        # forced stretches are walked without recursing
        while len(moves[v]) == 1:
            w = moves[v][0]
            if pos[w] >= 0:
                ok = leaf(tuple(path[pos[w]:])) == want
                break
            pos[w] = len(path)
            path.append(w)
            v = w
        else:
            for w in moves[v]:
                if pos[w] >= 0:
                    ok = leaf(tuple(path[pos[w]:])) == want
                else:
                    pos[w] = len(path)
                    path.append(w)
                    ok = rec(w)
                    path.pop()
                    pos[w] = -1
                if not ok:
                    break
        while len(path) > base:
            pos[path.pop()] = -1
        return ok

    return rec(start)


def _walk_wins(nxt, want, start, leaf):
    # every vertex has one move: the play is a plain walk into a cycle
    path, seen, v = [start], {start: 0}, start
    while True:
        v = nxt[v]
        if v in seen:
            return leaf(tuple(path[seen[v]:])) == want
        seen[v] = len(path)
        path.append(v)


def _mless_wins(core, choice, player, start, leaf):
    return _wins_under(_moves(core, choice, player), player, start, leaf)


def memoryless_wins_fcg(a: Arena, p: CycleProperty, s: MemorylessStrategy, start: str) -> bool:
    """Does ``s`` win every play from ``start`` in the first-cycle game?"""
    check_kind(a, p)
    s.validate(a)
    if start not in a.owner:
        raise KeyError(f"unknown start vertex {start!r}")
    core = a.core
    return _mless_wins(core, _to_index(a, s), s.player, core.index[start], LeafCache(core, p))


def _region(a, p, player, leaf=None):
    won0 = set(p0_region_indices(a, p, leaf))
    return [i for i in range(len(a.core.ids)) if (i in won0) == (player == 0)]


def pointwise_memoryless_region(a: Arena, p: CycleProperty, player: int,
                                limit=MEMORYLESS_LIMIT, candidates=None, leaf=None):
    """Vertices from which some memoryless strategy of ``player`` wins.

    ``candidates`` narrows the vertices tried (e.g. to the player's winning
    region, outside of which no strategy wins).
    """
    check_kind(a, p)
    core = a.core
    leaf = leaf or LeafCache(core, p)
    if candidates is None:
        todo = set(range(len(core.ids)))
    else:
        todo = {core.index[v] for v in candidates}
    if not todo:
        return []
    found = set()
    for choice in _iter_choices(a, player, limit):
        moves = _moves(core, choice, player)
        if all(len(m) == 1 for m in moves):
            nxt = [m[0] for m in moves]
            won = [v for v in todo if _walk_wins(nxt, player == 0, v, leaf)]
        else:
            won = [v for v in todo if _wins_under(moves, player, v, leaf)]
        for v in won:
            found.add(v)
            todo.discard(v)
        if not todo:
            break
    return [core.ids[i] for i in sorted(found)]


def uniform_memoryless_strategy(a: Arena, p: CycleProperty, player: int,
                                region=None, limit=MEMORYLESS_LIMIT,
                                leaf=None) -> Optional[MemorylessStrategy]:
    """First memoryless strategy (canonical order) winning from all of ``player``'s region."""
    check_kind(a, p)
    core = a.core
    leaf = leaf or LeafCache(core, p)
    if region is None:
        region = _region(a, p, player, leaf)
    else:
        region = [core.index[v] for v in region]
    for choice in _iter_choices(a, player, limit):
        moves = _moves(core, choice, player)
        if all(_wins_under(moves, player, v, leaf) for v in region):
            return _to_strategy(a, player, choice)
    return None


# --- finite memory ----------------------------------------------------------

def _moore_wins(core, player, k, delta, rho, start, leaf):
    """delta[v*k+m] -> m', rho[v*k+m] -> successor index (player's vertices)."""
    succ, owner = core.succ, core.owner
    want = player == 0
    pos = [-1] * len(succ)
    path = [start]
    pos[start] = 0

    def rec(v, m):
        nxt = (rho[v * k + m],) if owner[v] == player else succ[v]
        m2 = delta[v * k + m]
        for w in nxt:
            if pos[w] >= 0:
                if leaf(tuple(path[pos[w]:])) != want:
                    return False
            else:
                pos[w] = len(path)
                path.append(w)
                ok = rec(w, m2)
                path.pop()
                pos[w] = -1
                if not ok:
                    return False
        return True

    return rec(start, 0)


def count_moore(a: Arena, player: int, k: int) -> int:
    n = len(a.vertices)
    moves = math.prod(len(s) ** k for s in _choice_lists(a, player)[1])
    return k ** (n * k) * moves


def _iter_moore(a, player, k, limit=MOORE_LIMIT):
    total = count_moore(a, player, k)
    if total > limit:
        raise EnumerationBoundError(f"{total} Moore machines of size {k} exceed the limit {limit}")
    core = a.core
    n = len(core.ids)
    slots = [(v, m) for v in range(n) for m in range(k) if core.owner[v] == player]
    options = [core.succ[v] for v, _ in slots]
    for delta in itertools.product(range(k), repeat=n * k):
        for picks in itertools.product(*options):
            rho = [-1] * (n * k)
            for (v, m), w in zip(slots, picks):
                rho[v * k + m] = w
            yield delta, rho


def _to_machine(a, player, k, delta, rho):
    ids = a.core.ids
    update = {(ids[v], m): delta[v * k + m] for v in range(len(ids)) for m in range(k)}
    moves = {(ids[v], m): ids[rho[v * k + m]] for v in range(len(ids)) for m in range(k)
             if rho[v * k + m] >= 0}
    return MooreMachine(player, k, update, moves)


def moore_wins_fcg(a: Arena, p: CycleProperty, mm: MooreMachine, start: str) -> bool:
    check_kind(a, p)
    mm.validate(a)
    core = a.core
    k = mm.size
    n = len(core.ids)
    delta = [0] * (n * k)
    rho = [-1] * (n * k)
    for (v, m), m2 in mm.update.items():
        delta[core.index[v] * k + m] = m2
    for (v, m), w in mm.next_move.items():
        if a.owner[v] == mm.player:
            rho[core.index[v] * k + m] = core.index[w]
    if mm.initial != 0:
        raise ValueError("machines are normalized to initial memory 0")
    return _moore_wins(core, mm.player, k, delta, rho, core.index[start], LeafCache(core, p))


@dataclass(frozen=True)
class MemoryResult:
    memory: Optional[int]
    machine: Optional[MooreMachine] = None

    @property
    def exceeds_bound(self):
        return self.memory is None

    def to_json(self):
        if self.memory is None:
            return {"result": "exceedsBound"}
        return {"result": "found", "memory": self.memory}


def min_moore_memory(a: Arena, p: CycleProperty, player: int, start: str,
                     k_max: int, limit=MOORE_LIMIT) -> MemoryResult:
    """Smallest Moore machine size ``<= k_max`` winning for ``player`` from ``start``."""
    check_kind(a, p)
    core = a.core
    s = core.index[start]
    if s not in _region(a, p, player):
        raise ValueError(f"player {player} does not win from {start}")
    leaf = LeafCache(core, p)
    for k in range(1, k_max + 1):
        for delta, rho in _iter_moore(a, player, k, limit):
            if _moore_wins(core, player, k, delta, rho, s, leaf):
                return MemoryResult(k, _to_machine(a, player, k, delta, rho))
    return MemoryResult(None)


# --- classification ---------------------------------------------------------

@dataclass
class DeterminacyReport:
    property: str
    regions: dict
    pointwise: dict
    uniform: dict = field(default_factory=dict)

    @property
    def pointwise_memoryless_determined(self):
        return all(self.pointwise[i] == self.regions[i] for i in (0, 1))

    @property
    def uniform_memoryless_determined(self):
        return all(self.uniform[i] is not None for i in (0, 1))

    def to_json(self):
        return {
            "property": self.property,
            "players": {
                str(i): {
                    "region": self.regions[i],
                    "pointwiseMemorylessRegion": self.pointwise[i],
                    "uniformStrategy": dict(sorted(self.uniform[i].choice.items()))
                    if self.uniform[i] is not None else None,
                } for i in (0, 1)
            },
            "pointwiseMemorylessDetermined": self.pointwise_memoryless_determined,
            "uniformMemorylessDetermined": self.uniform_memoryless_determined,
        }


def classify_determinacy(a: Arena, p: CycleProperty, limit=MEMORYLESS_LIMIT) -> DeterminacyReport:
    check_kind(a, p)
    ids = a.core.ids
    leaf = LeafCache(a.core, p)
    won0 = set(p0_region_indices(a, p, leaf))
    regions = {0: [ids[i] for i in range(len(ids)) if i in won0],
               1: [ids[i] for i in range(len(ids)) if i not in won0]}
    pointwise, uniform = {}, {}
    for i in (0, 1):
        uniform[i] = uniform_memoryless_strategy(a, p, i, regions[i], limit, leaf)
        if uniform[i] is not None:
            # a uniform strategy wins everywhere in the region; nothing wins outside it
            pointwise[i] = list(regions[i])
        else:
            pointwise[i] = pointwise_memoryless_region(a, p, i, limit, regions[i], leaf)
    return DeterminacyReport(str(p), regions, pointwise, uniform)


def feasible_kmax(a: Arena, player: int, cap: int, limit=MOORE_LIMIT) -> int:
    """Largest ``k <= cap`` whose Moore machines can all be enumerated under ``limit``."""
    k = 0
    while k < cap and count_moore(a, player, k + 1) <= limit:
        k += 1
    return k
