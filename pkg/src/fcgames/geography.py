"""Generalised Geography as a first-cycle game with the ``endszero`` property.

Geography convention: the token starts on ``start`` (already visited); the
*mover* picks the first successor, then the players alternate, and a player
with no unvisited successor loses.

In the reduced arena the mover is Player 0 and the opponent Player 1. Every
edge is labeled ``1 - owner(source)``, so the first cycle ends in ``0``
exactly when Player 1 closed it, and the player who is forced to revisit a
vertex loses.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .arena import Arena, sort_vertices, vertex_key
from .properties import CycleProperty

ENDS_ZERO = CycleProperty("endszero")


@dataclass(frozen=True)
class GeographyInstance:
    vertices: tuple
    edges: frozenset
    start: str

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sort_vertices(set(self.vertices))))
        object.__setattr__(self, "edges", frozenset(self.edges))
        if self.start not in self.vertices:
            raise ValueError(f"start {self.start!r} is not a vertex")
        for v, w in self.edges:
            if v not in self.vertices or w not in self.vertices:
                raise ValueError(f"edge ({v},{w}) references an undeclared vertex")

    def successors(self, v):
        return sort_vertices(w for (x, w) in self.edges if x == v)


def parse_gg(text: str) -> GeographyInstance:
    verts, edges, start = [], set(), None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "v" and len(toks) == 2:
            verts.append(toks[1])
        elif toks[0] == "e" and len(toks) == 3:
            edges.add((toks[1], toks[2]))
        elif toks[0] == "start" and len(toks) == 2:
            start = toks[1]
        else:
            raise ValueError(f"line {lineno}: cannot parse {line!r}")
    if start is None:
        raise ValueError("missing 'start <id>' line")
    return GeographyInstance(tuple(verts), frozenset(edges), start)


def solve_gg_direct(g: GeographyInstance) -> str:
    """``"mover"`` or ``"opponent"``, by memoized search over (vertex, visited set)."""
    succ = {v: g.successors(v) for v in g.vertices}

    @lru_cache(maxsize=None)
    def to_move_wins(v, visited):
        return any(not to_move_wins(w, visited | {w}) for w in succ[v] if w not in visited)

    return "mover" if to_move_wins(g.start, frozenset([g.start])) else "opponent"


def turn_parities(g: GeographyInstance):
    """Parity (0 = mover to move) at which each reachable vertex can be entered."""
    seen = {(g.start, 0)}
    queue = deque(seen)
    while queue:
        v, t = queue.popleft()
        for w in g.successors(v):
            if (w, 1 - t) not in seen:
                seen.add((w, 1 - t))
                queue.append((w, 1 - t))
    out = {}
    for v, t in seen:
        out.setdefault(v, set()).add(t)
    return out


@dataclass(frozen=True)
class GGReduction:
    arena: Arena
    property: CycleProperty
    start: str
    construction: str  # "direct" or "positions"

    def mover_wins(self, fcg_winner: int) -> bool:
        return fcg_winner == 0


def gg_to_fcg(g: GeographyInstance) -> GGReduction:
    """Encode ``g`` as a first-cycle game won by Player 0 iff the mover wins.

    When every reachable vertex is entered at a single turn parity the arena
    is ``g`` itself restricted to reachable vertices, owned by whoever moves
    there. Otherwise a vertex may be reached by either player and one copy per
    vertex cannot record who has already used it, so the arena is the graph of
    positions ``(vertex, visited set)``.
    """
    par = turn_parities(g)
    if all(len(ts) == 1 for ts in par.values()):
        owner = {v: next(iter(ts)) for v, ts in par.items()}
        label = {}
        for v in owner:
            nxt = g.successors(v)
            for w in nxt or [v]:
                label[v, w] = 1 - owner[v]
        return GGReduction(Arena("priority", owner, label), ENDS_ZERO, g.start, "direct")
    return _positions(g)


def _pos_id(v, visited):
    return v + "|" + ",".join(sort_vertices(visited))


def _positions(g):
    owner, label = {}, {}
    start = (g.start, frozenset([g.start]))
    stack = [start]
    owner[_pos_id(*start)] = 0
    while stack:
        v, vis = stack.pop()
        me = _pos_id(v, vis)
        moves = [w for w in g.successors(v) if w not in vis]
        if not moves:
            label[me, me] = 1 - owner[me]
        for w in moves:
            nxt = (w, vis | {w})
            nid = _pos_id(*nxt)
            if nid not in owner:
                owner[nid] = (len(nxt[1]) - 1) % 2
                stack.append(nxt)
            label[me, nid] = 1 - owner[me]
    return GGReduction(Arena("priority", owner, label), ENDS_ZERO, _pos_id(*start), "positions")


def serialize_gg(g: GeographyInstance) -> str:
    lines = [f"v {v}" for v in g.vertices]
    lines += [f"e {v} {w}" for v, w in sorted(g.edges, key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))]
    lines.append(f"start {g.start}")
    return "\n".join(lines) + "\n"
