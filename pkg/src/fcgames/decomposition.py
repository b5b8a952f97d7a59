"""Stack-based cycles-decomposition of plays and lassos."""

from __future__ import annotations

from dataclasses import dataclass

from .arena import Arena, Lasso


@dataclass(frozen=True)
class CycleRecord:
    edges: tuple
    labels: tuple

    def __len__(self):
        return len(self.edges)

    def vertices(self):
        return tuple(v for v, _ in self.edges)

    def __str__(self):
        return "".join(f"({v},{w})" for v, w in self.edges)


@dataclass(frozen=True)
class DecompositionState:
    """Edges currently on the stack; their vertices always form a simple path."""

    stack: tuple = ()

    def path(self):
        if not self.stack:
            return ()
        return (self.stack[0][0],) + tuple(w for _, w in self.stack)

    def __len__(self):
        return len(self.stack)

    def __str__(self):
        return "".join(f"({v},{w})" for v, w in self.stack)


def push_edge(s: DecompositionState, e, labels=None):
    """Push edge ``e``; pop and return the cycle it closes, if any.

    ``labels`` maps edges to labels (an ``Arena.label`` dict); without it the
    returned cycle carries an empty label word.
    """
    v, w = e
    if s.stack and s.stack[-1][1] != v:
        raise ValueError(f"edge {e} does not continue the stack path ending at {s.stack[-1][1]}")
    stack = s.stack + ((v, w),)
    path = s.path() or (v,)
    if w in path:
        i = path.index(w)
        cyc = stack[i:]
        rest = DecompositionState(stack[:i])
        labs = tuple(labels[x] for x in cyc) if labels is not None else ()
        return rest, CycleRecord(cyc, labs)
    return DecompositionState(stack), None


def _check_play(a, play):
    for v, w in zip(play, play[1:]):
        if (v, w) not in a.label:
            raise ValueError(f"play step ({v},{w}) is not an edge")


def decompose_prefix(a: Arena, play):
    """Decompose a finite play; returns ``(cycles, residual)``."""
    play = tuple(play)
    _check_play(a, play)
    s = DecompositionState()
    cycles = []
    for e in zip(play, play[1:]):
        s, c = push_edge(s, e, a.label)
        if c is not None:
            cycles.append(c)
    return cycles, s


def first_cycle(a: Arena, play):
    play = tuple(play)
    _check_play(a, play)
    s = DecompositionState()
    for e in zip(play, play[1:]):
        s, c = push_edge(s, e, a.label)
        if c is not None:
            return c
    return None


@dataclass(frozen=True)
class LassoDecomposition:
    transient: tuple
    periodic: tuple
    tail_residual: DecompositionState
    states: int   # distinct (loop position, stack) states visited before the repeat
    steps: int    # edges pushed until the repeat was detected

    def all_cycles(self):
        return self.transient + self.periodic


def decompose_lasso(a: Arena, l: Lasso) -> LassoDecomposition:
    """Decompose ``prefix . loop^omega`` exactly.

    The simulation stops once a (loop position, stack) pair repeats; cycles
    popped after the first occurrence of that pair recur forever.
    """
    l.validate(a)
    s = DecompositionState()
    out = []
    pre_edges, loop_edges = l.edges()
    for e in pre_edges:
        s, c = push_edge(s, e, a.label)
        if c is not None:
            out.append(c)
    seen = {}
    steps = len(pre_edges)
    j = 0
    while (j, s.stack) not in seen:
        seen[j, s.stack] = len(out)
        s, c = push_edge(s, loop_edges[j], a.label)
        steps += 1
        if c is not None:
            out.append(c)
        j = (j + 1) % len(loop_edges)
    start = seen[j, s.stack]
    return LassoDecomposition(tuple(out[:start]), tuple(out[start:]), s, len(seen), steps)
