"""Labeled game arenas, lassos, and the line-oriented arena file format."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping

KINDS = ("priority", "weight", "payoff", "pair")
_SHAPES = {"priority": {"int"}, "weight": {"int"}, "payoff": {"int", "payoff"}, "pair": {"pair"}}


class ArenaError(ValueError):
    """Malformed or invalid arena. ``line`` is set for parse errors."""

    def __init__(self, msg, line=None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


class KindMismatch(ValueError):
    pass


def vertex_key(v: str):
    b = v.encode("utf-8")
    return (len(b), b)


def sort_vertices(vs):
    return sorted(vs, key=vertex_key)


def check_label(kind, lab):
    """Raise KindMismatch unless ``lab`` is a valid label of ``kind``."""
    if kind == "priority":
        ok = type(lab) is int and lab >= 0
    elif kind == "weight":
        ok = type(lab) is int
    elif kind == "payoff":
        ok = type(lab) in (int, Fraction)
    elif kind == "pair":
        ok = (isinstance(lab, tuple) and len(lab) == 2 and type(lab[0]) is int
              and lab[0] >= 0 and type(lab[1]) is int)
    else:
        raise KindMismatch(f"unknown label kind {kind!r}")
    if not ok:
        raise KindMismatch(f"label {lab!r} is not a {kind} label")


def format_label(kind, lab) -> str:
    if kind == "pair":
        return f"{lab[0]},{lab[1]}"
    return str(lab)


def parse_label(kind, tok, line=None):
    try:
        if kind == "priority":
            lab = int(tok)
            if lab < 0 or not tok.lstrip("+").isdigit():
                raise ValueError
        elif kind == "weight":
            lab = int(tok)
        elif kind == "payoff":
            lab = Fraction(tok)
            if "." in tok or "e" in tok.lower():
                raise ValueError  # exact rationals only
            if lab.denominator == 1:
                lab = int(lab)
        elif kind == "pair":
            a, b = tok.split(",")
            if not a.isdigit():
                raise ValueError
            lab = (int(a), int(b))
        else:
            raise ValueError
    except (ValueError, ZeroDivisionError):
        raise ArenaError(f"bad {kind} label {tok!r}", line) from None
    return lab


@dataclass(frozen=True)
class _Core:
    """Integer-indexed view of an arena used by the solvers."""

    ids: tuple
    index: dict
    succ: tuple      # succ[i] = tuple of successor indices, canonical order
    owner: tuple
    lab: dict        # (i, j) -> label


@dataclass(frozen=True, eq=False)
class Arena:
    """A finite labeled game graph.

    ``owner`` maps each vertex to 0 or 1, ``label`` maps each edge ``(v, w)``
    to its label. All labels share ``kind``. Arenas are validated on
    construction and never mutated.
    """

    kind: str
    owner: Mapping[str, int]
    label: Mapping[tuple, object]
    vertices: tuple = field(init=False)
    edges: tuple = field(init=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ArenaError(f"unknown label kind {self.kind!r}")
        if not self.owner:
            raise ArenaError("arena has no vertices")
        for v, o in self.owner.items():
            if not isinstance(v, str) or not v or any(c.isspace() for c in v):
                raise ArenaError(f"bad vertex id {v!r}")
            if o not in (0, 1):
                raise ArenaError(f"vertex {v} has owner {o!r}, expected 0 or 1")
        for (v, w), lab in self.label.items():
            for x in (v, w):
                if x not in self.owner:
                    raise ArenaError(f"edge ({v},{w}) references undeclared vertex {x}")
            try:
                check_label(self.kind, lab)
            except KindMismatch as exc:
                raise ArenaError(f"edge ({v},{w}): {exc}") from None
        verts = tuple(sort_vertices(self.owner))
        has_out = {v for v, _ in self.label}
        for v in verts:
            if v not in has_out:
                raise ArenaError(f"dead-end vertex {v}")
        edges = tuple(sorted(self.label, key=lambda e: (vertex_key(e[0]), vertex_key(e[1]))))
        object.__setattr__(self, "owner", dict(self.owner))
        object.__setattr__(self, "label", dict(self.label))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)

    def __eq__(self, other):
        if not isinstance(other, Arena):
            return NotImplemented
        return (self.kind == other.kind and self.owner == other.owner
                and self.label == other.label)

    def __hash__(self):
        return hash((self.kind, tuple(self.owner.items()), frozenset(self.label.items())))

    def __repr__(self):
        return f"Arena({self.kind}, |V|={len(self.vertices)}, |E|={len(self.edges)})"

    @cached_property
    def core(self) -> _Core:
        ids = self.vertices
        index = {v: i for i, v in enumerate(ids)}
        succ = [[] for _ in ids]
        lab = {}
        for (v, w) in self.edges:
            i, j = index[v], index[w]
            succ[i].append(j)
            lab[i, j] = self.label[v, w]
        return _Core(ids, index, tuple(tuple(s) for s in succ),
                     tuple(self.owner[v] for v in ids), lab)

    @property
    def n(self):
        return len(self.vertices)

    def player_vertices(self, player):
        return [v for v in self.vertices if self.owner[v] == player]

    def is_solitaire(self):
        return len(set(self.owner.values())) == 1


def successors(a: Arena, v: str) -> list:
    """Successors of ``v`` in canonical vertex order."""
    if v not in a.owner:
        raise KeyError(f"unknown vertex {v!r}")
    c = a.core
    return [c.ids[j] for j in c.succ[c.index[v]]]


def restrict(a: Arena, s) -> Arena:
    """Keep only the edges chosen by memoryless strategy ``s`` at its player's vertices."""
    choice = s.choice
    for v in a.player_vertices(s.player):
        if v not in choice:
            raise ValueError(f"strategy is not defined at {v}")
    for v, w in choice.items():
        if (v, w) not in a.label:
            raise ValueError(f"strategy picks non-edge ({v},{w})")
    label = {(v, w): lab for (v, w), lab in a.label.items()
             if a.owner[v] != s.player or choice[v] == w}
    return Arena(a.kind, a.owner, label)


def max_abs_weight(a: Arena) -> int:
    if a.kind == "weight":
        return max(abs(x) for x in a.label.values())
    if a.kind == "pair":
        return max(abs(x[1]) for x in a.label.values())
    raise KindMismatch(f"max_abs_weight needs weight or pair labels, got {a.kind}")


def parse_arena(text: str) -> Arena:
    kind = None
    owner = {}
    label = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if kind is None:
            if toks[0] != "arena" or len(toks) != 2:
                raise ArenaError("expected header 'arena <kind>'", lineno)
            if toks[1] not in KINDS:
                raise ArenaError(f"unknown label kind {toks[1]!r}", lineno)
            kind = toks[1]
        elif toks[0] == "v":
            if len(toks) != 3 or toks[2] not in ("0", "1"):
                raise ArenaError("expected 'v <id> <owner>' with owner 0 or 1", lineno)
            if toks[1] in owner:
                raise ArenaError(f"duplicate vertex {toks[1]}", lineno)
            owner[toks[1]] = int(toks[2])
        elif toks[0] == "e":
            if len(toks) != 4:
                raise ArenaError("expected 'e <src> <dst> <label>'", lineno)
            _, v, w, tok = toks
            for x in (v, w):
                if x not in owner:
                    raise ArenaError(f"edge ({v},{w}) references undeclared vertex {x}", lineno)
            if (v, w) in label:
                raise ArenaError(f"duplicate edge ({v},{w})", lineno)
            shape = "pair" if "," in tok else "payoff" if "/" in tok else "int"
            if shape not in _SHAPES[kind]:
                raise ArenaError(f"mixed label kinds: {tok!r} in a {kind} arena", lineno)
            label[v, w] = parse_label(kind, tok, lineno)
        else:
            raise ArenaError(f"unknown directive {toks[0]!r}", lineno)
    if kind is None:
        raise ArenaError("empty arena file", 1)
    return Arena(kind, owner, label)


def serialize_arena(a: Arena) -> str:
    lines = [f"arena {a.kind}"]
    lines += [f"v {v} {a.owner[v]}" for v in a.vertices]
    lines += [f"e {v} {w} {format_label(a.kind, a.label[v, w])}" for v, w in a.edges]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Lasso:
    """The ultimately periodic play ``prefix . loop^omega``."""

    prefix: tuple
    loop: tuple

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "loop", tuple(self.loop))
        if not self.loop:
            raise ValueError("lasso loop must be nonempty")

    def validate(self, a: Arena):
        seq = self.prefix + self.loop + self.loop[:1]
        for v, w in zip(seq, seq[1:]):
            if (v, w) not in a.label:
                raise ValueError(f"lasso step ({v},{w}) is not an edge")
        return self

    def suffix(self, s: int) -> "Lasso":
        """The lasso for the play with its first ``s`` vertices dropped."""
        if s < len(self.prefix):
            return Lasso(self.prefix[s:], self.loop)
        k = (s - len(self.prefix)) % len(self.loop)
        return Lasso((), self.loop[k:] + self.loop[:k])

    def edges(self):
        """Prefix edges (including the junction) and loop edges (including wrap-around)."""
        seq = self.prefix + self.loop[:1]
        pre = list(zip(seq, seq[1:]))
        lp = list(zip(self.loop, self.loop[1:] + self.loop[:1]))
        return pre, lp

    def __str__(self):
        return " ".join(self.prefix) + " (" + " ".join(self.loop) + ")^w"
