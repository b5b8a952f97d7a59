"""Infinite-duration conditions on lassos, all-cycles objectives, and transfer.

The transfer pipeline solves a parity, mean-payoff or energy game through
the first-cycle game of its associated cycle property. ``oracle_regions``
is an independent brute-force solver (memoryless enumeration plus simple
cycle checks through networkx) used to cross-check it.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import networkx as nx

from .arena import Arena, KindMismatch, Lasso, max_abs_weight, restrict, sort_vertices
from .decomposition import decompose_lasso
from .fcg import check_kind, regions as fcg_regions
from .properties import CycleProperty, complement, member
from .strategies import MEMORYLESS_LIMIT, MemorylessStrategy, enumerate_memoryless, \
    uniform_memoryless_strategy

CONDITION_KINDS = {
    "parity": {"priority"},
    "meanpayoff": {"weight", "payoff"},
    "energy": {"weight"},
    "energyparity": {"pair"},
}


class UnsupportedCondition(ValueError):
    pass


@dataclass(frozen=True)
class WinningCondition:
    kind: str
    nu: Optional[Fraction] = None
    credit: Optional[int] = None

    def __post_init__(self):
        if self.kind not in CONDITION_KINDS:
            raise ValueError(f"unknown winning condition {self.kind!r}")
        if (self.nu is not None) != (self.kind == "meanpayoff"):
            raise ValueError("nu is required for meanpayoff and only for it")
        if self.nu is not None:
            object.__setattr__(self, "nu", Fraction(self.nu))
        needs_credit = self.kind in ("energy", "energyparity")
        if (self.credit is not None) != needs_credit:
            raise ValueError(f"initial credit is required for {self.kind} and only for it")
        if needs_credit and (type(self.credit) is not int or self.credit < 0):
            raise ValueError("initial credit must be a natural number")

    def __str__(self):
        if self.kind == "meanpayoff":
            return f"meanpayoff:{self.nu}"
        if self.credit is not None:
            return f"{self.kind}:{self.credit}"
        return self.kind

    def check_kind(self, a: Arena):
        if a.kind not in CONDITION_KINDS[self.kind]:
            raise KindMismatch(f"condition {self.kind} cannot read {a.kind} labels")


def default_credit(a: Arena) -> int:
    """The credit ``W(|V|-1)`` for the largest absolute weight ``W``."""
    return max_abs_weight(a) * (len(a.vertices) - 1)


def eval_condition_on_lasso(w: WinningCondition, l: Lasso, a: Arena) -> bool:
    w.check_kind(a)
    l.validate(a)
    pre, lp = l.edges()
    pre = [a.label[e] for e in pre]
    lp = [a.label[e] for e in lp]
    if w.kind == "parity":
        return max(lp) % 2 == 0
    if w.kind == "meanpayoff":
        # lim sup of the running averages is the loop average
        return Fraction(sum(lp), len(lp)) >= w.nu
    if w.kind == "energy":
        return _energy_ok(pre, lp, w.credit)
    if w.kind == "energyparity":
        return (max(c for c, _ in lp) % 2 == 0
                and _energy_ok([d for _, d in pre], [d for _, d in lp], w.credit))
    raise AssertionError(w.kind)


def _energy_ok(pre, lp, credit):
    if sum(lp) < 0:
        return False
    # with a nonnegative loop the lowest level is reached within one traversal
    level = credit
    for c in itertools.chain(pre, lp):
        level += c
        if level < 0:
            return False
    return True


def _all_in(p, cycles):
    return all(member(p, c.labels) for c in cycles)


def eval_ac_on_lasso(p: CycleProperty, l: Lasso, a: Arena) -> bool:
    """Every cycle of the decomposition from the first vertex lies in ``p``."""
    check_kind(a, p)
    return _all_in(p, decompose_lasso(a, l).all_cycles())


def _suffixes(l: Lasso):
    # suffixes starting past prefix + loop coincide with earlier ones
    return [l.suffix(s) for s in range(len(l.prefix) + len(l.loop))]


def eval_eac_on_lasso(p: CycleProperty, l: Lasso, a: Arena) -> bool:
    """Some suffix of the play decomposes into cycles that all lie in ``p``."""
    check_kind(a, p)
    l.validate(a)
    return any(_all_in(p, decompose_lasso(a, t).all_cycles()) for t in _suffixes(l))


def _eac_both(p, l, a):
    notp = complement(p)
    yes = no = False
    for t in _suffixes(l):
        cyc = decompose_lasso(a, t).all_cycles()
        yes = yes or _all_in(p, cyc)
        no = no or _all_in(notp, cyc)
        if yes and no:
            break
    return yes, no


# --- transfer ---------------------------------------------------------------

def associated_property(w: WinningCondition, a: Arena, allow_unregistered=False) -> CycleProperty:
    """The cycle property ``Y`` for which ``w`` is known to be ``Y``-greedy on ``a``."""
    w.check_kind(a)
    if w.kind == "parity":
        return CycleProperty("parity")
    if w.kind == "meanpayoff":
        return CycleProperty("meanpayoff", w.nu)
    if w.kind == "energy":
        if w.credit != default_credit(a) and not allow_unregistered:
            raise UnsupportedCondition(
                f"energy with credit {w.credit} is not known to be greedy; "
                f"the registered credit on this arena is {default_credit(a)}")
        return CycleProperty("energy")
    raise UnsupportedCondition(f"no registered greedy cycle property for {w.kind}")


@dataclass
class TransferResult:
    condition: WinningCondition
    property: CycleProperty
    regions: dict
    strategies: dict

    def to_json(self):
        return {
            "condition": str(self.condition),
            "property": str(self.property),
            "regions": {str(i): self.regions[i] for i in (0, 1)},
            "strategies": {str(i): (dict(sorted(s.choice.items())) if s is not None else None)
                           for i, s in self.strategies.items()},
        }


def solve_infinite_via_transfer(a: Arena, w: WinningCondition, allow_unregistered=False,
                                limit=MEMORYLESS_LIMIT) -> TransferResult:
    p = associated_property(w, a, allow_unregistered)
    regs = fcg_regions(a, p)
    strategies = {i: uniform_memoryless_strategy(a, p, i, regs[i], limit) for i in (0, 1)}
    return TransferResult(w, p, regs, strategies)


# --- independent verification -----------------------------------------------

def _cycle_ok(w, player, labels):
    if w.kind == "parity":
        good = max(labels) % 2 == 0
    elif w.kind == "meanpayoff":
        good = Fraction(sum(labels), len(labels)) >= w.nu
    elif w.kind == "energy":
        good = sum(labels) >= 0
    else:
        raise UnsupportedCondition(f"no memoryless verification for {w.kind}")
    return good if player == 0 else not good


def _min_path_level(g, lab, start, credit):
    """Lowest energy level along any simple path from ``start``."""
    low = credit
    seen = {start}

    def rec(v, level):
        nonlocal low
        for x in g.successors(v):
            if x in seen:
                continue
            lv = level + lab[v, x]
            low = min(low, lv)
            seen.add(x)
            rec(x, lv)
            seen.discard(x)

    rec(start, credit)
    return low


def _verified_starts(a: Arena, w: WinningCondition, s: MemorylessStrategy, starts):
    r = restrict(a, s)
    g = nx.DiGraph(list(r.edges))
    g.add_nodes_from(r.vertices)
    bad = set()
    for cyc in nx.simple_cycles(g):
        labels = [r.label[x, y] for x, y in zip(cyc, cyc[1:] + cyc[:1])]
        if not _cycle_ok(w, s.player, labels):
            bad.update(cyc)
    ok = []
    for v in starts:
        reach = nx.descendants(g, v) | {v}
        if reach & bad:
            continue
        if w.kind == "energy" and s.player == 0 and _min_path_level(g, r.label, v, w.credit) < 0:
            continue
        ok.append(v)
    return ok


def verify_memoryless_wins_infinite(a: Arena, w: WinningCondition, s: MemorylessStrategy,
                                    start: str) -> bool:
    """Certify that ``s`` wins the infinite game from ``start``.

    In the graph restricted by ``s`` every simple cycle reachable from
    ``start`` must be good for ``s.player``; for an energy strategy of
    Player 0 every simple path from ``start`` must also keep the level
    nonnegative.
    """
    w.check_kind(a)
    s.validate(a)
    if start not in a.owner:
        raise KeyError(f"unknown start vertex {start!r}")
    return bool(_verified_starts(a, w, s, [start]))


def oracle_regions(a: Arena, w: WinningCondition, limit=MEMORYLESS_LIMIT):
    """Winning regions by enumerating every memoryless strategy of each player."""
    w.check_kind(a)
    out = {}
    for i in (0, 1):
        todo = list(a.vertices)
        won = set()
        for s in enumerate_memoryless(a, i, limit):
            if not todo:
                break
            hit = _verified_starts(a, w, s, todo)
            won.update(hit)
            todo = [v for v in todo if v not in won]
        out[i] = sort_vertices(won)
    return out


# --- bounded lasso searches --------------------------------------------------

def _closed_walks(a, length):
    succ = {v: [w for (x, w) in a.edges if x == v] for v in a.vertices}
    for v in a.vertices:
        def rec(walk):
            if len(walk) == length:
                if (walk[-1], walk[0]) in a.label:
                    yield tuple(walk)
                return
            for x in succ[walk[-1]]:
                walk.append(x)
                yield from rec(walk)
                walk.pop()
        yield from rec([v])


def _walks_into(a, target, length):
    pred = {v: [x for (x, w) in a.edges if w == v] for v in a.vertices}

    def rec(walk):
        if len(walk) == length:
            yield tuple(walk)
            return
        for x in pred[walk[0]]:
            yield from rec([x] + walk)

    if length == 0:
        yield ()
        return
    for x in pred[target]:
        yield from rec([x])


def enumerate_lassos(a: Arena, budget: int, seed=0, max_loop=None, max_prefix=None):
    """Up to ``budget`` distinct lassos: short ones exhaustively, then random ones."""
    n = len(a.vertices)
    max_loop = n if max_loop is None else max_loop
    max_prefix = n if max_prefix is None else max_prefix
    seen = set()
    for L in range(1, max_loop + 1):
        for loop in _closed_walks(a, L):
            for P in range(max_prefix + 1):
                for pre in _walks_into(a, loop[0], P):
                    if len(seen) >= budget:
                        return
                    seen.add((pre, loop))
                    yield Lasso(pre, loop)
    rng = random.Random(seed)
    succ = {v: [w for (x, w) in a.edges if x == v] for v in a.vertices}
    attempts = 0
    while len(seen) < budget and attempts < 20 * budget:
        attempts += 1
        walk = [rng.choice(a.vertices)]
        for _ in range(rng.randint(1, 3 * n)):
            walk.append(rng.choice(succ[walk[-1]]))
        pairs = [(i, j) for i in range(len(walk)) for j in range(i + 1, len(walk))
                 if walk[i] == walk[j]]
        if not pairs:
            continue
        i, j = rng.choice(pairs)
        key = (tuple(walk[:i]), tuple(walk[i:j]))
        if key in seen:
            continue
        seen.add(key)
        yield Lasso(*key)


@dataclass(frozen=True)
class LassoSearch:
    found: bool
    lasso: Optional[Lasso]
    examined: int
    positive: str
    negative: str

    def to_json(self):
        d = {"result": self.positive if self.found else self.negative, "examined": self.examined}
        if self.lasso is not None:
            d["lasso"] = {"prefix": list(self.lasso.prefix), "loop": list(self.lasso.loop)}
        return d


def check_unambiguous_bounded(a: Arena, p: CycleProperty, budget=1000, seed=0) -> LassoSearch:
    """Look for a lasso in both EAC(p) and EAC(not p); finding one proves ambiguity."""
    check_kind(a, p)
    k = 0
    for l in enumerate_lassos(a, budget, seed):
        k += 1
        yes, no = _eac_both(p, l, a)
        if yes and no:
            return LassoSearch(True, l, k, "witnessFound", "noWitness")
    return LassoSearch(False, None, k, "witnessFound", "noWitness")


def check_greedy_bounded(a: Arena, w: WinningCondition, p: CycleProperty, budget=1000,
                         seed=0) -> LassoSearch:
    """Look for a lasso in AC(p) losing ``w``, or in AC(not p) winning ``w``."""
    check_kind(a, p)
    w.check_kind(a)
    notp = complement(p)
    k = 0
    for l in enumerate_lassos(a, budget, seed):
        k += 1
        cyc = decompose_lasso(a, l).all_cycles()
        won = eval_condition_on_lasso(w, l, a)
        if (_all_in(p, cyc) and not won) or (_all_in(notp, cyc) and won):
            return LassoSearch(True, l, k, "counterexampleFound", "noCounterexample")
    return LassoSearch(False, None, k, "counterexampleFound", "noCounterexample")


def parse_condition(text: str, a: Optional[Arena] = None, credit=None) -> WinningCondition:
    """``parity``, ``meanpayoff:<nu>``, ``energy`` or ``energyparity``.

    Energy credits default to ``W(|V|-1)`` on ``a`` unless ``credit`` is given.
    """
    head, _, rest = text.partition(":")
    if head == "parity" and not rest:
        return WinningCondition("parity")
    if head == "meanpayoff":
        if not rest:
            raise ValueError("expected meanpayoff:<nu>")
        return WinningCondition("meanpayoff", nu=Fraction(rest))
    if head in ("energy", "energyparity") and not rest:
        if credit is None:
            if a is None:
                raise ValueError("energy credit needs an arena or an explicit credit")
            credit = default_credit(a)
        return WinningCondition(head, credit=credit)
    raise ValueError(f"unknown winning condition {text!r}")
