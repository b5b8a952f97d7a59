"""Cycle properties: membership of label words, complement, closure checks."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arena import KindMismatch

BASES = ("evenlen", "parity", "energy", "goodforenergy", "meanpayoff", "maxfirst", "endszero")

# arena label kinds each base can read
KIND_SUPPORT = {
    "evenlen": {"priority", "weight", "payoff", "pair"},
    "parity": {"priority"},
    "maxfirst": {"priority"},
    "endszero": {"priority"},
    "energy": {"weight"},
    "meanpayoff": {"weight", "payoff"},
    "goodforenergy": {"pair"},
}


@dataclass(frozen=True)
class CycleProperty:
    base: str
    nu: Optional[Fraction] = None
    direction: str = "atleast"
    complemented: bool = False

    def __post_init__(self):
        if self.base not in BASES:
            raise ValueError(f"unknown cycle property {self.base!r}")
        if (self.nu is not None) != (self.base == "meanpayoff"):
            raise ValueError("nu is required for meanpayoff and only for it")
        if self.nu is not None:
            object.__setattr__(self, "nu", Fraction(self.nu))
        if self.direction not in ("atleast", "atmost"):
            raise ValueError(f"bad direction {self.direction!r}")
        if self.base != "meanpayoff" and self.direction != "atleast":
            raise ValueError("direction only applies to meanpayoff")

    def __str__(self):
        s = self.base
        if self.base == "meanpayoff":
            s += f":{self.nu}"
            if self.direction == "atmost":
                s += ":atmost"
        return ("not:" if self.complemented else "") + s

    def supports(self, kind):
        return kind in KIND_SUPPORT[self.base]


def complement(p: CycleProperty) -> CycleProperty:
    return CycleProperty(p.base, p.nu, p.direction, not p.complemented)


def parse_property(text: str) -> CycleProperty:
    """Parse the CLI spelling, e.g. ``parity``, ``not:evenlen``, ``meanpayoff:1/2:atmost``.

    ``str`` inverts this for every property.
    """
    comp = False
    while text.startswith("not:"):
        comp = not comp
        text = text[4:]
    parts = text.split(":")
    base = parts[0]
    if base == "meanpayoff":
        if len(parts) not in (2, 3):
            raise ValueError("expected meanpayoff:<nu>[:atmost]")
        nu = Fraction(parts[1])
        direction = "atleast"
        if len(parts) == 3:
            if parts[2] not in ("atmost", "atleast"):
                raise ValueError(f"bad meanpayoff direction {parts[2]!r}")
            direction = parts[2]
        return CycleProperty("meanpayoff", nu, direction, comp)
    if len(parts) != 1 or base not in BASES:
        raise ValueError(f"unknown cycle property {text!r}")
    return CycleProperty(base, complemented=comp)


def _nat(x):
    if type(x) is not int or x < 0:
        raise KindMismatch(f"expected a natural label, got {x!r}")
    return x


def _int(x):
    if type(x) is not int:
        raise KindMismatch(f"expected an integer label, got {x!r}")
    return x


def _rat(x):
    if type(x) not in (int, Fraction):
        raise KindMismatch(f"expected a rational label, got {x!r}")
    return x


def _pair(x):
    if not (isinstance(x, tuple) and len(x) == 2):
        raise KindMismatch(f"expected a (priority, weight) label, got {x!r}")
    return _nat(x[0]), _int(x[1])


def _base_member(p, w):
    b = p.base
    if b == "evenlen":
        return len(w) % 2 == 0
    if b == "parity":
        return max(_nat(c) for c in w) % 2 == 0
    if b == "energy":
        return sum(_int(c) for c in w) >= 0
    if b == "goodforenergy":
        w = [_pair(c) for c in w]
        total = sum(d for _, d in w)
        return total > 0 or (total == 0 and max(c for c, _ in w) % 2 == 0)
    if b == "meanpayoff":
        avg = Fraction(sum(_rat(c) for c in w), len(w))
        return avg >= p.nu if p.direction == "atleast" else avg <= p.nu
    if b == "maxfirst":
        return all(_nat(w[0]) >= _nat(c) for c in w)
    if b == "endszero":
        for c in w:
            _nat(c)
        return w[-1] == 0
    raise AssertionError(b)


def member(p: CycleProperty, w) -> bool:
    """Whether the nonempty label word ``w`` lies in ``p``."""
    w = tuple(w)
    if not w:
        raise ValueError("cycle words are nonempty")
    return _base_member(p, w) != p.complemented


# --- closure checks ---------------------------------------------------------

@dataclass(frozen=True)
class ClosureVerdict:
    status: str  # knownClosed | knownNotClosed | noCounterexampleFound | counterexample
    witness: Optional[tuple] = None
    law: str = ""

    def __post_init__(self):
        if (self.status == "counterexample") != (self.witness is not None):
            raise ValueError("a witness is present exactly for counterexample verdicts")

    def to_json(self):
        d = {"law": self.law, "status": self.status}
        if self.witness is not None:
            d["witness"] = [[_jsonable(c) for c in w] for w in self.witness]
        return d


def _jsonable(c):
    if isinstance(c, Fraction):
        return str(c)
    if isinstance(c, tuple):
        return list(c)
    return c


def _closed_bases():
    # bases whose word sets and complements are closed under both laws
    return {"parity", "energy", "meanpayoff", "goodforenergy"}


def _registry(p: CycleProperty, law: str):
    """Analytically known closure facts: (status, witness or None) or None."""
    b, comp = p.base, p.complemented
    if law == "cyclic":
        # Y is closed under cyclic permutations iff its complement is
        if b in _closed_bases() or b == "evenlen":
            return "knownClosed", None
        if b == "maxfirst":
            return "knownNotClosed", (((1, 2), (2, 1)) if comp else ((2, 1), (1, 2)))
        return None
    if law == "concat":
        if b in _closed_bases():
            return "knownClosed", None
        if b == "evenlen":
            return ("knownNotClosed", ((0,), (0,))) if comp else ("knownClosed", None)
        return None
    raise ValueError(law)


def _violates(p, law, witness):
    if law == "cyclic":
        w, rot = witness
        return (len(w) == len(rot) and any(rot == w[k:] + w[:k] for k in range(len(w)))
                and member(p, w) and not member(p, rot))
    a, b = witness
    return member(p, a) and member(p, b) and not member(p, a + b)


def sample_alphabet(p: CycleProperty):
    """Small label alphabet used when falsifying closure of ``p``."""
    prios = list(range(6))
    weights = list(range(-3, 4))
    if p.base in ("parity", "maxfirst", "endszero", "evenlen"):
        return prios
    if p.base == "energy":
        return weights
    if p.base == "meanpayoff":
        return sorted({Fraction(n, d) for n in range(-3, 4) for d in range(1, 4)})
    return [(c, d) for c in prios for d in weights]


def _search(p, law, budget, max_len, seed, exhaustive_len=3):
    alpha = sample_alphabet(p)
    small = alpha[:3] if p.base != "goodforenergy" else alpha
    # exhaustive pass over short words first, then seeded sampling
    if law == "cyclic":
        for k in range(2, exhaustive_len + 1):
            for w in itertools.product(small, repeat=k):
                if member(p, w):
                    for j in range(1, k):
                        rot = w[j:] + w[:j]
                        if not member(p, rot):
                            return (w, rot)
    else:
        for k in range(1, exhaustive_len):
            words = list(itertools.product(small, repeat=k))
            for a in words:
                if not member(p, a):
                    continue
                for m in range(1, exhaustive_len - k + 1):
                    for b in itertools.product(small, repeat=m):
                        if member(p, b) and not member(p, a + b):
                            return (a, b)
    rng = random.Random(seed)

    def word(lo=1, hi=max_len):
        return tuple(rng.choice(alpha) for _ in range(rng.randint(lo, hi)))

    for _ in range(budget):
        if law == "cyclic":
            w = word(2)
            if member(p, w):
                for j in range(1, len(w)):
                    rot = w[j:] + w[:j]
                    if not member(p, rot):
                        return (w, rot)
        else:
            a = word(1, max(1, max_len - 1))
            b = word(1, max(1, max_len - len(a)))
            if member(p, a) and member(p, b) and not member(p, a + b):
                return (a, b)
    return None


def _check(p, law, budget, max_len, seed, use_registry):
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if use_registry:
        fact = _registry(p, law)
        if fact is not None:
            status, witness = fact
            if status == "knownClosed":
                return ClosureVerdict("knownClosed", law=law)
            if witness is not None and _violates(p, law, witness):
                return ClosureVerdict("counterexample", witness, law)
            found = _search(p, law, budget, max_len, seed)
            if found is not None:
                return ClosureVerdict("counterexample", found, law)
            return ClosureVerdict("knownNotClosed", law=law)
    found = _search(p, law, budget, max_len, seed)
    if found is not None:
        return ClosureVerdict("counterexample", found, law)
    return ClosureVerdict("noCounterexampleFound", law=law)


def check_cyclic_closure(p, budget=10_000, max_len=8, seed=0, use_registry=True):
    """Is ``ab in Y`` implying ``ba in Y``? Registry first, then falsification."""
    return _check(p, "cyclic", budget, max_len, seed, use_registry)


def check_concat_closure(p, budget=10_000, max_len=8, seed=0, use_registry=True):
    return _check(p, "concat", budget, max_len, seed, use_registry)


def witness_violates(p, verdict: ClosureVerdict) -> bool:
    """Re-check a counterexample witness against ``member``."""
    return verdict.witness is not None and _violates(p, verdict.law, verdict.witness)


@dataclass(frozen=True)
class CharVerdict:
    answer: str  # yes | no | unknown
    cyclic: ClosureVerdict
    concat: ClosureVerdict
    concat_complement: ClosureVerdict

    def witness(self):
        for v in (self.cyclic, self.concat, self.concat_complement):
            if v.witness is not None:
                return v
        return None


def satisfies_char_hypothesis(p, budget=10_000, max_len=8, seed=0) -> CharVerdict:
    """Closed under rotation, and both ``p`` and its complement closed under concatenation."""
    parts = (check_cyclic_closure(p, budget, max_len, seed),
             check_concat_closure(p, budget, max_len, seed),
             check_concat_closure(complement(p), budget, max_len, seed))
    statuses = [v.status for v in parts]
    if all(s == "knownClosed" for s in statuses):
        answer = "yes"
    elif any(s in ("counterexample", "knownNotClosed") for s in statuses):
        answer = "no"
    else:
        answer = "unknown"
    return CharVerdict(answer, *parts)
