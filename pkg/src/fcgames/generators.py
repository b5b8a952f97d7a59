"""Random and exhaustive arena families for property checks and sweeps."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .arena import Arena
from .geography import GeographyInstance


def vertex_names(n):
    return [f"v{i + 1}" for i in range(n)]


def random_arena(rng: random.Random, n, kind, alphabet, max_outdeg=3, owner=None) -> Arena:
    """Arena on ``v1..vn`` with 1..max_outdeg random successors per vertex.

    ``owner`` fixes every vertex to one player (a solitaire arena); otherwise
    ownership is random.
    """
    names = vertex_names(n)
    owners = {v: owner if owner is not None else rng.randint(0, 1) for v in names}
    label = {}
    for v in names:
        k = rng.randint(1, min(max_outdeg, n))
        for w in rng.sample(names, k):
            label[v, w] = rng.choice(alphabet)
    return Arena(kind, owners, label)


@lru_cache(maxsize=None)
def successor_graphs(n, max_outdeg=2, up_to_iso=True):
    """All graphs on ``range(n)`` where each vertex has 1..max_outdeg successors.

    Graphs are tuples of sorted successor tuples; with ``up_to_iso`` only the
    lexicographically least relabeling of each isomorphism class is kept.
    """
    choices = [c for k in range(1, max_outdeg + 1) for c in itertools.combinations(range(n), k)]
    perms = list(itertools.permutations(range(n)))
    out = []
    for g in itertools.product(choices, repeat=n):
        if up_to_iso:
            best = g
            for p in perms:
                h = [None] * n
                for v in range(n):
                    h[p[v]] = tuple(sorted(p[w] for w in g[v]))
                h = tuple(h)
                if h < best:
                    best = h
                    break
            if best != g:
                continue
        out.append(g)
    return tuple(out)


def _edges(g):
    return [(v, w) for v in range(len(g)) for w in g[v]]


def solitaire_family(max_n=4, labels=(0, 1, 2), max_outdeg=2, player=0, kind="priority"):
    """Every solitaire arena with at most ``max_n`` vertices, up to isomorphism,
    with every edge labeling over ``labels``."""
    for n in range(1, max_n + 1):
        names = vertex_names(n)
        owner = {v: player for v in names}
        for g in successor_graphs(n, max_outdeg):
            edges = [(names[v], names[w]) for v, w in _edges(g)]
            for labs in itertools.product(labels, repeat=len(edges)):
                yield Arena(kind, owner, dict(zip(edges, labs)))


def vertex_labeled_family(n=4, labels=(0, 1), max_outdeg=2, kind="priority"):
    """Every ``n``-vertex arena (graphs up to isomorphism) under every ownership,
    with vertex labels over ``labels`` carried by each vertex's outgoing edges."""
    for g in successor_graphs(n, max_outdeg):
        for own in itertools.product((0, 1), repeat=n):
            for vl in itertools.product(labels, repeat=n):
                yield vertex_labeled_arena(g, own, vl, kind)


def vertex_labeled_arena(g, owners, vlabels, kind="priority") -> Arena:
    """Arena on graph ``g`` (successor tuples) where every edge carries its source's label."""
    names = vertex_names(len(g))
    return Arena(kind, dict(zip(names, owners)),
                 {(names[v], names[w]): vlabels[v] for v, w in _edges(g)})


def random_gg(rng: random.Random, max_n=8, density=None) -> GeographyInstance:
    n = rng.randint(1, max_n)
    names = [f"g{i + 1}" for i in range(n)]
    p = density if density is not None else rng.uniform(0.15, 0.6)
    edges = {(v, w) for v in names for w in names if rng.random() < p}
    return GeographyInstance(tuple(names), frozenset(edges), rng.choice(names))


def all_gg(max_n=4):
    """Every geography instance on at most ``max_n`` vertices, all edge subsets and starts."""
    for n in range(1, max_n + 1):
        names = [f"g{i + 1}" for i in range(n)]
        pairs = [(v, w) for v in names for w in names]
        for mask in range(1 << len(pairs)):
            edges = frozenset(p for k, p in enumerate(pairs) if mask >> k & 1)
            for s in names:
                yield GeographyInstance(tuple(names), edges, s)
