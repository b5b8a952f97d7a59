"""Named example arenas used by the CLI, tests and scripts."""

from __future__ import annotations

from dataclasses import dataclass

from .arena import Arena, parse_arena


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    text: str
    property: str
    note: str

    def arena(self) -> Arena:
        return parse_arena(self.text)


# Player 1 picks v2 or v3 from v1's side; Player 0 at v1 must answer
# consistently, which needs one bit of memory.
_EVENLEN_MEMORY = """\
arena priority
v v1 0
v v2 1
v v3 1
v v4 1
e v1 v2 0
e v2 v1 0
e v1 v3 0
e v3 v2 0
e v2 v4 0
e v4 v1 0
"""

_MAXFIRST = """\
arena priority
v v1 0
v v2 0
v v3 0
e v1 v2 1
e v1 v3 1
e v2 v1 2
e v2 v3 2
e v3 v2 3
"""

_DECOMP = """\
arena priority
v v 0
v w 0
v x 0
v s 0
v y 0
v z 0
e v w 0
e w x 0
e x w 0
e w v 0
e v s 0
e s x 0
e x y 0
e y z 0
e z x 0
"""

_ENERGY = """\
arena weight
v a 0
v b 0
e a b -1
e b b 0
"""

ENTRIES = {
    e.name: e for e in [
        GalleryEntry("prop1-evenlen", _EVENLEN_MEMORY, "evenlen",
                     "Player 0 wins from v2 and v3 but only with one bit of memory."),
        GalleryEntry("maxfirst-solitaire", _MAXFIRST, "maxfirst",
                     "Solitaire; edge (vi,vj) labeled i. Each vertex has its own "
                     "memoryless win, but no single choice function wins everywhere."),
        GalleryEntry("decomposition-example", _DECOMP, "evenlen",
                     "Realizes the play v w x w v s (x y z)^omega."),
        GalleryEntry("footnote-lasso", _EVENLEN_MEMORY, "evenlen",
                     "Realizes the loop v1 v2 v1 v3 v2 v4; its cycles are all even "
                     "from position 0 and all odd from position 1."),
        GalleryEntry("energy-insufficient-credit", _ENERGY, "energy",
                     "All cycles are nonnegative but the prefix dips to -1, so "
                     "Energy(0) is lost while every cycle is good."),
    ]
}

ALIASES = {"prop1": "prop1-evenlen"}

LASSO_LOOP = ("v1", "v2", "v1", "v3", "v2", "v4")
DECOMPOSITION_PLAY = tuple("v w x w v s x y z x y z x".split())


def get(name: str) -> GalleryEntry:
    name = ALIASES.get(name, name)
    if name not in ENTRIES:
        raise KeyError(f"unknown gallery entry {name!r}; known: {', '.join(ENTRIES)}")
    return ENTRIES[name]
