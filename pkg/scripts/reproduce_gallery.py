"""Solve the memory-needing and non-uniform gallery arenas and print their reports."""

import argparse
import json
from dataclasses import dataclass

from fcgames import gallery
from fcgames.fcg import regions
from fcgames.properties import parse_property
from fcgames.strategies import classify_determinacy, min_moore_memory


@dataclass
class Config:
    kmax: int = 3


def main(cfg: Config):
    for name in ("prop1-evenlen", "maxfirst-solitaire"):
        e = gallery.get(name)
        a, p = e.arena(), parse_property(e.property)
        rep = classify_determinacy(a, p).to_json()
        mem = {}
        for player, vs in regions(a, p).items():
            for v in vs:
                mem[f"{player}@{v}"] = min_moore_memory(a, p, player, v, cfg.kmax).memory
        print(json.dumps({"arena": name, "report": rep, "minMemory": mem}, indent=2))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmax", type=int, default=Config.kmax)
    main(Config(**vars(ap.parse_args())))
