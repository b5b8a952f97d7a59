"""Exhaustive solitaire sweep: pointwise memoryless region versus winning region."""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from fcgames.fcg import LeafCache, p0_region_indices
from fcgames.generators import solitaire_family
from fcgames.properties import parse_property
from fcgames.strategies import pointwise_memoryless_region


@dataclass
class Config:
    max_n: int = 3
    labels: str = "0,1,2"
    max_outdeg: int = 2
    properties: str = "parity,maxfirst,evenlen"


def main(cfg: Config):
    labels = tuple(int(x) for x in cfg.labels.split(","))
    props = [parse_property(s) for s in cfg.properties.split(",")]
    stats = Counter()
    t0 = time.perf_counter()
    for a in solitaire_family(cfg.max_n, labels, cfg.max_outdeg):
        stats["arenas"] += 1
        for p in props:
            leaf = LeafCache(a.core, p)
            region = [a.core.ids[i] for i in p0_region_indices(a, p, leaf)]
            pw = pointwise_memoryless_region(a, p, 0, leaf=leaf)
            stats[f"{p}:equal"] += pw == region
            stats[f"{p}:won-vertices"] += len(region)
    for k, v in sorted(stats.items()):
        print(f"{k:28s} {v}")
    print(f"elapsed {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--labels", default=Config.labels)
    ap.add_argument("--max-outdeg", type=int, default=Config.max_outdeg)
    ap.add_argument("--properties", default=Config.properties)
    main(Config(**vars(ap.parse_args())))
