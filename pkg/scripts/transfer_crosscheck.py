"""Transfer pipeline versus the memoryless-enumeration oracle on random arenas."""

import argparse
import random
import time
from dataclasses import dataclass

from fcgames.generators import random_arena
from fcgames.infinite import (oracle_regions, parse_condition, solve_infinite_via_transfer,
                              verify_memoryless_wins_infinite)

KINDS = {"parity": ("priority", [0, 1, 2, 3])}
WEIGHTS = ("weight", list(range(-3, 4)))


@dataclass
class Config:
    conditions: str = "parity,meanpayoff:0,meanpayoff:1/2,energy"
    n: int = 6
    count: int = 100
    seed: int = 0


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    print(f"seed {cfg.seed}")
    for name in cfg.conditions.split(","):
        kind, alpha = KINDS.get(name.split(":")[0], WEIGHTS)
        t0 = time.perf_counter()
        agree = verified = 0
        for _ in range(cfg.count):
            a = random_arena(rng, cfg.n, kind, alpha)
            w = parse_condition(name, a)
            res = solve_infinite_via_transfer(a, w)
            agree += res.regions == oracle_regions(a, w)
            verified += all(verify_memoryless_wins_infinite(a, w, res.strategies[i], v)
                            for i in (0, 1) for v in res.regions[i])
        print(f"{name:16s} agree {agree}/{cfg.count}  verified {verified}/{cfg.count}  "
              f"{time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--conditions", default=Config.conditions)
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--count", type=int, default=Config.count)
    ap.add_argument("--seed", type=int, default=Config.seed)
    main(Config(**vars(ap.parse_args())))
