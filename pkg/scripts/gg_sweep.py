"""Geography reduction versus direct search, exhaustively on small graphs."""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from fcgames.fcg import solve_fcg
from fcgames.generators import all_gg
from fcgames.geography import gg_to_fcg, solve_gg_direct


@dataclass
class Config:
    max_n: int = 3


def main(cfg: Config):
    stats = Counter()
    t0 = time.perf_counter()
    for g in all_gg(cfg.max_n):
        red = gg_to_fcg(g)
        out = solve_fcg(red.arena, red.property, red.start)
        ok = red.mover_wins(out.winner) == (solve_gg_direct(g) == "mover")
        stats[red.construction] += 1
        stats["agree" if ok else "DISAGREE"] += 1
    print(dict(stats), f"{time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    main(Config(**vars(ap.parse_args())))
