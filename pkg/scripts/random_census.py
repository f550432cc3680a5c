"""Index-of-symmetry census over random 3-D unimodular metric Lie algebras.

Draws Milnor-form brackets with rational constants (some set to zero) and
random rational SPD metrics, then tallies (index, isotropy dimension). Index 2
should never appear.
"""
from __future__ import annotations

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from liesym.killing import symmetric_subspace
from liesym.liealg import random_unimodular


@dataclass
class CensusConfig:
    count: int = 500
    seed: int = 0
    zero_prob: float = 0.25


def run(cfg: CensusConfig) -> Counter:
    rng = random.Random(cfg.seed)
    tally: Counter = Counter()
    worst = 0.0
    for _ in range(cfg.count):
        a = random_unimodular(rng, cfg.zero_prob)
        t0 = time.perf_counter()
        rep = symmetric_subspace(a)
        worst = max(worst, time.perf_counter() - t0)
        tally[(rep.index, rep.isotropy_dim)] += 1
    print(f"{cfg.count} algebras, seed {cfg.seed}, slowest analysis {worst:.3f} s")
    for (index, iso), k in sorted(tally.items()):
        print(f"  index {index}  isotropy {iso}: {k}")
    if any(index == 2 for index, _ in tally):
        print("  WARNING: index 2 observed")
    return tally


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=CensusConfig.count)
    p.add_argument("--seed", type=int, default=CensusConfig.seed)
    p.add_argument("--zero-prob", type=float, default=CensusConfig.zero_prob)
    args = p.parse_args()
    run(CensusConfig(args.count, args.seed, args.zero_prob))


if __name__ == "__main__":
    main()
