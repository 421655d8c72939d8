"""How tight is the d+2 iterate bound on tame coordinates?

For each random coordinate f, compare the bound d+2 with the actual
nilpotency index of D_f on x and y.
"""

import argparse
import collections
from dataclasses import dataclass

from polyaut.coordcheck import jacobian_degree_bound
from polyaut.derivation import jacobian_derivation, nilpotency_index
from polyaut.polycore import X, Y
from polyaut.sampling import random_tame_map, rng_for


@dataclass
class BoundConfig:
    cases: int = 200
    seed: int = 0
    max_factors: int = 6


def run(cfg):
    rng = rng_for(cfg.seed)
    slack = collections.Counter()
    violations = 0
    for _ in range(cfg.cases):
        f = random_tame_map(rng, cfg.max_factors)[0]
        if f.is_constant():
            continue
        bound = jacobian_degree_bound(f)
        D = jacobian_derivation(f)
        worst = max(nilpotency_index(D, g, cap=3 * bound) or 3 * bound + 1 for g in (X, Y))
        if worst > bound:
            violations += 1
        slack[bound - worst] += 1
    print("slack (bound - index): count")
    for k in sorted(slack):
        print(f"  {k:>3}: {slack[k]}")
    print("violations:", violations)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cases", type=int, default=BoundConfig.cases)
    ap.add_argument("--seed", type=int, default=BoundConfig.seed)
    ap.add_argument("--max-factors", type=int, default=BoundConfig.max_factors)
    args = ap.parse_args()
    run(BoundConfig(args.cases, args.seed, args.max_factors))


if __name__ == "__main__":
    main()
