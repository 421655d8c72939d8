"""Tame/wild statistics and output sizes over random construction inputs."""

import argparse
import collections
import time
from dataclasses import dataclass

from polyaut.construct import construct
from polyaut.sampling import MODULI, random_construction_input, rng_for
from polyaut.tame import classify, decompose
from polyaut.textio import print_canonical


@dataclass
class SurveyConfig:
    cases: int = 200
    seed: int = 0
    certify: bool = True


def run(cfg):
    rng = rng_for(cfg.seed)
    stats = collections.defaultdict(lambda: collections.Counter())
    max_deg = collections.Counter()
    t0 = time.perf_counter()
    for i in range(cfg.cases):
        p, a = random_construction_input(rng, MODULI[i % len(MODULI)])
        r = construct(p, a)
        assert r.check()
        v = classify(p, a, r.input.b)
        key = print_canonical(p)
        stats[key][v.verdict.value] += 1
        max_deg[key] = max(max_deg[key], r.f2.total_degree(), r.g2.total_degree())
        if cfg.certify and v.is_tame:
            assert decompose(p, a, r.input.b).verify()
    print(f"{'p':>10} {'tame':>5} {'wild':>5} {'max deg':>8}")
    for key in sorted(stats):
        s = stats[key]
        print(f"{key:>10} {s['Tame']:>5} {s['Wild']:>5} {max_deg[key]:>8}")
    print(f"{cfg.cases} cases in {time.perf_counter() - t0:.1f}s")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cases", type=int, default=SurveyConfig.cases)
    ap.add_argument("--seed", type=int, default=SurveyConfig.seed)
    ap.add_argument("--no-certify", action="store_true")
    args = ap.parse_args()
    run(SurveyConfig(args.cases, args.seed, not args.no_certify))


if __name__ == "__main__":
    main()
