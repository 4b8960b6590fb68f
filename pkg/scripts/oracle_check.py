"""Compare the exact engine with Monte Carlo on random designs.

Prints one line per design with z-scores for rejection probability and ETS.
"""

import argparse
import math

import numpy as np

from maxsprt import SequentialDesign, SimConfig, evaluate, simulate, solve_cv


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--designs", type=int, default=5)
    parser.add_argument("--reps", type=int, default=200_000)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    print(f"{'T':>7} {'M':>3} {'D':>6} {'rr':>4} {'cv':>9} {'exact':>9} {'mc':>9} {'z_p':>6} {'z_ets':>6}")
    for i in range(args.designs):
        t = float(rng.uniform(1, 100))
        m = int(rng.integers(1, 11))
        d = float(rng.uniform(0, t / 2))
        rr = float(rng.choice([1.0, 1.5, 2.0, 4.0]))
        sol = solve_cv(0.05, t, m, d)
        cv = sol.cv_cons if sol.cv_cons is not None else 1.0
        design = SequentialDesign(cv, t, m, d, rr)
        exact = evaluate(design)
        sim = simulate(SimConfig(design, args.reps, seed=args.seed * 1000 + i))
        z_p = (sim.reject_rate - exact.reject_prob) / sim.reject_se if sim.reject_se else 0.0
        z_e = (sim.ets_mean - exact.ets_conditional) / sim.ets_se if sim.ets_se else math.nan
        print(f"{t:7.2f} {m:3d} {d:6.2f} {rr:4.1f} {cv:9.6f} {exact.reject_prob:9.6f} "
              f"{sim.reject_rate:9.6f} {z_p:6.2f} {z_e:6.2f}")


if __name__ == "__main__":
    main()
