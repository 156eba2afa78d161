"""Condition numbers of the solver's Macaulay operators on small random systems.

For each size n, solve a few random F2 systems in exact mode and record the
largest kappa seen across rounds, for the row-scaled and the raw operator.

    python scripts/kappa_survey.py --sizes 2 3 4 --per-size 5 --out kappa.csv
"""
import argparse
from itertools import combinations

import numpy as np

from mqattack.boolpoly import BooleanPolynomial, BooleanSystem
from mqattack.condition import system_condition_number
from mqattack.solver import SolveConfig


def random_system(rng, n, r, max_terms=3):
    monos = [0] + [1 << i for i in range(n)] + [(1 << i) | (1 << j) for i, j in combinations(range(n), 2)]
    polys = []
    for _ in range(r):
        t = int(rng.integers(1, max_terms + 1))
        f = BooleanPolynomial.from_monomials(rng.choice(monos, size=min(t, len(monos)), replace=False).tolist())
        if f:
            polys.append(f)
    return BooleanSystem(tuple(f"x{i + 1}" for i in range(n)), tuple(polys))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--per-size", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--D", type=int, default=None, help="degree override (default 3 * #variables)")
    ap.add_argument("--out")
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    lines = ["n,instance,rounds,max_N,kappa_scaled,kappa_raw,solved"]
    for n in args.sizes:
        for k in range(args.per_size):
            F = random_system(rng, n, n)
            res = system_condition_number(F, SolveConfig(seed=k, D_override=args.D))
            max_n = max(rc.N for rc in res.rounds)
            lines.append(f"{n},{k},{len(res.rounds)},{max_n},{res.kappa:.6f},{res.kappa_raw:.6f},"
                         f"{int(res.report.solution is not None)}")
            print(lines[-1], flush=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
