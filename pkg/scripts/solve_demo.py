"""Solve a small F2 system end to end and show each measured monomial.

    python scripts/solve_demo.py [--system data/ex2.json] [--mode perturbed] [--seed 3]

Without --system a random planted quadratic system in --n variables is used.
"""
import argparse

from mqattack.boolpoly import brute_force_f2_solutions
from mqattack.generators import gen_random_bmq
from mqattack.io import read_system
from mqattack.lift import lift_system
from mqattack.solver import SolveConfig, solve_boolean_system


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--system")
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--mode", choices=("exact", "perturbed"), default="exact")
    ap.add_argument("--D", type=int, default=None)
    args = ap.parse_args()

    if args.system:
        F = read_system(args.system)
    else:
        F = gen_random_bmq(args.n, args.n, density=0.3, seed=args.seed, planted=True)
    print(f"system: {F.n} variables, {F.r} equations, T = {F.total_sparseness}")
    lifted = lift_system(F, 3)
    print(f"lifted: {len(lifted.variables)} variables, {len(lifted.system)} equations")

    rep = solve_boolean_system(F, SolveConfig(seed=args.seed, mode=args.mode, D_override=args.D))
    for tr in rep.rounds:
        print(f"  restart {tr.restart} round {tr.round}: D={tr.D} matrix {tr.rows_used}x{tr.cols_used}, "
              f"measured {tr.measured_monomial or '-'} -> {tr.outcome}")
    truth = brute_force_f2_solutions(F)
    if rep.solution is None:
        print(f"no solution found (brute force finds {len(truth)})")
    else:
        print("solution", "".join(map(str, rep.solution)), "(checked)" if rep.solution in truth else "(WRONG)")


if __name__ == "__main__":
    main()
