"""Command-line front end: mqattack <subcommand> [flags].

Exit codes: 0 success, 1 no solution / unsatisfiable, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import os
import sys

EXIT_OK, EXIT_NONE, EXIT_ERROR = 0, 1, 2
_THREAD_VARS = ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS")


def _set_threads(n: int | None) -> None:
    # must run before numpy is first imported to take effect
    if n:
        for var in _THREAD_VARS:
            os.environ[var] = str(n)


def _out(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _err(msg: str) -> None:
    sys.stderr.write(msg.rstrip("\n") + "\n")


# ---------------------------------------------------------------- subcommands

def cmd_generate(args) -> int:
    import numpy as np
    from . import generators as g
    from .io import dumps

    fam = args.family
    rng = np.random.default_rng(args.seed)
    if args.stats_only:
        if fam == "aes":
            st = g.aes_stats(args.nk, args.nr)
        elif fam == "trivium":
            st = g.trivium_stats(args.nr)
        elif fam == "keccak":
            st = g.keccak_stats(args.nh, args.b, args.nr)
        elif fam == "bmq" and args.dense:
            st = g.dense_bmq_stats(args.n, args.r)
        else:
            raise ValueError(f"--stats-only has no closed form for {fam!r}")
        _out(dumps(st.to_json_obj()), args.out)
        return EXIT_OK

    params: dict = {"seed": args.seed}
    if fam == "aes":
        system, _ = g.aes_instance(args.nk, args.nr, seed=args.seed)
        params.update(Nk=args.nk, Nr=args.nr)
    elif fam == "trivium":
        system, _ = g.trivium_instance(args.nr, seed=args.seed)
        params.update(Nr=args.nr)
    elif fam == "keccak":
        system, _ = g.keccak_instance(args.nh, args.b, args.nr, seed=args.seed)
        params.update(Nh=args.nh, b=args.b, Nr=args.nr)
    elif fam == "bmq":
        system = g.gen_random_bmq(args.n, args.r, density=args.density, dense=args.dense,
                                  seed=args.seed, planted=args.planted)
        params.update(n=args.n, r=args.r)
    elif fam == "sat":
        clauses = g.random_3sat(args.n, args.r, rng)
        system = g.gen_3sat(clauses, args.n)
        params.update(n=args.n, clauses=[list(c) for c in clauses])
    elif fam == "subset-sum":
        A = rng.integers(1, 10, (args.r, args.n))
        x = rng.integers(0, 2, args.n)
        system = g.gen_subset_sum(A, A @ x)
        params.update(n=args.n, r=args.r)
    elif fam == "graph-iso":
        n = args.n
        A = np.triu(rng.integers(0, 2, (n, n)), 1)
        A = A + A.T
        perm = rng.permutation(n)
        P = np.eye(n, dtype=int)[:, perm]
        system = g.gen_graph_iso(A, P.T @ A @ P)
        params.update(n=n)
    else:
        raise ValueError(f"unknown family {fam!r}")
    st = g.stats_of(system, fam, params)
    _out(dumps(system.to_json_obj()), args.out)
    _err(f"{fam} n={st.n} r={st.r} T={st.T} seed={args.seed}")
    return EXIT_OK


def _load(args):
    from .io import read_system
    if not args.system:
        raise ValueError("--system is required")
    return read_system(args.system)


def _int_system(system):
    """(polynomials, names, lift) for either system kind."""
    from .boolpoly import BooleanSystem
    from .lift import lift_system
    if isinstance(system, BooleanSystem):
        lifted = lift_system(system, 3)
        return lifted.system, lifted.variables, lifted
    return system.polynomials, system.variables, None


def cmd_lift(args) -> int:
    from .boolpoly import BooleanSystem
    from .io import dumps
    from .lift import lift_system
    system = _load(args)
    if not isinstance(system, BooleanSystem):
        raise ValueError("lift expects a Boolean system")
    res = lift_system(system, args.s)
    _out(dumps(res.to_json_obj()), args.out)
    _err(f"lifted: n={len(res.variables)} (auxiliary {len(res.auxiliary_vars)}) r={len(res.system)}")
    return EXIT_OK


def cmd_macaulay(args) -> int:
    from .macaulay import build_operator, dump_dense, write_matrix_market
    system = _load(args)
    polys, names, _ = _int_system(system)
    if args.D is None:
        raise ValueError("--D is required")
    op = build_operator(polys, args.D, len(names), normalize=args.normalize)
    text = op.params.to_text()
    if args.dump:
        text += dump_dense(op)
    if args.mtx:
        write_matrix_market(op, args.mtx)
    _out(text, args.out)
    return EXIT_OK


def _config(args):
    from .solver import SolveConfig
    return SolveConfig(eps=args.eps, eps1=args.eps1, D_override=args.D, seed=args.seed,
                       mode=args.mode, method=args.method)


def cmd_solve(args) -> int:
    from .boolpoly import BooleanSystem
    from .io import dumps
    from .solver import boolean_solve, solve_boolean_system
    system = _load(args)
    cfg = _config(args)
    if isinstance(system, BooleanSystem):
        rep = solve_boolean_system(system, cfg)
    else:
        rep = boolean_solve(system.polynomials, system.variables, cfg)
    obj = rep.to_json_obj()
    if not args.trace:
        obj.pop("rounds")
    _out(dumps(obj), args.out)
    if args.trace:
        for tr in rep.rounds:
            _err(f"restart {tr.restart} round {tr.round}: measured {tr.measured_monomial} "
                 f"-> {tr.outcome}")
    if rep.solution is None:
        _err("no solution found")
        return EXIT_NONE
    _err("solution " + "".join(map(str, rep.solution)) + f" (seed {cfg.seed})")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    from .io import dumps
    from .solver import all_boolean_solutions
    system = _load(args)
    polys, names, lifted = _int_system(system)
    sols = all_boolean_solutions(polys, names, _config(args))
    if lifted is not None:
        sols = {lifted.project(p) for p in sols}
    out = {"variables": list(system.variables), "seed": args.seed,
           "solutions": [list(p) for p in sorted(sols)]}
    _out(dumps(out), args.out)
    return EXIT_OK if sols else EXIT_NONE


def cmd_degrees(args) -> int:
    from .degrees import complete_solving_degree, format_basis, groebner_drl, solving_degree
    from .io import dumps
    system = _load(args)
    polys, names, _ = _int_system(system)
    n = len(names)
    dmax = args.D if args.D is not None else 2 * max(f.degree() for f in polys) + n
    G = groebner_drl(polys, n)
    out = {
        "variables": list(names),
        "groebner_basis": format_basis(G, names).splitlines(),
        "solving_degree": solving_degree(polys, dmax, n),
        "complete_solving_degree": complete_solving_degree(polys, dmax, n),
        "D_max": dmax,
    }
    _out(dumps(out), args.out)
    return EXIT_OK


def cmd_condition(args) -> int:
    from .boolpoly import BooleanSystem
    from .condition import system_condition_number
    system = _load(args)
    cfg = _config(args)
    F = system if isinstance(system, BooleanSystem) else (system.polynomials, system.variables)
    res = system_condition_number(F, cfg, method=args.method)
    name = os.path.splitext(os.path.basename(args.system))[0]
    _out(res.to_csv(name, raw=args.raw), args.out)
    return EXIT_OK


def cmd_estimate(args) -> int:
    from .estimate import CSV_HEADER, exact_complexity, simplified_complexity, table_report
    from .generators import stats_of
    if args.system:
        system = _load(args)
        st = stats_of(system, "custom", {})
        s, e = simplified_complexity(st, args.eps), exact_complexity(st, args.eps)
        name = os.path.splitext(os.path.basename(args.system))[0]
        _out(f"{CSV_HEADER}\ncustom,{name},{st.n},{st.r},{st.T},"
             f"{s.log2_value:.6f},{e.log2_value:.6f}\n", args.out)
        return EXIT_OK
    _out(table_report(args.table, args.eps), args.out)
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mqattack", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--system", help="input system (JSON)")
    common.add_argument("--out", help="write the result here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int,
                        default=int(os.environ.get("MQATTACK_THREADS", "0")) or None)
    solve = argparse.ArgumentParser(add_help=False)
    solve.add_argument("--D", type=int, default=None, help="Macaulay degree override")
    solve.add_argument("--eps", type=float, default=0.1)
    solve.add_argument("--eps1", type=float, default=0.5)
    solve.add_argument("--mode", choices=("exact", "perturbed"), default="exact")
    solve.add_argument("--method", choices=("auto", "dense", "iterative"), default="auto")
    solve.add_argument("--trace", action="store_true")

    sub = p.add_subparsers(dest="command", required=True)
    g = sub.add_parser("generate", parents=[common], help="generate an equation system")
    g.add_argument("family", choices=("aes", "trivium", "keccak", "bmq", "sat", "subset-sum", "graph-iso"))
    g.add_argument("--nk", type=int, default=4)
    g.add_argument("--nr", type=int, default=1)
    g.add_argument("--nh", type=int, default=256)
    g.add_argument("--b", type=int, default=1600)
    g.add_argument("--n", type=int, default=4)
    g.add_argument("--r", type=int, default=4)
    g.add_argument("--density", type=float, default=0.5)
    g.add_argument("--dense", action="store_true")
    g.add_argument("--planted", action="store_true")
    g.add_argument("--stats-only", action="store_true")
    g.set_defaults(func=cmd_generate)

    lf = sub.add_parser("lift", parents=[common], help="lift an F2 system to integer polynomials")
    lf.add_argument("--s", type=int, default=3)
    lf.set_defaults(func=cmd_lift)

    m = sub.add_parser("macaulay", parents=[common], help="Macaulay parameters and matrices")
    m.add_argument("--D", type=int)
    m.add_argument("--dump", action="store_true", help="print the dense matrix and right-hand side")
    m.add_argument("--mtx", help="write the matrix in Matrix Market format")
    m.add_argument("--normalize", action="store_true")
    m.set_defaults(func=cmd_macaulay)

    s = sub.add_parser("solve", parents=[common, solve], help="find one Boolean solution")
    s.set_defaults(func=cmd_solve)
    e = sub.add_parser("enumerate", parents=[common, solve], help="find all Boolean solutions")
    e.set_defaults(func=cmd_enumerate)

    d = sub.add_parser("degrees", parents=[common], help="Groebner basis and solving degrees")
    d.add_argument("--D", type=int, default=None, help="largest degree to try")
    d.set_defaults(func=cmd_degrees)

    c = sub.add_parser("condition", parents=[common, solve], help="condition numbers along a solver run")
    c.add_argument("--raw", action="store_true", help="report the unnormalized operator")
    c.set_defaults(func=cmd_condition)

    es = sub.add_parser("estimate", parents=[common], help="resource tables")
    es.add_argument("--table", choices=("aes", "trivium", "keccak", "all", "summary"), default="all")
    es.add_argument("--eps", type=float, default=0.01)
    es.set_defaults(func=cmd_estimate)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    _set_threads(args.threads)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, MemoryError, TypeError, OverflowError) as exc:
        _err(f"error: {exc}")
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
