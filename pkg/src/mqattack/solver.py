"""Boolean-solution search driven by Macaulay pseudo solutions.

boolean_solve repeatedly samples a monomial from the pseudo solution, sets
its variables to 1 and simplifies, until the all-zero point of the remaining
variables solves what is left. all_boolean_solutions enumerates by adding
exclusion monomials; solve_boolean_system runs the search on the integer lift
of an F2 system.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

import numpy as np

from .boolpoly import BooleanSystem
from .hhlsim import TrivialZeroSolutionError, perturb, sample_measurement, state_from_operator
from .lift import IntPolynomial, field_equations, lift_system
from .macaulay import build_operator

MAX_COLUMNS = 400_000
MAX_NOISE_EVENTS = 10_000


@dataclass
class SolveConfig:
    eps: float = 0.1
    eps1: float = 0.5
    D_override: int | None = None
    loop_budget_hint: int | None = None
    seed: int = 0
    mode: str = "exact"  # "exact" or "perturbed"
    method: str = "auto"
    record_kappa: bool = False

    def __post_init__(self):
        if not 0 < self.eps < 1:
            raise ValueError("eps must lie in (0, 1)")
        if not 0 < self.eps1 < 1:
            raise ValueError("eps1 must lie in (0, 1)")
        if self.mode not in ("exact", "perturbed"):
            raise ValueError(f"unknown mode {self.mode!r}")

    @property
    def max_restarts(self) -> int:
        return max(1, math.ceil(math.log(self.eps) / math.log(self.eps1) - 1e-12))


@dataclass
class RoundTrace:
    restart: int
    round: int
    n_vars: int
    D: int
    M: int
    N: int
    rows_used: int
    cols_used: int
    measured_col: int
    measured_monomial: str
    fixed: list
    noise_events: int
    outcome: str
    residual: float
    kappa_scaled: float | None = None
    kappa_raw: float | None = None


@dataclass
class SolveReport:
    solution: tuple | None
    variables: list
    seed: int
    mode: str
    restarts_used: int = 0
    max_restarts: int = 0
    rounds: list = field(default_factory=list)
    flags: list = field(default_factory=list)
    shortcut: str | None = None

    @property
    def found(self) -> bool:
        return self.solution is not None

    def to_json_obj(self) -> dict:
        d = asdict(self)
        d["solution"] = list(self.solution) if self.solution is not None else None
        return d


def _evaluate_all(F: Sequence[IntPolynomial], point: Sequence[int]) -> bool:
    return all(f.evaluate(point) == 0 for f in F)


def _mono_str(exps: Sequence[int], names: Sequence[str]) -> str:
    parts = [names[i] + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e]
    return "*".join(parts) or "1"


def boolean_solve(F: Sequence[IntPolynomial], variables: Sequence[str] | int,
                  cfg: SolveConfig | None = None,
                  rng: np.random.Generator | None = None,
                  on_round: Callable | None = None) -> SolveReport:
    """Find a 0/1 solution of an integer polynomial system, or report none."""
    cfg = cfg or SolveConfig()
    names = [f"x{i + 1}" for i in range(variables)] if isinstance(variables, int) else list(variables)
    n = len(names)
    if any(f.max_variable() >= n for f in F):
        raise ValueError("polynomial uses a variable beyond the declared list")
    rng = rng if rng is not None else np.random.default_rng(cfg.seed)
    report = SolveReport(solution=None, variables=names, seed=cfg.seed, mode=cfg.mode,
                         max_restarts=cfg.max_restarts)
    if cfg.D_override is not None:
        report.flags.append("unverified csdeg")

    for label, pt in (("zero", (0,) * n), ("one", (1,) * n)):
        if _evaluate_all(F, pt):
            report.solution, report.shortcut = pt, label
            return report

    budget = cfg.loop_budget_hint or n
    step_eps = math.sqrt(cfg.eps1 / max(budget, 1))

    for restart in range(1, cfg.max_restarts + 1):
        report.restarts_used = restart
        F1 = [g for g in (f.squarefree() for f in F) if g]
        Y = list(range(n))
        ones: set[int] = set()
        rnd = 0
        while True:
            rnd += 1
            local = {v: j for j, v in enumerate(Y)}
            F2 = [f.rename(local) for f in F1] + field_equations(range(len(Y)))
            D = cfg.D_override if cfg.D_override is not None else 3 * len(Y)
            D = max(D, max(f.degree() for f in F2))
            op = build_operator(F2, D, len(Y), normalize=True)
            cs = op.compact("degree")
            if cs.A.shape[1] > MAX_COLUMNS:
                raise MemoryError(f"Macaulay system with {cs.A.shape[1]} columns exceeds the guard")
            try:
                state = state_from_operator(op, method=cfg.method, compact=cs)
            except TrivialZeroSolutionError:
                # nothing to measure: only possible when no 0/1 point is left
                report.rounds.append(RoundTrace(
                    restart=restart, round=rnd, n_vars=len(Y), D=D, M=op.params.M, N=op.params.N,
                    rows_used=cs.A.shape[0], cols_used=cs.A.shape[1], measured_col=-1,
                    measured_monomial="", fixed=[], noise_events=0, outcome="fail-zero",
                    residual=float(np.linalg.norm(cs.b))))
                break
            if cfg.mode == "perturbed":
                state = perturb(state, step_eps, rng)
            noise = 0
            while True:
                col = sample_measurement(state, rng)
                if state.degree(col) <= D:
                    break
                noise += 1
                if noise > MAX_NOISE_EVENTS:
                    raise RuntimeError("measurement keeps landing outside degree D")
            exps = state.exponents(col)
            fixed = [Y[j] for j, e in enumerate(exps) if e]
            ones.update(fixed)
            assign = {v: 1 for v in fixed}
            F1 = [g for g in (f.substitute(assign) for f in F1) if g]
            Y = [v for v in Y if v not in assign]

            kappa_s = kappa_r = None
            if cfg.record_kappa:
                from .condition import operator_kappas
                kappa_s, kappa_r = operator_kappas(op)

            if any(f.is_constant() for f in F1):
                outcome = "fail-constant"
            elif not F1 or all(f.constant_term == 0 for f in F1):
                outcome = "solution"
            elif not Y:
                outcome = "fail-empty"
            else:
                outcome = "continue"
            tr = RoundTrace(restart=restart, round=rnd, n_vars=len(local), D=D, M=op.params.M,
                            N=op.params.N, rows_used=cs.A.shape[0], cols_used=cs.A.shape[1],
                            measured_col=int(col),
                            measured_monomial=_mono_str(exps, [names[v] for v in local]),
                            fixed=[names[v] for v in fixed], noise_events=noise,
                            outcome=outcome, residual=state.residual,
                            kappa_scaled=kappa_s, kappa_raw=kappa_r)
            report.rounds.append(tr)
            if on_round is not None:
                on_round(tr, op)
            if outcome == "solution":
                point = tuple(1 if v in ones else 0 for v in range(n))
                if _evaluate_all(F, point):
                    report.solution = point
                    return report
                tr.outcome = "fail-verify"
                break
            if outcome != "continue":
                break
    return report


def double_variables(F: Sequence[IntPolynomial], n: int) -> list[IntPolynomial]:
    """F together with x_i + xbar_i - 1, xbar_i being variable n + i."""
    comp = [IntPolynomial.variable(i) + IntPolynomial.variable(n + i) - 1 for i in range(n)]
    return list(F) + comp


def exclusion_monomial(a: Sequence[int]) -> IntPolynomial:
    """prod_{a_i = 0} xbar_i * prod_{a_i = 1} x_i, which is 1 only at a."""
    n = len(a)
    mono = tuple((i, 1) if ai else (n + i, 1) for i, ai in enumerate(a))
    return IntPolynomial({mono: 1})


def all_boolean_solutions(F: Sequence[IntPolynomial], variables: Sequence[str] | int,
                          cfg: SolveConfig | None = None,
                          max_solutions: int = 1 << 16) -> set[tuple[int, ...]]:
    """Every 0/1 solution, found one at a time with exclusion monomials."""
    cfg = cfg or SolveConfig()
    names = [f"x{i + 1}" for i in range(variables)] if isinstance(variables, int) else list(variables)
    n = len(names)
    ext_names = names + [f"{v}_bar" for v in names]
    system = double_variables(F, n)
    rng = np.random.default_rng(cfg.seed)
    found: set[tuple[int, ...]] = set()
    while len(found) < max_solutions:
        rep = boolean_solve(system, ext_names, cfg, rng=rng)
        if rep.solution is None:
            break
        a = tuple(rep.solution[:n])
        if a in found:
            raise RuntimeError("exclusion monomial failed to remove a solution")
        found.add(a)
        system = system + [exclusion_monomial(a)]
    return found


def solve_boolean_system(F: BooleanSystem, cfg: SolveConfig | None = None,
                         rng: np.random.Generator | None = None) -> SolveReport:
    """Lift an F2 system to integers, search, and project back to X."""
    lifted = lift_system(F, 3)
    rep = boolean_solve(lifted.system, lifted.variables, cfg, rng=rng)
    if rep.solution is not None:
        point = lifted.project(rep.solution)
        if not F.is_solution(point):
            raise AssertionError("projected point does not solve the F2 system")
        rep.solution = point
    rep.variables = list(F.variables)
    return rep
