"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py` or directly with
`python tests/test_acceptance.py` for a plain summary.
"""
from __future__ import annotations

import math
import sys
import time
from itertools import combinations
from pathlib import Path

import numpy as np
import pytest
import scipy.sparse as sp

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from conftest import random_int_poly  # noqa: E402
from published import EX1_MATRIX, EX1_RHS, EX11_SOLUTION, G3, G4_EXTRA, TABLE_ROWS  # noqa: E402

from mqattack.boolpoly import BooleanPolynomial, BooleanSystem, brute_force_f2_solutions  # noqa: E402
from mqattack.condition import singular_extremes_dense, singular_extremes_iterative, spectrum  # noqa: E402
from mqattack.degrees import (complete_solving_degree, groebner_drl, macaulay_echelon,  # noqa: E402
                              macaulay_rowspace, solving_degree)
from mqattack.generators import alpha_count, sbox_equations, sbox_table  # noqa: E402
from mqattack.hhlsim import min_norm_solve, pseudo_solution  # noqa: E402
from mqattack.io import read_system  # noqa: E402
from mqattack.lift import brute_force_boolean_solutions, field_equations  # noqa: E402
from mqattack.macaulay import build_operator, compute_params, pad_assumption2  # noqa: E402
from mqattack.solver import SolveConfig, all_boolean_solutions, solve_boolean_system  # noqa: E402

DATA = HERE.parent / "data"


class Check:
    """Collects sub-check failures and the elapsed time of one criterion."""

    def __init__(self, number: int, title: str, limit: float):
        self.number, self.title, self.limit = number, title, limit
        self.failures: list[str] = []
        self.notes: list[str] = []
        self.start = time.perf_counter()

    def expect(self, ok: bool, what: str) -> None:
        if not ok:
            self.failures.append(what)

    def finish(self) -> tuple[bool, str]:
        elapsed = time.perf_counter() - self.start
        if elapsed > self.limit:
            self.failures.append(f"runtime {elapsed:.1f}s > {self.limit:.0f}s")
        ok = not self.failures
        detail = "; ".join(self.failures if not ok else self.notes)
        line = f"{'PASS' if ok else 'FAIL'} criterion {self.number} ({self.title}) [{elapsed:.1f}s]"
        return ok, line + (f": {detail}" if detail else "")


def _report(capsys, ok: bool, line: str) -> None:
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    assert ok, line


# ---------------------------------------------------------------- 1


def criterion_1():
    from mqattack.cli import run
    import contextlib
    import io

    c = Check(1, "table reproduction", 1.0)
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = run(["estimate", "--table", "all", "--eps", "0.01"])
    c.expect(code == 0, f"exit code {code}")
    rows = [line.split(",") for line in buf.getvalue().splitlines()[1:]]
    c.expect(len(rows) == len(TABLE_ROWS), f"{len(rows)} rows")
    keyed = {}
    for row in rows:
        params = tuple(int(kv.split("=")[1]) for kv in row[1].split(";"))
        if row[0] == "keccak":
            params = (params[0], params[1], params[2])
        keyed[(row[0], params)] = row
    for key, (n, r, T, pub) in TABLE_ROWS.items():
        row = keyed.get(key)
        if row is None:
            c.expect(False, f"missing row {key}")
            continue
        c.expect((int(row[2]), int(row[3]), int(row[4])) == (n, r, T), f"{key} counts {row[2:5]}")
        got = float(row[5])
        c.expect(abs(got - pub) <= 0.01, f"{key[0]}{key[1]} log2 {got:.2f} vs {pub:.2f}")
    return c.finish()


# ---------------------------------------------------------------- 2


def criterion_2():
    c = Check(2, "small Macaulay example", 1.0)
    F = read_system(DATA / "ex1.json").polynomials
    p = compute_params(F, 2)
    c.expect((p.dbar, p.Dbar) == (1, 3), f"(dbar, Dbar) = {(p.dbar, p.Dbar)}")
    op = build_operator(F, 2)
    c.expect(op.to_dense(exact=True).tolist() == EX1_MATRIX, "matrix differs")
    c.expect(op.rhs_dense().tolist() == EX1_RHS, "rhs differs")
    return c.finish()


# ---------------------------------------------------------------- 3


def criterion_3():
    c = Check(3, "minimum-norm example", 1.0)
    op = build_operator(read_system(DATA / "ex1.json").polynomials, 2)
    x = min_norm_solve(op, op.rhs_dense())
    err = float(np.max(np.abs(x - np.array(EX11_SOLUTION))))
    c.expect(err <= 1e-6, f"inf-norm error {err:.2e}")
    c.notes.append(f"inf-norm error {err:.1e}")
    return c.finish()


# ---------------------------------------------------------------- 4


def _parse(text: str, n: int = 3):
    import re
    from mqattack.degrees import RatPolynomial
    terms = {}
    for sign, body in re.findall(r"([+-]?)\s*([^+-]+)", text):
        e = [0] * n
        for var, exp in re.findall(r"x(\d+)(?:\^(\d+))?", body):
            e[int(var) - 1] += int(exp or 1)
        terms[tuple(e)] = -1 if sign == "-" else 1
    return RatPolynomial(terms, n)


def criterion_4():
    c = Check(4, "Groebner and degree example", 10.0)
    F = read_system(DATA / "csdeg.json").polynomials
    G = {g.to_str() for g in groebner_drl(F, 3)}
    c.expect(G == {"x1 - 1", "x2 - 1", "x3^2 - x3"}, f"basis {G}")
    sd, cs = solving_degree(F, 8, 3), complete_solving_degree(F, 8, 3)
    c.expect(sd == 3, f"solving degree {sd}")
    c.expect(cs == 4, f"complete solving degree {cs}")
    c.expect(set(macaulay_rowspace(F, 3, 3)) == {_parse(t) for t in G3}, "degree-3 row space")
    ech4 = macaulay_echelon(F, 4, 3)
    rows4 = set(macaulay_rowspace(F, 4, 3))
    for t in ("x1 x3 - x3", "x2 x3 - x3"):
        c.expect(_parse(t) in rows4, f"{t} missing at D=4")
    c.expect(all(ech4.contains(_parse(t)) for t in G3 + G4_EXTRA), "degree-4 span")
    return c.finish()


# ---------------------------------------------------------------- 5


def criterion_5():
    c = Check(5, "S-box relations and linear-layer count", 5.0)
    eqs = sbox_equations()
    S = sbox_table()
    c.expect(len(eqs) == 39, f"{len(eqs)} relations")
    bad = 0
    for xv in range(256):
        point = tuple((xv >> m) & 1 for m in range(8)) + tuple((S[xv] >> m) & 1 for m in range(8))
        bad += sum(f.evaluate(point) for f in eqs)
    c.expect(bad == 0, f"{bad} nonvanishing evaluations")
    a = alpha_count(4)
    c.expect(a == 640, f"alpha ones per round = {a}, expected 640")
    return c.finish()


# ---------------------------------------------------------------- 6


def _hull_residual(xt, vecs):
    if len(vecs) == 1:
        return float(np.linalg.norm(xt - vecs[0]))
    M = np.column_stack([v - vecs[0] for v in vecs[1:]])
    coef, *_ = np.linalg.lstsq(M, xt - vecs[0], rcond=None)
    return float(np.linalg.norm(M @ coef + vecs[0] - xt))


def criterion_6():
    c = Check(6, "pseudo-solution structure", 120.0)
    rng = np.random.default_rng(606)
    done, worst_hull, worst_high = 0, 0.0, 0.0
    while done < 24:
        n = 1 + done % 3
        F = [f for f in (random_int_poly(rng, n) for _ in range(n)) if f] + field_equations(range(n))
        sols = sorted(brute_force_boolean_solutions(F, n))
        if not 1 <= len(sols) <= 4 or all(f.constant_term == 0 for f in F):
            continue
        D = 3 * n
        st = pseudo_solution(F, D, n, method="dense", columns="all")
        op = build_operator(F, D, n, normalize=True)
        xt = st.dense() * st.norm
        res = _hull_residual(xt, [op.monomial_vector(a) for a in sols])
        high = np.abs(st.dense()[op.column_degrees(np.arange(op.params.N)) > D])
        top = float(high.max()) if high.size else 0.0
        worst_hull, worst_high = max(worst_hull, res), max(worst_high, top)
        c.expect(res < 1e-6, f"hull residual {res:.2e} (n={n}, {len(sols)} solutions)")
        c.expect(top < 1e-10, f"degree>D amplitude {top:.2e}")
        done += 1
    c.notes.append(f"{done} systems, worst hull residual {worst_hull:.1e}, "
                   f"worst high-degree amplitude {worst_high:.1e}")
    return c.finish()


# ---------------------------------------------------------------- 7


def _random_bool_system(rng, n, r):
    monos = [0] + [1 << i for i in range(n)] + [(1 << i) | (1 << j) for i, j in combinations(range(n), 2)]
    polys = []
    for _ in range(r):
        t = int(rng.integers(1, 4))
        f = BooleanPolynomial.from_monomials(rng.choice(monos, size=t, replace=False).tolist())
        if f:
            polys.append(f)
    return BooleanSystem(tuple(f"x{i + 1}" for i in range(n)), tuple(polys))


def solver_corpus(seed: int = 1, n_sat: int = 50, n_unsat: int = 20):
    """Satisfiable systems exclude those solved by the all-zero or all-one shortcut."""
    rng = np.random.default_rng(seed)
    sat, unsat = [], []
    while len(sat) < n_sat or len(unsat) < n_unsat:
        n = int(rng.integers(3, 6))
        s = _random_bool_system(rng, n, int(rng.integers(n - 1, n + 3)))
        sols = brute_force_f2_solutions(s)
        if sols and len(sat) < n_sat and (0,) * n not in sols and (1,) * n not in sols:
            sat.append((s, sols))
        elif not sols and len(unsat) < n_unsat:
            unsat.append(s)
    return sat, unsat


def criterion_7():
    c = Check(7, "end-to-end solver", 600.0)
    sat, unsat = solver_corpus()
    wrong = missed = 0
    for k, (s, sols) in enumerate(sat):
        rep = solve_boolean_system(s, SolveConfig(seed=k))
        if rep.solution is None:
            missed += 1
        elif rep.solution not in sols:
            wrong += 1
    spurious = sum(solve_boolean_system(s, SolveConfig(seed=k)).solution is not None
                   for k, s in enumerate(unsat))
    c.expect(wrong == 0, f"{wrong} wrong points")
    c.expect(spurious == 0, f"{spurious} points returned for unsatisfiable systems")
    runs = 200
    empty = 0
    for k in range(runs):
        s, sols = sat[k % len(sat)]
        rep = solve_boolean_system(s, SolveConfig(eps=0.1, seed=1000 + k, mode="perturbed"))
        if rep.solution is None:
            empty += 1
        elif rep.solution not in sols:
            wrong += 1
    bound = 0.1 + 3 * math.sqrt(0.1 * 0.9 / runs)
    c.expect(wrong == 0, f"{wrong} wrong points in perturbed mode")
    c.expect(empty / runs <= bound, f"empty rate {empty / runs:.3f} > {bound:.3f}")
    c.notes.append(f"exact: {len(sat)} sat ({missed} empty), {len(unsat)} unsat; "
                   f"perturbed empty rate {empty}/{runs} (bound {bound:.3f})")
    return c.finish()


# ---------------------------------------------------------------- 8


def criterion_8():
    c = Check(8, "enumeration vs brute force", 300.0)
    rng = np.random.default_rng(8)
    total = 0
    for k in range(40):
        n = 1 + k % 4
        F = [f for f in (random_int_poly(rng, n) for _ in range(int(rng.integers(1, n + 1)))) if f]
        # the doubled system has 2n variables; 3 * 2n is out of reach beyond n = 2
        D = None if n <= 2 else n + 2
        got = all_boolean_solutions(F, n, SolveConfig(seed=k, D_override=D))
        want = brute_force_boolean_solutions(F, n)
        c.expect(got == want, f"system {k} (n={n}): {sorted(got)} vs {sorted(want)}")
        total += len(want)
    for k in range(8):
        n = 2 + k % 3
        s = _random_bool_system(rng, n, n)
        lifted_ok = _enumerate_boolean(s, k)
        c.expect(lifted_ok, f"boolean system {k} differs")
    c.notes.append(f"48 systems, {total} integer-system solutions")
    return c.finish()


def _enumerate_boolean(s: BooleanSystem, seed: int) -> bool:
    from mqattack.lift import lift_system
    lifted = lift_system(s, 3)
    n = len(lifted.variables)
    D = None if n <= 2 else n + 2
    got = all_boolean_solutions(lifted.system, lifted.variables, SolveConfig(seed=seed, D_override=D))
    return {lifted.project(p) for p in got} == brute_force_f2_solutions(s)


# ---------------------------------------------------------------- 9


def _random_macaulay(rng, target_cols):
    while True:
        n = int(rng.integers(3, 6))
        F = [f for f in (random_int_poly(rng, n, max_terms=4) for _ in range(n + 1)) if f]
        F = [f for f in F if f.constant_term != 0][:2] + F + field_equations(range(n))
        if not any(f.constant_term for f in F):
            continue
        for D in range(2, 12):
            op = build_operator(F, D, n, normalize=True)
            cs = op.compact("nonzero")
            if cs.A.shape[1] >= target_cols or D == 11:
                return op, cs


def _nonzero_part(A: sp.csr_matrix) -> sp.csr_matrix:
    """Drop zero rows and columns; the nonzero singular values stay the same."""
    A = A.tocsr()
    A = A[np.flatnonzero(A.getnnz(axis=1))]
    return A[:, np.flatnonzero(A.getnnz(axis=0))]


def criterion_9():
    c = Check(9, "condition numbers", 300.0)
    rng = np.random.default_rng(909)
    sizes = np.linspace(100, 2000, 10).astype(int)
    worst = 0.0
    for m in sizes:
        ncols = int(m * 1.5)
        A = sp.random(int(m), ncols, density=min(1.0, 12 / ncols), random_state=rng, format="csr")
        d = singular_extremes_dense(A)
        it = singular_extremes_iterative(A)
        err = abs(it.kappa - d.kappa) / d.kappa
        worst = max(worst, err)
        c.expect(err <= 0.01, f"random {m}x{ncols}: relative kappa error {err:.2e}")
    pad_worst, padded = 0.0, 0
    for target in np.linspace(40, 1500, 10).astype(int):
        op, cs = _random_macaulay(rng, int(target))
        d = singular_extremes_dense(cs.A)
        it = singular_extremes_iterative(cs.A)
        err = abs(it.kappa - d.kappa) / d.kappa
        worst = max(worst, err)
        c.expect(err <= 0.01, f"Macaulay {cs.A.shape}: relative kappa error {err:.2e}")
        # padding acts on the full operator; nonzero rows and columns carry the spectrum
        rhs = op.rhs()
        if set(rhs.values()) == {1} and sorted(rhs) == [k * op.params.row_block for k in range(op.params.rho)]:
            pad = pad_assumption2(op)
            k0 = spectrum(_nonzero_part(op.to_sparse())).kappa
            k1 = spectrum(_nonzero_part(pad.to_sparse())).kappa
            rel = abs(k1 - k0) / k0
            pad_worst = max(pad_worst, rel)
            padded += 1
            c.expect(rel <= 1e-6, f"padding changed kappa by {rel:.2e}")
    c.expect(padded >= 5, f"only {padded} operators could be padded")
    c.notes.append(f"20 operators, worst iterative error {worst:.1e}; "
                   f"{padded} padded, worst kappa change {pad_worst:.1e}")
    return c.finish()


# ---------------------------------------------------------------- 10


def criterion_10():
    c = Check(10, "query vs materialization", 60.0)
    rng = np.random.default_rng(1010)
    count = 0
    while count < 100:
        n = int(rng.integers(1, 4))
        F = [f for f in (random_int_poly(rng, n) for _ in range(int(rng.integers(1, 4)))) if f]
        if not F:
            continue
        D = max(f.degree() for f in F) + int(rng.integers(0, 3))
        op = build_operator(F, D, n)
        rows, cols = {}, {}
        for i, j, v in op.materialize():
            rows.setdefault(i, []).append((j, v))
            cols.setdefault(j, []).append((i, v))
        c.expect(all(op.query_row(i) == rows.get(i, []) for i in range(op.params.M)), f"row mismatch {count}")
        c.expect(all(op.query_col(j) == cols.get(j, []) for j in range(op.params.N)), f"column mismatch {count}")
        count += 1
    return c.finish()


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f.__name__ for f in CRITERIA])
def test_criterion(criterion, capsys):
    ok, line = criterion()
    _report(capsys, ok, line)


if __name__ == "__main__":
    failed = 0
    for crit in CRITERIA:
        ok, line = crit()
        print(line, flush=True)
        failed += not ok
    sys.exit(1 if failed else 0)
