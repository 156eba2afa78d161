from pathlib import Path

import numpy as np
import pytest
import scipy.sparse as sp

from mqattack.hhlsim import (MinNormSolveError, TrivialZeroSolutionError, min_norm_dense,
                             min_norm_iterative, min_norm_solve, perturb, pseudo_solution,
                             sample_measurement)
from mqattack.io import read_system
from mqattack.lift import IntPolynomial, brute_force_boolean_solutions, field_equations
from mqattack.macaulay import build_operator

from published import EX11_SOLUTION
from conftest import random_int_poly

DATA = Path(__file__).resolve().parents[1] / "data"


def x(i):
    return IntPolynomial.variable(i)


@pytest.fixture
def ex1():
    return read_system(DATA / "ex1.json").polynomials


def test_ex11_min_norm_vector(ex1):
    op = build_operator(ex1, 2)
    xt = min_norm_solve(op, op.rhs_dense())
    assert np.allclose(xt, EX11_SOLUTION, atol=1e-10)
    A = op.to_dense()
    assert np.allclose(min_norm_dense(A, op.rhs_dense()), EX11_SOLUTION, atol=1e-10)
    assert np.allclose(min_norm_iterative(A, op.rhs_dense()), EX11_SOLUTION, atol=1e-8)


def test_trivial_min_norm_cases():
    assert np.allclose(min_norm_solve(np.eye(4), np.eye(4)[0]), np.eye(4)[0])
    assert np.allclose(min_norm_solve(np.array([[1.0, 1.0]]), np.array([2.0])), [1, 1])
    assert np.allclose(min_norm_solve(sp.csr_matrix(np.array([[1.0, 1.0]])), np.array([2.0]),
                                      method="iterative"), [1, 1])
    with pytest.raises(ValueError):
        min_norm_solve(np.eye(3), np.ones(2))
    with pytest.raises(ValueError):
        min_norm_solve(np.eye(3), np.ones(3), tol=0)


def test_iterative_budget_error():
    rng = np.random.default_rng(1)
    A = rng.normal(size=(60, 40))
    with pytest.raises(MinNormSolveError) as info:
        min_norm_iterative(A, rng.normal(size=60), maxiter=2)
    assert info.value.residual > 0


def test_unique_solution_state(ex1):
    st = pseudo_solution(ex1, 2)
    op = build_operator(ex1, 2)
    m = op.monomial_vector((1, 1))
    assert np.allclose(st.dense(), m / np.linalg.norm(m), atol=1e-10)
    assert st.residual < 1e-10


def _hull_residual(xt, vecs):
    """Distance from xt to the affine hull of vecs."""
    if len(vecs) == 1:
        return float(np.linalg.norm(xt - vecs[0]))
    base = vecs[0]
    M = np.column_stack([v - base for v in vecs[1:]])
    coef, *_ = np.linalg.lstsq(M, xt - base, rcond=None)
    return float(np.linalg.norm(M @ coef + base - xt))


def test_two_solution_affine_hull():
    F = [x(0) * x(0) - x(0), x(0) + x(1) - 1]
    st = pseudo_solution(F, 6, 2)
    op = build_operator(F, 6, 2, normalize=True)
    xt = st.dense() * st.norm
    vecs = [op.monomial_vector(a) for a in [(0, 1), (1, 0)]]
    assert _hull_residual(xt, vecs) < 1e-8


def test_inconsistent_system_leaves_residual():
    F = [x(0) - 1, x(0)] + field_equations([0])
    st = pseudo_solution(F, 2, 1)
    assert st.residual > 1e-3


def test_zero_rhs_is_rejected():
    with pytest.raises(TrivialZeroSolutionError):
        pseudo_solution([x(0) * x(1), x(0) * x(0) - x(0)], 2, 2)


def test_affine_hull_property_random(rng):
    checked = 0
    while checked < 25:
        n = int(rng.integers(1, 4))
        F = [f for f in (random_int_poly(rng, n, max_deg=2) for _ in range(n)) if f]
        F += field_equations(range(n))
        sols = sorted(brute_force_boolean_solutions(F, n))
        if not sols or len(sols) > 4 or all(f.constant_term == 0 for f in F):
            continue
        D = 2 * n + 2
        st = pseudo_solution(F, D, n)
        op = build_operator(F, D, n, normalize=True)
        xt = st.dense() * st.norm
        vecs = [op.monomial_vector(a) for a in sols]
        assert _hull_residual(xt, vecs) < 1e-6
        # minimality against every monomial vector that also solves the system
        for v in vecs:
            assert np.linalg.norm(xt) <= np.linalg.norm(v) + 1e-9
        # degree-(>D) columns carry nothing
        assert (op.column_degrees(st.support[np.abs(st.amplitudes) > 1e-12]) <= D).all()
        checked += 1


def test_dense_and_iterative_agree(rng):
    for _ in range(10):
        n = 3
        F = [f for f in (random_int_poly(rng, n) for _ in range(3)) if f] + field_equations(range(n))
        op = build_operator(F, 4, n)
        cs = op.compact()
        xd = min_norm_solve(cs.A, cs.b, method="dense")
        xi = min_norm_solve(cs.A, cs.b, method="iterative")
        scale = max(np.linalg.norm(xd), 1e-12)
        assert np.linalg.norm(xd - xi) / scale < 1e-6


def test_orthogonal_to_null_space(ex1):
    op = build_operator(ex1, 2)
    A = op.to_dense()
    xt = min_norm_dense(A, op.rhs_dense())
    _, s, Vt = np.linalg.svd(A)
    null = Vt[int((s > 1e-10 * s[0]).sum()):]
    assert np.allclose(null @ xt, 0, atol=1e-10)


def test_perturb_contract(ex1, rng):
    st = pseudo_solution(ex1, 2)
    assert perturb(st, 0.0, rng) is st
    for _ in range(1000):
        out = perturb(st, 0.1, rng)
        dist2 = np.sum((out.amplitudes - st.amplitudes) ** 2) + out.tail
        assert np.sqrt(dist2) <= 0.1 + 1e-12
        assert abs(np.sum(out.amplitudes**2) + out.tail - 1) < 1e-12
    with pytest.raises(ValueError):
        perturb(st, 1.0, rng)


def test_measurement_basis_and_uniform(ex1, rng):
    st = pseudo_solution(ex1, 2)
    from dataclasses import replace
    basis = replace(st, amplitudes=np.eye(len(st.support))[3])
    assert {sample_measurement(basis, rng) for _ in range(50)} == {int(st.support[3])}
    two = replace(st, amplitudes=np.r_[np.full(2, 2**-0.5), np.zeros(len(st.support) - 2)])
    draws = np.array([sample_measurement(two, rng) for _ in range(10_000)])
    freq = np.mean(draws == st.support[0])
    assert abs(freq - 0.5) < 0.05


def test_measurement_support_of_ex11(ex1, rng):
    st = pseudo_solution(ex1, 2)
    allowed = {j for j, v in enumerate(EX11_SOLUTION) if v}
    draws = {sample_measurement(st, rng) for _ in range(2000)}
    assert draws == allowed


def test_state_csv(ex1):
    text = pseudo_solution(ex1, 2).to_csv(["x1", "x2"])
    assert text.splitlines()[0] == "index,monomial,amplitude"
    assert "7,x1^2,0.447214" in text
