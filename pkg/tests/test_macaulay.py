from itertools import product
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mqattack.hhlsim import min_norm_dense
from mqattack.io import read_system
from mqattack.lift import IntPolynomial, brute_force_boolean_solutions
from mqattack.macaulay import (build_operator, compute_params, digit_sum, index_to_monomial,
                               monomial_to_index, pad_assumption2, reindex_base, write_matrix_market)

from published import EX1_MATRIX
from conftest import random_int_poly

DATA = Path(__file__).resolve().parents[1] / "data"


def x(i):
    return IntPolynomial.variable(i)


@pytest.fixture
def ex1():
    return read_system(DATA / "ex1.json").polynomials


def test_params_ex1(ex1):
    p = compute_params(ex1, 2)
    assert (p.dbar, p.delta, p.Dbar, p.Delta, p.rho) == (1, 1, 3, 2, 2)
    assert (p.M, p.N) == (12, 15)


def test_params_other_cases():
    p = compute_params([x(0) - 1, x(0) * x(1)], 3)
    assert p.dbar == 3 and p.Dbar == 3
    p = compute_params([x(0) * x(1) - 1, x(1) * x(1)], 2)
    assert p.dbar == 0 and p.delta == 0 and p.M == 2
    with pytest.raises(ValueError):
        compute_params([x(0) * x(0) * x(1)], 2)
    with pytest.raises(ValueError):
        compute_params([IntPolynomial()], 2)


@settings(max_examples=30)
@given(st.integers(2, 4), st.integers(1, 8))
def test_param_bounds(n, D):
    F = [x(0) - 1] + [x(i) * x((i + 1) % n) for i in range(n)]
    if D < 2:
        return
    p = compute_params(F, D, n)
    assert p.dbar >= D - min(p.degrees) and p.dbar + 1 <= 2 * D
    assert p.Dbar >= D and p.Dbar + 1 <= 2 * D + 1


def test_index_examples():
    assert index_to_monomial(0, 4, 3) == (0, 0, 0)
    assert index_to_monomial(1, 4, 3) == (0, 0, 1)
    assert index_to_monomial(4, 4, 3) == (0, 1, 0)
    with pytest.raises(ValueError):
        index_to_monomial(64, 4, 3)
    assert reindex_base(3, 1, 2, 2) == 5
    assert reindex_base(6, 2, 2, 2) == 6
    assert reindex_base(1, 1, 3, 1) == 1


@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 4), st.data())
def test_reindex_agrees_with_digits(n, delta, extra, data):
    Delta = delta + extra
    k = data.draw(st.integers(0, (1 << (delta * n)) - 1))
    e = index_to_monomial(k, 1 << delta, n)
    assert index_to_monomial(reindex_base(k, delta, Delta, n), 1 << Delta, n) == e
    assert monomial_to_index(e, 1 << delta) == k
    assert digit_sum(k, delta, n) == sum(e)


def test_ex1_materialize_matches_display(ex1):
    op = build_operator(ex1, 2)
    assert op.to_dense(exact=True).tolist() == EX1_MATRIX
    b = op.rhs_dense()
    assert b.tolist() == [0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0]


def test_ex1_queries(ex1):
    op = build_operator(ex1, 2)
    assert op.query_row(0) == [(0, -1), (7, 1)]
    assert op.query_row(5) == [(0, -1), (1, 1)]
    assert op.query_row(1) == []
    assert op.query_col(4) == [(6, 1), (8, 1)]
    assert op.query_col(7) == [(0, 1)]
    assert op.query_col(14) == []    # x1^3 x2^3
    with pytest.raises(IndexError):
        op.query_row(12)
    with pytest.raises(IndexError):
        op.query_col(15)


def test_ex1_matvec(ex1, rng):
    op = build_operator(ex1, 2)
    A = np.array(EX1_MATRIX, dtype=float)
    v, u = rng.normal(size=15), rng.normal(size=12)
    assert np.allclose(op.matvec(v), A @ v)
    assert np.allclose(op.rmatvec(u), A.T @ u)
    assert not op.matvec(np.zeros(15)).any()
    assert np.allclose(op.matvec(op.monomial_vector((1, 1))), op.rhs_dense())
    with pytest.raises(ValueError):
        op.matvec(np.zeros(14))


def test_single_linear_polynomial():
    op = build_operator([x(0) - 1], 1, 1)
    assert op.to_dense(exact=True).tolist() == [[1]]
    assert op.rhs_dense().tolist() == [1]


def test_decomposition_sums_to_matrix(ex1):
    op = build_operator(ex1, 2)
    p = op.params
    total = np.zeros(op.shape)
    for t in op.terms:
        budget = p.D - t.degree
        for k in product(range(p.dbar + 1), repeat=p.n):
            if sum(k) > budget:
                continue
            row = t.poly_index * p.row_block + monomial_to_index(k, p.dbar + 1)
            col = monomial_to_index([a + b for a, b in zip(k, t.alpha)], p.Dbar + 1) - 1
            if col >= 0:
                total[row, col] += float(t.coefficient)
    assert np.array_equal(total, op.to_dense())


def _random_system(rng, n):
    return [random_int_poly(rng, n, max_deg=2) for _ in range(int(rng.integers(1, 4)))]


def test_query_materialize_equivalence(rng):
    for _ in range(100):
        n = int(rng.integers(1, 4))
        F = [f for f in _random_system(rng, n) if f]
        if not F:
            continue
        D = max(f.degree() for f in F) + int(rng.integers(0, 2))
        op = build_operator(F, D, n)
        trip = op.materialize()
        rows, cols = {}, {}
        for i, j, c in trip:
            rows.setdefault(i, []).append((j, c))
            cols.setdefault(j, []).append((i, c))
        T = op.total_sparseness
        for i in range(op.params.M):
            q = op.query_row(i)
            assert q == rows.get(i, [])
            assert len(q) <= T
        for j in range(op.params.N):
            q = op.query_col(j)
            assert q == cols.get(j, [])
            assert len(q) <= T
        assert op.params.M == len(F) * (op.params.dbar + 1) ** n
        assert op.params.N == (op.params.Dbar + 1) ** n - 1


def test_high_degree_columns_are_zero(ex1):
    op = build_operator(ex1, 2)
    degs = op.column_degrees(np.arange(op.params.N))
    r, c, _ = op.triplet_arrays()
    assert degs[c].max() <= 2


def test_monomial_vector_solves_for_boolean_solutions(rng):
    for _ in range(20):
        n = 3
        a = tuple(int(v) for v in rng.integers(0, 2, n))
        F = []
        for f in _random_system(rng, n):
            g = f - f.evaluate(a)
            if g:
                F.append(g)
        if not F:
            continue
        assert all(f.evaluate(a) == 0 for f in F)
        op = build_operator(F, 3, n)
        assert np.allclose(op.matvec(op.monomial_vector(a)), op.rhs_dense())
        assert a in brute_force_boolean_solutions(F, n)


def test_normalization_and_rhs(ex1):
    op = build_operator(ex1, 2, normalize=True)
    assert op.order == [1, 2, 0]
    assert op.rhs() == {0: 1, 4: 1}
    assert build_operator([x(0) * x(1), x(0) * x(0)], 2).rhs() == {}
    op = build_operator([2 * x(0) - 4, x(1) + 3], 1, normalize=True)
    assert op.rhs() == {0: 1, 1: 1}


def test_padding(ex1):
    op = build_operator(ex1, 2, normalize=True)
    pad = pad_assumption2(op)
    assert pad.sigma == 1 and pad.insert_len == 0
    A = op.to_dense()
    y_orig = min_norm_dense(A, op.rhs_dense())
    y_pad = min_norm_dense(pad.to_sparse().toarray(), pad.rhs_dense())
    assert np.allclose(y_orig, y_pad, atol=1e-9)
    assert np.allclose(pad.layout.vector(), pad.rhs_dense())

    F = [x(0) - 1, x(1) - 1, x(2) - 1, x(0) * x(1), x(1) * x(2)]
    op = build_operator(F, 2, 3, normalize=True)
    pad = pad_assumption2(op)
    assert pad.sigma == 2 and pad.insert_len == op.params.row_block
    y_orig = min_norm_dense(op.to_dense(), op.rhs_dense())
    y_pad = min_norm_dense(pad.to_sparse().toarray(), pad.rhs_dense())
    assert np.allclose(y_orig, y_pad, atol=1e-9)
    u = np.arange(pad.shape[0], dtype=float)
    assert np.allclose(pad.rmatvec(u), pad.to_sparse().T @ u)

    with pytest.raises(ValueError):
        pad_assumption2(build_operator(ex1, 2))


def test_matrix_market_export(ex1, tmp_path):
    import scipy.io
    op = build_operator(ex1, 2)
    path = tmp_path / "ex1.mtx"
    write_matrix_market(op, path)
    assert np.array_equal(scipy.io.mmread(str(path)).toarray(), op.to_dense())


def test_text_params(ex1):
    text = build_operator(ex1, 2).params.to_text()
    assert "M = 12" in text and "N = 15" in text and "degrees = 2 1 2" in text
