"""3-SAT, subset sum and graph isomorphism as equation systems."""
from __future__ import annotations

from typing import Sequence

import numpy as np

from ..boolpoly import BooleanPolynomial, BooleanSystem, monomial
from ..lift import IntPolynomial, IntSystem, field_equations


def gen_3sat(clauses: Sequence[Sequence[int]], n: int) -> BooleanSystem:
    """CNF with signed literals (k for x_k, -k for not x_k, 1-based).

    Variables are x1..xn followed by their complements xbar1..xbarn. Each
    clause becomes the single monomial that is 1 exactly when all three
    literals are false; each k adds x_k + xbar_k + 1.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    polys = []
    for c in clauses:
        c = tuple(c)
        if len(c) != 3:
            raise ValueError(f"clause {c} does not have three literals")
        idx = []
        for lit in c:
            if not isinstance(lit, (int, np.integer)) or lit == 0 or abs(lit) > n:
                raise ValueError(f"bad literal {lit!r} in clause {c}")
            k = abs(int(lit)) - 1
            # the literal is false when x_k = 0 (positive) or x_k = 1 (negative)
            idx.append(n + k if lit > 0 else k)
        polys.append(BooleanPolynomial.from_monomials([monomial(*idx)]))
    for k in range(n):
        polys.append(BooleanPolynomial.from_monomials([monomial(k), monomial(n + k), 0]))
    names = [f"x{k + 1}" for k in range(n)] + [f"xbar{k + 1}" for k in range(n)]
    return BooleanSystem(tuple(names), tuple(polys))


def cnf_satisfied(clauses: Sequence[Sequence[int]], a: Sequence[int]) -> bool:
    return all(any((a[abs(l) - 1] == 1) == (l > 0) for l in c) for c in clauses)


def random_3sat(n: int, m: int, rng: np.random.Generator) -> list[tuple[int, int, int]]:
    out = []
    for _ in range(m):
        vs = rng.choice(n, size=3, replace=n < 3) + 1
        signs = rng.choice([-1, 1], size=3)
        out.append(tuple(int(v * s) for v, s in zip(vs, signs)))
    return out


def gen_subset_sum(A, b) -> IntSystem:
    """Rows sum_j A_ij x_j - b_i, followed by x_j^2 - x_j."""
    A = np.atleast_2d(np.asarray(A, dtype=object))
    b = np.atleast_1d(np.asarray(b, dtype=object))
    r, n = A.shape
    if b.shape != (r,):
        raise ValueError("b must have one entry per row of A")
    polys = []
    for i in range(r):
        terms = [(((j, 1),), int(A[i, j])) for j in range(n)] + [((), -int(b[i]))]
        polys.append(IntPolynomial(terms))
    polys += field_equations(range(n))
    return IntSystem([f"x{j + 1}" for j in range(n)], polys)


def _check_adjacency(M, label: str) -> np.ndarray:
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"{label} is not a square matrix")
    if not np.isin(M, (0, 1)).all():
        raise ValueError(f"{label} is not a 0/1 matrix")
    if not (M == M.T).all():
        raise ValueError(f"{label} is not symmetric")
    return M.astype(int)


def gen_graph_iso(A, B) -> IntSystem:
    """Permutation matrices P with AP = PB; variable x_ij is P[i, j]."""
    A = _check_adjacency(A, "A")
    B = _check_adjacency(B, "B")
    if A.shape != B.shape:
        raise ValueError("A and B have different sizes")
    n = A.shape[0]

    def var(i, j):
        return i * n + j

    polys = []
    for i in range(n):
        for k in range(n):
            # (AP)_ik - (PB)_ik
            terms = [(((var(j, k), 1),), int(A[i, j])) for j in range(n)]
            terms += [(((var(i, j), 1),), -int(B[j, k])) for j in range(n)]
            polys.append(IntPolynomial(terms))
    for i in range(n):
        polys.append(IntPolynomial([(((var(i, j), 1),), 1) for j in range(n)] + [((), -1)]))
    for j in range(n):
        polys.append(IntPolynomial([(((var(i, j), 1),), 1) for i in range(n)] + [((), -1)]))
    polys += field_equations(range(n * n))
    return IntSystem([f"p{i + 1}_{j + 1}" for i in range(n) for j in range(n)], polys)


def graph_iso_nominal_T(n: int) -> int:
    """Term count when no coefficient of AP - PB cancels or vanishes."""
    return 2 * n**3 + 4 * n**2 + 2 * n


def permutation_matrix(point: Sequence[int], n: int) -> np.ndarray:
    return np.asarray(point, dtype=int).reshape(n, n)
