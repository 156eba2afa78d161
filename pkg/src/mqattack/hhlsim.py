"""Classical stand-in for the quantum linear-system step.

The quantum routine outputs a state proportional to the minimum-norm
least-squares solution of the Macaulay system; here that vector is computed
directly (SVD or LSQR), normalized, optionally perturbed, and sampled.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .lift import IntPolynomial
from .macaulay import CompactSystem, MacaulayOperator, build_operator

RCOND = 1e-10
DENSE_MAX_COLS = 1000
DENSE_MAX_ENTRIES = 2 * 10**6


class MinNormSolveError(RuntimeError):
    def __init__(self, msg: str, residual: float):
        super().__init__(f"{msg} (residual {residual:.3e})")
        self.residual = residual


class TrivialZeroSolutionError(ValueError):
    pass


def min_norm_dense(A, b: np.ndarray, rcond: float = RCOND) -> np.ndarray:
    """x = sum over nonzero singular triples of v_j <u_j, b> / s_j."""
    A = A.toarray() if sp.issparse(A) else np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    if A.shape[0] != b.shape[0]:
        raise ValueError("dimension mismatch between operator and right-hand side")
    if A.size == 0:
        return np.zeros(A.shape[1])
    U, s, Vt = np.linalg.svd(A, full_matrices=False)
    if s.size == 0 or s[0] == 0:
        return np.zeros(A.shape[1])
    keep = s > rcond * s[0]
    return Vt[keep].T @ ((U[:, keep].T @ b) / s[keep])


def min_norm_iterative(A, b: np.ndarray, tol: float = 1e-12, maxiter: int | None = None) -> np.ndarray:
    """LSQR from x0 = 0; its iterates stay in the row space, so the limit is minimum-norm."""
    b = np.asarray(b, dtype=float)
    if not isinstance(A, spla.LinearOperator) and not sp.issparse(A):
        if hasattr(A, "matvec") and hasattr(A, "rmatvec"):
            A = spla.LinearOperator(A.shape, matvec=A.matvec, rmatvec=A.rmatvec, dtype=float)
    m, n = A.shape
    if m != b.shape[0]:
        raise ValueError("dimension mismatch between operator and right-hand side")
    maxiter = maxiter or 20 * (m + n)
    res = spla.lsqr(A, b, atol=tol, btol=tol, conlim=1e16, iter_lim=maxiter)
    x, istop, itn = res[0], res[1], res[2]
    if istop in (3, 7):
        r = b - (A @ x)
        raise MinNormSolveError(f"lsqr stopped with flag {istop} after {itn} iterations",
                                float(np.linalg.norm(r)))
    return x


def min_norm_solve(op, b: np.ndarray, tol: float = 1e-12, method: str = "auto") -> np.ndarray:
    """Minimum-norm least-squares solution of op x = b.

    op may be a dense array, a scipy sparse matrix, a LinearOperator, or a
    Macaulay/padded operator (in which case the full-length vector is returned).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if isinstance(op, MacaulayOperator):
        cs = op.compact("degree")
        full_b = np.asarray(b, dtype=float)
        if full_b.shape != (op.params.M,):
            raise ValueError("dimension mismatch between operator and right-hand side")
        # entries of b on zero rows only add a constant to the residual
        return cs.expand(min_norm_solve(cs.A, full_b[cs.rows], tol, method))
    if hasattr(op, "to_sparse") and not sp.issparse(op):
        op = op.to_sparse()
    shape = op.shape
    if method == "auto":
        method = "dense" if shape[1] <= DENSE_MAX_COLS and shape[0] * shape[1] <= DENSE_MAX_ENTRIES \
            and not isinstance(op, spla.LinearOperator) else "iterative"
    if method == "dense":
        return min_norm_dense(op, b)
    if method == "iterative":
        return min_norm_iterative(op, b, tol=tol)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class PseudoSolutionState:
    """Normalized amplitudes on a set of Macaulay columns.

    Columns outside `support` carry zero amplitude, except for the optional
    `tail` mass that perturbation may spread over them.
    """
    amplitudes: np.ndarray
    support: np.ndarray
    N: int
    norm: float
    n: int
    D: int
    Dbar: int
    Delta: int
    tail: float = 0.0
    residual: float = 0.0

    def exponents(self, col: int) -> tuple[int, ...]:
        idx = int(col) + 1
        return tuple((idx >> (self.Delta * (self.n - 1 - j))) & self.Dbar for j in range(self.n))

    def degree(self, col: int) -> int:
        return sum(self.exponents(col))

    def dense(self) -> np.ndarray:
        if self.tail:
            raise ValueError("perturbed tail mass has no dense representation")
        v = np.zeros(self.N)
        v[self.support] = self.amplitudes
        return v

    def to_csv(self, names: Sequence[str] | None = None) -> str:
        lines = ["index,monomial,amplitude"]
        for c, a in zip(self.support, self.amplitudes):
            if a == 0:
                continue
            e = self.exponents(int(c))
            mono = "*".join((names[i] if names else f"x{i + 1}") + (f"^{x}" if x > 1 else "")
                            for i, x in enumerate(e) if x) or "1"
            lines.append(f"{int(c)},{mono},{a:.6f}")
        return "\n".join(lines) + "\n"


def pseudo_solution(F: Sequence[IntPolynomial], D: int, n: int | None = None,
                    method: str = "auto", tol: float = 1e-12,
                    columns: str = "degree") -> PseudoSolutionState:
    """Normalized minimum-norm solution of the degree-D Macaulay system of F."""
    op = build_operator(F, D, n, normalize=True)
    if not op.rhs():
        raise TrivialZeroSolutionError(
            "trivial zero solution: every constant term is zero, so the all-zero point "
            "solves the system and the solver should have stopped before this call")
    return state_from_operator(op, method=method, tol=tol, columns=columns)


def state_from_operator(op: MacaulayOperator, method: str = "auto", tol: float = 1e-12,
                        columns: str = "degree", compact: CompactSystem | None = None
                        ) -> PseudoSolutionState:
    cs = compact if compact is not None else op.compact(columns)
    x = min_norm_solve(cs.A, cs.b, tol=tol, method=method)
    res = float(np.linalg.norm(cs.A @ x - cs.b))
    nrm = float(np.linalg.norm(x))
    if nrm == 0:
        raise TrivialZeroSolutionError("minimum-norm solution is zero")
    p = op.params
    return PseudoSolutionState(amplitudes=x / nrm, support=cs.cols.copy(), N=p.N, norm=nrm,
                               n=p.n, D=p.D, Dbar=p.Dbar, Delta=p.Delta, residual=res)


def perturb(state: PseudoSolutionState, eps: float, rng: np.random.Generator) -> PseudoSolutionState:
    """Unit vector at Euclidean distance exactly eps, in a random direction.

    The direction is uniform on the sphere orthogonal to the state, over all N
    columns. Its components outside the stored support are not enumerated;
    only their total squared mass is kept (as `tail`), drawn from the
    chi-square law of a Gaussian direction.
    """
    if not 0 <= eps < 1:
        raise ValueError("eps must lie in [0, 1)")
    if eps == 0:
        return state
    if state.tail:
        raise ValueError("state is already perturbed")
    a = state.amplitudes
    k = len(a)
    outside = state.N - k
    g_in = rng.standard_normal(k)
    g_out2 = float(rng.chisquare(outside)) if outside > 0 else 0.0
    # remove the component along the state (the state lives on the support)
    g_in = g_in - (g_in @ a) * a
    total = np.sqrt(g_in @ g_in + g_out2)
    if total == 0:
        return state
    d_in = g_in / total
    d_out2 = g_out2 / total**2
    # chord length eps between unit vectors: angle theta with 2 sin(theta/2) = eps
    theta = 2 * np.arcsin(eps / 2)
    new_in = np.cos(theta) * a + np.sin(theta) * d_in
    new_tail = np.sin(theta) ** 2 * d_out2
    return replace(state, amplitudes=new_in, tail=float(new_tail))


def sample_measurement(state: PseudoSolutionState, rng: np.random.Generator) -> int:
    """Column index drawn with probability amplitude^2."""
    p = state.amplitudes**2
    inside = float(p.sum())
    total = inside + state.tail
    u = rng.random() * total
    if u < inside:
        cdf = np.cumsum(p)
        j = int(np.searchsorted(cdf, u, side="right"))
        return int(state.support[min(j, len(cdf) - 1)])
    # tail: a uniformly random column outside the support
    support = set(int(c) for c in state.support)
    while True:
        c = int(rng.integers(0, state.N))
        if c not in support:
            return c
