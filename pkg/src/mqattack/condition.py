"""Extreme singular values and condition numbers of Macaulay operators."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .hhlsim import RCOND
from .macaulay import MacaulayOperator, build_operator

DENSE_MAX_SIDE = 4000
DENSE_MAX_ENTRIES = 6 * 10**7


class ConvergenceError(RuntimeError):
    def __init__(self, msg: str, ritz: np.ndarray):
        super().__init__(f"{msg}; last Ritz values {ritz[:3]} ... {ritz[-3:]}")
        self.ritz = ritz


@dataclass
class SpectrumEstimate:
    sigma_max: float
    sigma_min: float
    method: str
    iterations: int = 0
    rank: int | None = None
    residual_max: float = 0.0
    residual_min: float = 0.0
    converged: bool = True

    @property
    def kappa(self) -> float:
        return self.sigma_max / self.sigma_min

    @property
    def kappa_is_lower_bound(self) -> bool:
        # an unconverged smallest Ritz value over-estimates sigma_min
        return not self.converged


def singular_extremes_dense(A, rcond: float = RCOND) -> SpectrumEstimate:
    """Full SVD; sigma_min is the smallest singular value above rcond * sigma_max."""
    if sp.issparse(A):
        A = A.toarray()
    A = np.asarray(A, dtype=float)
    m, n = A.shape
    if min(m, n) > DENSE_MAX_SIDE or m * n > DENSE_MAX_ENTRIES:
        raise MemoryError(f"dense SVD refused for a {m}x{n} matrix")
    s = np.linalg.svd(A, compute_uv=False)
    if s.size == 0 or s[0] == 0:
        raise ValueError("zero operator has no condition number")
    nz = s[s > rcond * s[0]]
    return SpectrumEstimate(sigma_max=float(s[0]), sigma_min=float(nz[-1]), method="dense",
                            rank=int(nz.size))


def _reorth(w: np.ndarray, Q: np.ndarray, k: int) -> np.ndarray:
    if k == 0:
        return w
    B = Q[:k]
    for _ in range(2):
        w = w - B.T @ (B @ w)
    return w


def _bidiag(alphas: list, betas: list) -> np.ndarray:
    k = len(alphas)
    B = np.diag(alphas)
    if k > 1:
        B[np.arange(k - 1), np.arange(1, k)] = betas[:k - 1]
    return B


def singular_extremes_iterative(op, tol: float = 1e-4, max_iter: int | None = None,
                                seed: int = 0, strict: bool = False,
                                rcond: float = RCOND) -> SpectrumEstimate:
    """Golub-Kahan bidiagonalization started in the row space, fully reorthogonalized.

    The Ritz values of the bidiagonal matrix approximate the nonzero singular
    values; an extreme Ritz value counts as converged once its residual
    beta_{k+1} |p_k| is below tol times the value itself. Convergence is
    tested on a geometric schedule since each test costs an SVD of size k.
    """
    A = op if isinstance(op, spla.LinearOperator) else spla.aslinearoperator(
        op.to_sparse() if isinstance(op, MacaulayOperator) else op)
    m, n = A.shape
    rng = np.random.default_rng(seed)
    max_iter = min(max_iter or min(m, n) + 1, min(m, n) + 1)
    v = A.rmatvec(rng.standard_normal(m))
    nv = np.linalg.norm(v)
    if nv == 0:
        raise ValueError("zero operator has no condition number")
    # bases grow on demand; max_iter may be far larger than the steps actually taken
    cap = min(max_iter, 64)
    V = np.zeros((cap + 1, n))
    U = np.zeros((cap, m))
    V[0] = v / nv
    alphas: list[float] = []
    betas: list[float] = []
    beta = 0.0
    converged = False
    k = 0
    res_max = res_min = np.inf
    scale = 0.0
    next_check = 3
    while k < max_iter:
        if k == cap:
            cap = min(max_iter, 2 * cap)
            V = np.vstack([V, np.zeros((cap + 1 - len(V), n))])
            U = np.vstack([U, np.zeros((cap - len(U), m))])
        u = A.matvec(V[k]) - (beta * U[k - 1] if k else 0.0)
        u = _reorth(u, U, k)
        alpha = float(np.linalg.norm(u))
        scale = max(scale, alpha, beta)
        if alpha <= rcond * scale:
            # Krylov space exhausted on the column side
            converged = True
            break
        U[k] = u / alpha
        alphas.append(alpha)
        w = A.rmatvec(U[k]) - alpha * V[k]
        w = _reorth(w, V, k + 1)
        beta = float(np.linalg.norm(w))
        betas.append(beta)
        k += 1
        exhausted = beta <= rcond * max(scale, alpha)
        if exhausted or k >= next_check or k == max_iter:
            next_check = max(k + 1, int(k * 1.15))
            P, theta, _ = np.linalg.svd(_bidiag(alphas, betas))
            scale = max(scale, theta[0])
            last = np.abs(P[-1, :]) * beta
            imin = int(np.flatnonzero(theta > rcond * theta[0])[-1])
            res_max, res_min = float(last[0]), float(last[imin])
            if exhausted or (res_max <= tol * theta[0] and res_min <= tol * theta[imin]):
                converged = True
                break
        V[k] = w / beta
    if k == 0:
        raise ValueError("zero operator has no condition number")
    theta = np.linalg.svd(_bidiag(alphas, betas), compute_uv=False)
    nz = theta[theta > rcond * theta[0]]
    if not converged and strict:
        raise ConvergenceError(f"no convergence after {k} iterations", theta)
    return SpectrumEstimate(sigma_max=float(theta[0]), sigma_min=float(nz[-1]), method="iterative",
                            iterations=k, rank=None, residual_max=res_max, residual_min=res_min,
                            converged=converged)


def spectrum(A, method: str = "auto", **kw) -> SpectrumEstimate:
    if method == "auto":
        m, n = A.shape
        method = "dense" if min(m, n) <= DENSE_MAX_SIDE and m * n <= DENSE_MAX_ENTRIES else "iterative"
    if method == "dense":
        return singular_extremes_dense(A)
    return singular_extremes_iterative(A, **kw)


def _raw_rows(op: MacaulayOperator, A: sp.csr_matrix, rows: np.ndarray) -> sp.csr_matrix:
    """Undo the per-polynomial row scaling of a normalized operator."""
    block = rows >> (op.params.delta * op.params.n)
    inv = np.array([1.0 / float(s) for s in op.scales])[block]
    return sp.diags(inv) @ A


def operator_kappas(op: MacaulayOperator, method: str = "auto") -> tuple[float, float]:
    """(scaled, raw) condition numbers of a (normalized) Macaulay operator."""
    cs = op.compact("nonzero")
    s = spectrum(cs.A, method)
    r = spectrum(_raw_rows(op, cs.A, cs.rows), method)
    return s.kappa, r.kappa


@dataclass
class RoundCondition:
    round: int
    M: int
    N: int
    T: int
    scaled: SpectrumEstimate
    raw: SpectrumEstimate


@dataclass
class SystemCondition:
    rounds: list = field(default_factory=list)
    report: object = None

    @property
    def kappa(self) -> float:
        return max(r.scaled.kappa for r in self.rounds)

    @property
    def kappa_raw(self) -> float:
        return max(r.raw.kappa for r in self.rounds)

    def to_csv(self, instance: str = "system", raw: bool = False) -> str:
        lines = ["instance,round,M,N,T,sigma_max,sigma_min,kappa,method,iterations"]
        for rc in self.rounds:
            e = rc.raw if raw else rc.scaled
            lines.append(f"{instance},{rc.round},{rc.M},{rc.N},{rc.T},{e.sigma_max:.6f},"
                         f"{e.sigma_min:.6f},{e.kappa:.6f},{e.method},{e.iterations}")
        return "\n".join(lines) + "\n"


def system_condition_number(F, cfg=None, method: str = "auto") -> SystemCondition:
    """Run the exact-mode solver on an F2 system and measure every round's operator."""
    from .boolpoly import BooleanSystem
    from .lift import lift_system
    from .solver import SolveConfig, boolean_solve

    cfg = cfg or SolveConfig()
    if cfg.mode != "exact":
        raise ValueError("condition numbers are measured along exact-mode runs")
    out = SystemCondition()

    def hook(tr, op):
        cs = op.compact("nonzero")
        s = spectrum(cs.A, method)
        r = spectrum(_raw_rows(op, cs.A, cs.rows), method)
        out.rounds.append(RoundCondition(round=len(out.rounds) + 1, M=op.params.M, N=op.params.N,
                                         T=op.total_sparseness, scaled=s, raw=r))

    if isinstance(F, BooleanSystem):
        lifted = lift_system(F, 3)
        polys, names = lifted.system, lifted.variables
    else:
        polys, names = F
    rep = boolean_solve(polys, names, cfg, on_round=hook)
    if not out.rounds:
        # shortcut answers never build an operator; measure the first-round one anyway
        from .lift import field_equations
        n = len(names)
        F2 = [f.squarefree() for f in polys if f.squarefree()] + field_equations(range(n))
        D = cfg.D_override if cfg.D_override is not None else 3 * n
        D = max(D, max(f.degree() for f in F2))
        hook(None, build_operator(F2, D, n, normalize=True))
    out.report = rep
    return out
