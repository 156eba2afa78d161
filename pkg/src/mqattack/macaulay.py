"""Implicit Macaulay matrices for integer polynomial systems.

Rows are indexed by (polynomial l, multiplier monomial k) with k written in
base dbar+1, columns by monomials written in base Dbar+1 (the constant
monomial goes to the right-hand side). Both bases are powers of two, so a row
index splits into (l, k) with a shift and a base change is bit insertion.

Monomial index convention: the exponent of x_1 is the most significant digit,
so index 1 is x_n and index B is x_{n-1}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
import scipy.sparse as sp

from .lift import IntPolynomial

MATERIALIZE_MAX_ROWS = 10**8


def _pow2_at_least(x: int) -> int:
    """Smallest e with 2^e >= x (x >= 1)."""
    return 0 if x <= 1 else (x - 1).bit_length()


@dataclass(frozen=True)
class MacaulayParams:
    n: int
    r: int
    D: int
    dbar: int
    delta: int
    Dbar: int
    Delta: int
    rho: int
    degrees: tuple

    @property
    def row_block(self) -> int:
        return 1 << (self.delta * self.n)

    @property
    def M(self) -> int:
        return self.r * self.row_block

    @property
    def N(self) -> int:
        return (1 << (self.Delta * self.n)) - 1

    def to_text(self) -> str:
        keys = ["n", "r", "D", "dbar", "delta", "Dbar", "Delta", "rho", "M", "N"]
        lines = [f"{k} = {getattr(self, k)}" for k in keys]
        lines.append("degrees = " + " ".join(str(d) for d in self.degrees))
        return "\n".join(lines) + "\n"


def compute_params(F: Sequence[IntPolynomial], D: int, n: int | None = None) -> MacaulayParams:
    if not F:
        raise ValueError("empty polynomial list")
    if any(not f for f in F):
        raise ValueError("zero polynomial in Macaulay input")
    if n is None:
        n = max(f.max_variable() for f in F) + 1
    degs = tuple(f.degree() for f in F)
    if D < max(degs):
        raise ValueError(f"D={D} is below the maximal degree {max(degs)}")
    delta = _pow2_at_least(D - min(degs) + 1)
    Delta = _pow2_at_least(D + 1)
    rho = sum(1 for f in F if f.constant_term != 0)
    return MacaulayParams(n=n, r=len(F), D=D, dbar=(1 << delta) - 1, delta=delta,
                          Dbar=(1 << Delta) - 1, Delta=Delta, rho=rho, degrees=degs)


def index_to_monomial(k: int, base: int, n: int) -> tuple[int, ...]:
    """Digits of k in the given base; the first entry is the exponent of x_1."""
    if not 0 <= k < base**n:
        raise ValueError(f"index {k} out of range for base {base}, n={n}")
    e = [0] * n
    for j in range(n - 1, -1, -1):
        k, e[j] = divmod(k, base)
    return tuple(e)


def monomial_to_index(e: Sequence[int], base: int) -> int:
    k = 0
    for x in e:
        if not 0 <= x < base:
            raise ValueError("exponent does not fit the base")
        k = k * base + x
    return k


def reindex_base(k: int, delta: int, Delta: int, n: int) -> int:
    """Rewrite an index from base 2^delta to base 2^Delta (bit insertion)."""
    if Delta < delta:
        raise ValueError("target base must not be smaller")
    if not 0 <= k < 1 << (delta * n):
        raise ValueError("index out of range")
    mask = (1 << delta) - 1
    out = 0
    for i in range(n):
        out |= ((k >> (delta * i)) & mask) << (Delta * i)
    return out


def digit_sum(k: int, delta: int, n: int) -> int:
    mask = (1 << delta) - 1
    return sum((k >> (delta * i)) & mask for i in range(n)) if delta else 0


def exponents_upto(n: int, e: int) -> np.ndarray:
    """All exponent vectors of total degree <= e, shape (count, n)."""
    if e < 0:
        return np.zeros((0, n), dtype=np.int64)
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    rows = []
    for first in range(e + 1):
        rest = exponents_upto(n - 1, e - first)
        rows.append(np.column_stack([np.full(len(rest), first, dtype=np.int64), rest]))
    return np.vstack(rows)


def _index_array(exps: np.ndarray, base: int) -> np.ndarray:
    idx = np.zeros(len(exps), dtype=np.int64)
    for j in range(exps.shape[1]):
        idx = idx * base + exps[:, j]
    return idx


@dataclass(frozen=True)
class OneSparseTerm:
    poly_index: int
    coefficient: object  # int or Fraction, never zero
    alpha: tuple
    degree: int


def normalize_system(F: Sequence[IntPolynomial]):
    """Move nonzero-constant polynomials first and scale their constants to -1.

    Returns (polys, order, scales): polys[j] = scales[j] * F[order[j]].
    """
    nz = [i for i, f in enumerate(F) if f.constant_term != 0]
    z = [i for i, f in enumerate(F) if f.constant_term == 0]
    order = nz + z
    polys, scales = [], []
    for i in order:
        c = F[i].constant_term
        s = Fraction(-1, c) if c else Fraction(1)
        scales.append(s)
        polys.append(F[i])
    return polys, order, scales


class MacaulayOperator:
    """The degree-D Macaulay matrix held as its list of one-sparse terms."""

    def __init__(self, F: Sequence[IntPolynomial], D: int, n: int | None = None,
                 scales: Sequence | None = None, order: Sequence[int] | None = None):
        self.polys = list(F)
        self.params = compute_params(self.polys, D, n)
        p = self.params
        self.scales = [Fraction(1)] * p.r if scales is None else [Fraction(s) for s in scales]
        self.order = list(range(p.r)) if order is None else list(order)
        self.terms: list[OneSparseTerm] = []
        self._poly_terms: list[list[tuple[tuple, object, int]]] = []
        for i, f in enumerate(self.polys):
            dense = f.dense_terms(p.n)
            lst = []
            for alpha in sorted(dense):
                c = dense[alpha] * self.scales[i]
                c = int(c) if c.denominator == 1 else c
                self.terms.append(OneSparseTerm(i, c, alpha, p.degrees[i]))
                lst.append((alpha, c, monomial_to_index(alpha, p.Dbar + 1)))
            self._poly_terms.append(lst)
        self._cache: dict = {}

    @property
    def shape(self) -> tuple[int, int]:
        return (self.params.M, self.params.N)

    @property
    def total_sparseness(self) -> int:
        return len(self.terms)

    # index arithmetic
    def row_split(self, i0: int) -> tuple[int, int]:
        p = self.params
        if not 0 <= i0 < p.M:
            raise IndexError(f"row {i0} out of range [0, {p.M})")
        return i0 >> (p.delta * p.n), i0 & (p.row_block - 1)

    def query_row(self, i0: int) -> list[tuple[int, object]]:
        p = self.params
        l, k = self.row_split(i0)
        if digit_sum(k, p.delta, p.n) > p.D - p.degrees[l]:
            return []
        kh = reindex_base(k, p.delta, p.Delta, p.n)
        out = []
        for _, c, aidx in self._poly_terms[l]:
            col = kh + aidx - 1
            if col >= 0:
                out.append((col, c))
        return sorted(out)

    def query_col(self, j0: int) -> list[tuple[int, object]]:
        p = self.params
        if not 0 <= j0 < p.N:
            raise IndexError(f"column {j0} out of range [0, {p.N})")
        e = index_to_monomial(j0 + 1, p.Dbar + 1, p.n)
        out = []
        for i, lst in enumerate(self._poly_terms):
            budget = p.D - p.degrees[i]
            for alpha, c, _ in lst:
                k = [a - b for a, b in zip(e, alpha)]
                if min(k) < 0 or sum(k) > budget:
                    continue
                out.append((i * p.row_block + monomial_to_index(k, p.dbar + 1), c))
        return sorted(out)

    def rhs(self) -> dict[int, object]:
        """Nonzero entries of b: -f_i(0) at the first row of block i."""
        p = self.params
        out = {}
        for i, f in enumerate(self.polys):
            c = -f.constant_term * self.scales[i]
            if c:
                out[i * p.row_block] = int(c) if c.denominator == 1 else c
        return out

    def rhs_dense(self) -> np.ndarray:
        b = np.zeros(self.params.M)
        for i, v in self.rhs().items():
            b[i] = float(v)
        return b

    # row blocks
    def _block(self, i: int):
        """Cached (row offsets, column bases) for polynomial i's nonzero rows."""
        key = ("block", i)
        if key not in self._cache:
            p = self.params
            ks = exponents_upto(p.n, p.D - p.degrees[i])
            self._cache[key] = (_index_array(ks, p.dbar + 1), _index_array(ks, p.Dbar + 1), ks)
        return self._cache[key]

    def _check_int64(self):
        p = self.params
        if p.M >= 2**62 or p.N >= 2**62:
            raise OverflowError("operator too large for 64-bit indices")

    def triplet_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Float (row, col, value) arrays of all nonzero entries."""
        self._check_int64()
        p = self.params
        rows, cols, vals = [], [], []
        for i, lst in enumerate(self._poly_terms):
            kr, kc, _ = self._block(i)
            base = i * p.row_block
            for _, c, aidx in lst:
                cc = kc + (aidx - 1)
                keep = cc >= 0
                rows.append(base + kr[keep])
                cols.append(cc[keep])
                vals.append(np.full(int(keep.sum()), float(c)))
        if not rows:
            e = np.zeros(0, dtype=np.int64)
            return e, e, np.zeros(0)
        return np.concatenate(rows), np.concatenate(cols), np.concatenate(vals)

    def materialize(self) -> list[tuple[int, int, object]]:
        """Exact (row, col, coefficient) triplets sorted by row then column."""
        p = self.params
        if p.M > MATERIALIZE_MAX_ROWS:
            raise MemoryError(f"refusing to materialize {p.M} virtual rows")
        out = []
        for i, lst in enumerate(self._poly_terms):
            _, _, ks = self._block(i)
            for k in ks:
                krow = monomial_to_index(k, p.dbar + 1)
                kcol = monomial_to_index(k, p.Dbar + 1)
                for _, c, aidx in lst:
                    col = kcol + aidx - 1
                    if col >= 0:
                        out.append((i * p.row_block + krow, col, c))
        out.sort(key=lambda t: (t[0], t[1]))
        return out

    def to_sparse(self) -> sp.csr_matrix:
        r, c, v = self.triplet_arrays()
        return sp.csr_matrix((v, (r, c)), shape=self.shape)

    def to_dense(self, exact: bool = False) -> np.ndarray:
        p = self.params
        if p.M * p.N > 5 * 10**7:
            raise MemoryError("dense materialization too large")
        A = np.zeros((p.M, p.N), dtype=object if exact else float)
        for i, j, c in self.materialize():
            A[i, j] = c if exact else float(c)
        if exact:
            A[A == 0] = 0
        return A

    def matvec(self, v: np.ndarray) -> np.ndarray:
        p = self.params
        v = np.asarray(v, dtype=float)
        if v.shape != (p.N,):
            raise ValueError(f"expected vector of length {p.N}, got {v.shape}")
        self._check_int64()
        y = np.zeros(p.M)
        for i, lst in enumerate(self._poly_terms):
            kr, kc, _ = self._block(i)
            rows = i * p.row_block + kr
            for _, c, aidx in lst:
                cc = kc + (aidx - 1)
                keep = cc >= 0
                y[rows[keep]] += float(c) * v[cc[keep]]
        return y

    def rmatvec(self, u: np.ndarray) -> np.ndarray:
        p = self.params
        u = np.asarray(u, dtype=float)
        if u.shape != (p.M,):
            raise ValueError(f"expected vector of length {p.M}, got {u.shape}")
        self._check_int64()
        x = np.zeros(p.N)
        for i, lst in enumerate(self._poly_terms):
            kr, kc, _ = self._block(i)
            ui = u[i * p.row_block + kr]
            for _, c, aidx in lst:
                cc = kc + (aidx - 1)
                keep = cc >= 0
                np.add.at(x, cc[keep], float(c) * ui[keep])
        return x

    def column_degrees(self, cols: np.ndarray) -> np.ndarray:
        """Total degree of the monomial of each global column index."""
        p = self.params
        idx = np.asarray(cols, dtype=np.int64) + 1
        deg = np.zeros(len(idx), dtype=np.int64)
        mask = p.Dbar
        for j in range(p.n):
            deg += (idx >> (p.Delta * j)) & mask
        return deg

    def column_exponents(self, cols: np.ndarray) -> np.ndarray:
        p = self.params
        idx = np.asarray(cols, dtype=np.int64) + 1
        out = np.zeros((len(idx), p.n), dtype=np.int64)
        for j in range(p.n):
            out[:, p.n - 1 - j] = (idx >> (p.Delta * j)) & p.Dbar
        return out

    def compact(self, columns: str = "degree") -> "CompactSystem":
        """Drop zero rows and select columns.

        columns="degree": monomials of degree 1..D (all nonzero columns lie here);
        columns="nonzero": only columns with an entry; columns="all": every column.
        """
        p = self.params
        r, c, v = self.triplet_arrays()
        b_full = self.rhs()
        rows = np.unique(np.concatenate([r, np.array(sorted(b_full), dtype=np.int64)]))
        if columns == "all":
            if p.N > 10**7:
                raise MemoryError("too many columns")
            cols = np.arange(p.N, dtype=np.int64)
        elif columns == "degree":
            ex = exponents_upto(p.n, p.D)
            cols = np.sort(_index_array(ex, p.Dbar + 1)) - 1
            cols = cols[cols >= 0]
        elif columns == "nonzero":
            cols = np.unique(c)
        else:
            raise ValueError(columns)
        ri = np.searchsorted(rows, r)
        ci = np.searchsorted(cols, c)
        A = sp.csr_matrix((v, (ri, ci)), shape=(len(rows), len(cols)))
        b = np.zeros(len(rows))
        for i, val in b_full.items():
            b[np.searchsorted(rows, i)] = float(val)
        return CompactSystem(A=A, b=b, rows=rows, cols=cols, N=p.N, M=p.M)

    def monomial_vector(self, point: Sequence[int]) -> np.ndarray:
        """m_D(a): values of all column monomials at a, zero above degree D."""
        p = self.params
        ex = exponents_upto(p.n, p.D)
        idx = _index_array(ex, p.Dbar + 1) - 1
        a = np.asarray(point, dtype=float)
        vals = np.prod(a[None, :] ** ex, axis=1)
        v = np.zeros(p.N)
        keep = idx >= 0
        v[idx[keep]] = vals[keep]
        return v


@dataclass
class CompactSystem:
    """The Macaulay system restricted to selected rows and columns."""
    A: sp.csr_matrix
    b: np.ndarray
    rows: np.ndarray
    cols: np.ndarray
    N: int
    M: int

    def expand(self, x: np.ndarray) -> np.ndarray:
        out = np.zeros(self.N)
        out[self.cols] = x
        return out


def build_operator(F: Sequence[IntPolynomial], D: int, n: int | None = None,
                   normalize: bool = False) -> MacaulayOperator:
    """Macaulay operator of F at degree D.

    With normalize=True the polynomials with nonzero constant are moved first
    and scaled so the constant is -1, making b a 0/1 vector.
    """
    if not normalize:
        return MacaulayOperator(F, D, n)
    polys, order, scales = normalize_system(F)
    return MacaulayOperator(polys, D, n, scales=scales, order=order)


def write_matrix_market(op: MacaulayOperator, path) -> None:
    import scipy.io
    scipy.io.mmwrite(str(path), op.to_sparse().tocoo(), field="real")


@dataclass(frozen=True)
class HadamardLayout:
    """|c> = |0>^(eta-sigma-v) (x) H^sigma |0> (x) |0>^v."""
    eta: int
    sigma: int
    v: int

    def vector(self) -> np.ndarray:
        zero = np.array([1.0])
        high = np.zeros(1 << (self.eta - self.sigma - self.v))
        high[0] = 1.0
        mid = np.full(1 << self.sigma, 2.0 ** (-self.sigma / 2))
        low = np.zeros(1 << self.v)
        low[0] = 1.0
        return np.kron(np.kron(np.kron(zero, high), mid), low)


@dataclass
class PaddedSystem:
    """B/2^(sigma/2) with w-blocks inserted and rows padded to 2^eta."""
    base: MacaulayOperator
    rho: int
    sigma: int
    v: int
    eta: int
    insert_at: int
    insert_len: int
    layout: HadamardLayout = field(repr=False)

    @property
    def shape(self) -> tuple[int, int]:
        return (1 << self.eta, self.base.params.N)

    @property
    def scale(self) -> float:
        return 2.0 ** (-self.sigma / 2)

    def map_row(self, i: int) -> int:
        return i if i < self.insert_at else i + self.insert_len

    def map_rows(self, rows: np.ndarray) -> np.ndarray:
        rows = np.asarray(rows, dtype=np.int64)
        return np.where(rows < self.insert_at, rows, rows + self.insert_len)

    def rhs(self) -> dict[int, float]:
        return {k << self.v: self.scale for k in range(1 << self.sigma)}

    def rhs_dense(self) -> np.ndarray:
        c = np.zeros(1 << self.eta)
        for i, val in self.rhs().items():
            c[i] = val
        return c

    def matvec(self, x: np.ndarray) -> np.ndarray:
        y = np.zeros(1 << self.eta)
        y[self.map_rows(np.arange(self.base.params.M))] = self.base.matvec(x) * self.scale
        return y

    def rmatvec(self, u: np.ndarray) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        back = u[self.map_rows(np.arange(self.base.params.M))]
        return self.base.rmatvec(back) * self.scale

    def triplet_arrays(self):
        r, c, v = self.base.triplet_arrays()
        return self.map_rows(r), c, v * self.scale

    def to_sparse(self) -> sp.csr_matrix:
        r, c, v = self.triplet_arrays()
        return sp.csr_matrix((v, (r, c)), shape=self.shape)


def pad_assumption2(op: MacaulayOperator) -> PaddedSystem:
    """Embed a normalized Macaulay system into one whose RHS is a Hadamard state."""
    p = op.params
    rho = p.rho
    if rho == 0:
        raise ValueError("right-hand side is zero; nothing to pad")
    b = op.rhs()
    want = {k * p.row_block: 1 for k in range(rho)}
    if b != want:
        raise ValueError("RHS violates Assumption 2: expected ones at the first rho block starts")
    sigma = _pow2_at_least(rho)
    v = p.delta * p.n
    extra = (1 << sigma) - rho
    eta = _pow2_at_least(p.r + extra) + v
    return PaddedSystem(base=op, rho=rho, sigma=sigma, v=v, eta=eta,
                        insert_at=rho * p.row_block, insert_len=extra * p.row_block,
                        layout=HadamardLayout(eta=eta, sigma=sigma, v=v))


def dump_dense(op: MacaulayOperator) -> str:
    """Text table of the materialized matrix and b (small operators only)."""
    A = op.to_dense(exact=True)
    b = op.rhs()
    lines = []
    for i in range(A.shape[0]):
        row = " ".join(f"{str(x):>3}" for x in A[i])
        lines.append(f"{row} | {b.get(i, 0)}")
    return "\n".join(lines) + "\n"
