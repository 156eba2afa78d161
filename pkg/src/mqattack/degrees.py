"""Exact rational Groebner bases and (complete) solving degrees.

Polynomials are dicts from dense exponent tuples to Fractions. Everything is
exact; the instances are tiny by construction (guards below).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .lift import IntPolynomial
from .macaulay import exponents_upto

MAX_BASIS = 400
MAX_PAIRS = 20000
MAX_MACAULAY_ROWS = 200_000


def drl_key(e: Sequence[int]) -> tuple:
    """Ascending sort by this key is ascending DRL order (x_1 > ... > x_n)."""
    return (sum(e), tuple(-x for x in reversed(e)))


def drl_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """-1, 0, 1 as a <, =, > b in DRL."""
    if len(a) != len(b):
        raise ValueError("exponent vectors of different length")
    ka, kb = drl_key(a), drl_key(b)
    return (ka > kb) - (ka < kb)


class RatPolynomial:
    __slots__ = ("terms", "n")

    def __init__(self, terms: dict, n: int):
        self.n = n
        self.terms = {tuple(k): Fraction(v) for k, v in terms.items() if v}

    @classmethod
    def from_int(cls, f: IntPolynomial, n: int) -> "RatPolynomial":
        return cls(f.dense_terms(n), n)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def lm(self) -> tuple:
        return max(self.terms, key=drl_key)

    def lc(self) -> Fraction:
        return self.terms[self.lm()]

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def monic(self) -> "RatPolynomial":
        c = self.lc()
        return RatPolynomial({k: v / c for k, v in self.terms.items()}, self.n)

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.n)]
        out = []
        for e in sorted(self.terms, key=drl_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(names[i] + (f"^{x}" if x > 1 else "") for i, x in enumerate(e) if x)
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            out.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(out)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self) -> str:
        return f"RatPolynomial({self.to_str()})"


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _sub_scaled(f: dict, g: dict, c: Fraction, shift: tuple) -> None:
    """f -= c * x^shift * g, in place."""
    for e, v in g.items():
        k = tuple(x + s for x, s in zip(e, shift))
        nv = f.get(k, 0) - c * v
        if nv:
            f[k] = nv
        else:
            f.pop(k, None)


def reduce_full(f: RatPolynomial, G: Sequence[RatPolynomial]) -> RatPolynomial:
    """Remainder of f on division by G (every term reduced)."""
    rem: dict = {}
    p = dict(f.terms)
    lead = [(g.lm(), g.lc(), g.terms) for g in G]
    while p:
        m = max(p, key=drl_key)
        c = p[m]
        for lm, lc, gt in lead:
            if _divides(lm, m):
                _sub_scaled(p, gt, c / lc, tuple(a - b for a, b in zip(m, lm)))
                break
        else:
            rem[m] = c
            del p[m]
    return RatPolynomial(rem, f.n)


def _spoly(f: RatPolynomial, g: RatPolynomial) -> RatPolynomial:
    lf, lg = f.lm(), g.lm()
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    out: dict = {}
    _sub_scaled(out, f.terms, -1 / f.lc(), tuple(a - b for a, b in zip(lcm, lf)))
    _sub_scaled(out, g.terms, 1 / g.lc(), tuple(a - b for a, b in zip(lcm, lg)))
    return RatPolynomial(out, f.n)


def groebner_drl(F: Iterable, n: int | None = None) -> list[RatPolynomial]:
    """Reduced DRL Groebner basis by Buchberger (normal strategy, product criterion)."""
    F = list(F)
    if n is None:
        n = max(f.max_variable() for f in F if isinstance(f, IntPolynomial)) + 1 if F else 0
    G = [RatPolynomial.from_int(f, n) if isinstance(f, IntPolynomial) else f for f in F]
    G = [g.monic() for g in G if g]
    if not G:
        return []
    pairs = {(i, j) for i, j in combinations(range(len(G)), 2)}
    steps = 0
    while pairs:
        steps += 1
        if steps > MAX_PAIRS or len(G) > MAX_BASIS:
            raise MemoryError("Groebner computation exceeded its resource guard")

        def lcm_key(pr):
            a, b = G[pr[0]].lm(), G[pr[1]].lm()
            return drl_key(tuple(max(x, y) for x, y in zip(a, b)))

        pr = min(pairs, key=lcm_key)
        pairs.discard(pr)
        i, j = pr
        a, b = G[i].lm(), G[j].lm()
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue  # coprime leading monomials
        h = reduce_full(_spoly(G[i], G[j]), G)
        if h:
            G.append(h.monic())
            k = len(G) - 1
            pairs |= {(t, k) for t in range(k)}
    # minimize then interreduce
    G = [g for g in G if g]
    minimal: list[RatPolynomial] = []
    for idx, g in enumerate(G):
        lg = g.lm()
        dominated = False
        for jdx, h in enumerate(G):
            if jdx == idx:
                continue
            lh = h.lm()
            if _divides(lh, lg) and (lh != lg or jdx < idx):
                dominated = True
                break
        if not dominated:
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        reduced.append(reduce_full(g, others).monic())
    return sorted(reduced, key=lambda g: drl_key(g.lm()), reverse=True)


class RowEchelon:
    """Incremental reduced row echelon form over Q with DRL-descending columns."""

    def __init__(self, n: int):
        self.n = n
        self.pivots: dict[tuple, dict] = {}

    def _reduce(self, row: dict) -> dict:
        # pivot rows vanish on every other pivot column, so one pass suffices
        row = dict(row)
        zero = (0,) * self.n
        for m in [m for m in row if m in self.pivots]:
            _sub_scaled(row, self.pivots[m], row[m], zero)
        return row

    def reduce(self, f: RatPolynomial) -> RatPolynomial:
        return RatPolynomial(self._reduce(f.terms), self.n)

    def add(self, row: dict) -> bool:
        row = self._reduce(row)
        if not row:
            return False
        lm = max(row, key=drl_key)
        c = row[lm]
        row = {k: v / c for k, v in row.items()}
        for other in self.pivots.values():
            if lm in other:
                _sub_scaled(other, row, other[lm], (0,) * self.n)
        self.pivots[lm] = row
        return True

    def contains(self, f: RatPolynomial) -> bool:
        return not self._reduce(f.terms)

    def rank(self) -> int:
        return len(self.pivots)

    def polynomials(self) -> list[RatPolynomial]:
        polys = [RatPolynomial(r, self.n) for r in self.pivots.values()]
        return sorted(polys, key=lambda g: drl_key(g.lm()), reverse=True)


def _as_rat(F, n):
    return [RatPolynomial.from_int(f, n) if isinstance(f, IntPolynomial) else f for f in F]


def _infer_n(F) -> int:
    for f in F:
        if isinstance(f, RatPolynomial):
            return f.n
    return max(f.max_variable() for f in F) + 1


def macaulay_echelon(F: Sequence, D: int, n: int | None = None) -> RowEchelon:
    n = _infer_n(F) if n is None else n
    polys = _as_rat(F, n)
    count = sum(len(exponents_upto(n, D - p.degree())) for p in polys if p.degree() <= D)
    if count > MAX_MACAULAY_ROWS:
        raise MemoryError(f"{count} Macaulay rows exceed the guard")
    ech = RowEchelon(n)
    for p in polys:
        if p.degree() > D:
            continue
        for shift in exponents_upto(n, D - p.degree()):
            s = tuple(int(x) for x in shift)
            row = {tuple(a + b for a, b in zip(e, s)): v for e, v in p.terms.items()}
            ech.add(row)
    return ech


def macaulay_rowspace(F: Sequence, D: int, n: int | None = None) -> list[RatPolynomial]:
    """RREF basis (monic, fully reduced) of span{m * f_i : deg <= D}."""
    return macaulay_echelon(F, D, n).polynomials()


def solving_degree(F: Sequence, D_max: int, n: int | None = None) -> int | None:
    """Least D >= max deg F whose Macaulay row space contains the reduced basis."""
    n = _infer_n(F) if n is None else n
    G = groebner_drl(F, n)
    d0 = max(p.degree() for p in _as_rat(F, n))
    for D in range(d0, D_max + 1):
        ech = macaulay_echelon(F, D, n)
        if all(g.degree() <= D and ech.contains(g) for g in G):
            return D
    return None


def complete_solving_degree(F: Sequence, D_max: int, n: int | None = None) -> int | None:
    """Least D such that every m * g (g in the basis, deg <= D) is in the row space."""
    n = _infer_n(F) if n is None else n
    G = groebner_drl(F, n)
    d0 = max(p.degree() for p in _as_rat(F, n))
    for D in range(d0, D_max + 1):
        ech = macaulay_echelon(F, D, n)
        ok = True
        for g in G:
            if g.degree() > D:
                ok = False
                break
            for shift in exponents_upto(n, D - g.degree()):
                s = tuple(int(x) for x in shift)
                mg = RatPolynomial({tuple(a + b for a, b in zip(e, s)): v for e, v in g.terms.items()}, n)
                if not ech.contains(mg):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return D
    return None


def residue_monomials(G: Sequence[RatPolynomial], n: int, D: int) -> list[tuple]:
    """Monomials of degree <= D not divisible by any leading monomial of G."""
    lms = [g.lm() for g in G]
    out = []
    for e in exponents_upto(n, D):
        e = tuple(int(x) for x in e)
        if not any(_divides(l, e) for l in lms):
            out.append(e)
    return sorted(out, key=drl_key, reverse=True)


def affine_solution_dimension(F: Sequence, D: int, n: int | None = None) -> tuple[int, bool]:
    """(dimension, consistent) of the solution set of the degree-D Macaulay system.

    Unknowns are the monomials of degree 1..D that occur in some row (zero
    columns pruned); the constant monomial is fixed to 1.
    """
    n = _infer_n(F) if n is None else n
    ech = macaulay_echelon(F, D, n)
    one = (0,) * n
    if one in ech.pivots:
        return -1, False
    used = set()
    for p in _as_rat(F, n):
        if p.degree() > D:
            continue
        for shift in exponents_upto(n, D - p.degree()):
            s = tuple(int(x) for x in shift)
            used.update(tuple(a + b for a, b in zip(e, s)) for e in p.terms)
    used.discard(one)
    return len(used) - ech.rank(), True


def format_basis(G: Sequence[RatPolynomial], names: Sequence[str] | None = None) -> str:
    return "\n".join(g.to_str(names) for g in G) + "\n"
