"""Boolean polynomials in F2[X]/(x_i^2 - x_i).

A monomial is an int bitmask (bit i set means x_{i+1} divides it, 0 is the
monomial 1). A polynomial is a frozenset of such masks.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

BRUTE_FORCE_MAX_VARS = 24


def monomial(*indices: int) -> int:
    """Bitmask for the product of the given (0-based) variables."""
    m = 0
    for i in indices:
        if i < 0:
            raise ValueError("variable index must be non-negative")
        m |= 1 << i
    return m


def monomial_vars(m: int) -> tuple[int, ...]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


def monomial_degree(m: int) -> int:
    return m.bit_count()


def drl_key(m: int) -> tuple[int, int]:
    """Sort key for squarefree masks; ascending sort gives DRL ascending.

    At equal degree the larger monomial is the one missing the highest
    differing variable, i.e. the numerically smaller mask.
    """
    return (m.bit_count(), -m)


@dataclass(frozen=True)
class BooleanPolynomial:
    terms: frozenset = field(default_factory=frozenset)

    @classmethod
    def from_monomials(cls, monomials: Iterable[int]) -> "BooleanPolynomial":
        """Build from masks; repeated masks cancel in pairs."""
        counts = Counter(monomials)
        return cls(frozenset(m for m, c in counts.items() if c % 2))

    @classmethod
    def from_index_lists(cls, monomials: Iterable[Sequence[int]]) -> "BooleanPolynomial":
        return cls.from_monomials(monomial(*vs) for vs in monomials)

    @classmethod
    def constant(cls, c: int) -> "BooleanPolynomial":
        return cls(frozenset({0})) if c % 2 else cls()

    @classmethod
    def variable(cls, i: int) -> "BooleanPolynomial":
        return cls(frozenset({1 << i}))

    def __add__(self, other: "BooleanPolynomial") -> "BooleanPolynomial":
        return BooleanPolynomial(self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: "BooleanPolynomial") -> "BooleanPolynomial":
        acc: set[int] = set()
        for a in self.terms:
            for b in other.terms:
                acc ^= {a | b}
        return BooleanPolynomial(frozenset(acc))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def n_terms(self) -> int:
        return len(self.terms)

    @property
    def constant_term(self) -> int:
        return 1 if 0 in self.terms else 0

    def degree(self) -> int:
        return max((m.bit_count() for m in self.terms), default=-1)

    def support(self) -> int:
        """Mask of all variables that occur."""
        s = 0
        for m in self.terms:
            s |= m
        return s

    def sorted_terms(self) -> list[int]:
        """Monomials in DRL-descending order."""
        return sorted(self.terms, key=drl_key, reverse=True)

    def evaluate(self, point: Sequence[int]) -> int:
        mask = point_to_mask(point)
        need = self.support()
        if need >> len(point):
            raise ValueError("point does not assign every variable of the polynomial")
        v = 0
        for m in self.terms:
            if m & mask == m:
                v ^= 1
        return v

    def substitute(self, assignment: Mapping[int, int]) -> "BooleanPolynomial":
        """Fix some variables to 0/1."""
        ones = zeros = 0
        for i, a in assignment.items():
            if a % 2:
                ones |= 1 << i
            else:
                zeros |= 1 << i
        out = Counter(m & ~ones for m in self.terms if not m & zeros)
        return BooleanPolynomial(frozenset(m for m, c in out.items() if c % 2))

    def to_index_lists(self) -> list[list[int]]:
        return [list(monomial_vars(m)) for m in self.sorted_terms()]

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in self.sorted_terms():
            if m == 0:
                parts.append("1")
            else:
                vs = monomial_vars(m)
                parts.append("*".join(names[i] if names else f"x{i + 1}" for i in vs))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"BooleanPolynomial({self.to_str()})"


def point_to_mask(point: Sequence[int]) -> int:
    mask = 0
    for i, a in enumerate(point):
        if a not in (0, 1):
            raise ValueError("Boolean point coordinates must be 0 or 1")
        if a:
            mask |= 1 << i
    return mask


def mask_to_point(mask: int, n: int) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(n))


def reduce_squarefree(terms) -> BooleanPolynomial:
    """Collapse exponents to 1 and coefficients mod 2.

    `terms` is a mapping exponent-tuple -> coefficient, an iterable of exponent
    tuples (coefficient 1 each), or an object with `sparse_terms()`
    (e.g. an IntPolynomial, read through its sparse (var, exp) terms).
    """
    if hasattr(terms, "sparse_terms"):
        items = [(dict(k), c) for k, c in terms.sparse_terms()]
        acc = Counter()
        for ed, c in items:
            m = 0
            for v, e in ed.items():
                if e > 0:
                    m |= 1 << v
            acc[m] += c
        return BooleanPolynomial(frozenset(m for m, c in acc.items() if c % 2))
    if isinstance(terms, Mapping):
        items = terms.items()
    else:
        items = ((t, 1) for t in terms)
    acc = Counter()
    for exps, c in items:
        m = 0
        for i, e in enumerate(exps):
            if e < 0:
                raise ValueError("negative exponent")
            if e > 0:
                m |= 1 << i
        acc[m] += c
    return BooleanPolynomial(frozenset(m for m, c in acc.items() if c % 2))


@dataclass(frozen=True)
class BooleanSystem:
    variables: tuple
    polynomials: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "polynomials", tuple(self.polynomials))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        n = len(self.variables)
        for f in self.polynomials:
            if f.support() >> n:
                raise ValueError("polynomial references an undeclared variable")

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def r(self) -> int:
        return len(self.polynomials)

    @property
    def total_sparseness(self) -> int:
        return sum(len(f) for f in self.polynomials)

    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(len(f) for f in self.polynomials).items()))

    def evaluate(self, point: Sequence[int]) -> list[int]:
        return [f.evaluate(point) for f in self.polynomials]

    def is_solution(self, point: Sequence[int]) -> bool:
        return len(point) == self.n and not any(self.evaluate(point))

    def to_json_obj(self) -> dict:
        return {
            "variables": list(self.variables),
            "polynomials": [f.to_index_lists() for f in self.polynomials],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BooleanSystem":
        polys = [BooleanPolynomial.from_index_lists(p) for p in obj["polynomials"]]
        return cls(tuple(obj["variables"]), tuple(polys))


def _monomial_table(n: int, masks: Iterable[int]) -> dict[int, np.ndarray]:
    pts = np.arange(1 << n, dtype=np.int64)
    return {m: (pts & m) == m for m in masks}


def brute_force_f2_solutions(system: BooleanSystem | Sequence[BooleanPolynomial],
                             n: int | None = None) -> set[tuple[int, ...]]:
    """All points of F2^n where every polynomial vanishes."""
    if isinstance(system, BooleanSystem):
        polys, n = system.polynomials, system.n
    else:
        polys = tuple(system)
        if n is None:
            n = max((f.support().bit_length() for f in polys), default=0)
    if n > BRUTE_FORCE_MAX_VARS:
        raise ValueError(f"brute force refused for n={n} > {BRUTE_FORCE_MAX_VARS}")
    alive = np.ones(1 << n, dtype=bool)
    masks = {m for f in polys for m in f.terms}
    table = _monomial_table(n, masks)
    for f in polys:
        val = np.zeros(1 << n, dtype=bool)
        for m in f.terms:
            val ^= table[m]
        alive &= ~val
    return {mask_to_point(int(p), n) for p in np.flatnonzero(alive)}
