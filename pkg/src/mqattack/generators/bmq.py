"""Random Boolean quadratic systems."""
from __future__ import annotations

from itertools import combinations

import numpy as np

from ..boolpoly import BooleanPolynomial, BooleanSystem
from .stats import InstanceStats


def quadratic_monomials(n: int) -> list[int]:
    """1, x_i and x_i x_j (i < j) as bit masks."""
    monos = [0] + [1 << i for i in range(n)]
    monos += [(1 << i) | (1 << j) for i, j in combinations(range(n), 2)]
    return monos


def gen_random_bmq(n: int, r: int, density: float = 0.5, dense: bool = False, seed: int = 0,
                   planted: bool = False) -> BooleanSystem:
    """r random quadratic polynomials in n variables.

    dense keeps every monomial of degree <= 2; otherwise each monomial is
    kept with probability `density`. With planted=True a random point is
    drawn first and each constant term is set so that the point is a solution.
    """
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    if not 0 <= density <= 1:
        raise ValueError("density must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    monos = quadratic_monomials(n)
    point = rng.integers(0, 2, n).tolist() if planted else None
    polys = []
    for _ in range(r):
        keep = np.ones(len(monos), bool) if dense else rng.random(len(monos)) < density
        f = BooleanPolynomial.from_monomials(m for m, k in zip(monos, keep) if k)
        if planted and f.evaluate(point):
            f = f + BooleanPolynomial.constant(1)
        polys.append(f)
    return BooleanSystem(tuple(f"x{i + 1}" for i in range(n)), tuple(polys))


def planted_point(n: int, seed: int) -> tuple[int, ...]:
    """The point gen_random_bmq(..., planted=True) plants for this n and seed."""
    return tuple(np.random.default_rng(seed).integers(0, 2, n).tolist())


def dense_bmq_stats(n: int, r: int) -> InstanceStats:
    """Nominal counts of a dense system with x_i^2 kept apart from x_i: T = (n+1)(n+2)r/2."""
    per = (n + 1) * (n + 2) // 2
    return InstanceStats("bmq", {"n": n, "r": r}, n, r, per * r, histogram={per: r}, nominal=True)
