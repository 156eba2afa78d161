"""Resource estimates for solving a Boolean system with the quantum pipeline.

Both formulas return the base-2 logarithm of the runtime factor that
multiplies c * kappa^2 (c being the HHL constant); c and kappa stay symbolic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .generators import aes_stats, keccak_stats, trivium_stats
from .generators.stats import InstanceStats

CSV_HEADER = "family,params,n,r,T,log2_simplified,log2_exact"


@dataclass(frozen=True)
class ComplexityEstimate:
    log2_value: float
    formula: str            # "exact-cor-ec" or "simplified-bound"
    n: int
    r: int
    T: int
    r1: int
    r2: int
    eps: float
    ceil_log: bool

    @property
    def value(self) -> float:
        return 2.0 ** self.log2_value


def _log_eps(eps: float, ceil: bool) -> float:
    if not 0 < eps < 1:
        raise ValueError("eps must lie in (0, 1)")
    v = math.log2(1 / eps)
    return math.ceil(v - 1e-12) if ceil else v


def exact_complexity(stats: InstanceStats, eps: float, ceil_log: bool = True) -> ComplexityEstimate:
    """The full bound with r_1, r_2 (counts of 1- and 2-term equations) taken into account."""
    n, r, T, r1, r2 = stats.n, stats.r, stats.T, stats.r1, stats.r2
    if T < r or r1 + r2 > r:
        raise ValueError("degenerate statistics: need T >= r and r1 + r2 <= r")
    A = n + T - 3 * r + 2 * r1 + r2
    if A <= 0:
        raise ValueError("degenerate statistics: lifted variable count is not positive")
    inner = A * math.log2(6 * A + 1) + math.log2(T - 2 * r + 2 * r1 + r2 + 1)
    rows = A + 1 + 6 * T - 12 * r + 7 * r1 + 2 * r2
    val = (0.5 + math.log2(inner) + 1.5 * math.log2(A) + math.log2(rows)
           + math.log2(_log_eps(eps, ceil_log)))
    return ComplexityEstimate(val, "exact-cor-ec", n, r, T, r1, r2, eps, ceil_log)


def simplified_complexity(stats: InstanceStats, eps: float, ceil_log: bool = False) -> ComplexityEstimate:
    """sqrt(2) (log2(n+T)+3) (n+T)^2.5 (n+7T) log2(1/eps); the published tables use the un-ceiled log."""
    n, T = stats.n, stats.T
    if n + T <= 0:
        raise ValueError("empty statistics")
    val = (0.5 + math.log2(math.log2(n + T) + 3) + 2.5 * math.log2(n + T)
           + math.log2(n + 7 * T) + math.log2(_log_eps(eps, ceil_log)))
    return ComplexityEstimate(val, "simplified-bound", n, stats.r, T, stats.r1, stats.r2, eps, ceil_log)


TABLES = {
    "aes": [("aes", (4, 4)), ("aes", (4, 6)), ("aes", (4, 8)), ("aes", (4, 10)),
            ("aes", (6, 12)), ("aes", (8, 14))],
    "trivium": [("trivium", (288,)), ("trivium", (576,)), ("trivium", (1152,)), ("trivium", (2304,))],
    "keccak": [("keccak", (224, 1600, 24)), ("keccak", (256, 1600, 24)),
               ("keccak", (384, 1600, 24)), ("keccak", (512, 1600, 24))],
}
TABLES["all"] = TABLES["aes"] + TABLES["trivium"] + TABLES["keccak"]
# the introductory summary table is a subset of the three above
TABLES["summary"] = [TABLES["aes"][i] for i in (3, 4, 5)] + TABLES["trivium"][2:] + TABLES["keccak"][2:]

_STATS = {"aes": aes_stats, "trivium": trivium_stats, "keccak": keccak_stats}


def row_stats(family: str, params: tuple) -> InstanceStats:
    try:
        fn = _STATS[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    return fn(*params)


def table_rows(table: str, eps: float) -> list[tuple[InstanceStats, ComplexityEstimate, ComplexityEstimate]]:
    if table not in TABLES:
        raise ValueError(f"unknown table {table!r}; choose from {sorted(TABLES)}")
    out = []
    for fam, params in TABLES[table]:
        st = row_stats(fam, params)
        out.append((st, simplified_complexity(st, eps), exact_complexity(st, eps)))
    return out


def table_report(table: str = "all", eps: float = 0.01) -> str:
    lines = [CSV_HEADER]
    for st, simp, ex in table_rows(table, eps):
        lines.append(f"{st.family},{st.params_str},{st.n},{st.r},{st.T},"
                     f"{simp.log2_value:.6f},{ex.log2_value:.6f}")
    return "\n".join(lines) + "\n"
