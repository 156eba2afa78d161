"""Instance statistics: variable, equation and term counts."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class InstanceStats:
    """n, r, T and the sparseness histogram {s: r_s} of one equation system.

    `nominal` marks counts taken from closed forms rather than from a
    generated system; such stats may carry no histogram.
    """
    family: str
    params: dict
    n: int
    r: int
    T: int
    histogram: dict | None = None
    nominal: bool = False
    notes: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.histogram is not None:
            if sum(self.histogram.values()) != self.r:
                raise ValueError("histogram does not add up to r")
            if sum(s * c for s, c in self.histogram.items()) != self.T:
                raise ValueError("histogram does not add up to T")

    @property
    def r1(self) -> int:
        return (self.histogram or {}).get(1, 0)

    @property
    def r2(self) -> int:
        return (self.histogram or {}).get(2, 0)

    @property
    def params_str(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.params.items())

    def to_json_obj(self) -> dict:
        return {
            "family": self.family,
            "params": dict(self.params),
            "n": self.n,
            "r": self.r,
            "T": self.T,
            "histogram": None if self.histogram is None
            else {str(k): v for k, v in sorted(self.histogram.items())},
            "nominal": self.nominal,
        }


def stats_of(system, family: str = "custom", params: dict | None = None) -> InstanceStats:
    """Counts of a generated BooleanSystem or IntSystem."""
    return InstanceStats(family=family, params=dict(params or {}), n=system.n, r=system.r,
                         T=system.total_sparseness, histogram=system.histogram())
