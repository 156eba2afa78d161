"""N_r-round Trivium keystream equations.

The 288-bit register is read as three sequences: at time t the bits
s_1..s_93 are A(t+92)..A(t), s_94..s_177 are B(t+83)..B(t) and
s_178..s_288 are C(t+110)..C(t). Every sequence entry that the first N_r
keystream bits depend on is an unknown; the keystream bits are constants.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..boolpoly import BooleanPolynomial, BooleanSystem
from .stats import InstanceStats

MIN_ROUNDS = 67


def trivium_update(s: list[int]) -> tuple[int, list[int]]:
    """One clock of the standard register (s[0] is s_1); returns (z, new state)."""
    t1 = s[65] ^ s[92]
    t2 = s[161] ^ s[176]
    t3 = s[242] ^ s[287]
    z = t1 ^ t2 ^ t3
    t1 ^= (s[90] & s[91]) ^ s[170]
    t2 ^= (s[174] & s[175]) ^ s[263]
    t3 ^= (s[285] & s[286]) ^ s[68]
    new = [t3] + s[0:92] + [t1] + s[93:176] + [t2] + s[177:287]
    return z, new


def trivium_keystream(state: list[int], nbits: int) -> list[int]:
    s = list(state)
    if len(s) != 288:
        raise ValueError("Trivium state has 288 bits")
    out = []
    for _ in range(nbits):
        z, s = trivium_update(s)
        out.append(z)
    return out


@dataclass
class TriviumTrace:
    A: list
    B: list
    C: list
    keystream: list


def trivium_trace(state: list[int], nr: int) -> TriviumTrace:
    """Clock N_r times recording the three sequences."""
    s = list(state)
    A = [s[92 - k] for k in range(93)]
    B = [s[176 - k] for k in range(84)]
    C = [s[287 - k] for k in range(111)]
    zs = []
    for _ in range(nr):
        z, s = trivium_update(s)
        zs.append(z)
        A.append(s[0])
        B.append(s[93])
        C.append(s[177])
    return TriviumTrace(A, B, C, zs)


def _check(nr: int) -> None:
    if nr < MIN_ROUNDS:
        raise ValueError(f"N_r must be at least {MIN_ROUNDS}")


def _names(nr: int) -> tuple[list[str], dict]:
    sizes = {"A": nr + 27, "B": nr + 15, "C": nr + 45}
    names, index = [], {}
    for reg, size in sizes.items():
        for k in range(size):
            index[reg, k] = len(names)
            names.append(f"{reg}{k}")
    return names, index


def gen_trivium(nr: int, keystream: list[int] | None = None,
                initial_state: list[int] | None = None) -> BooleanSystem:
    """Update relations for A, B, C and one output relation per keystream bit.

    Without a keystream, the bits are produced from `initial_state`.
    """
    _check(nr)
    if keystream is None:
        if initial_state is None:
            raise ValueError("give a keystream or an initial state")
        keystream = trivium_keystream(initial_state, nr)
    if len(keystream) != nr:
        raise ValueError(f"need {nr} keystream bits")
    names, ix = _names(nr)

    def v(reg, k):
        return 1 << ix[reg, k]

    def q(reg, k1, k2):
        return v(reg, k1) | v(reg, k2)

    polys = []
    for t in range(nr - 66):
        polys.append(BooleanPolynomial.from_monomials(
            [v("A", t + 93), v("A", t + 24), v("C", t + 45), v("C", t), q("C", t + 1, t + 2)]))
    for t in range(nr - 69):
        polys.append(BooleanPolynomial.from_monomials(
            [v("B", t + 84), v("B", t + 6), v("A", t + 27), v("A", t), q("A", t + 1, t + 2)]))
    for t in range(nr - 66):
        polys.append(BooleanPolynomial.from_monomials(
            [v("C", t + 111), v("C", t + 24), v("B", t + 15), v("B", t), q("B", t + 1, t + 2)]))
    for t in range(nr):
        monos = [v("A", t + 27), v("A", t), v("B", t + 15), v("B", t), v("C", t + 45), v("C", t)]
        if keystream[t]:
            monos.append(0)
        polys.append(BooleanPolynomial.from_monomials(monos))
    return BooleanSystem(tuple(names), tuple(polys))


def trivium_witness(system: BooleanSystem, trace: TriviumTrace) -> tuple[int, ...]:
    seqs = {"A": trace.A, "B": trace.B, "C": trace.C}
    return tuple(seqs[name[0]][int(name[1:])] for name in system.variables)


def trivium_instance(nr: int, seed: int = 0) -> tuple[BooleanSystem, tuple[int, ...]]:
    """Random initial state; returns the system and the true state trajectory."""
    _check(nr)
    rng = np.random.default_rng(seed)
    state = rng.integers(0, 2, 288).tolist()
    tr = trivium_trace(state, nr)
    system = gen_trivium(nr, tr.keystream)
    return system, trivium_witness(system, tr)


def trivium_stats(nr: int) -> InstanceStats:
    """Closed-form counts (every output relation counted with its constant)."""
    _check(nr)
    # the B relations start three clocks later than those of A and C
    quad = 2 * (nr - 66) + max(0, nr - 69)
    return InstanceStats("trivium", {"Nr": nr}, 3 * nr + 87, quad + nr, 5 * quad + 7 * nr,
                         histogram={5: quad, 7: nr}, nominal=True)
