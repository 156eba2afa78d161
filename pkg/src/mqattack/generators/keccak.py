"""Keccak-f[b] preimage equations.

State bit (x, y, z) has flat index w*(x + 5y) + z, the FIPS-202 order, so the
first N_h bits of the final state are the first N_h bits of the digest.
Unknowns are A_0..A_{N_r-1} (A_0 is the permutation input) and B_1..B_{N_r},
where B_i = pi(rho(theta(A_{i-1}))) and A_i = iota(chi(B_i)).
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from ..boolpoly import BooleanPolynomial, BooleanSystem
from .stats import InstanceStats

RC64 = (
    0x0000000000000001, 0x0000000000008082, 0x800000000000808A, 0x8000000080008000,
    0x000000000000808B, 0x0000000080000001, 0x8000000080008081, 0x8000000000008009,
    0x000000000000008A, 0x0000000000000088, 0x0000000080008009, 0x000000008000000A,
    0x000000008000808B, 0x800000000000008B, 0x8000000000008089, 0x8000000000008003,
    0x8000000000008002, 0x8000000000000080, 0x000000000000800A, 0x800000008000000A,
    0x8000000080008081, 0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
)

# ROT[x][y]
ROT = (
    (0, 36, 3, 41, 18),
    (1, 44, 10, 45, 2),
    (62, 6, 43, 15, 61),
    (28, 55, 25, 21, 56),
    (27, 20, 39, 8, 14),
)

VALID_B = (25, 50, 100, 200, 400, 800, 1600)


def _check_b(b: int) -> int:
    if b not in VALID_B:
        raise ValueError(f"b must be one of {VALID_B}, got {b}")
    return b // 25


def round_constant_bits(i: int, w: int) -> list[int]:
    rc = RC64[i]
    return [(rc >> z) & 1 for z in range(w)]


# ---------------------------------------------------------------- simulator
# states are numpy uint8 arrays of shape (5, 5, w) indexed [x, y, z]

def theta(A: np.ndarray) -> np.ndarray:
    C = A.sum(axis=1) % 2
    D = (np.roll(C, 1, axis=0) + np.roll(np.roll(C, -1, axis=0), 1, axis=1)) % 2
    return (A + D[:, None, :]) % 2


def rho_pi(A: np.ndarray) -> np.ndarray:
    w = A.shape[2]
    B = np.zeros_like(A)
    for x in range(5):
        for y in range(5):
            src_x = (x + 3 * y) % 5
            B[x, y] = np.roll(A[src_x, x], ROT[src_x][x] % w)
    return B


def chi(B: np.ndarray) -> np.ndarray:
    return (B + (1 - np.roll(B, -1, axis=0)) * np.roll(B, -2, axis=0)) % 2


@dataclass
class KeccakTrace:
    A: list   # A_0..A_{N_r}
    B: list   # B_1..B_{N_r} (B[0] is None)


def keccak_trace(state: np.ndarray, nr: int) -> KeccakTrace:
    w = state.shape[2]
    As, Bs = [state.astype(np.uint8)], [None]
    for i in range(nr):
        B = rho_pi(theta(As[-1]))
        A = chi(B)
        A[0, 0] = (A[0, 0] + np.array(round_constant_bits(i, w), dtype=np.uint8)) % 2
        Bs.append(B)
        As.append(A.astype(np.uint8))
    return KeccakTrace(As, Bs)


def keccak_f(state: np.ndarray, nr: int = 24) -> np.ndarray:
    return keccak_trace(state, nr).A[-1]


def flat_to_state(bits, w: int) -> np.ndarray:
    bits = np.asarray(bits, dtype=np.uint8)
    return bits.reshape(5, 5, w).transpose(1, 0, 2).copy()


def state_to_flat(A: np.ndarray) -> np.ndarray:
    return A.transpose(1, 0, 2).reshape(-1)


def sha3_256(message: bytes) -> bytes:
    """Reference sponge on top of the bit-level permutation (for self-checks)."""
    rate = 1088 // 8
    padded = bytearray(message) + b"\x06"
    padded += b"\x00" * (-len(padded) % rate)
    padded[-1] |= 0x80
    bits = np.zeros(1600, dtype=np.uint8)
    for off in range(0, len(padded), rate):
        block = np.unpackbits(np.frombuffer(bytes(padded[off:off + rate]), dtype=np.uint8),
                              bitorder="little")
        bits[:len(block)] ^= block
        bits = state_to_flat(keccak_f(flat_to_state(bits, 64)))
    return np.packbits(bits[:256], bitorder="little").tobytes()


def hashlib_sha3_256(message: bytes) -> bytes:
    return hashlib.sha3_256(message).digest()


# ---------------------------------------------------------------- equations

def gen_keccak(nh: int, b: int, nr: int, digest_bits) -> BooleanSystem:
    """System whose solutions are inputs of Keccak-f[b] (N_r rounds) hitting the digest."""
    w = _check_b(b)
    if not 0 <= nh <= b:
        raise ValueError("N_h must lie in [0, b]")
    if not 1 <= nr <= len(RC64):
        raise ValueError(f"N_r must lie in [1, {len(RC64)}]")
    digest_bits = [int(v) for v in digest_bits]
    if len(digest_bits) != nh:
        raise ValueError(f"need {nh} digest bits")

    names: list[str] = []
    index: dict = {}

    def block(tag):
        for y in range(5):
            for x in range(5):
                for z in range(w):
                    index[tag, x, y, z] = len(names)
                    names.append(f"{tag}_{x}_{y}_{z}")

    for i in range(nr):
        block(f"A{i}")
    for i in range(1, nr + 1):
        block(f"B{i}")

    def bit(tag, x, y, z):
        return 1 << index[tag, x % 5, y % 5, z % w]

    polys = []
    for i in range(1, nr + 1):
        a = f"A{i - 1}"
        # B_i(x, y, z) = theta(A_{i-1})(X, x, z - rot(X, x)) with X = x + 3y
        for y in range(5):
            for x in range(5):
                X = (x + 3 * y) % 5
                off = ROT[X][x] % w
                for z in range(w):
                    zz = z - off
                    monos = [bit(f"B{i}", x, y, z), bit(a, X, x, zz)]
                    monos += [bit(a, X - 1, j, zz) for j in range(5)]
                    monos += [bit(a, X + 1, j, zz - 1) for j in range(5)]
                    polys.append(BooleanPolynomial.from_monomials(monos))
        rc = round_constant_bits(i - 1, w)
        bt = f"B{i}"
        for y in range(5):
            for x in range(5):
                for z in range(w):
                    k = w * (x + 5 * y) + z
                    last = i == nr
                    if last and k >= nh:
                        continue
                    # A = B + B(x+2) + B(x+1) B(x+2) + RC
                    monos = [bit(bt, x, y, z), bit(bt, x + 2, y, z),
                             bit(bt, x + 1, y, z) | bit(bt, x + 2, y, z)]
                    const = rc[z] if (x, y) == (0, 0) else 0
                    if last:
                        const ^= digest_bits[k]
                    else:
                        monos.append(bit(f"A{i}", x, y, z))
                    if const:
                        monos.append(0)
                    polys.append(BooleanPolynomial.from_monomials(monos))
    return BooleanSystem(tuple(names), tuple(polys))


def keccak_witness(system: BooleanSystem, trace: KeccakTrace) -> tuple[int, ...]:
    out = []
    for name in system.variables:
        tag, x, y, z = name.split("_")
        arr = trace.A[int(tag[1:])] if tag[0] == "A" else trace.B[int(tag[1:])]
        out.append(int(arr[int(x), int(y), int(z)]))
    return tuple(out)


def keccak_instance(nh: int, b: int, nr: int, seed: int = 0) -> tuple[BooleanSystem, tuple[int, ...]]:
    """Random permutation input; returns the preimage system and the true trace."""
    w = _check_b(b)
    rng = np.random.default_rng(seed)
    state = rng.integers(0, 2, (5, 5, w)).astype(np.uint8)
    tr = keccak_trace(state, nr)
    digest = state_to_flat(tr.A[-1])[:nh]
    system = gen_keccak(nh, b, nr, digest)
    return system, keccak_witness(system, tr)


def keccak_stats(nh: int, b: int, nr: int) -> InstanceStats:
    """Closed-form counts; T is rounded to the nearest integer."""
    w = _check_b(b)
    n = 2 * b * nr
    r = (2 * b - 1) * nr + nh
    T = round(401 * nr * w + 101 * nh / 25 - 101 * w)
    return InstanceStats("keccak", {"Nh": nh, "b": b, "Nr": nr}, n, r, T, nominal=True)
