"""AES-(N_k, N_r) as a Boolean quadratic system.

The cipher is Rijndael with block length equal to the key length (N_k words),
so plaintext, state and every round key are 4*N_k bytes. Byte j of a state
sits at row j % 4, column j // 4 (FIPS-197 layout); bit m of a byte is
(byte >> m) & 1.

Unknowns: round keys w_0..w_{N_r}, S-box outputs wb_i of the key schedule,
states x_i after AddRoundKey and y_i after SubBytes (i < N_r).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..boolpoly import BooleanPolynomial, BooleanSystem
from .sbox_data import SBOX_RELATIONS
from .stats import InstanceStats


# ---------------------------------------------------------------- field and S-box

def xtime(a: int) -> int:
    a <<= 1
    return (a ^ 0x11B) if a & 0x100 else a


def gf_mul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a = xtime(a)
        b >>= 1
    return r


@lru_cache(maxsize=None)
def sbox_table() -> tuple[int, ...]:
    """Rijndael S-box: inversion in GF(2^8) followed by the affine map."""
    inv = [0] * 256
    for a in range(1, 256):
        for b in range(1, 256):
            if gf_mul(a, b) == 1:
                inv[a] = b
                break
    out = []
    for a in range(256):
        b = inv[a]
        s = 0x63
        for k in range(5):
            s ^= ((b << k) | (b >> (8 - k))) & 0xFF
        out.append(s)
    return tuple(out)


def _parse_relation(text: str) -> list[tuple[int, ...]]:
    """Monomials as tuples of positions 0..15 (x0..x7 then y0..y7)."""
    monos = []
    for term in text.split("+"):
        if term == "1":
            monos.append(())
            continue
        toks = re.findall(r"([xy])(\d)", term)
        if "".join(a + b for a, b in toks) != term:
            raise ValueError(f"cannot parse S-box term {term!r}")
        monos.append(tuple(int(i) + (8 if a == "y" else 0) for a, i in toks))
    return monos


@lru_cache(maxsize=None)
def _relations() -> tuple[tuple[tuple[int, ...], ...], ...]:
    return tuple(tuple(_parse_relation(t)) for t in SBOX_RELATIONS)


def sbox_equations() -> list[BooleanPolynomial]:
    """The 39 relations over variables 0..7 (input bits) and 8..15 (output bits)."""
    return [BooleanPolynomial.from_index_lists(rel) for rel in _relations()]


def _sbox_block(xbits: list[int], ybits: list[int]) -> list[BooleanPolynomial]:
    pos = xbits + ybits
    out = []
    for rel in _relations():
        out.append(BooleanPolynomial.from_index_lists([[pos[k] for k in mono] for mono in rel]))
    return out


# ---------------------------------------------------------------- Rijndael

def shift_offsets(nb: int) -> tuple[int, int, int, int]:
    return (0, 1, 3, 4) if nb == 8 else (0, 1, 2, 3)


def shift_rows_source(nb: int) -> list[int]:
    """src[j] = byte of the input that ShiftRows moves to position j."""
    off = shift_offsets(nb)
    return [4 * ((j // 4 + off[j % 4]) % nb) + j % 4 for j in range(4 * nb)]


def mix_columns(state: list[int]) -> list[int]:
    out = []
    for c in range(len(state) // 4):
        a = state[4 * c:4 * c + 4]
        for r in range(4):
            out.append(gf_mul(a[r], 2) ^ gf_mul(a[(r + 1) % 4], 3) ^ a[(r + 2) % 4] ^ a[(r + 3) % 4])
    return out


def _check_nk(nk: int) -> None:
    if nk not in (4, 6, 8):
        raise ValueError(f"N_k must be 4, 6 or 8, got {nk}")


def round_constants(count: int) -> list[int]:
    rc, out = 1, []
    for _ in range(count):
        out.append(rc)
        rc = xtime(rc)
    return out


@dataclass
class KeySchedule:
    words: list          # round keys w_0..w_{N_r}, each 4*N_k bytes
    sub_last: list       # S(last word of w_i), i = 0..N_r-1 (4 bytes each)
    sub_mid: list        # S(word 3 of w_i), i = 1..N_r, only for N_k > 6


def expand_key(key: bytes, nk: int, nr: int) -> KeySchedule:
    _check_nk(nk)
    if len(key) != 4 * nk:
        raise ValueError(f"key must have {4 * nk} bytes")
    S = sbox_table()
    rcon = round_constants(nr)
    w = [list(key)]
    sub_last, sub_mid = [], []
    for i in range(1, nr + 1):
        prev = w[-1]
        last = [S[b] for b in prev[4 * nk - 4:]]
        sub_last.append(last)
        cur = [0] * (4 * nk)
        for jb in range(4):
            cur[jb] = prev[jb] ^ last[(jb + 1) % 4] ^ (rcon[i - 1] if jb == 0 else 0)
        for jb in range(4, 4 * nk):
            if nk > 6 and 16 <= jb < 20:
                if jb == 16:
                    sub_mid.append([S[b] for b in cur[12:16]])
                cur[jb] = prev[jb] ^ sub_mid[-1][jb - 16]
            else:
                cur[jb] = prev[jb] ^ cur[jb - 4]
        w.append(cur)
    return KeySchedule(w, sub_last, sub_mid)


@dataclass
class AESTrace:
    nk: int
    nr: int
    plaintext: list
    ciphertext: list
    schedule: KeySchedule
    x: list   # state after AddRoundKey, rounds 0..N_r-1
    y: list   # S-box images of x


def rijndael_encrypt(key: bytes, plaintext: bytes, nk: int, nr: int) -> AESTrace:
    """Encrypt one block of 4*N_k bytes and keep every intermediate state."""
    ks = expand_key(key, nk, nr)
    if len(plaintext) != 4 * nk:
        raise ValueError(f"plaintext must have {4 * nk} bytes")
    S = sbox_table()
    src = shift_rows_source(nk)
    state = [p ^ k for p, k in zip(plaintext, ks.words[0])]
    xs, ys = [], []
    for i in range(1, nr + 1):
        xs.append(state)
        sub = [S[b] for b in state]
        ys.append(sub)
        shifted = [sub[src[j]] for j in range(4 * nk)]
        mixed = mix_columns(shifted) if i < nr else shifted
        state = [a ^ k for a, k in zip(mixed, ks.words[i])]
    return AESTrace(nk, nr, list(plaintext), state, ks, xs, ys)


# ---------------------------------------------------------------- linear layer

def alpha_matrix(nk: int) -> np.ndarray:
    """0/1 matrix of MixColumns o ShiftRows on bits: row 8j+m, column 8j'+m'."""
    nbits = 32 * nk
    src = shift_rows_source(nk)
    M = np.zeros((nbits, nbits), dtype=np.uint8)
    for jp in range(4 * nk):
        for mp in range(8):
            state = [0] * (4 * nk)
            state[jp] = 1 << mp
            out = mix_columns([state[src[j]] for j in range(4 * nk)])
            for j, byte in enumerate(out):
                for m in range(8):
                    if (byte >> m) & 1:
                        M[8 * j + m, 8 * jp + mp] = 1
    return M


def alpha_count(nk: int = 4) -> int:
    """Number of nonzero alpha coefficients in one round."""
    return int(alpha_matrix(nk).sum())


# ---------------------------------------------------------------- equations

class _Vars:
    def __init__(self):
        self.names: list[str] = []
        self.index: dict[str, int] = {}

    def block(self, prefix: str, nbytes: int) -> list[list[int]]:
        out = []
        for j in range(nbytes):
            row = []
            for m in range(8):
                name = f"{prefix}_{j}_{m}"
                self.index[name] = len(self.names)
                self.names.append(name)
                row.append(self.index[name])
            out.append(row)
        return out


def _lin(vars_: list[int], const: int = 0) -> BooleanPolynomial:
    monos = [1 << v for v in vars_]
    if const:
        monos.append(0)
    return BooleanPolynomial.from_monomials(monos)


def _bits(byte: int) -> list[int]:
    return [(byte >> m) & 1 for m in range(8)]


def gen_aes(nk: int, nr: int, plaintext: bytes, ciphertext: bytes) -> BooleanSystem:
    """Key-recovery system for one known plaintext/ciphertext block."""
    _check_nk(nk)
    if nr < 1:
        raise ValueError("N_r must be positive")
    nbytes = 4 * nk
    if len(plaintext) != nbytes or len(ciphertext) != nbytes:
        raise ValueError(f"plaintext and ciphertext must have {nbytes} bytes")
    V = _Vars()
    w = [V.block(f"w{i}", nbytes) for i in range(nr + 1)]
    wb_last = [V.block(f"wb{i}", 4) for i in range(nr)]
    wb_mid = [V.block(f"wm{i}", 4) for i in range(1, nr + 1)] if nk > 6 else []
    x = [V.block(f"x{i}", nbytes) for i in range(nr)]
    y = [V.block(f"y{i}", nbytes) for i in range(nr)]
    alpha = alpha_matrix(nk)
    rows = [np.flatnonzero(alpha[k]) for k in range(8 * nbytes)]
    src = shift_rows_source(nk)
    rcon = round_constants(nr)
    polys: list[BooleanPolynomial] = []

    # AddRoundKey with the plaintext
    for j in range(nbytes):
        pb = _bits(plaintext[j])
        for m in range(8):
            polys.append(_lin([x[0][j][m], w[0][j][m]], pb[m]))
    # middle rounds: x_i = alpha . y_{i-1} + w_i
    for i in range(1, nr):
        for j in range(nbytes):
            for m in range(8):
                terms = [x[i][j][m], w[i][j][m]]
                terms += [y[i - 1][k // 8][k % 8] for k in rows[8 * j + m]]
                polys.append(_lin(terms))
    # last round has no MixColumns
    for j in range(nbytes):
        cb = _bits(ciphertext[j])
        for m in range(8):
            polys.append(_lin([w[nr][j][m], y[nr - 1][src[j]][m]], cb[m]))
    # S-boxes of the state
    for i in range(nr):
        for j in range(nbytes):
            polys += _sbox_block(x[i][j], y[i][j])
    # key schedule S-boxes on the last word
    for i in range(nr):
        for jb in range(4):
            polys += _sbox_block(w[i][nbytes - 4 + jb], wb_last[i][jb])
    if nk > 6:
        for i in range(1, nr + 1):
            for jb in range(4):
                polys += _sbox_block(w[i][12 + jb], wb_mid[i - 1][jb])
    # key schedule linear part
    for i in range(1, nr + 1):
        for jb in range(nbytes):
            for m in range(8):
                if jb < 4:
                    const = (rcon[i - 1] >> m) & 1 if jb == 0 else 0
                    polys.append(_lin([w[i][jb][m], w[i - 1][jb][m],
                                       wb_last[i - 1][(jb + 1) % 4][m]], const))
                elif nk > 6 and 16 <= jb < 20:
                    polys.append(_lin([w[i][jb][m], w[i - 1][jb][m], wb_mid[i - 1][jb - 16][m]]))
                else:
                    polys.append(_lin([w[i][jb][m], w[i - 1][jb][m], w[i][jb - 4][m]]))
    return BooleanSystem(tuple(V.names), tuple(polys))


def aes_witness(system: BooleanSystem, trace: AESTrace) -> tuple[int, ...]:
    """The 0/1 point of a generated system that the encryption trace defines."""
    nk, nr = trace.nk, trace.nr
    values: dict[str, int] = {}

    def put(prefix, data):
        for j, byte in enumerate(data):
            for m in range(8):
                values[f"{prefix}_{j}_{m}"] = (byte >> m) & 1

    ks = trace.schedule
    for i in range(nr + 1):
        put(f"w{i}", ks.words[i])
    for i in range(nr):
        put(f"wb{i}", ks.sub_last[i])
        put(f"x{i}", trace.x[i])
        put(f"y{i}", trace.y[i])
    if nk > 6:
        for i in range(1, nr + 1):
            put(f"wm{i}", ks.sub_mid[i - 1])
    return tuple(values[v] for v in system.variables)


def aes_instance(nk: int, nr: int, seed: int = 0) -> tuple[BooleanSystem, tuple[int, ...]]:
    """Random key and plaintext; returns the system and its true solution."""
    rng = np.random.default_rng(seed)
    key = bytes(rng.integers(0, 256, 4 * nk, dtype=np.uint8).tolist())
    pt = bytes(rng.integers(0, 256, 4 * nk, dtype=np.uint8).tolist())
    tr = rijndael_encrypt(key, pt, nk, nr)
    system = gen_aes(nk, nr, pt, bytes(tr.ciphertext))
    return system, aes_witness(system, tr)


def aes_stats(nk: int, nr: int) -> InstanceStats:
    """Closed-form counts used for the resource tables."""
    _check_nk(nk)
    small = nk <= 6
    n = 96 * nk * nr + 32 * nk + (32 if small else 64) * nr
    r = 220 * nr * nk + 64 * nk + (156 if small else 312) * nr
    T = 4928 * nr * nk + 192 * nk + (5440 if small else 10208) * nr
    return InstanceStats("aes", {"Nk": nk, "Nr": nr}, n, r, T, nominal=True)
