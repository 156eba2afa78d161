"""Integer lifts of Boolean polynomials.

A Boolean system over F2 is turned into an integer-coefficient system whose
0/1 solutions coincide with the F2 solutions: long polynomials are first cut
into 3-term pieces chained by auxiliary variables, then each piece is replaced
by an integer polynomial vanishing exactly on its F2 zeros.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .boolpoly import BooleanPolynomial, BooleanSystem, monomial_vars

# A monomial is a tuple of (variable, exponent) pairs sorted by variable.
Mono = tuple


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_from_mask(m: int) -> Mono:
    return tuple((v, 1) for v in monomial_vars(m))


class IntPolynomial:
    """Sparse polynomial with exact integer coefficients.

    Treated as immutable; all operations return new objects.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Mono, int] | Iterable[tuple[Mono, int]] = ()):
        acc: dict[Mono, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            mono = tuple(sorted((int(v), int(e)) for v, e in mono if e))
            for _, e in mono:
                if e < 0:
                    raise ValueError("negative exponent")
            acc[mono] = acc.get(mono, 0) + int(c)
        self._terms = {k: c for k, c in acc.items() if c}

    # construction helpers
    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls({(): c})

    @classmethod
    def variable(cls, i: int) -> "IntPolynomial":
        return cls({((i, 1),): 1})

    @classmethod
    def from_boolean(cls, f: BooleanPolynomial) -> "IntPolynomial":
        """Same monomials, all coefficients +1."""
        return cls({_mono_from_mask(m): 1 for m in f.terms})

    @classmethod
    def from_dense(cls, terms: Mapping[tuple, int]) -> "IntPolynomial":
        """From exponent-vector keys (e_1, ..., e_n)."""
        return cls({tuple((i, e) for i, e in enumerate(k) if e): c for k, c in terms.items()})

    @classmethod
    def field_equation(cls, i: int) -> "IntPolynomial":
        return cls({((i, 2),): 1, ((i, 1),): -1})

    # views
    @property
    def terms(self) -> dict[Mono, int]:
        return dict(self._terms)

    def sparse_terms(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def n_terms(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not k for k in self._terms)

    @property
    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def degree(self) -> int:
        return max((sum(e for _, e in k) for k in self._terms), default=-1)

    def variables(self) -> set[int]:
        return {v for k in self._terms for v, _ in k}

    def max_variable(self) -> int:
        return max((v for k in self._terms for v, _ in k), default=-1)

    def dense_terms(self, n: int) -> dict[tuple, int]:
        out = {}
        for k, c in self._terms.items():
            e = [0] * n
            for v, x in k:
                if v >= n:
                    raise ValueError("variable index beyond n")
                e[v] = x
            out[tuple(e)] = c
        return out

    # arithmetic
    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return IntPolynomial(acc)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial({k: c * other for k, c in self._terms.items()})
        acc: dict[Mono, int] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                k = _mono_mul(a, b)
                acc[k] = acc.get(k, 0) + ca * cb
        return IntPolynomial(acc)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def evaluate(self, point: Sequence[int]) -> int:
        total = 0
        for k, c in self._terms.items():
            t = c
            for v, e in k:
                if v >= len(point):
                    raise ValueError("point does not assign every variable")
                t *= point[v] ** e
            total += t
        return total

    def squarefree(self) -> "IntPolynomial":
        """Replace x^e (e >= 1) by x, keeping integer coefficients."""
        return IntPolynomial([(tuple((v, 1) for v, _ in k), c) for k, c in self._terms.items()])

    def substitute(self, assignment: Mapping[int, int]) -> "IntPolynomial":
        """Plug integer values into some variables."""
        acc: dict[Mono, int] = {}
        for k, c in self._terms.items():
            rest = []
            for v, e in k:
                if v in assignment:
                    c *= assignment[v] ** e
                else:
                    rest.append((v, e))
            if c:
                key = tuple(rest)
                acc[key] = acc.get(key, 0) + c
        return IntPolynomial(acc)

    def rename(self, mapping: Mapping[int, int]) -> "IntPolynomial":
        return IntPolynomial([(tuple((mapping[v], e) for v, e in k), c) for k, c in self._terms.items()])

    def sorted_items(self) -> list[tuple[Mono, int]]:
        """Terms by DRL descending over the variables present."""
        n = self.max_variable() + 1

        def key(item):
            e = [0] * n
            for v, x in item[0]:
                e[v] = x
            return (sum(e), tuple(-x for x in reversed(e)))

        return sorted(self._terms.items(), key=key, reverse=True)

    def to_json_obj(self) -> list:
        return [[c, [[v, e] for v, e in k]] for k, c in self.sorted_items()]

    @classmethod
    def from_json_obj(cls, obj) -> "IntPolynomial":
        return cls([(tuple((v, e) for v, e in pairs), c) for c, pairs in obj])

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        out = []
        for k, c in self.sorted_items():
            mono = "*".join(
                (names[v] if names else f"x{v + 1}") + (f"^{e}" if e > 1 else "") for v, e in k
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            out.append(f"{sign} {body}")
        s = " ".join(out)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self) -> str:
        return f"IntPolynomial({self.to_str()})"


def field_equations(indices: Iterable[int]) -> list[IntPolynomial]:
    """H = {x_i^2 - x_i}."""
    return [IntPolynomial.field_equation(i) for i in indices]


def _ceil_pos(num: int, den: int) -> int:
    # ceiling that returns 0 for non-positive ratios
    return max(0, -(-num // den))


def split_count(t: int, s: int) -> int:
    return _ceil_pos(t - s, s - 2)


def split(f: BooleanPolynomial, s: int, first_aux: int) -> tuple[list[BooleanPolynomial], list[int]]:
    """Cut f into pieces of at most s terms linked by new variables.

    New variables get indices first_aux, first_aux+1, ...; returns the pieces
    and the list of new indices.
    """
    if s < 3:
        raise ValueError("splitting needs s >= 3")
    mons = f.sorted_terms()
    t = len(mons)
    if t <= s:
        return [f], []
    st = split_count(t, s)
    u = [first_aux + j for j in range(st)]
    aux = [1 << v for v in u]
    pieces = [BooleanPolynomial.from_monomials(mons[: s - 1] + [aux[0]])]
    for j in range(2, st + 1):
        lo = (j - 1) * (s - 2) + 1  # 0-based start of m_{(j-1)(s-2)+2}
        hi = j * (s - 2) + 1
        pieces.append(BooleanPolynomial.from_monomials(mons[lo:hi] + [aux[j - 2], aux[j - 1]]))
    pieces.append(BooleanPolynomial.from_monomials(mons[st * (s - 2) + 1:] + [aux[st - 1]]))
    return pieces, u


def c_lift(f: BooleanPolynomial) -> IntPolynomial:
    """prod_{k=f(0)}^{floor(t/2)} (f - 2k) with f read over the integers."""
    t = len(f)
    g = IntPolynomial.from_boolean(f)
    out = IntPolynomial.constant(1)
    for k in range(f.constant_term, t // 2 + 1):
        out = out * (g - 2 * k)
    return out


def _sqf_product(a: int, b: int) -> Mono:
    return _mono_from_mask(a | b)


def chat_lift(f: BooleanPolynomial) -> IntPolynomial:
    """Sparse integer lift for polynomials with at most three terms."""
    t = len(f)
    if t > 3:
        raise ValueError("chat_lift needs at most 3 terms")
    if t <= 1:
        return IntPolynomial.from_boolean(f)
    mons = f.sorted_terms()
    if t == 2:
        # the constant, if any, is the smallest in DRL and comes second
        n1, n2 = mons
        return IntPolynomial({_mono_from_mask(n1): 1}) - IntPolynomial({_mono_from_mask(n2): 1})
    if f.constant_term:
        return IntPolynomial.from_boolean(f) - 2
    m1, m2, m3 = mons
    pairs = IntPolynomial([(_sqf_product(m1, m2), 2), (_sqf_product(m1, m3), 2),
                           (_sqf_product(m2, m3), 2)])
    return pairs - IntPolynomial.from_boolean(f)


@dataclass
class IntSystem:
    """Named variables plus integer polynomials, the input of the Boolean-solution search."""
    variables: list
    polynomials: list

    def __post_init__(self):
        self.variables = list(self.variables)
        self.polynomials = list(self.polynomials)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        n = len(self.variables)
        if any(f.max_variable() >= n for f in self.polynomials):
            raise ValueError("polynomial references an undeclared variable")

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def r(self) -> int:
        return len(self.polynomials)

    @property
    def total_sparseness(self) -> int:
        return sum(f.n_terms for f in self.polynomials)

    def histogram(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for f in self.polynomials:
            out[f.n_terms] = out.get(f.n_terms, 0) + 1
        return dict(sorted(out.items()))

    def is_solution(self, point: Sequence[int]) -> bool:
        return all(f.evaluate(point) == 0 for f in self.polynomials)

    def to_json_obj(self) -> dict:
        return {
            "format": "integer",
            "variables": list(self.variables),
            "polynomials": [p.to_json_obj() for p in self.polynomials],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "IntSystem":
        return cls(obj["variables"], [IntPolynomial.from_json_obj(p) for p in obj["polynomials"]])


@dataclass
class LiftResult:
    system: list
    variables: list
    original_vars: list
    auxiliary_vars: list
    split_map: dict = field(default_factory=dict)

    @property
    def n_original(self) -> int:
        return len(self.original_vars)

    def project(self, point: Sequence[int]) -> tuple[int, ...]:
        return tuple(point[: self.n_original])

    def int_system(self) -> IntSystem:
        return IntSystem(self.variables, self.system)

    def to_json_obj(self) -> dict:
        return self.int_system().to_json_obj()


def lift_system(F: BooleanSystem, s: int = 3) -> LiftResult:
    """Split every polynomial into <= s-term pieces and lift each piece.

    Zero polynomials are dropped. Auxiliary variables are named u_{i}_{j}
    (i the polynomial index, j = 1, 2, ...) and appended after X.
    """
    n = F.n
    names = list(F.variables)
    aux_names: list[str] = []
    out: list[IntPolynomial] = []
    split_map: dict[int, list[int]] = {}
    next_var = n
    for i, f in enumerate(F.polynomials):
        if not f:
            continue
        pieces, new = split(f, s, next_var)
        next_var += len(new)
        for j, _ in enumerate(new, start=1):
            aux_names.append(f"u_{i}_{j}")
        idx = []
        for p in pieces:
            idx.append(len(out))
            out.append(chat_lift(p) if s == 3 else c_lift(p))
        split_map[i] = idx
    return LiftResult(out, names + aux_names, names, aux_names, split_map)


def predicted_lift_vars(F: BooleanSystem, s: int = 3) -> int:
    return F.n + sum(split_count(len(f), s) for f in F.polynomials if f)


def c_lift_sparseness_bound(t: int) -> int:
    return t * (t + 1) ** (t // 2)


def brute_force_boolean_solutions(F: Sequence[IntPolynomial], n: int,
                                  max_vars: int = 20) -> set[tuple[int, ...]]:
    """All 0/1 points where every integer polynomial vanishes (enumeration oracle)."""
    if n > max_vars:
        raise ValueError(f"brute force refused for n={n} > {max_vars}")
    out = set()
    for mask in range(1 << n):
        pt = tuple((mask >> i) & 1 for i in range(n))
        if all(f.evaluate(pt) == 0 for f in F):
            out.add(pt)
    return out
