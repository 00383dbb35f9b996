"""Terms, elementary Borel moves, the Borel partial order and term orders.

Variables are indexed ``x0 < x1 < ... < xn``; a term is its exponent vector
indexed the same way.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ConstantTermError,
    DimensionError,
    IncomparableError,
    MoveError,
    OutOfRangeError,
    ParseError,
)

__all__ = [
    "Term",
    "TermOrder",
    "LEX",
    "REVLEX",
    "compare",
    "elementary_move",
    "e_plus",
    "e_minus",
    "borel_leq",
    "terms_of_degree",
    "terms_array",
    "revlex_tail",
    "parse_term",
    "parse_order",
    "variable",
]


class Term(tuple):
    """Exponent vector ``(a0, ..., an)`` of the power product x0^a0 ... xn^an."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if not exps:
            raise DimensionError("a term needs at least one variable")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @classmethod
    def one(cls, n: int) -> "Term":
        return cls((0,) * (n + 1))

    @property
    def n(self) -> int:
        return len(self) - 1

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def is_one(self) -> bool:
        return not any(self)

    @property
    def min_index(self) -> int:
        for i, e in enumerate(self):
            if e:
                return i
        raise ConstantTermError("the constant term 1 has no smallest variable")

    @property
    def max_index(self) -> int:
        for i in range(len(self) - 1, -1, -1):
            if self[i]:
                return i
        raise ConstantTermError("the constant term 1 has no largest variable")

    def divides(self, other: Sequence[int]) -> bool:
        _check_same_ring(self, other)
        return all(a <= b for a, b in zip(self, other))

    def __mul__(self, other):
        if isinstance(other, tuple):
            _check_same_ring(self, other)
            return Term(a + b for a, b in zip(self, other))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, tuple):
            _check_same_ring(self, other)
            q = tuple(a - b for a, b in zip(self, other))
            if any(e < 0 for e in q):
                raise ValueError(f"{format_term(other)} does not divide {self}")
            return Term(q)
        return NotImplemented

    def lcm(self, other: Sequence[int]) -> "Term":
        _check_same_ring(self, other)
        return Term(max(a, b) for a, b in zip(self, other))

    def drop(self, *indices: int) -> "Term":
        """Set the listed variables to 1."""
        return Term(0 if i in indices else e for i, e in enumerate(self))

    def pad(self, n: int) -> "Term":
        """The same term seen in K[x0..xn], n >= self.n."""
        return Term(tuple(self) + (0,) * (n - self.n))

    def __str__(self) -> str:
        return format_term(self)

    def __repr__(self) -> str:
        return f"Term({format_term(self)!r}, n={self.n})"


def _check_same_ring(a, b):
    if len(a) != len(b):
        raise DimensionError(f"terms in different rings: {len(a)} vs {len(b)} variables")


def variable(i: int, n: int) -> Term:
    e = [0] * (n + 1)
    e[i] = 1
    return Term(e)


def format_term(t: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(t):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_term(text: str, n: int | None = None) -> Term:
    """Parse ``x1^3*x2`` (or ``1``).  ``n`` fixes the ambient ring."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty term", text, 0)
    if s == "1":
        if n is None:
            raise ParseError("the constant term needs an explicit ring size", text, 0)
        return Term.one(n)
    exps: dict[int, int] = {}
    pos = 0
    for k, chunk in enumerate(s.split("*")):
        m = _FACTOR.fullmatch(chunk)
        if not m:
            raise ParseError(f"bad factor {chunk!r}", text, pos)
        i = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        if e <= 0:
            raise ParseError("exponents must be positive", text, pos)
        exps[i] = exps.get(i, 0) + e
        pos += len(chunk) + 1
    top = max(exps)
    if n is None:
        n = top
    elif top > n:
        raise DimensionError(f"x{top} does not exist in K[x0..x{n}]")
    return Term(exps.get(i, 0) for i in range(n + 1))


# ---------------------------------------------------------------- orders

@dataclass(frozen=True)
class TermOrder:
    """A graded term order.

    ``kind`` is ``"lex"``, ``"revlex"`` or ``"weighted"``.  For weighted orders
    ``weights`` is listed from the LARGEST variable down, so ``(4, 2, 1)`` in
    three variables means w(x2)=4, w(x1)=2, w(x0)=1; ties are broken by the
    graded lex order.
    """

    kind: str
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "revlex", "weighted"):
            raise ValueError(f"unknown term order {self.kind!r}")
        if self.kind == "weighted":
            if not self.weights or any(int(w) <= 0 for w in self.weights):
                raise ValueError("weights must be positive integers")
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        elif self.weights is not None:
            raise ValueError(f"{self.kind} takes no weights")

    @classmethod
    def weighted(cls, weights: Sequence[int]) -> "TermOrder":
        return cls("weighted", tuple(weights))

    @property
    def name(self) -> str:
        if self.kind == "weighted":
            return "w:" + ",".join(str(w) for w in self.weights)
        return self.kind

    def weight_of(self, t: Sequence[int]) -> int:
        w = self.weights
        if len(w) != len(t):
            raise DimensionError(f"order {self.name} has {len(w)} weights, term has {len(t)} variables")
        # weights[0] belongs to the largest variable
        return sum(w[len(t) - 1 - i] * e for i, e in enumerate(t))

    def key(self, t: Sequence[int]) -> tuple:
        """Sort key: ``key(a) < key(b)`` iff a precedes b."""
        deg = sum(t)
        if self.kind == "lex":
            return (deg,) + tuple(reversed(t))
        if self.kind == "revlex":
            return (deg,) + tuple(-e for e in t)
        return (self.weight_of(t), deg) + tuple(reversed(t))

    def predecessor(self, t: Sequence[int]):
        """The next smaller term of the same degree, None for the smallest.

        Only lex and revlex have a closed form; weighted orders raise ValueError.
        """
        e = list(t)
        if self.kind == "lex":
            # compositions (a_n, ..., a_0) in lex order: lower the last movable entry
            # and push everything after it into the next slot
            for i in range(1, len(e)):
                if e[i]:
                    rest = sum(e[:i])
                    e[i] -= 1
                    e[:i] = [0] * i
                    e[i - 1] = rest + 1
                    return Term(e)
            return None
        if self.kind == "revlex":
            j = max((i for i, x in enumerate(e) if x), default=0)
            if j == 0:
                return None
            rest = sum(e[j:])
            e[j - 1] += 1
            e[j:] = [0] * (len(e) - j)
            e[-1] = rest - 1
            return Term(e)
        raise ValueError(f"no closed-form predecessor for {self.name}")

    def sorted(self, terms: Iterable[Term], descending: bool = False) -> list:
        return sorted(terms, key=self.key, reverse=descending)

    def __str__(self) -> str:
        return self.name


LEX = TermOrder("lex")
REVLEX = TermOrder("revlex")


def parse_order(spec: str) -> TermOrder:
    """``lex``, ``revlex`` or ``w:4,2,1`` (weights from the largest variable down)."""
    s = spec.strip().lower()
    if s in ("lex", "revlex"):
        return TermOrder(s)
    if s.startswith("w:"):
        body = s[2:].strip().strip("()")
        try:
            ws = tuple(int(x) for x in body.split(","))
        except ValueError:
            raise ParseError(f"bad weight list {body!r}", spec, 2) from None
        return TermOrder.weighted(ws)
    raise ParseError(f"unknown order {spec!r}", spec, 0)


def compare(a: Sequence[int], b: Sequence[int], order: TermOrder) -> int:
    """-1, 0 or 1 as a precedes, equals or follows b."""
    _check_same_ring(a, b)
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------- moves

def e_plus(t: Sequence[int], j: int) -> Term:
    n = len(t) - 1
    if not 0 <= j <= n - 1 or t[j] == 0:
        raise MoveError(f"e_{j}^+ not applicable to {format_term(t)}")
    e = list(t)
    e[j] -= 1
    e[j + 1] += 1
    return Term(e)


def e_minus(t: Sequence[int], j: int) -> Term:
    n = len(t) - 1
    if not 1 <= j <= n or t[j] == 0:
        raise MoveError(f"e_{j}^- not applicable to {format_term(t)}")
    e = list(t)
    e[j] -= 1
    e[j - 1] += 1
    return Term(e)


def elementary_move(t: Sequence[int], j: int, direction: str) -> Term:
    if direction == "+":
        return e_plus(t, j)
    if direction == "-":
        return e_minus(t, j)
    raise ValueError("direction must be '+' or '-'")


def up_moves(t: Sequence[int]):
    """All e_j^+(t)."""
    return [e_plus(t, j) for j in range(len(t) - 1) if t[j]]


def down_moves(t: Sequence[int]):
    """All e_j^-(t)."""
    return [e_minus(t, j) for j in range(1, len(t)) if t[j]]


def borel_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """a <=_B b: a is reachable from b by moves e_j^-.

    Uses the suffix-sum criterion: sum_{j>=i} a_j <= sum_{j>=i} b_j for all i.
    """
    _check_same_ring(a, b)
    if sum(a) != sum(b):
        raise IncomparableError("Borel order compares terms of equal degree only")
    sa = sb = 0
    for i in range(len(a) - 1, -1, -1):
        sa += a[i]
        sb += b[i]
        if sa > sb:
            return False
    return True


# ---------------------------------------------------------------- degree slices

@lru_cache(maxsize=None)
def _all_terms(n: int, t: int) -> tuple:
    out = []
    for combo in itertools.combinations_with_replacement(range(n + 1), t):
        e = [0] * (n + 1)
        for i in combo:
            e[i] += 1
        out.append(Term(e))
    return tuple(out)


@lru_cache(maxsize=256)
def terms_array(n: int, t: int) -> np.ndarray:
    """Exponent matrix of all degree-t terms, rows in the order of ``all_terms``."""
    arr = np.array(_all_terms(n, t), dtype=np.int64).reshape(-1, n + 1)
    arr.setflags(write=False)
    return arr


def all_terms(n: int, t: int) -> tuple:
    """All degree-t terms of K[x0..xn] in a fixed (generation) order."""
    if n < 0 or t < 0:
        raise OutOfRangeError("n and t must be nonnegative")
    return _all_terms(n, t)


def terms_of_degree(n: int, t: int, order: TermOrder = REVLEX) -> list:
    """All C(n+t, t) terms of degree t, sorted descending under ``order``."""
    return order.sorted(all_terms(n, t), descending=True)


def _revlex_smallest(lo: int, n: int, j: int, count: int) -> list:
    """The ``count`` revlex-smallest degree-j terms in x_lo..x_n, ascending.

    Degree-j terms split into blocks x_i * {tau in T_{j-1} : min(tau) >= i},
    i = lo..n, listed in increasing revlex order; full blocks are taken whole
    and the last one partially, recursively.
    """
    width = n + 1
    if count <= 0:
        return []
    if j == 0:
        return [Term((0,) * width)]
    out = []
    remaining = count
    for i in range(lo, n + 1):
        size = comb(j - 1 + n - i, j - 1)
        take = min(size, remaining)
        for tau in _revlex_smallest(i, n, j - 1, take):
            e = list(tau)
            e[i] += 1
            out.append(Term(e))
        remaining -= take
        if remaining == 0:
            break
    return out


def revlex_block_split(n: int, j: int, omega: int) -> tuple[int, int]:
    """(gamma(omega), beta(omega)): number of full blocks minus one, and the partial count."""
    total = 0
    for t in range(n + 1):
        nxt = total + comb(j - 1 + n - t, j - 1)
        if omega <= nxt:
            return t - 1, omega - total
        total = nxt
    raise OutOfRangeError(f"omega={omega} exceeds C(n+j, j)")


def revlex_tail(n: int, j: int, omega: int) -> frozenset:
    """The omega revlex-smallest terms of degree j (the set Lambda_{omega, j})."""
    if j < 1 or not 1 <= omega <= comb(n + j, j) - 1:
        raise OutOfRangeError(f"omega must lie in 1..{comb(n + j, j) - 1 if j >= 0 else 0}, got {omega}")
    gamma, beta = revlex_block_split(n, j, omega)
    out = []
    for i in range(gamma + 1):
        for tau in _revlex_smallest(i, n, j - 1, comb(j - 1 + n - i, j - 1)):
            e = list(tau)
            e[i] += 1
            out.append(Term(e))
    for tau in _revlex_smallest(gamma + 1, n, j - 1, beta):
        e = list(tau)
        e[gamma + 1] += 1
        out.append(Term(e))
    return frozenset(out)


def revlex_smallest(n: int, j: int, count: int) -> list:
    """The ``count`` revlex-smallest degree-j terms in ascending order."""
    return _revlex_smallest(0, n, j, count)
