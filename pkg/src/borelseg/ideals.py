"""Monomial and Borel ideals.

An ideal is stored by its minimal generators, kept in the canonical order
(degree ascending, then revlex descending).  The unit ideal has the single
generator 1 and the zero ideal has none.
"""

from __future__ import annotations

import re
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import _accel
from .errors import DimensionError, DomainError, InternalConsistencyError, ParseError, ValidationError
from .monomials import Term, all_terms, e_minus, e_plus, format_term, parse_term, terms_array
from .polynomials import Polynomial, binomial_poly, polynomial_from_values

__all__ = [
    "MonomialIdeal",
    "BorelIdeal",
    "canonical_key",
    "parse_ideal",
    "borel_witness",
    "is_borel",
    "is_borel_set",
    "hilbert_function",
    "hilbert_polynomial",
    "regularity",
    "krull_dimension",
    "saturate",
    "x1_saturate",
    "expand_sous_escalier",
    "lambda_count",
    "new_generators_at",
    "minimal_elements",
    "maximal_outside",
    "truncate",
    "borel_closure_down",
]


# above this many terms of a degree, N(I)_t is grown from N(I)_{t-1}
_DIRECT_LIMIT = 20000
# generator lists longer than this go through the array kernels
_SMALL = 32


def canonical_key(t: Sequence[int]) -> tuple:
    """Degree ascending, then revlex descending."""
    return (sum(t),) + tuple(t)


def _minimalize(gens: Iterable[Sequence[int]]) -> tuple:
    cand = sorted(set(gens), key=canonical_key)
    if len(cand) > _SMALL:
        mask = _accel.minimal_mask(cand, len(cand[0]))
        return tuple(g if isinstance(g, Term) else Term(g) for g, m in zip(cand, mask) if m)
    out: list[Term] = []
    for g in cand:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g if isinstance(g, Term) else Term(g))
    return tuple(out)


class MonomialIdeal:
    """Monomial ideal of K[x0..xn] given by generators (minimalized on construction)."""

    __slots__ = ("n", "gens", "_hash", "_outside")

    def __init__(self, n: int, gens: Iterable[Sequence[int]] = ()):
        gens = list(gens)
        for g in gens:
            if len(g) != n + 1:
                raise DimensionError(f"generator {format_term(g)} has {len(g)} exponents, expected {n + 1}")
        self.n = n
        self.gens = _minimalize(gens)
        self._hash = hash((n, self.gens))
        self._outside = {}

    @classmethod
    def unit(cls, n: int):
        return cls(n, [Term.one(n)])

    @classmethod
    def zero(cls, n: int):
        return cls(n, [])

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.n, [canonical_key(g) for g in self.gens])

    def __contains__(self, t: Sequence[int]) -> bool:
        if len(t) != self.n + 1:
            raise DimensionError("term and ideal live in different rings")
        return any(all(a <= b for a, b in zip(g, t)) for g in self.gens)

    def contains(self, t: Sequence[int]) -> bool:
        return t in self

    def generators_of_degree(self, t: int) -> tuple:
        return tuple(g for g in self.gens if g.degree == t)

    @property
    def initial_degree(self) -> int:
        if self.is_zero:
            raise DomainError("the zero ideal has no initial degree")
        return self.gens[0].degree

    def degree_slice(self, t: int) -> frozenset:
        """I_t as a set of terms."""
        terms = all_terms(self.n, t)
        if not self.gens:
            return frozenset()
        mask = _accel.divisible_mask(terms_array(self.n, t), self.gens, self.n + 1)
        return frozenset(u for u, m in zip(terms, mask) if m)

    def sous_escalier(self, t: int) -> frozenset:
        """N(I)_t = T_t minus I_t."""
        if t < 0:
            return frozenset()
        if not self.gens:
            return frozenset(all_terms(self.n, t))
        N = self._outside.get(t)
        if N is not None:
            return N
        if comb(self.n + t, t) <= _DIRECT_LIMIT or t == 0:
            terms = all_terms(self.n, t)
            mask = _accel.divisible_mask(terms_array(self.n, t), self.gens, self.n + 1)
            N = frozenset(u for u, m in zip(terms, mask) if not m)
        else:
            # N is closed under division, so N_t sits inside x_i * N_{t-1}
            below = self.sous_escalier(t - 1)
            cand = sorted({Term(u[:i] + (u[i] + 1,) + u[i + 1:]) for u in below for i in range(self.n + 1)})
            if cand:
                arr = np.array(cand, dtype=np.int64).reshape(len(cand), self.n + 1)
                mask = _accel.divisible_mask(arr, self.gens, self.n + 1)
                N = frozenset(u for u, m in zip(cand, mask) if not m)
            else:
                N = frozenset()
        self._outside[t] = N
        return N

    def hilbert_function(self, t: int) -> int:
        if t < 0:
            return 0
        if not self.gens:
            return comb(self.n + t, t)
        if t in self._outside or comb(self.n + t, t) > _DIRECT_LIMIT:
            return len(self.sous_escalier(t))
        return _accel.count_outside(terms_array(self.n, t), self.gens, self.n + 1)

    def pad(self, n: int) -> "MonomialIdeal":
        """The ideal generated by the same terms in K[x0..xn], n >= self.n."""
        return type(self)(n, [g.pad(n) for g in self.gens])

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, obj: dict):
        return cls(int(obj["n"]), [Term(g) for g in obj["generators"]])

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_term(g) for g in self.gens) + ")"

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, {self})"


class BorelIdeal(MonomialIdeal):
    """A monomial ideal validated to be Borel (strongly stable)."""

    __slots__ = ()

    def __init__(self, n: int, gens: Iterable[Sequence[int]] = ()):
        super().__init__(n, gens)
        w = borel_witness(self)
        if w is not None:
            g, j = w
            raise ValidationError(f"{self} is not Borel: e_{j}^+({format_term(g)}) is not in the ideal")

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal) -> "BorelIdeal":
        if isinstance(ideal, BorelIdeal):
            return ideal
        return cls(ideal.n, ideal.gens)


def parse_ideal(text: str, n: int | None = None, borel: bool = False) -> MonomialIdeal:
    """Parse ``x3^2, x2*x3, x2^2``.  ``0`` is the zero ideal, ``1`` the unit ideal."""
    s = text.strip().strip("()")
    parts = [p for p in re.split(r"\s*,\s*", s.strip()) if p]
    if not parts:
        raise ParseError("empty ideal", text, 0)
    if parts == ["0"]:
        if n is None:
            raise ParseError("the zero ideal needs an explicit ring size", text, 0)
        return (BorelIdeal if borel else MonomialIdeal)(n, [])
    if n is None:
        if any(p == "1" for p in parts):
            raise ParseError("the constant term needs an explicit ring size", text, 0)
        n = max(parse_term(p).n for p in parts)
    gens = []
    pos = 0
    for p in parts:
        try:
            gens.append(parse_term(p, n))
        except ParseError as exc:
            raise ParseError(f"bad generator {p!r}", text, text.find(p, pos)) from exc
        pos = text.find(p, pos) + len(p)
    return (BorelIdeal if borel else MonomialIdeal)(n, gens)


# ---------------------------------------------------------------- Borel tests

def borel_witness(ideal: MonomialIdeal):
    """First (g, j) in canonical order with x_j | g and e_j^+(g) outside the ideal, or None."""
    moves = [(g, j) for g in ideal.gens for j in range(ideal.n) if g[j]]
    if len(ideal.gens) > _SMALL:
        width = ideal.n + 1
        mask = _accel.divisible_mask([e_plus(g, j) for g, j in moves], ideal.gens, width)
        for (g, j), inside in zip(moves, mask):
            if not inside:
                return g, j
        return None
    for g, j in moves:
        if e_plus(g, j) not in ideal:
            return g, j
    return None


def is_borel(ideal: MonomialIdeal) -> bool:
    return borel_witness(ideal) is None


def is_borel_set(B: Iterable[Sequence[int]]) -> bool:
    """A set of same-degree terms closed under the moves e_j^+."""
    B = set(B)
    for u in B:
        for j in range(len(u) - 1):
            if u[j] and e_plus(u, j) not in B:
                return False
    return True


def _require_borel(ideal: MonomialIdeal):
    if isinstance(ideal, BorelIdeal):
        return
    w = borel_witness(ideal)
    if w is not None:
        raise ValidationError(f"{ideal} is not Borel (e_{w[1]}^+({format_term(w[0])}) missing)")


# ---------------------------------------------------------------- numerical invariants

def hilbert_function(ideal: MonomialIdeal, t: int) -> int:
    return ideal.hilbert_function(t)


def regularity(ideal: MonomialIdeal) -> int:
    """Castelnuovo-Mumford regularity of a Borel ideal: the top generator degree."""
    if ideal.is_zero:
        raise DomainError("the zero ideal has no regularity")
    _require_borel(ideal)
    return max(g.degree for g in ideal.gens)


def hilbert_polynomial(ideal: MonomialIdeal) -> Polynomial:
    """Hilbert polynomial of S/J for Borel J, by interpolation from degree reg(J) on."""
    _require_borel(ideal)
    n = ideal.n
    if ideal.is_zero:
        return binomial_poly(n, n)
    if ideal.is_unit:
        return Polynomial()
    reg = regularity(ideal)
    p = polynomial_from_values(reg, [ideal.hilbert_function(t) for t in range(reg, reg + n + 1)])
    for t in range(reg + n + 1, reg + n + 4):
        if p(t) != ideal.hilbert_function(t):
            raise InternalConsistencyError(f"Hilbert function of {ideal} not polynomial from degree {reg}")
    return p


def krull_dimension(ideal: MonomialIdeal) -> int:
    """min{i : some power of x_i lies in J} for Borel J; n+1 if there is none."""
    _require_borel(ideal)
    best = ideal.n + 1
    for g in ideal.gens:
        if g.is_one:
            return 0
        if g.min_index == g.max_index:
            best = min(best, g.min_index)
    return best


def saturate(ideal: MonomialIdeal, borel: bool = True) -> BorelIdeal:
    """J^sat for Borel J: set x0 = 1 in the generators."""
    if not borel:
        raise DomainError("saturation is only implemented for Borel ideals")
    _require_borel(ideal)
    return BorelIdeal(ideal.n, [g.drop(0) for g in ideal.gens])


def x1_saturate(ideal: MonomialIdeal):
    """(J^{x1-sat}, q): set x0 = x1 = 1; q is the sum of x1-exponents over G(J^sat)."""
    _require_borel(ideal)
    if ideal.n < 1:
        raise DimensionError("x1-saturation needs at least two variables")
    sat = saturate(ideal)
    q = sum(g[1] for g in sat.gens)
    return BorelIdeal(ideal.n, [g.drop(0, 1) for g in ideal.gens]), q


def is_saturated(ideal: MonomialIdeal) -> bool:
    """For Borel ideals: no minimal generator involves x0."""
    return all(g[0] == 0 for g in ideal.gens)


# ---------------------------------------------------------------- degree slices

def _min_index(u: Sequence[int], n: int) -> int:
    for i, e in enumerate(u):
        if e:
            return i
    return n + 1  # the term 1 counts as divisible by nothing


def lambda_count(N: Iterable[Sequence[int]], i: int) -> int:
    """Number of terms of N whose smallest variable is x_i or larger."""
    out = 0
    for u in N:
        if _min_index(u, len(u) - 1) >= i:
            out += 1
    return out


def _check_down_closed(N: set, what: str):
    for u in N:
        for j in range(1, len(u)):
            if u[j] and e_minus(u, j) not in N:
                raise ValidationError(f"the complement of {what} is not a Borel set")


def expand_sous_escalier(N: Iterable[Sequence[int]], n: int | None = None, include_top: bool = False) -> frozenset:
    """x0 N + x1 {min >= 1} + ... + x_{n-1} {min >= n-1}.

    This is N(J)_{t+1} when T_t minus N is the Borel slice J_t and J has
    x_n^{t+1}.  With ``include_top`` the x_n block is added as well, which
    gives N of the ideal generated by T_t minus N.
    """
    N = set(N)
    if not N:
        return frozenset()
    if n is None:
        n = len(next(iter(N))) - 1
    _check_down_closed(N, "N")
    top = n if include_top else n - 1
    out = set()
    for u in N:
        m = _min_index(u, n)
        for i in range(0, min(m, top) + 1):
            e = list(u)
            e[i] += 1
            out.add(Term(e))
    return frozenset(out)


def new_generators_at(ideal: MonomialIdeal, t: int) -> frozenset:
    """G(J)_{t+1} as N(J_{<=t})_{t+1} minus N(J)_{t+1}."""
    _require_borel(ideal)
    before = expand_sous_escalier(ideal.sous_escalier(t), ideal.n, include_top=True)
    return frozenset(before - ideal.sous_escalier(t + 1))


def minimal_elements(B: Iterable[Sequence[int]]) -> frozenset:
    """Terms u of the Borel set B with every e_j^-(u) outside B."""
    B = set(B)
    if not is_borel_set(B):
        raise ValidationError("not a Borel set")
    out = []
    for u in B:
        if all(not u[j] or e_minus(u, j) not in B for j in range(1, len(u))):
            out.append(u)
    return frozenset(out)


def maximal_outside(B: Iterable[Sequence[int]], n: int, t: int) -> frozenset:
    """Terms v of degree t outside B with every e_j^+(v) in B."""
    B = set(B)
    if not is_borel_set(B):
        raise ValidationError("not a Borel set")
    out = []
    for v in all_terms(n, t):
        if v in B:
            continue
        if all(not v[j] or e_plus(v, j) in B for j in range(n)):
            out.append(v)
    return frozenset(out)


def borel_closure_down(N: Iterable[Sequence[int]]) -> frozenset:
    """Closure of a set of same-degree terms under the moves e_j^-."""
    out = set(N)
    stack = list(out)
    while stack:
        u = stack.pop()
        for j in range(1, len(u)):
            if u[j]:
                v = e_minus(u, j)
                if v not in out:
                    out.add(v)
                    stack.append(v)
    return frozenset(out)


def truncate(ideal: MonomialIdeal, m: int) -> MonomialIdeal:
    """I_{>=m}: generated by I_m and the generators of degree above m."""
    if m <= 0:
        return ideal
    gens = list(ideal.degree_slice(m)) + [g for g in ideal.gens if g.degree > m]
    return type(ideal)(ideal.n, gens)
