"""Groebner strata of monomial ideals and their embedding dimension.

For a monomial ideal J and a term order, every minimal generator x^a gets a
generic tail F_a = x^a + sum c_{ab} x^b over the terms x^b outside J (of the
same degree, for the homogeneous stratum) with x^b < x^a.  Reducing all
S-polynomials S(F_a, F_a') and collecting the x-coefficients of the
remainders gives polynomials in the c's generating A(J).  The tangent space
of the stratum at J is cut out by their linear parts.

Coefficients are sparse integer polynomials in the c's: a dict from a sorted
tuple of variable indices (with repetition) to an integer.  In the default
``linear`` mode every product is truncated modulo the square of the ideal
(c); that is a ring map, so the linear parts of the relations come out
exactly, and it keeps the reduction cheap.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .errors import DomainError, StratumTooLarge, ValidationError
from .ideals import MonomialIdeal, hilbert_polynomial, truncate
from .monomials import REVLEX, Term, TermOrder, format_term

__all__ = [
    "CoeffVar",
    "Stratum",
    "build_homogeneous_stratum",
    "build_stratum",
    "embedding_dimension",
    "bareiss_rank",
    "script_B",
    "truncation_hint",
    "Verdict",
    "singularity_certificate",
    "decide_singularity",
    "MAX_VARS",
    "MAX_PAIRS",
]

MAX_VARS = 2000
MAX_PAIRS = 100_000


@dataclass(frozen=True)
class CoeffVar:
    alpha: Term
    beta: Term

    def __str__(self):
        return f"c[{format_term(self.alpha)},{format_term(self.beta)}]"


@dataclass
class Stratum:
    ideal: MonomialIdeal
    order: TermOrder
    vars: list
    relations: list  # coefficient polynomials, {monomial tuple: int}
    linear_rows: list  # {var index: int}, one per relation with nonzero linear part
    linear_rank: int
    homogeneous: bool = True
    mode: str = "linear"

    @property
    def embedding_dimension(self) -> int:
        return len(self.vars) - self.linear_rank

    def linear_matrix(self) -> list:
        """Distinct nonzero linear rows as dense integer lists."""
        seen = set()
        out = []
        for row in self.linear_rows:
            key = tuple(sorted(row.items()))
            if key in seen:
                continue
            seen.add(key)
            dense = [0] * len(self.vars)
            for j, c in row.items():
                dense[j] = c
            out.append(dense)
        return out

    def to_json(self) -> dict:
        return {
            "ideal": self.ideal.to_json(),
            "order": self.order.name,
            "homogeneous": self.homogeneous,
            "vars": [[format_term(v.alpha), format_term(v.beta)] for v in self.vars],
            "linear_matrix": [[str(Fraction(c)) for c in row] for row in self.linear_matrix()],
            "rank": self.linear_rank,
            "ed": self.embedding_dimension,
        }


# ---------------------------------------------------------------- coefficient arithmetic

def _add_into(target: dict, src: dict, scale: int, cap):
    for mono, c in src.items():
        if cap is not None and len(mono) > cap:
            continue
        v = target.get(mono, 0) + scale * c
        if v:
            target[mono] = v
        else:
            target.pop(mono, None)


def _times_var(coef: dict, var: int, cap) -> dict:
    out = {}
    for mono, c in coef.items():
        if cap is not None and len(mono) + 1 > cap:
            continue
        new = tuple(sorted(mono + (var,)))
        out[new] = out.get(new, 0) + c
    return out


# ---------------------------------------------------------------- construction

def _tails(J: MonomialIdeal, order: TermOrder, homogeneous: bool) -> list:
    out = []
    cache = {}
    for a in J.gens:
        ka = order.key(a)
        degrees = [a.degree] if homogeneous else range(a.degree + 1)
        tail = []
        for t in degrees:
            if t not in cache:
                cache[t] = J.sous_escalier(t)
            tail.extend(b for b in cache[t] if order.key(b) < ka)
        tail.sort(key=order.key, reverse=True)
        out.append(tail)
    return out


def build_stratum(
    J: MonomialIdeal,
    order: TermOrder = REVLEX,
    homogeneous: bool = True,
    mode: str = "linear",
    strategy: str = "first",
    max_vars: int = MAX_VARS,
    max_pairs: int = MAX_PAIRS,
) -> Stratum:
    """Build the Groebner stratum of J.

    ``mode`` is ``linear`` (relations modulo (c)^2) or ``full``.  ``strategy``
    fixes the reduction choices: ``first`` processes S-pairs in ascending
    (degree, pair) order and reduces by the first dividing generator;
    ``reverse`` walks the pairs backwards and uses the last dividing generator.
    """
    if J.is_zero or J.is_unit:
        raise DomainError("the stratum needs a proper nonzero ideal")
    if mode not in ("linear", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    if strategy not in ("first", "reverse"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if order.kind == "weighted" and len(order.weights) != J.n + 1:
        raise ValidationError(f"order {order.name} needs {J.n + 1} weights")
    cap = 1 if mode == "linear" else None
    gens = list(J.gens)
    tails = _tails(J, order, homogeneous)
    nvars = sum(len(t) for t in tails)
    npairs = len(gens) * (len(gens) - 1) // 2
    if nvars > max_vars or npairs > max_pairs:
        raise StratumTooLarge(
            f"{nvars} coefficient variables and {npairs} S-pairs exceed the limits "
            f"({max_vars}, {max_pairs}); try a smaller truncation degree (see truncation_hint)"
        )
    cvars = []
    F = []  # per generator: list of (tail term, variable index)
    for a, tail in zip(gens, tails):
        row = []
        for b in tail:
            row.append((b, len(cvars)))
            cvars.append(CoeffVar(a, b))
        F.append(row)

    reducer_cache = {}

    def reducer(u):
        if u not in reducer_cache:
            hits = [i for i, g in enumerate(gens) if all(x <= y for x, y in zip(g, u))]
            reducer_cache[u] = (hits[0] if strategy == "first" else hits[-1]) if hits else None
        return reducer_cache[u]

    key = order.key

    def reduce(P: dict) -> dict:
        heap = [(_neg(key(u)), u) for u in P]
        heapq.heapify(heap)
        done = set()
        while heap:
            _, u = heapq.heappop(heap)
            if u in done:
                continue
            done.add(u)
            coef = P.get(u)
            if not coef:
                P.pop(u, None)
                continue
            i = reducer(u)
            if i is None:
                continue
            del P[u]
            shift = tuple(x - y for x, y in zip(u, gens[i]))
            for b, v in F[i]:
                w = Term(x + y for x, y in zip(shift, b))
                tgt = P.setdefault(w, {})
                _add_into(tgt, _times_var(coef, v, cap), -1, cap)
                if not tgt:
                    del P[w]
                if w not in done:
                    heapq.heappush(heap, (_neg(key(w)), w))
        return P

    pairs = [(i, j) for i in range(len(gens)) for j in range(i + 1, len(gens))]
    pairs.sort(key=lambda ij: (gens[ij[0]].lcm(gens[ij[1]]).degree, ij))
    if strategy == "reverse":
        pairs.reverse()

    relations = []
    for i, j in pairs:
        a, b = gens[i], gens[j]
        lcm = a.lcm(b)
        P: dict = {}
        for sign, idx, g in ((1, i, a), (-1, j, b)):
            shift = tuple(x - y for x, y in zip(lcm, g))
            for t, v in F[idx]:
                w = Term(x + y for x, y in zip(shift, t))
                tgt = P.setdefault(w, {})
                _add_into(tgt, {(v,): 1}, sign, cap)
                if not tgt:
                    del P[w]
        for coef in reduce(P).values():
            if coef:
                relations.append(coef)

    rows = []
    for coef in relations:
        row = {m[0]: c for m, c in coef.items() if len(m) == 1}
        if row:
            rows.append(row)
    rank = bareiss_rank([_dense(r, len(cvars)) for r in _distinct(rows)])
    return Stratum(J, order, cvars, relations, rows, rank, homogeneous, mode)


def build_homogeneous_stratum(J: MonomialIdeal, order: TermOrder = REVLEX, **kw) -> Stratum:
    return build_stratum(J, order, homogeneous=True, **kw)


def _neg(k):
    return tuple(-x for x in k)


def _distinct(rows):
    seen = set()
    out = []
    for r in rows:
        k = tuple(sorted(r.items()))
        if k not in seen:
            seen.add(k)
            out.append(r)
    return out


def _dense(row: dict, width: int) -> list:
    out = [0] * width
    for j, c in row.items():
        out[j] = c
    return out


def bareiss_rank(rows: list) -> int:
    """Rank of an integer (or rational) matrix by fraction-free elimination."""
    M = [list(r) for r in rows if any(r)]
    if not M:
        return 0
    # clear denominators row by row
    for k, r in enumerate(M):
        if any(isinstance(x, Fraction) and x.denominator != 1 for x in r):
            den = 1
            for x in r:
                den = den * Fraction(x).denominator // _gcd(den, Fraction(x).denominator)
            M[k] = [int(Fraction(x) * den) for x in r]
        else:
            M[k] = [int(x) for x in r]
    nrows, ncols = len(M), len(M[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if M[i][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][col]
        for i in range(rank + 1, nrows):
            a = M[i][col]
            Mi, Mr = M[i], M[rank]
            for j in range(col, ncols):
                Mi[j] = (p * Mi[j] - a * Mr[j]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def embedding_dimension(st: Stratum) -> int:
    return len(st.vars) - st.linear_rank


# ---------------------------------------------------------------- points

def _constant_degree(J: MonomialIdeal) -> int:
    p = hilbert_polynomial(J)
    if p.degree != 0:
        raise DomainError(f"{J} has non-constant Hilbert polynomial {p}")
    return p.at(0)


def script_B(J: MonomialIdeal) -> frozenset:
    """{x^b in N(J)_d : x1 x^b in J} for J with constant Hilbert polynomial d."""
    d = _constant_degree(J)
    if J.n < 1:
        raise DomainError("need at least two variables")
    out = []
    for b in J.sous_escalier(d):
        e = list(b)
        e[1] += 1
        if Term(e) in J:
            out.append(b)
    return frozenset(out)


def truncation_hint(J: MonomialIdeal) -> int:
    """Largest degree of a minimal generator involving x1, 0 if there is none."""
    return max((g.degree for g in J.gens if J.n >= 1 and g[1]), default=0)


class Verdict(str, Enum):
    SINGULAR = "singular"
    INCONCLUSIVE = "inconclusive"


def singularity_certificate(J: MonomialIdeal, n: int, d: int) -> Verdict:
    """Singular when |G(J)| |B| > nd, Inconclusive otherwise."""
    if len(J.gens) * len(script_B(J)) > n * d:
        return Verdict.SINGULAR
    return Verdict.INCONCLUSIVE


@dataclass(frozen=True)
class SingularityReport:
    verdict: Verdict
    method: str  # "certificate", "ed" or "none"
    product: int
    bound: int
    ed: Optional[int] = None
    truncation: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "method": self.method,
            "product": self.product,
            "bound": self.bound,
            "ed": self.ed,
            "truncation": self.truncation,
        }


def decide_singularity(J: MonomialIdeal, order: TermOrder) -> SingularityReport:
    """Certificate first; when inconclusive compare ed of the stratum of J_{>=m} with nd."""
    d = _constant_degree(J)
    n = J.n
    product = len(J.gens) * len(script_B(J))
    if product > n * d:
        return SingularityReport(Verdict.SINGULAR, "certificate", product, n * d)
    m = max(truncation_hint(J), J.initial_degree)
    ed = build_stratum(truncate(J, m), order).embedding_dimension
    if ed > n * d:
        return SingularityReport(Verdict.SINGULAR, "ed", product, n * d, ed, m)
    return SingularityReport(Verdict.INCONCLUSIVE, "none", product, n * d, ed, m)
