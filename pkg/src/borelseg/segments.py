"""Segment ideals with respect to a term order.

J is a segment at degree t when J_t is an upper set of T_t; it is a
hilb-segment (resp. reg-segment) when this holds at the Gotzmann number of
its Hilbert polynomial (resp. at its regularity), and a gen-segment when each
G(J)_s consists of the greatest terms of degree s not already in the ideal
generated in lower degrees.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import comb
from typing import Optional

from .errors import DomainError, InternalConsistencyError, ValidationError
from .ideals import (
    BorelIdeal,
    MonomialIdeal,
    borel_witness,
    hilbert_polynomial,
    is_borel_set,
    is_saturated,
    lambda_count,
    regularity,
    saturate,
)
from .monomials import LEX, REVLEX, Term, TermOrder, all_terms, format_term, revlex_smallest, revlex_tail, variable
from .polynomials import Polynomial, gotzmann_number

__all__ = [
    "SegmentReport",
    "segment_witness_at",
    "is_segment_at",
    "classify",
    "no_order_witness",
    "lex_segment_ideal",
    "revlex_segment_constant",
    "hilb_segment_for",
    "find_jn",
    "gen_segment_revlex_jn",
    "gen_segment_revlex_ln",
    "extend_by_variables",
    "is_gen_segment",
]


# ---------------------------------------------------------------- degreewise test

def segment_witness_at(J: MonomialIdeal, t: int, order: TermOrder):
    """None if J_t is an upper set of T_t, else (a, b) with a in J_t, b outside, a < b.

    b is the greatest term outside J_t and a the greatest term of J_t below it.
    """
    outside = J.sous_escalier(t)
    if not outside or len(outside) == comb(J.n + t, t):
        return None
    b = max(outside, key=order.key)
    if order.kind == "weighted":
        kb = order.key(b)
        below = [u for u in J.degree_slice(t) if order.key(u) < kb]
        return (max(below, key=order.key), b) if below else None
    # walk down from b; every step either stays in N(J)_t or stops
    u = order.predecessor(b)
    while u is not None and u in outside:
        u = order.predecessor(u)
    return None if u is None else (u, b)


def is_segment_at(J: MonomialIdeal, t: int, order: TermOrder) -> bool:
    return segment_witness_at(J, t, order) is None


def is_gen_segment(J: MonomialIdeal, order: TermOrder) -> bool:
    """Each G(J)_s is the set of the |G(J)_s| greatest terms of T_s outside (G(J)_{<s})."""
    degrees = sorted({g.degree for g in J.gens})
    for s in degrees:
        new = set(J.generators_of_degree(s))
        lower = MonomialIdeal(J.n, [g for g in J.gens if g.degree < s])
        free = sorted(lower.sous_escalier(s), key=order.key, reverse=True)
        if set(free[: len(new)]) != new:
            return False
    return True


@dataclass(frozen=True)
class SegmentReport:
    order: TermOrder
    is_segment: bool
    is_hilb_segment: bool
    is_reg_segment: bool
    is_gen_segment: bool
    gotzmann: int
    regularity: int
    # failure of the hilb-segment condition: (r, term in J_r, larger term outside J_r)
    witness: Optional[tuple] = None

    def to_json(self) -> dict:
        w = None
        if self.witness is not None:
            t, a, b = self.witness
            w = {"degree": t, "inside": format_term(a), "outside": format_term(b)}
        return {
            "order": self.order.name,
            "segment": self.is_segment,
            "hilb": self.is_hilb_segment,
            "reg": self.is_reg_segment,
            "gen": self.is_gen_segment,
            "gotzmann": self.gotzmann,
            "regularity": self.regularity,
            "witness": w,
        }

    def __str__(self) -> str:
        yes = lambda b: "yes" if b else "no"  # noqa: E731
        lines = [
            f"order       {self.order.name}",
            f"segment     {yes(self.is_segment)}",
            f"hilb        {yes(self.is_hilb_segment)}",
            f"reg         {yes(self.is_reg_segment)}",
            f"gen         {yes(self.is_gen_segment)}",
            f"gotzmann    {self.gotzmann}",
            f"regularity  {self.regularity}",
        ]
        if self.witness is not None:
            t, a, b = self.witness
            lines.append(f"witness     degree {t}: {format_term(a)} in J is below {format_term(b)} outside J")
        return "\n".join(lines)


def classify(J: MonomialIdeal, order: TermOrder) -> SegmentReport:
    """Segment flags of a saturated Borel ideal."""
    w = borel_witness(J)
    if w is not None:
        raise ValidationError(f"{J} is not Borel")
    if not is_saturated(J):
        raise ValidationError(f"{J} is not saturated")
    if J.is_zero or J.is_unit:
        raise ValidationError("classification needs a proper nonzero ideal")
    if order.kind == "weighted" and len(order.weights) != J.n + 1:
        raise ValidationError(f"order {order.name} needs {J.n + 1} weights")
    p = hilbert_polynomial(J)
    r = gotzmann_number(p)
    reg = regularity(J)
    seg = all(is_segment_at(J, t, order) for t in range(0, max(r, reg) + 2))
    w = segment_witness_at(J, r, order)
    hilb = w is None
    witness = None if hilb else (r,) + w
    regs = is_segment_at(J, reg, order)
    gen = is_gen_segment(J, order)
    if (seg and not hilb) or (hilb and not regs) or (regs and not gen):
        raise InternalConsistencyError(f"segment flags of {J} break the implication chain")
    return SegmentReport(order, seg, hilb, regs, gen, r, reg, witness)


# ---------------------------------------------------------------- order-free obstruction

def no_order_witness(J: MonomialIdeal, t_range=None):
    """Search for alpha, beta outside J_t and gamma, delta in J_t with alpha beta = gamma delta.

    Such a quadruple shows J is not a segment for any term order.  Degrees are
    scanned upward; within a degree gamma, delta, alpha run through T_t in
    descending lex order with gamma >= delta and alpha >= beta.  Returns
    (t, alpha, beta, gamma, delta) or None.
    """
    if J.is_zero or J.is_unit:
        return None
    if t_range is None:
        r = gotzmann_number(hilbert_polynomial(J))
        t_range = (J.initial_degree, r)
    lo, hi = t_range
    for t in range(lo, hi + 1):
        inside = sorted(J.degree_slice(t), key=LEX.key, reverse=True)
        outside = sorted(J.sous_escalier(t), key=LEX.key, reverse=True)
        if not inside or not outside:
            continue
        sums = defaultdict(list)
        for i, a in enumerate(outside):
            for b in outside[i:]:
                sums[tuple(x + y for x, y in zip(a, b))].append((a, b))
        for i, g in enumerate(inside):
            for d in inside[i:]:
                hit = sums.get(tuple(x + y for x, y in zip(g, d)))
                if hit:
                    a, b = hit[0]
                    return t, a, b, g, d
    return None


# ---------------------------------------------------------------- constructions

def _check_degree(p: Polynomial, n: int):
    if p.degree >= n:
        raise DomainError(f"deg {p} >= {n}: no proper saturated ideal in K[x0..x{n}]")


def _top_terms(n: int, r: int, count: int, order: TermOrder) -> list:
    terms = sorted(all_terms(n, r), key=order.key, reverse=True)
    return terms[:count]


def lex_segment_ideal(p: Polynomial, n: int) -> BorelIdeal:
    """The saturated lex segment ideal L(p)."""
    _check_degree(p, n)
    r = gotzmann_number(p)
    count = comb(n + r, n) - p.at(r)
    if count <= 0:
        raise DomainError(f"{p} exceeds the Hilbert function of K[x0..x{n}] at {r}")
    J = saturate(BorelIdeal(n, _top_terms(n, r, count, LEX)))
    if hilbert_polynomial(J) != p:
        raise InternalConsistencyError(f"lex segment for {p} has the wrong Hilbert polynomial")
    return J


def revlex_segment_constant(d: int, n: int) -> BorelIdeal:
    """Saturation of the ideal generated by all but the d revlex-smallest terms of degree d."""
    if d < 1 or n < 1:
        raise DomainError("need d >= 1 and n >= 1")
    tail = set(revlex_smallest(n, d, d))
    return saturate(BorelIdeal(n, [u for u in all_terms(n, d) if u not in tail]))


def hilb_segment_for(p: Polynomial, n: int, order: TermOrder) -> Optional[BorelIdeal]:
    """The saturated hilb-segment ideal with Hilbert polynomial p, if there is one."""
    _check_degree(p, n)
    r = gotzmann_number(p)
    count = comb(n + r, n) - p.at(r)
    if count <= 0:
        return None
    cand = _top_terms(n, r, count, order)
    if not is_borel_set(cand):
        return None
    J = saturate(BorelIdeal(n, cand))
    if J.degree_slice(r) != frozenset(cand) or hilbert_polynomial(J) != p:
        return None
    return J


def extend_by_variables(I: MonomialIdeal, n: int) -> BorelIdeal:
    """(I, x_{m+1}, ..., x_n) for I in K[x0..xm]."""
    if n < I.n:
        raise DomainError("cannot extend to fewer variables")
    gens = [g.pad(n) for g in I.gens] + [variable(i, n) for i in range(I.n + 1, n + 1)]
    return BorelIdeal(n, gens)


def _linear_data(p: Polynomial):
    if p.degree != 1:
        raise DomainError(f"{p} is not linear")
    d = p.coeffs[1]
    if d.denominator != 1:
        raise DomainError(f"{p} is not admissible")
    return int(d), gotzmann_number(p)


def find_jn(p: Polynomial, n: int) -> Optional[int]:
    """Smallest j >= 2 with C(j-1+n, n) <= p(j-1) and p(t) < C(t+n, n) for all t >= j."""
    d, r = _linear_data(p)
    for j in range(2, r + 1):
        if comb(j - 1 + n, n) > p.at(j - 1):
            continue
        # both sides are polynomials: a window past r + n settles t >= j
        if all(p.at(t) < comb(t + n, n) for t in range(j, r + n + 2)):
            return j
    return None


def _ideal_from_slices(n: int, slices: dict, top: int, later, upto: int) -> BorelIdeal:
    """Ideal with N_t = slices[t] for t <= top, checked against ``later(t)`` up to ``upto``."""
    gens = []
    for t in range(0, top + 1):
        N = slices[t]
        gens.extend(u for u in all_terms(n, t) if u not in N)
    J = BorelIdeal(n, gens)
    for t in range(0, upto + 1):
        want = slices[t] if t <= top else later(t)
        if J.sous_escalier(t) != frozenset(want):
            raise InternalConsistencyError(f"degree {t} of the constructed ideal does not match")
    return J


def _x0(N):
    return {Term((u[0] + 1,) + tuple(u[1:])) for u in N}


def _times_x1(N, h: int):
    return {Term((u[0], u[1] + h) + tuple(u[2:])) for u in N}


def gen_segment_revlex_jn(p: Polynomial, n: int) -> BorelIdeal:
    """The revlex gen-segment ideal I(n) built from Lambda_{p(j), j}, j = j(n)."""
    d, r = _linear_data(p)
    j = find_jn(p, n)
    if j is None:
        raise DomainError(f"j({n}) does not exist for {p}")
    lam = revlex_tail(n, j, p.at(j))
    tau = sorted((u for u in lam if not u[0]), key=REVLEX.key)[:d]
    if len(tau) < d:
        raise InternalConsistencyError("not enough x0-free terms in the revlex tail")
    slices = {t: set(all_terms(n, t)) for t in range(j)}
    slices[j] = set(lam)

    def later(t):
        N = set(lam)
        for s in range(j + 1, t + 1):
            N = _x0(N) | _times_x1(tau, s - j)
        return N

    slices[j + 1] = later(j + 1)
    J = _ideal_from_slices(n, slices, j + 1, later, j + 4)
    if hilbert_polynomial(J) != p or not is_saturated(J):
        raise InternalConsistencyError(f"I({n}) for {p} is not a saturated ideal with polynomial {p}")
    return J


def find_ln(p: Polynomial, n: int) -> Optional[int]:
    """min l with sum_{i=1}^{n-1} lambda_{i,l}(Lambda_{p(l), l}) >= d."""
    d, r = _linear_data(p)
    for t in range(1, r + n + 2):
        if p.at(t) >= comb(t + n, n):
            return None
    for l in range(1, r + 1):
        lam = revlex_tail(n, l, p.at(l))
        if sum(lambda_count(lam, i) for i in range(1, n)) >= d:
            return l
    return None


def gen_segment_revlex_ln(p: Polynomial, n: int) -> Optional[BorelIdeal]:
    """The revlex gen-segment ideal J(n) built from Lambda_{p(l), l}, l = l(n); None if l(n) is undefined."""
    d, r = _linear_data(p)
    l = find_ln(p, n)
    if l is None:
        return None
    lam = revlex_tail(n, l, p.at(l))
    # terms of the expansion x_i {min >= i}, i = 1..n-1
    eligible = set()
    for u in lam:
        m = next(i for i, e in enumerate(u) if e)
        for i in range(1, min(m, n - 1) + 1):
            e = list(u)
            e[i] += 1
            eligible.add(Term(e))
    taubar = sorted(eligible, key=REVLEX.key)[:d]
    slices = {t: set(all_terms(n, t)) for t in range(l)}
    slices[l] = set(lam)

    def later(t):
        N = _x0(lam) | set(taubar)
        for s in range(l + 2, t + 1):
            N = _x0(N) | _times_x1(taubar, s - l - 1)
        return N

    slices[l + 1] = later(l + 1)
    slices[l + 2] = later(l + 2)
    J = _ideal_from_slices(n, slices, l + 2, later, l + 5)
    if hilbert_polynomial(J) != p or not is_saturated(J):
        raise InternalConsistencyError(f"J({n}) for {p} is not a saturated ideal with polynomial {p}")
    return J
