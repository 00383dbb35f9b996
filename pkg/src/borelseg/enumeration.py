"""All saturated Borel ideals with a given Hilbert polynomial.

The recursion runs over the number of variables.  Saturated Borel ideals of
K[x_{k+1}..x_n] with polynomial Delta p are lifted to K[x_k..x_n]; the lift
has too many terms outside it in degree r by a constant, and that constant
is made up by removing Borel-minimal terms divisible by x_k one at a time.
Here r is the Gotzmann number of the top polynomial throughout.

Inside the recursion an ideal of K[x_k..x_n] is handled in local
coordinates y0 = x_k, ..., y_m = x_n.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .errors import DomainError, InternalConsistencyError
from .ideals import BorelIdeal, MonomialIdeal, hilbert_polynomial
from .monomials import Term, all_terms, e_minus, e_plus
from .polynomials import Polynomial, delta, gotzmann_number

__all__ = [
    "EnumerationResult",
    "LiftRecord",
    "borel_generator",
    "lift_and_gap",
    "remove",
    "eligible_removals",
    "brute_force_enumeration",
]


@dataclass(frozen=True)
class LiftRecord:
    """One lift: J of K[x_{k+1}..x_n] with polynomial Delta p, lifted to Ibar in K[x_k..x_n]."""

    nvars: int  # n - k, the top index of the local ring
    polynomial: Polynomial
    J: MonomialIdeal
    Ibar: MonomialIdeal
    outside: frozenset  # N(Ibar)_r
    qbar: int


@dataclass
class EnumerationResult:
    polynomial: Polynomial
    n: int
    gotzmann: int
    ideals: list
    lifts: list = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {
            "polynomial": str(self.polynomial),
            "n": self.n,
            "gotzmann": self.gotzmann,
            "count": len(self.ideals),
            "ideals": [J.to_json() for J in self.ideals],
        }


def _lift(J: MonomialIdeal) -> MonomialIdeal:
    """J of K[y1..ym] (stored with indices 0..m-1) as an ideal of K[y0..ym]."""
    return MonomialIdeal(J.n + 1, [Term((0,) + tuple(g)) for g in J.gens])


def lift_and_gap(J: MonomialIdeal, r: int, p: Polynomial):
    """(Ibar, qbar) with Ibar = J K[x_k..x_n] and qbar = p(r) - |N(Ibar)_r|.

    ``J`` lives in K[x_{k+1}..x_n], stored with J.n = n - k - 1.
    """
    Ibar = _lift(J)
    return Ibar, p.at(r) - Ibar.hilbert_function(r)


def eligible_removals(outside: frozenset, m: int, r: int) -> list:
    """Borel-minimal terms of T_r minus ``outside`` divisible by y0, descending canonical order.

    ``outside`` is the down-closed complement N of the Borel set; u is
    minimal in the complement of N iff all of its e_j^- moves land in N.
    """
    cands = set()
    if not outside:
        cands.add(Term((r,) + (0,) * m))
    for v in outside:
        for j in range(m):
            if v[j]:
                cands.add(e_plus(v, j))
    out = []
    for u in cands:
        if u in outside or not u[0]:
            continue
        if all(not u[j] or e_minus(u, j) in outside for j in range(1, m + 1)):
            out.append(u)
    out.sort(key=lambda u: (sum(u),) + tuple(u))
    return out


def _saturated_from_outside(outside: frozenset, m: int, r: int) -> BorelIdeal:
    gens = [u.drop(0) for u in all_terms(m, r) if u not in outside]
    return BorelIdeal(m, gens)


def remove(Ibar: MonomialIdeal, q: int, r: int) -> set:
    """Saturated ideals obtained from Ibar_r by removing q Borel-minimal y0-divisible terms."""
    m = Ibar.n
    if q < 0:
        return set()
    level = {frozenset(Ibar.sous_escalier(r))}
    for _ in range(q):
        nxt = set()
        for N in level:
            for u in eligible_removals(N, m, r):
                nxt.add(N | {u})
        level = nxt
        if not level:
            return set()
    return {_saturated_from_outside(N, m, r) for N in level}


def _generate(m: int, p: Polynomial, r: int, lifts: Optional[list], check: bool) -> set:
    if p.is_zero:
        return {BorelIdeal.unit(m)}
    if m == 0 or p.degree >= m:
        return set()
    out = set()
    for J in sorted(_generate(m - 1, delta(p), r, lifts, check)):
        out |= _lift_and_remove(J, m, p, r, lifts, check)
    return out


def _lift_and_remove(J, m, p, r, lifts, check):
    Ibar, qbar = lift_and_gap(J, r, p)
    if lifts is not None:
        lifts.append(LiftRecord(m, p, J, Ibar, frozenset(Ibar.sous_escalier(r)), qbar))
    if qbar < 0:
        return set()
    found = remove(Ibar, qbar, r)
    if check:
        for I in found:
            if hilbert_polynomial(I) != p:
                raise InternalConsistencyError(f"{I} does not have Hilbert polynomial {p}")
    return found


def _top_branch(args):
    J, m, p, r, check = args
    return _lift_and_remove(J, m, p, r, None, check)


def borel_generator(n: int, p: Polynomial, jobs: int = 1, record: bool = False, check: bool = True) -> EnumerationResult:
    """All saturated Borel ideals of K[x0..xn] with Hilbert polynomial p.

    ``jobs > 1`` spreads the top-level branches over worker processes; the
    result is the same.  ``record`` keeps a LiftRecord for every lift.
    """
    if not p.is_zero and p.degree >= n:
        raise DomainError(f"deg {p} >= {n}: no proper saturated Borel ideal in K[x0..x{n}]")
    r = gotzmann_number(p)
    lifts = [] if record else None
    if p.is_zero or jobs <= 1 or record:
        found = _generate(n, p, r, lifts, check)
    else:
        below = sorted(_generate(n - 1, delta(p), r, None, check))
        found = set()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_top_branch, [(J, n, p, r, check) for J in below]):
                found |= part
    return EnumerationResult(p, n, r, sorted(found), lifts or [])


# ---------------------------------------------------------------- brute-force oracle

def brute_force_enumeration(n: int, p: Polynomial, limit: int = 300) -> set:
    """Every Borel B in T_r with |T_r minus B| = p(r) whose ideal has polynomial p, saturated.

    Down-closed complements are grown one maximal element at a time.
    Refuses instances with more than ``limit`` terms of degree r.
    """
    if p.is_zero:
        return {BorelIdeal.unit(n)}
    if p.degree >= n:
        raise DomainError(f"deg {p} >= {n}")
    r = gotzmann_number(p)
    size = comb(n + r, r)
    if size > limit:
        raise DomainError(f"{size} terms in degree {r}: too large for exhaustive search")
    target = p.at(r)
    if target > size:
        return set()
    terms = all_terms(n, r)
    level = {frozenset()}
    for _ in range(target):
        nxt = set()
        for N in level:
            for u in terms:
                if u in N:
                    continue
                if all(not u[j] or e_minus(u, j) in N for j in range(1, n + 1)):
                    nxt.add(N | {u})
        level = nxt
    out = set()
    for N in level:
        I = BorelIdeal(n, [u for u in terms if u not in N])
        if hilbert_polynomial(I) == p:
            out.add(BorelIdeal(n, [g.drop(0) for g in I.gens]))
    return out
