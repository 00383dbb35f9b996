"""Exact univariate polynomials and their Gotzmann and Macaulay decompositions."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb, factorial
from typing import Iterable, Sequence

from .errors import DomainError, ParseError

__all__ = [
    "Polynomial",
    "NotAdmissible",
    "binomial_poly",
    "parse_polynomial",
    "gotzmann_decomposition",
    "gotzmann_number",
    "gotzmann_number_linear",
    "from_gotzmann",
    "macaulay_form",
    "from_macaulay",
    "delta",
    "minimal_polynomial",
    "q_prime",
    "binom",
]


def binom(m: int, k: int) -> int:
    """C(m, k) for integers, zero when m < k or k < 0."""
    if k < 0 or m < k:
        return 0
    return comb(m, k)


@dataclass(frozen=True)
class Polynomial:
    """p(z) = sum coeffs[k] z^k with rational coefficients, trailing zeros trimmed."""

    coeffs: tuple = field(default=())

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, z) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def at(self, z: int) -> int:
        """Value at an integer, which must be an integer."""
        v = self(z)
        if v.denominator != 1:
            raise DomainError(f"{self} is not integer valued at {z}")
        return v.numerator

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        size = max(len(a), len(b))
        return Polynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)
        )

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def compose_shift(self, s) -> "Polynomial":
        """p(z + s)."""
        out = Polynomial()
        power = Polynomial((1,))
        lin = Polynomial((s, 1))
        for c in self.coeffs:
            out = out + power * c
            power = power * lin
        return out

    def is_integer_valued(self) -> bool:
        # a degree-l polynomial taking integer values at l+1 consecutive integers does so everywhere
        return all(self(t).denominator == 1 for t in range(max(self.degree, 0) + 1))

    @cached_property
    def gotzmann(self):
        """Gotzmann coefficients (a_1, ..., a_r), or a ``NotAdmissible`` value."""
        return gotzmann_decomposition(self)

    @property
    def is_admissible(self) -> bool:
        return not isinstance(self.gotzmann, NotAdmissible)

    def to_json(self) -> dict:
        return {"coeffs": [_frac_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Polynomial":
        return cls(Fraction(c) for c in obj["coeffs"])

    def __str__(self) -> str:
        return format_polynomial(self)


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero:
        return "0"
    out = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = _frac_str(a)
        else:
            mono = "z" if k == 1 else f"z^{k}"
            body = mono if a == 1 else _frac_str(a) + mono
        if not out:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(sign + body)
    return "".join(out)


def binomial_poly(shift, k: int) -> Polynomial:
    """C(z + shift, k) = (z+shift)(z+shift-1)...(z+shift-k+1) / k! as a polynomial in z."""
    if k < 0:
        return Polynomial()
    out = Polynomial((1,))
    for i in range(k):
        out = out * Polynomial((Fraction(shift) - i, 1))
    return out * Fraction(1, factorial(k))


# ---------------------------------------------------------------- parsing

_TERM = re.compile(r"(?P<num>\d+)?(?:/(?P<den>\d+))?(?P<z>z(?:\^(?P<exp>\d+))?)?")


def parse_polynomial(text: str) -> Polynomial:
    """Parse e.g. ``2/3z^3+2z^2-11/3z+10``."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty polynomial", text, 0)
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ParseError("expected '+' or '-'", text, pos)
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError("expected a term", text, pos)
        if m.group("den") is not None and m.group("num") is None:
            raise ParseError("fraction without numerator", text, pos)
        num = int(m.group("num")) if m.group("num") is not None else 1
        den = int(m.group("den")) if m.group("den") is not None else 1
        if den == 0:
            raise ParseError("zero denominator", text, pos)
        if m.group("z"):
            k = int(m.group("exp")) if m.group("exp") is not None else 1
        else:
            if m.group("num") is None:
                raise ParseError("expected a term", text, pos)
            k = 0
        coeffs[k] = coeffs.get(k, Fraction(0)) + sign * Fraction(num, den)
        pos = m.end()
        first = False
    top = max(coeffs)
    return Polynomial(coeffs.get(k, 0) for k in range(top + 1))


# ---------------------------------------------------------------- decompositions

@dataclass(frozen=True)
class NotAdmissible:
    """Greedy Gotzmann peeling failed at ``step`` (1-based)."""

    step: int
    reason: str

    def __bool__(self):
        return False

    def __str__(self):
        return f"not admissible (step {self.step}: {self.reason})"


def gotzmann_decomposition(p: Polynomial, max_steps: int = 1_000_000):
    """Greedy Gotzmann peeling: a_i = deg p_i, p_{i+1} = p_i - C(z + a_i - (i-1), a_i).

    Returns the tuple (a_1, ..., a_r) or a ``NotAdmissible`` value.  The zero
    polynomial has the empty decomposition.
    """
    out: list[int] = []
    rest = p
    i = 1
    while not rest.is_zero:
        if i > max_steps:
            return NotAdmissible(i, "too many steps")
        if rest.leading < 0:
            return NotAdmissible(i, f"negative leading coefficient in remainder {rest}")
        a = rest.degree
        if out and a > out[-1]:
            return NotAdmissible(i, "coefficients not non-increasing")
        rest = rest - binomial_poly(a - (i - 1), a)
        out.append(a)
        i += 1
    return tuple(out)


def gotzmann_number(p: Polynomial) -> int:
    dec = gotzmann_decomposition(p)
    if isinstance(dec, NotAdmissible):
        raise DomainError(f"{p} is {dec}")
    return len(dec)


def from_gotzmann(a: Sequence[int]) -> Polynomial:
    out = Polynomial()
    for i, ai in enumerate(a, start=1):
        out = out + binomial_poly(ai - (i - 1), ai)
    return out


def gotzmann_number_linear(d: int, g: int) -> int:
    """Gotzmann number of dz + 1 - g."""
    return comb(d, 2) + 1 - g


def from_macaulay(m: Sequence[int]) -> Polynomial:
    out = Polynomial()
    for i, mi in enumerate(m):
        out = out + binomial_poly(i, i + 1) - binomial_poly(i - mi, i + 1)
    return out


def macaulay_form(p: Polynomial) -> tuple:
    """(m_0, ..., m_l) with p = sum_i C(z+i, i+1) - C(z+i-m_i, i+1), m non-increasing."""
    if p.is_zero:
        raise DomainError("the zero polynomial has no Macaulay form")
    ell = p.degree
    m = [0] * (ell + 1)
    rest = p
    for i in range(ell, -1, -1):
        # block i has degree i and leading coefficient m_i / i!
        c = rest.coeffs[i] if i < len(rest.coeffs) else Fraction(0)
        mi = c * factorial(i)
        if mi.denominator != 1 or mi < 0:
            raise DomainError(f"{p} is not admissible (Macaulay coefficient m_{i} = {mi})")
        m[i] = int(mi)
        rest = rest - (binomial_poly(i, i + 1) - binomial_poly(i - m[i], i + 1))
    if not rest.is_zero or any(m[i] < m[i + 1] for i in range(ell)):
        raise DomainError(f"{p} is not admissible (Macaulay form {m})")
    return tuple(m)


def delta(p: Polynomial) -> Polynomial:
    """p(z) - p(z-1)."""
    return p - p.compose_shift(-1)


def minimal_polynomial(p: Polynomial) -> Polynomial:
    """The smallest admissible polynomial of the form p + u, u an integer."""
    if p.degree < 1:
        raise DomainError("the minimal polynomial needs deg p >= 1")
    b = gotzmann_decomposition(delta(p))
    if isinstance(b, NotAdmissible):
        raise DomainError(f"the difference of {p} is {b}")
    return from_gotzmann([bi + 1 for bi in b])


def q_prime(r: int, n: int, p: Polynomial) -> int:
    """C(n-1+r, r-1) - p(r-1): terms still to add when lifting to n+1 variables."""
    return binom(n - 1 + r, r - 1) - p.at(r - 1)


def polynomial_from_values(start: int, values: Iterable[int]) -> Polynomial:
    """Interpolating polynomial through (start + i, values[i]), via Newton forward differences."""
    vals = [Fraction(v) for v in values]
    diffs = []
    row = vals
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    out = Polynomial()
    for k, dk in enumerate(diffs):
        if dk:
            out = out + binomial_poly(-start, k) * dk
    return out
