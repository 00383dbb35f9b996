import random
from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, strategies as st

from borelseg.errors import DomainError, ParseError
from borelseg.polynomials import (
    NotAdmissible,
    Polynomial,
    binom,
    delta,
    from_gotzmann,
    from_macaulay,
    gotzmann_decomposition,
    gotzmann_number,
    gotzmann_number_linear,
    macaulay_form,
    minimal_polynomial,
    parse_polynomial,
    q_prime,
)
from borelseg.segments import lex_segment_ideal

from oracles import sympy_binomial_poly, sympy_coeffs

P = parse_polynomial
F = Fraction


def as_sympy(p):
    return [sympy.Rational(c.numerator, c.denominator) for c in p.coeffs]


def test_parse_examples():
    assert P("6z-3").coeffs == (F(-3), F(6))
    assert P("2/3z^3+2z^2-11/3z+10").coeffs == (F(10), F(-11, 3), F(2), F(2, 3))
    assert P("7").coeffs == (F(7),)
    assert P("-z + 2").coeffs == (F(2), F(-1))
    assert P("z^2").coeffs == (0, 0, 1)
    assert P("0").is_zero


@pytest.mark.parametrize("bad", ["", "z+", "6z--3", "3/0", "/3z", "zz", "6y", "z^"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        P(bad)


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        P("6z-3y")
    assert exc.value.pos == 4


@pytest.mark.parametrize("text", ["6z-3", "2/3z^3+2z^2-11/3z+10", "7", "-z+2", "z^2-1/2z", "0", "z"])
def test_format_round_trip(text):
    assert str(P(text)) == text
    assert Polynomial.from_json(P(text).to_json()) == P(text)


def test_json_form():
    assert P("6z-3").to_json() == {"coeffs": ["-3", "6"]}
    assert P("2/3z").to_json() == {"coeffs": ["0", "2/3"]}


def test_binom_integer_convention():
    assert binom(5, 2) == 10 and binom(2, 5) == 0 and binom(-1, 2) == 0 and binom(3, 0) == 1


@pytest.mark.parametrize("text,r", [
    ("1", 1), ("5", 5), ("3z+1", 4), ("z+4", 4), ("6z-3", 12), ("7z+1", 22),
    ("2z^2+2z+1", 12), ("2/3z^3+2z^2-11/3z+10", 6), ("z+1", 1), ("0", 0),
])
def test_gotzmann_numbers(text, r):
    assert gotzmann_number(P(text)) == r


def test_constant_decomposition():
    for d in range(1, 10):
        assert gotzmann_decomposition(P(str(d))) == (0,) * d


@pytest.mark.parametrize("text", ["3z-7", "2z", "1/2z", "-1", "z^2", "3/2"])
def test_not_admissible(text):
    res = gotzmann_decomposition(P(text))
    assert isinstance(res, NotAdmissible) and not res
    assert res.step >= 1
    with pytest.raises(DomainError):
        gotzmann_number(P(text))


def test_linear_gotzmann_numbers():
    assert gotzmann_number_linear(3, 0) == 4
    assert gotzmann_number_linear(1, 0) == 1
    assert gotzmann_number_linear(6, 4) == 12
    rng = random.Random(7)
    for _ in range(20):
        d = rng.randint(1, 9)
        g = rng.randint(-6, comb(d - 1, 2))
        p = Polynomial((1 - g, d))
        assert gotzmann_number(p) == gotzmann_number_linear(d, g)


def test_linear_admissibility_boundary():
    # dz + 1 - g is admissible exactly when g <= C(d-1, 2)
    for d in range(1, 8):
        for g in range(-3, comb(d - 1, 2) + 4):
            assert Polynomial((1 - g, d)).is_admissible == (g <= comb(d - 1, 2))


def _sympy_from_gotzmann(a):
    return sum((sympy_binomial_poly(ai - i, ai) for i, ai in enumerate(a)), sympy.Integer(0))


def _sympy_from_macaulay(m):
    expr = sympy.Integer(0)
    for i, mi in enumerate(m):
        expr += sympy_binomial_poly(i, i + 1) - sympy_binomial_poly(i - mi, i + 1)
    return expr


@pytest.mark.parametrize("text,m", [("4", (4,)), ("3z+1", (4, 3)), ("z+2", (2, 1))])
def test_macaulay_examples(text, m):
    p = P(text)
    assert macaulay_form(p) == m
    assert sympy_coeffs(_sympy_from_macaulay(m)) == as_sympy(p)


def test_macaulay_cross_values():
    p = from_macaulay((4, 3))
    assert p(0) == 1 and p(1) == 4


def random_gotzmann_sequence(rng):
    top = rng.randint(0, 3)
    length = rng.randint(1, 12)
    seq = sorted((rng.randint(0, top) for _ in range(length)), reverse=True)
    return tuple(seq)


SAMPLE_POLYS = ["1", "7", "3z+1", "z+4", "6z-3", "7z+1", "2z^2+2z+1", "2/3z^3+2z^2-11/3z+10", "3z", "z+2"]


def test_round_trips():
    rng = random.Random(2024)
    polys = [P(s) for s in SAMPLE_POLYS] + [from_gotzmann(random_gotzmann_sequence(rng)) for _ in range(100)]
    for p in polys:
        a = gotzmann_decomposition(p)
        assert from_gotzmann(a) == p
        assert sympy_coeffs(_sympy_from_gotzmann(a)) == as_sympy(p)
        assert list(a) == sorted(a, reverse=True)
        m = macaulay_form(p)
        assert from_macaulay(m) == p
        assert sympy_coeffs(_sympy_from_macaulay(m)) == as_sympy(p)
        assert list(m) == sorted(m, reverse=True) and m[-1] >= 0
        assert p.is_integer_valued()
        if p.degree >= 1:
            assert gotzmann_number(p) >= gotzmann_number(delta(p))


def test_delta():
    assert delta(P("3z+1")) == P("3")
    assert delta(P("2z^2+2z+1")) == P("4z")
    assert delta(P("5")).is_zero
    p = P("2/3z^3+2z^2-11/3z+10")
    assert delta(p).degree == 2


def test_minimal_polynomial_examples():
    assert minimal_polynomial(P("3z+1")) == P("3z")
    assert minimal_polynomial(P("z+2")) == P("z+1")
    with pytest.raises(DomainError):
        minimal_polynomial(P("4"))
    # depends on the difference only
    for d in range(1, 6):
        mins = {minimal_polynomial(Polynomial((1 - g, d))) for g in range(-3, comb(d - 1, 2) + 1)}
        assert len(mins) == 1


def test_minimal_polynomial_z_plus_one_by_lex_ideal():
    # z + 1 is realised by a lex ideal, z is not admissible at all
    assert lex_segment_ideal(P("z+1"), 2) is not None
    assert not P("z").is_admissible


@pytest.mark.parametrize("text", ["3z+1", "z+2", "6z-3", "2z^2+2z+1", "2/3z^3+2z^2-11/3z+10", "7z+1"])
def test_minimal_polynomial_is_minimal(text):
    p = P(text)
    pm = minimal_polynomial(p)
    assert pm.is_admissible and (p - pm).degree <= 0
    for c in range(4):
        assert minimal_polynomial(pm + c) == pm
    for u in range(-25, 25):
        q = p + u
        if q.is_admissible:
            diff = q - pm
            assert diff.degree <= 0 and diff(0) >= 0


def test_q_prime():
    assert q_prime(4, 3, P("3z+1")) == 10
    for d in range(1, 7):
        for n in range(1, 5):
            assert q_prime(d, n, P(str(d))) == comb(d - 1 + n, n) - d
    for ell in range(0, 4):
        assert q_prime(1, ell + 1, from_gotzmann([ell])) == 0


@given(st.lists(st.integers(0, 3), min_size=1, max_size=15))
def test_gotzmann_inverse(seq):
    a = tuple(sorted(seq, reverse=True))
    assert gotzmann_decomposition(from_gotzmann(a)) == a


@given(st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=4), max_size=4))
def test_polynomial_ring_identities(cs):
    p = Polynomial(cs)
    q = Polynomial(cs[::-1])
    for z in range(-3, 4):
        assert (p * q)(z) == p(z) * q(z)
        assert (p - q)(z) == p(z) - q(z)
        assert delta(p)(z) == p(z) - p(z - 1)
