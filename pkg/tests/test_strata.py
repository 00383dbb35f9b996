import pytest
from hypothesis import given, strategies as st

from borelseg.errors import DomainError, StratumTooLarge
from borelseg.ideals import MonomialIdeal, parse_ideal, truncate
from borelseg.monomials import LEX, REVLEX, Term, parse_order, parse_term
from borelseg.polynomials import Polynomial
from borelseg.segments import classify, hilb_segment_for, lex_segment_ideal, revlex_segment_constant
from borelseg.strata import (
    Verdict,
    bareiss_rank,
    build_homogeneous_stratum,
    build_stratum,
    decide_singularity,
    embedding_dimension,
    script_B,
    singularity_certificate,
    truncation_hint,
)

from oracles import sympy_rank

I = parse_ideal
T = parse_term


def ed_at_hint(J, order):
    m = max(truncation_hint(J), J.initial_degree)
    return build_stratum(truncate(J, m), order).embedding_dimension


def test_single_generator():
    st_ = build_homogeneous_stratum(I("x2"), REVLEX)
    assert [str(v) for v in st_.vars] == ["c[x2,x1]", "c[x2,x0]"]
    assert st_.relations == [] and st_.embedding_dimension == 2 == embedding_dimension(st_)


def test_seven_points():
    J = revlex_segment_constant(7, 3)
    assert J == I("x3^2, x2*x3, x2^2, x1^2*x3, x1^2*x2, x1^3")
    assert truncation_hint(J) == 3
    assert script_B(J) == {T("x0^5*x1^2", 3), T("x0^5*x1*x2", 3), T("x0^5*x1*x3")}
    assert len(J.gens) * len(script_B(J)) == 18
    st_ = build_stratum(truncate(J, 3), REVLEX)
    assert len(st_.vars) == 91 and st_.linear_rank == 64
    assert st_.embedding_dimension == 27
    assert singularity_certificate(J, 3, 7) is Verdict.INCONCLUSIVE
    rep = decide_singularity(J, REVLEX)
    assert rep.verdict is Verdict.SINGULAR and rep.method == "ed" and rep.ed == 27 and rep.truncation == 3


def test_eight_points():
    J = revlex_segment_constant(8, 3)
    assert len(script_B(J)) == 4 and len(J.gens) == 7
    assert singularity_certificate(J, 3, 8) is Verdict.SINGULAR
    rep = decide_singularity(J, REVLEX)
    assert rep.method == "certificate" and rep.product == 28 and rep.bound == 24


@pytest.mark.parametrize("text,n", [
    ("x2^2, x1*x2, x1^2", 2), ("x2^2, x1^2*x2, x1^3", 2), ("x3^2, x2*x3, x2^2", 3), ("x3, x2^2, x1*x2", 3),
    ("x2^3, x1*x2^2, x1^2*x2, x1^3", 2),
])
def test_strategies_and_modes_agree(text, n):
    J = I(text, n)
    for o in (LEX, REVLEX):
        a = build_stratum(J, o, strategy="first")
        b = build_stratum(J, o, strategy="reverse")
        c = build_stratum(J, o, mode="full")
        assert a.linear_rank == b.linear_rank == c.linear_rank
        assert len(a.vars) == len(b.vars) == len(c.vars)


def test_strategies_agree_on_fixture(all_fixture_ideals):
    for J, _ in all_fixture_ideals:
        if len(J.gens) <= 12 and J.n == 2:
            m = max(truncation_hint(J), J.initial_degree)
            K = truncate(J, m)
            assert build_stratum(K, REVLEX).linear_rank == build_stratum(K, REVLEX, strategy="reverse").linear_rank


def test_origin_lies_on_the_stratum(all_fixture_ideals):
    for J, _ in all_fixture_ideals[:30]:
        for mode in ("linear", "full"):
            st_ = build_stratum(J, REVLEX, mode=mode)
            assert all(() not in rel for rel in st_.relations)


def test_rank_matches_sympy_on_strata():
    for text, n in [("x2^2, x1*x2, x1^2", 2), ("x3^2, x2*x3, x2^2", 3)]:
        st_ = build_stratum(I(text, n), REVLEX)
        rows = st_.linear_matrix()
        assert rows and st_.linear_rank == sympy_rank(rows)


@given(st.lists(st.lists(st.integers(-4, 4), min_size=5, max_size=5), max_size=6))
def test_bareiss_matches_sympy(rows):
    assert bareiss_rank(rows) == sympy_rank(rows)


def test_bareiss_accepts_fractions():
    from fractions import Fraction

    assert bareiss_rank([[Fraction(1, 2), Fraction(1, 3)], [3, 2]]) == 1
    assert bareiss_rank([]) == 0


def test_lex_segment_is_smooth_in_the_plane():
    J = lex_segment_ideal(Polynomial((3,)), 2)
    assert J == I("x2, x1^3") and truncation_hint(J) == 3
    assert ed_at_hint(J, LEX) == 6


@pytest.mark.parametrize("d", range(1, 6))
def test_plane_points_have_ed_2d(d):
    orders = [LEX, REVLEX, parse_order("w:4,2,1"), parse_order("w:5,2,1"), parse_order("w:3,2,1")]
    seen = 0
    for o in orders:
        J = hilb_segment_for(Polynomial((d,)), 2, o)
        if J is not None:
            ed = ed_at_hint(J, o)
            assert ed == 2 * d
            assert ed >= len(J.gens) * len(script_B(J))
            seen += 1
    assert seen


def test_ed_bounds_gb_product_for_seven_points():
    J = revlex_segment_constant(7, 3)
    assert ed_at_hint(J, REVLEX) >= len(J.gens) * len(script_B(J))


def test_script_B_direct_scan():
    for d in range(1, 7):
        J = lex_segment_ideal(Polynomial((d,)), 2)
        direct = {b for b in J.sous_escalier(d) if Term((b[0], b[1] + 1, b[2])) in J}
        assert script_B(J) == direct
    with pytest.raises(DomainError):
        script_B(I("x3^2, x2*x3, x2^2"))


def test_truncation_hint():
    assert truncation_hint(I("x2, x1^3")) == 3
    assert truncation_hint(I("x3^2, x2*x3, x2^2")) == 0


def test_truncation_preserves_ed():
    J = revlex_segment_constant(5, 2)
    h = truncation_hint(J)
    eds = {build_stratum(truncate(J, m), REVLEX).embedding_dimension for m in range(h, h + 3)}
    assert eds == {10}


@pytest.mark.parametrize("n,d", [(3, 4), (3, 5), (3, 6), (3, 7), (3, 8), (4, 5), (4, 6)])
def test_revlex_points_are_singular(n, d):
    J = revlex_segment_constant(d, n)
    assert classify(J, REVLEX).is_hilb_segment
    assert decide_singularity(J, REVLEX).verdict is Verdict.SINGULAR


def test_square_of_maximal_ideal_certificate():
    for n in range(3, 6):
        J = revlex_segment_constant(n + 1, n)
        assert J == I(", ".join(f"x{i}*x{j}" for i in range(1, n + 1) for j in range(i, n + 1)), n)
        assert singularity_certificate(J, n, n + 1) is Verdict.SINGULAR


def test_size_guard():
    J = revlex_segment_constant(7, 3)
    with pytest.raises(StratumTooLarge, match="truncation_hint"):
        build_stratum(truncate(J, 7), REVLEX, max_vars=50)
    with pytest.raises(DomainError):
        build_stratum(MonomialIdeal.unit(2), REVLEX)


def test_json_export():
    obj = build_stratum(I("x2^2, x1*x2, x1^2", 2), REVLEX).to_json()
    assert obj["order"] == "revlex" and obj["homogeneous"] is True
    assert obj["ed"] == 6 and obj["ed"] == len(obj["vars"]) - obj["rank"]
    assert all(isinstance(c, str) for row in obj["linear_matrix"] for c in row)
