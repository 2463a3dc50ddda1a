from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from frobenius_lattice.arith import CoprimePair, frobenius_two
from frobenius_lattice.engine import (
    CandidateCase,
    CandidateKind,
    CaseLabel,
    Decomposition,
    candidate_points,
    closed_form_g3,
    decompose,
    decompose_by_enumeration,
    dispatch,
    evaluate,
    explain_candidate,
    johnson_reduce,
    red_point,
    selmer_g,
    uv_to_xy,
    xy_to_uv,
)
from frobenius_lattice.errors import DomainError, InvariantViolation, ResourceError
from frobenius_lattice.oracle import frobenius_oracle, is_representable
from frobenius_lattice.region import is_exceptional, linear_form

from conftest import brute_frobenius, coprime_pairs

PAPER_TRIPLES = [
    ((13, 51, 152), CaseLabel.A_ONE_MOD_L_Q1, 444),
    ((13, 53, 160), CaseLabel.A_ONE_MOD_L_F, 467),
    ((9, 37, 114), CaseLabel.A_OTHER_MOD_L_Q2, 179),
    ((9, 35, 102), CaseLabel.A_OTHER_MOD_L_Q1, 166),
]


def _by_kind(points):
    return {p.kind: p for p in points}


def test_decompose_examples():
    assert decompose(CoprimePair(13, 51), 152) == Decomposition(4, 4, 3, 1)
    assert decompose(CoprimePair(9, 37), 114) == Decomposition(12, 6, 1, 3)
    assert decompose(CoprimePair(5, 7), 12) is None
    with pytest.raises(DomainError):
        decompose(CoprimePair(5, 7), 7)


def test_decompose_soundness_exhaustive():
    for a, b in coprime_pairs(40):
        pair = CoprimePair(a, b)
        for c in range(b + 1, a * b):
            dec = decompose(pair, c)
            if dec is None:
                continue
            h, l, q, r = dec.h, dec.l, dec.q, dec.r
            assert l * b - h * a == c
            assert a == q * l + r and 0 <= r < l
            assert 1 < l < a and 0 < h < b and q >= 1
            assert linear_form(pair, red_point(pair, dec)) == c


def test_decompose_agrees_with_region():
    for a, b in coprime_pairs(25):
        pair = CoprimePair(a, b)
        for c in range(b + 1, a * b + a):
            assert (decompose(pair, c) is not None) == is_exceptional(pair, c)


def test_inverse_and_enumeration_paths_agree():
    for a, b in coprime_pairs(14):
        pair = CoprimePair(a, b)
        for c in range(b + 1, a * b):
            assert decompose(pair, c) == decompose_by_enumeration(pair, c)


def test_candidate_points_examples():
    pts = _by_kind(candidate_points(CoprimePair(13, 51), Decomposition(4, 4, 3, 1)))
    assert (pts[CandidateKind.Q_PRIME_1].u, pts[CandidateKind.Q_PRIME_1].v) == (9, 2)
    assert (pts[CandidateKind.F_PRIME].u, pts[CandidateKind.F_PRIME].v) == (13, 1)
    assert CandidateKind.Q_PRIME_2 not in pts

    pair = CoprimePair(9, 37)
    pts = _by_kind(candidate_points(pair, Decomposition(12, 6, 1, 3)))
    q2 = pts[CandidateKind.Q_PRIME_2]
    assert (q2.u, q2.v) == (13, 1) and q2.value_xy == 179

    pair = CoprimePair(7, 9)
    dec = decompose(pair, 11)
    assert dec == Decomposition(1, 2, 3, 1)
    pts = _by_kind(candidate_points(pair, dec))
    assert (pts[CandidateKind.Q_PRIME_1].u, pts[CandidateKind.Q_PRIME_1].v) == (3, 2)
    f = pts[CandidateKind.F_PRIME]
    assert (f.u, f.v) == (4, 1) and f.value_xy == 63 - 28 - 9 == 26
    assert brute_frobenius((7, 9, 11), 63) == 26


def test_candidate_values_are_uv_values():
    pair = CoprimePair(13, 53)
    for p in candidate_points(pair, decompose(pair, 160)):
        assert linear_form(pair, uv_to_xy(pair, p.u, p.v)) == p.value_xy


def test_dispatch_examples():
    assert dispatch(CoprimePair(13, 51), Decomposition(4, 4, 3, 1)) is CaseLabel.A_ONE_MOD_L_Q1
    assert dispatch(CoprimePair(13, 53), Decomposition(4, 4, 3, 1)) is CaseLabel.A_ONE_MOD_L_F
    assert dispatch(CoprimePair(9, 35), Decomposition(12, 6, 1, 3)) is CaseLabel.A_OTHER_MOD_L_Q1
    assert dispatch(CoprimePair(9, 37), Decomposition(12, 6, 1, 3)) is CaseLabel.A_OTHER_MOD_L_Q2


def test_dispatch_boundary_raises():
    # b*r == a*h needs a | r, impossible for a real decomposition; fabricate one
    with pytest.raises(InvariantViolation):
        dispatch(CoprimePair(5, 12), Decomposition(h=12, l=6, q=0, r=5))


@pytest.mark.parametrize("triple, case, g", PAPER_TRIPLES)
def test_paper_triples(triple, case, g):
    ev = evaluate(*triple)
    assert ev.case is case
    assert ev.g == g == closed_form_g3(*triple)
    assert frobenius_oracle(triple) == g


def test_closed_form_small_cases():
    assert brute_frobenius((7, 9, 11), 63) == 26
    assert closed_form_g3(7, 9, 11) == 26
    assert evaluate(7, 9, 11).case is CaseLabel.A_ONE_MOD_L_F
    # input order does not matter
    assert closed_form_g3(152, 13, 51) == 444
    # c a multiple of both: representable, falls back to g(a, b)
    assert closed_form_g3(7, 9, 63) == 47
    assert closed_form_g3(7, 9, 9) == 47


@pytest.mark.parametrize("triple", [(4, 6, 8), (1, 5, 7), (6, 10, 15 * 2)])
def test_closed_form_rejects(triple):
    with pytest.raises(DomainError):
        closed_form_g3(*triple)


def test_closed_form_rejects_huge():
    with pytest.raises(ResourceError):
        closed_form_g3(3, 5, 2**31 + 1)


def test_winner_value_is_formula():
    # the closed form is a*b minus the winning candidate's u-v value
    for a, b in coprime_pairs(20):
        pair = CoprimePair(a, b)
        for c in range(b + 1, a * b):
            ev = evaluate(a, b, c)
            if ev.decomposition is None:
                assert ev.g == frobenius_two(pair)
            else:
                assert ev.g == ev.winner.value_xy == a * b - a * ev.winner.u - b * ev.winner.v


def test_johnson_examples():
    assert brute_frobenius((4, 6, 7), 40) == 9
    assert johnson_reduce(4, 6, 7) == 2 * 1 + 7 == 9
    assert brute_frobenius((2, 7), 20) == 5
    assert johnson_reduce(2, 4, 7) == 2 * (-1) + 7 == 5
    assert brute_frobenius((6, 9, 10), 80) == 23
    assert johnson_reduce(6, 9, 10) == 3 * 1 + 20 == 23
    assert closed_form_g3(6, 9, 10) == 23
    with pytest.raises(DomainError):
        johnson_reduce(7, 9, 11)


def test_johnson_identity_with_oracle_inner():
    # the reduction itself, checked with oracle values on both sides
    for a in range(2, 16):
        for b in range(a + 1, 31):
            d = gcd(a, b)
            if d == 1:
                continue
            for c in range(b + 1, 2 * b):
                if gcd(d, c) != 1:
                    continue
                inner = frobenius_oracle((a // d, b // d, c))
                assert frobenius_oracle((a, b, c)) == d * inner + c * (d - 1)


def test_selmer_examples():
    assert brute_frobenius((5, 6, 7), 30) == 9
    assert selmer_g(5, 1, 1) == 30 - 15 - 6 == 9
    assert brute_frobenius((4, 5, 6), 20) == 7
    assert selmer_g(4, 1, 1) == 20 - 8 - 5 == 7
    for d in range(1, 6):
        if gcd(13, d) == 1:
            b, c = 4 * 13 + d, 4 * 13 + 2 * d
            assert selmer_g(13, 4, d) == closed_form_g3(13, b, c) == frobenius_oracle((13, b, c))


@pytest.mark.parametrize("args", [(2, 1, 1), (6, 1, 2), (5, 0, 1), (5, 1, 0)])
def test_selmer_rejects(args):
    with pytest.raises(DomainError):
        selmer_g(*args)


def test_explain_candidate_examples():
    pair = CoprimePair(13, 51)
    dec = Decomposition(4, 4, 3, 1)
    q1 = _by_kind(candidate_points(pair, dec))[CandidateKind.Q_PRIME_1]
    # 4*c1 + 4*c2 = 8 is solvable; c1 - 4*c3 = -9 and c2 + 4*c3 = 11 are not, for any c3 <= a
    assert not any(
        4 * c3 - 9 >= 0 and 11 - 4 * c3 >= 0 for c3 in range(0, 14)
    )
    assert explain_candidate(pair, dec, q1) == (CandidateCase.CASE3_Q, None)

    # l=3, h=5, a=9: c = 3*23 - 5*9 = 24 with b = 23
    pair = CoprimePair(9, 23)
    dec = decompose(pair, 24)
    assert (dec.h, dec.l) == (5, 3)
    from frobenius_lattice.engine import CandidatePoint

    p = CandidatePoint(CandidateKind.F_PRIME, 11, 1, 9 * 23 - 99 - 23)
    assert explain_candidate(pair, dec, p)[0] is CandidateCase.CASE2_P

    beyond = CandidatePoint(CandidateKind.F_PRIME, 20, 1, 0)
    assert 3 * 20 + 5 * 1 > 9 * 5
    assert explain_candidate(pair, dec, beyond) == (CandidateCase.CASE1_F, None)


def test_explain_candidate_witness():
    pair = CoprimePair(13, 51)
    dec = decompose(pair, 152)
    from frobenius_lattice.engine import CandidatePoint

    p = CandidatePoint(CandidateKind.Q_PRIME_1, 1, 1, 13 * 51 - 13 - 51)
    case, w = explain_candidate(pair, dec, p)
    assert case is CandidateCase.EXPRESSIBLE
    assert 13 * w.c1 + 51 * w.c2 + 152 * w.c3 == p.value_xy
    assert is_representable(p.value_xy, (13, 51, 152))[0]


def test_uv_round_trip():
    pair = CoprimePair(7, 9)
    assert uv_to_xy(pair, 1, 1) == (8, -1) and linear_form(pair, (8, -1)) == 47
    assert uv_to_xy(pair, 0, 0) == (9, 0) and linear_form(pair, (9, 0)) == 63


@given(st.integers(-500, 500), st.integers(-500, 500))
def test_uv_round_trip_property(u, v):
    pair = CoprimePair(7, 9)
    p = uv_to_xy(pair, u, v)
    assert xy_to_uv(pair, p) == (u, v)
    assert linear_form(pair, p) == 63 - 7 * u - 9 * v


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 20), st.integers(1, 3), st.integers(1, 5))
def test_selmer_consistency(a, h, d):
    if gcd(a, d) != 1:
        return
    assert selmer_g(a, h, d) == closed_form_g3(a, h * a + d, h * a + 2 * d)
