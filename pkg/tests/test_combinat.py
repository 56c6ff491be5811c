import pytest
from hypothesis import given, strategies as st

from hilbreg.combinat import (LexSegment, binomial, count_of_degree, lex_segment,
                              macaulay_bound, macaulay_rep, monomials_of_degree, shadow)
from hilbreg.errors import NotALexSegment, SegmentTooLarge

from oracles import all_monomials, falling_binomial


@pytest.mark.parametrize("a,b,expected", [(4, 2, 6), (7, 0, 1), (-5, 0, 1), (-1, 2, 1), (2, 5, 0), (0, 0, 1)])
def test_binomial_examples(a, b, expected):
    assert binomial(a, b) == expected


@given(st.integers(-40, 40), st.integers(0, 12))
def test_binomial_matches_falling_factorial(a, b):
    assert binomial(a, b) == falling_binomial(a, b)


def test_pascal():
    for a in range(1, 31):
        for b in range(1, a + 1):
            assert binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b)


def _greedy_oracle(h, m):
    # scan upward from scratch at every step
    out = []
    for i in range(m, 0, -1):
        if h == 0:
            break
        a = i
        while binomial(a + 1, i) <= h:
            a += 1
        out.append(a)
        h -= binomial(a, i)
    return out


@pytest.mark.parametrize("h,m,tops", [(8, 3, (4, 3, 1)), (6, 2, (4,)), (1, 5, (5,))])
def test_macaulay_rep_examples(h, m, tops):
    rep = macaulay_rep(h, m)
    assert rep.tops == tops
    assert list(tops) == _greedy_oracle(h, m)


def test_macaulay_rep_round_trip():
    for m in range(1, 7):
        for h in range(1, 10_001):
            rep = macaulay_rep(h, m)
            assert rep.value() == h
            tops = rep.tops
            assert all(x > y for x, y in zip(tops, tops[1:]))
            assert all(a >= i for a, i in rep.terms)


@pytest.mark.parametrize("h,m,expected", [(3, 1, 6), (1, 4, 1), (6, 2, 10)])
def test_macaulay_bound_examples(h, m, expected):
    assert macaulay_bound(h, m) == expected


def test_lex_ideals_attain_macaulay_bound():
    # quotient by a lex segment grows by exactly h^<m> in the next degree
    for n in range(2, 6):
        for m in range(1, 6):
            for k in range(count_of_degree(n, m)):
                h = count_of_degree(n, m) - k
                grown = count_of_degree(n, m + 1) - len(shadow(lex_segment(n, m, k), n))
                assert grown == macaulay_bound(h, m)


def test_lex_segment_examples():
    assert lex_segment(4, 2, 2) == [(2, 0, 0, 0), (1, 1, 0, 0)]
    assert lex_segment(3, 4, 0) == []
    assert lex_segment(2, 3, 4) == [(3, 0), (2, 1), (1, 2), (0, 3)]
    with pytest.raises(SegmentTooLarge):
        lex_segment(2, 3, 5)


def test_lex_segment_exhaustive():
    for n in range(1, 5):
        for m in range(0, 6):
            everything = sorted(all_monomials(n, m), reverse=True)
            assert list(monomials_of_degree(n, m)) == everything
            for k in range(len(everything) + 1):
                seg = lex_segment(n, m, k)
                assert len(seg) == k
                assert all(u > v for u, v in zip(seg, seg[1:]))
                if seg:
                    assert all(seg[-1] > v for v in everything if v not in seg)


def test_shadow_examples():
    assert shadow(lex_segment(4, 2, 2)) == [
        (3, 0, 0, 0), (2, 1, 0, 0), (2, 0, 1, 0), (2, 0, 0, 1),
        (1, 2, 0, 0), (1, 1, 1, 0), (1, 1, 0, 1)]
    assert shadow([]) == []
    for n, m in [(2, 3), (3, 2), (4, 1)]:
        full = lex_segment(n, m, count_of_degree(n, m))
        assert shadow(full) == lex_segment(n, m + 1, count_of_degree(n, m + 1))


def test_shadow_compact_segment():
    assert shadow(LexSegment(4, 2, 2)) == shadow(lex_segment(4, 2, 2))
    assert LexSegment(4, 2, 2).last == (1, 1, 0, 0)


def test_shadow_rejects_non_segment():
    with pytest.raises(NotALexSegment):
        shadow([(0, 0, 2)])


def test_shadow_size_monotone_in_k():
    for n in range(1, 5):
        for m in range(1, 5):
            sizes = [len(shadow(lex_segment(n, m, k), n)) for k in range(count_of_degree(n, m) + 1)]
            assert sizes == sorted(sizes)
