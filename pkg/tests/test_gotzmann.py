from itertools import combinations_with_replacement

import pytest
from hypothesis import given

from hilbreg import polyseries as ps
from hilbreg.bounds import key_lemma_bound, xi
from hilbreg.errors import LevelOutOfRange, NotAdmissible
from hilbreg.gotzmann import (GotzmannData, b_sequence, blancafort_bound, c_sequence,
                              coefficients_from_b, decompose, decomposition_polynomial,
                              verify_decomposition)
from hilbreg.monomials import hilbert_series
from hilbreg.sweep import SweepConfig, batch

from conftest import monomial_ideals


def cv(*e, d=None):
    return ps.CoefficientVector(e, len(e) if d is None else d)


@pytest.mark.parametrize("e,B", [((2, 1), (2, 2)), ((6, 8), (6, 13)), ((1,), (1,))])
def test_b_sequence_examples(e, B):
    assert b_sequence(cv(*e)) == B


def test_b_sequence_rejects_inadmissible():
    with pytest.raises(NotAdmissible):
        b_sequence(cv(0, 0))
    with pytest.raises(NotAdmissible):
        b_sequence(cv(2, 5))  # B_1 = -5 + 3 < B_0


def test_c_sequence_examples():
    assert c_sequence((2, 2), 2).c == (1, 1)
    g = c_sequence((6, 13), 2)
    assert g.c == (1,) * 6 + (0,) * 7 and g.s == 13
    assert c_sequence((1,), 1) == GotzmannData((0,), (1,), 1)
    with pytest.raises(NotAdmissible):
        c_sequence((3, 2), 2)


def test_verify_decomposition_examples():
    assert verify_decomposition(GotzmannData((1, 1), (2, 2), 2), ps.RatPoly([1, 2]))
    assert verify_decomposition(GotzmannData((1,) * 6 + (0,) * 7, (6, 13), 2), ps.RatPoly([-2, 6]))
    assert not verify_decomposition(GotzmannData((0,), (1,), 1), ps.RatPoly([2]))


def test_blancafort_examples():
    assert blancafort_bound(c_sequence((2, 2), 2), 1) == 1
    assert blancafort_bound(c_sequence((6, 13), 2), 1) == 12
    assert blancafort_bound(c_sequence((2, 2), 2), 2) == 1
    with pytest.raises(LevelOutOfRange):
        blancafort_bound(c_sequence((2, 2), 2), 3)


def _instances():
    ideals = batch(SweepConfig(seed=11, count=150))
    out = []
    for I in ideals:
        rs = ps.reduce(hilbert_series(I))
        out.append(rs)
        out.append(ps.ReducedSeries(rs.q, rs.d + 1))
    return out


def test_round_trip_and_key_lemma_on_sweep():
    for rs in _instances():
        e = ps.hilbert_coefficients(rs)
        g = decompose(e)
        assert verify_decomposition(g, ps.hilbert_polynomial(rs))
        assert coefficients_from_b(g.B, g.d) == e.e
        assert g.B[0] == e.e[0] and g.B[-1] == g.s
        for j in range(g.d):
            assert g.B[j] == sum(1 for c in g.c if c >= g.d - 1 - j)
            assert g.B[j] <= key_lemma_bound(e, j)


@given(monomial_ideals(n_min=2, max_deg=4, max_gens=5))
def test_round_trip_property(I):
    rs = ps.reduce(hilbert_series(I))
    if rs.d < 1:
        return
    e = ps.hilbert_coefficients(rs)
    g = decompose(e)
    assert verify_decomposition(g, ps.hilbert_polynomial(rs))
    assert all(g.B[j] <= (xi(e, j) + 1) ** (2 ** j) - 1 for j in range(rs.d))


def greedy_decomposition(p, limit=10_000):
    """Peel off ``C(c_i + t - i + 1, c_i)`` with ``c_i = deg`` of what is left."""
    c = []
    rest = p
    while rest.degree >= 0:
        if rest.coeffs[-1] <= 0 or len(c) >= limit:
            return None
        ci = rest.degree
        c.append(ci)
        rest = rest - ps.RatPoly.binomial_in_t(ci - len(c) + 1, ci)
    return tuple(c)


def test_greedy_oracle_agrees_with_recursion():
    for rs in _instances():
        g = decompose(ps.hilbert_coefficients(rs))
        if g.s <= 2000:
            assert greedy_decomposition(ps.hilbert_polynomial(rs)) == g.c


def test_uniqueness_at_desk_scale():
    seen = {}
    for s in range(1, 16):
        for combo in combinations_with_replacement((2, 1, 0), s):
            c = tuple(sorted(combo, reverse=True))
            p = decomposition_polynomial(c)
            assert p not in seen, (c, seen.get(p))
            seen[p] = c
            assert greedy_decomposition(p) == c
    assert len(seen) == sum(len(list(combinations_with_replacement((2, 1, 0), s))) for s in range(1, 16))
