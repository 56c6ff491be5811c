"""Exact combinatorial primitives.

Monomials in ``n`` variables are plain tuples of nonnegative exponents.
Lexicographic order takes ``x_1 > x_2 > ... > x_n``, which for exponent
tuples coincides with Python's tuple comparison, so "descending lex" is
``sorted(..., reverse=True)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Sequence, Tuple, Union

from .errors import NotALexSegment, SegmentTooLarge

Monomial = Tuple[int, ...]


def degree(u: Monomial) -> int:
    return sum(u)


def binomial(a: int, b: int) -> int:
    """Binomial coefficient with the polynomial convention.

    ``C(a, b) = a (a-1) ... (a-b+1) / b!`` for any integer ``a``, so
    ``binomial(-1, 2) == 1`` and ``binomial(2, 5) == 0``.
    """
    if b < 0:
        raise ValueError("lower argument must be nonnegative")
    if a >= 0:
        return math.comb(a, b)
    # C(-m, b) = (-1)^b C(m + b - 1, b)
    return (-1) ** b * math.comb(b - a - 1, b)


@dataclass(frozen=True)
class MacaulayRep:
    """``h = sum C(a_i, i)`` over ``terms = ((a_m, m), (a_{m-1}, m-1), ...)``."""

    degree: int
    terms: Tuple[Tuple[int, int], ...]

    def value(self) -> int:
        return sum(binomial(a, i) for a, i in self.terms)

    @property
    def tops(self) -> Tuple[int, ...]:
        return tuple(a for a, _ in self.terms)


def _largest_top(h: int, i: int) -> int:
    # largest a with C(a, i) <= h; C(i, i) = 1 <= h so a >= i
    lo, step = i, 1
    while binomial(lo + step, i) <= h:
        lo, step = lo + step, step * 2
    hi = lo + step  # C(hi, i) > h
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binomial(mid, i) <= h:
            lo = mid
        else:
            hi = mid
    return lo


def macaulay_rep(h: int, m: int) -> MacaulayRep:
    if h < 1 or m < 1:
        raise ValueError("macaulay_rep needs h >= 1 and m >= 1")
    terms = []
    rest = h
    for i in range(m, 0, -1):
        if rest == 0:
            break
        a = _largest_top(rest, i)
        terms.append((a, i))
        rest -= binomial(a, i)
    assert rest == 0
    return MacaulayRep(m, tuple(terms))


def macaulay_bound(h: int, m: int) -> int:
    """Macaulay's upper bound ``h^<m>`` on the next Hilbert function value."""
    if h == 0:
        return 0
    return sum(binomial(a + 1, i + 1) for a, i in macaulay_rep(h, m).terms)


def monomials_of_degree(n: int, m: int) -> Iterator[Monomial]:
    """All degree-``m`` monomials in ``n`` variables, descending lex."""
    if n == 0:
        if m == 0:
            yield ()
        return
    if n == 1:
        yield (m,)
        return
    for first in range(m, -1, -1):
        for rest in monomials_of_degree(n - 1, m - first):
            yield (first,) + rest


def count_of_degree(n: int, m: int) -> int:
    return binomial(n + m - 1, m) if n > 0 else int(m == 0)


@dataclass(frozen=True)
class LexSegment:
    """Compact form of the first ``size`` degree-``degree`` monomials."""

    n: int
    degree: int
    size: int

    def monomials(self) -> list:
        return list(islice(monomials_of_degree(self.n, self.degree), self.size))

    @property
    def last(self):
        if self.size == 0:
            return None
        return self.monomials()[-1]


def lex_segment(n: int, m: int, k: int) -> list:
    total = count_of_degree(n, m)
    if k < 0 or k > total:
        raise SegmentTooLarge(f"{k} monomials requested, only {total} of degree {m} in {n} variables")
    return list(islice(monomials_of_degree(n, m), k))


def is_lex_segment(monos: Sequence[Monomial], n: int, m: int) -> bool:
    return list(monos) == lex_segment(n, m, len(monos)) if len(monos) <= count_of_degree(n, m) else False


def shadow(segment: Union[Sequence[Monomial], LexSegment], n: int = None) -> list:
    """Degree ``m+1`` multiples ``{x_j u}`` of a degree-``m`` lex segment."""
    if isinstance(segment, LexSegment):
        n = segment.n
        segment = segment.monomials()
    if not segment:
        return []
    if n is None:
        n = len(segment[0])
    out = set()
    for u in segment:
        for j in range(n):
            v = list(u)
            v[j] += 1
            out.add(tuple(v))
    result = sorted(out, reverse=True)
    m = degree(segment[0])
    if not is_lex_segment(result, n, m + 1):
        raise NotALexSegment("shadow is not a lex segment; input was not one either")
    return result
