"""Gotzmann binomial decomposition of Hilbert polynomials.

A Hilbert polynomial of a standard graded quotient has a unique expression

    p(t) = C(c_1 + t, c_1) + C(c_2 + t - 1, c_2) + ... + C(c_s + t - s + 1, c_s)

with ``c_1 >= ... >= c_s >= 0``.  ``B_j`` counts the ``c_i >= (d-1) - j``; the
``B_j`` are determined recursively from the Hilbert coefficients, which is
how the decomposition is computed here.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .combinat import binomial
from .errors import LevelOutOfRange, NotAdmissible
from .polyseries import CoefficientVector, RatPoly


@dataclass(frozen=True)
class GotzmannData:
    c: Tuple[int, ...]
    B: Tuple[int, ...]
    d: int

    @property
    def s(self) -> int:
        return len(self.c)


def _alternating_tail(B: Sequence[int], j: int) -> int:
    # sum_{l=1}^{j} (-1)^(l-1) C(B_{j-l} + 1, l + 1)
    return sum((-1) ** (l - 1) * binomial(B[j - l] + 1, l + 1) for l in range(1, j + 1))


def b_sequence(e: CoefficientVector) -> Tuple[int, ...]:
    d = e.d
    if d < 1:
        raise NotAdmissible("dimension must be at least 1")
    if len(e.e) < d:
        raise NotAdmissible(f"need {d} coefficients, got {len(e.e)}")
    if e.e[0] < 1:
        raise NotAdmissible(f"e_0 = {e.e[0]} < 1")
    B = [e.e[0]]
    for j in range(1, d):
        b = (-1) ** j * e.e[j] + _alternating_tail(B, j)
        if b < 1 or b < B[-1]:
            raise NotAdmissible(f"B_{j} = {b} breaks monotonicity (B_{j - 1} = {B[-1]}); e = {e.e}")
        B.append(b)
    return tuple(B)


def coefficients_from_b(B: Sequence[int], d: int) -> Tuple[int, ...]:
    """Invert :func:`b_sequence`: solve the recursion for ``e_j``."""
    e = [B[0]]
    for j in range(1, d):
        e.append((-1) ** j * (B[j] - _alternating_tail(B, j)))
    return tuple(e)


def c_sequence(B: Sequence[int], d: int) -> GotzmannData:
    B = tuple(int(b) for b in B)
    if len(B) != d or d < 1:
        raise NotAdmissible(f"expected {d} counts, got {len(B)}")
    if B[0] < 1 or any(b2 < b1 for b1, b2 in zip(B, B[1:])):
        raise NotAdmissible(f"B = {B} is not a positive nondecreasing sequence")
    c = [d - 1] * B[0]
    for j in range(1, d):
        c += [d - 1 - j] * (B[j] - B[j - 1])
    return GotzmannData(tuple(c), B, d)


def decomposition_polynomial(c: Sequence[int]) -> RatPoly:
    p = RatPoly()
    for i, ci in enumerate(c, start=1):
        p = p + RatPoly.binomial_in_t(ci - i + 1, ci)
    return p


def verify_decomposition(g: GotzmannData, p: RatPoly) -> bool:
    return decomposition_polynomial(g.c) == p


def blancafort_bound(g: GotzmannData, p: int) -> int:
    """Upper bound ``B_{d-p} - 1`` on the regularity at and above level ``p``."""
    if not 1 <= p <= g.d:
        raise LevelOutOfRange(f"level {p} outside 1..{g.d}")
    return g.B[g.d - p] - 1


def decompose(e: CoefficientVector) -> GotzmannData:
    return c_sequence(b_sequence(e), e.d)
