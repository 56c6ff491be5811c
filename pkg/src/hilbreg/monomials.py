"""Monomial ideals: minimal generators, Hilbert series, saturation, intersection."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Tuple

from . import polyseries as ps
from .combinat import Monomial, degree
from .errors import UnitIdeal


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def _minimal(gens: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    # sorting by degree first means a divisor is always seen before its multiples
    keep = []
    for u in sorted(set(gens), key=lambda u: (sum(u), u)):
        if not any(divides(v, u) for v in keep):
            keep.append(u)
    return tuple(sorted(keep, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal of ``K[x_1..x_n]`` given by minimal generators.

    The unit ideal is only produced by colon and saturation, and is
    represented by the single generator ``(0, ..., 0)``.
    """

    n: int
    gens: Tuple[Monomial, ...]

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and degree(self.gens[0]) == 0

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, u: Monomial) -> bool:
        return any(divides(g, u) for g in self.gens)

    def max_degree(self) -> int:
        return max((degree(g) for g in self.gens), default=0)

    def generators_by_degree(self) -> dict:
        out = {}
        for g in self.gens:
            out.setdefault(degree(g), []).append(g)
        return out

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def format_monomial(u: Monomial) -> str:
    parts = []
    for i, a in enumerate(u, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return "*".join(parts) or "1"


def minimalize(gens: Iterable[Monomial], n: int = None) -> MonomialIdeal:
    gens = [tuple(int(a) for a in g) for g in gens]
    if n is None:
        if not gens:
            raise ValueError("variable count needed for the zero ideal")
        n = len(gens[0])
    for g in gens:
        if len(g) != n:
            raise ValueError(f"generator {g} does not have {n} exponents")
        if any(a < 0 for a in g):
            raise ValueError(f"negative exponent in {g}")
        if degree(g) == 0:
            raise UnitIdeal("degree-0 generator: the ideal is the whole ring")
    return MonomialIdeal(n, _minimal(gens))


def _ideal(n: int, gens: Iterable[Monomial]) -> MonomialIdeal:
    # internal constructor that allows the unit ideal
    gens = list(gens)
    if any(degree(g) == 0 for g in gens):
        return unit_ideal(n)
    return MonomialIdeal(n, _minimal(gens))


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ((0,) * n,))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def add(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return _ideal(I.n, I.gens + J.gens)


def colon_monomial(I: MonomialIdeal, p: Monomial) -> MonomialIdeal:
    return _ideal(I.n, (tuple(max(a - b, 0) for a, b in zip(g, p)) for g in I.gens))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.n != J.n:
        raise ValueError("ideals live in different rings")
    return _ideal(I.n, (lcm(u, v) for u in I.gens for v in J.gens))


def colon_variable_infinity(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """``I : x_j^oo``: drop the ``x_j`` exponent of every generator."""
    return _ideal(I.n, (g[:j] + (0,) + g[j + 1:] for g in I.gens))


def saturation(I: MonomialIdeal) -> MonomialIdeal:
    if I.is_zero or I.is_unit:
        return I
    out = unit_ideal(I.n)
    for j in range(I.n):
        out = intersect(out, colon_variable_infinity(I, j))
    return out


def is_saturated(I: MonomialIdeal) -> bool:
    return saturation(I) == I


# -- Hilbert series ---------------------------------------------------------

def _coprime_base(gens) -> bool:
    n = len(gens[0])
    for j in range(n):
        if sum(1 for g in gens if g[j]) > 1:
            return False
    return True


def _pivot_median(gens):
    n = len(gens[0])
    counts = [sum(1 for g in gens if g[j]) for j in range(n)]
    j = max(range(n), key=lambda k: (counts[k], -k))
    exps = sorted(g[j] for g in gens if g[j])
    # lower median; it stays below any pure power of x_j since those are maximal
    e = exps[(len(exps) - 1) // 2]
    return tuple(e if k == j else 0 for k in range(n))


def _pivot_first_variable(gens):
    n = len(gens[0])
    for j in range(n):
        if sum(1 for g in gens if g[j]) > 1:
            return tuple(1 if k == j else 0 for k in range(n))
    raise AssertionError("coprime generators reached the pivot step")


PIVOTS = {"median": _pivot_median, "first": _pivot_first_variable}


def numerator(I: MonomialIdeal, strategy: str = "median") -> ps.IntPoly:
    """Numerator ``N`` with ``HS_{R/I}(z) = N(z) / (1 - z)^n``.

    Pivot recursion ``N(I) = N(I + (p)) + z^deg(p) N(I : p)``.
    """
    return _numerator(I.gens, I.n, PIVOTS[strategy])


def _numerator(gens, n, pivot) -> ps.IntPoly:
    if not gens:
        return (1,)
    if any(degree(g) == 0 for g in gens):
        return ()
    if _coprime_base(gens):
        out = (1,)
        for g in gens:
            out = ps.pmul(out, ps.one_minus_z_power(degree(g)))
        return out
    p = pivot(gens)
    with_p = _minimal(gens + (p,))
    colon = tuple(tuple(max(a - b, 0) for a, b in zip(g, p)) for g in gens)
    colon = _minimal(colon) if all(degree(g) for g in colon) else ((0,) * n,)
    return ps.padd(_numerator(with_p, n, pivot), ps.pshift(_numerator(colon, n, pivot), degree(p)))


def hilbert_series(I: MonomialIdeal, strategy: str = "median") -> ps.HilbertSeries:
    return ps.HilbertSeries(numerator(I, strategy), I.n)


def count_standard_monomials(I: MonomialIdeal, t: int) -> int:
    """Brute-force count of degree-``t`` monomials outside ``I``."""
    count = 0
    for combo in combinations_with_replacement(range(I.n), t):
        u = [0] * I.n
        for j in combo:
            u[j] += 1
        if not I.contains(tuple(u)):
            count += 1
    return count


def dimension(I: MonomialIdeal) -> int:
    return ps.reduce(hilbert_series(I)).d
