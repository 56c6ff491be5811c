"""Ideal families whose regularity is known exactly.

Complete intersections exist only as a Hilbert series plus closed-form
regularity, since their generic generators are not monomials.  Everything
else materializes as a :class:`~hilbreg.monomials.MonomialIdeal`.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Tuple, Union

from . import polyseries as ps
from .combinat import (count_of_degree, lex_segment, macaulay_bound,
                       monomials_of_degree, shadow)
from .errors import (NotAnOSequence, NotStronglyStable, TooManyForms,
                     TruncationUnsound)
from .gotzmann import b_sequence
from .monomials import (MonomialIdeal, hilbert_series, intersect, minimalize,
                        saturation, zero_ideal)


@dataclass(frozen=True)
class OracleResult:
    reg: int
    reg1: Optional[int]
    method: str
    depth: Optional[int] = None


# -- family specs -----------------------------------------------------------

@dataclass(frozen=True)
class CompleteIntersection:
    n: int
    degrees: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(x) for x in self.degrees))
        if len(self.degrees) > self.n:
            raise TooManyForms(f"{len(self.degrees)} forms cannot be regular in {self.n} variables")
        if any(x < 1 for x in self.degrees):
            raise ValueError("form degrees must be positive")


@dataclass(frozen=True)
class Powers:
    n: int
    c: int
    a: int

    def __post_init__(self):
        if not 1 <= self.c <= self.n or self.a < 0:
            raise ValueError("powers ideal needs 1 <= c <= n and a >= 0")


@dataclass(frozen=True)
class CyclicPolytope:
    n: int
    d: int

    def __post_init__(self):
        if not 1 <= self.d <= self.n - 1:
            raise ValueError("cyclic polytope ideal needs 1 <= d <= n - 1")


@dataclass(frozen=True)
class LexOf:
    inner: "FamilySpec"
    max_degree: Optional[int] = None

    @property
    def n(self):
        return self.inner.n


@dataclass(frozen=True)
class Explicit:
    ideal: MonomialIdeal

    @property
    def n(self):
        return self.ideal.n


FamilySpec = Union[CompleteIntersection, Powers, CyclicPolytope, LexOf, Explicit]


def ci_series(n: int, degrees) -> Tuple[ps.HilbertSeries, OracleResult]:
    ci = CompleteIntersection(n, degrees)
    N = (1,)
    for delta in ci.degrees:
        N = ps.pmul(N, ps.one_minus_z_power(delta))
    reg = sum(delta - 1 for delta in ci.degrees)
    hs = ps.HilbertSeries(N, n)
    e0 = 1
    for delta in ci.degrees:
        e0 *= delta
    rs = ps.reduce(hs)
    assert rs.q and ps.peval(rs.q, 1) == e0
    # reg^1 is vacuous for Artinian quotients
    reg1 = reg if len(ci.degrees) < n else None
    return hs, OracleResult(reg, reg1, "closedForm", depth=n - len(ci.degrees))


def powers_ideal(n: int, c: int, a: int) -> MonomialIdeal:
    """``(x_1, ..., x_c)^(a+1)``."""
    Powers(n, c, a)
    gens = [u + (0,) * (n - c) for u in monomials_of_degree(c, a + 1)]
    return minimalize(gens, n)


def cyclic_polytope_ideal(n: int, d: int) -> MonomialIdeal:
    """Intersection of all ideals generated by ``n - d`` of the variables.

    A squarefree monomial meets every ``(n-d)``-subset of variables exactly when
    its support has more than ``d`` elements, so the minimal generators are
    the squarefree monomials of degree ``d + 1``.
    """
    CyclicPolytope(n, d)
    gens = [tuple(1 if j in S else 0 for j in range(n)) for S in combinations(range(n), d + 1)]
    return minimalize(gens, n)


def cyclic_polytope_by_intersection(n: int, d: int) -> MonomialIdeal:
    c = n - d
    out = None
    for S in combinations(range(n), c):
        J = minimalize([tuple(1 if j == k else 0 for j in range(n)) for k in S], n)
        out = J if out is None else intersect(out, J)
    return out


# -- strongly stable ideals ---------------------------------------------------

def is_strongly_stable(I: MonomialIdeal) -> bool:
    for u in I.gens:
        for j in range(I.n):
            if not u[j]:
                continue
            for i in range(j):
                v = list(u)
                v[j] -= 1
                v[i] += 1
                if not I.contains(tuple(v)):
                    return False
    return True


def stable_saturation(I: MonomialIdeal) -> MonomialIdeal:
    """Saturation of a strongly stable ideal: set every ``x_n`` exponent to 0."""
    gens = [g[:-1] + (0,) for g in I.gens]
    if any(sum(g) == 0 for g in gens):
        return saturation(I)  # unit ideal, represented by the general routine
    return minimalize(gens, I.n) if gens else zero_ideal(I.n)


def stable_regularity(I: MonomialIdeal) -> OracleResult:
    """Regularity data of ``R/I`` for strongly stable ``I`` (Eliahou-Kervaire).

    ``reg(I)`` is the top generator degree; ``reg^1(R/I) = reg(R/I^sat)``;
    the projective dimension of ``R/I`` is the largest index of a variable
    occurring in a generator.
    """
    if not is_strongly_stable(I):
        raise NotStronglyStable(str(I))
    if I.is_zero:
        return OracleResult(0, 0, "eliahouKervaire", depth=I.n)
    sat = stable_saturation(I)
    assert sat == saturation(I), (I, sat)
    reg = I.max_degree() - 1
    reg1 = None if sat.is_unit else (sat.max_degree() - 1 if not sat.is_zero else 0)
    pd = max(max(j + 1 for j in range(I.n) if g[j]) for g in I.gens)
    return OracleResult(reg, reg1, "eliahouKervaire", depth=I.n - pd)


def borel_closure(gens, n: int) -> MonomialIdeal:
    """Smallest strongly stable ideal containing the given monomials."""
    seen = set()
    stack = [tuple(g) for g in gens]
    while stack:
        u = stack.pop()
        if u in seen:
            continue
        seen.add(u)
        for j in range(n):
            if u[j]:
                for i in range(j):
                    v = list(u)
                    v[j] -= 1
                    v[i] += 1
                    stack.append(tuple(v))
    return minimalize(seen, n)


# -- lexification -----------------------------------------------------------

def family_series(spec: FamilySpec) -> ps.HilbertSeries:
    if isinstance(spec, CompleteIntersection):
        return ci_series(spec.n, spec.degrees)[0]
    return hilbert_series(family_ideal(spec))


def family_ideal(spec: FamilySpec) -> Optional[MonomialIdeal]:
    if isinstance(spec, CompleteIntersection):
        return None
    if isinstance(spec, Powers):
        return powers_ideal(spec.n, spec.c, spec.a)
    if isinstance(spec, CyclicPolytope):
        return cyclic_polytope_ideal(spec.n, spec.d)
    if isinstance(spec, LexOf):
        return lexify(spec.inner, spec.max_degree)
    if isinstance(spec, Explicit):
        return spec.ideal
    raise TypeError(f"unknown family {spec!r}")


def family_oracle(spec: FamilySpec, ideal: Optional[MonomialIdeal] = None) -> Optional[OracleResult]:
    if isinstance(spec, CompleteIntersection):
        return ci_series(spec.n, spec.degrees)[1]
    if isinstance(spec, Powers):
        # (x_1..x_c)^(a+1) is Cohen-Macaulay of dimension n - c
        reg1 = spec.a if spec.c < spec.n else None
        return OracleResult(spec.a, reg1, "closedForm", depth=spec.n - spec.c)
    if isinstance(spec, CyclicPolytope):
        return OracleResult(spec.d, spec.d, "closedForm", depth=spec.d)
    I = family_ideal(spec) if ideal is None else ideal
    if is_strongly_stable(I):
        return stable_regularity(I)
    return None


def default_lex_degree(hs: ps.HilbertSeries) -> int:
    rs = ps.reduce(hs)
    post = ps.postulation_number(rs)
    if rs.d < 1:
        return max(post + 2, 1)
    s = b_sequence(ps.hilbert_coefficients(rs))[-1]
    return max(post + 2, s + 1)


def lex_generators(hs: ps.HilbertSeries, max_degree: int) -> dict:
    """Minimal generators, degree by degree, of the lex ideal with series ``hs``."""
    n = hs.n
    h = [ps.series_coefficient(hs, t) for t in range(max_degree + 2)]
    if h[0] != 1:
        raise NotAnOSequence(f"h(0) = {h[0]}, the ideal must lie in the irrelevant ideal")
    for m in range(1, max_degree + 1):
        if not 0 <= h[m] <= count_of_degree(n, m):
            raise NotAnOSequence(f"h({m}) = {h[m]} is not between 0 and the number of monomials")
        if h[m + 1] > macaulay_bound(h[m], m):
            raise NotAnOSequence(f"h({m + 1}) = {h[m + 1]} exceeds Macaulay bound of h({m}) = {h[m]}")
    by_degree = {}
    prev = []
    for m in range(1, max_degree + 1):
        k = count_of_degree(n, m) - h[m]
        segment = lex_segment(n, m, k)
        below = shadow(prev, n) if prev else []
        if len(below) > k:
            raise NotAnOSequence(f"shadow of degree {m - 1} overflows degree {m}")
        new = segment[len(below):]
        if new:
            by_degree[m] = new
        prev = segment
    return by_degree


def lexify(source: Union[FamilySpec, ps.HilbertSeries], max_degree: Optional[int] = None) -> MonomialIdeal:
    """Lex-segment ideal with the same Hilbert function as ``source``."""
    hs = source if isinstance(source, ps.HilbertSeries) else family_series(source)
    M = default_lex_degree(hs) if max_degree is None else max_degree
    by_degree = lex_generators(hs, M)
    if M in by_degree:
        raise TruncationUnsound(f"new lex generators in degree {M}; raise the maximal degree")
    gens = [u for m in sorted(by_degree) for u in by_degree[m]]
    L = minimalize(gens, hs.n)
    if hilbert_series(L).numerator != hs.numerator:
        raise TruncationUnsound(f"truncation at degree {M} does not reproduce the Hilbert series")
    assert is_strongly_stable(L)
    return L
