"""Univariate polynomials, Hilbert-Poincare series and Hilbert coefficients.

Integer polynomials in ``z`` (numerators) are tuples of ints, lowest power
first, with no trailing zeros; ``()`` is the zero polynomial.  Polynomials in
``t`` with rational coefficients (Hilbert polynomials) are :class:`RatPoly`.
Everything is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .combinat import binomial
from .errors import DimensionZero, InvalidSeries, ZeroSeries

IntPoly = Tuple[int, ...]


def trim(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, b in enumerate(q):
        out[i] += b
    return trim(out)


def psub(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    return padd(p, [-b for b in q])


def pmul(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def pshift(p: Sequence[int], k: int) -> IntPoly:
    """Multiply by ``z^k``."""
    return tuple([0] * k + list(p)) if p else ()


def pscale(p: Sequence[int], a: int) -> IntPoly:
    return trim(a * x for x in p)


def one_minus_z_power(k: int) -> IntPoly:
    """``1 - z^k`` (``k >= 1``)."""
    return trim([1] + [0] * (k - 1) + [-1])


def peval(p: Sequence, x):
    acc = 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


class RatPoly:
    """Polynomial in ``t`` with ``Fraction`` coefficients, lowest power first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = trim(Fraction(c) for c in coeffs)

    @classmethod
    def constant(cls, a) -> "RatPoly":
        return cls([a])

    @classmethod
    def binomial_in_t(cls, shift: int, r: int) -> "RatPoly":
        """``C(t + shift, r)`` as a polynomial in ``t``."""
        out = cls([1])
        for i in range(r):
            out = out * cls([shift - i, 1])
        return out * Fraction(1, _factorial(r))

    @property
    def degree(self) -> int:
        # zero polynomial has degree -1
        return len(self.coeffs) - 1

    def __call__(self, t):
        return peval(self.coeffs, Fraction(t))

    def __add__(self, other):
        other = _as_ratpoly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_ratpoly(other))

    def __rsub__(self, other):
        return _as_ratpoly(other) - self

    def __mul__(self, other):
        if not isinstance(other, RatPoly):
            return RatPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly([other])
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RatPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else f"{mag}*") + ("t" if i == 1 else f"t^{i}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _as_ratpoly(x) -> RatPoly:
    return x if isinstance(x, RatPoly) else RatPoly([x])


def _factorial(r: int) -> int:
    out = 1
    for i in range(2, r + 1):
        out *= i
    return out


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(z) / (1 - z)^n``."""

    numerator: IntPoly
    n: int

    def __post_init__(self):
        object.__setattr__(self, "numerator", trim(int(a) for a in self.numerator))


@dataclass(frozen=True)
class ReducedSeries:
    """``q(z) / (1 - z)^d`` with ``q(1) != 0``."""

    q: IntPoly
    d: int

    def __post_init__(self):
        object.__setattr__(self, "q", trim(int(a) for a in self.q))


@dataclass(frozen=True)
class CoefficientVector:
    e: Tuple[int, ...]
    d: int
    ell: int = 1

    def __post_init__(self):
        object.__setattr__(self, "e", tuple(int(x) for x in self.e))

    def __len__(self):
        return len(self.e)

    def __getitem__(self, i):
        return self.e[i]


def series_coefficient(hs: HilbertSeries, t: int) -> int:
    """Coefficient of ``z^t`` in the expansion of ``hs``."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    N, n = hs.numerator, hs.n
    if n == 0:
        return N[t] if t < len(N) else 0
    return sum(N[j] * binomial(t - j + n - 1, n - 1) for j in range(min(t, len(N) - 1) + 1))


def divide_one_minus_z(p: Sequence[int]) -> IntPoly:
    """Exact quotient ``p / (1 - z)``; requires ``p(1) == 0``."""
    out, acc = [], 0
    for a in p[:-1]:
        acc += a
        out.append(acc)
    return trim(out)


def reduce(hs: HilbertSeries) -> ReducedSeries:
    q = hs.numerator
    if not q:
        raise ZeroSeries("numerator is identically zero")
    d = hs.n
    while peval(q, 1) == 0:
        q = divide_one_minus_z(q)
        d -= 1
    if d < 0:
        raise InvalidSeries(f"(1-z) divides the numerator {hs.n - d} times, more than n={hs.n}")
    return ReducedSeries(q, d)


def expand(rs: ReducedSeries) -> HilbertSeries:
    return HilbertSeries(rs.q, rs.d)


def hilbert_function(rs: ReducedSeries, t: int) -> int:
    return series_coefficient(expand(rs), t)


def hilbert_polynomial(rs: ReducedSeries) -> RatPoly:
    if rs.d < 1:
        raise DimensionZero("the Hilbert polynomial of a zero-dimensional ring is 0")
    p = RatPoly()
    for j, qj in enumerate(rs.q):
        if qj:
            p = p + RatPoly.binomial_in_t(rs.d - 1 - j, rs.d - 1) * qj
    return p


def taylor_at_one(q: Sequence[int], k: int) -> Tuple[int, ...]:
    """``q^(i)(1) / i!`` for ``i = 0..k-1``."""
    return tuple(sum(qj * binomial(j, i) for j, qj in enumerate(q)) for i in range(k))


def polynomial_from_coefficients(e: Sequence[int], d: int) -> RatPoly:
    """``sum_i (-1)^i e_i C(t + d - 1 - i, d - 1 - i)``."""
    p = RatPoly()
    for i, ei in enumerate(e):
        p = p + RatPoly.binomial_in_t(d - 1 - i, d - 1 - i) * ((-1) ** i * ei)
    return p


def hilbert_coefficients(rs: ReducedSeries, ell: int = 1) -> CoefficientVector:
    if rs.d < 1:
        raise DimensionZero("Hilbert coefficients need dimension >= 1")
    e = taylor_at_one(rs.q, rs.d)
    # second route: binomial-basis re-expansion must give back the polynomial
    if polynomial_from_coefficients(e, rs.d) != hilbert_polynomial(rs):
        raise AssertionError(f"coefficient re-expansion mismatch for {rs}")
    return CoefficientVector(e, rs.d, ell)


def cumulative_coefficients(rs: ReducedSeries, ell: int = 1) -> CoefficientVector:
    """Coefficients ``e_0..e_d`` of ``q(z) / (1 - z)^(d+1)``.

    This is the series of the polynomial extension by one variable, whose
    Hilbert function is the running sum of the original one.  The returned
    vector carries dimension ``d + 1``.
    """
    if rs.d < 1:
        raise DimensionZero("Hilbert coefficients need dimension >= 1")
    return CoefficientVector(taylor_at_one(rs.q, rs.d + 1), rs.d + 1, ell)


def postulation_number(rs: ReducedSeries) -> int:
    post = (len(rs.q) - 1) - rs.d
    if rs.d >= 1:
        p = hilbert_polynomial(rs)
        for t in range(max(post + 1, 0), max(post + 1, 0) + rs.d + 1):
            assert p(t) == hilbert_function(rs, t), (rs, t)
    return post
