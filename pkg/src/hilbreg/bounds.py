"""Upper and lower regularity bounds from Hilbert coefficients.

Root extractions in the lower bounds are done as exact integer threshold
searches, so every returned value is the exact integer ceiling of the real
expression.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Optional, Sequence, Tuple

from .combinat import binomial
from .errors import DimensionZero, IndexOutOfRange, LevelOutOfRange
from .gotzmann import GotzmannData, blancafort_bound
from .polyseries import CoefficientVector, ReducedSeries

PASS, FAIL, NO_ORACLE = "pass", "fail", "no-oracle"


def xi(e: CoefficientVector, p: int) -> int:
    """``max(e_0, |e_1|, ..., |e_p|)``."""
    if not 0 <= p < len(e.e):
        raise IndexOutOfRange(f"xi_{p} needs e_0..e_{p}, have {len(e.e)} coefficients")
    return max([e.e[0]] + [abs(x) for x in e.e[1:p + 1]])


def theorem_a_bound(e: CoefficientVector, d: int, p: int) -> int:
    """``(xi_{d-p} + 1)^(2^(d-p)) - 2``, an upper bound for reg^p(R/I)."""
    if d < 1:
        raise DimensionZero("bound needs dim R/I >= 1")
    if not 1 <= p <= d:
        raise LevelOutOfRange(f"level {p} outside 1..{d}")
    return (xi(e, d - p) + 1) ** (2 ** (d - p)) - 2


def key_lemma_bound(e: CoefficientVector, j: int) -> int:
    """``(xi_j + 1)^(2^j) - 1``, the bound on ``B_j``."""
    return (xi(e, j) + 1) ** (2 ** j) - 1


def theorem_b_bounds(eS: CoefficientVector, d: Optional[int] = None,
                     depth_positive: bool = False) -> Tuple[int, Optional[int]]:
    """Bounds on reg(G(I)) from the cumulative coefficients ``e_0..e_d``.

    Returns ``(general, depth_positive_bound)``; the second entry is ``None``
    unless ``depth_positive`` is set.
    """
    if d is None:
        d = eS.d - 1
    if d < 1:
        raise DimensionZero("bound needs dim >= 1")
    general = (xi(eS, d) + 1) ** (2 ** d) - 2
    positive = (xi(eS, d - 1) + 1) ** (2 ** (d - 1)) - 2 if depth_positive else None
    return general, positive


@dataclass(frozen=True)
class CorollaryC:
    i: int
    lhs: int
    rhs: Fraction
    holds: bool


def corollary_c_check(eS: CoefficientVector, i: int) -> CorollaryC:
    """Strict inequality ``(-1)^(i-1) e_i < 7/12 (xi_{i-1} + 1)^(2^i) - e_0``."""
    if not 1 <= i < len(eS.e):
        raise IndexOutOfRange(f"i = {i} outside 1..{len(eS.e) - 1}")
    lhs = (-1) ** (i - 1) * eS.e[i]
    rhs = Fraction(7, 12) * (xi(eS, i - 1) + 1) ** (2 ** i) - eS.e[0]
    return CorollaryC(i, lhs, rhs, lhs < rhs)


@dataclass(frozen=True)
class D1Check:
    holds: bool
    is_equality: bool


def prop_d1_check(e0: int, ell: int, c: int, reg: int) -> D1Check:
    cap = ell * binomial(reg + c, c)
    return D1Check(e0 <= cap, e0 == cap)


def d1_extremal_series(ell: int, c: int, d: int, a: int) -> ReducedSeries:
    """``sum_{i<=a} ell C(c+i-1, i) z^i / (1-z)^d``."""
    return ReducedSeries(tuple(ell * binomial(c + i - 1, i) for i in range(a + 1)), d)


def least_integer(pred: Callable[[int], bool], lo: int) -> int:
    """Smallest ``a >= lo`` with ``pred(a)``, for ``pred`` monotone on ``[lo, oo)``."""
    if pred(lo):
        return lo
    step = 1
    while not pred(lo + step):
        step *= 2
    bad, good = lo + step // 2, lo + step
    while good - bad > 1:
        mid = (bad + good) // 2
        if pred(mid):
            good = mid
        else:
            bad = mid
    return good


def prop_d_terms(e: CoefficientVector, ell: int, c: int) -> Dict[int, int]:
    """Integer ceilings of each term of the root lower bound, keyed by ``i``.

    ``i = 0`` is ``ceil((c! e_0 / ell)^(1/c) - (c+1)/2)``; ``i >= 1`` (only for
    ``e_i != 0``, ``i <= d-1``) is ``ceil((|e_i| / ell)^(1/(c+i)) - 1)``.
    """
    if c < 1:
        raise ValueError("codimension must be at least 1")
    e0 = e.e[0]
    target = 2 ** c * factorial(c) * e0
    # (2a + c + 1) >= 0 keeps the power monotone
    terms = {0: least_integer(lambda a: ell * (2 * a + c + 1) ** c >= target, -((c + 1) // 2))}
    for i in range(1, min(len(e.e), e.d)):
        ei = abs(e.e[i])
        if ei:
            terms[i] = least_integer(lambda a, i=i, ei=ei: ell * (a + 1) ** (c + i) >= ei, -1)
    return terms


def prop_d_lower(e: CoefficientVector, ell: int, c: int) -> int:
    return max(prop_d_terms(e, ell, c).values())


def binomial_lower(e0: int, ell: int, c: int) -> int:
    """Least ``a >= 0`` with ``ell C(a+c, c) >= e_0``."""
    return least_integer(lambda a: ell * binomial(a + c, c) >= e0, 0)


def coefficient_growth_check(e: CoefficientVector, B: int, a: int) -> bool:
    """``|e_i| <= B (a+1)^i`` for ``1 <= i <= d-1``."""
    return all(abs(e.e[i]) <= B * (a + 1) ** i for i in range(1, min(len(e.e), e.d)))


@dataclass(frozen=True)
class QuestionEvidence:
    t: int
    reg_part: bool
    coefficient_part: bool


def question_check(e: CoefficientVector, d: int, t: int, oracle_reg: int) -> QuestionEvidence:
    """Evaluate both open inequalities for depth ``t``; evidence only."""
    if not 0 <= t <= d:
        raise IndexOutOfRange(f"depth {t} outside 0..{d}")
    base = xi(e, d - t) + 1
    reg_part = oracle_reg < base ** (2 ** d)
    coeff_part = all(abs(e.e[i]) < base ** (2 ** i) for i in range(d - t + 1, d + 1))
    return QuestionEvidence(t, reg_part, coeff_part)


# -- report -----------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    claim: str
    status: str
    detail: str = ""


def _verdict(claim, ok, detail=""):
    return Verdict(claim, PASS if ok else FAIL, detail)


@dataclass(frozen=True)
class BoundsReport:
    d: int
    c: int
    ell: int
    e: CoefficientVector
    eS: CoefficientVector
    xi: Tuple[int, ...]
    theorem_a: Dict[int, int]
    blancafort: Dict[int, int]
    key_lemma: Dict[int, Tuple[int, int]]
    theorem_b: Tuple[int, Optional[int]]
    corollary_c: Tuple[CorollaryC, ...]
    lower_terms: Dict[int, int]
    lower_roots: int
    lower_binomial: int
    d1: Optional[D1Check] = None
    d1_extremal: Optional[ReducedSeries] = None
    coefficient_growth: Optional[bool] = None
    question: Optional[QuestionEvidence] = None
    oracle_reg: Optional[int] = None
    oracle_reg1: Optional[int] = None
    verdicts: Tuple[Verdict, ...] = field(default=())


def bounds_report(rs: ReducedSeries, n: int, e: CoefficientVector, eS: CoefficientVector,
                  g: GotzmannData, *, ell: int = 1, levels: Sequence[int] = None,
                  depth_positive: Optional[bool] = None, oracle_reg: Optional[int] = None,
                  oracle_reg1: Optional[int] = None, depth: Optional[int] = None) -> BoundsReport:
    d = rs.d
    if d < 1:
        raise DimensionZero("bounds need dim R/I >= 1")
    c = n - d
    levels = tuple(levels) if levels else tuple(range(1, d + 1))
    for p in levels:
        if not 1 <= p <= d:
            raise LevelOutOfRange(f"level {p} outside 1..{d}")
    verdicts = []

    thm_a = {p: theorem_a_bound(e, d, p) for p in levels}
    blanc = {p: blancafort_bound(g, p) for p in levels}
    key = {j: (g.B[j], key_lemma_bound(e, j)) for j in range(d)}
    for j, (b, cap) in key.items():
        verdicts.append(_verdict(f"keyLemma.j{j}", b <= cap, f"B_{j}={b} <= {cap}"))
    for p in levels:
        verdicts.append(_verdict(f"theoremA.ordering.p{p}", thm_a[p] >= blanc[p],
                                 f"{thm_a[p]} >= {blanc[p]}"))

    thm_b = theorem_b_bounds(eS, d, bool(depth_positive))
    cor_c = tuple(corollary_c_check(eS, i) for i in range(1, d + 1))
    for r in cor_c:
        verdicts.append(_verdict(f"corollaryC.i{r.i}", r.holds, f"{r.lhs} < {r.rhs}"))

    terms = prop_d_terms(e, ell, c) if c >= 1 else {}
    lower_roots = max(terms.values()) if terms else 0
    lower_binom = binomial_lower(e.e[0], ell, c) if c >= 1 else 0
    if c >= 1:
        verdicts.append(_verdict("lowerBounds.ordering", lower_binom >= terms[0],
                                 f"{lower_binom} >= {terms[0]}"))

    d1 = extremal = growth = question = None
    if oracle_reg1 is not None:
        for p in levels:
            # reg^p <= reg^1, so the oracle decides the claim only when reg^1 fits
            if p == 1:
                verdicts.append(_verdict("blancafort.p1", oracle_reg1 <= blanc[1],
                                         f"reg1={oracle_reg1} <= {blanc[1]}"))
                verdicts.append(_verdict("theoremA.p1", oracle_reg1 <= thm_a[1],
                                         f"reg1={oracle_reg1} <= {thm_a[1]}"))
            elif oracle_reg1 <= thm_a[p]:
                verdicts.append(Verdict(f"theoremA.p{p}", PASS, f"reg^p <= reg1={oracle_reg1} <= {thm_a[p]}"))
            else:
                verdicts.append(Verdict(f"theoremA.p{p}", NO_ORACLE, "reg^p not determined by reg1"))
    else:
        verdicts.append(Verdict("theoremA", NO_ORACLE))

    if oracle_reg is not None:
        verdicts.append(_verdict("theoremB.general", oracle_reg <= thm_b[0],
                                 f"reg={oracle_reg} <= {thm_b[0]}"))
        if thm_b[1] is not None:
            verdicts.append(_verdict("theoremB.depthPositive", oracle_reg <= thm_b[1],
                                     f"reg={oracle_reg} <= {thm_b[1]}"))
        d1 = prop_d1_check(e.e[0], ell, c, oracle_reg)
        verdicts.append(_verdict("propD1", d1.holds, f"e0={e.e[0]} <= {ell * binomial(oracle_reg + c, c)}"))
        if d1.is_equality:
            extremal = d1_extremal_series(ell, c, d, oracle_reg)
            verdicts.append(_verdict("propD1.equalityCharacterization", extremal == rs,
                                     f"series {rs.q} vs extremal {extremal.q}"))
        if c >= 1:
            verdicts.append(_verdict("propD", lower_roots <= oracle_reg, f"{lower_roots} <= reg={oracle_reg}"))
            verdicts.append(_verdict("binomialLower", lower_binom <= oracle_reg,
                                     f"{lower_binom} <= reg={oracle_reg}"))
            # the Artinian reduction has length at most ell C(reg+c, c)
            growth = coefficient_growth_check(e, ell * binomial(oracle_reg + c, c), oracle_reg)
            verdicts.append(_verdict("coefficientGrowth", growth))
        if depth is not None:
            question = question_check(eS, d, depth, oracle_reg)
    else:
        verdicts.append(Verdict("oracleComparisons", NO_ORACLE))

    return BoundsReport(
        d=d, c=c, ell=ell, e=e, eS=eS,
        xi=tuple(xi(eS, p) for p in range(d + 1)),
        theorem_a=thm_a, blancafort=blanc, key_lemma=key, theorem_b=thm_b,
        corollary_c=cor_c, lower_terms=terms, lower_roots=lower_roots,
        lower_binomial=lower_binom, d1=d1, d1_extremal=extremal,
        coefficient_growth=growth, question=question,
        oracle_reg=oracle_reg, oracle_reg1=oracle_reg1, verdicts=tuple(verdicts),
    )
