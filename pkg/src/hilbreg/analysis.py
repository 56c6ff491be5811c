"""End-to-end analysis: spec file -> series -> coefficients -> Gotzmann data ->
bounds -> oracle -> verdicts, and the canonical JSON report."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from . import polyseries as ps
from .bounds import FAIL, PASS, BoundsReport, Verdict, bounds_report, key_lemma_bound
from .errors import InvalidSpec, NotAdmissible
from .families import (CompleteIntersection, CyclicPolytope, Explicit, FamilySpec,
                       LexOf, OracleResult, Powers, ci_series, family_ideal,
                       family_oracle)
from .gotzmann import GotzmannData, coefficients_from_b, decompose, verify_decomposition
from .monomials import MonomialIdeal, hilbert_series, is_saturated, minimalize

FORMAT_VERSION = "1"


@dataclass(frozen=True)
class InputSpec:
    n: int
    family: FamilySpec
    ell: int = 1
    depth_positive: Any = "auto"  # True, False, None (unset) or "auto"
    max_lex_degree: Optional[int] = None
    levels: Tuple[int, ...] = ()
    version: str = FORMAT_VERSION


# -- parsing ----------------------------------------------------------------

def _int(x, what) -> int:
    if isinstance(x, bool):
        raise InvalidSpec(f"{what}: expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x)
        except ValueError:
            pass
    raise InvalidSpec(f"{what}: expected an integer, got {x!r}")


def _parse_family(node, n: int, max_lex_degree) -> FamilySpec:
    if not isinstance(node, dict) or "kind" not in node:
        raise InvalidSpec("ideal must be an object with a 'kind'")
    kind = node["kind"]
    try:
        if kind == "completeIntersection":
            return CompleteIntersection(n, tuple(_int(x, "degrees") for x in node.get("degrees", [])))
        if kind == "powers":
            return Powers(n, _int(node["c"], "c"), _int(node["a"], "a"))
        if kind == "cyclicPolytope":
            return CyclicPolytope(n, _int(node["d"], "d"))
        if kind == "lexOf":
            M = node.get("maxDegree", max_lex_degree)
            return LexOf(_parse_family(node["inner"], n, None), None if M is None else _int(M, "maxDegree"))
        if kind == "explicit":
            gens = [tuple(_int(a, "exponent") for a in g) for g in node.get("generators", [])]
            return Explicit(minimalize(gens, n))
    except KeyError as exc:
        raise InvalidSpec(f"{kind}: missing parameter {exc}") from None
    except InvalidSpec:
        raise
    except ValueError as exc:
        raise InvalidSpec(f"{kind}: {exc}") from None
    raise InvalidSpec(f"unknown ideal kind {kind!r}")


def parse_spec(doc: Dict) -> InputSpec:
    if not isinstance(doc, dict):
        raise InvalidSpec("spec must be a JSON object")
    if "input" in doc and "ring" not in doc:
        # a report or a sweep failure dump: replay its input echo
        doc = doc["input"]
    version = str(doc.get("version", FORMAT_VERSION))
    if version != FORMAT_VERSION:
        raise InvalidSpec(f"unsupported format version {version}")
    try:
        n = _int(doc["ring"]["vars"], "ring.vars")
    except (KeyError, TypeError):
        raise InvalidSpec("ring.vars is required") from None
    if n < 1:
        raise InvalidSpec("ring.vars must be at least 1")
    opts = doc.get("options", {}) or {}
    ell = _int(opts.get("ell", 1), "options.ell")
    if ell < 1:
        raise InvalidSpec("options.ell must be at least 1")
    dp = opts.get("depthPositive", "auto")
    if dp not in (True, False, None, "auto"):
        raise InvalidSpec("options.depthPositive must be true, false, null or \"auto\"")
    M = opts.get("maxLexDegree")
    M = None if M is None else _int(M, "options.maxLexDegree")
    levels = tuple(_int(p, "options.levels") for p in opts.get("levels", []) or [])
    family = _parse_family(doc.get("ideal"), n, M)
    return InputSpec(n, family, ell, dp, M, levels, version)


def load_spec(path) -> InputSpec:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidSpec(f"{path}: not valid JSON ({exc})") from None
    return parse_spec(doc)


def family_to_dict(f: FamilySpec) -> Dict:
    if isinstance(f, CompleteIntersection):
        return {"kind": "completeIntersection", "degrees": list(f.degrees)}
    if isinstance(f, Powers):
        return {"kind": "powers", "c": f.c, "a": f.a}
    if isinstance(f, CyclicPolytope):
        return {"kind": "cyclicPolytope", "d": f.d}
    if isinstance(f, LexOf):
        out = {"kind": "lexOf", "inner": family_to_dict(f.inner)}
        if f.max_degree is not None:
            out["maxDegree"] = f.max_degree
        return out
    if isinstance(f, Explicit):
        return {"kind": "explicit", "generators": [list(g) for g in f.ideal.gens]}
    raise TypeError(f)


def spec_to_dict(spec: InputSpec) -> Dict:
    opts = {"ell": spec.ell, "depthPositive": spec.depth_positive}
    if spec.max_lex_degree is not None:
        opts["maxLexDegree"] = spec.max_lex_degree
    if spec.levels:
        opts["levels"] = list(spec.levels)
    return {"version": spec.version, "ring": {"vars": spec.n},
            "ideal": family_to_dict(spec.family), "options": opts}


def explicit_spec(I: MonomialIdeal, **options) -> InputSpec:
    return InputSpec(I.n, Explicit(I), **options)


# -- canonical serialization -------------------------------------------------

def canonical(obj):
    """JSON-ready copy with integers as decimal strings and rationals as ``p/q``."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(doc) -> str:
    return json.dumps(canonical(doc), sort_keys=True, indent=2) + "\n"


# -- analysis ---------------------------------------------------------------

@dataclass
class Report:
    spec: InputSpec
    series: ps.HilbertSeries
    reduced: ps.ReducedSeries
    postulation: int
    ideal: Optional[MonomialIdeal] = None
    e: Optional[ps.CoefficientVector] = None
    eS: Optional[ps.CoefficientVector] = None
    gotzmann: Optional[GotzmannData] = None
    gotzmann_S: Optional[GotzmannData] = None
    bounds: Optional[BoundsReport] = None
    oracle: Optional[OracleResult] = None
    depth_positive: Optional[bool] = None
    verdicts: Tuple[Verdict, ...] = field(default=())
    note: str = ""

    @property
    def failed(self) -> Tuple[Verdict, ...]:
        return tuple(v for v in self.verdicts if v.status == FAIL)

    @property
    def exit_code(self) -> int:
        if any(v.claim.startswith("gotzmann") for v in self.failed):
            return 3
        return 1 if self.failed else 0

    def to_dict(self) -> Dict:
        rs = self.reduced
        h_top = max(self.postulation + 2, 0)
        hilbert = {
            "n": self.series.n,
            "numerator": list(self.series.numerator),
            "reducedNumerator": list(rs.q),
            "d": rs.d,
            "c": self.spec.n - rs.d,
            "postulation": self.postulation,
            "h": [ps.hilbert_function(rs, t) for t in range(h_top + 1)],
        }
        doc = {"format": "hilbreg-report", "formatVersion": FORMAT_VERSION,
               "input": spec_to_dict(self.spec), "hilbert": hilbert,
               "verdicts": [{"claim": v.claim, "status": v.status, "detail": v.detail}
                            for v in self.verdicts]}
        if self.ideal is not None:
            doc["ideal"] = {"generators": [list(g) for g in self.ideal.gens]}
        if self.note:
            doc["note"] = self.note
        if rs.d >= 1:
            hilbert["hilbertPolynomial"] = str(ps.hilbert_polynomial(rs))
            doc["coefficients"] = {"e": list(self.e.e), "eS": list(self.eS.e), "ell": self.spec.ell}
            doc["gotzmann"] = {"B": list(self.gotzmann.B), "c": list(self.gotzmann.c),
                               "s": self.gotzmann.s, "BS": list(self.gotzmann_S.B),
                               "sS": self.gotzmann_S.s}
            doc["bounds"] = _bounds_dict(self.bounds, self.depth_positive)
        else:
            doc["bounds"] = {"error": "DimensionZero"}
        doc["oracle"] = "none" if self.oracle is None else {
            "reg": self.oracle.reg, "reg1": self.oracle.reg1,
            "method": self.oracle.method, "depth": self.oracle.depth}
        return doc

    def dumps(self) -> str:
        return dumps(self.to_dict())


def _bounds_dict(b: BoundsReport, depth_positive) -> Dict:
    out = {
        "d": b.d, "c": b.c, "ell": b.ell, "xi": list(b.xi),
        "theoremA": {f"p{p}": v for p, v in b.theorem_a.items()},
        "blancafort": {f"p{p}": v for p, v in b.blancafort.items()},
        "keyLemma": {f"j{j}": {"B": bj, "bound": cap} for j, (bj, cap) in b.key_lemma.items()},
        "theoremB": {"general": b.theorem_b[0], "depthPositive": b.theorem_b[1],
                     "depthPositiveFlag": depth_positive},
        "corollaryC": [{"i": r.i, "lhs": r.lhs, "rhs": r.rhs, "holds": r.holds} for r in b.corollary_c],
        "lowerRoots": b.lower_roots,
        "lowerRootTerms": {f"i{i}": v for i, v in b.lower_terms.items()},
        "lowerBinomial": b.lower_binomial,
    }
    if b.d1 is not None:
        out["propD1"] = {"holds": b.d1.holds, "isEquality": b.d1.is_equality,
                         "extremalSeries": None if b.d1_extremal is None else list(b.d1_extremal.q)}
    if b.coefficient_growth is not None:
        out["coefficientGrowth"] = b.coefficient_growth
    if b.question is not None:
        out["question"] = {"depth": b.question.t, "regPart": b.question.reg_part,
                           "coefficientPart": b.question.coefficient_part}
    return out


def _resolve_depth_positive(spec: InputSpec, ideal: Optional[MonomialIdeal]):
    dp = spec.depth_positive
    if dp != "auto":
        return dp
    if isinstance(spec.family, CompleteIntersection):
        return True
    if ideal is not None:
        return is_saturated(ideal)
    return None


def analyze(spec: InputSpec) -> Report:
    fam = spec.family
    if fam.n != spec.n:
        raise InvalidSpec(f"family lives in {fam.n} variables, ring has {spec.n}")
    ideal = family_ideal(fam)
    if ideal is None:
        hs = ci_series(fam.n, fam.degrees)[0]
    else:
        hs = hilbert_series(ideal)
    if spec.ell != 1:
        # R_0 of length ell, flat over the field: every length scales by ell
        hs = ps.HilbertSeries(ps.pscale(hs.numerator, spec.ell), hs.n)
    rs = ps.reduce(hs)
    post = ps.postulation_number(rs)
    oracle = family_oracle(fam, ideal)
    dp = _resolve_depth_positive(spec, ideal)
    report = Report(spec, hs, rs, post, ideal=ideal, oracle=oracle, depth_positive=dp)
    if rs.d < 1:
        report.verdicts = (Verdict("bounds", "no-oracle", "DimensionZero"),)
        report.note = "dimension 0: bounds are not defined"
        return report

    e = ps.hilbert_coefficients(rs, spec.ell)
    eS = ps.cumulative_coefficients(rs, spec.ell)
    try:
        g = decompose(e)
        gS = decompose(eS)
    except NotAdmissible as exc:
        raise NotAdmissible(f"{exc} (input {spec_to_dict(spec)})") from None
    verdicts = [
        Verdict("gotzmann.roundtrip", PASS if verify_decomposition(g, ps.hilbert_polynomial(rs)) else FAIL),
        Verdict("gotzmann.inverse", PASS if coefficients_from_b(g.B, g.d) == e.e else FAIL),
        Verdict("gotzmannS.roundtrip",
                PASS if verify_decomposition(gS, ps.hilbert_polynomial(ps.ReducedSeries(rs.q, rs.d + 1))) else FAIL),
    ]
    for j, bj in enumerate(gS.B):
        cap = key_lemma_bound(eS, j)
        verdicts.append(Verdict(f"keyLemmaS.j{j}", PASS if bj <= cap else FAIL, f"B_{j}(S)={bj} <= {cap}"))
    b = bounds_report(
        rs, spec.n, e, eS, g, ell=spec.ell, levels=spec.levels, depth_positive=dp,
        oracle_reg=None if oracle is None else oracle.reg,
        oracle_reg1=None if oracle is None else oracle.reg1,
        depth=None if oracle is None else oracle.depth,
    )
    report.e, report.eS, report.gotzmann, report.gotzmann_S, report.bounds = e, eS, g, gS, b
    report.verdicts = tuple(verdicts) + b.verdicts
    return report
