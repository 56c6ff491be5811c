"""Seeded random-ideal sweep.

Every instance draws from its own stream ``random.Random(f"{seed}/{index}")``
(Python's Mersenne Twister, string-seeded through SHA-512), so an instance
can be regenerated from ``(seed, index)`` alone and batches do not depend on
evaluation order.
"""
from __future__ import annotations

import random
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from . import polyseries as ps
from .analysis import analyze, explicit_spec
from .bounds import FAIL
from .combinat import monomials_of_degree
from .families import borel_closure, is_strongly_stable
from .monomials import MonomialIdeal, hilbert_series, minimalize

GENERATOR_ID = "python-random-mt19937/sha512-string-seed/v1"

# verdicts that follow from theorems and must never fail
THEOREM_CLAIMS = ("gotzmann", "keyLemma", "theoremA.ordering", "corollaryC", "lowerBounds.ordering")


@dataclass(frozen=True)
class SweepConfig:
    seed: int = 7
    count: int = 100
    n_min: int = 2
    n_max: int = 4
    max_deg: int = 5
    max_gens: int = 6
    stable_only: bool = False
    generator: str = GENERATOR_ID

    def __post_init__(self):
        if self.generator != GENERATOR_ID:
            raise ValueError(f"unknown generator {self.generator!r}; this build provides {GENERATOR_ID}")
        if not 1 <= self.n_min <= self.n_max or self.max_deg < 1 or self.max_gens < 1 or self.count < 0:
            raise ValueError(f"invalid sweep config {self}")
        if self.n_max < 2:
            raise ValueError("every ideal in one variable is Artinian or zero; need n_max >= 2")


def instance_stream(seed: int, index: int) -> random.Random:
    return random.Random(f"{seed}/{index}")


def random_monomial_ideal(rng: random.Random, n: int, max_gens: int, max_deg: int,
                          stable: bool = False, allow_artinian: bool = False,
                          max_attempts: int = 1000) -> MonomialIdeal:
    """Draw generators uniformly among monomials of degree ``1..max_deg``."""
    pool = [u for m in range(1, max_deg + 1) for u in monomials_of_degree(n, m)]
    for _ in range(max_attempts):
        k = rng.randint(1, max_gens)
        gens = [rng.choice(pool) for _ in range(k)]
        I = borel_closure(gens, n) if stable else minimalize(gens, n)
        if allow_artinian or ps.reduce(hilbert_series(I)).d >= 1:
            return I
    raise RuntimeError(f"no positive-dimensional ideal after {max_attempts} draws (n={n})")


def instance(config: SweepConfig, index: int) -> MonomialIdeal:
    rng = instance_stream(config.seed, index)
    n = rng.randint(config.n_min, config.n_max)
    return random_monomial_ideal(rng, n, config.max_gens, config.max_deg, stable=config.stable_only)


def batch(config: SweepConfig) -> List[MonomialIdeal]:
    return [instance(config, i) for i in range(config.count)]


@dataclass(frozen=True)
class InstanceResult:
    index: int
    ideal: MonomialIdeal
    stable: bool
    dim: int
    failures: Tuple[str, ...]
    statuses: Tuple[Tuple[str, str], ...]
    ratio: Optional[Fraction]
    question: Optional[Tuple[bool, bool]]
    dump: Optional[dict]


def run_instance(config: SweepConfig, index: int) -> InstanceResult:
    I = instance(config, index)
    report = analyze(explicit_spec(I))
    failures = tuple(v.claim for v in report.verdicts if v.status == FAIL)
    b = report.bounds
    ratio = question = None
    if b.oracle_reg1 is not None:
        ratio = Fraction(b.oracle_reg1 + 2, b.theorem_a[1] + 2)
    if b.question is not None:
        question = (b.question.reg_part, b.question.coefficient_part)
    dump = None
    if failures:
        dump = report.to_dict()
        dump["sweep"] = {"seed": config.seed, "index": index, "generator": config.generator}
    statuses = tuple((claim_family(v.claim), v.status) for v in report.verdicts)
    return InstanceResult(index, I, is_strongly_stable(I), b.d, failures, statuses, ratio, question, dump)


def claim_family(claim: str) -> str:
    return re.sub(r"\.[ijp]\d+$", "", claim)


@dataclass
class SweepResult:
    config: SweepConfig
    instances: int = 0
    stable_instances: int = 0
    checks: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    max_ratio: Optional[Fraction] = None
    max_ratio_index: Optional[int] = None
    max_ratio_by_dim: dict = field(default_factory=dict)
    question_counts: dict = field(default_factory=lambda: {"instances": 0, "regPart": 0, "coefficientPart": 0})

    @property
    def theorem_failures(self) -> list:
        return [f for f in self.failures if any(c.startswith(THEOREM_CLAIMS) for c in f["claims"])]

    def summary(self) -> dict:
        return {
            "config": {"seed": self.config.seed, "count": self.config.count,
                       "nMin": self.config.n_min, "nMax": self.config.n_max,
                       "maxDeg": self.config.max_deg, "maxGens": self.config.max_gens,
                       "stableOnly": self.config.stable_only, "generator": self.config.generator},
            "instances": self.instances,
            "stableInstances": self.stable_instances,
            "checks": self.checks,
            "failureCount": len(self.failures),
            "sharpness": {"maxRatio": self.max_ratio, "index": self.max_ratio_index,
                          "maxRatioByDimension": {f"d{d}": r for d, r in sorted(self.max_ratio_by_dim.items())},
                          "definition": "(reg1 + 2) / (theoremA(p=1) + 2)"},
            "questionEvidence": self.question_counts,
        }


def _run(args):
    return run_instance(*args)


def sweep(config: SweepConfig, jobs: int = 1) -> SweepResult:
    work = [(config, i) for i in range(config.count)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_run, work, chunksize=16))
    else:
        results = [_run(w) for w in work]
    out = SweepResult(config)
    for r in results:
        out.instances += 1
        out.stable_instances += r.stable
        for claim, status in r.statuses:
            tally = out.checks.setdefault(claim, {"pass": 0, "fail": 0, "no-oracle": 0})
            tally[status] += 1
        if r.failures:
            out.failures.append({"index": r.index, "claims": list(r.failures), "report": r.dump})
        if r.ratio is not None and (out.max_ratio is None or r.ratio > out.max_ratio):
            out.max_ratio, out.max_ratio_index = r.ratio, r.index
        if r.ratio is not None and r.ratio > out.max_ratio_by_dim.get(r.dim, -1):
            out.max_ratio_by_dim[r.dim] = r.ratio
        if r.question is not None:
            out.question_counts["instances"] += 1
            out.question_counts["regPart"] += r.question[0]
            out.question_counts["coefficientPart"] += r.question[1]
    return out
