"""Command-line front end.

    hilbreg analyze SPEC [--report OUT] [--levels 1,2] [--max-lex-degree M]
    hilbreg lexify SPEC [--max-lex-degree M]
    hilbreg sweep --seed S --count N [--n-min --n-max --max-deg --max-gens] [--stable-only]
    hilbreg selftest

Exit codes: 0 all verdicts pass (or have no oracle), 1 a verdict failed,
2 invalid input, 3 internal inconsistency.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from importlib import resources

from . import analysis
from .errors import HilbregError, NotAdmissible
from .families import LexOf, family_series, lex_generators, lexify, default_lex_degree
from .monomials import format_monomial
from .sweep import SweepConfig, sweep

FIXTURES = ("quadric_hypersurface", "cyclic_polytope_4_2", "powers_3_2_1", "lex_ci_4_22")


def _levels(text):
    return tuple(int(x) for x in text.split(",") if x.strip())


def _with_overrides(spec, args):
    changes = {}
    if getattr(args, "levels", None):
        changes["levels"] = args.levels
    if getattr(args, "max_lex_degree", None) is not None:
        changes["max_lex_degree"] = args.max_lex_degree
        if isinstance(spec.family, LexOf) and spec.family.max_degree is None:
            changes["family"] = LexOf(spec.family.inner, args.max_lex_degree)
    return dataclasses.replace(spec, **changes) if changes else spec


def cmd_analyze(args) -> int:
    spec = _with_overrides(analysis.load_spec(args.spec), args)
    report = analysis.analyze(spec)
    text = report.dumps()
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for v in report.failed:
        print(f"FAIL {v.claim}: {v.detail}", file=sys.stderr)
    return report.exit_code


def cmd_lexify(args) -> int:
    spec = analysis.load_spec(args.spec)
    source = spec.family.inner if isinstance(spec.family, LexOf) else spec.family
    hs = family_series(source)
    M = args.max_lex_degree
    if M is None:
        M = spec.family.max_degree if isinstance(spec.family, LexOf) and spec.family.max_degree else None
    if M is None:
        M = spec.max_lex_degree if spec.max_lex_degree is not None else default_lex_degree(hs)
    lexify(hs, M)  # runs the soundness checks
    for m, gens in sorted(lex_generators(hs, M).items()):
        print(f"degree {m}: " + ", ".join(format_monomial(u) for u in gens))
    return 0


def cmd_sweep(args) -> int:
    config = SweepConfig(seed=args.seed, count=args.count, n_min=args.n_min, n_max=args.n_max,
                         max_deg=args.max_deg, max_gens=args.max_gens, stable_only=args.stable_only)
    result = sweep(config, jobs=args.jobs)
    sys.stdout.write(analysis.dumps(result.summary()))
    if args.failures_dir:
        import os
        os.makedirs(args.failures_dir, exist_ok=True)
        for f in result.failures:
            path = os.path.join(args.failures_dir, f"failure_seed{config.seed}_{f['index']}.json")
            with open(path, "w") as fh:
                fh.write(analysis.dumps(f["report"]))
    return 1 if result.failures else 0


EXPECT_PATHS = {
    "e": ("coefficients", "e"),
    "B": ("gotzmann", "B"),
    "c": ("gotzmann", "c"),
    "s": ("gotzmann", "s"),
    "blancafort.p1": ("bounds", "blancafort", "p1"),
    "theoremA.p1": ("bounds", "theoremA", "p1"),
    "lowerRoots": ("bounds", "lowerRoots"),
    "lowerBinomial": ("bounds", "lowerBinomial"),
    "propD1.isEquality": ("bounds", "propD1", "isEquality"),
    "oracle.reg": ("oracle", "reg"),
    "oracle.reg1": ("oracle", "reg1"),
}


def _lookup(doc, key):
    for part in EXPECT_PATHS[key]:
        doc = doc[part]
    return doc


def load_fixture(name):
    return json.loads(resources.files("hilbreg").joinpath(f"fixtures/{name}.json").read_text())


def cmd_selftest(args) -> int:
    ok = True
    for name in FIXTURES:
        doc = load_fixture(name)
        report = analysis.analyze(analysis.parse_spec(doc))
        out = analysis.canonical(report.to_dict())
        mismatches = []
        for key, want in doc.get("expect", {}).items():
            got = _lookup(out, key)
            if got != want:
                mismatches.append(f"{key}: expected {want}, got {got}")
        status = "PASS" if not mismatches and report.exit_code == 0 else "FAIL"
        ok &= status == "PASS"
        print(f"{status} fixture {name}" + "".join(f"\n    {m}" for m in mismatches)
              + "".join(f"\n    verdict {v.claim} failed" for v in report.failed))
    result = sweep(SweepConfig(seed=7, count=100))
    status = "PASS" if not result.failures else "FAIL"
    ok &= status == "PASS"
    print(f"{status} sweep seed=7 count=100: {len(result.failures)} failures, "
          f"max sharpness ratio {result.max_ratio}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hilbreg", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full bounds report for one ideal")
    p.add_argument("spec")
    p.add_argument("--report")
    p.add_argument("--levels", type=_levels)
    p.add_argument("--max-lex-degree", type=int)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("lexify", help="minimal generators of the lex ideal, per degree")
    p.add_argument("spec")
    p.add_argument("--max-lex-degree", type=int)
    p.set_defaults(func=cmd_lexify)

    p = sub.add_parser("sweep", help="seeded random-ideal sweep")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--max-deg", type=int, default=5)
    p.add_argument("--max-gens", type=int, default=6)
    p.add_argument("--stable-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--failures-dir")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("selftest", help="run the shipped fixtures and a seeded sweep")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotAdmissible as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3
    except (HilbregError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
