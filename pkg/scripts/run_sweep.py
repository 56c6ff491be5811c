"""Seeded sweep over random monomial ideals, printed as tables.

    python3 scripts/run_sweep.py --seed 7 --count 500 [--stable-only] [--jobs 4]

Prints the per-claim tally, the sharpness ratio (reg1 + 2) / (theoremA + 2)
per Krull dimension, and the Question evidence counts.  Exits 1 on any
failed verdict.
"""
import argparse
import sys

from hilbreg.sweep import SweepConfig, sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=4)
    ap.add_argument("--max-deg", type=int, default=5)
    ap.add_argument("--max-gens", type=int, default=6)
    ap.add_argument("--stable-only", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    config = SweepConfig(seed=args.seed, count=args.count, n_min=args.n_min, n_max=args.n_max,
                         max_deg=args.max_deg, max_gens=args.max_gens, stable_only=args.stable_only)
    result = sweep(config, jobs=args.jobs)

    print(f"seed {config.seed}, {result.instances} instances "
          f"({result.stable_instances} strongly stable)\n")
    print(f"{'claim':<34}{'pass':>7}{'fail':>7}{'no-oracle':>11}")
    for claim, tally in sorted(result.checks.items()):
        print(f"{claim:<34}{tally['pass']:>7}{tally['fail']:>7}{tally['no-oracle']:>11}")

    print("\nsharpness (reg1 + 2) / (theoremA(p=1) + 2)")
    for d, r in sorted(result.max_ratio_by_dim.items()):
        print(f"  d = {d}: max {r}  (~{float(r):.4f})")
    if result.max_ratio is not None:
        print(f"  overall: {result.max_ratio} at instance {result.max_ratio_index}")

    q = result.question_counts
    print(f"\nquestion evidence over {q['instances']} instances: "
          f"reg part {q['regPart']}, coefficient part {q['coefficientPart']}")
    for f in result.failures:
        print(f"FAIL instance {f['index']}: {', '.join(f['claims'])}", file=sys.stderr)
    return 1 if result.failures else 0


if __name__ == "__main__":
    sys.exit(main())
