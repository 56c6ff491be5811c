"""Complete intersection -> lex ideal -> regularity against the upper bounds.

The lex ideal shares the Hilbert function of the complete intersection, so
every bound that only sees Hilbert coefficients is the same for both, while
the regularity jumps from the closed form sum(delta - 1) up to the lex
ideal's top generator degree.  This is the desk-scale version of the
"bounds are nearly attained" construction.

    python3 scripts/lex_sharpness.py [--max-n 5] [--max-delta 3]
"""
import argparse
from itertools import combinations_with_replacement

from hilbreg import polyseries as ps
from hilbreg.bounds import theorem_a_bound
from hilbreg.errors import HilbregError
from hilbreg.families import CompleteIntersection, ci_series, lexify, stable_regularity
from hilbreg.gotzmann import blancafort_bound, decompose

# lexification cost grows with the Gotzmann number; skip the large ones
MAX_S = 60


def rows(max_n, max_delta):
    for n in range(2, max_n + 1):
        for c in range(1, n):
            for degrees in combinations_with_replacement(range(2, max_delta + 1), c):
                hs, closed = ci_series(n, degrees)
                rs = ps.reduce(hs)
                e = ps.hilbert_coefficients(rs)
                g = decompose(e)
                if g.s > MAX_S:
                    continue
                try:
                    L = lexify(hs)
                except HilbregError as exc:
                    print(f"skip n={n} {degrees}: {exc}")
                    continue
                lex = stable_regularity(L)
                yield (n, degrees, e.e, closed.reg, lex.reg, lex.reg1,
                       blancafort_bound(g, 1), theorem_a_bound(e, rs.d, 1))


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--max-delta", type=int, default=3)
    args = ap.parse_args()

    head = f"{'n':>2} {'degrees':<14}{'e':<18}{'reg CI':>7}{'reg lex':>8}{'reg1 lex':>9}{'B-1':>6}{'thmA':>10}"
    print(head)
    print("-" * len(head))
    for n, degrees, e, reg_ci, reg_lex, reg1_lex, blanc, thm_a in rows(args.max_n, args.max_delta):
        assert reg1_lex is None or reg1_lex <= blanc <= thm_a
        print(f"{n:>2} {str(degrees):<14}{str(e):<18}{reg_ci:>7}{reg_lex:>8}"
              f"{'-' if reg1_lex is None else reg1_lex:>9}{blanc:>6}{thm_a:>10}")


if __name__ == "__main__":
    main()
