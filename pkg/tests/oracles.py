"""Independent reference computations used only by the tests."""
from fractions import Fraction
from itertools import product


def expand_series(numerator, n, T):
    """First ``T+1`` coefficients of ``N(z) / (1-z)^n`` by repeated prefix sums."""
    coeffs = [0] * (T + 1)
    for i, a in enumerate(numerator[:T + 1]):
        coeffs[i] = a
    for _ in range(n):
        acc = 0
        for t in range(T + 1):
            acc += coeffs[t]
            coeffs[t] = acc
    return coeffs


def lagrange(points):
    """Coefficients (lowest first) of the interpolating polynomial through ``points``."""
    k = len(points)
    out = [Fraction(0)] * k
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for m in range(len(basis) - 1):
                basis[m] -= xj * basis[m + 1]
            denom *= xi - xj
        for m, b in enumerate(basis):
            out[m] += yi * b / denom
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def all_monomials(n, m):
    """Degree-``m`` monomials from a plain Cartesian product, no ordering assumed."""
    return [u for u in product(range(m + 1), repeat=n) if sum(u) == m]


def falling_binomial(a, b):
    num = 1
    for i in range(b):
        num *= a - i
    den = 1
    for i in range(2, b + 1):
        den *= i
    return Fraction(num, den)
