"""Independent reference computations.

Nothing here imports the code paths it is used to check: Bernoulli numbers
come from power-series inversion, class numbers from the Maillet
determinant, irregularity from power sums mod p^2, and so on.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


def bernoulli_by_series(N: int) -> list[Fraction]:
    """B_0..B_N from ``t/(e^t - 1) = 1 / sum_{j>=0} t^j/(j+1)!``."""
    d = [Fraction(1, factorial(j + 1)) for j in range(N + 1)]
    inv = [Fraction(0)] * (N + 1)
    inv[0] = Fraction(1)
    for n in range(1, N + 1):
        inv[n] = -sum(d[j] * inv[n - j] for j in range(1, n + 1))
    return [inv[n] * factorial(n) for n in range(N + 1)]


def power_sum_brute(m: int, n: int) -> int:
    return sum(a**m for a in range(n))


def is_primitive_root(g: int, p: int) -> bool:
    return len({pow(g, j, p) for j in range(1, p)}) == p - 1


def teichmuller_by_newton(n: int, p: int, A: int) -> int:
    """Hensel/Newton iteration on ``x^(p-1) - 1`` starting from ``n mod p``."""
    m = p**A
    x = n % p
    for _ in range(A + 1):
        fx = pow(x, p - 1, m) - 1
        dfx = (p - 1) * pow(x, p - 2, m)
        x = (x - fx * pow(dfx, -1, m)) % m
    return x


def bareiss_det(mat: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; exact integer determinant."""
    a = [row[:] for row in mat]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def maillet_class_number(p: int) -> int:
    """|det [R(r * s^-1)]_{1<=r,s<=(p-1)/2}| / p^((p-3)/2)."""
    half = (p - 1) // 2
    mat = [[(r * pow(s, -1, p)) % p for s in range(1, half + 1)] for r in range(1, half + 1)]
    d = abs(bareiss_det(mat))
    scale = p ** ((p - 3) // 2)
    assert d % scale == 0, (p, d)
    return d // scale


def irregular_pairs_by_power_sums(bound: int) -> list[tuple[int, int]]:
    """``p | B_k`` iff ``sum_{a<p} a^k == 0 mod p^2`` for even ``k``, ``(p-1) !| k``."""
    out = []
    for p in range(5, bound):
        if any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            continue
        for k in range(2, p - 2, 2):
            if sum(pow(a, k, p * p) for a in range(1, p)) % (p * p) == 0:
                out.append((p, k))
    return out


def divisor_sum_naive(n: int, term) -> int:
    return sum(term(d, n // d) for d in range(1, n + 1) if n % d == 0)


def convolve_naive(a: list[int], b: list[int], M: int, mod: int) -> list[int]:
    return [sum(a[i] * b[n - i] for i in range(n + 1)) % mod for n in range(M + 1)]


def generalized_bernoulli_direct(n: int, chi_residues: list[int], p: int, A: int) -> int:
    """B_{1,chi}, B_{2,chi} mod p^A from the displayed Bernoulli-polynomial sums.

    ``chi_residues[a]`` must be known mod ``p^(A+2)``.
    """
    work = A + 2
    m = p**work
    if n == 1:
        # (1/p) sum chi(a) (a - p/2)
        s = sum(chi_residues[a] * (Fraction(a) - Fraction(p, 2)) for a in range(1, p))
        s = s / p
    elif n == 2:
        # (1/p) sum chi(a) (a^2 - p a + p^2/6)
        s = sum(chi_residues[a] * (Fraction(a * a - p * a) + Fraction(p * p, 6)) for a in range(1, p))
        s = s / p
    else:
        raise ValueError(n)
    if s.denominator % p == 0:
        raise ArithmeticError("value is not p-integral")
    return s.numerator * pow(s.denominator, -1, m) % p**A
