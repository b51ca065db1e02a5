"""Bernoulli numbers, Bernoulli polynomials, power sums and irregular pairs."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .arith import embed_rational, is_prime, primes_up_to
from .errors import IndexOutOfRange


class BernoulliCache:
    """Append-only table of B_n with the convention B_1 = -1/2.

    Entries come from ``sum_{k=0}^{m} C(m+1, k) B_k = 0`` (m >= 1).  Reads of
    already computed entries take no lock; extension is serialized.
    """

    def __init__(self):
        self._table: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._table)

    def extend_to(self, n: int) -> None:
        if n < len(self._table):
            return
        with self._lock:
            table = list(self._table)
            for m in range(len(table), n + 1):
                if m % 2:
                    table.append(Fraction(0))
                    continue
                s = 1 - Fraction(m + 1, 2)
                for k in range(2, m, 2):
                    s += comb(m + 1, k) * table[k]
                table.append(-s / (m + 1))
            self._table = table

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexOutOfRange(f"negative Bernoulli index {n}")
        if n >= len(self._table):
            self.extend_to(n)
        return self._table[n]


_CACHE = BernoulliCache()


def bernoulli_number(n: int) -> Fraction:
    return _CACHE[n]


def bernoulli_polynomial(n: int) -> list[Fraction]:
    """Coefficients of B_n(X), constant term first."""
    # B_n(X) = sum_i C(n, i) B_i X^(n-i)
    coeffs = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        coeffs[n - i] = comb(n, i) * bernoulli_number(i)
    return coeffs


def eval_polynomial(coeffs: list[Fraction], x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def power_sum(m: int, n: int) -> Fraction:
    """``sum_{a=0}^{n-1} a**m`` via the Bernoulli closed form.

    The ``a = 0`` term makes ``power_sum(0, n) == n``.
    """
    total = sum(comb(m + 1, k) * bernoulli_number(k) * n ** (m + 1 - k) for k in range(m + 1))
    return Fraction(total) / (m + 1)


@dataclass(frozen=True, order=True)
class IrregularPair:
    p: int
    k: int

    def __post_init__(self):
        if not is_irregular_pair(self.p, self.k):
            raise ValueError(f"({self.p}, {self.k}) is not an irregular pair")

    def as_tuple(self) -> tuple[int, int]:
        return (self.p, self.k)


def _check_index(p: int, k: int) -> None:
    if p < 5 or not is_prime(p):
        raise IndexOutOfRange(f"p={p} must be a prime >= 5")
    if k % 2 or not 2 <= k <= p - 3:
        raise IndexOutOfRange(f"k={k} must be even with 2 <= k <= {p - 3}")


def is_irregular_pair(p: int, k: int) -> bool:
    _check_index(p, k)
    return bernoulli_number(k).numerator % p == 0


def irregular_indices(p: int) -> list[int]:
    if p < 5 or not is_prime(p):
        raise IndexOutOfRange(f"p={p} must be a prime >= 5")
    return [k for k in range(2, p - 2, 2) if bernoulli_number(k).numerator % p == 0]


def scan_irregular(bound: int) -> list[IrregularPair]:
    """Every irregular pair with ``p < bound``, ordered by ``(p, k)``.

    Each numerator is computed once and tested against all larger primes.
    """
    if bound > 1000:
        raise IndexOutOfRange("scan bound is limited to 1000")
    primes = [p for p in primes_up_to(bound - 1) if p >= 5]
    pairs = []
    for k in range(2, max(bound - 3, 2), 2):
        num = bernoulli_number(k).numerator
        for p in primes:
            if p >= k + 3 and num % p == 0:
                pairs.append((p, k))
    return [IrregularPair(p, k) for p, k in sorted(pairs)]


def verify_power_sum_congruence(p: int, m: int) -> bool:
    """Check ``p*B_m == sum_{a=1}^{p-1} a**m (mod p**2)`` for even ``m``."""
    if p < 5 or m < 2 or m % 2:
        raise IndexOutOfRange(f"need p >= 5 and even m >= 2, got p={p}, m={m}")
    lhs = embed_rational(p * bernoulli_number(m), p, 2)
    rhs = sum(pow(a, m, p * p) for a in range(1, p))
    return lhs.residue == rhs % (p * p)
