"""Exact and p-adic arithmetic kernels.

Rationals are :class:`fractions.Fraction`.  p-adic integers are held to an
*absolute* precision: a :class:`PadicNum` at precision ``A`` is a residue
class modulo ``p**A``, and dividing by ``p`` costs one digit.

The prime above ``p`` in Q(mu_{p-1}) is fixed once and for all by sending the
abstract root of unity zeta_{p-1} to ``teichmuller(g)`` where ``g`` is the
smallest positive primitive root mod ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, Sequence, Union

from .errors import (
    DenominatorDivisibleByP,
    MismatchedField,
    NonUnitDivisor,
    NotCoprime,
    NotDivisibleByP,
    PrecisionExhausted,
)

DEFAULT_PRECISION = 4

Rational = Union[int, Fraction]


# ---------------------------------------------------------------------------
# elementary number theory


def primes_up_to(n: int) -> list[int]:
    """All primes ``<= n`` by the sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, isqrt(n) + 1, 2))


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of a positive integer by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    """Smallest positive primitive root modulo the odd prime ``p``.

    Found by checking the multiplicative order of every candidate, so the
    choice is deterministic.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"{p} is not an odd prime")
    for g in range(2, p):
        x, order = g, 1
        while x != 1:
            x = x * g % p
            order += 1
        if order == p - 1:
            return g
    raise AssertionError("unreachable: every odd prime has a primitive root")


@lru_cache(maxsize=None)
def discrete_log_table(p: int) -> tuple[int, ...]:
    """``table[a]`` is the index ``j`` with ``g**j == a (mod p)``; ``table[0] = -1``."""
    g = primitive_root(p)
    table = [-1] * p
    x = 1
    for j in range(p - 1):
        table[x] = j
        x = x * g % p
    return tuple(table)


# ---------------------------------------------------------------------------
# p-adic numbers


@dataclass(frozen=True)
class PadicNum:
    """An element of Z_p known modulo ``p**prec``."""

    p: int
    prec: int
    residue: int

    def __post_init__(self):
        if self.prec < 1:
            raise PrecisionExhausted(f"precision {self.prec} leaves no digits")
        object.__setattr__(self, "residue", self.residue % self.p**self.prec)

    @property
    def modulus(self) -> int:
        return self.p**self.prec

    @property
    def valuation(self) -> int:
        """``min(v_p(residue), prec)``; see :attr:`exact_valuation`."""
        if self.residue == 0:
            return self.prec
        return valuation(self.residue, self.p)

    @property
    def exact_valuation(self) -> bool:
        return self.residue != 0

    def is_zero(self) -> bool:
        return self.residue == 0

    def is_unit(self) -> bool:
        return self.residue % self.p != 0

    def reduce(self, prec: int) -> PadicNum:
        if prec > self.prec:
            raise ValueError(f"cannot raise precision {self.prec} -> {prec}")
        return PadicNum(self.p, prec, self.residue)

    def signed(self) -> int:
        """Representative in ``(-p**prec/2, p**prec/2]``."""
        m = self.modulus
        r = self.residue
        return r - m if r > m // 2 else r

    # arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> PadicNum:
        if isinstance(other, PadicNum):
            if other.p != self.p:
                raise MismatchedField(f"p={self.p} vs p={other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            return embed_rational(other, self.p, self.prec)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        prec = min(self.prec, o.prec)
        return PadicNum(self.p, prec, self.residue + o.residue)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        prec = min(self.prec, o.prec)
        return PadicNum(self.p, prec, self.residue - o.residue)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return PadicNum(self.p, self.prec, -self.residue)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        prec = min(self.prec, o.prec)
        return PadicNum(self.p, prec, self.residue * o.residue)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return PadicNum(self.p, self.prec, pow(self.residue, e, self.modulus))

    def inverse(self) -> PadicNum:
        if not self.is_unit():
            raise NonUnitDivisor(f"{self.residue} is not a unit mod {self.p}")
        return PadicNum(self.p, self.prec, pow(self.residue, -1, self.modulus))

    def div_unit(self, other) -> PadicNum:
        o = self._coerce(other)
        prec = min(self.prec, o.prec)
        return PadicNum(self.p, prec, self.residue) * o.reduce(prec).inverse()

    __truediv__ = div_unit

    def div_by_p(self) -> PadicNum:
        if self.residue % self.p:
            raise NotDivisibleByP(f"{self.residue} mod {self.p}**{self.prec}")
        if self.prec == 1:
            raise PrecisionExhausted("dividing by p at precision 1 leaves no digits")
        return PadicNum(self.p, self.prec - 1, self.residue // self.p)

    def __repr__(self):
        return f"PadicNum({self.residue} mod {self.p}^{self.prec})"


def embed_rational(q: Rational, p: int, prec: int = DEFAULT_PRECISION) -> PadicNum:
    """Image of a p-integral rational in ``Z/p**prec``."""
    q = Fraction(q)
    if q.denominator % p == 0:
        raise DenominatorDivisibleByP(f"{q} is not {p}-integral")
    m = p**prec
    return PadicNum(p, prec, q.numerator * pow(q.denominator, -1, m))


def padic_arith(x: PadicNum, y: PadicNum | None, op: str) -> PadicNum:
    """Dispatch form of the p-adic operations; ``y`` is ignored for ``div_by_p``."""
    if op == "div_by_p":
        return x.div_by_p()
    if y is None:
        raise TypeError(f"{op} needs two operands")
    if x.p != y.p:
        raise MismatchedField(f"p={x.p} vs p={y.p}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div_unit":
        return x.div_unit(y)
    raise ValueError(f"unknown p-adic operation {op!r}")


def teichmuller(n: int, p: int, prec: int = DEFAULT_PRECISION) -> PadicNum:
    """The (p-1)-th root of unity in Z_p congruent to ``n`` mod ``p``.

    Computed as ``n**(p**(prec-1))``, the fixed point reached by ``prec - 1``
    applications of the Frobenius-style Hensel step.
    """
    if n % p == 0:
        raise NotCoprime(f"{p} divides {n}")
    m = p**prec
    return PadicNum(p, prec, pow(n % m, p ** (prec - 1), m))


@lru_cache(maxsize=256)
def teichmuller_table(p: int, prec: int) -> tuple[int, ...]:
    """Residues ``omega(a) mod p**prec`` for ``a = 0..p-1`` (``omega(0) = 0``)."""
    m = p**prec
    e = p ** (prec - 1)
    return (0,) + tuple(pow(a, e, m) for a in range(1, p))


# ---------------------------------------------------------------------------
# cyclotomic numbers


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    # x^n - 1 divided by Phi_d for every proper divisor d of n
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]  # den is monic
        quot[i - dd] = c
        if c:
            for j, b in enumerate(den):
                num[i - dd + j] -= c * b
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return quot


def _reduce_mod_cyclotomic(coeffs: list, phi: Sequence[int]) -> list:
    d = len(phi) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[i]
        if c:
            for j in range(d):
                if phi[j]:
                    coeffs[i - d + j] -= c * phi[j]
        coeffs[i] = 0
    coeffs = coeffs[:d]
    return coeffs + [0] * (d - len(coeffs))


@lru_cache(maxsize=None)
def _zeta_powers(p: int) -> tuple[tuple[int, ...], ...]:
    """Integer coordinates of ``zeta**j`` for ``j = 0..p-2``."""
    n = p - 1
    phi = cyclotomic_polynomial(n)
    out = []
    for j in range(n):
        mono = [0] * j + [1]
        out.append(tuple(_reduce_mod_cyclotomic(mono, phi)))
    return tuple(out)


def _common_denominator(coeffs: Iterable[Fraction]) -> tuple[list[int], int]:
    coeffs = list(coeffs)
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


@dataclass(frozen=True)
class CyclotomicNumber:
    """Element of Q(zeta_{p-1}) in the power basis of a fixed zeta_{p-1}."""

    p: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        d = len(cyclotomic_polynomial(self.p - 1)) - 1
        cs = tuple(Fraction(c) for c in self.coeffs)
        if len(cs) != d:
            raise ValueError(f"expected {d} coordinates, got {len(cs)}")
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @classmethod
    def from_rational(cls, p: int, q: Rational) -> CyclotomicNumber:
        d = len(cyclotomic_polynomial(p - 1)) - 1
        return cls(p, (Fraction(q),) + (Fraction(0),) * (d - 1))

    @classmethod
    def zeta_power(cls, p: int, j: int) -> CyclotomicNumber:
        return cls(p, _zeta_powers(p)[j % (p - 1)])

    @classmethod
    def from_zeta_sum(cls, p: int, terms: Iterable[tuple[Rational, int]]) -> CyclotomicNumber:
        """``sum(c * zeta**j for c, j in terms)``."""
        table = _zeta_powers(p)
        acc = [Fraction(0)] * len(table[0])
        for c, j in terms:
            row = table[j % (p - 1)]
            for i, r in enumerate(row):
                if r:
                    acc[i] += c * r
        return cls(p, tuple(acc))

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def _check(self, other: CyclotomicNumber):
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if other.p != self.p:
            raise MismatchedField(f"Q(mu_{self.p - 1}) vs Q(mu_{other.p - 1})")
        return other

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_rational(self.p, other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.p, tuple(a * other for a in self.coeffs))
        if self._check(other) is NotImplemented:
            return NotImplemented
        # integer convolution over a common denominator keeps this fast
        xa, da = _common_denominator(self.coeffs)
        xb, db = _common_denominator(other.coeffs)
        prod = [0] * (len(xa) + len(xb) - 1)
        for i, a in enumerate(xa):
            if a:
                for j, b in enumerate(xb):
                    prod[i + j] += a * b
        red = _reduce_mod_cyclotomic(prod, cyclotomic_polynomial(self.p - 1))
        den = da * db
        return CyclotomicNumber(self.p, tuple(Fraction(c, den) for c in red))

    __rmul__ = __mul__

    def embed(self, prec: int = DEFAULT_PRECISION) -> PadicNum:
        """Image under zeta -> teichmuller(g) in ``Z/p**prec``.

        Coordinates may have ``p`` in their denominators even when the element
        is integral at the chosen prime, so the numerator is evaluated with
        extra digits and the power of ``p`` divided out afterwards.
        """
        p = self.p
        nums, den = _common_denominator(self.coeffs)
        e = 0
        while den % p == 0:
            den //= p
            e += 1
        work = prec + e
        m = p**work
        z = pow(primitive_root(p), p ** (work - 1), m)
        acc = 0
        for c in reversed(nums):
            acc = (acc * z + c) % m
        val = PadicNum(p, work, acc)
        for _ in range(e):
            val = val.div_by_p()
        return val.div_unit(den)

    def __repr__(self):
        terms = [f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"CyclotomicNumber(p={self.p}: {' + '.join(terms) or '0'})"


def cyclo_arith(x: CyclotomicNumber, y: CyclotomicNumber, op: str) -> CyclotomicNumber:
    if x.p != y.p:
        raise MismatchedField(f"Q(mu_{x.p - 1}) vs Q(mu_{y.p - 1})")
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown cyclotomic operation {op!r}")
