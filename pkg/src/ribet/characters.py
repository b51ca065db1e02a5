"""Dirichlet characters mod p, generalized Bernoulli numbers and L-values.

Every character mod ``p`` is a power ``omega**i`` of the Teichmuller
character.  Two value backends are supported: p-adic residues (the
embedding fixed in :mod:`ribet.arith`) and exact elements of Q(mu_{p-1}).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .arith import (
    DEFAULT_PRECISION,
    CyclotomicNumber,
    PadicNum,
    discrete_log_table,
    embed_rational,
    is_prime,
    teichmuller_table,
)
from .bernoulli import bernoulli_number, irregular_indices
from .errors import InternalInconsistency, IndexOutOfRange, TrivialCharacter

CLASS_NUMBER_BOUND = 200


@dataclass(frozen=True)
class DirichletCharacter:
    """The character ``n -> omega(n)**exponent`` modulo the odd prime ``p``.

    ``backend`` is ``"padic"`` (values in ``Z/p**prec``) or ``"cyclotomic"``
    (exact values, with ``omega(g**j) = zeta**j`` for the fixed primitive
    root ``g``).
    """

    p: int
    exponent: int
    backend: str = "padic"
    prec: int = DEFAULT_PRECISION

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % (self.p - 1))
        if self.backend not in ("padic", "cyclotomic"):
            raise ValueError(f"unknown backend {self.backend!r}")

    @property
    def is_trivial(self) -> bool:
        return self.exponent == 0

    @property
    def is_even(self) -> bool:
        return self.exponent % 2 == 0

    @property
    def is_odd(self) -> bool:
        return not self.is_even

    def with_precision(self, prec: int) -> DirichletCharacter:
        return DirichletCharacter(self.p, self.exponent, "padic", prec)

    def residues(self, prec: int | None = None) -> list[int]:
        """``chi(a) mod p**prec`` for ``a = 0..p-1``."""
        prec = self.prec if prec is None else prec
        m = self.p**prec
        return [pow(w, self.exponent, m) if a else 0 for a, w in enumerate(teichmuller_table(self.p, prec))]

    def __call__(self, n: int):
        return char_value(self, n)


def char_value(chi: DirichletCharacter, n: int) -> PadicNum | CyclotomicNumber:
    p = chi.p
    if chi.backend == "cyclotomic":
        if n % p == 0:
            return CyclotomicNumber.from_rational(p, 0)
        j = discrete_log_table(p)[n % p]
        return CyclotomicNumber.zeta_power(p, chi.exponent * j)
    if n % p == 0:
        return PadicNum(p, chi.prec, 0)
    w = teichmuller_table(p, chi.prec)[n % p]
    return PadicNum(p, chi.prec, pow(w, chi.exponent, p**chi.prec))


def _bernoulli_terms(n: int, p: int):
    # B_{n,chi} = sum_i C(n,i) B_i p^(i-1) S_{n-i},  S_j = sum_{a<p} chi(a) a^j
    for i in range(n + 1):
        yield n - i, comb(n, i) * bernoulli_number(i) * Fraction(p) ** i


def _check_bernoulli_args(n: int, chi: DirichletCharacter) -> None:
    if n < 1:
        raise IndexOutOfRange("generalized Bernoulli numbers need n >= 1")
    if chi.is_trivial:
        raise TrivialCharacter("B_{n,chi} for the trivial character is not supported")


def scaled_generalized_bernoulli(n: int, chi: DirichletCharacter, prec: int | None = None) -> PadicNum:
    """``p * B_{n,chi}`` in ``Z/p**prec``; always p-integral."""
    _check_bernoulli_args(n, chi)
    p = chi.p
    prec = chi.prec if prec is None else prec
    mod = p**prec
    values = chi.residues(prec)
    total = PadicNum(p, prec, 0)
    for j, coeff in _bernoulli_terms(n, p):
        s = sum(values[a] * pow(a, j, mod) for a in range(1, p))
        total = total + embed_rational(coeff, p, prec) * s
    return total


def generalized_bernoulli(n: int, chi: DirichletCharacter, prec: int | None = None) -> PadicNum:
    """B_{n,chi} in ``Z/p**prec``, from the Bernoulli-polynomial sum with modulus ``p``.

    The sum is formed at precision ``prec + n`` and divided by ``p`` once.
    Raises :class:`NotDivisibleByP` when B_{n,chi} is not p-integral, which
    happens only for ``chi = omega**(-n)``.
    """
    _check_bernoulli_args(n, chi)
    prec = chi.prec if prec is None else prec
    return scaled_generalized_bernoulli(n, chi, prec + n).div_by_p().reduce(prec)


def generalized_bernoulli_exact(n: int, chi: DirichletCharacter) -> CyclotomicNumber:
    """Exact B_{n,chi} in Q(mu_{p-1}) (same sum as :func:`generalized_bernoulli`)."""
    _check_bernoulli_args(n, chi)
    p = chi.p
    logs = discrete_log_table(p)
    total = CyclotomicNumber.from_rational(p, 0)
    for j, coeff in _bernoulli_terms(n, p):
        if coeff == 0:
            continue
        s = CyclotomicNumber.from_zeta_sum(p, ((a**j, chi.exponent * logs[a]) for a in range(1, p)))
        total = total + s * (coeff / p)
    return total


def l_value(s: int, chi: DirichletCharacter, prec: int | None = None) -> PadicNum:
    """L(s, chi) for ``s`` in {0, -1} via ``L(1-n, chi) = -B_{n,chi}/n``."""
    if s == 0:
        return -generalized_bernoulli(1, chi, prec)
    if s == -1:
        return (-generalized_bernoulli(2, chi, prec)).div_unit(2)
    raise ValueError(f"only s = 0 and s = -1 are supported, got {s}")


@dataclass(frozen=True)
class ClassNumberReport:
    p: int
    h_minus: int
    p_part_exponent: int
    irregular_count: int
    carlitz_bound: Fraction = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "carlitz_bound", Fraction(self.p - 1, 4))

    @property
    def t_below_bound(self) -> bool:
        return self.irregular_count < self.carlitz_bound

    @property
    def p_part_below_bound(self) -> bool:
        return self.p_part_exponent < self.carlitz_bound

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "h_minus": str(self.h_minus),
            "p_part_exponent": self.p_part_exponent,
            "irregular_count": self.irregular_count,
            "carlitz_bound": str(self.carlitz_bound),
        }


def relative_class_number(p: int, bound: int = CLASS_NUMBER_BOUND) -> ClassNumberReport:
    """h^- of Q(mu_p) as ``2p * prod_{chi odd} (-B_{1,chi}/2)``, computed exactly."""
    if p < 5 or not is_prime(p):
        raise IndexOutOfRange(f"p={p} must be a prime >= 5")
    if p > bound:
        raise IndexOutOfRange(f"p={p} exceeds the class-number bound {bound}")
    logs = discrete_log_table(p)
    # multiply p*B_{1,chi} = sum a*chi(a) (integral), rescale once at the end
    prod = CyclotomicNumber.from_rational(p, 1)
    for i in range(1, p - 1, 2):
        prod = prod * CyclotomicNumber.from_zeta_sum(p, ((a, i * logs[a]) for a in range(1, p)))
    if not prod.is_rational():
        raise InternalInconsistency(f"odd-character product for p={p} is not rational")
    r = (p - 1) // 2
    h = 2 * p * prod.rational_value() * Fraction(-1, 2 * p) ** r
    if h.denominator != 1 or h <= 0:
        raise InternalInconsistency(f"h^- for p={p} came out as {h}")
    h_int = h.numerator
    e = 0
    while h_int % p ** (e + 1) == 0:
        e += 1
    return ClassNumberReport(p, h_int, e, len(irregular_indices(p)))


def carlitz_check(p: int, bound: int = CLASS_NUMBER_BOUND) -> bool:
    """``t < (p-1)/4`` and ``p**t`` divides h^-, where t counts irregular indices."""
    rep = relative_class_number(p, bound)
    t = rep.irregular_count
    return rep.t_below_bound and rep.h_minus % p**t == 0
