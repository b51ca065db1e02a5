"""Explicit Eisenstein series as truncated q-expansions.

Character twisted series have p-adic coefficients from the start.  The
level-one ``G_k`` and the level-``p`` ``G_2`` are first built with exact
rational coefficients (:class:`RationalSeries`) and embedded afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .arith import DEFAULT_PRECISION, PadicNum, embed_rational
from .bernoulli import bernoulli_number
from .characters import (
    CLASS_NUMBER_BOUND,
    DirichletCharacter,
    carlitz_check,
    l_value,
    scaled_generalized_bernoulli,
)
from .errors import (
    BadCharacterParity,
    CaseThreeViolation,
    DenominatorDivisibleByP,
    EmbeddingFailure,
    IndexOutOfRange,
    InternalInconsistency,
)
from .qseries import DEFAULT_TRUNCATION, QExpansion


def divisor_sieve(M: int, term: Callable[[int, int], int], modulus: int | None = None) -> list[int]:
    """``out[n] = sum(term(d, n // d) for d | n)`` for ``1 <= n <= M``; ``out[0] = 0``."""
    out = [0] * (M + 1)
    for d in range(1, M + 1):
        for e in range(1, M // d + 1):
            out[d * e] += term(d, e)
    if modulus is not None:
        out = [x % modulus for x in out]
    return out


def _character_table(p: int, i: int, prec: int) -> list[int]:
    return DirichletCharacter(p, i, prec=prec).residues()


def _require_parity(p: int, i: int, even: bool) -> int:
    i %= p - 1
    if even and (i % 2 or i == 0):
        raise BadCharacterParity(f"omega^{i} is not a nontrivial even character mod {p}")
    if not even and i % 2 == 0:
        raise BadCharacterParity(f"omega^{i} is not an odd character mod {p}")
    return i


def _twisted_constant(p: int, i: int, n: int, prec: int, p_scaled: bool) -> int:
    # L(1-n, eps)/2 = -B_{n,eps}/(2n); p*B_{n,eps} is always p-integral
    chi = DirichletCharacter(p, i, prec=prec)
    if p_scaled:
        return (-scaled_generalized_bernoulli(n, chi, prec)).div_unit(2 * n).residue
    if (i + n) % (p - 1) == 0:
        raise EmbeddingFailure(
            f"B_{{{n},w^{i}}} is not {p}-integral; pass p_scaled=True to build p times the series"
        )
    return l_value(1 - n, chi).div_unit(2).residue


def eis_G2_char(p: int, i: int, M: int = DEFAULT_TRUNCATION, prec: int = DEFAULT_PRECISION,
                p_scaled: bool = False) -> QExpansion:
    """Weight 2, type ``eps = omega**i`` (even, nontrivial): ``L(-1,eps)/2 + sum sum eps(d) d q^n``.

    For ``eps = omega**(-2)`` the constant term has a pole at ``p``; with
    ``p_scaled`` the series ``p * G_{2,eps}`` is returned instead.
    """
    i = _require_parity(p, i, even=True)
    chi = _character_table(p, i, prec)
    mult = p if p_scaled else 1
    coeffs = divisor_sieve(M, lambda d, e: mult * chi[d % p] * d, p**prec)
    coeffs[0] = _twisted_constant(p, i, 2, prec, p_scaled)
    return QExpansion(p, 2, i, prec, tuple(coeffs), f"{'p*' if p_scaled else ''}G_2,w^{i}")


def eis_s2_char(p: int, i: int, M: int = DEFAULT_TRUNCATION, prec: int = DEFAULT_PRECISION) -> QExpansion:
    """Weight 2, type ``omega**i``: ``sum_{n>=1} sum_{d|n} eps(n/d) d q^n`` (a semi-cusp form)."""
    i = _require_parity(p, i, even=True)
    chi = _character_table(p, i, prec)
    coeffs = divisor_sieve(M, lambda d, e: chi[e % p] * d, p**prec)
    return QExpansion(p, 2, i, prec, tuple(coeffs), f"s_2,w^{i}")


def eis_G1_char(p: int, i: int, M: int = DEFAULT_TRUNCATION, prec: int = DEFAULT_PRECISION,
                p_scaled: bool = False) -> QExpansion:
    """Weight 1, type ``omega**i`` (odd): ``L(0,eps)/2 + sum sum eps(d) q^n``."""
    i = _require_parity(p, i, even=False)
    chi = _character_table(p, i, prec)
    mult = p if p_scaled else 1
    coeffs = divisor_sieve(M, lambda d, e: mult * chi[d % p], p**prec)
    coeffs[0] = _twisted_constant(p, i, 1, prec, p_scaled)
    return QExpansion(p, 1, i, prec, tuple(coeffs), f"{'p*' if p_scaled else ''}G_1,w^{i}")


@dataclass(frozen=True)
class RationalSeries:
    """A q-expansion with exact rational coefficients (trivial character)."""

    weight: int
    coeffs: tuple[Fraction, ...]
    label: str = ""

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def embed(self, p: int, prec: int = DEFAULT_PRECISION) -> QExpansion:
        try:
            res = tuple(embed_rational(c, p, prec).residue for c in self.coeffs)
        except DenominatorDivisibleByP as exc:
            raise EmbeddingFailure(f"{self.label or 'series'} is not {p}-integral: {exc}") from None
        return QExpansion(p, self.weight, 0, prec, res, self.label)


def eis_Gk_level1(k: int, M: int = DEFAULT_TRUNCATION) -> RationalSeries:
    """``-B_k/2k + sum sigma_{k-1}(n) q^n`` for even ``k >= 4``."""
    if k < 4 or k % 2:
        raise IndexOutOfRange(f"G_k needs even k >= 4, got {k}")
    sig = divisor_sieve(M, lambda d, e: d ** (k - 1))
    coeffs = [-bernoulli_number(k) / (2 * k)] + [Fraction(x) for x in sig[1:]]
    return RationalSeries(k, tuple(coeffs), f"G_{k}")


def embedded_Gk(p: int, k: int, M: int = DEFAULT_TRUNCATION, prec: int = DEFAULT_PRECISION) -> QExpansion:
    if k < 4 or k % 2:
        raise IndexOutOfRange(f"G_k needs even k >= 4, got {k}")
    # only the constant needs rational arithmetic; the divisor sums go straight to residues
    try:
        const = embed_rational(-bernoulli_number(k) / (2 * k), p, prec)
    except DenominatorDivisibleByP:
        raise EmbeddingFailure(f"the constant term of G_{k} is not {p}-integral") from None
    m = p**prec
    sig = divisor_sieve(M, lambda d, e: pow(d, k - 1, m), m)
    sig[0] = const.residue
    return QExpansion(p, k, 0, prec, tuple(sig), f"G_{k}")


def eis_G2_level_p(p: int, M: int = DEFAULT_TRUNCATION) -> RationalSeries:
    """``E_2(z) - p E_2(pz)`` with ``E_2 = -B_2/4 + sum sigma_1(n) q^n``."""
    sig = divisor_sieve(M, lambda d, e: d)
    e2_const = -bernoulli_number(2) / 4
    coeffs = [e2_const * (1 - p)]
    for n in range(1, M + 1):
        a = sig[n]
        if n % p == 0:
            a -= p * sig[n // p]
        coeffs.append(Fraction(a))
    return RationalSeries(2, tuple(coeffs), f"G_2(level {p})")


# ---------------------------------------------------------------------------
# unit constant term


@dataclass(frozen=True)
class UnitFormResult:
    g: QExpansion
    case_tag: str
    raw_constant: PadicNum
    pair: tuple[int, int] | None = None

    def as_dict(self) -> dict:
        return {
            "tag": self.case_tag,
            "pair": list(self.pair) if self.pair else None,
            "raw_constant": padic_dict(self.raw_constant),
        }


def padic_dict(x: PadicNum) -> dict:
    return {
        "residue": str(x.residue),
        "precision": x.prec,
        "valuation": x.valuation,
        "valuation_exact": x.exact_valuation,
    }


def _divides_bernoulli(p: int, n: int) -> bool:
    return bernoulli_number(n).numerator % p == 0


def case_ii_pair(p: int, k: int) -> tuple[int, int] | None:
    """Lexicographically first even ``(n, m)``, ``n <= m``, ``n + m == k (mod p-1)``,
    ``2 <= n, m <= p-3``, with ``p`` dividing neither B_n nor B_m."""
    for n in range(2, p - 2, 2):
        if _divides_bernoulli(p, n):
            continue
        for m in range(n, p - 2, 2):
            if (n + m - k) % (p - 1) == 0 and not _divides_bernoulli(p, m):
                return n, m
    return None


def build_unit_constant_form(p: int, k: int, M: int = DEFAULT_TRUNCATION,
                             prec: int = DEFAULT_PRECISION) -> UnitFormResult:
    """A weight 2 form of type ``omega**(k-2)`` with constant term normalized to 1.

    Case (i) uses ``G_{2,omega^(k-2)}`` when ``p`` does not divide B_k (and
    ``k >= 4``); case (ii) uses a product of two weight-one series.  If
    neither applies a :class:`CaseThreeViolation` is raised.
    """
    if k % 2 or not 2 <= k <= p - 3:
        raise IndexOutOfRange(f"k={k} must be even with 2 <= k <= {p - 3}")
    if k >= 4 and not _divides_bernoulli(p, k):
        g = eis_G2_char(p, k - 2, M, prec)
        tag, pair = "case_i", None
    else:
        pair = case_ii_pair(p, k)
        if pair is None:
            verdict = carlitz_check(p) if p <= CLASS_NUMBER_BOUND else None
            raise CaseThreeViolation(
                f"no unit-constant form for (p, k) = ({p}, {k}); carlitz_check({p}) = {verdict}"
            )
        n, m = pair
        g = eis_G1_char(p, n - 1, M, prec) * eis_G1_char(p, m - 1, M, prec)
        tag = "case_ii"
    raw = g[0]
    if not raw.is_unit():
        raise InternalInconsistency(f"{tag} constant term {raw} is not a unit")
    g = g.scale(raw.inverse()).relabel(f"g[{tag}{'' if pair is None else pair}]")
    return UnitFormResult(g, tag, raw, pair)
