"""Truncated q-expansions with p-adic coefficients.

A :class:`QExpansion` stores residues ``a_0..a_M`` modulo ``p**prec`` plus
weight and character bookkeeping.  Binary operations truncate to the shorter
input; nothing is ever padded with assumed zeros.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .arith import PadicNum, embed_rational
from .errors import GradingMismatch, MismatchedField, PrecisionTooLow

DEFAULT_TRUNCATION = 200
MAX_TRUNCATION = 1000


@dataclass(frozen=True)
class QExpansion:
    p: int
    weight: int
    char_exponent: int
    prec: int
    residues: tuple[int, ...]
    label: str = ""

    def __post_init__(self):
        if not self.residues:
            raise ValueError("a q-expansion needs at least a constant term")
        m = self.p**self.prec
        object.__setattr__(self, "char_exponent", self.char_exponent % (self.p - 1))
        object.__setattr__(self, "residues", tuple(r % m for r in self.residues))

    @classmethod
    def from_coefficients(cls, p: int, weight: int, char_exponent: int, prec: int,
                          coeffs: Sequence, label: str = "") -> QExpansion:
        """Build from ints, Fractions or PadicNums (reduced to ``prec``)."""
        res = []
        for c in coeffs:
            if isinstance(c, PadicNum):
                if c.p != p:
                    raise MismatchedField(f"coefficient over p={c.p}, series over p={p}")
                if c.prec < prec:
                    raise PrecisionTooLow(f"coefficient known to p^{c.prec} < p^{prec}")
                res.append(c.residue)
            elif isinstance(c, Fraction):
                res.append(embed_rational(c, p, prec).residue)
            else:
                res.append(int(c))
        return cls(p, weight, char_exponent, prec, tuple(res), label)

    @property
    def modulus(self) -> int:
        return self.p**self.prec

    @property
    def truncation(self) -> int:
        return len(self.residues) - 1

    @property
    def coeffs(self) -> list[PadicNum]:
        return [PadicNum(self.p, self.prec, r) for r in self.residues]

    def __getitem__(self, n: int) -> PadicNum:
        return PadicNum(self.p, self.prec, self.residues[n])

    def is_semicusp(self) -> bool:
        return self.residues[0] == 0

    def truncate(self, M: int) -> QExpansion:
        if M > self.truncation:
            raise ValueError(f"cannot extend truncation {self.truncation} -> {M}")
        return replace(self, residues=self.residues[: M + 1])

    def reduce(self, prec: int) -> QExpansion:
        if prec > self.prec:
            raise PrecisionTooLow(f"cannot raise precision {self.prec} -> {prec}")
        return replace(self, prec=prec)

    def relabel(self, label: str) -> QExpansion:
        return replace(self, label=label)

    def scale(self, c) -> QExpansion:
        c = _scalar(c, self.p, self.prec)
        prec = min(self.prec, c.prec)
        m = self.p**prec
        return replace(self, prec=prec, residues=tuple(r * c.residue % m for r in self.residues))

    def __add__(self, other: QExpansion) -> QExpansion:
        return qexp_linear(self, other, 1, 1)

    def __sub__(self, other: QExpansion) -> QExpansion:
        return qexp_linear(self, other, 1, -1)

    def __mul__(self, other):
        if isinstance(other, QExpansion):
            return qexp_mul(self, other)
        return self.scale(other)

    __rmul__ = scale

    # serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "k": self.weight,
            "eps_exponent": self.char_exponent,
            "precision": self.prec,
            "truncation": self.truncation,
            "coeffs": [str(r) for r in self.residues],
            "label": self.label,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> QExpansion:
        coeffs = tuple(int(c) for c in d["coeffs"])
        if len(coeffs) != d["truncation"] + 1:
            raise ValueError("truncation does not match the number of coefficients")
        return cls(d["p"], d["k"], d["eps_exponent"], d["precision"], coeffs, d.get("label", ""))

    @classmethod
    def from_json(cls, text: str) -> QExpansion:
        return cls.from_dict(json.loads(text))


def _scalar(c, p: int, prec: int) -> PadicNum:
    if isinstance(c, PadicNum):
        if c.p != p:
            raise MismatchedField(f"scalar over p={c.p}, series over p={p}")
        return c
    return embed_rational(c, p, prec)


def _check_same_prime(f: QExpansion, g: QExpansion) -> None:
    if f.p != g.p:
        raise MismatchedField(f"series over p={f.p} and p={g.p}")


def qexp_linear(f: QExpansion, g: QExpansion, alpha=1, beta=1) -> QExpansion:
    """``alpha*f + beta*g`` on the common range; both must have the same grading."""
    _check_same_prime(f, g)
    if f.weight != g.weight or f.char_exponent != g.char_exponent:
        raise GradingMismatch(
            f"(k={f.weight}, eps=w^{f.char_exponent}) vs (k={g.weight}, eps=w^{g.char_exponent})"
        )
    a = _scalar(alpha, f.p, f.prec)
    b = _scalar(beta, f.p, f.prec)
    prec = min(f.prec, g.prec, a.prec, b.prec)
    m = f.p**prec
    M = min(f.truncation, g.truncation)
    ar, br = a.residue, b.residue
    res = tuple((ar * x + br * y) % m for x, y in zip(f.residues[: M + 1], g.residues[: M + 1]))
    return QExpansion(f.p, f.weight, f.char_exponent, prec, res)


def qexp_mul(f: QExpansion, g: QExpansion) -> QExpansion:
    """Cauchy product; weights add and character exponents add mod ``p - 1``."""
    _check_same_prime(f, g)
    prec = min(f.prec, g.prec)
    m = f.p**prec
    M = min(f.truncation, g.truncation)
    a, b = f.residues[: M + 1], g.residues[: M + 1]
    out = [0] * (M + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(M + 1 - i):
                out[i + j] += x * b[j]
    return QExpansion(
        f.p,
        f.weight + g.weight,
        f.char_exponent + g.char_exponent,
        prec,
        tuple(c % m for c in out),
    )


def qexp_congruent_mod(f: QExpansion, g: QExpansion, m: int) -> tuple[bool, int | None]:
    """Whether ``f == g (mod p**m)`` on the common range, and the first index where not."""
    _check_same_prime(f, g)
    if m < 1 or m > min(f.prec, g.prec):
        raise PrecisionTooLow(f"congruence depth {m} exceeds shared precision {min(f.prec, g.prec)}")
    mod = f.p**m
    M = min(f.truncation, g.truncation)
    for n in range(M + 1):
        if (f.residues[n] - g.residues[n]) % mod:
            return False, n
    return True, None
