"""Hecke and diamond operators acting on truncated q-expansions.

For a form of weight ``k`` and type ``eps`` the coefficient action is

    (T_l f)_n = a_{nl} + eps(l) l^(k-1) a_{n/l}

with the second term present only when ``l | n`` and ``eps(p) = 0``.  The
result is known through ``q^(M // l)``.
"""

from __future__ import annotations

from .arith import factorize, is_prime, teichmuller_table
from .errors import NotCoprime, TruncationTooShort
from .qseries import QExpansion, _scalar, qexp_congruent_mod, qexp_linear


def char_residue(f: QExpansion, d: int) -> int:
    """``eps(d) mod p**prec`` for the character of ``f`` (0 when ``p | d``)."""
    if d % f.p == 0:
        return 0
    w = teichmuller_table(f.p, f.prec)[d % f.p]
    return pow(w, f.char_exponent, f.modulus)


def hecke_Tl(f: QExpansion, l: int) -> QExpansion:
    if not is_prime(l):
        raise ValueError(f"{l} is not prime")
    M = f.truncation // l
    if M < 1:
        raise TruncationTooShort(f"T_{l} of a series known to q^{f.truncation} has no q^1 term")
    mod = f.modulus
    c = char_residue(f, l) * pow(l, f.weight - 1, mod) % mod
    a = f.residues
    out = []
    for n in range(M + 1):
        x = a[n * l]
        if n % l == 0:
            x += c * a[n // l]
        out.append(x % mod)
    return QExpansion(f.p, f.weight, f.char_exponent, f.prec, tuple(out), f"T_{l}({f.label})")


def diamond(f: QExpansion, d: int) -> QExpansion:
    """``<d> f = eps(d) f`` for a form of type ``eps``."""
    if d % f.p == 0:
        raise NotCoprime(f"{f.p} divides {d}")
    return f.scale(char_residue(f, d)).relabel(f"<{d}>({f.label})")


def _hecke_prime_power(f: QExpansion, l: int, r: int) -> QExpansion:
    # T_{l^(j+1)} = T_l T_{l^j} - l^(k-1) <l> T_{l^(j-1)}
    prev, cur = f, hecke_Tl(f, l)
    coeff = char_residue(f, l) * pow(l, f.weight - 1, f.modulus)
    for _ in range(r - 1):
        nxt = hecke_Tl(cur, l)
        prev, cur = cur, qexp_linear(nxt, prev, 1, -coeff)
    return cur


def hecke_Tn(f: QExpansion, n: int) -> QExpansion:
    """T_n from the prime-power recursion and ``T_mn = T_m T_n`` for coprime ``m, n``."""
    if n < 1:
        raise ValueError("n must be positive")
    if f.truncation // n < 1:
        raise TruncationTooShort(f"T_{n} of a series known to q^{f.truncation} has no q^1 term")
    out = f
    for l, r in factorize(n):
        out = _hecke_prime_power(out, l, r)
    return out.truncate(f.truncation // n).relabel(f"T_{n}({f.label})")


def is_eigen_mod(f: QExpansion, l: int, eigenvalue, m: int) -> tuple[bool, int | None]:
    """Whether ``T_l f == eigenvalue * f (mod p**m)`` through ``q^(M // l)``."""
    lam = _scalar(eigenvalue, f.p, f.prec)
    tf = hecke_Tl(f, l)
    return qexp_congruent_mod(tf, f.truncate(tf.truncation).scale(lam), m)
