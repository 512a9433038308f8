"""Exact rational tables: Bernoulli numbers and their two-index extension.

Everything here is an exact ``fractions.Fraction``; no floats, ever.  The
two-index family C[m,n] is the structure-constant table of the commutator
part of the Hausdorff series once all commutators commute, and is computed
three independent ways (recursion, closed binomial form, mirrored recursion)
so the higher modules can cross-check each other.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

__all__ = [
    "bernoulli",
    "check_bernoulli_identity",
    "ext_bernoulli_recursive",
    "ext_bernoulli_closed",
    "ext_bernoulli_prime",
    "gamma_coefficients",
    "format_rational",
    "parse_rational",
]

# Tables grow on demand and entries are never rewritten (callers may share
# them read-only across threads; precompute before any parallel section).
_BERN: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
_C: dict[tuple[int, int], Fraction] = {}
_C_PRIME: dict[tuple[int, int], Fraction] = {}


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (B_1 = -1/2), from sum_{k=0}^{m} C(m+1,k) B_k = 0."""
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    while len(_BERN) <= n:
        m = len(_BERN)
        if m % 2 == 1:
            _BERN.append(Fraction(0))
            continue
        s = sum(comb(m + 1, k) * _BERN[k] for k in range(m))
        _BERN.append(Fraction(-s, m + 1))
    return _BERN[n]


def check_bernoulli_identity(m: int, variant: str) -> bool:
    """Exact check of the three binomial relations satisfied by the B_n.

    variant "a": sum_{n=1}^{m} C(m+1,n) B_n = -1
    variant "b": sum_{k=1}^{[m/2]} C(m+1,2k) B_{2k} = (m-1)/2
    variant "c": sum_{n=1}^{m} (-1)^n C(m+1,n) B_n = m
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if variant == "a":
        s = sum(comb(m + 1, n) * bernoulli(n) for n in range(1, m + 1))
        return s == -1
    if variant == "b":
        s = sum(comb(m + 1, 2 * k) * bernoulli(2 * k) for k in range(1, m // 2 + 1))
        return s == Fraction(m - 1, 2)
    if variant == "c":
        s = sum((-1) ** n * comb(m + 1, n) * bernoulli(n) for n in range(1, m + 1))
        return s == m
    raise ValueError(f"unknown variant {variant!r}")


def ext_bernoulli_recursive(m: int, n: int) -> Fraction:
    """C[m,n] by the defining recursion seeded with C[1,n] = B_n.

    C[m+1,n] = n/(n+1) C[m,n+1] - 1/(n+1) sum_{k=1}^{n} C(n+1,k) B_k C[m,n-k+1]
    """
    if m < 1 or n < 1:
        raise ValueError("indices must be >= 1")
    if m == 1:
        return bernoulli(n)
    key = (m, n)
    if key not in _C:
        s = Fraction(n, n + 1) * ext_bernoulli_recursive(m - 1, n + 1)
        for k in range(1, n + 1):
            s -= Fraction(comb(n + 1, k), n + 1) * bernoulli(k) * ext_bernoulli_recursive(m - 1, n - k + 1)
        _C[key] = s
    return _C[key]


def ext_bernoulli_closed(m: int, n: int) -> Fraction:
    """C[m,n] in closed form: sum_{k=0}^{m-1} C(m,k) B_{n+k}."""
    if m < 1 or n < 1:
        raise ValueError("indices must be >= 1")
    return sum((comb(m, k) * bernoulli(n + k) for k in range(m)), Fraction(0))


def ext_bernoulli_prime(m: int, n: int) -> Fraction:
    """The mirrored family C'[m,n]: seeds C'[1,1] = 1/2, C'[1,n] = B_n (n >= 2),
    same recursion with C'[1,k] replacing B_k.  Satisfies C'[m,n] = (-1)^{m+n-1} C[m,n].
    """
    if m < 1 or n < 1:
        raise ValueError("indices must be >= 1")
    if m == 1:
        return Fraction(1, 2) if n == 1 else bernoulli(n)
    key = (m, n)
    if key not in _C_PRIME:
        s = Fraction(n, n + 1) * ext_bernoulli_prime(m - 1, n + 1)
        for k in range(1, n + 1):
            s -= Fraction(comb(n + 1, k), n + 1) * ext_bernoulli_prime(1, k) * ext_bernoulli_prime(m - 1, n - k + 1)
        _C_PRIME[key] = s
    return _C_PRIME[key]


def gamma_coefficients(N: int) -> list[Fraction]:
    """Coefficients g_k of 2x/(e^x - e^{-x}) = sum g_k x^{2k}, for 2k <= N.

    g_0 = 1 and sum_{k=0}^{n} g_{n-k}/(2k+1)! = 0 for n >= 1.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    out = [Fraction(1)]
    odd_fact = [1]  # (2k+1)! for k = 0, 1, ...
    for n in range(1, N // 2 + 1):
        odd_fact.append(odd_fact[-1] * 2 * n * (2 * n + 1))
        s = Fraction(0)
        for k in range(1, n + 1):
            s += Fraction(out[n - k], odd_fact[k])
        out.append(-s)
    return out


def format_rational(q: Fraction) -> str:
    """Serialize p/q as "p/q", or "p" when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
