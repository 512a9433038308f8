"""Series over a polynomial ring in formal odd-zeta symbols.

theta_n stands for zeta(n)/(n (pi i)^n): an exact rational for even n, an
opaque commuting symbol for odd n >= 3.  Nothing is ever evaluated
numerically; solving for the free hexagon parameters in this ring is what
certifies that no polynomial relation between odd zeta values is implied.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import factorial

from .exact import bernoulli, format_rational, gamma_coefficients, parse_rational
from .hexagon import ParamSet, decompose_symmetric_series
from .series import QQ, BiSeries, UniSeries, standard_series

__all__ = [
    "ThetaPoly",
    "ThetaRing",
    "theta_even",
    "drinfeld_s",
    "drinfeld_f",
    "verify_even_S_identity",
    "theta_series",
    "solve_betas_in_theta",
    "DEFAULT_ODD_BOUND",
    "ring_for_degree",
]

DEFAULT_ODD_BOUND = 9  # formal symbols theta_3, theta_5, theta_7, theta_9


def ring_for_degree(d: int) -> "ThetaRing":
    """Smallest ring whose odd symbols cover series built to total degree d."""
    bound = d if d % 2 else d - 1
    return ThetaRing(max(bound, 3))


class ThetaPoly:
    """Polynomial over Fraction in the odd symbols theta_3, theta_5, ...

    ``terms`` maps exponent tuples (one slot per generator) to Fractions.
    theta_{2k+1} carries weight 2k+1; the weight of a monomial is the weighted
    exponent sum.
    """

    __slots__ = ("gens", "terms")

    def __init__(self, gens: tuple, terms: dict | None = None):
        self.gens = gens  # e.g. (3, 5, 7, 9)
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = Fraction(c)

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, gens: tuple, q) -> "ThetaPoly":
        q = Fraction(q)
        return cls(gens, {tuple([0] * len(gens)): q} if q else {})

    @classmethod
    def generator(cls, gens: tuple, n: int) -> "ThetaPoly":
        e = [0] * len(gens)
        e[gens.index(n)] = 1
        return cls(gens, {tuple(e): Fraction(1)})

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "ThetaPoly") -> "ThetaPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return ThetaPoly(self.gens, out)

    def __sub__(self, other: "ThetaPoly") -> "ThetaPoly":
        return self + (-other)

    def __neg__(self) -> "ThetaPoly":
        return ThetaPoly(self.gens, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ThetaPoly):
            out: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    key = tuple(a + b for a, b in zip(e1, e2))
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return ThetaPoly(self.gens, out)
        q = Fraction(other)
        return ThetaPoly(self.gens, {e: c * q for e, c in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, q) -> "ThetaPoly":
        return self * (Fraction(1) / Fraction(q))

    def __eq__(self, other) -> bool:
        if isinstance(other, ThetaPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == ThetaPoly.const(self.gens, other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        zero = tuple([0] * len(self.gens))
        return all(e == zero for e in self.terms)

    def rational_part(self) -> Fraction:
        return self.terms.get(tuple([0] * len(self.gens)), Fraction(0))

    def odd_to_zero(self) -> Fraction:
        """Set every odd-zeta symbol to zero, leaving the rational part."""
        return self.rational_part()

    def max_weight(self) -> int:
        if not self.terms:
            return 0
        return max(sum(g * p for g, p in zip(self.gens, e)) for e in self.terms)

    # -- rendering -------------------------------------------------------------

    def __repr__(self) -> str:
        return self.format()

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(
                f"t{g}" + (f"^{p}" if p > 1 else "")
                for g, p in zip(self.gens, e)
                if p
            )
            cs = format_rational(abs(c))
            term = f"{cs}*{mono}" if mono else cs
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {term}")
        return " ".join(parts)

    def format_latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            mono = "".join(
                rf"\theta_{{{g}}}" + (f"^{{{p}}}" if p > 1 else "")
                for g, p in zip(self.gens, e)
                if p
            )
            if c.denominator == 1:
                cs = str(c.numerator)
            else:
                sign = "-" if c < 0 else ""
                cs = rf"{sign}\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
            parts.append(f"{cs}{mono}" if mono else cs)
        return " + ".join(parts)

    def to_json_obj(self):
        if self.is_rational():
            return format_rational(self.rational_part())
        return {"poly": [[list(e), format_rational(c)] for e, c in sorted(self.terms.items())]}


class ThetaRing:
    """Coefficient-ring adapter for BiSeries over ThetaPoly."""

    def __init__(self, odd_bound: int = DEFAULT_ODD_BOUND):
        self.gens = tuple(range(3, odd_bound + 1, 2))
        self.zero = ThetaPoly(self.gens)
        self.one = ThetaPoly.const(self.gens, 1)

    def from_rational(self, q) -> ThetaPoly:
        return ThetaPoly.const(self.gens, q)

    def generator(self, n: int) -> ThetaPoly:
        return ThetaPoly.generator(self.gens, n)

    @staticmethod
    def is_zero(c: ThetaPoly) -> bool:
        return c.is_zero()

    def inverse_of(self, c: ThetaPoly) -> ThetaPoly:
        if not c.is_rational() or c.is_zero():
            raise ZeroDivisionError("non-unit constant term")
        return ThetaPoly.const(self.gens, Fraction(1) / c.rational_part())

    @staticmethod
    def format(c: ThetaPoly) -> str:
        return c.format()

    def parse(self, text: str) -> ThetaPoly:
        return ThetaPoly.const(self.gens, parse_rational(text))

    def parse_poly(self, obj) -> ThetaPoly:
        return ThetaPoly(self.gens, {tuple(e): parse_rational(c) for e, c in obj["poly"]})


def theta_even(n: int) -> Fraction:
    """theta_{2n} = -2^{2n} B_{2n} / (4n (2n)!), an exact rational."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(-(2 ** (2 * n))) * bernoulli(2 * n) / Fraction(4 * n * factorial(2 * n))


def _S_coeff(ring: ThetaRing, n: int) -> ThetaPoly:
    if n % 2 == 0:
        return ring.from_rational(theta_even(n // 2))
    return ring.generator(n)


def drinfeld_s(N: int, ring: ThetaRing | None = None) -> BiSeries:
    """s(lam, mu) = S(lam) + S(mu) - S(lam+mu) with S = sum_{n>=2} theta_n x^n."""
    ring = ring or ThetaRing()
    if any(n % 2 and n > max(ring.gens, default=0) for n in range(3, N + 1)):
        raise ValueError("odd-symbol bound too small for this order")
    cs = [ring.zero, ring.zero] + [_S_coeff(ring, n) for n in range(2, N + 1)]
    S = UniSeries(ring, cs, N)
    return (
        S.as_biseries((1, 0), N)
        + S.as_biseries((0, 1), N)
        - S.as_biseries((1, 1), N)
    )


def drinfeld_f(N: int, ring: ThetaRing | None = None) -> BiSeries:
    """f with 1 + lam mu f = exp(s), recovered by exact division by lam mu.

    The default ring is sized so the internal series to degree N + 2 has all
    the odd symbols it mentions.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    ring = ring or ring_for_degree(N + 2)
    s = drinfeld_s(N + 2, ring)
    tilde = s.exp()
    one = BiSeries.constant(ring, ring.one, N + 2)
    return (tilde - one).divide_monomial(1, 1)


def verify_even_S_identity(N: int) -> bool:
    """exp(-2 Even(S(rho))) = (e^rho - e^{-rho})/(2 rho), coefficient-exactly.

    Purely rational: Even(S) only involves the even theta values.
    """
    cs = [Fraction(0)] * (N + 1)
    for n in range(1, N // 2 + 1):
        cs[2 * n] = -2 * theta_even(n)
    arg = UniSeries(QQ, cs, N).as_biseries((1, 0), N)  # series in rho alone
    lhs = arg.exp()
    rhs_cs = [Fraction(0)] * (N + 1)
    for j in range(0, N + 1, 2):
        rhs_cs[j] = Fraction(1, factorial(j + 1))
    rhs = UniSeries(QQ, rhs_cs, N).as_biseries((1, 0), N)
    return lhs == rhs


def theta_series(N: int, ring: ThetaRing | None = None) -> BiSeries:
    """theta(lam,mu) = -sum theta_{2n+1} ((lam+mu)^{2n+1} - lam^{2n+1} - mu^{2n+1})."""
    ring = ring or ring_for_degree(N)
    from math import comb

    out = BiSeries(ring, {}, N)
    for g in ring.gens:
        if g > N:
            continue
        t = ring.generator(g)
        for i in range(1, g):
            out._acc((i, g - i), t * Fraction(-comb(g, i)))
    out._clean()
    return out


def _sqrt_sinhc_product(N: int, ring: ThetaRing) -> BiSeries:
    """sqrt(sinhc(lam+mu) sinhc(lam) sinhc(mu)) -- a rational unit series."""
    def sinhc_uni(direction):
        cs = [Fraction(0)] * (N + 1)
        for j in range(0, N + 1, 2):
            cs[j] = Fraction(1, factorial(j + 1))
        return UniSeries(ring, [ring.from_rational(c) for c in cs], N).as_biseries(direction, N)

    prod = sinhc_uni((1, 1)) * sinhc_uni((1, 0)) * sinhc_uni((0, 1))
    return prod.sqrt()


def solve_betas_in_theta(N: int, ring: ThetaRing | None = None) -> ParamSet:
    """Express the free hexagon parameters as odd-zeta polynomials.

    Solves, degree by degree, the two identities obtained by splitting
    exp(s) into even and odd parts:

        cosh(theta(lam,mu)) / sqrt(sinhc(l+m) sinhc(l) sinhc(m)) = h(lam,mu)
        sinh(theta(lam,mu)) / (lam mu (lam+mu) sqrt(...))        = h~(lam,mu)

    where h and h~ must be sums of associator polynomials.  A residual
    outside their span would certify a polynomial relation between odd zeta
    values; that raises ArithmeticError("residual outside span").
    """
    if N < 6:
        raise ValueError("N must be >= 6")
    M = N + 3
    ring = ring or ring_for_degree(M)
    th = theta_series(M, ring)
    cosh_t = _cosh(th)
    sinh_t = _sinh(th)
    inv_sq = _sqrt_sinhc_product(M, ring).inverse()
    h = cosh_t * inv_sq
    h_tilde = (sinh_t * inv_sq).divide_monomial(1, 1).divide_lam_plus_mu()
    # Even(f) at degree N needs the even family through degree N + 2, the odd
    # part of f at degree N needs the tilde family through degree N - 1 only.
    even_coeffs = decompose_symmetric_series(h.truncate(N + 1))
    odd_coeffs = decompose_symmetric_series(h_tilde.truncate(N - 1))
    gam = gamma_coefficients(N + 2)
    beta = {}
    beta_tilde = {}
    for d, coeffs in even_coeffs.items():
        if d % 2 == 1:
            if any(not ring.is_zero(c) for c in coeffs):
                raise ArithmeticError("residual outside span")
            continue
        n = d // 2
        # spine must reproduce the rational gamma coefficients exactly
        if coeffs and coeffs[0] != ring.from_rational(gam[n]):
            raise ArithmeticError("spine mismatch against the gamma series")
        for k in range(1, len(coeffs)):
            beta[(n, k)] = coeffs[k]
    for d, coeffs in odd_coeffs.items():
        if d % 2 == 1:
            if any(not ring.is_zero(c) for c in coeffs):
                raise ArithmeticError("residual outside span")
            continue
        n = d // 2
        for k in range(0, len(coeffs)):
            beta_tilde[(n, k)] = coeffs[k]
    return ParamSet(beta=beta, beta_tilde=beta_tilde, ring=ring)


def _cosh(s: BiSeries) -> BiSeries:
    out = BiSeries.constant(s.ring, s.ring.one, s.order)
    term = BiSeries.constant(s.ring, s.ring.one, s.order)
    s2 = s * s
    k = 0
    while True:
        k += 2
        term = (term * s2).scale_rational(Fraction(1, (k - 1) * k))
        if term.is_zero():
            break
        out = out + term
    return out


def _sinh(s: BiSeries) -> BiSeries:
    out = s
    term = s
    s2 = s * s
    k = 1
    while True:
        k += 2
        term = (term * s2).scale_rational(Fraction(1, (k - 1) * k))
        if term.is_zero():
            break
        out = out + term
    return out
