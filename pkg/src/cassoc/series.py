"""Truncated exact power series in one or two variables over a pluggable ring.

A series only guarantees its coefficients up to ``order`` (total degree);
binary operations propagate the minimum of the operands' orders, and
divisions by non-unit factors (lam, mu, lam+mu) shrink the order by the
factor's degree.  Nothing beyond the recorded order is ever trusted.

Coefficients live in a commutative ring with exact equality, described by a
small adapter object (see ``QQ`` here and the theta-symbol ring in
``cassoc.zeta``).  The rational instantiation uses ``fractions.Fraction``
directly as the coefficient type.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .exact import bernoulli, format_rational, gamma_coefficients, parse_rational

__all__ = [
    "QQ",
    "UniSeries",
    "BiSeries",
    "standard_series",
    "STANDARD_SERIES_NAMES",
]


class RationalRing:
    """Coefficient-ring adapter for plain Fractions."""

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_rational(q) -> Fraction:
        return Fraction(q)

    @staticmethod
    def is_zero(c) -> bool:
        return c == 0

    @staticmethod
    def inverse_of(c) -> Fraction:
        if c == 0:
            raise ZeroDivisionError("non-unit constant term")
        return Fraction(1) / c

    @staticmethod
    def divide_by_rational(c, q: Fraction):
        return c / q

    @staticmethod
    def format(c) -> str:
        return format_rational(c)

    @staticmethod
    def parse(text: str):
        return parse_rational(text)


QQ = RationalRing()


class UniSeries:
    """Series sum_n c_n x^n known through degree ``order``."""

    __slots__ = ("ring", "coeffs", "order")

    def __init__(self, ring, coeffs: Iterable, order: int):
        cs = list(coeffs)[: order + 1]
        cs += [ring.zero] * (order + 1 - len(cs))
        self.ring = ring
        self.coeffs = cs
        self.order = order

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __repr__(self) -> str:
        return f"UniSeries({self.coeffs[: self.order + 1]!r}, order={self.order})"

    def coeff(self, n: int):
        if n > self.order:
            raise IndexError(f"degree {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __add__(self, other: "UniSeries") -> "UniSeries":
        n = min(self.order, other.order)
        return UniSeries(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)], n)

    def __sub__(self, other: "UniSeries") -> "UniSeries":
        n = min(self.order, other.order)
        return UniSeries(self.ring, [a - b for a, b in zip(self.coeffs, other.coeffs)], n)

    def __neg__(self) -> "UniSeries":
        return UniSeries(self.ring, [-a for a in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, UniSeries):
            n = min(self.order, other.order)
            out = [self.ring.zero] * (n + 1)
            for i, a in enumerate(self.coeffs[: n + 1]):
                if self.ring.is_zero(a):
                    continue
                for j, b in enumerate(other.coeffs[: n + 1 - i]):
                    if not self.ring.is_zero(b):
                        out[i + j] += a * b
            return UniSeries(self.ring, out, n)
        return UniSeries(self.ring, [a * other for a in self.coeffs], self.order)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(c) for c in self.coeffs)

    def as_biseries(self, direction: tuple, order: int | None = None) -> "BiSeries":
        """Substitute the linear form a*lam + b*mu for x."""
        a, b = Fraction(direction[0]), Fraction(direction[1])
        n = min(order if order is not None else self.order, self.order)
        out = BiSeries(self.ring, {}, n)
        # powers of (a lam + b mu) via Pascal expansion
        for d in range(min(n, self.order) + 1):
            c = self.coeffs[d]
            if self.ring.is_zero(c):
                continue
            for i in range(d + 1):
                scalar = _binom(d, i) * (a ** i) * (b ** (d - i))
                if scalar != 0:
                    out._acc((i, d - i), c * scalar)
        out._clean()
        return out


def _binom(n: int, k: int) -> Fraction:
    from math import comb

    return Fraction(comb(n, k))


class BiSeries:
    """Series sum_{k+l <= order} c_{kl} lam^k mu^l over an exact ring."""

    __slots__ = ("ring", "coeffs", "order")

    def __init__(self, ring, coeffs: dict | None = None, order: int = 0):
        self.ring = ring
        self.coeffs = {}
        self.order = order
        if coeffs:
            for (k, l), c in coeffs.items():
                if k + l <= order and not ring.is_zero(c):
                    self.coeffs[(k, l)] = c

    # -- construction helpers -------------------------------------------------

    @classmethod
    def constant(cls, ring, value, order: int) -> "BiSeries":
        return cls(ring, {(0, 0): value}, order)

    @classmethod
    def monomial(cls, ring, k: int, l: int, value, order: int) -> "BiSeries":
        return cls(ring, {(k, l): value}, order)

    def _acc(self, key, val) -> None:
        cur = self.coeffs.get(key)
        self.coeffs[key] = val if cur is None else cur + val

    def _clean(self) -> None:
        dead = [k for k, v in self.coeffs.items() if self.ring.is_zero(v)]
        for k in dead:
            del self.coeffs[k]

    # -- basic queries ---------------------------------------------------------

    def coeff(self, k: int, l: int):
        if k + l > self.order:
            raise IndexError(f"degree {k + l} beyond truncation order {self.order}")
        return self.coeffs.get((k, l), self.ring.zero)

    def homogeneous_part(self, d: int) -> dict:
        return {kl: c for kl, c in self.coeffs.items() if kl[0] + kl[1] == d}

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_symmetric(self) -> bool:
        return all(self.coeffs.get((l, k), self.ring.zero) == c for (k, l), c in self.coeffs.items())

    def truncate(self, order: int) -> "BiSeries":
        if order >= self.order:
            return self
        return BiSeries(self.ring, self.coeffs, order)

    def pad(self, order: int) -> "BiSeries":
        """Raise the claimed order: only valid when the series is an exact
        polynomial (every higher coefficient genuinely zero)."""
        if order <= self.order:
            return self
        return BiSeries(self.ring, self.coeffs, order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        n = min(self.order, other.order)
        keys = set(self.coeffs) | set(other.coeffs)
        z = self.ring.zero
        for kl in keys:
            if kl[0] + kl[1] <= n and self.coeffs.get(kl, z) != other.coeffs.get(kl, z):
                return False
        return True

    def __repr__(self) -> str:
        terms = ", ".join(f"({k},{l}): {c}" for (k, l), c in sorted(self.coeffs.items(), key=_term_sort_key))
        return f"BiSeries({{{terms}}}, order={self.order})"

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: "BiSeries") -> "BiSeries":
        n = min(self.order, other.order)
        out = BiSeries(self.ring, self.coeffs, n)
        for kl, c in other.coeffs.items():
            if kl[0] + kl[1] <= n:
                out._acc(kl, c)
        out._clean()
        return out

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def __neg__(self) -> "BiSeries":
        return BiSeries(self.ring, {kl: -c for kl, c in self.coeffs.items()}, self.order)

    def __mul__(self, other):
        if isinstance(other, BiSeries):
            n = min(self.order, other.order)
            out = BiSeries(self.ring, {}, n)
            for (k1, l1), c1 in self.coeffs.items():
                if k1 + l1 > n:
                    continue
                for (k2, l2), c2 in other.coeffs.items():
                    if k1 + l1 + k2 + l2 <= n:
                        out._acc((k1 + k2, l1 + l2), c1 * c2)
            out._clean()
            return out
        out = BiSeries(self.ring, {kl: c * other for kl, c in self.coeffs.items()}, self.order)
        out._clean()
        return out

    __rmul__ = __mul__

    def scale_rational(self, q: Fraction) -> "BiSeries":
        return self * self.ring.from_rational(q)

    def pow(self, e: int) -> "BiSeries":
        out = BiSeries.constant(self.ring, self.ring.one, self.order)
        for _ in range(e):
            out = out * self
        return out

    # -- substitutions and parts --------------------------------------------------

    def substitute_linear(self, matrix) -> "BiSeries":
        """Return t with t(lam, mu) = self(a*lam + b*mu, c*lam + d*mu).

        ``matrix`` is ((a, b), (c, d)) with rational entries.
        """
        (a, b), (c, d) = matrix
        a, b, c, d = Fraction(a), Fraction(b), Fraction(c), Fraction(d)
        n = self.order
        out = BiSeries(self.ring, {}, n)
        # cache expansions of (a lam + b mu)^k and (c lam + d mu)^l as dicts
        pow1 = _linear_power_table(a, b, n)
        pow2 = _linear_power_table(c, d, n)
        for (k, l), coef in self.coeffs.items():
            for (i1, j1), s1 in pow1[k].items():
                for (i2, j2), s2 in pow2[l].items():
                    s = s1 * s2
                    if s != 0:
                        out._acc((i1 + i2, j1 + j2), coef * s)
        out._clean()
        return out

    def swap(self) -> "BiSeries":
        return BiSeries(self.ring, {(l, k): c for (k, l), c in self.coeffs.items()}, self.order)

    def even_part(self) -> "BiSeries":
        # (s(lam,mu) + s(-lam,-mu))/2 keeps exactly the even-total-degree terms
        out = BiSeries(self.ring, {}, self.order)
        for (k, l), c in self.coeffs.items():
            if (k + l) % 2 == 0:
                out.coeffs[(k, l)] = c
        return out

    def odd_part(self) -> "BiSeries":
        out = BiSeries(self.ring, {}, self.order)
        for (k, l), c in self.coeffs.items():
            if (k + l) % 2 == 1:
                out.coeffs[(k, l)] = c
        return out

    def set_mu_zero(self) -> UniSeries:
        """Restrict to mu = 0, producing a series in lam."""
        cs = [self.ring.zero] * (self.order + 1)
        for (k, l), c in self.coeffs.items():
            if l == 0:
                cs[k] = c
        return UniSeries(self.ring, cs, self.order)

    def diagonal(self) -> UniSeries:
        """Restrict to mu = -lam, producing a series in lam."""
        cs = [self.ring.zero] * (self.order + 1)
        for (k, l), c in self.coeffs.items():
            cs[k + l] += c * self.ring.from_rational(Fraction((-1) ** l))
        return UniSeries(self.ring, cs, self.order)

    # -- analytic constructors ------------------------------------------------------

    def exp(self) -> "BiSeries":
        if not self.ring.is_zero(self.coeffs.get((0, 0), self.ring.zero)):
            raise ValueError("non-unit constant term")
        n = self.order
        out = BiSeries.constant(self.ring, self.ring.one, n)
        term = BiSeries.constant(self.ring, self.ring.one, n)
        for j in range(1, n + 1):
            term = (term * self).scale_rational(Fraction(1, j))
            if term.is_zero():
                break
            out = out + term
        return out

    def log(self) -> "BiSeries":
        if self.coeffs.get((0, 0), self.ring.zero) != self.ring.one:
            raise ValueError("non-unit constant term")
        n = self.order
        u = self - BiSeries.constant(self.ring, self.ring.one, n)
        out = BiSeries(self.ring, {}, n)
        term = BiSeries.constant(self.ring, self.ring.one, n)
        for j in range(1, n + 1):
            term = term * u
            if term.is_zero():
                break
            out = out + term.scale_rational(Fraction((-1) ** (j + 1), j))
        return out

    def sqrt(self) -> "BiSeries":
        if self.coeffs.get((0, 0), self.ring.zero) != self.ring.one:
            raise ValueError("non-unit constant term")
        n = self.order
        u = self - BiSeries.constant(self.ring, self.ring.one, n)
        out = BiSeries.constant(self.ring, self.ring.one, n)
        term = BiSeries.constant(self.ring, self.ring.one, n)
        binom = Fraction(1)
        for j in range(1, n + 1):
            term = term * u
            if term.is_zero():
                break
            binom *= Fraction(3 - 2 * j, 2 * j)  # C(1/2, j) update
            out = out + term.scale_rational(binom)
        return out

    def inverse(self) -> "BiSeries":
        c0 = self.coeffs.get((0, 0), self.ring.zero)
        inv0 = self.ring.inverse_of(c0)
        n = self.order
        u = BiSeries.constant(self.ring, self.ring.one, n) - self * inv0
        out = BiSeries.constant(self.ring, self.ring.one, n)
        term = BiSeries.constant(self.ring, self.ring.one, n)
        for _ in range(n):
            term = term * u
            if term.is_zero():
                break
            out = out + term
        return out * inv0

    # -- exact division ---------------------------------------------------------------

    def divide_exact(self, d: "BiSeries") -> "BiSeries":
        """Exact division by a unit series, a monomial, or a monomial times a
        scalar multiple of (lam + mu).  A nonzero remainder raises
        ArithmeticError("not divisible"): it signals an algebra bug upstream.
        """
        if not isinstance(d, BiSeries):
            raise TypeError("divisor must be a BiSeries")
        if d.is_zero():
            raise ZeroDivisionError("division by zero series")
        c0 = d.coeffs.get((0, 0), d.ring.zero)
        if not d.ring.is_zero(c0):
            return self.divide_unit(d)
        mk = min(k for (k, _) in d.coeffs)
        ml = min(l for (_, l) in d.coeffs)
        rest = d.divide_monomial(mk, ml)
        out = self.divide_monomial(mk, ml)
        # peel (lam + mu) factors off the divisor until a unit remains
        while d.ring.is_zero(rest.coeffs.get((0, 0), d.ring.zero)):
            rest = rest.divide_lam_plus_mu()
            out = out.divide_lam_plus_mu()
        if rest == BiSeries.constant(d.ring, rest.coeffs.get((0, 0)), rest.order):
            return out * d.ring.inverse_of(rest.coeffs[(0, 0)])
        return out.divide_unit(rest)

    def divide_unit(self, d: "BiSeries") -> "BiSeries":
        return self * d.inverse()

    def divide_monomial(self, k: int, l: int) -> "BiSeries":
        """Exact division by lam^k mu^l; raises if any required coefficient survives."""
        out = BiSeries(self.ring, {}, self.order - k - l)
        for (i, j), c in self.coeffs.items():
            if i < k or j < l:
                raise ArithmeticError("not divisible")
            if (i - k) + (j - l) <= out.order:
                out.coeffs[(i - k, j - l)] = c
        return out

    def divide_lam_plus_mu(self) -> "BiSeries":
        """Exact division by (lam + mu), degree by degree."""
        out = BiSeries(self.ring, {}, self.order - 1)
        for d in range(1, self.order + 1):
            # divide the homogeneous degree-d slice by lam + mu
            prev = self.ring.zero
            for i in range(d - 1, -1, -1):
                # coefficient of lam^{i+1} mu^{d-1-i} in slice = e_i + e_{i+1}...
                c = self.coeffs.get((i + 1, d - 1 - i), self.ring.zero)
                e = c - prev
                if not self.ring.is_zero(e) and d - 1 <= out.order:
                    out._acc((i, d - 1 - i), e)
                prev = e
            rem = self.coeffs.get((0, d), self.ring.zero) - prev
            if not self.ring.is_zero(rem):
                raise ArithmeticError("not divisible")
        const = self.coeffs.get((0, 0), self.ring.zero)
        if not self.ring.is_zero(const):
            raise ArithmeticError("not divisible")
        out._clean()
        return out

    # -- serialization -------------------------------------------------------------------

    def to_records(self) -> list:
        """Deterministic list of (k, l, coefficient-string) records."""
        return [
            {"k": k, "l": l, "coeff": self.ring.format(c)}
            for (k, l), c in sorted(self.coeffs.items(), key=_term_sort_key)
        ]

    def to_text(self) -> str:
        lines = [f"truncation_order {self.order}"]
        for (k, l), c in sorted(self.coeffs.items(), key=_term_sort_key):
            lines.append(f"({k},{l}): {self.ring.format(c)}")
        return "\n".join(lines)

    @classmethod
    def from_records(cls, ring, records, order: int) -> "BiSeries":
        out = cls(ring, {}, order)
        for rec in records:
            out._acc((int(rec["k"]), int(rec["l"])), ring.parse(rec["coeff"]))
        out._clean()
        return out


def _term_sort_key(item):
    (k, l), _ = item
    return (k + l, k, l)


def _linear_power_table(a: Fraction, b: Fraction, n: int) -> list:
    """Expansions of (a lam + b mu)^k for k = 0..n as {(i,j): Fraction}."""
    table = [{(0, 0): Fraction(1)}]
    base = {}
    if a:
        base[(1, 0)] = a
    if b:
        base[(0, 1)] = b
    for _ in range(n):
        nxt: dict = {}
        for (i, j), s in table[-1].items():
            for (di, dj), t in base.items():
                key = (i + di, j + dj)
                nxt[key] = nxt.get(key, Fraction(0)) + s * t
        table.append(nxt)
    return table


STANDARD_SERIES_NAMES = (
    "x_over_expm1",
    "expm1_over_x",
    "two_x_over_sinh2x",
    "sinh_factor_bivariate",
    "c_generating_closed",
)


def standard_series(name: str, N: int, ring=QQ):
    """The named classical series to order N with exact coefficients.

    Univariate names return a UniSeries in x; bivariate ones a BiSeries.
    """
    if name == "x_over_expm1":
        fact = 1
        cs = []
        for n in range(N + 1):
            if n:
                fact *= n
            cs.append(ring.from_rational(Fraction(bernoulli(n), fact)))
        return UniSeries(ring, cs, N)
    if name == "expm1_over_x":
        fact = 1
        cs = []
        for n in range(N + 1):
            fact *= n + 1
            cs.append(ring.from_rational(Fraction(1, fact)))
        return UniSeries(ring, cs, N)
    if name == "two_x_over_sinh2x":
        gam = gamma_coefficients(N)
        cs = [ring.zero] * (N + 1)
        for k, g in enumerate(gam):
            if 2 * k <= N:
                cs[2 * k] = ring.from_rational(g)
        return UniSeries(ring, cs, N)
    if name == "sinh_factor_bivariate":
        # (e^{lam+mu} - e^{-lam-mu}) / (2 (lam+mu)) = sum_j (lam+mu)^{2j} / (2j+1)!
        cs = [ring.zero] * (N + 1)
        fact = 1
        for j in range(0, N + 1):
            fact *= j + 1
            if j % 2 == 0:
                cs[j] = ring.from_rational(Fraction(1, fact))
        uni = UniSeries(ring, cs, N)
        return uni.as_biseries((1, 1), N)
    if name == "c_generating_closed":
        return _c_generating_closed(N, ring)
    raise ValueError(f"unknown standard series {name!r}")


def exp_linear(ring, a, b, order: int) -> BiSeries:
    """e^{a lam + b mu} as a BiSeries."""
    arg = BiSeries(ring, {}, order)
    af, bf = Fraction(a), Fraction(b)
    if af:
        arg._acc((1, 0), ring.from_rational(af))
    if bf:
        arg._acc((0, 1), ring.from_rational(bf))
    return arg.exp()


def _c_generating_closed(N: int, ring) -> BiSeries:
    # C(lam, mu) = (e^mu - 1)/(lam mu) * ((lam+mu)/(e^{lam+mu}-1) - mu/(e^mu-1)),
    # built one order higher so the division by lam is exact at order N.
    M = N + 1
    x_over = standard_series("x_over_expm1", M, ring)
    a = x_over.as_biseries((1, 1), M)  # (lam+mu)/(e^{lam+mu}-1)
    b = x_over.as_biseries((0, 1), M)  # mu/(e^mu-1)
    d = standard_series("expm1_over_x", M, ring).as_biseries((0, 1), M)  # (e^mu-1)/mu
    num = d * (a - b)
    return num.divide_monomial(1, 0).truncate(N)
