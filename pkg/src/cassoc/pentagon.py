"""The four-strand quotient where the compressed pentagon lives.

Elements are modeled in the free metabelian Lie algebra on the six letters
a, b, c, d, e, v (letters 0..5): a linear part plus a commutator part that is
a module over commuting letter variables.  Normal form for the commutator
part: prefix-monomial m times a core bracket [x_i, x_j] with i > j and
min(letters of m) >= j; the single Jacobi straightening step

    x_k [x_i, x_j] = -x_i [x_j, x_k] + x_j [x_i, x_k]      (k < j < i)

moves the smallest letter into the core.

The defining relations of the quotient ([a,e] = [b,v] = [c,d] = 0 and the
x, y, z, u identifications) generate, as monomial multiples, a linear
subspace per degree; ``QuotientReducer`` row-reduces that subspace once and
then reduces arbitrary elements to canonical coordinates on the complement.
The hand-derived rewrite identities of the source theory are *checked*
against this generic reduction, never assumed.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from itertools import combinations_with_replacement

__all__ = [
    "LETTERS",
    "MetabelianModel",
    "L4_MODEL",
    "L3_MODEL",
    "QuotientReducer",
    "l4_reducer",
    "l3_reducer",
    "phi_bar_eval",
    "pentagon_residual",
    "pentagon_check",
    "dimension_report",
    "identity_suite",
    "claim_53_span_checks",
]

LETTERS = "abcdev"  # a=t12 b=t23 c=t13 d=t24 e=t34 v=t14


class MetabelianModel:
    """Free metabelian Lie algebra on ``n_letters`` with exact coefficients.

    An element is (lin, comm): lin maps letter -> Fraction, comm maps
    normal-form keys (i, j, mono) -> Fraction with i > j, mono an exponent
    tuple whose smallest used letter is >= j.
    """

    def __init__(self, n_letters: int):
        self.n = n_letters

    # -- element constructors ----------------------------------------------------

    def zero(self):
        return ({}, {})

    def letter(self, s):
        idx = LETTERS.index(s) if isinstance(s, str) else s
        return ({idx: Fraction(1)}, {})

    def combo(self, coeffs: dict):
        lin = {}
        for s, c in coeffs.items():
            idx = LETTERS.index(s) if isinstance(s, str) else s
            c = Fraction(c)
            if c:
                lin[idx] = lin.get(idx, Fraction(0)) + c
        return (lin, {})

    def add(self, x, y):
        lin = dict(x[0])
        for i, c in y[0].items():
            v = lin.get(i, Fraction(0)) + c
            if v:
                lin[i] = v
            elif i in lin:
                del lin[i]
        comm = dict(x[1])
        for k, c in y[1].items():
            v = comm.get(k, Fraction(0)) + c
            if v:
                comm[k] = v
            elif k in comm:
                del comm[k]
        return (lin, comm)

    def scale(self, x, q):
        q = Fraction(q)
        if not q:
            return ({}, {})
        return ({i: c * q for i, c in x[0].items()}, {k: c * q for k, c in x[1].items()})

    def sub(self, x, y):
        return self.add(x, self.scale(y, -1))

    def is_zero(self, x) -> bool:
        return not x[0] and not x[1]

    # -- normal form --------------------------------------------------------------

    def _norm_core(self, i: int, j: int, mono: tuple, coeff: Fraction, out: dict):
        """Accumulate coeff * mono * [x_i, x_j] (i > j) in normal form into out."""
        small = None
        for t in range(self.n):
            if mono[t]:
                small = t
                break
        if small is None or small >= j:
            key = (i, j, mono)
            v = out.get(key, Fraction(0)) + coeff
            if v:
                out[key] = v
            elif key in out:
                del out[key]
            return
        # x_small [x_i, x_j] = -x_i [x_j, x_small] + x_j [x_i, x_small]
        k = small
        m = list(mono)
        m[k] -= 1
        m_i = tuple(m[t] + (1 if t == i else 0) for t in range(self.n))
        m_j = tuple(m[t] + (1 if t == j else 0) for t in range(self.n))
        self._norm_core(j, k, m_i, -coeff, out)
        self._norm_core(i, k, m_j, coeff, out)

    def bracket(self, x, y):
        """[x, y]; the result is purely a commutator part."""
        out: dict = {}
        zero_mono = (0,) * self.n
        for i, ci in x[0].items():
            for j, cj in y[0].items():
                if i == j:
                    continue
                c = ci * cj
                if i > j:
                    self._norm_core(i, j, zero_mono, c, out)
                else:
                    self._norm_core(j, i, zero_mono, -c, out)
        if y[1] and x[0]:
            self._mult_into(x[0], y[1], Fraction(1), out)
        if x[1] and y[0]:
            self._mult_into(y[0], x[1], Fraction(-1), out)
        return ({}, out)

    def _mult_into(self, lin: dict, comm: dict, sign: Fraction, out: dict):
        for (i, j, mono), c in comm.items():
            for s, cs in lin.items():
                m = list(mono)
                m[s] += 1
                self._norm_core(i, j, tuple(m), sign * c * cs, out)

    def long_commutator(self, word: list):
        """Right-nested [w_1, [w_2, [..., w_k]]] of elements or letters."""
        elems = [self.letter(w) if isinstance(w, (str, int)) else w for w in word]
        if len(elems) < 2:
            raise ValueError("word length must be >= 2")
        acc = elems[-1]
        for e in reversed(elems[:-1]):
            acc = self.bracket(e, acc)
            if self.is_zero(acc):
                return acc
        return acc

    def mono_mult(self, elem, letter_powers: dict):
        """Apply prod_s (ad x_s)^{e_s} to a commutator-only element."""
        out = elem
        for s, e in letter_powers.items():
            idx = LETTERS.index(s) if isinstance(s, str) else s
            for _ in range(e):
                out = self.bracket(self.letter(idx), out)
        return out

    def comm_degree_parts(self, x) -> dict:
        """Split the commutator part by total degree (letters incl. the core pair)."""
        parts: dict = {}
        for (i, j, mono), c in x[1].items():
            d = sum(mono) + 2
            parts.setdefault(d, {})[(i, j, mono)] = c
        return parts

    def basis_keys(self, degree: int) -> list:
        """All normal-form keys of the given total degree, in deterministic
        (core pair, monomial) lexicographic order."""
        if degree < 2:
            return []
        keys = []
        for i in range(self.n):
            for j in range(i):
                # monomials of degree - 2 over letters >= j
                for mono in _monomials(self.n, degree - 2, minimum=j):
                    keys.append((i, j, mono))
        keys.sort()
        return keys


def _monomials(n: int, degree: int, minimum: int = 0):
    """Exponent tuples over n letters, total = degree, support >= minimum."""
    if degree == 0:
        yield (0,) * n
        return
    letters = range(minimum, n)
    for combo in combinations_with_replacement(letters, degree):
        mono = [0] * n
        for t in combo:
            mono[t] += 1
        yield tuple(mono)


L4_MODEL = MetabelianModel(6)
L3_MODEL = MetabelianModel(3)


def _l4_relations() -> list:
    m = L4_MODEL
    a, b, c, d, e, v = (m.letter(i) for i in range(6))
    br = m.bracket
    rels = [
        br(a, e),
        br(b, v),
        br(c, d),
        m.sub(br(a, b), br(b, c)),
        m.sub(br(b, c), br(c, a)),
        m.sub(br(a, d), br(d, v)),
        m.sub(br(d, v), br(v, a)),
        m.sub(br(b, e), br(e, d)),
        m.sub(br(e, d), br(d, b)),
        m.sub(br(c, e), br(e, v)),
        m.sub(br(e, v), br(v, c)),
    ]
    return rels


def _l3_relations() -> list:
    m = L3_MODEL
    a, b, c = (m.letter(i) for i in range(3))
    br = m.bracket
    return [m.sub(br(a, b), br(b, c)), m.sub(br(b, c), br(c, a))]


class QuotientReducer:
    """Per-degree row echelon form of the relation module, built on demand.

    The relation subspace at degree n is spanned by monomial * r over the
    quadratic relations r (bracketing a relation into another commutator dies
    in the metabelian quotient, so monomial multiples generate everything).
    Deterministic processing order makes the canonical coordinates stable.
    """

    def __init__(self, model: MetabelianModel, relations: list, max_degree: int = 0):
        self.model = model
        self.relations = relations
        self._cols: dict = {}  # degree -> {key: column index}
        self._keys: dict = {}  # degree -> [key]
        self._rows: dict = {}  # degree -> {pivot column: sparse row dict}
        for d in range(2, max_degree + 1):
            self._build(d)

    def built_degrees(self) -> list:
        return sorted(self._rows)

    def _build(self, degree: int) -> None:
        if degree in self._rows or degree < 2:
            return
        model = self.model
        keys = model.basis_keys(degree)
        col_of = {k: idx for idx, k in enumerate(keys)}
        pivot_rows: dict = {}
        for mono in _monomials(model.n, degree - 2):
            powers = {s: e for s, e in enumerate(mono) if e}
            for rel in self.relations:
                elem = model.mono_mult(rel, powers) if powers else rel
                row = {col_of[k]: c for k, c in elem[1].items()}
                self._insert(row, pivot_rows)
        self._cols[degree] = col_of
        self._keys[degree] = keys
        self._rows[degree] = pivot_rows

    @staticmethod
    def _insert(row: dict, pivot_rows: dict) -> None:
        heap = list(row)
        heapq.heapify(heap)
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen:
                continue
            seen.add(c)
            val = row.get(c)
            if not val:
                continue
            piv = pivot_rows.get(c)
            if piv is None:
                # new pivot: normalize monic and store
                inv = Fraction(1) / val
                pivot_rows[c] = {cc: vv * inv for cc, vv in row.items() if vv}
                return
            for cc, vv in piv.items():
                nv = row.get(cc, Fraction(0)) - val * vv
                if nv:
                    row[cc] = nv
                    if cc not in seen:
                        heapq.heappush(heap, cc)
                elif cc in row:
                    del row[cc]

    @staticmethod
    def _reduce_vector(row: dict, pivot_rows: dict) -> dict:
        heap = list(row)
        heapq.heapify(heap)
        seen = set()
        out = dict(row)
        while heap:
            c = heapq.heappop(heap)
            if c in seen:
                continue
            seen.add(c)
            val = out.get(c)
            if not val:
                continue
            piv = pivot_rows.get(c)
            if piv is None:
                continue
            for cc, vv in piv.items():
                nv = out.get(cc, Fraction(0)) - val * vv
                if nv:
                    out[cc] = nv
                    if cc not in seen:
                        heapq.heappush(heap, cc)
                elif cc in out:
                    del out[cc]
        return out

    def reduce_part(self, part: dict, degree: int) -> dict:
        """Canonical coordinates {key: coeff} of a degree-homogeneous part."""
        self._build(degree)
        col_of = self._cols[degree]
        keys = self._keys[degree]
        row = {col_of[k]: c for k, c in part.items()}
        red = self._reduce_vector(row, self._rows[degree])
        return {keys[c]: v for c, v in red.items()}

    def reduce(self, elem, max_degree: int | None = None) -> dict:
        """Reduce every degree part of an element; returns {degree: coords}."""
        model = self.model
        out = {}
        for d, part in model.comm_degree_parts(elem).items():
            if max_degree is not None and d > max_degree:
                continue
            coords = self.reduce_part(part, d)
            if coords:
                out[d] = coords
        return out

    def is_zero(self, elem, max_degree: int | None = None) -> bool:
        if elem[0]:
            return False
        return not self.reduce(elem, max_degree)

    def dimension(self, degree: int) -> int:
        if degree == 1:
            return self.model.n
        if degree < 1:
            return 0
        self._build(degree)
        return len(self._keys[degree]) - len(self._rows[degree])


_L4_REDUCER: QuotientReducer | None = None
_L3_REDUCER: QuotientReducer | None = None


def l4_reducer() -> QuotientReducer:
    global _L4_REDUCER
    if _L4_REDUCER is None:
        _L4_REDUCER = QuotientReducer(L4_MODEL, _l4_relations())
    return _L4_REDUCER


def l3_reducer() -> QuotientReducer:
    global _L3_REDUCER
    if _L3_REDUCER is None:
        _L3_REDUCER = QuotientReducer(L3_MODEL, _l3_relations())
    return _L3_REDUCER


# -- pentagon ----------------------------------------------------------------------


def phi_bar_eval(alpha, u: dict, w: dict, N: int):
    """sum_{k+l <= N-2} alpha[k,l] [u^k w^l u w] for letter combinations u, w."""
    model = L4_MODEL
    eu = model.combo(u)
    ew = model.combo(w)
    base = model.bracket(eu, ew)
    if model.is_zero(base):
        return model.zero()
    total = model.zero()
    u_pows = [base]
    for k in range(0, N - 1):
        if k > 0:
            u_pows.append(model.bracket(eu, u_pows[-1]))
        cur = u_pows[k]
        for l in range(0, N - 1 - k):
            if l > 0:
                cur = model.bracket(ew, cur)
            coeff = alpha.coeff(k, l) if hasattr(alpha, "coeff") else alpha.get((k, l), Fraction(0))
            if coeff:
                total = model.add(total, model.scale(cur, coeff))
    return total


def pentagon_residual(alpha, N: int):
    """LHS - RHS of the substituted pentagon

    phi(b,e) + phi(a+c, d+e) + phi(a,b) - phi(a, b+d) - phi(b+c, e).
    """
    model = L4_MODEL
    one = Fraction(1)
    lhs = model.add(
        model.add(
            phi_bar_eval(alpha, {"b": one}, {"e": one}, N),
            phi_bar_eval(alpha, {"a": one, "c": one}, {"d": one, "e": one}, N),
        ),
        phi_bar_eval(alpha, {"a": one}, {"b": one}, N),
    )
    rhs = model.add(
        phi_bar_eval(alpha, {"a": one}, {"b": one, "d": one}, N),
        phi_bar_eval(alpha, {"b": one, "c": one}, {"e": one}, N),
    )
    return model.sub(lhs, rhs)


def pentagon_check(alpha, N: int) -> dict:
    """Reduce the pentagon residual; returns per-degree counts of nonzero
    canonical coordinates (all zeros means the pentagon holds to degree N)."""
    residual = pentagon_residual(alpha, N)
    reduced = l4_reducer().reduce(residual, max_degree=N)
    norms = {d: 0 for d in range(2, N + 1)}
    for d, coords in reduced.items():
        norms[d] = len(coords)
    return norms


def dimension_report(N: int, variant: str) -> dict:
    """Quotient dimensions per degree for the three- or four-strand quotient."""
    if variant == "L3bar":
        red = l3_reducer()
        model_dims = {1: 3}
        for d in range(2, N + 1):
            model_dims[d] = d - 1
    elif variant == "L4bar":
        red = l4_reducer()
        model_dims = {1: 6}
        for d in range(2, N + 1):
            model_dims[d] = 5 * (d - 1)  # spanning-set upper bound, not claimed exact
    else:
        raise ValueError(f"unknown variant {variant!r}")
    out = {}
    for d in range(1, N + 1):
        out[d] = {"dimension": red.dimension(d), "reference": model_dims[d]}
    return out


# -- the section-5 identity suite -----------------------------------------------------


def _xyzu():
    m = L4_MODEL
    return (
        m.bracket(m.letter("a"), m.letter("b")),  # x
        m.bracket(m.letter("a"), m.letter("d")),  # y
        m.bracket(m.letter("b"), m.letter("e")),  # z
        m.bracket(m.letter("c"), m.letter("e")),  # u
    )


def identity_suite(kmax: int = 4, lmax: int = 4) -> list:
    """Every displayed rewrite identity, as (name, element-that-must-reduce-to-zero)."""
    m = L4_MODEL
    x, y, z, u = _xyzu()
    a, b, c, d, e, v = (m.letter(i) for i in range(6))
    neg_de = m.combo({"d": -1, "e": -1})
    items: list = []

    def emit(name, elem):
        items.append((name, elem))

    # Claim 5.2a: [a+b+c, x] = 0 and friends
    emit("5.2a [a+b+c,x]", m.bracket(m.combo({"a": 1, "b": 1, "c": 1}), x))
    emit("5.2a [a+d+v,y]", m.bracket(m.combo({"a": 1, "d": 1, "v": 1}), y))
    emit("5.2a [b+e+d,z]", m.bracket(m.combo({"b": 1, "e": 1, "d": 1}), z))
    emit("5.2a [c+e+v,u]", m.bracket(m.combo({"c": 1, "e": 1, "v": 1}), u))
    # Claim 5.2b
    for tgt, nm in ((a, "a"), (b, "b"), (x, "x")):
        emit(
            f"5.2b [d{nm}]+[e{nm}]+[v{nm}]",
            m.add(m.add(m.bracket(d, tgt), m.bracket(e, tgt)), m.bracket(v, tgt)),
        )
    # Claim 5.2c: three chains of four
    dx, ex, vx = m.bracket(d, x), m.bracket(e, x), m.bracket(v, x)
    emit("5.2c [dx]+[cy]", m.add(dx, m.bracket(c, y)))
    emit("5.2c [dx]+[cz]", m.add(dx, m.bracket(c, z)))
    emit("5.2c [dx]-[du]", m.sub(dx, m.bracket(d, u)))
    emit("5.2c [ex]+[ey]", m.add(ex, m.bracket(e, y)))
    emit("5.2c [ex]+[az]", m.add(ex, m.bracket(a, z)))
    emit("5.2c [ex]-[au]", m.sub(ex, m.bracket(a, u)))
    emit("5.2c [vx]+[by]", m.add(vx, m.bracket(b, y)))
    emit("5.2c [vx]+[vz]", m.add(vx, m.bracket(v, z)))
    emit("5.2c [vx]-[bu]", m.sub(vx, m.bracket(b, u)))
    # Lemma 5.4a: prefix letters commute over any longer word
    for s1 in range(6):
        for s2 in range(s1 + 1, 6):
            core = m.bracket(m.letter(2), m.bracket(m.letter(4), m.bracket(m.letter(0), m.letter(1))))
            lhs = m.bracket(m.letter(s1), m.bracket(m.letter(s2), core))
            rhs = m.bracket(m.letter(s2), m.bracket(m.letter(s1), core))
            emit(f"5.4a [{LETTERS[s1]}{LETTERS[s2]}w]-[{LETTERS[s2]}{LETTERS[s1]}w]", m.sub(lhs, rhs))
    # Lemma 5.4b: words w = d^i e^j with at least one letter
    for i in range(0, kmax + 1):
        for j in range(0, lmax + 1):
            if i + j < 1:
                continue
            powers = {"d": i, "e": j}
            wx = m.mono_mult(x, powers)
            emit(f"5.4b [a d^{i}e^{j} x]-[e d^{i}e^{j} x]",
                 m.sub(m.bracket(a, wx), m.bracket(e, wx)))
            emit(f"5.4b [b d^{i}e^{j} x]-[(-d-e) d^{i}e^{j} x]",
                 m.sub(m.bracket(b, wx), m.bracket(neg_de, wx)))
            emit(f"5.4b [c d^{i}e^{j} x]-[d d^{i}e^{j} x]",
                 m.sub(m.bracket(c, wx), m.bracket(d, wx)))
    # Claims 5.6a-d (k >= 0, l >= 1)
    def pow_apply(base, first, k, second, l):
        out = base
        for _ in range(l):
            out = m.bracket(second, out)
        for _ in range(k):
            out = m.bracket(first, out)
        return out

    for k in range(0, kmax + 1):
        for l in range(1, lmax + 1):
            emit(f"5.6a [b^{k}d^{l}x]=[(-d-e)^{k}d^{l}x]",
                 m.sub(pow_apply(x, b, k, d, l), pow_apply(x, neg_de, k, d, l)))
            emit(f"5.6a [d^{k}b^{l}y]=-[d^{k}(-d-e)^{l}x]",
                 m.add(pow_apply(y, d, k, b, l), pow_apply(x, d, k, neg_de, l)))
            emit(f"5.6b [b^{k}c^{l}z]=-[(-d-e)^{k}d^{l}x]",
                 m.add(pow_apply(z, b, k, c, l), pow_apply(x, neg_de, k, d, l)))
            emit(f"5.6b [c^{k}b^{l}u]=[d^{k}(-d-e)^{l}x]",
                 m.sub(pow_apply(u, c, k, b, l), pow_apply(x, d, k, neg_de, l)))
            emit(f"5.6c [d^{k}e^{l}y]=-[d^{k}e^{l}x]",
                 m.add(pow_apply(y, d, k, e, l), pow_apply(x, d, k, e, l)))
            emit(f"5.6c [e^{k}d^{l}u]=[e^{k}d^{l}x]",
                 m.sub(pow_apply(u, e, k, d, l), pow_apply(x, e, k, d, l)))
            emit(f"5.6d [a^{k}c^{l}y]=-[e^{k}d^{l}x]",
                 m.add(pow_apply(y, a, k, c, l), pow_apply(x, e, k, d, l)))
            emit(f"5.6d [c^{k}a^{l}u]=[d^{k}e^{l}x]",
                 m.sub(pow_apply(u, c, k, a, l), pow_apply(x, d, k, e, l)))
    # Claims 5.7a-d (k >= 0)
    b_plus_d = m.combo({"b": 1, "d": 1})
    b_plus_c = m.combo({"b": 1, "c": 1})
    d_plus_e = m.combo({"d": 1, "e": 1})
    a_plus_c = m.combo({"a": 1, "c": 1})
    neg_e = m.combo({"e": -1})

    def kpow(first, k, base):
        out = base
        for _ in range(k):
            out = m.bracket(first, out)
        return out

    for k in range(0, kmax + 1):
        emit(f"5.7a [(b+d)^{k}x]",
             m.sub(kpow(b_plus_d, k, x),
                   m.add(m.sub(kpow(b, k, x), kpow(neg_de, k, x)), kpow(neg_e, k, x))))
        emit(f"5.7a [(b+d)^{k}y]",
             m.sub(kpow(b_plus_d, k, y),
                   m.sub(m.add(kpow(d, k, y), kpow(d, k, x)), kpow(neg_e, k, x))))
        emit(f"5.7b [(b+c)^{k}z]",
             m.sub(kpow(b_plus_c, k, z),
                   m.sub(m.add(kpow(b, k, z), kpow(neg_de, k, x)), kpow(neg_e, k, x))))
        emit(f"5.7b [(b+c)^{k}u]",
             m.sub(kpow(b_plus_c, k, u),
                   m.add(m.sub(kpow(c, k, u), kpow(d, k, x)), kpow(neg_e, k, x))))
        emit(f"5.7c [(d+e)^{k}y]",
             m.sub(kpow(d_plus_e, k, y),
                   m.sub(m.add(kpow(d, k, y), kpow(d, k, x)), kpow(d_plus_e, k, x))))
        emit(f"5.7c [(d+e)^{k}u]",
             m.sub(kpow(d_plus_e, k, u),
                   m.add(m.sub(kpow(e, k, u), kpow(e, k, x)), kpow(d_plus_e, k, x))))
        emit(f"5.7d [(a+c)^{k}y]",
             m.sub(kpow(a_plus_c, k, y),
                   m.sub(m.add(kpow(a, k, y), kpow(e, k, x)), kpow(d_plus_e, k, x))))
        emit(f"5.7d [(a+c)^{k}u]",
             m.sub(kpow(a_plus_c, k, u),
                   m.add(m.sub(kpow(c, k, u), kpow(d, k, x)), kpow(d_plus_e, k, x))))
    # Lemma 5.8a/b (k, l >= 0)
    for k in range(0, kmax + 1):
        for l in range(0, lmax + 1):
            lhs = m.long_commutator([a] * k + [b_plus_d] * l + [a, b_plus_d])
            rhs = m.add(
                m.add(pow_apply(x, a, k, b, l), pow_apply(y, a, k, d, l)),
                m.sub(pow_apply(x, e, k, d, l), pow_apply(x, e, k, neg_de, l)),
            )
            emit(f"5.8a [a^{k}(b+d)^{l}a(b+d)] (k={k},l={l})", m.sub(lhs, rhs))
            lhs2 = m.long_commutator([b_plus_c] * k + [e] * l + [b_plus_c, e])
            rhs2 = m.add(
                m.add(pow_apply(z, b, k, e, l), pow_apply(u, c, k, e, l)),
                m.sub(pow_apply(x, neg_de, k, e, l), pow_apply(x, d, k, e, l)),
            )
            emit(f"5.8b-first [(b+c)^{k}e^{l}(b+c)e] (k={k},l={l})", m.sub(lhs2, rhs2))
            lhs3 = m.long_commutator([a_plus_c] * k + [d_plus_e] * l + [a_plus_c, d_plus_e])
            rhs3 = m.add(
                m.add(pow_apply(y, a, k, d, l), pow_apply(u, c, k, e, l)),
                m.sub(pow_apply(x, e, k, d, l), pow_apply(x, d, k, e, l)),
            )
            emit(f"5.8b [(a+c)^{k}(d+e)^{l}(a+c)(d+e)] (k={k},l={l})", m.sub(lhs3, rhs3))
    return items


def claim_53_span_checks() -> bool:
    """Degree-3 generation: every simple commutator lies in the span of the 8
    listed simple ones, every non-simple one in the span of [dx], [ex]."""
    m = L4_MODEL
    red = l4_reducer()
    x, y, z, u = _xyzu()
    a, b, c, d, e, v = (m.letter(i) for i in range(6))
    simple_gens = [
        m.bracket(a, x), m.bracket(b, x), m.bracket(a, y), m.bracket(d, y),
        m.bracket(b, z), m.bracket(e, z), m.bracket(c, u), m.bracket(e, u),
    ]
    nonsimple_gens = [m.bracket(d, x), m.bracket(e, x)]
    simple_all = [
        m.bracket(t, w)
        for w, ws in ((x, "x"), (y, "y"), (z, "z"), (u, "u"))
        for t in {
            "x": (a, b, c), "y": (a, d, v), "z": (b, e, d), "u": (c, e, v),
        }[ws]
    ]
    nonsimple_all = [
        m.bracket(t, w)
        for w, others in ((x, (d, e, v)), (y, (b, c, e)), (z, (a, c, v)), (u, (a, b, d)))
        for t in others
    ]

    def in_span(target, gens) -> bool:
        rows = [red.reduce(g).get(3, {}) for g in gens]
        tgt = red.reduce(target).get(3, {})
        keys = sorted({k for r in rows for k in r} | set(tgt))
        matrix = [[r.get(k, Fraction(0)) for r in rows] for k in keys]
        rhs = [tgt.get(k, Fraction(0)) for k in keys]
        from .linalg import solve_exact

        particular, _ = solve_exact(matrix, rhs) if keys else ([], [])
        return particular is not None

    return all(in_span(t, simple_gens) for t in simple_all) and all(
        in_span(t, nonsimple_gens) for t in nonsimple_all
    )
