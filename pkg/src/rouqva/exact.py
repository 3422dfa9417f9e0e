"""Exact base arithmetic: sparse Laurent polynomials in q and the field Q(zeta_p).

zeta is represented generically as the residue class of x modulo the p-th
cyclotomic polynomial, so every identity checked downstream is exact and
independent of which primitive p-th root of unity is chosen.
"""

from __future__ import annotations

from functools import lru_cache

from .rational import R0, R1, Rat, is_integer


# ---------------------------------------------------------------------------
# Laurent polynomials in q
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Sparse Laurent polynomial in q with rational coefficients.

    Stored as a map exponent -> coefficient with no zero coefficients.
    Instances are treated as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        else:
            self.terms = {e: c for e, c in terms.items() if c != 0}

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def const(c) -> "LaurentPoly":
        c = Rat(c)
        return LaurentPoly({0: c} if c != 0 else {})

    @staticmethod
    def q_power(e: int, c=1) -> "LaurentPoly":
        c = Rat(c)
        return LaurentPoly({e: c} if c != 0 else {})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, R0) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return LaurentPoly.__new_raw(terms)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly.__new_raw({e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        terms: dict[int, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = terms.get(e, R0) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return LaurentPoly.__new_raw(terms)

    def scale(self, c) -> "LaurentPoly":
        c = Rat(c)
        if c == 0:
            return LaurentPoly()
        return LaurentPoly.__new_raw({e: c * v for e, v in self.terms.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly.__new_raw({e + k: c for e, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, e: int):
        return self.terms.get(e, R0)

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def has_integer_coeffs(self) -> bool:
        return all(is_integer(c) for c in self.terms.values())

    def eval_at_one(self):
        """g(1)."""
        total = R0
        for c in self.terms.values():
            total += c
        return total

    def weighted_degree_sum(self):
        """(q d/dq g)(1) = sum of exponent * coefficient."""
        total = R0
        for e, c in self.terms.items():
            total += e * c
        return total

    def substitute_inverse(self) -> "LaurentPoly":
        """q -> q^-1."""
        return LaurentPoly.__new_raw({-e: c for e, c in self.terms.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """q -> q^k for nonzero integer k."""
        if k == 0:
            raise ValueError("substitution power must be nonzero")
        return LaurentPoly.__new_raw({e * k: c for e, c in self.terms.items()})

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / other; raises ArithmeticError if inexact."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly()
        # Strip q-powers so both become ordinary polynomials.
        s_min, o_min = self.min_exp(), other.min_exp()
        num = _dense(self, s_min)
        den = _dense(other, o_min)
        quo, rem = _poly_divmod(num, den)
        if any(c != 0 for c in rem):
            raise ArithmeticError("inexact Laurent polynomial division")
        shift = s_min - o_min
        return LaurentPoly({i + shift: c for i, c in enumerate(quo) if c != 0})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*q")
            else:
                parts.append(f"{c}*q^{e}")
        return " + ".join(parts)

    @classmethod
    def __new_raw(cls, terms) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj


def _dense(p: LaurentPoly, low: int) -> list:
    size = p.max_exp() - low + 1
    out = [R0] * size
    for e, c in p.terms.items():
        out[e - low] = c
    return out


def _poly_divmod(num: list, den: list):
    """Dense polynomial division over the rationals (ascending coefficients)."""
    num = list(num)
    dn = len(den) - 1
    while dn >= 0 and den[dn] == 0:
        dn -= 1
    if dn < 0:
        raise ZeroDivisionError("zero divisor polynomial")
    lead = den[dn]
    quo = [R0] * max(len(num) - dn, 0)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        f = c / lead
        quo[i - dn] = f
        for j in range(dn + 1):
            num[i - dn + j] -= f * den[j]
    return quo, num


def laurent_substitute(p: LaurentPoly, mode: str, k: int | None = None) -> LaurentPoly:
    """q -> q^k ('power' mode, k nonzero) or q -> q^-1 ('inverse' mode)."""
    if mode == "power":
        if not k:
            raise ValueError("power mode requires a nonzero integer k")
        return p.substitute_power(k)
    if mode == "inverse":
        return p.substitute_inverse()
    raise ValueError(f"unknown substitution mode {mode!r}")


# ---------------------------------------------------------------------------
# Cyclotomic polynomial coefficients (Moebius route; qcomb has the
# divisor-recursion route, and the test suite cross-checks the two)
# ---------------------------------------------------------------------------

def _int_poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _int_poly_exact_div(num: list, den: list) -> list:
    num = list(num)
    dn = len(den) - 1
    while den[dn] == 0:
        dn -= 1
    quo = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        if c % den[dn] != 0:
            raise ArithmeticError("inexact integer polynomial division")
        f = c // den[dn]
        quo[i - dn] = f
        for j in range(dn + 1):
            num[i - dn + j] -= f * den[j]
    if any(num):
        raise ArithmeticError("inexact integer polynomial division")
    return quo


def _mobius(n: int) -> int:
    m, p, cnt = 1, 2, 0
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            cnt += 1
        else:
            p += 1
    if n > 1:
        cnt += 1
    return -m if cnt % 2 else m


@lru_cache(maxsize=None)
def cyclotomic_coeffs(k: int) -> tuple[int, ...]:
    """Integer coefficients (ascending) of the k-th cyclotomic polynomial.

    Computed from the Moebius product Phi_k(z) = prod_{d|k} (z^{k/d}-1)^mu(d).
    """
    if k < 1:
        raise ValueError("k must be positive")
    num = [1]
    dens = []
    for d in range(1, k + 1):
        if k % d == 0:
            mu = _mobius(d)
            if mu == 0:
                continue
            f = [-1] + [0] * (k // d - 1) + [1]  # z^(k/d) - 1
            if mu == 1:
                num = _int_poly_mul(num, f)
            else:
                dens.append(f)
    for f in dens:
        num = _int_poly_exact_div(num, f)
    return tuple(num)


# ---------------------------------------------------------------------------
# The cyclotomic field Q(zeta_p)
# ---------------------------------------------------------------------------

class CycloField:
    """Q(zeta_p) realized as Q[x] / Phi_p(x); zeta is the class of x."""

    def __init__(self, p: int):
        if p < 2:
            raise ValueError("p must be at least 2")
        self.p = p
        phi = [Rat(c) for c in cyclotomic_coeffs(p)]
        self.degree = len(phi) - 1
        self._phi = phi
        d = self.degree
        # Rows expressing x^e (e = d .. 2d-2) in the power basis.
        rows = []
        prev = [-phi[i] for i in range(d)]  # x^d
        rows.append(tuple(prev))
        for _ in range(d - 2):
            nxt = [R0] + prev[:-1]
            top = prev[-1]
            if top != 0:
                for i in range(d):
                    nxt[i] -= top * phi[i]
            rows.append(tuple(nxt))
            prev = nxt
        self._red = rows
        # Power table for zeta^e, e in [0, p).
        pows = []
        cur = self.one()
        for _ in range(p):
            pows.append(cur)
            cur = self.mul(cur, self._x())
        self._zeta_pows = pows

    # -- element constructors ----------------------------------------------

    def scalar(self, vec) -> "CycloScalar":
        vec = tuple(vec)
        if len(vec) != self.degree:
            raise ValueError("coefficient vector has wrong length")
        return CycloScalar(self, vec)

    def zero(self) -> "CycloScalar":
        return CycloScalar(self, (R0,) * self.degree)

    def one(self) -> "CycloScalar":
        return self.from_rat(R1)

    def from_rat(self, c) -> "CycloScalar":
        vec = [R0] * self.degree
        vec[0] = Rat(c)
        return CycloScalar(self, tuple(vec))

    def _x(self) -> "CycloScalar":
        vec = [R0] * self.degree
        if self.degree == 1:
            # Phi_p linear only for p = 1,2; for p = 2, x = -1.
            return CycloScalar(self, (-self._phi[0],))
        vec[1] = R1
        return CycloScalar(self, tuple(vec))

    def zeta(self, e: int = 1) -> "CycloScalar":
        return self._zeta_pows[e % self.p]

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: "CycloScalar", b: "CycloScalar") -> "CycloScalar":
        return CycloScalar(self, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def sub(self, a: "CycloScalar", b: "CycloScalar") -> "CycloScalar":
        return CycloScalar(self, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a: "CycloScalar") -> "CycloScalar":
        return CycloScalar(self, tuple(-x for x in a.coeffs))

    def mul(self, a: "CycloScalar", b: "CycloScalar") -> "CycloScalar":
        d = self.degree
        av, bv = a.coeffs, b.coeffs
        conv = [R0] * (2 * d - 1)
        for i in range(d):
            ai = av[i]
            if ai == 0:
                continue
            for j in range(d):
                bj = bv[j]
                if bj != 0:
                    conv[i + j] += ai * bj
        out = list(conv[:d])
        red = self._red
        for e in range(d, 2 * d - 1):
            c = conv[e]
            if c != 0:
                row = red[e - d]
                for i in range(d):
                    if row[i] != 0:
                        out[i] += c * row[i]
        return CycloScalar(self, tuple(out))

    def scale(self, a: "CycloScalar", c) -> "CycloScalar":
        c = Rat(c)
        return CycloScalar(self, tuple(c * x for x in a.coeffs))

    def inv(self, a: "CycloScalar") -> "CycloScalar":
        """Inverse via the extended Euclidean algorithm modulo Phi_p."""
        if a.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        # Work with dense rational polys (ascending).
        r0 = list(self._phi)
        r1 = list(a.coeffs)
        s0, s1 = [R0], [R1]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                break
            quo, rem = _poly_divmod(r0, r1)
            while rem and rem[-1] == 0:
                rem.pop()
            new_s = _sub_poly(s0, _int_mul_poly(quo, s1))
            r0, r1 = r1, rem
            s0, s1 = s1, new_s
        c = r1[0]
        inv_vec = [x / c for x in s1]
        inv_vec += [R0] * (self.degree - len(inv_vec))
        out = CycloScalar(self, tuple(inv_vec[: self.degree]))
        return out

    def __repr__(self):
        return f"CycloField(p={self.p})"


def _int_mul_poly(a: list, b: list) -> list:
    out = [R0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x != 0:
            for j, y in enumerate(b):
                if y != 0:
                    out[i + j] += x * y
    return out


def _sub_poly(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [R0] * (n - len(a))
    b = b + [R0] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


class CycloScalar:
    """Element of Q(zeta_p) in the power basis 1, x, ..., x^(deg-1)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycloField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def __add__(self, other):
        return self.field.add(self, other)

    def __sub__(self, other):
        return self.field.sub(self, other)

    def __neg__(self):
        return self.field.neg(self)

    def __mul__(self, other):
        if isinstance(other, CycloScalar):
            return self.field.mul(self, other)
        return self.field.scale(self, other)

    def __rmul__(self, other):
        return self.field.scale(self, other)

    def inv(self):
        return self.field.inv(self)

    def __eq__(self, other):
        return (
            isinstance(other, CycloScalar)
            and self.field.p == other.field.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.coeffs))

    def __repr__(self):
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*z")
            else:
                parts.append(f"{c}*z^{e}")
        return " + ".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def get_field(p: int) -> CycloField:
    return CycloField(p)


def eval_zeta(poly: LaurentPoly, p) -> CycloScalar:
    """Evaluate a Laurent polynomial at q = zeta_p, exactly in Q(zeta_p)."""
    field = p if isinstance(p, CycloField) else get_field(p)
    out = field.zero()
    for e, c in poly.terms.items():
        out = out + field.scale(field.zeta(e), c)
    return out


def eval_zeta_power(poly: LaurentPoly, exp: int, field: CycloField) -> CycloScalar:
    """Evaluate at q = zeta^exp."""
    out = field.zero()
    for e, c in poly.terms.items():
        out = out + field.scale(field.zeta(e * exp), c)
    return out


def cyclo_inverse(c: CycloScalar) -> CycloScalar:
    """Multiplicative inverse in Q(zeta_p); raises ZeroDivisionError on zero."""
    return c.inv()
