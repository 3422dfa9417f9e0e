"""Quantum integers, Gaussian binomials, the divided-power bracket, and
cyclotomic coefficient polynomials, with the scalar identities behind them.

Everything here is exact: quantum objects live in Z[q, q^-1], cyclotomic
data in Z[z].  Identity checks either expand symbolically or evaluate at
deterministic rational points that exceed every degree bound, which makes
the evaluation a proof by interpolation.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .exact import LaurentPoly, _int_poly_exact_div, _int_poly_mul
from .rational import R0, R1, Rat
from .report import CheckReport


# ---------------------------------------------------------------------------
# Quantum integers / factorials / binomials (variable q^d)
# ---------------------------------------------------------------------------

def qint(n: int, d: int = 1) -> LaurentPoly:
    """[n] in the variable q^d: q^{d(n-1)} + q^{d(n-3)} + ... + q^{d(1-n)}.

    Extended to negative n by [-n] = -[n], which the structure-constant
    formulas need for off-diagonal Cartan entries.
    """
    if d <= 0:
        raise ValueError("d must be positive")
    if n == 0:
        return LaurentPoly.zero()
    sign = 1
    if n < 0:
        n, sign = -n, -1
    return LaurentPoly({d * (n - 1 - 2 * t): Rat(sign) for t in range(n)})


def qfactorial(n: int, d: int = 1) -> LaurentPoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = LaurentPoly.const(1)
    for k in range(1, n + 1):
        out = out * qint(k, d)
    return out


def qbinom(n: int, r: int, d: int = 1) -> LaurentPoly:
    """Gaussian binomial [n r] in q^d via the exact factorial quotient."""
    if not 0 <= r <= n:
        raise ValueError("need 0 <= r <= n")
    num = qfactorial(n, d)
    den = qfactorial(r, d) * qfactorial(n - r, d)
    return num.exact_div(den)  # ArithmeticError here would be an arithmetic bug


# ---------------------------------------------------------------------------
# Integer polynomials in one variable z
# ---------------------------------------------------------------------------

class IntPoly:
    """Dense integer polynomial, ascending coefficients, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero() or other.is_zero():
            return IntPoly(())
        return IntPoly(_int_poly_mul(list(self.coeffs), list(other.coeffs)))

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPoly([x + y for x, y in zip(a, b)])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPoly([x - y for x, y in zip(a, b)])

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(_int_poly_exact_div(list(self.coeffs), list(other.coeffs)))

    def eval_int(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __repr__(self):
        if not self.coeffs:
            return "IntPoly(0)"
        parts = []
        for e, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}" if e == 0 else (f"{c}*z" if e == 1 else f"{c}*z^{e}"))
        return "IntPoly(" + " + ".join(parts) + ")"


@lru_cache(maxsize=None)
def cyclotomic_poly(k: int) -> IntPoly:
    """Phi_k by exact division of z^k - 1 by the product of proper divisors."""
    if k < 1:
        raise ValueError("k must be positive")
    num = IntPoly([-1] + [0] * (k - 1) + [1])
    for d in range(1, k):
        if k % d == 0:
            num = num.exact_div(cyclotomic_poly(d))
    return num


def _c_prime_polys(k: int) -> list[IntPoly]:
    """Coefficients C'_{k,a}(z) of w^a in w^k - 1 - prod_{t<k}(w - z^t)."""
    # prod_{t=0}^{k-1} (w - z^t), as a list over w-powers of IntPoly in z.
    prod = [IntPoly([1])]
    for t in range(k):
        zt = IntPoly([0] * t + [1])
        new = [IntPoly(())] * (len(prod) + 1)
        for a, pa in enumerate(prod):
            new[a + 1] = new[a + 1] + pa
            new[a] = new[a] - zt * pa
        prod = new
    out = []
    for a in range(k):
        c = IntPoly(()) - prod[a]
        if a == 0:
            c = c - IntPoly([1])  # the -1 of w^k - 1
        out.append(c)
    return out


def c_poly(k: int, a: int) -> IntPoly:
    """C_{k,a} = C'_{k,a} / Phi_k, exact over Z.

    Inexact division raises ArithmeticError; exactness is itself one of the
    verified claims (the quotient must land in Z[z]).
    """
    if not 0 <= a < k:
        raise ValueError("need 0 <= a < k")
    return _c_prime_polys(k)[a].exact_div(cyclotomic_poly(k))


def check_c_poly_integrality(max_k: int = 30) -> CheckReport:
    """Criterion: C_{k,a} has integer coefficients for all k <= max_k."""
    rep = CheckReport("qcomb")
    for k in range(1, max_k + 1):
        try:
            for a in range(k):
                c_poly(k, a)
            rep.add("c_poly_integral", {"k": k}, True)
        except ArithmeticError as exc:
            rep.add("c_poly_integral", {"k": k}, False, f"inexact division: {exc}")
    return rep


# ---------------------------------------------------------------------------
# Multivariate Laurent polynomials in (q, a, b), for the bracket identity
# ---------------------------------------------------------------------------

class MultiLaurent:
    """Sparse Laurent polynomial in commuting invertible symbols q, a, b."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @staticmethod
    def monomial(eq: int = 0, ea: int = 0, eb: int = 0, c=1) -> "MultiLaurent":
        c = Rat(c)
        return MultiLaurent({(eq, ea, eb): c} if c != 0 else {})

    def __add__(self, other):
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, R0) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        out = MultiLaurent.__new__(MultiLaurent)
        out.terms = terms
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Rat(c)
        out = MultiLaurent.__new__(MultiLaurent)
        out.terms = {} if c == 0 else {e: c * v for e, v in self.terms.items()}
        return out

    def __mul__(self, other):
        terms: dict = {}
        for (q1, a1, b1), c1 in self.terms.items():
            for (q2, a2, b2), c2 in other.terms.items():
                e = (q1 + q2, a1 + a2, b1 + b2)
                s = terms.get(e, R0) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        out = MultiLaurent.__new__(MultiLaurent)
        out.terms = terms
        return out

    def __eq__(self, other):
        return isinstance(other, MultiLaurent) and self.terms == other.terms

    @staticmethod
    def from_qpoly(p: LaurentPoly) -> "MultiLaurent":
        out = MultiLaurent.__new__(MultiLaurent)
        out.terms = {(e, 0, 0): c for e, c in p.terms.items()}
        return out


def _qbracket(x: MultiLaurent, x_inv: MultiLaurent, m: int):
    """The bracket [x; m]_q = prod_{s=1}^m (x q^{1-s} - x^{-1} q^{s-1}) / (q^s - q^{-s}).

    Returned as an unreduced fraction (numerator over (q,a,b), denominator in
    q alone): the bracket itself is only a rational function of q.
    """
    num = MultiLaurent.monomial(0, 0, 0, 1)
    den = LaurentPoly.const(1)
    for s in range(1, m + 1):
        factor = x * MultiLaurent.monomial(1 - s) - x_inv * MultiLaurent.monomial(s - 1)
        num = num * factor
        den = den * (LaurentPoly.q_power(s) - LaurentPoly.q_power(-s))
    return num, den


def check_qb_mult(m: int) -> CheckReport:
    """[ab; m] = sum_k a^{m-k} b^{-k} [b; m-k] [a; k], expanded over (q, a, b).

    Fractions are compared by cross-multiplication, so the check is exact.
    """
    rep = CheckReport("qcomb")
    a = MultiLaurent.monomial(0, 1, 0)
    a_inv = MultiLaurent.monomial(0, -1, 0)
    b = MultiLaurent.monomial(0, 0, 1)
    b_inv = MultiLaurent.monomial(0, 0, -1)
    ab = MultiLaurent.monomial(0, 1, 1)
    ab_inv = MultiLaurent.monomial(0, -1, -1)
    lhs_num, lhs_den = _qbracket(ab, ab_inv, m)
    rhs_num, rhs_den = MultiLaurent(), LaurentPoly.const(1)
    for k in range(m + 1):
        nb, db = _qbracket(b, b_inv, m - k)
        na, da = _qbracket(a, a_inv, k)
        term_num = MultiLaurent.monomial(0, m - k, -k) * nb * na
        term_den = db * da
        rhs_num = rhs_num * MultiLaurent.from_qpoly(term_den) + term_num * MultiLaurent.from_qpoly(rhs_den)
        rhs_den = rhs_den * term_den
    ok = lhs_num * MultiLaurent.from_qpoly(rhs_den) == rhs_num * MultiLaurent.from_qpoly(lhs_den)
    detail = "" if ok else "cross-multiplied sides differ"
    rep.add("qb_mult", {"m": m}, ok, detail)
    return rep


# ---------------------------------------------------------------------------
# Antisymmetrization and q-binomial-theorem identities
# ---------------------------------------------------------------------------

def inversions(perm: tuple) -> int:
    """Number of inverted pairs; the sign convention is (-1)^inversions."""
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def _eval_points(count: int) -> list:
    # Small distinct positive rationals; denominators avoid accidental ties.
    return [Rat(3 * i + 2, 2 * i + 1) for i in range(count)]


def check_antisym(k: int, mode: str = "product-formula") -> CheckReport:
    """Verify the q-antisymmetrization identity (product-formula mode) or the
    finite q-binomial product expansion (qbinom-theorem mode).

    Product-formula mode checks, as polynomials in z_1..z_k over Z[q, q^-1]:

        sum_{s in S_k} (-1)^{|s|} prod_{s(a) < s(b)} (z_a - q^{-2} z_b)
            = q^{-k(k-1)/2} [k]! prod_{a<b} (z_a - z_b)

    Both sides are antisymmetric (swapping z_a, z_b permutes the sum against
    one transposition), so they vanish on every tuple with a repeated value
    and are determined by strictly increasing tuples.  We therefore evaluate
    on all increasing tuples drawn from k+3 deterministic rational points,
    which exceeds the per-variable degree bound k-1.
    """
    rep = CheckReport("qcomb")
    if mode == "qbinom-theorem":
        # prod_{s=0}^{m-1} (1 + q^{2s} z) = sum_s q^{s(m-1)} [m s] z^s, m := k
        m = k
        lhs = [LaurentPoly.const(1)]  # coefficients in z, entries in Z[q,q^-1]
        for s in range(m):
            zt = LaurentPoly.q_power(2 * s)
            new = [LaurentPoly.zero()] * (len(lhs) + 1)
            for i, c in enumerate(lhs):
                new[i] = new[i] + c
                new[i + 1] = new[i + 1] + c * zt
            lhs = new
        ok = True
        detail = ""
        for s in range(m + 1):
            rhs_c = qbinom(m, s).shift(s * (m - 1))
            if lhs[s] != rhs_c:
                ok = False
                detail = f"z^{s} coefficient differs"
                break
        rep.add("antisym_qbinom_theorem", {"m": m}, ok, detail)
        return rep

    if mode != "product-formula":
        raise ValueError(f"unknown mode {mode!r}")

    pts = _eval_points(k + 3)
    perms = list(permutations(range(k)))
    prefactor = qfactorial(k).shift(-k * (k - 1) // 2)

    def increasing_tuples(depth, start, cur, out):
        if depth == k:
            out.append(tuple(cur))
            return
        for idx in range(start, len(pts)):
            cur.append(pts[idx])
            increasing_tuples(depth + 1, idx + 1, cur, out)
            cur.pop()

    tuples: list = []
    increasing_tuples(0, 0, [], tuples)
    ok = True
    detail = ""
    qm2 = LaurentPoly.q_power(-2)
    for zs in tuples:
        lhs = LaurentPoly.zero()
        for perm in perms:
            term = LaurentPoly.const((-1) ** inversions(perm))
            for a in range(k):
                for b in range(k):
                    if a != b and perm[a] < perm[b]:
                        # factor (z_a - q^{-2} z_b)
                        term = term * (LaurentPoly.const(zs[a]) - qm2.scale(zs[b]))
            lhs = lhs + term
        van = R1
        for a in range(k):
            for b in range(a + 1, k):
                van = van * (zs[a] - zs[b])
        rhs = prefactor.scale(van)
        if lhs != rhs:
            ok = False
            detail = f"mismatch at z = {tuple(str(z) for z in zs)}"
            break
    # Antisymmetry spot check backing the tuple reduction.
    if ok and k >= 2:
        zs = list(_eval_points(k))
        swapped = list(zs)
        swapped[0], swapped[1] = swapped[1], swapped[0]

        def lhs_at(vals):
            acc = LaurentPoly.zero()
            for perm in perms:
                term = LaurentPoly.const((-1) ** inversions(perm))
                for a in range(k):
                    for b in range(k):
                        if a != b and perm[a] < perm[b]:
                            term = term * (LaurentPoly.const(vals[a]) - qm2.scale(vals[b]))
                acc = acc + term
            return acc

        if lhs_at(zs) + lhs_at(swapped) != LaurentPoly.zero():
            ok = False
            detail = "antisymmetry spot check failed"
    rep.add("antisym_product_formula", {"k": k}, ok, detail)
    return rep
