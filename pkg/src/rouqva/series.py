"""Truncated Laurent series over Q(zeta_p), with exp/log, the theta-type
building blocks, and the multiplicative constants C(g) and series E(z, g).

A series stores coefficients for the exponent window [min_exp, top]; every
operation propagates the window conservatively, so no coefficient beyond
the guaranteed-valid order is ever reported.
"""

from __future__ import annotations

from functools import lru_cache

from .cartan import RootUnityCtx, residue_profile
from .exact import CycloField, CycloScalar, LaurentPoly, get_field
from .rational import R1, Rat
from .report import CheckReport


class TruncSeries:
    """Laurent series with finite principal part, truncated at exponent top."""

    __slots__ = ("field", "min_exp", "top", "coeffs")

    def __init__(self, field: CycloField, min_exp: int, top: int, coeffs):
        self.field = field
        self.min_exp = min_exp
        self.top = top
        self.coeffs = list(coeffs)
        if len(self.coeffs) != top - min_exp + 1:
            raise ValueError("coefficient window does not match [min_exp, top]")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(field: CycloField, top: int, min_exp: int = 0) -> "TruncSeries":
        return TruncSeries(field, min_exp, top, [field.zero()] * (top - min_exp + 1))

    @staticmethod
    def const(field: CycloField, c, top: int) -> "TruncSeries":
        out = TruncSeries.zero(field, top)
        out.coeffs[0] = c if isinstance(c, CycloScalar) else field.from_rat(c)
        return out

    @staticmethod
    def monomial(field: CycloField, e: int, top: int, c=None) -> "TruncSeries":
        out = TruncSeries.zero(field, top, min_exp=min(e, 0))
        out.coeffs[e - out.min_exp] = c if c is not None else field.one()
        return out

    def copy(self) -> "TruncSeries":
        return TruncSeries(self.field, self.min_exp, self.top, list(self.coeffs))

    # -- access ---------------------------------------------------------------

    def coeff(self, e: int) -> CycloScalar:
        """Coefficient at exponent e; raises if e exceeds the valid window."""
        if e > self.top:
            raise ValueError(f"exponent {e} beyond truncation {self.top}")
        if e < self.min_exp:
            return self.field.zero()
        return self.coeffs[e - self.min_exp]

    def constant_term(self) -> CycloScalar:
        for e in range(self.min_exp, 0):
            if not self.coeff(e).is_zero():
                raise ValueError("series has a pole; no constant term")
        return self.coeff(0)

    def valuation(self):
        for e in range(self.min_exp, self.top + 1):
            if not self.coeffs[e - self.min_exp].is_zero():
                return e
        return None

    def is_zero_through(self, through: int | None = None) -> bool:
        hi = self.top if through is None else min(through, self.top)
        return all(
            self.coeffs[e - self.min_exp].is_zero() for e in range(self.min_exp, hi + 1)
        )

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        lo = min(self.min_exp, other.min_exp)
        top = min(self.top, other.top)
        out = TruncSeries.zero(self.field, top, min_exp=lo)
        for e in range(lo, top + 1):
            out.coeffs[e - lo] = self._get(e) + other._get(e)
        return out

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + other.neg()

    def neg(self) -> "TruncSeries":
        return TruncSeries(self.field, self.min_exp, self.top, [-c for c in self.coeffs])

    __neg__ = neg

    def scale(self, c) -> "TruncSeries":
        if not isinstance(c, CycloScalar):
            c = self.field.from_rat(c)
        return TruncSeries(self.field, self.min_exp, self.top, [c * x for x in self.coeffs])

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        lo = self.min_exp + other.min_exp
        top = min(self.top + other.min_exp, other.top + self.min_exp)
        zero = self.field.zero()
        out = [zero] * (top - lo + 1)
        for e1 in range(self.min_exp, self.top + 1):
            c1 = self.coeffs[e1 - self.min_exp]
            if c1.is_zero():
                continue
            hi2 = min(other.top, top - e1)
            for e2 in range(other.min_exp, hi2 + 1):
                c2 = other.coeffs[e2 - other.min_exp]
                if not c2.is_zero():
                    out[e1 + e2 - lo] = out[e1 + e2 - lo] + c1 * c2
        return TruncSeries(self.field, lo, top, out)

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by z^k."""
        return TruncSeries(self.field, self.min_exp + k, self.top + k, list(self.coeffs))

    def inv(self) -> "TruncSeries":
        """Inverse; requires the leading stored window to expose the valuation."""
        v = self.valuation()
        if v is None:
            raise ZeroDivisionError("inverse of (truncated) zero series")
        lead = self.coeff(v)
        if lead.is_zero():
            raise ZeroDivisionError("non-invertible series")
        n_terms = self.top - v
        lead_inv = lead.inv()
        # a = self / (lead z^v) has constant term 1; invert by recurrence.
        a = [self.coeff(v + i) * lead_inv for i in range(n_terms + 1)]
        b = [self.field.zero()] * (n_terms + 1)
        b[0] = self.field.one()
        for n in range(1, n_terms + 1):
            acc = self.field.zero()
            for k in range(1, n + 1):
                if not a[k].is_zero():
                    acc = acc + a[k] * b[n - k]
            b[n] = -acc
        out = TruncSeries(self.field, -v, -v + n_terms, [c * lead_inv for c in b])
        return out

    def pow_int(self, k: int) -> "TruncSeries":
        if k == 0:
            return TruncSeries.const(self.field, self.field.one(), self.top)
        base = self if k > 0 else self.inv()
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out

    def derive(self) -> "TruncSeries":
        """d/dz; valid through top - 1."""
        lo = self.min_exp - 1
        top = self.top - 1
        out = TruncSeries.zero(self.field, top, min_exp=lo)
        for e in range(self.min_exp, self.top + 1):
            c = self.coeffs[e - self.min_exp]
            if not c.is_zero() and e != 0:
                out.coeffs[e - 1 - lo] = c * Rat(e)
        return out

    def negate_variable(self) -> "TruncSeries":
        """z -> -z."""
        out = self.copy()
        for idx, e in enumerate(range(self.min_exp, self.top + 1)):
            if e % 2:
                out.coeffs[idx] = -out.coeffs[idx]
        return out

    def truncate(self, top: int) -> "TruncSeries":
        if top > self.top:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(
            self.field, self.min_exp, top, self.coeffs[: top - self.min_exp + 1]
        )

    def exp(self) -> "TruncSeries":
        """exp of a power series with zero constant term."""
        if self.min_exp < 0 and any(
            not self.coeff(e).is_zero() for e in range(self.min_exp, 0)
        ):
            raise ValueError("exp requires a power series")
        if not self.coeff(0).is_zero():
            raise ValueError("exp requires zero constant term")
        n = self.top
        f = [self.coeff(e) for e in range(n + 1)]
        g = [self.field.zero()] * (n + 1)
        g[0] = self.field.one()
        for m in range(1, n + 1):
            acc = self.field.zero()
            for k in range(1, m + 1):
                if not f[k].is_zero():
                    acc = acc + f[k] * g[m - k] * Rat(k)
            g[m] = acc * Rat(1, m)
        return TruncSeries(self.field, 0, n, g)

    def log(self) -> "TruncSeries":
        """log of a power series with constant term 1."""
        if self.min_exp < 0 and any(
            not self.coeff(e).is_zero() for e in range(self.min_exp, 0)
        ):
            raise ValueError("log requires a power series")
        if self.coeff(0) != self.field.one():
            raise ValueError("log requires constant term 1")
        n = self.top
        f = [self.coeff(e) for e in range(n + 1)]
        h = [self.field.zero()] * (n + 1)
        for m in range(1, n + 1):
            acc = f[m] * Rat(m)
            for k in range(1, m):
                if not h[k].is_zero() and not f[m - k].is_zero():
                    acc = acc - h[k] * f[m - k] * Rat(k)
            h[m] = acc * Rat(1, m)
        return TruncSeries(self.field, 0, n, h)

    # -- comparison -------------------------------------------------------------

    def equal_through(self, other: "TruncSeries", through: int | None = None) -> bool:
        hi = min(self.top, other.top)
        if through is not None:
            hi = min(hi, through)
        lo = min(self.min_exp, other.min_exp)
        return all(self._get(e) == other._get(e) for e in range(lo, hi + 1))

    def first_difference(self, other: "TruncSeries", through: int | None = None):
        hi = min(self.top, other.top)
        if through is not None:
            hi = min(hi, through)
        lo = min(self.min_exp, other.min_exp)
        for e in range(lo, hi + 1):
            if self._get(e) != other._get(e):
                return e
        return None

    def _get(self, e: int) -> CycloScalar:
        if e < self.min_exp or e > self.top:
            return self.field.zero()
        return self.coeffs[e - self.min_exp]

    def __repr__(self):
        parts = []
        for e in range(self.min_exp, min(self.top, self.min_exp + 6) + 1):
            c = self._get(e)
            if not c.is_zero():
                parts.append(f"({c})z^{e}")
        return " + ".join(parts) + f" + O(z^{self.top + 1})"


def series_ops(x: TruncSeries, y: TruncSeries | None, op: str) -> TruncSeries:
    """Dispatcher covering the basic series operations."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "inv":
        return x.inv()
    if op == "derive":
        return x.derive()
    if op == "negate-variable":
        return x.negate_variable()
    raise ValueError(f"unknown series op {op!r}")


# ---------------------------------------------------------------------------
# theta-type series and E(z, g)
# ---------------------------------------------------------------------------

def _exp_half_series(field: CycloField, top: int, sign: int) -> list:
    """Coefficients of e^{sign * z/2} as rationals in the field."""
    out = []
    c = R1
    for k in range(top + 1):
        if k:
            c = c * Rat(sign, 2 * k)
        out.append(field.from_rat(c))
    return out


@lru_cache(maxsize=None)
def theta_series_cached(p: int, s: int, top: int) -> TruncSeries:
    field = get_field(p)
    s %= p
    plus = _exp_half_series(field, top + 1, 1)
    minus = _exp_half_series(field, top + 1, -1)
    if s == 0:
        # (e^{z/2} - e^{-z/2}) / z, then log.
        arg = TruncSeries(
            field, 0, top, [plus[k + 1] - minus[k + 1] for k in range(top + 1)]
        )
    else:
        zs = field.zeta(s)
        one_minus = field.one() - zs
        inv = one_minus.inv()
        arg = TruncSeries(
            field, 0, top, [(plus[k] - zs * minus[k]) * inv for k in range(top + 1)]
        )
    return arg.log()


def theta_series(ctx: RootUnityCtx, s: int, top: int) -> TruncSeries:
    """theta_s(z): log((e^{z/2} - zeta^s e^{-z/2}) / (1 - zeta^s)) for s != 0,
    log((e^{z/2} - e^{-z/2}) / z) for s = 0.  Vanishes at z = 0."""
    return theta_series_cached(ctx.wp, s % ctx.wp, top)


@lru_cache(maxsize=None)
def theta_d1_cached(p: int, s: int, top: int) -> TruncSeries:
    return theta_series_cached(p, s, top + 1).derive()


@lru_cache(maxsize=None)
def theta_d2_cached(p: int, s: int, top: int) -> TruncSeries:
    return theta_series_cached(p, s, top + 2).derive().derive()


def capC_profile(ctx: RootUnityCtx, profile) -> CycloScalar:
    field = ctx.field
    out = field.one()
    for s in range(1, ctx.wp):
        e = profile[s]
        if e == 0:
            continue
        base = field.one() - field.zeta(s)
        if e < 0:
            base = base.inv()
            e = -e
        for _ in range(e):
            out = out * base
    return out


def capC(ctx: RootUnityCtx, g: LaurentPoly) -> CycloScalar:
    """C(g) = prod_{s != 0} (1 - zeta^s)^{<g q^{-s}>}; always invertible."""
    return capC_profile(ctx, residue_profile(g, ctx.wp))


def capE_profile(ctx: RootUnityCtx, profile, top: int) -> TruncSeries:
    field = ctx.field
    acc = TruncSeries.zero(field, top)
    for s in range(ctx.wp):
        e = profile[s]
        if e:
            acc = acc + theta_series(ctx, s, top).scale(Rat(e))
    return acc.exp().scale(capC_profile(ctx, profile))


def capE(ctx: RootUnityCtx, g: LaurentPoly, top: int) -> TruncSeries:
    """E(z, g) = C(g) exp(sum_s <g q^{-s}> theta_s(z)); constant term C(g)."""
    return capE_profile(ctx, residue_profile(g, ctx.wp), top)


@lru_cache(maxsize=None)
def kappa2_cached(p: int, s: int, top: int) -> TruncSeries:
    """Expansion of zeta^s e^{-w} / (1 - zeta^s e^{-w})^2, computed from the
    explicit geometric factors (independent of the theta route).

    Carries a w^{-2} pole exactly when s = 0.
    """
    field = get_field(p)
    s %= p
    ctx = _GeomCtx(p, field)
    if s == 0:
        g0 = zeta_geometric_factor(ctx, 0, top + 2)  # (1 - e^{-w})/w, a unit
        one = TruncSeries.const(field, field.one(), top + 2)
        numer = one - g0.shift(1)  # e^{-w}
        return (numer * g0.inv().pow_int(2)).shift(-2).truncate(top)
    f = zeta_geometric_factor(ctx, s, top + 2)  # 1 - zeta^s e^{-w}
    one = TruncSeries.const(field, field.one(), top + 2)
    return ((one - f) * f.inv().pow_int(2)).truncate(top)


@lru_cache(maxsize=None)
def kappa1_cached(p: int, s: int, top: int) -> TruncSeries:
    """Expansion of (1 + zeta^s e^{-w}) / (2 - 2 zeta^s e^{-w}); w^{-1} pole at s = 0."""
    field = get_field(p)
    s %= p
    ctx = _GeomCtx(p, field)
    two = TruncSeries.const(field, field.from_rat(2), top + 1)
    if s == 0:
        g0 = zeta_geometric_factor(ctx, 0, top + 1)
        numer = two - g0.shift(1)
        return (numer * g0.inv().scale(Rat(1, 2))).shift(-1).truncate(top)
    f = zeta_geometric_factor(ctx, s, top + 1)
    return ((two - f) * f.inv().scale(Rat(1, 2))).truncate(top)


class _GeomCtx:
    """Minimal stand-in with .wp and .field for the geometric helpers."""

    __slots__ = ("wp", "field")

    def __init__(self, wp: int, field: CycloField):
        self.wp = wp
        self.field = field


def zeta_geometric_factor(ctx: RootUnityCtx, s: int, top: int) -> TruncSeries:
    """The series (1 - zeta^s e^{-z}) for s != 0, or (1 - e^{-z})/z for s = 0.

    These feed the independently-computed multiplicative kernels; they are
    assembled directly from e^{-z}, not from theta derivatives.
    """
    field = ctx.field
    s %= ctx.wp
    # e^{-z} coefficients.
    coeffs = []
    c = R1
    for k in range(top + 2):
        if k:
            c = c * Rat(-1, k)
        coeffs.append(field.from_rat(c))
    if s == 0:
        return TruncSeries(field, 0, top, [-coeffs[k + 1] for k in range(top + 1)])
    zs = field.zeta(s)
    out = [field.from_rat(1) - zs * coeffs[0]] + [-(zs * coeffs[k]) for k in range(1, top + 1)]
    return TruncSeries(field, 0, top, out)


def geometric_power_product(ctx: RootUnityCtx, profile, top: int) -> tuple[int, TruncSeries]:
    """prod_s (1 - zeta^s e^{-z})^{profile[s]} as (power of z, unit series).

    The s = 0 factor contributes z^{profile[0]} times a unit; everything is
    computed from explicit geometric series so the product is an
    independent route from E(z, g).
    """
    field = ctx.field
    acc = TruncSeries.zero(field, top)
    scalar = field.one()
    for s in range(ctx.wp):
        e = profile[s]
        if not e:
            continue
        factor = zeta_geometric_factor(ctx, s, top)
        c0 = factor.coeff(0)  # 1 for s = 0, else 1 - zeta^s
        acc = acc + factor.scale(c0.inv()).log().scale(Rat(e))
        base = c0 if e > 0 else c0.inv()
        for _ in range(abs(e)):
            scalar = scalar * base
    return int(profile[0]), acc.exp().scale(scalar)


def check_E_identities(ctx: RootUnityCtx, g: LaurentPoly, top: int) -> CheckReport:
    """The reflection, logarithmic-derivative, and product identities for E."""
    rep = CheckReport("series")
    field = ctx.field
    profile = residue_profile(g, ctx.wp)
    E = capE(ctx, g, top + 1)
    params = {"g": repr(g), "N": top}

    # E(0, g) = C(g) and E(z, f+g) = E(z, f) E(z, g) with f = g.
    rep.add("E_at_zero_is_C", params, E.constant_term() == capC(ctx, g))
    rep.add(
        "E_additive_exponent",
        params,
        (E * E).equal_through(capE(ctx, g + g, top + 1), top),
    )

    # E(-z, g) = (-1)^{g(1) - <g>} zeta^{dg(1)} E(z, g(q^-1)).
    g1 = g.eval_at_one()
    dg1 = g.weighted_degree_sum()
    gp = int(g1) - profile[0]
    sign = field.from_rat((-1) ** (gp % 2))
    rhs = capE(ctx, g.substitute_inverse(), top + 1).scale(sign * field.zeta(int(dg1) % ctx.wp))
    rep.add("E_reflection", params, E.negate_variable().equal_through(rhs, top))

    # d/dz log E = sum_s <g q^{-s}> theta_s'.
    lhs = E.derive() * E.inv()
    acc = TruncSeries.zero(field, top)
    for s in range(ctx.wp):
        if profile[s]:
            acc = acc + theta_d1_cached(ctx.wp, s, top).scale(Rat(profile[s]))
    rep.add("E_log_derivative", params, lhs.equal_through(acc, top - 1))

    # prod_s (1 - zeta^s e^{-z})^{<g q^{-s}>} = e^{-g(1) z/2} z^{<g>} E(z, g).
    # The s = 0 factor is handled as z * ((1 - e^{-z})/z), so both sides carry
    # the same explicit power z^{<g>} and the unit parts are compared.
    zpow, unit = geometric_power_product(ctx, profile, top)
    assert zpow == profile[0]
    half = TruncSeries.zero(field, top)
    half.coeffs[1] = field.from_rat(Rat(-int(g1), 2))
    rhs2 = half.exp() * E
    rep.add("E_geometric_product", params, unit.equal_through(rhs2, top))
    return rep
