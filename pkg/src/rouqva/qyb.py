"""The exchange operator S(z) on the span of generators: images, unitarity,
the Yang-Baxter equation on triples, shift equivariance, and triviality on
the averaged Cartan-type combinations.

Basis tags: ("v",) is the vacuum; (a, eps, i, m) tags the generator of
sector a in {0, 1, 2} with sign eps (0 for the a = 0 sector), node i, and
index m mod p.  S never mutates a generator: each image is the original
pair (coefficient 1, or a scalar series in the diagonal sectors) plus at
most one vacuum-dropped term, which is what the composition bookkeeping
below exploits.
"""

from __future__ import annotations

import random
from collections import Counter

from .cartan import RootUnityCtx, struct_const
from .rational import R1, Rat
from .report import CheckReport
from .series import TruncSeries
from .tau import TauTuple, canonical_tau, identity_tau

VAC = ("v",)


def basis(ctx: RootUnityCtx) -> list:
    out = [VAC]
    for i in ctx.nodes():
        for m in range(ctx.wp):
            out.append((0, 0, i, m))
            for eps in (1, -1):
                out.append((1, eps, i, m))
                out.append((2, eps, i, m))
    return out


def _is_vac(g) -> bool:
    return g == VAC


class SCache:
    """Coefficient series of S(z) per ordered basis pair, built lazily."""

    def __init__(self, ctx: RootUnityCtx, tau: TauTuple):
        self.ctx = ctx
        self.tau = tau
        self.top = tau.top
        self._series: dict = {}

    # -- symbolic image -----------------------------------------------------

    def apply_sym(self, pair):
        """[(image pair, coefficient key or None for literal 1)]."""
        g1, g2 = pair
        if _is_vac(g1) or _is_vac(g2):
            return [(pair, None)]
        a1 = g1[0]
        a2 = g2[0]
        if a1 == 0 and a2 == 0:
            return [(pair, None), ((VAC, VAC), ("d", pair))]
        if a1 == 0:
            return [(pair, None), ((VAC, g2), ("d", pair))]
        if a2 == 0:
            return [(pair, None), ((g1, VAC), ("d", pair))]
        return [(pair, ("c", pair))]

    # -- numeric coefficients -----------------------------------------------

    def series(self, key) -> TruncSeries:
        if key in self._series:
            return self._series[key]
        kind, pair = key
        ser = self._drop(pair) if kind == "d" else self._diag(pair)
        self._series[key] = ser
        return ser

    def _drop(self, pair) -> TruncSeries:
        """Coefficient of the vacuum-dropped term for a 0-involving pair."""
        ctx, t = self.ctx, self.tau
        field = ctx.field
        (g1, g2) = pair
        j, n = g1[2], g1[3]
        i, m = g2[2], g2[3]
        top = self.top
        if g1[0] == 0 and g2[0] == 0:
            a_diff = struct_const(ctx, "A00", i, j, m, n) - struct_const(
                ctx, "A00", j, i, n, m
            )
            out = TruncSeries.monomial(field, -2, top, field.from_rat(a_diff))
            out = out + t.entry(0, 0, i, j, m, n).negate_variable()
            out = out - t.entry(0, 0, j, i, n, m)
            return out
        if g1[0] == 0:
            a, eps = g2[0], g2[1]
            a_diff = struct_const(ctx, f"A{a}0", i, j, m, n) - struct_const(
                ctx, f"A0{a}", j, i, n, m
            )
            out = TruncSeries.monomial(field, -1, top, field.from_rat(a_diff))
            out = out - t.entry(a, 0, i, j, m, n).negate_variable()
            out = out - t.entry(0, a, j, i, n, m)
            return out.scale(Rat(eps)) if eps == -1 else out
        a, eps = g1[0], g1[1]
        a_diff = struct_const(ctx, f"A0{a}", i, j, m, n) - struct_const(
            ctx, f"A{a}0", j, i, n, m
        )
        out = TruncSeries.monomial(field, -1, top, field.from_rat(-a_diff))
        out = out + t.entry(0, a, i, j, m, n).negate_variable()
        out = out + t.entry(a, 0, j, i, n, m)
        return out.scale(Rat(eps)) if eps == -1 else out

    def _diag(self, pair) -> TruncSeries:
        """Scalar series multiplying a diagonal-sector image."""
        ctx, t = self.ctx, self.tau
        (g1, g2) = pair
        b, e2, j, n = g1
        a, e1, i, m = g2
        e = e1 * e2
        a_ab = struct_const(ctx, f"A{a}{b}", i, j, m, n)
        a_ba = struct_const(ctx, f"A{b}{a}", j, i, n, m)
        ser = t.entry(a, b, i, j, m, n).negate_variable().pow_int(-e)
        ser = ser * t.entry(b, a, j, i, n, m).pow_int(e)
        power = -e * a_ab + e * a_ba
        ser = ser.shift(power)
        sign = 1
        if (-e * a_ab) % 2:
            sign = -sign  # the (-z)^k factor contributes (-1)^k
        if a == 2 and b == 2:
            sign = -sign
        return ser if sign == 1 else ser.neg()


def s_apply(ctx: RootUnityCtx, t: TauTuple, pair, top: int | None = None) -> dict:
    """Image of a basis pair under S(z) as {pair: coefficient series}."""
    cache = SCache(ctx, t)
    out: dict = {}
    one = TruncSeries.const(ctx.field, ctx.field.one(), t.top)
    for npair, key in cache.apply_sym(pair):
        ser = one if key is None else cache.series(key)
        if top is not None:
            ser = ser.truncate(min(top, ser.top))
        if not ser.is_zero_through():
            out[npair] = ser
    return out


def _tensor_add(acc: dict, pair, ser: TruncSeries) -> None:
    if pair in acc:
        acc[pair] = acc[pair] + ser
    else:
        acc[pair] = ser


def _tensor_is_identity(acc: dict, pair, through: int) -> tuple[bool, str]:
    field = next(iter(acc.values())).field if acc else None
    for p, ser in acc.items():
        if p == pair:
            one = TruncSeries.const(ser.field, ser.field.one(), ser.top)
            if not ser.equal_through(one, through):
                return False, f"diagonal coefficient differs at z^{ser.first_difference(one, through)}"
        elif not ser.is_zero_through(through):
            return False, f"spurious term {p}"
    if pair not in acc:
        return False, "missing diagonal term"
    return True, ""


def check_unitarity(ctx: RootUnityCtx, t: TauTuple, top: int,
                    cache: SCache | None = None) -> CheckReport:
    """S(z) S21(-z) = 1 on every ordered basis pair, exactly at truncation."""
    rep = CheckReport("qyb")
    cache = cache or SCache(ctx, t)
    one = TruncSeries.const(ctx.field, ctx.field.one(), t.top)
    elems = basis(ctx)
    ok = True
    detail = ""
    checked = 0
    for u in elems:
        for v in elems:
            # S21(-z)(u (x) v) = flip . S(-z) . flip
            mid: dict = {}
            for npair, key in cache.apply_sym((v, u)):
                ser = one if key is None else cache.series(key).negate_variable()
                _tensor_add(mid, (npair[1], npair[0]), ser)
            out: dict = {}
            for mpair, mser in mid.items():
                for npair, key in cache.apply_sym(mpair):
                    ser = mser if key is None else cache.series(key) * mser
                    _tensor_add(out, npair, ser)
            good, why = _tensor_is_identity(out, (u, v), top)
            checked += 1
            if not good:
                ok = False
                detail = f"pair ({u}, {v}): {why}"
                break
        if not ok:
            break
    rep.add("unitarity", {"pairs": checked}, ok, detail)
    return rep


def check_shift_equivariance(ctx: RootUnityCtx, t: TauTuple, top: int,
                             cache: SCache | None = None) -> CheckReport:
    """The image of the index-shifted pair equals the index-shifted image."""
    rep = CheckReport("qyb")
    cache = cache or SCache(ctx, t)
    wp = ctx.wp

    def shift_tag(g, s):
        if _is_vac(g):
            return g
        return (g[0], g[1], g[2], (g[3] + s) % wp)

    elems = [g for g in basis(ctx) if not _is_vac(g)]
    ok = True
    detail = ""
    one = TruncSeries.const(ctx.field, ctx.field.one(), t.top)
    for u in elems:
        for v in elems:
            base = {p: (one if k is None else cache.series(k))
                    for p, k in cache.apply_sym((u, v))}
            for s in range(1, wp):
                pair_s = (shift_tag(u, s), shift_tag(v, s))
                moved = {p: (one if k is None else cache.series(k))
                         for p, k in cache.apply_sym(pair_s)}
                expect = {(shift_tag(p[0], s), shift_tag(p[1], s)): ser
                          for p, ser in base.items()}
                if set(moved) != set(expect) or not all(
                    moved[p].equal_through(expect[p], top) for p in moved
                ):
                    ok = False
                    detail = f"shift {s} fails on pair ({u}, {v})"
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("shift_equivariance", {"p": wp}, ok, detail)
    return rep


def h_combination(ctx: RootUnityCtx, i: int, m: int) -> list:
    """The averaged 0-sector combination: sum_s zeta^{wp_i m s} xi0_{i,s}."""
    wp = ctx.wp
    return [((0, 0, i, s), ctx.field.zeta(ctx.wp_i[i] * m * s)) for s in range(wp)]


def xi_tilde_combination(ctx: RootUnityCtx, i: int, m: int) -> list:
    wp = ctx.wp
    one = ctx.field.one()
    return [((0, 0, i, (m - ctx.r_of(i)) % wp), one),
            ((0, 0, i, (m + ctx.r_of(i)) % wp), -one)]


def check_h_trivial(ctx: RootUnityCtx, top: int) -> CheckReport:
    """At tau = identity, S(z) fixes (averaged combination) (x) u for every
    generator u.  Any failing tuple is reported verbatim."""
    rep = CheckReport("qyb")
    t = identity_tau(ctx, top + 4)
    cache = SCache(ctx, t)
    one = TruncSeries.const(ctx.field, ctx.field.one(), t.top)
    elems = basis(ctx)
    for i in ctx.nodes():
        ok = True
        detail = ""
        for m in range(ctx.wp):
            combo = h_combination(ctx, i, m)
            for u in elems:
                acc: dict = {}
                for tag, scalar in combo:
                    for npair, key in cache.apply_sym((tag, u)):
                        ser = one if key is None else cache.series(key)
                        _tensor_add(acc, npair, ser.scale(scalar))
                expect = {(tag, u): scalar for tag, scalar in combo}
                good = True
                for p, ser in acc.items():
                    if p in expect:
                        target = TruncSeries.const(ctx.field, expect[p], ser.top)
                        if not ser.equal_through(target, top):
                            good = False
                    elif not ser.is_zero_through(top):
                        good = False
                if not good:
                    ok = False
                    detail = f"fails at (i={i+1}, m={m}, u={u})"
                    break
            if not ok:
                break
        rep.add("h_trivial", {"i": i + 1}, ok, detail)
    return rep


def check_xi_tilde_bracket(ctx: RootUnityCtx) -> CheckReport:
    """The fourfold 0-sector constant combination for the differenced
    generators equals the displayed bracket value, for all (i, j, m, n)."""
    from .cartan import bracket_periodic
    from .exact import LaurentPoly

    rep = CheckReport("qyb")
    wp = ctx.wp
    rl = ctx.r * ctx.ell
    ok = True
    detail = ""
    for i in ctx.nodes():
        ri = ctx.r_of(i)
        for j in ctx.nodes():
            rj = ctx.r_of(j)
            a = ctx.a_entry(i, j)
            g = (LaurentPoly.q_power(ri * a) - LaurentPoly.q_power(-ri * a)) * (
                LaurentPoly.q_power(-2 * rl) - LaurentPoly.const(1)
            )
            for m in range(wp):
                for n in range(wp):
                    four = (
                        struct_const(ctx, "A00", i, j, m - ri, n - rj)
                        - struct_const(ctx, "A00", i, j, m - ri, n + rj)
                        - struct_const(ctx, "A00", i, j, m + ri, n - rj)
                        + struct_const(ctx, "A00", i, j, m + ri, n + rj)
                    )
                    expect = bracket_periodic(g.shift(n - m), wp)
                    if four != expect:
                        ok = False
                        detail = f"mismatch at ({i+1},{j+1},{m},{n})"
    rep.add("xi_tilde_fourfold", {"pairs": ctx.cartan.rank ** 2 * wp * wp}, ok, detail)
    return rep


# ---------------------------------------------------------------------------
# Yang-Baxter on triples
# ---------------------------------------------------------------------------

_LHS_ORDER = (((1, 2), "z2"), ((0, 2), "z13"), ((0, 1), "z1"))
_RHS_ORDER = (((0, 1), "z1"), ((0, 2), "z13"), ((1, 2), "z2"))


def _compose_side(cache: SCache, triple, order) -> dict:
    """dict final-triple -> Counter of sorted factor tuples ((var, key), ...)."""
    state = {triple: Counter({(): 1})}
    for slots, var in order:
        nxt: dict = {}
        for trip, counter in state.items():
            pair = (trip[slots[0]], trip[slots[1]])
            images = cache.apply_sym(pair)
            for factors, count in counter.items():
                for npair, key in images:
                    ntrip = list(trip)
                    ntrip[slots[0]], ntrip[slots[1]] = npair
                    ntrip = tuple(ntrip)
                    nfactors = factors if key is None else tuple(
                        sorted(factors + ((var, key),))
                    )
                    nxt.setdefault(ntrip, Counter())[nfactors] += count
        state = nxt
    return state


def _binom_gen(k: int, j: int):
    out = R1
    for t in range(j):
        out = out * Rat(k - t, t + 1)
    return out


class _Expander:
    """Numeric bivariate expansion of factor products, (z1+z2)^k expanded in
    nonnegative powers of z2 (the iota_{z1,z2} convention)."""

    def __init__(self, cache: SCache, e1_hi: int, e2_hi: int, pole: int = 6):
        self.cache = cache
        self.pole = pole
        self.e1 = (-2 * pole - e2_hi - pole, e1_hi)
        self.e2 = (-pole, e2_hi)
        self.j_max = e2_hi + pole
        self.need_top = e1_hi + e2_hi + 2 * pole
        self._bi: dict = {}

    def factor_bivariate(self, var: str, key) -> dict:
        ck = (var, key)
        if ck in self._bi:
            return self._bi[ck]
        ser = self.cache.series(key)
        if ser.min_exp < -self.pole or ser.top < self.need_top:
            raise ValueError("series window too small for the expansion")
        out: dict = {}
        if var == "z1":
            for e in range(ser.min_exp, self.e1[1] + 1):
                c = ser.coeff(e)
                if not c.is_zero():
                    out[(e, 0)] = c
        elif var == "z2":
            for e in range(ser.min_exp, self.e2[1] + 1):
                c = ser.coeff(e)
                if not c.is_zero():
                    out[(0, e)] = c
        else:  # z13
            for k in range(ser.min_exp, ser.top + 1):
                c = ser.coeff(k)
                if c.is_zero():
                    continue
                j_hi = k if k >= 0 else self.j_max
                for j in range(0, min(j_hi, self.j_max) + 1):
                    e1 = k - j
                    if e1 > self.e1[1] or e1 < self.e1[0]:
                        continue
                    coef = _binom_gen(k, j)
                    if coef != 0:
                        cell = (e1, j)
                        prev = out.get(cell)
                        add = c * coef
                        out[cell] = add if prev is None else prev + add
        self._bi[ck] = out
        return out

    def term_value(self, factors) -> dict:
        field = self.cache.ctx.field
        acc = {(0, 0): field.one()}
        for var, key in factors:
            fb = self.factor_bivariate(var, key)
            nxt: dict = {}
            for (a1, a2), c1 in acc.items():
                for (b1, b2), c2 in fb.items():
                    e1, e2 = a1 + b1, a2 + b2
                    if self.e1[0] <= e1 <= self.e1[1] and self.e2[0] <= e2 <= self.e2[1]:
                        cell = (e1, e2)
                        prod = c1 * c2
                        prev = nxt.get(cell)
                        nxt[cell] = prod if prev is None else prev + prod
            acc = nxt
        return acc

    def side_value(self, counter: Counter) -> dict:
        total: dict = {}
        for factors, count in counter.items():
            val = self.term_value(factors)
            for cell, c in val.items():
                scaled = c * Rat(count)
                prev = total.get(cell)
                total[cell] = scaled if prev is None else prev + scaled
        return {cell: c for cell, c in total.items() if not c.is_zero()}


def default_triple_sample(ctx: RootUnityCtx, count: int, seed: int = 0) -> list:
    elems = basis(ctx)
    rng = random.Random(seed)
    return [tuple(rng.choice(elems) for _ in range(3)) for _ in range(count)]


def check_ybe(
    ctx: RootUnityCtx,
    t: TauTuple,
    top: int,
    sample: list | None = None,
    expand_count: int = 24,
    expand_window: int = 6,
    cache: SCache | None = None,
) -> CheckReport:
    """S12(z1) S13(z1+z2) S23(z2) = S23 S13 S12 on basis triples.

    Each side is a sum of (final triple, product of univariate coefficient
    series in z1, z1+z2, z2).  Identical factor multisets expand to
    identical bivariate series, so those triples are decided symbolically;
    any difference falls back to the windowed numeric expansion.  A
    deterministic subsample is always expanded numerically as well, which
    keeps the series machinery itself under test.
    """
    rep = CheckReport("qyb")
    cache = cache or SCache(ctx, t)
    triples = sample if sample is not None else _all_triples(ctx)
    expander = _Expander(cache, expand_window, expand_window)
    if t.top < expander.need_top:
        raise ValueError(
            f"tau truncation {t.top} too small; need {expander.need_top}"
        )
    ok = True
    detail = ""
    expanded = 0
    step = max(1, len(triples) // max(expand_count, 1))
    for idx, triple in enumerate(triples):
        lhs = _compose_side(cache, triple, _LHS_ORDER)
        rhs = _compose_side(cache, triple, _RHS_ORDER)
        symbolic_equal = lhs == rhs
        force = idx % step == 0
        if symbolic_equal and not force:
            continue
        keys = set(lhs) | set(rhs)
        for trip in keys:
            lv = expander.side_value(lhs.get(trip, Counter()))
            rv = expander.side_value(rhs.get(trip, Counter()))
            if lv != rv:
                ok = False
                cells = sorted(set(lv) | set(rv))
                bad = next(c for c in cells if lv.get(c) != rv.get(c))
                detail = f"triple {triple}, term {trip}, first differing cell z1^{bad[0]} z2^{bad[1]}"
                break
        expanded += 1
        if not ok:
            break
    rep.add(
        "yang_baxter",
        {"triples": len(triples), "expanded": expanded},
        ok,
        detail,
    )
    return rep


def _all_triples(ctx: RootUnityCtx) -> list:
    elems = basis(ctx)
    return [(u, v, w) for u in elems for v in elems for w in elems]


def build_ybe_tau(ctx: RootUnityCtx, expand_window: int = 6, pole: int = 6) -> TauTuple:
    """Canonical tuple with enough guard terms for the YBE expansion."""
    return canonical_tau(ctx, 2 * expand_window + 2 * pole + 2 * pole)
