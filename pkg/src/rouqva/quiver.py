"""The decomposition data at the trivial deformation parameter: the quiver
on (node, residue) vertices with its cyclic shift action, the prescribed
loop set, the Heisenberg Gram matrix, the discrete-Fourier consistency of
the 0-sector constants, and the arrow-count cross-checks against the
exchange-operator exponents.
"""

from __future__ import annotations

from .cartan import RootUnityCtx, bracket_periodic, struct_const
from .exact import LaurentPoly, eval_zeta_power
from .qcomb import qint
from .report import CheckReport


class Quiver:
    """Vertices (i, m); arrow (i, m) -> (j, n) iff r_i a_ij + n - m = 0 mod p."""

    def __init__(self, ctx: RootUnityCtx):
        self.ctx = ctx

    def vertices(self) -> list:
        return [(i, m) for i in self.ctx.nodes() for m in range(self.ctx.wp)]

    def arrow(self, u, v) -> int:
        (i, m), (j, n) = u, v
        cond = (self.ctx.r_of(i) * self.ctx.a_entry(i, j) + n - m) % self.ctx.wp
        return 1 if cond == 0 else 0

    def act(self, s: int, u):
        (i, m) = u
        return (i, (m + s) % self.ctx.wp)

    def out_neighbors(self, u) -> list:
        return [v for v in self.vertices() if self.arrow(u, v)]


def build_quiver(ctx: RootUnityCtx) -> tuple[Quiver, CheckReport]:
    """Quiver plus validation: the arrow predicate agrees with the
    single-monomial bracket condition and the shift action is arrow
    preserving."""
    rep = CheckReport("quiver")
    quiver = Quiver(ctx)
    wp = ctx.wp
    ok = True
    detail = ""
    for (i, m) in quiver.vertices():
        for (j, n) in quiver.vertices():
            g = LaurentPoly.q_power(ctx.r_of(i) * ctx.a_entry(i, j))
            want = bracket_periodic(g.shift(n - m), wp)
            got = quiver.arrow((i, m), (j, n))
            if want != got:
                ok = False
                detail = f"bracket mismatch at {(i + 1, m)} -> {(j + 1, n)}"
            for s in range(wp):
                if got != quiver.arrow(quiver.act(s, (i, m)), quiver.act(s, (j, n))):
                    ok = False
                    detail = f"action breaks arrow {(i + 1, m)} -> {(j + 1, n)}"
    rep.add("quiver_arrows", {"vertices": len(quiver.vertices())}, ok, detail)
    # out-degree is independent of the residue index
    ok = True
    for i in ctx.nodes():
        degs = {len(quiver.out_neighbors((i, m))) for m in range(wp)}
        if len(degs) != 1:
            ok = False
    rep.add("quiver_out_degree_uniform", {}, ok)
    return quiver, rep


def build_loops(ctx: RootUnityCtx) -> tuple[list, CheckReport]:
    """The listed directed loops; every consecutive edge (cyclically) must
    be an arrow of the quiver."""
    rep = CheckReport("quiver")
    quiver = Quiver(ctx)
    wp = ctx.wp
    loops = []
    for i in ctx.nodes():
        ri = ctx.r_of(i)
        for j in ctx.nodes():
            a_ij = ctx.a_entry(i, j)
            if a_ij >= 0:
                continue
            for m in range(wp):
                cyc = []
                start = (m - ri * a_ij) % wp
                for t in range(-a_ij + 1):
                    cyc.append((i, (start - 2 * ri * t) % wp))
                cyc.append((j, m))
                loops.append(tuple(cyc))
        # the length-wp_i loop on node i
        for m in range(wp):
            cyc = [(i, (m + 2 * ri * t) % wp) for t in range(ctx.wp_i[i] - 1, -1, -1)]
            loops.append(tuple(cyc))
    ok = True
    detail = ""
    for cyc in loops:
        for u, v in zip(cyc, cyc[1:] + cyc[:1]):
            if not quiver.arrow(u, v):
                ok = False
                detail = f"missing edge {u} -> {v} in loop {cyc}"
                break
        if not ok:
            break
    rep.add("loops_closed", {"count": len(loops)}, ok, detail)
    return loops, rep


def heisenberg_gram(ctx: RootUnityCtx) -> dict:
    """Gram matrix entries on the (i, wp_i m) index pairs; zero off the
    wp_i m + wp_j n = 0 (mod p) locus."""
    wp = ctx.wp
    rl = ctx.r * ctx.ell
    field = ctx.field
    gram: dict = {}
    for i in ctx.nodes():
        for m in range(wp):
            for j in ctx.nodes():
                for n in range(wp):
                    if (ctx.wp_i[i] * m + ctx.wp_i[j] * n) % wp != 0:
                        gram[(i, m, j, n)] = field.zero()
                        continue
                    v1 = eval_zeta_power(
                        qint(ctx.a_entry(i, j), ctx.r_of(i)), ctx.wp_i[i] * m, field
                    )
                    v2 = eval_zeta_power(
                        qint(rl // ctx.r_of(j), ctx.r_of(j)), ctx.wp_i[j] * n, field
                    )
                    scale = field.zeta(ctx.wp_i[i] * m * rl)
                    gram[(i, m, j, n)] = field.scale(v1 * v2 * scale, wp)
    return gram


def check_gram_symmetry(ctx: RootUnityCtx) -> CheckReport:
    rep = CheckReport("quiver")
    gram = heisenberg_gram(ctx)
    ok = all(
        gram[(i, m, j, n)] == gram[(j, n, i, m)]
        for (i, m, j, n) in gram
    )
    rep.add("gram_symmetric", {"entries": len(gram)}, ok)
    zero_ok = all(
        gram[(i, m, j, n)].is_zero()
        for (i, m, j, n) in gram
        if (ctx.wp_i[i] * m + ctx.wp_i[j] * n) % ctx.wp != 0
    )
    rep.add("gram_zero_off_locus", {}, zero_ok)
    return rep


def check_dft(ctx: RootUnityCtx) -> CheckReport:
    """Discrete Fourier transform of the 0-sector constants diagonalizes to
    the Gram entries, and the averaged-vs-differenced cross sums vanish."""
    rep = CheckReport("quiver")
    wp = ctx.wp
    field = ctx.field
    gram = heisenberg_gram(ctx)
    ok = True
    detail = ""
    for i in ctx.nodes():
        for j in ctx.nodes():
            # cache A00 profile over the difference class
            a_of = [struct_const(ctx, "A00", i, j, 0, d) for d in range(wp)]
            for m in range(wp):
                for n in range(wp):
                    acc = field.zero()
                    for s in range(wp):
                        for t in range(wp):
                            a = a_of[(t - s) % wp]
                            if a:
                                phase = field.zeta(
                                    ctx.wp_i[i] * m * s + ctx.wp_i[j] * n * t
                                )
                                acc = acc + field.scale(phase, a)
                    if acc != gram[(i, m, j, n)]:
                        ok = False
                        detail = f"mismatch at ({i+1},{j+1},m={m},n={n})"
    rep.add("dft_diagonalizes", {"pairs": ctx.cartan.rank ** 2 * wp * wp}, ok, detail)

    # the mirrored double sum gives the same diagonalization
    ok2 = True
    for i in ctx.nodes():
        for j in ctx.nodes():
            a_rev = [struct_const(ctx, "A00", j, i, 0, d) for d in range(wp)]
            for m in range(wp):
                for n in range(wp):
                    acc = field.zero()
                    for s in range(wp):
                        for t in range(wp):
                            a = a_rev[(s - t) % wp]
                            if a:
                                phase = field.zeta(
                                    ctx.wp_i[i] * m * s + ctx.wp_i[j] * n * t
                                )
                                acc = acc + field.scale(phase, a)
                    if acc != gram[(i, m, j, n)]:
                        ok2 = False
    rep.add("dft_mirror", {}, ok2)

    # averaged generator against the differenced one: both weighted sums vanish
    ok3 = True
    detail3 = ""
    for i in ctx.nodes():
        for j in ctx.nodes():
            a_of = [struct_const(ctx, "A00", i, j, 0, d) for d in range(wp)]
            a_rev = [struct_const(ctx, "A00", j, i, 0, d) for d in range(wp)]
            rj = ctx.r_of(j)
            for m in range(wp):
                for n in range(wp):
                    acc1 = field.zero()
                    acc2 = field.zero()
                    for s in range(wp):
                        phase = field.zeta(ctx.wp_i[i] * m * s)
                        d1 = a_of[(n - rj - s) % wp] - a_of[(n + rj - s) % wp]
                        d2 = a_rev[(s - n + rj) % wp] - a_rev[(s - n - rj) % wp]
                        if d1:
                            acc1 = acc1 + field.scale(phase, d1)
                        if d2:
                            acc2 = acc2 + field.scale(phase, d2)
                    if not acc1.is_zero() or not acc2.is_zero():
                        ok3 = False
                        detail3 = f"nonvanishing cross sum at ({i+1},{j+1},m={m},n={n})"
    rep.add("dft_cross_vanishing", {}, ok3, detail3)
    return rep


def check_arrow_counts(ctx: RootUnityCtx) -> CheckReport:
    """Arrow-count combinations against the bracket constants, and the
    quiver exchange-operator exponents against the generator-level ones.

    The shift '2l .' on vertices acts by 2 r ell (the construction is
    applied at level r ell), validated here by matching the independently
    computed bracket constants.
    """
    rep = CheckReport("quiver")
    quiver = Quiver(ctx)
    wp = ctx.wp
    rl = ctx.r * ctx.ell
    ok_a22 = True
    ok_qv3 = True
    ok_four = True
    ok_s = True
    detail = ""

    def arrow(i, m, j, n):
        return quiver.arrow((i, m % wp), (j, n % wp))

    for i in ctx.nodes():
        ri = ctx.r_of(i)
        for j in ctx.nodes():
            rj = ctx.r_of(j)
            a = ctx.a_entry(i, j)
            h = LaurentPoly.q_power(ri * a) - LaurentPoly.q_power(-ri * a)
            g_minus = h * (LaurentPoly.q_power(-2 * rl) - LaurentPoly.const(1))
            g_plus = h * (LaurentPoly.const(1) - LaurentPoly.q_power(2 * rl))
            g_qv3 = h * LaurentPoly.q_power(-rl)
            for m in range(wp):
                for n in range(wp):
                    # |i -> j| = A22
                    if arrow(i, m, j, n) != struct_const(ctx, "A22", i, j, m, n):
                        ok_a22 = False
                        detail = f"A22 mismatch at ({i+1},{m})->({j+1},{n})"
                    # (Qv3)-type combination: |l.i -> j| - |j -> l.i|
                    lhs = arrow(i, m + rl, j, n) - arrow(j, n, i, m + rl)
                    rhs = bracket_periodic(g_qv3.shift(n - m), wp)
                    if lhs != rhs:
                        ok_qv3 = False
                        detail = f"Qv3 combination at ({i+1},{j+1},{m},{n})"
                    # (Qv1)/(Qv2) fourfold signed counts
                    four_minus = (
                        arrow(i, m + 2 * rl, j, n)
                        - arrow(j, n, i, m + 2 * rl)
                        + arrow(j, n, i, m)
                        - arrow(i, m, j, n)
                    )
                    four_plus = (
                        arrow(j, n + 2 * rl, i, m)
                        - arrow(i, m, j, n + 2 * rl)
                        + arrow(i, m, j, n)
                        - arrow(j, n, i, m)
                    )
                    if four_minus != bracket_periodic(g_minus.shift(n - m), wp):
                        ok_four = False
                        detail = f"fourfold(-) at ({i+1},{j+1},{m},{n})"
                    if four_plus != bracket_periodic(g_plus.shift(n - m), wp):
                        ok_four = False
                        detail = f"fourfold(+) at ({i+1},{j+1},{m},{n})"
                    # exchange-operator exponents
                    if not _s_exponents_match(ctx, quiver, i, j, m, n, rl):
                        ok_s = False
                        detail = f"S exponents at ({i+1},{j+1},{m},{n})"
    pairs = ctx.cartan.rank ** 2 * wp * wp
    rep.add("arrow_equals_A22", {"pairs": pairs}, ok_a22, detail if not ok_a22 else "")
    rep.add("arrow_qv3_combination", {"pairs": pairs}, ok_qv3, detail if not ok_qv3 else "")
    rep.add("arrow_fourfold_counts", {"pairs": pairs}, ok_four, detail if not ok_four else "")
    rep.add("quiver_s_exponents", {"pairs": pairs}, ok_s, detail if not ok_s else "")
    return rep


def _s_exponents_match(ctx, quiver, i, j, m, n, rl) -> bool:
    """Quiver exchange exponents vs generator-level constants.

    0-sector images are compared through the differenced combination (the
    fourfold signed structure constants); diagonal sectors directly.
    """
    wp = ctx.wp
    ri, rj = ctx.r_of(i), ctx.r_of(j)

    def arrow(ii, mm, jj, nn):
        return quiver.arrow((ii, mm % wp), (jj, nn % wp))

    def a00(mm, nn):
        return struct_const(ctx, "A00", i, j, mm % wp, nn % wp)

    def a00r(nn, mm):
        return struct_const(ctx, "A00", j, i, nn % wp, mm % wp)

    def fourfold(table, mm, nn, r_first, r_second):
        return (
            table(mm - r_first, nn - r_second)
            - table(mm - r_first, nn + r_second)
            - table(mm + r_first, nn - r_second)
            + table(mm + r_first, nn + r_second)
        )

    # (0,0): S_Q constant vs difference of fourfold constants
    s_q = (
        arrow(i, m + 2 * rl, j, n)
        - arrow(j, n, i, m + 2 * rl)
        - arrow(j, n + 2 * rl, i, m)
        + arrow(i, m, j, n + 2 * rl)
        - 2 * arrow(i, m, j, n)
        + 2 * arrow(j, n, i, m)
    )
    gen = fourfold(a00, m, n, ri, rj) - fourfold(a00r, n, m, rj, ri)
    if s_q != gen:
        return False

    # (0,1): coefficient with the 1-sector in the second slot
    s_q = (
        arrow(i, m, j, n + 2 * rl)
        - arrow(j, n + 2 * rl, i, m)
        - arrow(j, n, i, m + 2 * rl)
        + arrow(i, m + 2 * rl, j, n)
        - 2 * arrow(i, m, j, n)
        + 2 * arrow(j, n, i, m)
    )

    def a10(mm, nn):
        return struct_const(ctx, "A10", i, j, mm % wp, nn % wp)

    def a01r(nn, mm):
        return struct_const(ctx, "A01", j, i, nn % wp, mm % wp)

    gen = (
        (a10(m, n - rj) - a10(m, n + rj))
        - (a01r(n - rj, m) - a01r(n + rj, m))
    )
    if s_q != gen:
        return False

    # (0,2)
    s_q = (
        arrow(i, m, j, n + rl)
        - arrow(j, n + rl, i, m)
        + arrow(j, n, i, m + rl)
        - arrow(i, m + rl, j, n)
    )

    def a20(mm, nn):
        return struct_const(ctx, "A20", i, j, mm % wp, nn % wp)

    def a02r(nn, mm):
        return struct_const(ctx, "A02", j, i, nn % wp, mm % wp)

    gen = (
        (a20(m, n - rj) - a20(m, n + rj))
        - (a02r(n - rj, m) - a02r(n + rj, m))
    )
    if s_q != gen:
        return False

    # (1,1): (-z) and z exponents
    sq_neg = (
        arrow(i, m, j, n + 2 * rl)
        + arrow(i, m + 2 * rl, j, n)
        - 2 * arrow(i, m, j, n)
    )
    sq_pos = (
        arrow(j, n, i, m + 2 * rl)
        + arrow(j, n + 2 * rl, i, m)
        - 2 * arrow(j, n, i, m)
    )
    if sq_neg != -struct_const(ctx, "A11", i, j, m, n):
        return False
    if sq_pos != -struct_const(ctx, "A11", j, i, n, m):
        return False

    # (1,2)-type
    sq_neg = arrow(i, m + rl, j, n) - arrow(i, m, j, n + rl)
    sq_pos = arrow(j, n + rl, i, m) - arrow(j, n, i, m + rl)
    if sq_neg != -struct_const(ctx, "A12", i, j, m, n):
        return False
    if sq_pos != struct_const(ctx, "A21", j, i, n, m):
        return False

    # (2,2)
    if arrow(i, m, j, n) != struct_const(ctx, "A22", i, j, m, n):
        return False
    if arrow(j, n, i, m) != struct_const(ctx, "A22", j, i, n, m):
        return False
    return True
