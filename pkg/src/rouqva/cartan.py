"""Finite-type Cartan data, the root-of-unity context, the bracket
functionals on Z[q, q^-1], and the integer structure-constant tables.

Cartan matrices are stored as literal tables in Bourbaki node numbering;
the symmetrizing identity r_i a_ij = r_j a_ji is revalidated at load time
so a transcription error cannot slip through.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exact import CycloField, LaurentPoly, eval_zeta_power, get_field
from .qcomb import qint
from .report import CheckReport


# ---------------------------------------------------------------------------
# Bracket functionals
# ---------------------------------------------------------------------------

def bracket_periodic(p: LaurentPoly, wp: int) -> int:
    """<g>_wp: sum of the coefficients at exponents divisible by wp."""
    if not p.has_integer_coeffs():
        raise ValueError("bracket requires integer coefficients")
    total = 0
    for e, c in p.terms.items():
        if e % wp == 0:
            total += int(c)
    return total


def bracket_constant(p: LaurentPoly) -> int:
    """<g>_inf: the coefficient at exponent zero."""
    if not p.has_integer_coeffs():
        raise ValueError("bracket requires integer coefficients")
    return int(p.coeff(0))


def bracket(p: LaurentPoly, mode: str, wp: int | None = None) -> int:
    if mode == "periodic":
        if wp is None:
            raise ValueError("periodic mode requires wp")
        return bracket_periodic(p, wp)
    if mode == "constant-term":
        return bracket_constant(p)
    raise ValueError(f"unknown bracket mode {mode!r}")


def residue_profile(p: LaurentPoly, wp: int) -> tuple[int, ...]:
    """profile[s] = <g q^{-s}>_wp = sum of coefficients at exponents = s mod wp."""
    if not p.has_integer_coeffs():
        raise ValueError("profile requires integer coefficients")
    out = [0] * wp
    for e, c in p.terms.items():
        out[e % wp] += int(c)
    return tuple(out)


# ---------------------------------------------------------------------------
# Cartan data
# ---------------------------------------------------------------------------

def _chain(n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = -1
        a[i + 1][i] = -1
    return a


def _cartan_matrix(label: str, n: int) -> tuple[list[list[int]], int, list[int]]:
    """Returns (a_ij, r, r_i) in Bourbaki numbering (0-based internally)."""
    if label == "A" and n >= 1:
        return _chain(n), 1, [1] * n
    if label == "D" and n >= 3:
        a = _chain(n - 1)
        for row in a:
            row.append(0)
        a.append([0] * (n - 1) + [2])
        a[n - 3][n - 1] = -1
        a[n - 1][n - 3] = -1
        a[n - 2][n - 1] = 0
        a[n - 1][n - 2] = 0
        return a, 1, [1] * n
    if label == "E" and n in (6, 7, 8):
        # Bourbaki: node 2 hangs off node 4; nodes 1,3,4,...,n form the chain.
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        chain = [1, 3, 4] + list(range(5, n + 1))
        for u, v in zip(chain, chain[1:]):
            a[u - 1][v - 1] = -1
            a[v - 1][u - 1] = -1
        a[2 - 1][4 - 1] = -1
        a[4 - 1][2 - 1] = -1
        return a, 1, [1] * n
    if label == "B" and n >= 2:
        a = _chain(n)
        a[n - 1][n - 2] = -2  # short node n against long node n-1
        return a, 2, [2] * (n - 1) + [1]
    if label == "C" and n >= 2:
        a = _chain(n)
        a[n - 2][n - 1] = -2
        return a, 2, [1] * (n - 1) + [2]
    if label == "F" and n == 4:
        a = _chain(4)
        a[2][1] = -2  # a_32 = -2: node 3 short, node 2 long
        return a, 2, [2, 2, 1, 1]
    if label == "G" and n == 2:
        return [[2, -3], [-1, 2]], 3, [1, 3]
    raise ValueError(f"unknown finite type {label}{n}")


@dataclass(frozen=True)
class CartanData:
    label: str
    rank: int
    a: tuple  # tuple of tuples of ints
    r: int
    r_i: tuple

    @staticmethod
    def build(label: str, rank: int) -> "CartanData":
        a, r, r_i = _cartan_matrix(label, rank)
        data = CartanData(label, rank, tuple(tuple(row) for row in a), r, tuple(r_i))
        data.validate()
        return data

    def validate(self) -> None:
        n = self.rank
        for i in range(n):
            if self.a[i][i] != 2:
                raise ValueError("diagonal Cartan entry must be 2")
            for j in range(n):
                if i != j and self.a[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if self.r_i[i] * self.a[i][j] != self.r_i[j] * self.a[j][i]:
                    raise ValueError(f"symmetrizer failure at ({i},{j})")
        if max(self.r_i) != self.r or min(self.r_i) < 1:
            raise ValueError("inconsistent r_i data")

    def nodes(self) -> range:
        return range(self.rank)


@dataclass(frozen=True)
class RootUnityCtx:
    """Cartan data together with (wp, ell) and the derived root-of-unity data."""

    cartan: CartanData
    wp: int
    ell: int
    wp_i: tuple
    field: CycloField

    @property
    def r(self) -> int:
        return self.cartan.r

    def r_of(self, i: int) -> int:
        return self.cartan.r_i[i]

    def a_entry(self, i: int, j: int) -> int:
        return self.cartan.a[i][j]

    def nodes(self) -> range:
        return self.cartan.nodes()

    def key(self) -> tuple:
        return (self.cartan.label, self.cartan.rank, self.wp, self.ell)

    def describe(self) -> str:
        return f"{self.cartan.label}{self.cartan.rank} p={self.wp} level={self.ell}"


def build_context(label: str, rank: int, wp: int, ell: int) -> RootUnityCtx:
    """Validated context; ell is normalized into [0, wp)."""
    cartan = CartanData.build(label, rank)
    if wp <= 2 * cartan.r:
        raise ValueError(f"need wp > 2r = {2 * cartan.r}, got {wp}")
    ell = ell % wp
    from math import gcd

    wp_i = tuple(wp // gcd(wp, 2 * ri) for ri in cartan.r_i)
    ctx = RootUnityCtx(cartan, wp, ell, wp_i, get_field(wp))
    # zeta_i^(2 wp_i) = 1 with wp_i minimal: sanity of the derived data.
    for i in cartan.nodes():
        ri = cartan.r_i[i]
        if (2 * ri * wp_i[i]) % wp != 0:
            raise AssertionError("wp_i fails zeta_i^(2 wp_i) = 1")
        for m in range(1, wp_i[i]):
            if (2 * ri * m) % wp == 0:
                raise AssertionError("wp_i not minimal")
    return ctx


def parse_cartan(text: str) -> tuple[str, int]:
    label = text[:1].upper()
    try:
        rank = int(text[1:])
    except ValueError:
        raise ValueError(f"cannot parse Cartan type {text!r}") from None
    return label, rank


# ---------------------------------------------------------------------------
# Structure constants
# ---------------------------------------------------------------------------

KINDS = (
    "A00", "A22", "A01", "A10", "A02", "A20",
    "B11+", "B11-", "B12", "B21", "A11", "A21", "A12",
)


def _qi_pow(ctx: RootUnityCtx, i: int, e: int) -> LaurentPoly:
    return LaurentPoly.q_power(ctx.r_of(i) * e)


def kind_poly(ctx: RootUnityCtx, kind: str, i: int, j: int) -> LaurentPoly:
    """The Laurent polynomial g with entry(kind, i, j, m, n) = <g q^{n-m}>_wp."""
    rl = ctx.r * ctx.ell
    a_ij = ctx.a_entry(i, j)
    a_ji = ctx.a_entry(j, i)
    ri, rj = ctx.r_of(i), ctx.r_of(j)
    q = LaurentPoly.q_power
    if kind == "A00":
        return qint(a_ij, ri) * qint(rl // rj, rj) * q(-rl)
    if kind == "A22":
        return _qi_pow(ctx, i, a_ij)
    if kind == "A01":
        return qint(a_ij, ri) * (q(-rl) - q(rl)) * q(-rl)
    if kind == "A10":
        return qint(a_ji, rj) * (q(rl) - q(-rl)) * q(-rl)
    if kind == "A02":
        return qint(a_ij, ri) * q(-rl)
    if kind == "A20":
        return qint(a_ji, rj) * q(-rl)
    if kind == "B11+":
        return _qi_pow(ctx, i, a_ij) * (LaurentPoly.const(1) - q(-2 * rl))
    if kind == "B11-":
        return _qi_pow(ctx, i, -a_ij) * (LaurentPoly.const(1) - q(-2 * rl))
    if kind == "B12":
        return _qi_pow(ctx, i, a_ij) * q(-rl)
    if kind == "B21":
        return _qi_pow(ctx, i, -a_ij) * q(-rl)
    if kind == "A11":
        sq = q(rl) - q(-rl)
        return (_qi_pow(ctx, i, a_ij) * sq * sq).scale(-1)
    if kind == "A21":
        return _qi_pow(ctx, i, a_ij) * (q(-rl) - q(rl))
    if kind == "A12":
        return (_qi_pow(ctx, i, a_ij) * (q(-rl) - q(rl))).scale(-1)
    raise ValueError(f"unknown structure-constant kind {kind!r}")


@lru_cache(maxsize=None)
def _kind_profile(key: tuple, kind: str, i: int, j: int) -> tuple:
    ctx = _CTX_CACHE[key]
    return residue_profile(kind_poly(ctx, kind, i, j), ctx.wp)


_CTX_CACHE: dict = {}


def _register(ctx: RootUnityCtx) -> tuple:
    key = ctx.key()
    _CTX_CACHE.setdefault(key, ctx)
    return key


def struct_const(ctx: RootUnityCtx, kind: str, i: int, j: int, m: int, n: int) -> int:
    """Exact integer A/B structure constant; depends on (i, j, (n-m) mod wp)."""
    key = _register(ctx)
    profile = _kind_profile(key, kind, i, j)
    # <g q^D> sums coefficients at exponents = -D (mod wp).
    return profile[(m - n) % ctx.wp]


def structure_constants(ctx: RootUnityCtx) -> dict:
    """Materialized table (kind, i, j, m, n) -> integer over all kinds."""
    table = {}
    for kind in KINDS:
        for i in ctx.nodes():
            for j in ctx.nodes():
                for m in range(ctx.wp):
                    for n in range(ctx.wp):
                        table[(kind, i, j, m, n)] = struct_const(ctx, kind, i, j, m, n)
    return table


def check_const_identities(ctx: RootUnityCtx) -> CheckReport:
    """The displayed A/B identities plus shift invariance, via a raw
    per-(m,n) bracket route that is independent of the cached profiles."""
    rep = CheckReport("cartan")
    wp = ctx.wp
    for kind in KINDS:
        ok = True
        detail = ""
        for i in ctx.nodes():
            for j in ctx.nodes():
                g = kind_poly(ctx, kind, i, j)
                for m in range(wp):
                    for n in range(wp):
                        raw = bracket_periodic(g.shift(n - m), wp)
                        if raw != struct_const(ctx, kind, i, j, m, n):
                            ok = False
                            detail = f"profile route differs at {kind} ({i+1},{j+1},{m},{n})"
                        shifted = struct_const(ctx, kind, i, j, (m + 1) % wp, (n + 1) % wp)
                        if shifted != struct_const(ctx, kind, i, j, m, n):
                            ok = False
                            detail = f"shift invariance fails at {kind} ({i+1},{j+1},{m},{n})"
        rep.add("const_shift_invariance", {"kind": kind}, ok, detail)
    ok = True
    detail = ""
    for i in ctx.nodes():
        for j in ctx.nodes():
            for m in range(wp):
                for n in range(wp):
                    a11 = struct_const(ctx, "A11", i, j, m, n)
                    b_sum = struct_const(ctx, "B11+", i, j, m, n) + struct_const(
                        ctx, "B11-", j, i, n, m
                    )
                    if a11 != b_sum:
                        ok = False
                        detail = f"A11 != B11+ + B11- at ({i+1},{j+1},{m},{n})"
                    a21 = struct_const(ctx, "A21", i, j, m, n)
                    a12 = struct_const(ctx, "A12", i, j, m, n)
                    b_diff = struct_const(ctx, "B12", i, j, m, n) - struct_const(
                        ctx, "B21", j, i, n, m
                    )
                    if a21 != -a12 or a21 != b_diff:
                        ok = False
                        detail = f"A21 identities fail at ({i+1},{j+1},{m},{n})"
    rep.add("const_B_identities", {"pairs": ctx.cartan.rank ** 2 * wp * wp}, ok, detail)
    # [r ell / r_j] must be an honest quantum integer (r_j | r ell).
    ok = all((ctx.r * ctx.ell) % ctx.r_of(j) == 0 for j in ctx.nodes())
    rep.add("level_divisibility", {"level": ctx.ell}, ok)
    return rep


def eval_kind_at_zeta(ctx: RootUnityCtx, poly: LaurentPoly, power: int):
    """Evaluate an integer Laurent polynomial at q = zeta^power."""
    return eval_zeta_power(poly, power, ctx.field)


def quantum_int_at(ctx: RootUnityCtx, n: int, d: int, power: int):
    """[n] in the variable q^d evaluated at q = zeta^power (polynomial value)."""
    return eval_zeta_power(qint(n, d), power, ctx.field)
