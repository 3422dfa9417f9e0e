from __future__ import annotations

import pytest

from rouqva.cartan import (
    CartanData,
    bracket,
    bracket_constant,
    bracket_periodic,
    build_context,
    check_const_identities,
    kind_poly,
    residue_profile,
    struct_const,
)
from rouqva.exact import LaurentPoly
from rouqva.rational import Rat


def lp(d):
    return LaurentPoly({e: Rat(c) for e, c in d.items()})


def test_bracket_examples():
    assert bracket_periodic(lp({5: 1, 0: 3, -10: 1}), 5) == 5
    assert bracket_periodic(lp({1: 1, 3: 1}), 5) == 0
    assert bracket_constant(lp({2: 1, 0: 7, -1: 1})) == 7
    assert bracket(lp({0: 2}), "periodic", 7) == 2
    assert bracket(lp({0: 2}), "constant-term") == 2
    with pytest.raises(ValueError):
        bracket_periodic(LaurentPoly({0: Rat(1, 2)}), 5)


def test_bracket_linearity_and_periodicity():
    g = lp({3: 2, -4: 1, 0: -1})
    assert bracket_periodic(g.shift(7), 7) == bracket_periodic(g, 7)
    h = lp({1: 5})
    assert bracket_periodic(g + h, 7) == bracket_periodic(g, 7) + bracket_periodic(h, 7)


def test_residue_profile():
    g = lp({5: 1, 0: 3, -10: 1, 2: 4})
    prof = residue_profile(g, 5)
    assert prof == (5, 0, 4, 0, 0)


@pytest.mark.parametrize(
    "label,rank", [("A", 1), ("A", 4), ("B", 2), ("B", 3), ("C", 3), ("D", 4),
                   ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)
def test_cartan_tables_validate(label, rank):
    data = CartanData.build(label, rank)
    for i in range(rank):
        for j in range(rank):
            assert data.r_i[i] * data.a[i][j] == data.r_i[j] * data.a[j][i]


def test_context_examples():
    g2 = build_context("G", 2, 7, 1)
    assert g2.r == 3
    assert set(g2.cartan.r_i) == {1, 3}
    assert g2.wp_i == (7, 7)

    b2 = build_context("B", 2, 8, 3)
    # long node (r_i = 2): 8/gcd(8,4) = 2; short node: 8/gcd(8,2) = 4
    assert b2.wp_i == (2, 4)

    with pytest.raises(ValueError):
        build_context("A", 1, 2, 0)
    with pytest.raises(ValueError):
        build_context("G", 2, 6, 0)
    with pytest.raises(ValueError):
        build_context("Q", 3, 9, 0)


def test_level_normalization():
    ctx = build_context("A", 1, 7, 9)
    assert ctx.ell == 2
    ctx = build_context("A", 1, 7, -1)
    assert ctx.ell == 6


def test_struct_const_worked_values():
    ctx = build_context("A", 1, 7, 1)
    assert struct_const(ctx, "A00", 0, 0, 0, 0) == 1
    for m in range(7):
        for n in range(7):
            expect = 1 if (n - m + 2) % 7 == 0 else 0
            assert struct_const(ctx, "A22", 0, 0, m, n) == expect
        assert struct_const(ctx, "A11", 0, 0, m, m) == -1


def test_struct_const_raw_route():
    ctx = build_context("B", 2, 9, 2)
    for kind in ("A00", "A01", "B11+", "A12"):
        for i in range(2):
            for j in range(2):
                g = kind_poly(ctx, kind, i, j)
                for d in range(9):
                    assert struct_const(ctx, kind, i, j, 0, d) == bracket_periodic(
                        g.shift(d), 9
                    )


@pytest.mark.parametrize(
    "label,rank,wp,ell",
    [("A", 1, 7, 1), ("G", 2, 7, 2), ("B", 2, 8, 3), ("A", 2, 9, 0)],
)
def test_const_identities(label, rank, wp, ell, ctx_cache):
    rep = check_const_identities(ctx_cache(label, rank, wp, ell))
    assert rep.ok, [(i.name, i.detail) for i in rep.failures()]


def test_structure_constants_table(ctx_cache):
    from rouqva.cartan import KINDS, structure_constants

    ctx = ctx_cache("A", 1, 7, 1)
    table = structure_constants(ctx)
    assert len(table) == len(KINDS) * 7 * 7
    assert table[("A00", 0, 0, 0, 0)] == 1
    # every entry depends on (n - m) mod p only
    for (kind, i, j, m, n), v in table.items():
        assert v == table[(kind, i, j, 0, (n - m) % 7)]
