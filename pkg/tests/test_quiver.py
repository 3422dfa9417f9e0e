from __future__ import annotations

import pytest

from rouqva.quiver import (
    build_loops,
    build_quiver,
    check_arrow_counts,
    check_dft,
    check_gram_symmetry,
    heisenberg_gram,
)


def test_a1_quiver_is_a_cycle(ctx_cache):
    ctx = ctx_cache("A", 1, 7, 1)
    quiver, rep = build_quiver(ctx)
    assert rep.ok
    for m in range(7):
        assert quiver.out_neighbors((0, m)) == [(0, (m - 2) % 7)]
        # no self arrows since p > 2r
        assert quiver.arrow((0, m), (0, m)) == 0


def test_action_permutes_arrows(ctx_cache):
    ctx = ctx_cache("B", 2, 8, 2)
    quiver, rep = build_quiver(ctx)
    assert rep.ok, [(i.name, i.detail) for i in rep.failures()]


def test_loops_closed(ctx_cache):
    ctx = ctx_cache("A", 1, 7, 1)
    loops, rep = build_loops(ctx)
    assert rep.ok
    assert any(len(l) == 7 for l in loops)  # the length-wp_1 loop
    ctx2 = ctx_cache("A", 2, 7, 1)
    loops2, rep2 = build_loops(ctx2)
    assert rep2.ok
    # a_12 = -1 loop has -a_ij + 2 = 3 vertices
    assert any(len(l) == 3 for l in loops2)


def test_gram_worked_value(ctx_cache):
    ctx = ctx_cache("A", 1, 7, 1)
    gram = heisenberg_gram(ctx)
    assert gram[(0, 0, 0, 0)] == ctx.field.from_rat(14)
    assert check_gram_symmetry(ctx).ok


def test_gram_zero_cases(ctx_cache):
    ctx0 = ctx_cache("A", 1, 7, 0)
    assert all(v.is_zero() for v in heisenberg_gram(ctx0).values())
    ctx = ctx_cache("B", 2, 8, 2)
    gram = heisenberg_gram(ctx)
    for (i, m, j, n), v in gram.items():
        if (ctx.wp_i[i] * m + ctx.wp_i[j] * n) % 8 != 0:
            assert v.is_zero()


@pytest.mark.parametrize(
    "label,rank,wp,ell",
    [("A", 1, 7, 1), ("B", 2, 9, 2), ("G", 2, 8, 1)],
)
def test_dft(ctx_cache, label, rank, wp, ell):
    rep = check_dft(ctx_cache(label, rank, wp, ell))
    assert rep.ok, [(i.name, i.detail) for i in rep.failures()]


@pytest.mark.parametrize(
    "label,rank,wp,ell",
    [("A", 1, 7, 1), ("A", 2, 8, 1), ("G", 2, 7, 2)],
)
def test_arrow_counts(ctx_cache, label, rank, wp, ell):
    rep = check_arrow_counts(ctx_cache(label, rank, wp, ell))
    assert rep.ok, [(i.name, i.detail) for i in rep.failures()]
