from __future__ import annotations

import pytest

from rouqva.exact import LaurentPoly
from rouqva.rational import Rat
from rouqva.series import capC, theta_d2_cached
from rouqva.tau import (
    check_entry_shift_structure,
    check_kernel_equivalence,
    check_membership,
    check_zeta10,
    identity_tau,
    perturbed_tau,
    tau_equal,
    tau_group_op,
    tau_inv,
    tau_mul,
)


def test_level_zero_kills_additive_entries(ctx_cache, canonical_cache):
    t = canonical_cache("A", 1, 7, 0, 8)
    for m in range(7):
        for n in range(7):
            assert t.entry(0, 0, 0, 0, m, n).is_zero_through()
            assert t.entry(0, 1, 0, 0, m, n).is_zero_through()


def test_canonical_22_constant(ctx_cache, canonical_cache):
    ctx = ctx_cache("A", 1, 7, 1)
    t = canonical_cache("A", 1, 7, 1)
    c = capC(ctx, LaurentPoly({-2: Rat(-1)}))
    for m in range(7):
        v = t.entry(2, 2, 0, 0, m, m).coeff(0)
        assert v == ctx.field.zeta(m) * c
        assert not v.is_zero()


def test_invertible_entries_nonzero_constant(canonical_cache):
    t = canonical_cache("B", 2, 9, 2)
    for (a, b, i, j, m, n), ser in t.entries.items():
        if a in (1, 2) and b in (1, 2):
            assert not ser.coeff(0).is_zero()


@pytest.mark.parametrize(
    "label,rank,wp,ell",
    [("A", 1, 7, 1), ("A", 2, 8, 1), ("G", 2, 8, 2)],
)
def test_membership_canonical(canonical_cache, label, rank, wp, ell):
    rep = check_membership(canonical_cache(label, rank, wp, ell))
    assert rep.ok, [(i.name, i.detail) for i in rep.failures()]


def test_membership_identity_and_perturbed(ctx_cache):
    ctx = ctx_cache("A", 1, 7, 1)
    assert check_membership(identity_tau(ctx, 10)).ok
    assert check_membership(perturbed_tau(ctx, 10, seed=5)).ok


def test_membership_closure_under_product(ctx_cache, canonical_cache):
    ctx = ctx_cache("A", 1, 7, 1)
    t = canonical_cache("A", 1, 7, 1)
    p = perturbed_tau(ctx, 12, seed=9)
    assert check_membership(tau_mul(t, p)).ok
    assert check_membership(tau_inv(t)).ok


def test_membership_detects_corruption(ctx_cache):
    ctx = ctx_cache("A", 1, 7, 1)
    t = perturbed_tau(ctx, 10, seed=1)
    key = (0, 1, 0, 0, 2, 3)
    broken = dict(t.entries)
    bad = broken[key].copy()
    bad.coeffs[1] = bad.coeffs[1] + ctx.field.one()
    broken[key] = bad
    t.entries = broken
    rep = check_membership(t)
    assert not rep.ok


def test_entry_shift_structure(canonical_cache):
    rep = check_entry_shift_structure(canonical_cache("A", 2, 8, 1))
    assert rep.ok, [(i.name, i.detail) for i in rep.failures()]


def test_group_laws(ctx_cache, canonical_cache):
    ctx = ctx_cache("A", 1, 7, 1)
    t = canonical_cache("A", 1, 7, 1)
    ident = identity_tau(ctx, 12)
    p1 = perturbed_tau(ctx, 12, seed=1)
    p2 = perturbed_tau(ctx, 12, seed=2)
    assert tau_equal(tau_mul(t, tau_inv(t)), ident, through=10)
    assert tau_equal(tau_mul(ident, t), t, through=12)
    assert tau_equal(
        tau_mul(tau_mul(t, p1), p2), tau_mul(t, tau_mul(p1, p2)), through=10
    )
    assert tau_equal(tau_mul(t, p1), tau_mul(p1, t), through=12)
    assert tau_equal(tau_group_op(t, None, "identity"), ident, through=12)
    with pytest.raises(ValueError):
        tau_mul(t, identity_tau(ctx_cache("A", 1, 7, 2), 12))
    with pytest.raises(ValueError):
        tau_group_op(t, None, "unknown")


@pytest.mark.parametrize(
    "label,rank,wp,ell",
    [("A", 1, 7, 1), ("A", 1, 7, 0), ("G", 2, 8, 2)],
)
def test_kernel_equivalence(ctx_cache, canonical_cache, label, rank, wp, ell):
    ctx = ctx_cache(label, rank, wp, ell)
    t = canonical_cache(label, rank, wp, ell)
    rep = check_kernel_equivalence(ctx, t, 12)
    assert rep.ok, [(i.name, i.detail) for i in rep.failures()]


@pytest.mark.parametrize(
    "label,rank,wp,ell",
    [("A", 1, 7, 0), ("A", 1, 7, 1), ("G", 2, 8, 3)],
)
def test_zeta10(ctx_cache, canonical_cache, label, rank, wp, ell):
    ctx = ctx_cache(label, rank, wp, ell)
    t = canonical_cache(label, rank, wp, ell)
    rep = check_zeta10(ctx, t)
    assert rep.ok, [(i.name, i.detail) for i in rep.failures()]


def test_tau00_example_series(ctx_cache, canonical_cache):
    # A1, p=7, level 1: the (0,0) entry at n = m is -d2 theta_5 (profile of
    # q^{-2} puts all weight on the class s = 5).
    t = canonical_cache("A", 1, 7, 1)
    expect = theta_d2_cached(7, 5, 12).neg()
    assert t.entry(0, 0, 0, 0, 3, 3).equal_through(expect, 10)


def test_truncation_consistency(ctx_cache):
    # entries computed at different truncations agree on the common window
    from rouqva.tau import canonical_tau

    ctx = ctx_cache("A", 1, 7, 1)
    t8 = canonical_tau(ctx, 8)
    t14 = canonical_tau(ctx, 14)
    assert all(t8.entries[k].equal_through(t14.entries[k], 8) for k in t8.entries)


def test_kernel_equivalence_rejects_noncanonical(ctx_cache):
    # the kernel comparison is specific to the canonical member: the
    # identity tuple (at nonzero level) and perturbed members must fail
    ctx = ctx_cache("A", 1, 7, 1)
    assert not check_kernel_equivalence(ctx, identity_tau(ctx, 12), 12).ok
    assert not check_kernel_equivalence(ctx, perturbed_tau(ctx, 12, seed=11), 12).ok


def test_zeta10_rejects_noncanonical(ctx_cache):
    ctx = ctx_cache("A", 1, 7, 1)
    assert not check_zeta10(ctx, perturbed_tau(ctx, 12, seed=11)).ok
