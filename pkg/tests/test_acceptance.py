"""Acceptance suite: every release criterion, at its stated bounds, with
one printed pass/fail line per criterion.  All arithmetic is exact, so the
tolerance everywhere is literal equality.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

from __future__ import annotations

import json

from rouqva import cli
from rouqva.dist import (
    check_delta_decomposition,
    check_normal_order,
    check_partial_fraction_delta,
)
from rouqva.qcomb import check_antisym, check_c_poly_integrality, check_qb_mult
from rouqva.quiver import build_loops, build_quiver, check_arrow_counts, check_dft
from rouqva.qyb import (
    SCache,
    build_ybe_tau,
    check_h_trivial,
    check_unitarity,
    check_ybe,
    default_triple_sample,
)
from rouqva.symcomb import check_sym_gps, compositions
from rouqva.tau import (
    check_kernel_equivalence,
    check_membership,
    check_zeta10,
    identity_tau,
    perturbed_tau,
    tau_equal,
    tau_inv,
    tau_mul,
)

# every context of the membership criterion: p > 2r holds for all of these
CRITERION_CONTEXTS = [
    (label, rank, wp, ell)
    for (label, rank) in (("A", 1), ("A", 2), ("B", 2), ("G", 2))
    for wp in (7, 8, 9)
    for ell in (0, 1, 2)
]


def _announce(num: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    line = f"ACCEPTANCE {num:02d} {name}: {status}"
    if detail and not ok:
        line += f"  [{detail}]"
    print(line)
    assert ok, line


def test_criterion_01_divided_power_identity():
    ok = True
    detail = ""
    for m in range(7):
        rep = check_qb_mult(m)
        if not rep.ok:
            ok, detail = False, f"m={m}"
            break
    _announce(1, "divided-power bracket identity m<=6", ok, detail)


def test_criterion_02_cyclotomic_integrality():
    rep = check_c_poly_integrality(30)
    _announce(2, "cyclotomic coefficient integrality k<=30", rep.ok)


def test_criterion_03_tuple_membership(canonical_cache):
    ok = True
    detail = ""
    for key in CRITERION_CONTEXTS:
        rep = check_membership(canonical_cache(*key, top=12))
        if not rep.ok:
            ok = False
            detail = f"{key}: " + "; ".join(i.detail for i in rep.failures())
            break
    _announce(3, "canonical tuple membership, 36 contexts, N=12", ok, detail)


def test_criterion_04_group_law(ctx_cache, canonical_cache):
    ctx = ctx_cache("A", 1, 7, 1)
    t = canonical_cache("A", 1, 7, 1, top=12)
    p1 = perturbed_tau(ctx, 12, seed=1)
    p2 = perturbed_tau(ctx, 12, seed=2)
    ident = identity_tau(ctx, 12)
    ok = tau_equal(tau_mul(t, tau_inv(t)), ident, through=10)
    ok = ok and tau_equal(
        tau_mul(tau_mul(t, p1), p2), tau_mul(t, tau_mul(p1, p2)), through=10
    )
    ok = ok and check_membership(p1).ok and check_membership(p2).ok
    _announce(4, "group law: inverse and associativity with perturbed members", ok)


def test_criterion_05_kernel_equivalence(ctx_cache, canonical_cache):
    ok = True
    detail = ""
    for key in [("A", 1, 7, 1), ("A", 2, 8, 1)]:
        rep = check_kernel_equivalence(ctx_cache(*key), canonical_cache(*key, top=12), 12)
        if not rep.ok:
            ok = False
            detail = f"{key}: " + "; ".join(i.detail for i in rep.failures())
            break
    _announce(5, "kernel equivalence on A1/p7/l1 and A2/p8/l1", ok, detail)


def test_criterion_06_limit_identity(ctx_cache, canonical_cache):
    ok = True
    detail = ""
    for key in CRITERION_CONTEXTS:
        rep = check_zeta10(ctx_cache(*key), canonical_cache(*key, top=12))
        if not rep.ok:
            ok, detail = False, str(key)
            break
    _announce(6, "derivative-limit scalar identity, 36 contexts", ok, detail)


def test_criterion_07_qyb_axioms(ctx_cache):
    ctx = ctx_cache("A", 1, 7, 1)
    t = build_ybe_tau(ctx)
    cache = SCache(ctx, t)
    ok = check_unitarity(ctx, t, 12, cache=cache).ok
    detail = "" if ok else "unitarity A1"
    if ok:
        rep = check_ybe(ctx, t, 12, cache=cache)
        ok = rep.ok
        detail = "" if ok else "ybe A1: " + rep.items[0].detail
    if ok:
        a2 = ctx_cache("A", 2, 8, 1)
        t2 = build_ybe_tau(a2)
        c2 = SCache(a2, t2)
        ok = check_unitarity(a2, t2, 12, cache=c2).ok
        detail = "" if ok else "unitarity A2"
        if ok:
            rep = check_ybe(a2, t2, 12, sample=default_triple_sample(a2, 200, seed=0), cache=c2)
            ok = rep.ok
            detail = "" if ok else "ybe A2 sample: " + rep.items[0].detail
    _announce(7, "unitarity (all pairs) and Yang-Baxter (A1 full, A2 sample)", ok, detail)


def test_criterion_08_h_triviality(ctx_cache):
    ok = True
    detail = ""
    for key in [("A", 1, 7, 1), ("B", 2, 9, 2)]:
        rep = check_h_trivial(ctx_cache(*key), 10)
        if not rep.ok:
            ok = False
            detail = f"{key}: " + "; ".join(i.detail for i in rep.failures())
            break
    _announce(8, "averaged-generator triviality on A1/p7/l1 and B2/p9/l2", ok, detail)


def test_criterion_09_dft(ctx_cache):
    ctx = ctx_cache("A", 1, 7, 1)
    from rouqva.quiver import heisenberg_gram

    ok = heisenberg_gram(ctx)[(0, 0, 0, 0)] == ctx.field.from_rat(14)
    detail = "" if ok else "worked Gram value"
    if ok:
        for key in CRITERION_CONTEXTS:
            rep = check_dft(ctx_cache(*key))
            if not rep.ok:
                ok, detail = False, str(key)
                break
    _announce(9, "Fourier diagonalization to Gram entries, 36 contexts", ok, detail)


def test_criterion_10_quiver(ctx_cache):
    ok = True
    detail = ""
    for key in CRITERION_CONTEXTS:
        _, rep1 = build_quiver(ctx_cache(*key))
        _, rep2 = build_loops(ctx_cache(*key))
        rep3 = check_arrow_counts(ctx_cache(*key))
        if not (rep1.ok and rep2.ok and rep3.ok):
            ok, detail = False, str(key)
            break
    _announce(10, "loop closure and arrow-count consistency, 36 contexts", ok, detail)


def test_criterion_11_symmetric_group_bijection():
    ok = True
    detail = ""
    for k in range(1, 6):
        rep = check_sym_gps(k)
        if not rep.ok:
            ok, detail = False, rep.items[0].detail
            break
    if ok:
        rep = check_sym_gps(6, parts_filter=lambda p: len(p) <= 3)
        ok = rep.ok
        detail = "" if ok else rep.items[0].detail
    _announce(11, "shuffle factorization bijection k<=5 full, k=6 restricted", ok, detail)


def test_criterion_12_antisymmetrization():
    ok = True
    detail = ""
    for k in range(1, 6):
        rep = check_antisym(k, "product-formula")
        if not rep.ok:
            ok, detail = False, f"product-formula k={k}"
            break
    if ok:
        for m in range(1, 7):
            rep = check_antisym(m, "qbinom-theorem")
            if not rep.ok:
                ok, detail = False, f"qbinom-theorem m={m}"
                break
    _announce(12, "antisymmetrization identities (k<=5, m<=6)", ok, detail)


def test_criterion_13_delta_decompositions():
    ok = True
    detail = ""
    for wp in (5, 7):
        for k in range(5):
            for a in range(wp):
                rep = check_delta_decomposition(wp, k, a, 16)
                if not rep.ok:
                    ok, detail = False, f"p={wp} k={k} a={a}"
                    break
            if not ok:
                break
        if not ok:
            break
    if ok:
        for roots in ([(0, 1)], [(0, 2)], [(0, 1), (1, 1)], [(1, 2), (3, 1)],
                      [(0, 2), (2, 2)], [(0, 1), (1, 1), (2, 1), (3, 1)]):
            rep = check_partial_fraction_delta(7, roots, 16)
            if not rep.ok:
                ok, detail = False, f"roots {roots}"
                break
    _announce(13, "delta decompositions (k<=4, p in {5,7}, M=16; mult<=4)", ok, detail)


def test_criterion_14_normal_ordering():
    ok = True
    detail = ""
    for k in range(1, 5):
        for parts in compositions(k):
            rep = check_normal_order(k, parts, 16)
            if not rep.ok:
                ok, detail = False, f"k={k} parts={parts}"
                break
        if not ok:
            break
    _announce(14, "normal-ordering identity, all compositions k<=4", ok, detail)


def test_criterion_15_cli_contract(tmp_path):
    args = ["--cartan", "A1", "--p", "5", "--level", "1", "--suite", "dist",
            "--max-k", "2", "--format", "json", "--seed", "0"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    ok = cli.main(args + ["--out", str(a)]) == 0
    ok = ok and cli.main(args + ["--out", str(b)]) == 0
    ok = ok and a.read_bytes() == b.read_bytes()
    detail = "" if ok else "determinism"
    if ok:
        data = json.loads(a.read_text())
        ok = set(data) == {"context", "checks", "summary"} and data["summary"]["fail"] == 0
        detail = "" if ok else "schema"
    if ok:
        ok = cli.main(["--cartan", "A1", "--p", "2", "--level", "0"]) == 2
        detail = "" if ok else "config exit code"
    if ok:
        rc = cli.main(["--cartan", "A1", "--p", "5", "--suite", "symcomb",
                       "--out", str(tmp_path / "no" / "dir.json"), "--format", "json"])
        ok = rc == 3
        detail = "" if ok else "io exit code"
    _announce(15, "CLI determinism and exit-code contract", ok, detail)
