"""Command-line driver: build a context, run the selected verification
suites, and emit a machine- or human-readable report.

Exit codes: 0 all checks pass, 1 at least one check failed, 2 bad
configuration, 3 output I/O failure.  Reports are deterministic for a
fixed (configuration, seed); elapsed times are shown in text mode only and
emitted as 0 in JSON so byte-identical reruns stay byte-identical.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import cartan, dist, qcomb, quiver, symcomb, tau
from .exact import LaurentPoly
from .series import check_E_identities
from .qyb import (
    SCache,
    build_ybe_tau,
    check_h_trivial,
    check_shift_equivariance,
    check_unitarity,
    check_xi_tilde_bracket,
    check_ybe,
    default_triple_sample,
)
from .report import CheckReport, Report, records_from

SUITES = ("qcomb", "tau", "qyb", "dft", "quiver", "symcomb", "dist")


@dataclass
class RunConfig:
    label: str
    rank: int
    wp: int
    ell: int
    trunc: int = 12
    window: int = 16
    suites: tuple = SUITES
    max_k: int = 4
    seed: int = 0
    jobs: int = 1

    def context(self) -> cartan.RootUnityCtx:
        return cartan.build_context(self.label, self.rank, self.wp, self.ell)

    def echo(self) -> dict:
        return {
            "type": self.label,
            "rank": self.rank,
            "p": self.wp,
            "level": self.ell,
            "trunc": self.trunc,
            "seed": self.seed,
        }


# ---------------------------------------------------------------------------
# Suite bodies
# ---------------------------------------------------------------------------

def _suite_qcomb(cfg: RunConfig) -> CheckReport:
    rep = CheckReport("qcomb")
    for m in range(7):
        rep.extend(qcomb.check_qb_mult(m))
    for k in range(1, 6):
        rep.extend(qcomb.check_antisym(k, "product-formula"))
    for m in range(1, 7):
        rep.extend(qcomb.check_antisym(m, "qbinom-theorem"))
    rep.extend(qcomb.check_c_poly_integrality(30))
    rep.extend(cartan.check_const_identities(cfg.context()))
    return rep


def _suite_tau(cfg: RunConfig) -> CheckReport:
    ctx = cfg.context()
    rep = CheckReport("tau")
    for g in (LaurentPoly({1: 1, -1: 1}),
              (LaurentPoly({1: 1, -1: -1}) * LaurentPoly({1: 1, -1: -1}))):
        rep.extend(check_E_identities(ctx, g, cfg.trunc))
    canonical = tau.canonical_tau(ctx, cfg.trunc)
    rep.extend(tau.check_membership(canonical))
    rep.extend(tau.check_entry_shift_structure(canonical))
    # group law against two deterministic perturbed members
    p1 = tau.perturbed_tau(ctx, cfg.trunc, seed=cfg.seed + 1)
    p2 = tau.perturbed_tau(ctx, cfg.trunc, seed=cfg.seed + 2)
    rep.extend(tau.check_membership(p1))
    ident = tau.identity_tau(ctx, cfg.trunc)
    through = cfg.trunc - 2
    ok = tau.tau_equal(tau.tau_mul(canonical, tau.tau_inv(canonical)), ident, through)
    rep.add("group_inverse", {"through": through}, ok)
    lhs = tau.tau_mul(tau.tau_mul(canonical, p1), p2)
    rhs = tau.tau_mul(canonical, tau.tau_mul(p1, p2))
    rep.add("group_associative", {"through": through}, tau.tau_equal(lhs, rhs, through))
    rep.add(
        "group_commutative",
        {"through": through},
        tau.tau_equal(tau.tau_mul(canonical, p1), tau.tau_mul(p1, canonical), through),
    )
    rep.add(
        "group_identity",
        {"through": through},
        tau.tau_equal(tau.tau_mul(ident, canonical), canonical, through),
    )
    rep.extend(tau.check_kernel_equivalence(ctx, canonical, cfg.trunc))
    rep.extend(tau.check_zeta10(ctx, canonical))
    return rep


def _suite_qyb(cfg: RunConfig) -> CheckReport:
    ctx = cfg.context()
    rep = CheckReport("qyb")
    canonical = tau.canonical_tau(ctx, cfg.trunc + 4)
    cache = SCache(ctx, canonical)
    rep.extend(check_unitarity(ctx, canonical, cfg.trunc, cache=cache))
    rep.extend(check_shift_equivariance(ctx, canonical, cfg.trunc, cache=cache))
    ybe_tau = build_ybe_tau(ctx)
    ybe_cache = SCache(ctx, ybe_tau)
    if ctx.cartan.rank == 1:
        sample = None
    else:
        sample = default_triple_sample(ctx, 200, seed=cfg.seed)
    rep.extend(check_ybe(ctx, ybe_tau, cfg.trunc, sample=sample, cache=ybe_cache))
    rep.extend(check_h_trivial(ctx, cfg.trunc - 2))
    rep.extend(check_xi_tilde_bracket(ctx))
    return rep


def _suite_dft(cfg: RunConfig) -> CheckReport:
    ctx = cfg.context()
    rep = CheckReport("dft")
    rep.extend(quiver.check_gram_symmetry(ctx))
    rep.extend(quiver.check_dft(ctx))
    return rep


def _suite_quiver(cfg: RunConfig) -> CheckReport:
    ctx = cfg.context()
    rep = CheckReport("quiver")
    _, r1 = quiver.build_quiver(ctx)
    rep.extend(r1)
    _, r2 = quiver.build_loops(ctx)
    rep.extend(r2)
    rep.extend(quiver.check_arrow_counts(ctx))
    return rep


def _suite_symcomb(cfg: RunConfig) -> CheckReport:
    rep = CheckReport("symcomb")
    for k in range(1, 9):
        rep.extend(symcomb.check_shuffle_counts(k))
    for k in range(1, 6):
        rep.extend(symcomb.check_sym_gps(k))
    return rep


def _suite_dist(cfg: RunConfig) -> CheckReport:
    rep = CheckReport("dist")
    for k in range(min(cfg.max_k, 4) + 1):
        for a in range(cfg.wp):
            rep.extend(dist.check_delta_decomposition(cfg.wp, k, a, cfg.window))
    for roots in ([(0, 1)], [(0, 1), (1, 1)], [(0, 2)], [(1, 2), (3, 1)],
                  [(0, 1), (1, 1), (2, 1), (3, 1)]):
        rep.extend(dist.check_partial_fraction_delta(cfg.wp, roots, cfg.window))
    for k in range(1, min(cfg.max_k, 4) + 1):
        for parts in symcomb.compositions(k):
            rep.extend(dist.check_normal_order(k, parts, cfg.window))
    return rep


_SUITE_FNS = {
    "qcomb": _suite_qcomb,
    "tau": _suite_tau,
    "qyb": _suite_qyb,
    "dft": _suite_dft,
    "quiver": _suite_quiver,
    "symcomb": _suite_symcomb,
    "dist": _suite_dist,
}


def _run_one(args: tuple) -> tuple:
    cfg_fields, name = args
    cfg = RunConfig(**cfg_fields)
    start = time.perf_counter()
    try:
        rep = _SUITE_FNS[name](cfg)
    except Exception as exc:  # arithmetic inconsistency, not a check failure
        rep = CheckReport(name)
        rep.add("suite", {"suite": name}, False, f"internal-error: {exc!r}")
    elapsed = (time.perf_counter() - start) * 1000.0
    return name, records_from(name, rep), elapsed


def run_suite(cfg: RunConfig) -> Report:
    """Execute the configured suites; deterministic given (config, seed)."""
    report = Report(context=cfg.echo())
    names = [s for s in SUITES if s in cfg.suites]
    jobs = max(1, cfg.jobs)
    cfg_fields = cfg.__dict__.copy()
    if jobs == 1 or len(names) <= 1:
        results = [_run_one((cfg_fields, name)) for name in names]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(names))) as pool:
            results = list(pool.map(_run_one, [(cfg_fields, n) for n in names]))
    by_name = {name: (records, elapsed) for name, records, elapsed in results}
    for name in names:
        records, elapsed = by_name[name]
        if records:
            # charge the suite wall time to its first record for text output
            records[0]["ms"] = elapsed
        report.checks.extend(records)
    return report


def emit_report(report: Report, fmt: str, path: str | None) -> None:
    """Write the report; 'json' zeroes durations so bytes are reproducible."""
    if fmt == "json":
        for rec in report.checks:
            rec["ms"] = 0
        payload = report.to_json()
    elif fmt == "text":
        payload = report.to_text()
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is None or path == "-":
        sys.stdout.write(payload)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rouqva",
        description="Exact verification of root-of-unity quantum vertex "
        "algebra data at finite truncation.",
    )
    parser.add_argument("--cartan", default="A1", help="finite type, e.g. A1, B2, G2")
    parser.add_argument("--p", type=int, default=7, help="root-of-unity order (> 2r)")
    parser.add_argument("--level", type=int, default=1)
    parser.add_argument("--trunc", type=int, default=12, help="series truncation order")
    parser.add_argument("--window", type=int, default=16, help="distribution window")
    parser.add_argument("--suite", default="all", help="comma list or 'all'")
    parser.add_argument("--max-k", type=int, default=4, dest="max_k")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default=None, help="output path (default stdout)")
    parser.add_argument("--format", default="text", choices=("text", "json"))
    parser.add_argument("--jobs", type=int, default=1)
    return parser


def config_from_args(args) -> RunConfig:
    label, rank = cartan.parse_cartan(args.cartan)
    if args.suite == "all":
        suites = SUITES
    else:
        suites = tuple(s.strip() for s in args.suite.split(",") if s.strip())
        unknown = [s for s in suites if s not in SUITES]
        if unknown:
            raise ValueError(f"unknown suites: {', '.join(unknown)}")
    if args.trunc < 4:
        raise ValueError("truncation must be at least 4")
    cfg = RunConfig(
        label=label,
        rank=rank,
        wp=args.p,
        ell=args.level,
        trunc=args.trunc,
        window=args.window,
        suites=suites,
        max_k=args.max_k,
        seed=args.seed,
        jobs=args.jobs,
    )
    cfg.context()  # validate eagerly: bad Cartan/p/level must exit 2
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    report = run_suite(cfg)
    try:
        emit_report(report, args.format, args.out)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
