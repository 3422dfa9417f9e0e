"""Check reports: one record per verified statement, JSON/text emission."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckItem:
    name: str
    params: dict
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""
    ms: float = 0.0


@dataclass
class CheckReport:
    """Result of one check_* operation: a batch of pass/fail items."""

    suite: str
    items: list = field(default_factory=list)

    def add(self, name: str, params: dict, ok: bool, detail: str = "") -> None:
        self.items.append(CheckItem(name, params, "pass" if ok else "fail", detail))

    def add_skip(self, name: str, params: dict, detail: str = "") -> None:
        self.items.append(CheckItem(name, params, "skipped", detail))

    @property
    def ok(self) -> bool:
        return all(it.status != "fail" for it in self.items)

    def failures(self) -> list:
        return [it for it in self.items if it.status == "fail"]

    def extend(self, other: "CheckReport") -> None:
        self.items.extend(other.items)


@dataclass
class Report:
    context: dict
    checks: list = field(default_factory=list)  # CheckItem, with .suite attached via params

    def summary(self) -> dict:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for rec in self.checks:
            out[rec["status"]] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.summary()["fail"] == 0

    def to_json_dict(self) -> dict:
        return {
            "context": self.context,
            "checks": self.checks,
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = []
        ctx = self.context
        lines.append(
            "context: %s%s  p=%s  level=%s  trunc=%s  seed=%s"
            % (ctx["type"], ctx["rank"], ctx["p"], ctx["level"], ctx["trunc"], ctx["seed"])
        )
        by_suite: dict[str, list] = {}
        for rec in self.checks:
            by_suite.setdefault(rec["suite"], []).append(rec)
        for suite in by_suite:
            lines.append(f"suite {suite}:")
            for rec in by_suite[suite]:
                mark = {"pass": "ok  ", "fail": "FAIL", "skipped": "skip"}[rec["status"]]
                params = " ".join(f"{k}={v}" for k, v in rec["params"].items())
                detail = f"  [{rec['detail']}]" if rec["detail"] else ""
                ms = f" ({rec['ms']:.0f} ms)" if rec.get("ms") else ""
                lines.append(f"  {mark}  {rec['name']} {params}{detail}{ms}")
        s = self.summary()
        lines.append(f"summary: pass={s['pass']} fail={s['fail']} skipped={s['skipped']}")
        return "\n".join(lines) + "\n"


def records_from(suite: str, report: CheckReport, elapsed_ms: float = 0.0) -> list:
    """Flatten a CheckReport into plain JSON-able rows for the Report."""
    rows = []
    for it in report.items:
        rows.append(
            {
                "suite": suite,
                "name": it.name,
                "params": {k: _plain(v) for k, v in it.params.items()},
                "status": it.status,
                "detail": it.detail,
                "ms": it.ms,
            }
        )
    return rows


def _plain(v):
    if isinstance(v, (int, str, bool)):
        return v
    return str(v)
