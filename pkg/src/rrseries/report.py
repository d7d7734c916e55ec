"""Verification report records shared by the catalog, engine, and CLI."""

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
REPORT_ONLY_PASS = "report-only-pass"
REPORT_ONLY_FAIL = "report-only-fail"


@dataclass
class VerificationReport:
    """Outcome of one verification item.

    ``first_violation`` is a (index, value) pair and must be present
    exactly when the item failed.  ``detail`` carries item-specific extras
    (e.g. the minimal consistent prefix of a periodicity check).
    """

    name: str
    status: str
    certified_order: int
    first_violation: tuple | None = None
    elapsed: float = 0.0
    detail: dict = field(default_factory=dict)

    @property
    def ok(self):
        """True unless this item is a hard failure (report-only never fails a run)."""
        return self.status != FAIL

    @property
    def passed(self):
        return self.status in (PASS, REPORT_ONLY_PASS)

    def to_dict(self):
        violation = None
        if self.first_violation is not None:
            index, value = self.first_violation
            violation = {"index": index, "value": value}
        d = {
            "name": self.name,
            "status": self.status,
            "certified_order": self.certified_order,
            "first_violation": violation,
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
        }
        if self.detail:
            d["detail"] = self.detail
        return d


def reports_to_json(reports):
    return json.dumps([r.to_dict() for r in reports], indent=2)


def reports_to_text(reports):
    """Fixed-width summary table; deliberately excludes timing for determinism."""
    name_width = max([len(r.name) for r in reports] + [4])
    status_width = max([len(r.status) for r in reports] + [6])
    lines = [f"{'name':<{name_width}}  {'status':<{status_width}}  {'order':>6}  note"]
    lines.append("-" * (name_width + status_width + 16))
    for r in reports:
        note = ""
        if r.first_violation is not None:
            index, value = r.first_violation
            note = f"first violation at n={index}: {value}"
        elif r.detail:
            note = ", ".join(f"{k}={v}" for k, v in sorted(r.detail.items()))
        lines.append(
            f"{r.name:<{name_width}}  {r.status:<{status_width}}  "
            f"{r.certified_order:>6}  {note}".rstrip()
        )
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
    lines.append(f"total: {len(reports)} items ({summary})")
    return "\n".join(lines)
