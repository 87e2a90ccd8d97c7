"""Machine-readable run reports: text table, JSON, and CSV renderings.

All values are exact (ints, exact rational strings, booleans); the only
nondeterministic field is the per-item timing in milliseconds.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class ReportItem:
    fields: Dict[str, Any]          # identity columns, insertion-ordered
    checks: Dict[str, bool]         # check name -> verdict
    flags: List[str] = field(default_factory=list)
    ms: int = 0
    skipped: bool = False

    @property
    def passed(self) -> bool:
        return not self.skipped and all(self.checks.values())


@dataclass
class Report:
    columns: List[str]              # names of the identity columns
    items: List[ReportItem] = field(default_factory=list)

    @property
    def summary(self) -> Dict[str, int]:
        passed = sum(1 for it in self.items if it.passed)
        skipped = sum(1 for it in self.items if it.skipped)
        failed = len(self.items) - passed - skipped
        return {"total": len(self.items), "passed": passed,
                "failed": failed, "skipped": skipped}

    @property
    def failed(self) -> int:
        return self.summary["failed"]

    # -- renderings --------------------------------------------------------

    def to_obj(self) -> Dict[str, Any]:
        items = []
        for it in self.items:
            obj = dict(it.fields)
            obj["flags"] = (it.flags + (["skipped"] if it.skipped else []))
            obj["checks"] = dict(it.checks)
            obj["ms"] = it.ms
            items.append(obj)
        return {"summary": self.summary, "items": items}

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        header = self.columns + ["flags", "checks", "ms", "status"]
        buf.write(",".join(header) + "\n")
        for it in self.items:
            flags = ";".join(it.flags + (["skipped"] if it.skipped else []))
            checks = ";".join(f"{k}={'pass' if v else 'fail'}"
                              for k, v in it.checks.items())
            status = "skip" if it.skipped else ("pass" if it.passed else "fail")
            row = [str(it.fields.get(c, "")) for c in self.columns]
            row += [flags, checks, str(it.ms), status]
            buf.write(",".join(row) + "\n")
        return buf.getvalue()

    def to_text(self) -> str:
        buf = io.StringIO()
        header = self.columns + ["flags", "checks", "ms", "status"]
        rows = []
        for it in self.items:
            flags = ";".join(it.flags + (["skipped"] if it.skipped else []))
            checks = " ".join(f"{k}:{'ok' if v else 'FAIL'}"
                              for k, v in it.checks.items())
            status = "skip" if it.skipped else ("pass" if it.passed else "FAIL")
            rows.append([str(it.fields.get(c, "")) for c in self.columns]
                        + [flags, checks, str(it.ms), status])
        widths = [max(len(header[i]), *(len(r[i]) for r in rows)) if rows
                  else len(header[i]) for i in range(len(header))]
        buf.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
        for r in rows:
            buf.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
        s = self.summary
        buf.write(f"total {s['total']}  passed {s['passed']}  "
                  f"failed {s['failed']}  skipped {s['skipped']}\n")
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "text":
            return self.to_text()
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise ValueError(f"unknown format {fmt!r}")
