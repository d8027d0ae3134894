"""Structured results of the numeric evidence scans."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field

__all__ = ["ScanReport", "PASS", "FAIL", "INCONCLUSIVE"]

PASS = "PASS"
FAIL = "FAIL"
INCONCLUSIVE = "INCONCLUSIVE"


def _clean(x):
    if isinstance(x, float) and not math.isfinite(x):
        return None
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    if isinstance(x, dict):
        return {k: _clean(v) for k, v in x.items()}
    return x


@dataclass
class ScanReport:
    """Outcome of a grid scan.

    ``worst`` is the extremal statistic the verdict depends on and
    ``threshold`` the value it is compared with; which side counts as
    passing is fixed by the scan that built the report. ``extra`` carries
    scan-specific detail (residuals, empirical constants, ...).
    """

    label: str
    grid: list
    statistic: list
    worst: float | None
    threshold: float
    status: str
    slope: float | None = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        d = asdict(self)
        extra = d.pop("extra")
        d.update(extra)
        return _clean(d)

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["point", "statistic"])
        for x, s in zip(self.grid, self.statistic):
            w.writerow([f"{x:.17g}", "" if s is None else f"{s:.17g}"])
        return buf.getvalue()
