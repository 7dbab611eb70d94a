"""Report rows shared by every verifier command, rendered as a text table or JSON Lines."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, List, Optional

from .cases import CaseResult
from .suites import LawResult, SuiteEntry

FIELDS = ("case", "constraint", "weight", "computed", "expected", "match", "seed", "elapsed_ms")


@dataclass
class ReportEntry:
    case: str
    constraint: str
    weight: str
    computed: str
    expected: str
    match: bool
    seed: Optional[int] = None
    elapsed_ms: Optional[float] = None
    binding: bool = True
    detail: str = ""

    @property
    def failed(self) -> bool:
        """A mismatch on a row whose outcome was predicted with certainty."""
        return self.binding and not self.match

    def as_dict(self, timing: bool = True) -> dict:
        out = {k: getattr(self, k) for k in FIELDS}
        out["elapsed_ms"] = round(self.elapsed_ms, 3) if (timing and self.elapsed_ms is not None) else None
        out["binding"] = self.binding
        if self.detail:
            out["detail"] = self.detail
        return out


def from_case(res: CaseResult) -> ReportEntry:
    if res.skipped is not None:
        return ReportEntry("skip", str(res.constraint), str(res.weight), "-", "-", True, detail=res.skipped)
    detail = "" if res.nonzero_ok else "expected defect vanishes under the case hypotheses"
    return ReportEntry(
        res.case_id, str(res.constraint), str(res.weight), str(res.computed), str(res.expected),
        res.match and res.nonzero_ok, None, res.elapsed_ms, True, detail,
    )


def from_suite(e: SuiteEntry) -> ReportEntry:
    return ReportEntry(e.case, e.constraint, str(e.weight), e.computed, e.expected, e.match, e.seed,
                       e.elapsed_ms, e.binding, e.detail)


def from_law(r: LawResult, seed: Optional[int] = None) -> ReportEntry:
    return ReportEntry(r.name, "-", "-", "pass" if r.passed else "fail", "pass", r.passed, seed,
                       r.elapsed_ms, True, r.detail or f"{r.checked} samples")


def exit_status(entries: Iterable[ReportEntry]) -> int:
    return 1 if any(e.failed for e in entries) else 0


def _text_table(entries: List[ReportEntry], timing: bool) -> str:
    headers = ["case", "constraint", "weight", "computed", "expected", "match"]
    if timing:
        headers.append("ms")
    rows = []
    for e in entries:
        mark = "yes" if e.match else ("NO" if e.binding else "no (informational)")
        row = [e.case, e.constraint, e.weight, e.computed, e.expected, mark]
        if timing:
            row.append("" if e.elapsed_ms is None else f"{e.elapsed_ms:.2f}")
        rows.append(row)
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    failures = [e for e in entries if e.failed]
    for e in failures:
        lines.append(f"MISMATCH {e.case} {e.constraint} weight {e.weight}: computed {e.computed}, "
                     f"expected {e.expected}" + (f" [{e.detail}]" if e.detail else ""))
    return "\n".join(lines) + "\n"


def summarize(entries: Iterable[ReportEntry]) -> str:
    """One line per case id with row, match and failure counts."""
    total, matched, failed = Counter(), Counter(), Counter()
    order = []
    for e in entries:
        if e.case not in total:
            order.append(e.case)
        total[e.case] += 1
        matched[e.case] += e.match
        failed[e.case] += e.failed
    width = max([4] + [len(c) for c in order])
    lines = [f"{'case'.ljust(width)}  {'rows':>7}  {'match':>7}  {'failed':>7}"]
    for c in order:
        lines.append(f"{c.ljust(width)}  {total[c]:>7}  {matched[c]:>7}  {failed[c]:>7}")
    lines.append(f"{'all'.ljust(width)}  {sum(total.values()):>7}  {sum(matched.values()):>7}  {sum(failed.values()):>7}")
    return "\n".join(lines) + "\n"


def emit_report(entries: Iterable[ReportEntry], fmt: str = "text", timing: bool = True) -> str:
    """Render ``entries`` as an aligned table (``text``) or one JSON object per line (``json``)."""
    entries = list(entries)
    if fmt == "json":
        return "".join(json.dumps(e.as_dict(timing), ensure_ascii=False) + "\n" for e in entries)
    if fmt == "text":
        return _text_table(entries, timing)
    raise ValueError(f"unknown report format {fmt!r}")
