"""Structured pass/fail reports and their human/tsv/jsonl renderings.

All comparisons are exact; a claim passes iff computed equals expected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .differences import TableRow

Value = Union[Fraction, bool]


@dataclass(frozen=True)
class Claim:
    label: str
    ref: str
    computed: Value
    expected: Value
    passed: bool


def make_claim(label: str, ref: str, computed: Value, expected: Value) -> Claim:
    """Build a claim; rationals and booleans never cross-compare."""
    if isinstance(computed, bool) or isinstance(expected, bool):
        if not (isinstance(computed, bool) and isinstance(expected, bool)):
            raise TypeError(f"claim {label!r} mixes boolean and rational values")
    else:
        computed = Fraction(computed)
        expected = Fraction(expected)
    return Claim(label, ref, computed, expected, computed == expected)


@dataclass(frozen=True)
class Report:
    scenario: str
    claims: tuple[Claim, ...]
    trace: tuple[TableRow, ...] = ()
    trace_title: str = ""
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)


@dataclass
class ReportBuilder:
    """Accumulates claims for one scenario."""

    scenario: str
    claims: list[Claim] = field(default_factory=list)
    trace: tuple[TableRow, ...] = ()
    trace_title: str = ""
    notes: list[str] = field(default_factory=list)

    def claim(self, label: str, ref: str, computed: Value, expected: Value) -> Claim:
        c = make_claim(label, ref, computed, expected)
        self.claims.append(c)
        return c

    def note(self, text: str) -> None:
        self.notes.append(text)

    def build(self) -> Report:
        return Report(
            self.scenario, tuple(self.claims), self.trace, self.trace_title,
            tuple(self.notes),
        )


def render_value(v: Value) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _json_value(v: Value):
    return v if isinstance(v, bool) else str(v)


def render_trace(rows: Sequence[TableRow]) -> list[str]:
    """Evaluation table grouped by subset size, with per-group signed sums."""
    lines: list[str] = []
    sums: list[tuple[int, Fraction]] = []
    current = None
    for row in rows:
        if row.size != current:
            current = row.size
            sums.append((row.sign, Fraction(0)))
        sums[-1] = (row.sign, sums[-1][1] + row.value)
        mark = "+" if row.sign > 0 else "-"
        lines.append(f"    [{mark}] size {row.size}: f({row.point}) = {row.value}")
    total = sum(sign * s for sign, s in sums)
    grouped = " ".join(f"{'+' if sign > 0 else '-'}{s}" for sign, s in sums)
    lines.append(f"    group sums: {grouped} = {total}")
    return lines


def render_human(reports: Sequence[Report], show_trace: bool = False) -> str:
    lines: list[str] = []
    for rep in reports:
        lines.append(f"scenario: {rep.scenario}")
        for note in rep.notes:
            lines.append(f"  note: {note}")
        width = max((len(c.label) for c in rep.claims), default=0)
        for c in rep.claims:
            status = "PASS" if c.passed else "FAIL"
            lines.append(
                f"  [{status}] {c.label:<{width}}  computed={render_value(c.computed)}"
                f"  expected={render_value(c.expected)}"
            )
            if not c.passed and c.ref:
                lines.append(f"         ({c.ref})")
        if show_trace and rep.trace:
            title = rep.trace_title or "evaluation table"
            lines.append(f"  trace: {title}")
            lines.extend(render_trace(rep.trace))
        n_pass = sum(c.passed for c in rep.claims)
        verdict = "PASS" if rep.passed else "FAIL"
        lines.append(f"  result: {verdict} ({n_pass}/{len(rep.claims)} claims)")
        lines.append("")
    total = sum(len(r.claims) for r in reports)
    ok = all(r.passed for r in reports)
    lines.append(
        f"overall: {'PASS' if ok else 'FAIL'} "
        f"({total} claims across {len(reports)} scenario{'s' if len(reports) != 1 else ''})"
    )
    return "\n".join(lines)


def render_tsv(reports: Sequence[Report]) -> str:
    lines = []
    for rep in reports:
        for c in rep.claims:
            lines.append(
                "\t".join(
                    (
                        rep.scenario,
                        c.label,
                        render_value(c.computed),
                        render_value(c.expected),
                        "true" if c.passed else "false",
                    )
                )
            )
    return "\n".join(lines)


def render_jsonl(reports: Sequence[Report]) -> str:
    lines = []
    for rep in reports:
        for c in rep.claims:
            lines.append(
                json.dumps(
                    {
                        "scenario": rep.scenario,
                        "label": c.label,
                        "computed": _json_value(c.computed),
                        "expected": _json_value(c.expected),
                        "pass": c.passed,
                    }
                )
            )
    return "\n".join(lines)


def render(reports: Sequence[Report], fmt: str, show_trace: bool = False) -> str:
    if fmt == "human":
        return render_human(reports, show_trace)
    if fmt == "tsv":
        return render_tsv(reports)
    if fmt == "jsonl":
        return render_jsonl(reports)
    raise ValueError(f"unknown format: {fmt}")


def all_passed(reports: Iterable[Report]) -> bool:
    return all(r.passed for r in reports)
