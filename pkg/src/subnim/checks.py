"""Extensional checks of reverse-mex, pass-independence and the explicit
formulas over finite ranges of computed tables."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Sequence

from .closed_form import grundy_closed, pass_loop_pattern, pass_prefix_pattern
from .game import GrundyTable, PassGrundyTable, SubtractionSet, TableLike, _row_of, mex

__all__ = [
    "CheckReport",
    "Violation",
    "check_pass_independence",
    "check_reverse_mex",
    "empirical_threshold",
    "verify_block_theorem",
    "verify_closed_form_theorem",
]


@dataclass(frozen=True)
class Violation:
    x: int
    expected: int
    actual: int


@dataclass
class CheckReport:
    property_name: str
    rule: SubtractionSet
    range: tuple[int, int]
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "property_name": self.property_name,
            "rule": list(self.rule.amounts),
            "range": list(self.range),
            "violations": [asdict(v) for v in self.violations],
            "passed": self.passed,
        }


def _rule_of(table: TableLike, rule: SubtractionSet | None) -> SubtractionSet:
    if rule is None:
        if isinstance(table, (GrundyTable, PassGrundyTable)):
            return table.rule
        raise TypeError("rule is required when passing a raw value list")
    if isinstance(table, (GrundyTable, PassGrundyTable)) and table.rule != rule:
        raise ValueError(f"table was built for {table.rule}, not {rule}")
    return rule


def check_reverse_mex(
    table: TableLike,
    rule: SubtractionSet | None = None,
    lo: int = 0,
    hi: int | None = None,
    name: str = "reverse-mex",
) -> CheckReport:
    """Record every ``x`` in ``[lo, hi]`` where ``G(x) != mex(G(x + s))``.

    A :class:`PassGrundyTable` is checked on its pass-available row.
    """
    rule = _rule_of(table, rule)
    row = _row_of(table)
    top = len(row) - 1 - rule.largest
    hi = top if hi is None else hi
    if lo < 0 or hi > top:
        raise ValueError(
            f"range [{lo}, {hi}] needs headroom {rule.largest}; the table stops at {len(row) - 1}"
        )
    report = CheckReport(name, rule, (lo, hi))
    for x in range(lo, hi + 1):
        forward = mex(row[x + s] for s in rule)
        if forward != row[x]:
            report.violations.append(Violation(x, forward, row[x]))
    return report


def check_pass_independence(
    table: PassGrundyTable, rule: SubtractionSet | None = None, lo: int | None = None, hi: int | None = None
) -> CheckReport:
    """Record every ``x`` where dropping the pass option changes ``G(x, 1)``."""
    rule = _rule_of(table, rule)
    lo = rule.largest if lo is None else lo
    hi = table.limit if hi is None else hi
    if lo < rule.largest or hi > table.limit:
        raise ValueError(f"range [{lo}, {hi}] must lie in [{rule.largest}, {table.limit}]")
    row1 = table.row1
    report = CheckReport("pass-independence", rule, (lo, hi))
    for x in range(lo, hi + 1):
        without_pass = mex(row1[x - s] for s in rule)
        if without_pass != row1[x]:
            report.violations.append(Violation(x, without_pass, row1[x]))
    return report


def empirical_threshold(report: CheckReport) -> int:
    """Least ``t`` such that the report is clean on ``[t, hi]``."""
    if not report.violations:
        return report.range[0]
    return report.violations[-1].x + 1


def verify_block_theorem(n: int, table: PassGrundyTable) -> CheckReport:
    """Compare ``G(x, 1)`` for x = 0..20n+8 with the prefix and loop patterns."""
    expected = pass_prefix_pattern(n).expand() + pass_loop_pattern(n).expand()
    rule = SubtractionSet.paper_family(n)
    if table.rule != rule:
        raise ValueError(f"table was built for {table.rule}, not {rule}")
    if table.limit < 20 * n + 8:
        raise ValueError(f"need limit >= {20 * n + 8}, got {table.limit}")
    report = CheckReport("blocks", rule, (0, 20 * n + 8))
    for x, want in enumerate(expected):
        if table.row1[x] != want:
            report.violations.append(Violation(x, want, table.row1[x]))
    return report


def verify_closed_form_theorem(n: int, table: GrundyTable | Sequence[int], periods: int = 10) -> CheckReport:
    """Compare the no-pass table with the four-case formula over ``periods`` periods."""
    rule = SubtractionSet.paper_family(n)
    if isinstance(table, GrundyTable) and table.rule != rule:
        raise ValueError(f"table was built for {table.rule}, not {rule}")
    values = _row_of(table)
    hi = periods * 8 * n
    if len(values) <= hi:
        raise ValueError(f"need limit >= {hi}, got {len(values) - 1}")
    report = CheckReport("closed-form", rule, (0, hi))
    for x in range(hi + 1):
        want = grundy_closed(n, x)
        if values[x] != want:
            report.violations.append(Violation(x, want, values[x]))
    return report
