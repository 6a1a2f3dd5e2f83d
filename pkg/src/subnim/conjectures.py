"""Computable forms of the open conjectures on reverse-mex and the pass game.

Nothing here tries to prove anything: each routine evaluates one claim on
certified finite data and reports the outcome, including counterexample
candidates.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .checks import (
    CheckReport,
    check_pass_independence,
    check_reverse_mex,
    empirical_threshold,
)
from .game import CapacityError, GrundyTable, SubtractionSet, grundy_table, pass_grundy_table
from .periodicity import NoPeriodFound, PeriodCertificate, certify_game, value_at, window_mod

__all__ = [
    "CellResult",
    "ConditionAReport",
    "FamilySweepReport",
    "IffResult",
    "IffTally",
    "SumSetResult",
    "check_condition_a",
    "dist",
    "dist_table",
    "family_threshold",
    "sweep_family",
    "sweep_iff",
    "sweep_sum_sets",
    "test_reverse_mex_iff_condition_a",
]


def _is_p(y: int, values: Sequence[int], cert: PeriodCertificate) -> bool:
    return value_at(window_mod(y, cert), values, cert) == 0


def _values(table: GrundyTable | Sequence[int]) -> Sequence[int]:
    return table.values if isinstance(table, GrundyTable) else table


def dist(w: int, rule: SubtractionSet, table: GrundyTable | Sequence[int], cert: PeriodCertificate) -> int | None:
    """Least ``k >= 1`` such that ``w - k*s1`` reduced into the loop window is
    a P-position, or None when no ``k <= p*s1`` works."""
    values = _values(table)
    if w < cert.preperiod + 1:
        raise ValueError(f"w={w} lies in the preperiod (q={cert.preperiod})")
    if not _is_p(w, values, cert):
        raise ValueError(f"w={w} is not a P-position")
    s1 = rule.amounts[0]
    for k in range(1, cert.period * s1 + 1):
        if _is_p(w - k * s1, values, cert):
            return k
    return None


def dist_table(rule: SubtractionSet, table: GrundyTable | Sequence[int], cert: PeriodCertificate) -> dict[int, int | None]:
    """``dist`` for every P-position representative in ``[q+1, q+p]``."""
    values = _values(table)
    q, p = cert.preperiod, cert.period
    return {
        w: dist(w, rule, values, cert)
        for w in range(q + 1, q + p + 1)
        if value_at(w, values, cert) == 0
    }


@dataclass(frozen=True)
class ConditionAWitness:
    w: int
    dist: int
    upper: str  # status of w + s3 - s1, must be N
    lower: str  # status of w + s3 - 3*s1, must be P

    @property
    def ok(self) -> bool:
        return self.upper == "N" and self.lower == "P"


@dataclass
class ConditionAReport:
    rule: SubtractionSet
    cert: PeriodCertificate
    witnesses: list[ConditionAWitness] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(w.ok for w in self.witnesses)

    @property
    def failures(self) -> list[ConditionAWitness]:
        return [w for w in self.witnesses if not w.ok]


def check_condition_a(
    rule: SubtractionSet, table: GrundyTable | Sequence[int], cert: PeriodCertificate
) -> ConditionAReport:
    """Evaluate condition (a) on every P-position of one loop window.

    For each P-position ``w`` with ``dist(w) = 2m``, ``m >= 2``, the
    position ``w + s3 - s1`` must be N and ``w + s3 - 3*s1`` must be P,
    both reduced into the loop window.
    """
    if not cert.certified:
        raise ValueError("certificate is not certified")
    values = _values(table)
    s1, s3 = rule.amounts[0], rule.amounts[-1]
    report = ConditionAReport(rule, cert)
    for w, d in dist_table(rule, values, cert).items():
        if d is None or d % 2 or d < 4:
            continue
        upper = "P" if _is_p(w + s3 - s1, values, cert) else "N"
        lower = "P" if _is_p(w + s3 - 3 * s1, values, cert) else "N"
        report.witnesses.append(ConditionAWitness(w, d, upper, lower))
    return report


@dataclass
class IffResult:
    rule: SubtractionSet
    cert: PeriodCertificate
    reverse_mex: bool
    reverse_mex_loop: bool
    condition_a: bool
    reverse_mex_report: CheckReport = field(repr=False)
    condition_a_report: ConditionAReport = field(repr=False)

    @property
    def agree(self) -> bool:
        """Agreement with reverse-mex read on the loop region ``x >= q+1``."""
        return self.reverse_mex_loop == self.condition_a

    @property
    def agree_strict(self) -> bool:
        """Agreement with reverse-mex required for every ``x >= 1``."""
        return self.reverse_mex == self.condition_a


def _certified_table(rule: SubtractionSet, periods: int) -> tuple[GrundyTable, PeriodCertificate]:
    table, cert, _ = certify_game(rule)
    need = cert.preperiod + periods * cert.period + rule.largest
    if table.limit < need:
        table = grundy_table(rule, need)
    return table, cert


def test_reverse_mex_iff_condition_a(
    rule: SubtractionSet, table: GrundyTable | None = None, cert: PeriodCertificate | None = None
) -> IffResult:
    """Evaluate both sides of "reverse-mex iff condition (a)" for one set.

    Reverse-mex is checked for ``x`` in ``[1, q + 3p]``; past the preperiod
    every forward look-up lands in the loop, so that range decides it for
    all ``x >= 1``. The loop-only reading (``x >= q + 1``) is kept
    separately since many sets break reverse-mex only inside the preperiod.
    """
    if len(rule) != 3:
        raise ValueError(f"expected a three-element set, got {rule}")
    if table is None or cert is None:
        table, cert = _certified_table(rule, 3)
    hi = cert.preperiod + 3 * cert.period
    rm = check_reverse_mex(table, rule, 1, hi)
    ca = check_condition_a(rule, table, cert)
    in_loop = not any(v.x > cert.preperiod for v in rm.violations)
    return IffResult(rule, cert, rm.passed, in_loop, ca.holds, rm, ca)


# not a pytest test despite the name
test_reverse_mex_iff_condition_a.__test__ = False  # type: ignore[attr-defined]


def _triples(max_s3: int) -> Iterable[SubtractionSet]:
    for s1, s2, s3 in itertools.combinations(range(1, max_s3 + 1), 3):
        yield SubtractionSet((s1, s2, s3))


@dataclass
class IffTally:
    max_s3: int
    results: list[IffResult]

    def counts(self, strict: bool = False) -> Counter:
        return Counter(
            (r.reverse_mex if strict else r.reverse_mex_loop, r.condition_a) for r in self.results
        )

    @property
    def disagreements(self) -> list[IffResult]:
        return [r for r in self.results if not r.agree]

    def summary(self) -> dict:
        out: dict = {"max_s3": self.max_s3, "sets": len(self.results)}
        for label, strict in (("loop", False), ("strict", True)):
            c = self.counts(strict)
            out[label] = {
                "agree": c[(True, True)] + c[(False, False)],
                "disagree": c[(True, False)] + c[(False, True)],
                "both_true": c[(True, True)],
                "both_false": c[(False, False)],
                "reverse_mex_only": c[(True, False)],
                "condition_a_only": c[(False, True)],
            }
        out["disagreeing_sets"] = [list(r.rule.amounts) for r in self.disagreements]
        return out


def sweep_iff(max_s3: int = 30) -> IffTally:
    """Run the iff test over every ``s1 < s2 < s3 <= max_s3``."""
    return IffTally(max_s3, [test_reverse_mex_iff_condition_a(r) for r in _triples(max_s3)])


@dataclass
class SumSetResult:
    rule: SubtractionSet
    holds: bool
    witnesses: int
    failures: list[ConditionAWitness]


def sweep_sum_sets(max_s3: int = 30) -> list[SumSetResult]:
    """Condition (a) for every set with ``s3 = s1 + s2 <= max_s3``."""
    out = []
    for rule in _triples(max_s3):
        s1, s2, s3 = rule.amounts
        if s3 != s1 + s2:
            continue
        table, cert = _certified_table(rule, 1)
        report = check_condition_a(rule, table, cert)
        out.append(SumSetResult(rule, report.holds, len(report.witnesses), report.failures))
    return out


def family_threshold(family: str, a: int, n: int) -> int:
    """Pile size from which the pass conjectures are claimed to hold."""
    family = family.upper()
    if family == "A":
        return 6 * a * n + 4 * a + 1
    if family == "B":
        return a * (2 * n + 3) + 1
    if family == "C":
        return a * (2 * n + 5) + 1
    raise ValueError(f"unknown family {family!r} (expected A, B or C)")


CHECK_NAMES = ("conj1", "conj2", "conj3", "threshold_ok", "loop")


@dataclass
class CellResult:
    family: str
    a: int
    n: int
    rule: SubtractionSet
    threshold: int
    proven: bool
    checks: dict[str, bool | None] = field(default_factory=dict)
    conj1_from_threshold: bool | None = None
    measured_threshold: int | None = None
    max_row1: int | None = None
    row0_cert: PeriodCertificate | None = None
    row1_cert: PeriodCertificate | None = None
    limit: int | None = None
    skip_reason: str | None = None

    @property
    def passed(self) -> bool:
        return self.skip_reason is None and all(v is not False for v in self.checks.values())

    @property
    def status(self) -> str:
        if self.skip_reason is not None:
            return "skip"
        if self.passed:
            return "pass"
        return "fail" if self.proven else "counterexample-candidate"

    def row(self) -> dict:
        def fmt(v):
            return "" if v is None else v

        c0, c1 = self.row0_cert, self.row1_cert
        return {
            "family": self.family,
            "a": self.a,
            "n": self.n,
            "set": " ".join(map(str, self.rule.amounts)),
            "threshold": self.threshold,
            "proven": self.proven,
            **{k: fmt(self.checks.get(k)) for k in CHECK_NAMES},
            "row1_below_4": fmt(self.checks.get("row1_below_4")),
            "conj1_from_threshold": fmt(self.conj1_from_threshold),
            "measured_threshold": fmt(self.measured_threshold),
            "max_row1": fmt(self.max_row1),
            "row0_period": fmt(c0 and c0.period),
            "row0_preperiod": fmt(c0 and c0.preperiod),
            "row1_period": fmt(c1 and c1.period),
            "row1_loop_start": fmt(c1 and c1.loop_start),
            "limit": fmt(self.limit),
            "status": self.status,
            "skip_reason": fmt(self.skip_reason),
        }


@dataclass
class FamilySweepReport:
    family: str
    cells: list[CellResult]

    @property
    def grid(self) -> list[tuple[int, int]]:
        return [(c.a, c.n) for c in self.cells]

    @property
    def proven_ok(self) -> bool:
        return all(c.passed for c in self.cells if c.proven)

    @property
    def candidates(self) -> list[CellResult]:
        return [c for c in self.cells if c.status == "counterexample-candidate"]


def sweep_cell(family: str, a: int, n: int, periods: int = 3) -> CellResult:
    family = family.upper()
    rule = SubtractionSet.family(family, a, n)
    threshold = family_threshold(family, a, n)
    cell = CellResult(family, a, n, rule, threshold, proven=(family == "A" and a == 2 and n >= 3))
    m = rule.largest
    try:
        _, c0, c1 = certify_game(rule, with_pass=True)
        limit = max(threshold, c1.loop_start, c0.loop_start) + periods * c1.period + m
        table = pass_grundy_table(rule, limit)
    except (NoPeriodFound, CapacityError) as exc:
        cell.skip_reason = str(exc)
        return cell
    cell.row0_cert, cell.row1_cert, cell.limit = c0, c1, limit

    conj1 = check_reverse_mex(table.row0, rule, 1, limit - m, "conjecture1")
    cell.conj1_from_threshold = not any(v.x >= threshold for v in conj1.violations)
    conj2 = check_pass_independence(table, rule, m, limit)
    conj3 = check_reverse_mex(table, rule, 0, limit - m, "conjecture3")
    measured = max(empirical_threshold(conj2), empirical_threshold(conj3))

    cell.measured_threshold = measured
    cell.max_row1 = max(table.row1)
    cell.checks = {
        "conj1": conj1.passed,
        "conj2": not any(v.x >= threshold for v in conj2.violations),
        "conj3": not any(v.x >= threshold for v in conj3.violations),
        "threshold_ok": measured <= threshold,
        "loop": c1.loop_start <= threshold,
    }
    if family in ("B", "C"):
        cell.checks["row1_below_4"] = cell.max_row1 < 4
    return cell


def sweep_family(
    family: str,
    a_range: Iterable[int] = range(1, 5),
    n_range: Iterable[int] = range(1, 7),
    periods: int = 3,
) -> FamilySweepReport:
    """Evaluate the pass conjectures for every ``(a, n)`` cell of one family."""
    family = family.upper()
    family_threshold(family, 1, 1)
    a_values, n_values = sorted(set(a_range)), sorted(set(n_range))
    if not a_values or not n_values:
        raise ValueError("a and n ranges must be nonempty")
    if a_values[0] < 1 or n_values[0] < 1:
        raise ValueError("a and n must be >= 1")
    cells = [sweep_cell(family, a, n, periods) for a in a_values for n in n_values]
    return FamilySweepReport(family, cells)
