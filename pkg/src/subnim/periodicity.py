"""Certified eventual periodicity of Grundy sequences.

Every Grundy value of a subtraction game is a function of the previous
``max(rule)`` values. So if ``v[x + p] == v[x]`` on a run of ``max(rule)``
consecutive indices starting at ``q + 1``, the sequence is periodic from
``q + 1`` onwards. Certificates check a longer window, ``p + max(rule)``
entries, and are only ever issued from such a window.

The pass row also reads ``G(x, 0)``, so its certificate additionally needs
the pass-spent row to be periodic from ``q + 1`` with a period dividing ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .game import (
    GrundyTable,
    PassGrundyTable,
    SubtractionSet,
    grundy_table,
    pass_grundy_table,
)

__all__ = [
    "NoPeriodFound",
    "PeriodCertificate",
    "certify_game",
    "default_bounds",
    "detect_period",
    "detect_pass_period",
    "value_at",
    "window_mod",
]


class NoPeriodFound(ValueError):
    pass


@dataclass(frozen=True)
class PeriodCertificate:
    """``G(x + period) == G(x)`` for every ``x >= preperiod + 1``."""

    preperiod: int
    period: int
    verified_window: tuple[int, int]
    certified: bool = True

    @property
    def q(self) -> int:
        return self.preperiod

    @property
    def p(self) -> int:
        return self.period

    @property
    def loop_start(self) -> int:
        return self.preperiod + 1


def default_bounds(rule: SubtractionSet) -> tuple[int, int]:
    """``(max_preperiod, max_period)`` used when the caller gives none."""
    m = rule.largest
    return 4 * m * m, 2 * m * m


def _least_clean_q(v: np.ndarray, p: int, m: int, q_start: int, q_max: int) -> int | None:
    """Smallest ``q >= q_start`` whose window ``[q+1, q+p+m]`` has no mismatch."""
    hi = min(q_max + p + m, len(v) - 1 - p)
    if q_start + p + m > hi:
        return None
    lo = q_start + 1
    bad = np.flatnonzero(v[lo + p : hi + p + 1] != v[lo : hi + 1]) + lo
    q = q_start
    i = 0
    while True:
        # first mismatch at or after q+1
        while i < len(bad) and bad[i] <= q:
            i += 1
        if i == len(bad) or bad[i] > q + p + m:
            return q if q + p + m <= hi else None
        # jump past the last mismatch inside the current window
        j = np.searchsorted(bad, q + p + m, side="right") - 1
        q = int(bad[j])
        if q > q_max:
            return None


def _search(
    values: Sequence[int],
    m: int,
    max_preperiod: int,
    max_period: int,
    q_floor: int = 0,
    period_step: int = 1,
) -> PeriodCertificate:
    v = np.asarray(values, dtype=np.int64)
    best: tuple[int, int] | None = None
    for p in range(period_step, max_period + 1, period_step):
        q_max = max_preperiod if best is None else min(max_preperiod, best[0] - 1)
        if q_floor > q_max:
            break
        q = _least_clean_q(v, p, m, q_floor, q_max)
        if q is not None:
            best = (q, p)
            if q == q_floor:
                break
    if best is None:
        raise NoPeriodFound(
            f"no period found with preperiod <= {max_preperiod} and period <= {max_period}"
        )
    q, p = best
    return PeriodCertificate(q, p, (q + 1, q + p + m))


def _check_length(values: Sequence[int], m: int, max_preperiod: int, max_period: int) -> None:
    need = max_preperiod + 2 * max_period + m
    if len(values) < need:
        raise ValueError(
            f"need at least {need} values for these bounds, got {len(values)}"
        )


def detect_period(
    values: Sequence[int] | GrundyTable,
    rule: SubtractionSet | None = None,
    max_preperiod: int | None = None,
    max_period: int | None = None,
) -> PeriodCertificate:
    """Lexicographically least certified ``(preperiod, period)``.

    ``values`` must follow the plain subtraction recurrence for ``rule``;
    otherwise the certificate only states what the window shows.
    """
    if isinstance(values, GrundyTable):
        rule = rule or values.rule
        values = values.values
    if rule is None:
        raise TypeError("rule is required when passing a raw value list")
    dq, dp = default_bounds(rule)
    max_preperiod = dq if max_preperiod is None else max_preperiod
    max_period = dp if max_period is None else max_period
    _check_length(values, rule.largest, max_preperiod, max_period)
    return _search(values, rule.largest, max_preperiod, max_period)


def detect_pass_period(
    table: PassGrundyTable,
    max_preperiod: int | None = None,
    max_period: int | None = None,
    row0_cert: PeriodCertificate | None = None,
) -> PeriodCertificate:
    """Certificate for ``G(x, 1)``.

    Only pairs with ``q >= q0`` and ``p`` a multiple of ``p0`` are eligible,
    where ``(q0, p0)`` certifies the pass-spent row.
    """
    rule = table.rule
    dq, dp = default_bounds(rule)
    max_preperiod = dq if max_preperiod is None else max_preperiod
    max_period = dp if max_period is None else max_period
    if row0_cert is None:
        row0_cert = detect_period(table.row0, rule, max_preperiod, max_period)
    _check_length(table.row1, rule.largest, max_preperiod, max_period)
    return _search(
        table.row1,
        rule.largest,
        max_preperiod,
        max_period,
        q_floor=row0_cert.preperiod,
        period_step=row0_cert.period,
    )


def certify_game(
    rule: SubtractionSet,
    with_pass: bool = False,
    start_limit: int | None = None,
    max_preperiod: int | None = None,
    max_period: int | None = None,
) -> tuple[GrundyTable | PassGrundyTable, PeriodCertificate, PeriodCertificate | None]:
    """Build a table just large enough to certify the sequence.

    Bounds grow by doubling from ``start_limit`` up to the defaults. Returns
    ``(table, row0_cert, row1_cert)``; ``row1_cert`` is None without a pass.
    The minimal period divides every period, so the least pair found under
    small bounds is also the least pair under the full bounds.
    """
    dq, dp = default_bounds(rule)
    cap_q = dq if max_preperiod is None else max_preperiod
    cap_p = dp if max_period is None else max_period
    m = rule.largest
    budget_q = min(cap_q, max(4 * m, (start_limit or 0) // 4))
    budget_p = min(cap_p, max(4 * m, (start_limit or 0) // 4))
    while True:
        limit = budget_q + 2 * budget_p + m
        try:
            if with_pass:
                table = pass_grundy_table(rule, limit)
                c0 = detect_period(table.row0, rule, budget_q, budget_p)
                c1 = detect_pass_period(table, budget_q, budget_p, row0_cert=c0)
                return table, c0, c1
            table = grundy_table(rule, limit)
            return table, detect_period(table, rule, budget_q, budget_p), None
        except NoPeriodFound:
            if budget_q >= cap_q and budget_p >= cap_p:
                raise
            budget_q = min(cap_q, 2 * budget_q)
            budget_p = min(cap_p, 2 * budget_p)


def window_mod(value: int, cert: PeriodCertificate) -> int:
    """Leave ``value`` alone if it is above the preperiod, else lift it into
    ``[q + 1, q + p]`` by adding a multiple of the period."""
    if not cert.certified:
        raise ValueError("certificate is not certified")
    q, p = cert.preperiod, cert.period
    if value >= q + 1:
        return value
    k = -((value - (q + 1)) // p)  # ceil((q + 1 - value) / p)
    return value + k * p


def value_at(x: int, table: Sequence[int] | GrundyTable, cert: PeriodCertificate) -> int:
    """Grundy value at any ``x >= 0`` using the certified loop past the table."""
    if not cert.certified:
        raise ValueError("certificate is not certified")
    if x < 0:
        raise ValueError(f"pile size must be >= 0, got {x}")
    values = table.values if isinstance(table, GrundyTable) else table
    if x < len(values):
        return values[x]
    q, p = cert.preperiod, cert.period
    if q + p >= len(values):
        raise ValueError("table does not cover one full period past the preperiod")
    return values[q + 1 + (x - q - 1) % p]
