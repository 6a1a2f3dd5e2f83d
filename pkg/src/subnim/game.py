"""Subtraction games, mex, and the Grundy dynamic programs.

A position of the plain game is a pile size ``x``. With a one-time pass the
position is ``(x, pass_available)``; the pass moves ``(x, 1)`` to ``(x, 0)``
and is legal whenever ``x >= 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

__all__ = [
    "CapacityError",
    "Outcome",
    "PASS",
    "PassGrundyTable",
    "GrundyTable",
    "SubtractionSet",
    "grundy_table",
    "mex",
    "moves",
    "outcome_by_grundy",
    "outcome_by_search",
    "pass_grundy_table",
    "search_outcomes",
    "winning_moves",
]

PASS = "pass"

#: Largest table (number of positions) the DPs will allocate.
MAX_TABLE_LIMIT = 20_000_000


class CapacityError(MemoryError):
    """Raised when a table would exceed ``MAX_TABLE_LIMIT`` entries."""


class Outcome(enum.Enum):
    P = "P"
    N = "N"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SubtractionSet:
    """Allowed removal amounts, strictly increasing and positive."""

    amounts: tuple[int, ...]

    def __init__(self, amounts: Iterable[int]):
        amounts = tuple(int(a) for a in amounts)
        if not amounts:
            raise ValueError("subtraction set must be nonempty")
        if any(a < 1 for a in amounts):
            raise ValueError(f"removal amounts must be >= 1, got {amounts}")
        if any(b <= a for a, b in zip(amounts, amounts[1:])):
            raise ValueError(f"removal amounts must be strictly increasing, got {amounts}")
        object.__setattr__(self, "amounts", amounts)

    @classmethod
    def parse(cls, text: str) -> "SubtractionSet":
        """Parse ``"2,12,14"``."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        try:
            return cls(int(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"invalid subtraction set {text!r}: {exc}") from None

    @classmethod
    def paper_family(cls, n: int) -> "SubtractionSet":
        """The set ``{2, 4n, 4n+2}``; the explicit formulas need ``n >= 3``."""
        if n < 3:
            raise ValueError(f"{{2, 4n, 4n+2}} is only analysed for n >= 3, got n={n}")
        return cls((2, 4 * n, 4 * n + 2))

    @classmethod
    def family(cls, name: str, a: int, n: int) -> "SubtractionSet":
        """Conjecture families ``A``: {a,2an,2an+a}, ``B``: {a,(2n+1)a,(2n+3)a},
        ``C``: {a,(2n+1)a,(2n+5)a}."""
        if a < 1 or n < 1:
            raise ValueError(f"family parameters must satisfy a >= 1 and n >= 1, got a={a}, n={n}")
        name = name.upper()
        if name == "A":
            return cls((a, 2 * a * n, 2 * a * n + a))
        if name == "B":
            return cls((a, (2 * n + 1) * a, (2 * n + 3) * a))
        if name == "C":
            return cls((a, (2 * n + 1) * a, (2 * n + 5) * a))
        raise ValueError(f"unknown family {name!r} (expected A, B or C)")

    @property
    def largest(self) -> int:
        return self.amounts[-1]

    def __len__(self) -> int:
        return len(self.amounts)

    def __iter__(self):
        return iter(self.amounts)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.amounts)) + "}"


def mex(values: Iterable[int]) -> int:
    """Least nonnegative integer not in ``values``."""
    seen = set(values)
    k = 0
    while k in seen:
        k += 1
    return k


def moves(x: int, rule: SubtractionSet) -> list[int]:
    """Pile sizes reachable from ``x`` by one removal, ascending."""
    if x < 0:
        raise ValueError(f"pile size must be >= 0, got {x}")
    return sorted(x - s for s in rule if x - s >= 0)


@dataclass(frozen=True)
class GrundyTable:
    rule: SubtractionSet
    limit: int
    values: tuple[int, ...] = field(repr=False)

    def __getitem__(self, x: int) -> int:
        return self.values[x]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class PassGrundyTable:
    """Rows ``row0[x] = G(x, 0)`` (pass spent) and ``row1[x] = G(x, 1)``."""

    rule: SubtractionSet
    limit: int
    row0: tuple[int, ...] = field(repr=False)
    row1: tuple[int, ...] = field(repr=False)

    def row(self, pass_available: bool) -> tuple[int, ...]:
        return self.row1 if pass_available else self.row0

    def __len__(self) -> int:
        return len(self.row0)


def _check_limit(limit: int) -> None:
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    if limit + 1 > MAX_TABLE_LIMIT:
        raise CapacityError(f"limit {limit} exceeds the table budget of {MAX_TABLE_LIMIT} entries")


def _mex_lookup(width: int) -> list[int] | None:
    # mex of a bitmask over `width` bits; only tabulated when it stays small
    if width > 16:
        return None
    table = []
    for mask in range(1 << width):
        table.append((~mask & (mask + 1)).bit_length() - 1)
    return table


def _fill(rule: SubtractionSet, limit: int, extra: Sequence[int] | None) -> list[int]:
    """Run the subtraction recurrence; ``extra[x]`` (x >= 1) joins the option set."""
    amounts = rule.amounts
    width = len(amounts) + 2
    lookup = _mex_lookup(width)
    out = [0] * (limit + 1)
    for x in range(limit + 1):
        mask = 0
        for s in amounts:
            if s > x:
                break
            mask |= 1 << out[x - s]
        if extra is not None and x >= 1:
            mask |= 1 << extra[x]
        if lookup is not None:
            out[x] = lookup[mask]
        else:
            out[x] = (~mask & (mask + 1)).bit_length() - 1
    return out


def grundy_table(rule: SubtractionSet, limit: int) -> GrundyTable:
    """Grundy values of ``rule`` for piles ``0..limit``."""
    _check_limit(limit)
    return GrundyTable(rule, limit, tuple(_fill(rule, limit, None)))


def pass_grundy_table(rule: SubtractionSet, limit: int) -> PassGrundyTable:
    """Both rows of the game with a one-time pass for piles ``0..limit``."""
    _check_limit(limit)
    row0 = _fill(rule, limit, None)
    row1 = _fill(rule, limit, row0)
    return PassGrundyTable(rule, limit, tuple(row0), tuple(row1))


TableLike = Union[GrundyTable, PassGrundyTable, Sequence[int]]


def _row_of(table: TableLike, pass_available: bool = True) -> Sequence[int]:
    if isinstance(table, GrundyTable):
        return table.values
    if isinstance(table, PassGrundyTable):
        return table.row(pass_available)
    return table


def outcome_by_grundy(x: int, table: TableLike, pass_available: bool = True) -> Outcome:
    """P iff the Grundy value at ``x`` is zero.

    ``pass_available`` selects the row of a :class:`PassGrundyTable` and is
    ignored for plain tables and raw sequences.
    """
    row = _row_of(table, pass_available)
    if not 0 <= x < len(row):
        raise IndexError(f"pile size {x} outside table range 0..{len(row) - 1}")
    return Outcome.P if row[x] == 0 else Outcome.N


def search_outcomes(rule: SubtractionSet, limit: int, pass_available: bool = False) -> list[Outcome]:
    """Win/loss classification of piles ``0..limit`` by backward induction.

    Uses only the move relation: a position is N iff some move reaches a
    P position. No Grundy values are involved.
    """
    _check_limit(limit)
    # win[x] for the pass-spent game, then for the pass-available game
    win0 = [False] * (limit + 1)
    for y in range(limit + 1):
        win0[y] = any(not win0[y - s] for s in rule if y - s >= 0)
    win = win0
    if pass_available:
        win = [False] * (limit + 1)
        for y in range(limit + 1):
            win[y] = any(not win[y - s] for s in rule if y - s >= 0) or (y >= 1 and not win0[y])
    return [Outcome.N if w else Outcome.P for w in win]


def outcome_by_search(x: int, rule: SubtractionSet, pass_available: bool = False) -> Outcome:
    if x < 0:
        raise ValueError(f"pile size must be >= 0, got {x}")
    return search_outcomes(rule, x, pass_available)[x]


def winning_moves(
    x: int,
    table: GrundyTable | PassGrundyTable,
    rule: SubtractionSet | None = None,
    pass_available: bool = False,
) -> list[int | str]:
    """Moves from ``x`` that reach a Grundy-0 position.

    Removal amounts come first in ascending order; the ``"pass"`` token is
    last. For a :class:`GrundyTable` the pass flag is ignored.
    """
    rule = rule if rule is not None else table.rule
    if table.rule != rule:
        raise ValueError(f"table was built for {table.rule}, not {rule}")
    if not 0 <= x <= table.limit:
        raise IndexError(f"pile size {x} outside table range 0..{table.limit}")
    if isinstance(table, GrundyTable):
        row, spent = table.values, None
    else:
        row = table.row(pass_available)
        spent = table.row0 if pass_available else None
    found: list[int | str] = [s for s in rule if x - s >= 0 and row[x - s] == 0]
    if spent is not None and x >= 1 and spent[x] == 0:
        found.append(PASS)
    return found
