"""Explicit Grundy values for the subtraction set {2, 4n, 4n+2}, n >= 3.

Without a pass the sequence has period 8n from the start. With a pass it
runs through an irregular prefix of 12n+9 values and then loops with
period 8n. Both sequences are written as concatenations of short blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "BLOCKS",
    "BlockPattern",
    "Segment",
    "grundy_closed",
    "grundy_pass_closed",
    "pass_loop_pattern",
    "pass_prefix_pattern",
]

BLOCKS: dict[str, tuple[int, ...]] = {
    "A": (0, 1, 2, 0),
    "B": (1, 1, 0, 0),
    "C": (1, 3, 4, 2),
    "D": (0, 3, 2, 2),
    "E": (3, 3, 2, 2),
    "F": (3, 1, 0, 0, 1, 1, 3, 0),
    "G": (1, 3, 2, 2, 3, 3, 0, 2, 4),
    "P": (3, 2, 2, 3),
    "Q": (1, 0, 0, 1),
    "R": (1, 2, 0, 1),
    "S": (3, 0, 2, 3),
}


def _require_n(n: int) -> None:
    if n < 3:
        raise ValueError(f"closed forms hold for n >= 3 only, got n={n}")


@dataclass(frozen=True)
class Segment:
    name: str
    exponent: int
    exponent_expr: str

    @property
    def values(self) -> tuple[int, ...]:
        return BLOCKS[self.name]


@dataclass(frozen=True)
class BlockPattern:
    n: int
    start: int
    segments: tuple[Segment, ...]

    def expand(self) -> tuple[int, ...]:
        out: list[int] = []
        for seg in self.segments:
            out.extend(seg.values * seg.exponent)
        return tuple(out)

    def __len__(self) -> int:
        return sum(len(s.values) * s.exponent for s in self.segments)

    def __str__(self) -> str:
        parts = []
        for s in self.segments:
            parts.append(s.name if s.exponent_expr == "1" else f"{s.name}^({s.exponent_expr})")
        return "".join(parts)


def _pattern(n: int, start: int, spec: list[tuple[str, str]]) -> BlockPattern:
    exps = {"1": 1, "n-1": n - 1, "n-2": n - 2}
    return BlockPattern(n, start, tuple(Segment(name, exps[e], e) for name, e in spec))


def pass_prefix_pattern(n: int) -> BlockPattern:
    """``A B^(n-1) C D E^(n-2) F B^(n-2) G``: G(x, 1) for x = 0..12n+8."""
    _require_n(n)
    return _pattern(
        n,
        0,
        [("A", "1"), ("B", "n-1"), ("C", "1"), ("D", "1"),
         ("E", "n-2"), ("F", "1"), ("B", "n-2"), ("G", "1")],
    )


def pass_loop_pattern(n: int) -> BlockPattern:
    """``P^(n-2) Q R Q^(n-2) P S``: G(x, 1) for x = 12n+9..20n+8."""
    _require_n(n)
    return _pattern(
        n,
        12 * n + 9,
        [("P", "n-2"), ("Q", "1"), ("R", "1"), ("Q", "n-2"), ("P", "1"), ("S", "1")],
    )


@lru_cache(maxsize=64)
def _expansions(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return pass_prefix_pattern(n).expand(), pass_loop_pattern(n).expand()


def grundy_closed(n: int, x: int) -> int:
    """G(x) for {2, 4n, 4n+2} without a pass."""
    _require_n(n)
    if x < 0:
        raise ValueError(f"pile size must be >= 0, got {x}")
    r = x % (8 * n)
    if r < 4 * n:
        return 0 if r % 4 < 2 else 1
    return 2 if (r - 4 * n) % 4 < 2 else 3


def grundy_pass_closed(n: int, x: int) -> int:
    """G(x, 1) for {2, 4n, 4n+2} with the pass still available."""
    _require_n(n)
    if x < 0:
        raise ValueError(f"pile size must be >= 0, got {x}")
    prefix, loop = _expansions(n)
    if x < len(prefix):
        return prefix[x]
    return loop[(x - len(prefix)) % len(loop)]
