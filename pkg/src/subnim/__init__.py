"""Sprague-Grundy analysis of subtraction games with an optional one-time pass."""

from .closed_form import grundy_closed, grundy_pass_closed, pass_loop_pattern, pass_prefix_pattern
from .game import (
    PASS,
    GrundyTable,
    Outcome,
    PassGrundyTable,
    SubtractionSet,
    grundy_table,
    mex,
    moves,
    outcome_by_grundy,
    outcome_by_search,
    pass_grundy_table,
    winning_moves,
)
from .periodicity import PeriodCertificate, certify_game, detect_pass_period, detect_period, value_at, window_mod

__version__ = "0.1.0"
